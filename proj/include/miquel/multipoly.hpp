#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "miquel/rational.hpp"

namespace miquel {

/// The fixed symbol universe. A, B, C stand for the squared side lengths
/// a², b², c²; L, M, N for the Cevian point (l, m, n); X, Y, Z for the
/// areal coordinates of equation objects.
enum class Var : std::uint8_t { A, B, C, L, M, N, X, Y, Z };

inline constexpr std::size_t kVarCount = 9;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::A, Var::B, Var::C, Var::L, Var::M,
                                                       Var::N, Var::X, Var::Y, Var::Z};

char var_name(Var v);

/// Exponent vector packed into one word, 7 bits per variable with A in the
/// most significant field. Integer order on the packed key is lexicographic
/// order over (A, B, C, L, M, N, X, Y, Z), and multiplying monomials is key
/// addition as long as no field exceeds kMaxExponent.
class Monomial {
 public:
  static constexpr unsigned kBits = 7;
  static constexpr unsigned kMaxExponent = (1u << kBits) - 1;

  constexpr Monomial() = default;
  static Monomial of(Var v, unsigned exponent = 1);
  static constexpr Monomial from_key(std::uint64_t key) { return Monomial(key); }

  constexpr std::uint64_t key() const { return key_; }
  unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> shift(v)) & kMaxExponent);
  }
  unsigned total_degree() const;
  bool is_one() const { return key_ == 0; }

  /// Throws Error(ExponentOverflow) if any exponent would exceed kMaxExponent.
  Monomial operator*(Monomial o) const;
  /// Componentwise minimum.
  Monomial gcd(Monomial o) const;
  /// Precondition: o divides *this.
  Monomial operator/(Monomial o) const { return Monomial(key_ - o.key_); }
  bool divisible_by(Monomial o) const;

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
  friend constexpr auto operator<=>(Monomial a, Monomial b) { return a.key_ <=> b.key_; }

  static constexpr unsigned shift(Var v) {
    return kBits * static_cast<unsigned>(kVarCount - 1 - static_cast<unsigned>(v));
  }

 private:
  constexpr explicit Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

/// Sparse polynomial over Rational in the nine fixed variables. Terms are
/// kept sorted by descending monomial with no zero coefficients, so equal
/// polynomials are structurally equal.
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  MultiPoly() = default;
  MultiPoly(int c);  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Var v, unsigned exponent = 1);
  static MultiPoly term(const Rational& coeff, Monomial mono);
  /// Parses +, -, *, ^ (non-negative integer exponents), parentheses,
  /// rational literals "p" and "p/q", and the single-letter variables.
  static MultiPoly parse(std::string_view text);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  unsigned total_degree() const;
  unsigned degree(Var v) const;
  /// Coefficient of the largest monomial; zero for the zero polynomial.
  Rational leading_coefficient() const;
  Rational coefficient(Monomial mono) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(MultiPoly a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned e) const;

  /// Exact substitution of rationals for variables. Throws
  /// Error(UnboundVariable) if an occurring variable has no binding.
  Rational eval(const std::map<Var, Rational>& bindings) const;
  /// Replaces the mapped variables by polynomials; others stay symbolic.
  MultiPoly substitute(const std::map<Var, MultiPoly>& images) const;
  /// Simultaneous X→Y→Z→X, A→B→C→A, L→M→N→L.
  MultiPoly cyclic_shift() const;

  /// Positive rational g with every coefficient / g an integer and the
  /// integers jointly coprime. Zero for the zero polynomial.
  Rational content() const;
  /// Componentwise minimum exponent over all terms.
  Monomial monomial_content() const;
  /// Divides every term by coeff * mono; mono must divide every monomial.
  MultiPoly divide_term(const Rational& coeff, Monomial mono) const;

  /// Canonical text: terms in descending monomial order, e.g.
  /// "3/2*A^2*X - Y^2 + 7". The zero polynomial prints as "0".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

 private:
  explicit MultiPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract);

  std::vector<Term> terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Thread-local ceiling on the number of terms any polynomial produced by
/// addition or multiplication may hold while the scope is alive. Scopes
/// nest; the innermost limit applies. Also records the peak term count.
class TermBudget {
 public:
  explicit TermBudget(std::size_t limit);
  ~TermBudget();
  TermBudget(const TermBudget&) = delete;
  TermBudget& operator=(const TermBudget&) = delete;

  std::size_t limit() const { return limit_; }
  std::size_t peak() const { return peak_; }

  /// Throws Error(BudgetExceeded) if terms exceeds the active limit.
  static void observe(std::size_t terms);

 private:
  std::size_t limit_;
  std::size_t peak_ = 0;
  TermBudget* previous_;
};

}  // namespace miquel
