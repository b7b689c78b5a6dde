#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace miquel {

/// Arbitrary-precision fraction kept in lowest terms with a positive
/// denominator. Every operation is exact.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpz_class& v) : value_(v) {}
  explicit Rational(mpq_class v);

  Rational(const Rational&) = default;
  Rational& operator=(const Rational&) = default;
  // gmpxx moves leave the source initialized; mpq_init does not allocate.
  Rational(Rational&& o) noexcept : value_(std::move(o.value_)) {}
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
  }

  /// Accepts "p", "-p" or "p/q" with decimal integers; rejects q = 0.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  /// In-place access for the polynomial kernel; callers keep the value canonical.
  mpq_class& raw() { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

Rational abs(const Rational& r);

}  // namespace miquel
