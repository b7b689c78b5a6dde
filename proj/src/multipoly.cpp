#include "miquel/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <unordered_map>

#include "miquel/errors.hpp"

namespace miquel {

namespace {

constexpr std::uint64_t field_mask(Var v) {
  return static_cast<std::uint64_t>(Monomial::kMaxExponent) << Monomial::shift(v);
}

bool is_unit_den(mpq_srcptr q) { return mpz_cmp_ui(mpq_denref(q), 1) == 0; }

// mpq_mul / mpq_add spend time on gcds even for integers; fraction-free
// pipelines are integral almost everywhere.
void mul_into(mpq_ptr r, mpq_srcptr a, mpq_srcptr b) {
  if (is_unit_den(a) && is_unit_den(b)) {
    mpz_mul(mpq_numref(r), mpq_numref(a), mpq_numref(b));
    mpz_set_ui(mpq_denref(r), 1);
  } else {
    mpq_mul(r, a, b);
  }
}

void add_into(mpq_ptr r, mpq_srcptr a) {
  if (is_unit_den(r) && is_unit_den(a)) {
    mpz_add(mpq_numref(r), mpq_numref(r), mpq_numref(a));
  } else {
    mpq_add(r, r, a);
  }
}

thread_local TermBudget* active_budget = nullptr;

struct Exponents {
  std::array<unsigned, kVarCount> e{};
};

Exponents unpack(Monomial m) {
  Exponents out;
  for (Var v : kAllVars) out.e[static_cast<std::size_t>(v)] = m.exponent(v);
  return out;
}

Monomial pack(const Exponents& ex) {
  Monomial m;
  for (Var v : kAllVars) {
    const unsigned e = ex.e[static_cast<std::size_t>(v)];
    if (e != 0) m = m * Monomial::of(v, e);
  }
  return m;
}

void sort_descending(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MultiPoly::Term& a, const MultiPoly::Term& b) { return a.mono > b.mono; });
}

}  // namespace

char var_name(Var v) { return "ABCLMNXYZ"[static_cast<std::size_t>(v)]; }

// --- Monomial --------------------------------------------------------------

Monomial Monomial::of(Var v, unsigned exponent) {
  if (exponent > kMaxExponent) {
    throw Error(ErrorKind::ExponentOverflow, std::string("exponent of ") + var_name(v) + " exceeds 127");
  }
  return Monomial(static_cast<std::uint64_t>(exponent) << shift(v));
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (Var v : kAllVars) d += exponent(v);
  return d;
}

Monomial Monomial::operator*(Monomial o) const {
  for (Var v : kAllVars) {
    if (exponent(v) + o.exponent(v) > kMaxExponent) {
      throw Error(ErrorKind::ExponentOverflow, std::string("exponent of ") + var_name(v) + " exceeds 127");
    }
  }
  return Monomial(key_ + o.key_);
}

Monomial Monomial::gcd(Monomial o) const {
  std::uint64_t k = 0;
  for (Var v : kAllVars) {
    k |= std::min(key_ & field_mask(v), o.key_ & field_mask(v));
  }
  return Monomial(k);
}

bool Monomial::divisible_by(Monomial o) const {
  for (Var v : kAllVars) {
    if ((key_ & field_mask(v)) < (o.key_ & field_mask(v))) return false;
  }
  return true;
}

// --- TermBudget --------------------------------------------------------------

TermBudget::TermBudget(std::size_t limit) : limit_(limit), previous_(active_budget) {
  active_budget = this;
}

TermBudget::~TermBudget() { active_budget = previous_; }

void TermBudget::observe(std::size_t terms) {
  TermBudget* b = active_budget;
  if (b == nullptr) return;
  b->peak_ = std::max(b->peak_, terms);
  if (terms > b->limit_) {
    throw Error(ErrorKind::BudgetExceeded,
                "intermediate polynomial reached " + std::to_string(terms) + " terms (limit " +
                    std::to_string(b->limit_) + ")");
  }
}

// --- MultiPoly ---------------------------------------------------------------

MultiPoly::MultiPoly(int c) {
  if (c != 0) terms_.push_back({Monomial(), Rational(c)});
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::var(Var v, unsigned exponent) { return term(Rational(1), Monomial::of(v, exponent)); }

MultiPoly MultiPoly::term(const Rational& coeff, Monomial mono) {
  if (coeff.is_zero()) return {};
  return MultiPoly(std::vector<Term>{{mono, coeff}});
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

Rational MultiPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

Rational MultiPoly::coefficient(Monomial mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, Monomial m) { return t.mono > m; });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return Rational(0);
}

MultiPoly MultiPoly::merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->mono > j->mono)) {
      out.push_back(*i++);
    } else if (i == a.terms_.end() || j->mono > i->mono) {
      out.push_back(subtract ? Term{j->mono, -j->coeff} : *j);
      ++j;
    } else {
      Rational c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
      if (!c.is_zero()) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  TermBudget::observe(out.size());
  return MultiPoly(std::move(out));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  return *this = merge(*this, o, false);
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  return *this = merge(*this, o, true);
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& t : a.terms_) {
    mpq_neg(t.coeff.raw().get_mpq_t(), t.coeff.raw().get_mpq_t());
  }
  return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                    [](const MultiPoly::Term& s, const MultiPoly::Term& t) {
                      return s.mono == t.mono && s.coeff == t.coeff;
                    });
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  for (Var v : kAllVars) {
    if (a.degree(v) + b.degree(v) > Monomial::kMaxExponent) {
      throw Error(ErrorKind::ExponentOverflow, std::string("exponent of ") + var_name(v) + " exceeds 127");
    }
  }
  const MultiPoly& small = a.size() <= b.size() ? a : b;
  const MultiPoly& big = a.size() <= b.size() ? b : a;

  // A single term shifts every key by the same amount, which preserves order.
  if (small.size() == 1) {
    const auto& s = small.terms_.front();
    std::vector<MultiPoly::Term> out;
    out.reserve(big.size());
    for (const auto& t : big.terms_) {
      MultiPoly::Term r{Monomial::from_key(s.mono.key() + t.mono.key()), Rational()};
      mul_into(r.coeff.raw().get_mpq_t(), s.coeff.raw().get_mpq_t(), t.coeff.raw().get_mpq_t());
      out.push_back(std::move(r));
    }
    TermBudget::observe(out.size());
    return MultiPoly(std::move(out));
  }

  std::unordered_map<std::uint64_t, std::size_t> slot;
  slot.reserve(std::min<std::size_t>(small.size() * big.size(), std::size_t{1} << 22));
  std::vector<MultiPoly::Term> acc;
  mpq_class prod;
  for (const auto& s : small.terms_) {
    for (const auto& t : big.terms_) {
      mul_into(prod.get_mpq_t(), s.coeff.raw().get_mpq_t(), t.coeff.raw().get_mpq_t());
      const std::uint64_t key = s.mono.key() + t.mono.key();
      auto [it, inserted] = slot.try_emplace(key, acc.size());
      if (inserted) {
        acc.push_back({Monomial::from_key(key), Rational(prod)});
      } else {
        add_into(acc[it->second].coeff.raw().get_mpq_t(), prod.get_mpq_t());
      }
    }
    TermBudget::observe(acc.size());
  }
  std::erase_if(acc, [](const MultiPoly::Term& t) { return t.coeff.is_zero(); });
  sort_descending(acc);
  return MultiPoly(std::move(acc));
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

Rational MultiPoly::eval(const std::map<Var, Rational>& bindings) const {
  std::array<std::vector<Rational>, kVarCount> powers;
  auto power = [&](Var v, unsigned e) -> const Rational& {
    auto& cache = powers[static_cast<std::size_t>(v)];
    if (cache.empty()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        throw Error(ErrorKind::UnboundVariable, std::string("no binding for ") + var_name(v));
      }
      cache.push_back(Rational(1));
      cache.push_back(it->second);
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  Rational sum;
  for (const auto& t : terms_) {
    Rational value = t.coeff;
    for (Var v : kAllVars) {
      const unsigned e = t.mono.exponent(v);
      if (e != 0) value *= power(v, e);
    }
    sum += value;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& images) const {
  std::array<std::vector<MultiPoly>, kVarCount> powers;
  auto power = [&](Var v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[static_cast<std::size_t>(v)];
    if (cache.empty()) {
      cache.push_back(MultiPoly(1));
      cache.push_back(images.at(v));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  MultiPoly sum;
  for (const auto& t : terms_) {
    Monomial kept;
    for (Var v : kAllVars) {
      const unsigned e = t.mono.exponent(v);
      if (e != 0 && !images.contains(v)) kept = kept * Monomial::of(v, e);
    }
    MultiPoly value = MultiPoly::term(t.coeff, kept);
    for (Var v : kAllVars) {
      const unsigned e = t.mono.exponent(v);
      if (e != 0 && images.contains(v)) value = value * power(v, e);
    }
    sum += value;
  }
  return sum;
}

MultiPoly MultiPoly::cyclic_shift() const {
  // Source variable index -> destination index.
  static constexpr std::array<Var, kVarCount> image = {Var::B, Var::C, Var::A, Var::M, Var::N,
                                                      Var::L, Var::Y, Var::Z, Var::X};
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const Exponents src = unpack(t.mono);
    Exponents dst;
    for (Var v : kAllVars) {
      dst.e[static_cast<std::size_t>(image[static_cast<std::size_t>(v)])] = src.e[static_cast<std::size_t>(v)];
    }
    out.push_back({pack(dst), t.coeff});
  }
  sort_descending(out);
  return MultiPoly(std::move(out));
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.raw().get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.raw().get_den_mpz_t());
  }
  return Rational(mpq_class(num_gcd, den_lcm));
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = g.gcd(t.mono);
  return g;
}

MultiPoly MultiPoly::divide_term(const Rational& coeff, Monomial mono) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono / mono, t.coeff / coeff});
  // Dividing every key by the same monomial preserves order.
  return MultiPoly(std::move(out));
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(t.coeff);
    std::string mono;
    for (Var v : kAllVars) {
      const unsigned e = t.mono.exponent(v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

// --- parser ------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse_all() {
    MultiPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly expression() {
    MultiPoly sum = product();
    while (true) {
      if (accept('+')) {
        sum += product();
      } else if (accept('-')) {
        sum -= product();
      } else {
        return sum;
      }
    }
  }

  MultiPoly product() {
    MultiPoly p = unary();
    while (accept('*')) p = p * unary();
    return p;
  }

  MultiPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    MultiPoly base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.size() > 3) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  MultiPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string literal = digits();
      if (accept('/')) literal += "/" + digits();
      return MultiPoly(Rational::parse(literal));
    }
    const auto name = std::string_view("ABCLMNXYZ").find(c);
    if (name == std::string_view::npos) fail(std::string("unknown symbol '") + c + "'");
    ++pos_;
    return MultiPoly::var(static_cast<Var>(name));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

}  // namespace miquel
