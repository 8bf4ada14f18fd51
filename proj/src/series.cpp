#include "schroeder/series.hpp"

#include <algorithm>
#include <sstream>

#include "schroeder/errors.hpp"

namespace schroeder {

BigInt binom(long a, long b, BinomMode mode) {
  if (b < 0) return 0;
  if (b == 0) return (mode == BinomMode::Extended || a >= 0) ? BigInt(1) : BigInt(0);
  if (a < b) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

// ---- Monomial ----

Monomial Monomial::var(int index, long exponent) {
  Monomial m;
  if (exponent != 0) m.powers_.emplace_back(index, exponent);
  return m;
}

Monomial::Monomial(std::vector<std::pair<int, long>> powers) {
  std::sort(powers.begin(), powers.end());
  for (const auto& [v, e] : powers) {
    if (!powers_.empty() && powers_.back().first == v)
      powers_.back().second += e;
    else
      powers_.emplace_back(v, e);
  }
  std::erase_if(powers_, [](const auto& p) { return p.second == 0; });
}

long Monomial::exponent(int index) const {
  for (const auto& [v, e] : powers_)
    if (v == index) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = powers_.begin();
  auto b = o.powers_.begin();
  while (a != powers_.end() || b != o.powers_.end()) {
    if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      const long e = a->second + b->second;
      if (e != 0) out.powers_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(long e) const {
  Monomial out;
  if (e == 0) return out;
  for (const auto& [v, x] : powers_) out.powers_.emplace_back(v, x * e);
  return out;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  if (powers_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : powers_) {
    if (!first) out << ' ';
    first = false;
    if (v >= 0 && static_cast<std::size_t>(v) < names.size())
      out << names[static_cast<std::size_t>(v)];
    else
      out << 'x' << v;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

// ---- TruncSeries ----

TruncSeries::TruncSeries(int grading_var, int order) : grading_(grading_var), order_(order) {
  if (order < 0) throw InvalidInput("series order must be nonnegative");
}

TruncSeries TruncSeries::constant(const BigRat& c, int grading_var, int order) {
  TruncSeries s(grading_var, order);
  s.add_term(Monomial(), c);
  return s;
}

TruncSeries TruncSeries::term(const Monomial& m, const BigRat& c, int grading_var, int order) {
  TruncSeries s(grading_var, order);
  s.add_term(m, c);
  return s;
}

BigRat TruncSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRat(0) : it->second;
}

void TruncSeries::add_term(const Monomial& m, const BigRat& c) {
  const long g = m.exponent(grading_);
  if (g < 0) throw InvalidInput("negative exponent of the grading variable: " + m.str());
  if (g > order_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (grading_ != o.grading_ || order_ != o.order_)
    throw InvalidInput("series with different truncation");
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const BigRat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_compatible(b);
  TruncSeries out(a.grading_, a.order_);
  for (const auto& [ma, ca] : a.terms_) {
    const long ga = ma.exponent(a.grading_);
    for (const auto& [mb, cb] : b.terms_) {
      if (ga + mb.exponent(a.grading_) > a.order_) continue;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

TruncSeries TruncSeries::inverse() const {
  using Slice = std::map<Monomial, BigRat>;
  std::vector<Slice> slices(static_cast<std::size_t>(order_) + 1);
  for (const auto& [m, c] : terms_) slices[static_cast<std::size_t>(m.exponent(grading_))].emplace(m, c);
  const Slice& base = slices[0];
  if (base.size() != 1 || !base.begin()->first.is_one())
    throw DomainError("series is not invertible: its grading-degree-0 part is not a nonzero constant");
  const BigRat inv_c = 1 / base.begin()->second;

  // b_0 = 1/c, b_g = -(1/c) * sum_{i=1..g} s_i b_{g-i}
  std::vector<Slice> inv(slices.size());
  inv[0].emplace(Monomial(), inv_c);
  for (std::size_t g = 1; g < slices.size(); ++g) {
    Slice acc;
    for (std::size_t i = 1; i <= g; ++i) {
      for (const auto& [ms, cs] : slices[i]) {
        for (const auto& [mb, cb] : inv[g - i]) {
          auto [it, inserted] = acc.try_emplace(ms * mb, cs * cb);
          if (!inserted) it->second += cs * cb;
        }
      }
    }
    for (auto& [m, c] : acc)
      if (c != 0) inv[g].emplace(m, -inv_c * c);
  }
  TruncSeries out(grading_, order_);
  for (const auto& slice : inv)
    for (const auto& [m, c] : slice) out.add_term(m, c);
  return out;
}

std::vector<BigRat> TruncSeries::univariate_coefficients() const {
  std::vector<BigRat> out(static_cast<std::size_t>(order_) + 1, BigRat(0));
  for (const auto& [m, c] : terms_) {
    if (m.powers().size() > 1 || (!m.is_one() && m.powers().front().first != grading_))
      throw InvalidInput("series involves variables other than the grading variable");
    out[static_cast<std::size_t>(m.exponent(grading_))] = c;
  }
  return out;
}

std::string TruncSeries::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c;
    if (!m.is_one()) out << " * " << m.str(names);
  }
  return out.str();
}

// ---- RationalGF ----

RationalGF::RationalGF(const IntPoly& num) : num_(num), den_(BigInt(1)) { normalize(); }

RationalGF::RationalGF(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

namespace {

IntPoly shift_down(const IntPoly& p, int by) {
  std::vector<BigInt> c(p.coeffs().begin() + by, p.coeffs().end());
  return IntPoly(std::move(c));
}

}  // namespace

void RationalGF::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(BigInt(1));
    return;
  }
  int common = 0;
  while (num_[common] == 0 && den_[common] == 0) ++common;
  if (common > 0) {
    num_ = shift_down(num_, common);
    den_ = shift_down(den_, common);
  }
  if (den_[0] == 0) throw DomainError("rational function has a pole at the origin");

  BigInt g = 0;
  for (const auto& c : num_.coeffs()) g = gcd(g, c);
  for (const auto& c : den_.coeffs()) g = gcd(g, c);
  if (den_[0] < 0) g = -g;
  if (g != 1) {
    std::vector<BigInt> n = num_.coeffs();
    std::vector<BigInt> d = den_.coeffs();
    for (auto& c : n) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    num_ = IntPoly(std::move(n));
    den_ = IntPoly(std::move(d));
  }
}

namespace {

// a/b + sign * c/d, reusing a denominator that already divides the other.
RationalGF combine(const RationalGF& a, const RationalGF& b, int sign) {
  const IntPoly bn = sign > 0 ? b.num() : -b.num();
  if (a.den() == b.den()) return RationalGF(a.num() + bn, a.den());
  if (auto q = a.den().divide_if_exact(b.den())) return RationalGF(a.num() + bn * *q, a.den());
  if (auto q = b.den().divide_if_exact(a.den())) return RationalGF(a.num() * *q + bn, b.den());
  return RationalGF(a.num() * b.den() + bn * a.den(), a.den() * b.den());
}

}  // namespace

RationalGF operator+(const RationalGF& a, const RationalGF& b) { return combine(a, b, 1); }
RationalGF operator-(const RationalGF& a, const RationalGF& b) { return combine(a, b, -1); }
RationalGF operator-(const RationalGF& a) { return RationalGF(-a.num_, a.den_); }

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return RationalGF(a.num_ * b.num_, a.den_ * b.den_);
}

RationalGF operator/(const RationalGF& a, const RationalGF& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RationalGF(a.num_ * b.den_, a.den_ * b.num_);
}

RationalGF RationalGF::pow(int e) const {
  if (e < 0) return RationalGF(1) / pow(-e);
  return RationalGF(num_.pow(e), den_.pow(e));
}

std::vector<BigRat> RationalGF::expand(int order) const {
  if (order < 0) return {};
  std::vector<BigRat> c(static_cast<std::size_t>(order) + 1);
  const BigRat d0(den_[0]);
  for (int n = 0; n <= order; ++n) {
    BigRat acc(num_[n]);
    for (int i = 1; i <= std::min(n, den_.degree()); ++i)
      acc -= BigRat(den_[i]) * c[static_cast<std::size_t>(n - i)];
    acc /= d0;
    c[static_cast<std::size_t>(n)] = acc;
  }
  return c;
}

std::vector<BigInt> RationalGF::expand_integers(int order) const {
  std::vector<BigInt> out;
  for (const auto& c : expand(order)) {
    if (c.get_den() != 1) throw DomainError("non-integer coefficient " + c.get_str());
    out.push_back(c.get_num());
  }
  return out;
}

std::string RationalGF::str(const char* var) const {
  if (den_ == IntPoly(BigInt(1))) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

// ---- continued fractions ----

RationalGF eval_finite_cf(const std::vector<CfLevel>& levels) {
  if (levels.empty()) throw InvalidInput("eval_finite_cf: no levels");
  auto it = levels.rbegin();
  if (it->den.is_zero()) throw DomainError("continued fraction collapses: zero denominator");
  RationalGF value = it->num / it->den;
  for (++it; it != levels.rend(); ++it) {
    const RationalGF d = it->den + value;
    if (d.is_zero()) throw DomainError("continued fraction collapses: zero denominator");
    value = it->num / d;
  }
  return value;
}

RationalGF finite_schroder_cf(const std::vector<RationalGF>& levels) {
  RationalGF tail;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const RationalGF d = RationalGF(1) - *it - tail;
    if (d.is_zero()) throw DomainError("continued fraction collapses: zero denominator");
    tail = *it / d;
  }
  return RationalGF(1) + tail;
}

TruncSeries eval_schroder_cf(const LevelMonomials& level, int depth, int order, int grading_var) {
  TruncSeries tail(grading_var, order);
  const TruncSeries one = TruncSeries::constant(1, grading_var, order);
  for (int d = depth - 1; d >= 0; --d) {
    const Monomial m = level(d);
    if (m.exponent(grading_var) < 1)
      throw InvalidInput("level " + std::to_string(d) + " has no positive power of the grading variable");
    const TruncSeries a = TruncSeries::term(m, 1, grading_var, order);
    tail = a * (one - a - tail).inverse();
  }
  return one + tail;
}

}  // namespace schroeder
