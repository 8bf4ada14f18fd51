#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schroeder/numbers.hpp"
#include "schroeder/polynomial.hpp"

namespace schroeder {

/// Product of variables x_i^{e_i} with signed exponents; zero exponents are
/// never stored.
class Monomial {
 public:
  Monomial() = default;
  /// x_var^exponent
  static Monomial var(int index, long exponent = 1);
  explicit Monomial(std::vector<std::pair<int, long>> powers);

  long exponent(int index) const;
  bool is_one() const noexcept { return powers_.empty(); }
  const std::vector<std::pair<int, long>>& powers() const noexcept { return powers_; }

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
  Monomial pow(long e) const;

  /// "x^2 q^3" using `names[i]` for variable i when given, else "x<i>".
  std::string str(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, long>> powers_;  // sorted by variable index
};

/// Sparse multivariate series with rational coefficients, truncated at
/// exponent `order` of the grading variable. All stored terms have grading
/// exponent in 0..order.
class TruncSeries {
 public:
  TruncSeries(int grading_var, int order);

  static TruncSeries constant(const BigRat& c, int grading_var, int order);
  static TruncSeries term(const Monomial& m, const BigRat& c, int grading_var, int order);

  int grading_var() const noexcept { return grading_; }
  int order() const noexcept { return order_; }
  const std::map<Monomial, BigRat>& terms() const noexcept { return terms_; }
  BigRat coefficient(const Monomial& m) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * m, dropping it when the grading exponent exceeds the order.
  /// Throws InvalidInput for a negative grading exponent.
  void add_term(const Monomial& m, const BigRat& c);

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const BigRat& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const BigRat& c) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

  /// Multiplicative inverse to the same order. The grading-degree-0 part must
  /// be a nonzero constant; throws DomainError otherwise.
  TruncSeries inverse() const;

  /// Coefficients of grading^0..grading^order when no other variable occurs.
  std::vector<BigRat> univariate_coefficients() const;

  /// Sorted "coeff * x^a q^b" lines joined by " + ".
  std::string str(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.grading_ == b.grading_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const TruncSeries& o) const;

  int grading_;
  int order_;
  std::map<Monomial, BigRat> terms_;
};

/// num / den with integer polynomial numerator and denominator, den(0) != 0.
/// Stored with the joint integer content removed and den(0) > 0.
class RationalGF {
 public:
  RationalGF() : num_(), den_(BigInt(1)) {}
  RationalGF(const IntPoly& num);  // NOLINT: a polynomial is a rational function
  RationalGF(int constant) : RationalGF(IntPoly(BigInt(constant))) {}  // NOLINT
  /// Throws DomainError when den is zero or has a pole at the origin after
  /// cancelling common powers of x.
  RationalGF(IntPoly num, IntPoly den);

  static RationalGF x() { return RationalGF(IntPoly::x()); }

  const IntPoly& num() const noexcept { return num_; }
  const IntPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
  friend RationalGF operator-(const RationalGF& a);
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
  /// Throws DomainError on division by zero.
  friend RationalGF operator/(const RationalGF& a, const RationalGF& b);
  RationalGF pow(int e) const;

  /// Cross-multiplied equality, no factoring needed.
  friend bool operator==(const RationalGF& a, const RationalGF& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  /// Power-series coefficients c_0..c_order.
  std::vector<BigRat> expand(int order) const;
  /// As expand(), but throws DomainError if some coefficient is not an integer.
  std::vector<BigInt> expand_integers(int order) const;

  std::string str(const char* var = "x") const;

 private:
  void normalize();

  IntPoly num_;
  IntPoly den_;
};

/// One level a_i / (b_i + ...) of a finite continued fraction.
struct CfLevel {
  RationalGF num;
  RationalGF den;
};

/// a_0 / (b_0 + a_1 / (b_1 + ... + a_m / b_m)). An empty level list is
/// rejected; a zero denominator at any stage throws DomainError.
RationalGF eval_finite_cf(const std::vector<CfLevel>& levels);

/// 1 + m_0/(1 - m_0 - m_1/(1 - m_1 - ... - m_last/(1 - m_last))) for finitely
/// many univariate levels.
RationalGF finite_schroder_cf(const std::vector<RationalGF>& levels);

/// Level n numerator of a Schröder continued fraction.
using LevelMonomials = std::function<Monomial(int)>;

/// 1 + a_0/(1 - a_0 - a_1/(1 - a_1 - ...)) with a_n = level(n), keeping levels
/// 0..depth-1 and truncating at `order` in the grading variable. Every level
/// must carry grading exponent >= 1 (throws InvalidInput otherwise). With
/// depth >= order the truncation is exact.
TruncSeries eval_schroder_cf(const LevelMonomials& level, int depth, int order, int grading_var);

}  // namespace schroeder
