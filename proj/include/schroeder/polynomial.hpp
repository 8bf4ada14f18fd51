#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "schroeder/errors.hpp"
#include "schroeder/numbers.hpp"

namespace schroeder {

/// Dense univariate polynomial, coefficient c[i] of x^i. Trailing zeros are
/// trimmed so the zero polynomial has no coefficients.
template <typename Scalar>
class Poly {
 public:
  using scalar_type = Scalar;

  Poly() = default;
  Poly(int constant) : Poly(Scalar(constant)) {}  // NOLINT: implicit for Eigen
  Poly(const Scalar& constant) : coeffs_{constant} { trim(); }  // NOLINT
  Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * x^d
  static Poly monomial(const Scalar& c, int d) {
    std::vector<Scalar> v(static_cast<std::size_t>(d) + 1, Scalar(0));
    v.back() = c;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(Scalar(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Scalar operator[](int i) const {
    return (i >= 0 && i <= degree()) ? coeffs_[static_cast<std::size_t>(i)] : Scalar(0);
  }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int e) const {
    Poly result(Scalar(1));
    Poly base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  /// p(x^m)
  Poly inflate(int m) const {
    if (is_zero()) return {};
    std::vector<Scalar> out(static_cast<std::size_t>(degree() * m) + 1, Scalar(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * static_cast<std::size_t>(m)] = coeffs_[i];
    return Poly(std::move(out));
  }

  /// Quotient when d divides *this exactly over the scalar ring, else nullopt.
  std::optional<Poly> divide_if_exact(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (is_zero()) return Poly();
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Scalar> rem = coeffs_;
    std::vector<Scalar> q(static_cast<std::size_t>(degree() - d.degree()) + 1, Scalar(0));
    const Scalar lead = d.leading();
    for (int i = degree() - d.degree(); i >= 0; --i) {
      const Scalar top = rem[static_cast<std::size_t>(i + d.degree())];
      if (top == 0) continue;
      Scalar c = top / lead;
      if (c * lead != top) return std::nullopt;
      q[static_cast<std::size_t>(i)] = c;
      for (int j = 0; j <= d.degree(); ++j)
        rem[static_cast<std::size_t>(i + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
      if (r != 0) return std::nullopt;
    return Poly(std::move(q));
  }

  /// Exact division; throws DomainError when d does not divide *this.
  Poly divide_exact(const Poly& d) const {
    auto q = divide_if_exact(d);
    if (!q) throw DomainError("inexact polynomial division");
    return *std::move(q);
  }

  std::string str(const char* var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
      Scalar c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const bool negative = c < 0;
      if (negative) c = -c;
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      first = false;
      if (i == 0 || c != 1) out << c;
      if (i > 0) out << (c != 1 ? "*" : "") << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<BigRat>;

}  // namespace schroeder

namespace Eigen {

// Lets Eigen dense containers hold exact polynomials (no vectorization, no
// floating-point traits).
template <typename Scalar>
struct NumTraits<schroeder::Poly<Scalar>> : GenericNumTraits<schroeder::Poly<Scalar>> {
  using Real = schroeder::Poly<Scalar>;
  using NonInteger = schroeder::Poly<Scalar>;
  using Nested = schroeder::Poly<Scalar>;
  using Literal = schroeder::Poly<Scalar>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 50,
    IsSigned = 1,
    RequireInitialization = 1
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 40,
    IsSigned = 1,
    RequireInitialization = 1
  };
};

}  // namespace Eigen
