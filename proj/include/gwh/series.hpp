#pragma once

#include <map>
#include <string>
#include <vector>

#include "gwh/rational.hpp"

namespace gwh {

/// Truncation order used for series that are known exactly (polynomials).
/// Orders saturate at this value under arithmetic.
inline constexpr int kExactOrder = 1 << 24;

/// Truncated Laurent series in one variable z.
///
/// Coefficients are known for exponents < order(); nothing is claimed
/// beyond that. Leading zeros are stripped on construction, so low() is the
/// valuation of a nonzero series and order() for the zero series.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int low, std::vector<Rational> coeffs, int order);

  static LaurentSeries zero(int order);
  static LaurentSeries monomial(const Rational& c, int exponent, int order);
  /// e^{cz}.
  static LaurentSeries exp_linear(const Rational& c, int order);

  int low() const { return low_; }
  int order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficients of z^low() upward; trailing zeros are dropped.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k; throws std::out_of_range when k >= order().
  Rational coeff(int k) const;

  LaurentSeries truncated(int order) const;
  /// f(c z).
  LaurentSeries scaled_argument(const Rational& c) const;
  /// z^k f(z).
  LaurentSeries shifted(int k) const;
  LaurentSeries derivative() const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const Rational& c);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& c) { return a *= c; }
  friend LaurentSeries operator*(const Rational& c, LaurentSeries a) { return a *= c; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries operator-() const;

  /// Same order and same coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  int order_ = 0;
  std::vector<Rational> coeffs_;
};

/// Exact product, truncated to the largest order at which it is fully known.
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);
/// Multiplicative inverse; throws std::domain_error("not invertible") for a
/// series with no known nonzero coefficient.
LaurentSeries series_invert(const LaurentSeries& a);
LaurentSeries series_pow(const LaurentSeries& a, int e);
/// Compares coefficients below `order`; both inputs must be known that far.
bool agree_below(const LaurentSeries& a, const LaurentSeries& b, int order);

using Exponent = std::vector<int>;

/// Integer linear combination of the variables z_0..z_{n-1}.
struct LinearForm {
  std::vector<int> coeffs;

  static LinearForm variable(int var, int nvars);
  static LinearForm sum_of(const std::vector<int>& vars, int nvars);
  int nvars() const { return static_cast<int>(coeffs.size()); }
  /// Index of the single variable when the form is c*z_j, else -1.
  int single_variable() const;
  bool is_zero() const;
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator*(int c) const;
  bool operator==(const LinearForm&) const = default;
};

/// Truncated series in n variables with total-degree truncation.
///
/// Individual exponents may be negative (poles along coordinate axes), but
/// the set of terms of each total degree is finite. Terms with total degree
/// >= order() are unknown.
class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(int nvars, int order);

  static MultiSeries constant(int nvars, const Rational& c, int order = kExactOrder);
  static MultiSeries monomial(const Exponent& e, const Rational& c, int order = kExactOrder);
  /// f(z_var) in a ring of nvars variables.
  static MultiSeries from_univariate(const LaurentSeries& f, int var, int nvars);
  /// f(L(z)); f may have negative exponents only when L is a multiple of a
  /// single variable.
  static MultiSeries substitute(const LaurentSeries& f, const LinearForm& L);
  static MultiSeries linear(const LinearForm& L);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExactOrder; }
  /// Minimal total degree of a nonzero term, or order() when zero.
  int valuation() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  /// Throws std::out_of_range when the total degree of e is >= order().
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  MultiSeries truncated(int order) const;
  /// Moves variable i to position var_map[i] in a ring of `nvars` variables.
  MultiSeries embedded(const std::vector<int>& var_map, int nvars) const;
  LaurentSeries to_univariate() const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& c);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(MultiSeries a, const Rational& c) { return a *= c; }
  friend MultiSeries operator*(const Rational& c, MultiSeries a) { return a *= c; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  MultiSeries operator-() const;

  friend bool operator==(const MultiSeries& a, const MultiSeries& b);

  std::string to_string() const;

 private:
  int nvars_ = 0;
  int order_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// True when a and b agree on every term of total degree < order.
bool agree_below(const MultiSeries& a, const MultiSeries& b, int order);

/// Exact quotient N / L. Throws std::domain_error("not divisible") when L
/// does not divide N; the result is known to order N.order() - 1.
MultiSeries divide_by_linear_form(const MultiSeries& N, const LinearForm& L);

enum class ExpLog { exp, log };
/// Formal exp (input without constant term) or log (input with constant
/// term 1). Non-constant terms must have total degree >= 1 and the input
/// must carry a finite truncation order.
MultiSeries exp_log_transform(const MultiSeries& f, ExpLog direction);

/// Power series in q, exact through q^degree().
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::vector<Rational> coeffs);
  static QSeries zero(int degree);
  /// (q)_infinity = prod_{n>=1} (1 - q^n).
  static QSeries euler_product(int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int k) const;
  Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  QSeries truncated(int degree) const;
  QSeries inverse() const;
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace gwh
