#include "gwh/shifted.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gwh {

LaurentSeries S_series(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0)));
  for (int k = 0; 2 * k < order; ++k) c[static_cast<std::size_t>(2 * k)] = ratio(1, power(Rational(4), k).get_num() * factorial(2 * k + 1));
  return LaurentSeries(0, std::move(c), order);
}

LaurentSeries inverse_S_series(int order) {
  if (order <= 0) return LaurentSeries::zero(order);
  return series_invert(S_series(order));
}

LaurentSeries sigma_series(int order) { return S_series(order - 1).shifted(1); }

LaurentSeries inverse_sigma_series(int order) { return inverse_S_series(order + 1).shifted(-1); }

SigmaS sigma_and_S(int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  return {sigma_series(order), S_series(order)};
}

Rational c_constant(int i) {
  static std::mutex mutex;
  static std::vector<Rational> cache;
  if (i < 0) throw std::invalid_argument("negative index");
  std::lock_guard<std::mutex> lock(mutex);
  if (static_cast<int>(cache.size()) <= i) {
    const int n = std::max(2 * i + 2, 32);
    LaurentSeries inv = inverse_S_series(n);
    cache.clear();
    for (int k = 0; k < n; ++k) cache.push_back(inv.coeff(k));
  }
  return cache[static_cast<std::size_t>(i)];
}

ShiftedValue p_k(int k, const Partition& lambda) {
  if (k < -1) throw std::invalid_argument("p_k is defined for k >= -1");
  if (k == -1) return {true, 0};
  if (k == 0) return {false, 0};
  Rational s = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    s += power(Rational(2 * (lambda.part(i - 1) - i) + 1, 2), k);
    s -= power(Rational(-2 * i + 1, 2), k);
  }
  s += Rational(factorial(k)) * c_constant(k + 1);
  return {false, s};
}

Rational p_k_over_factorial(int k, const Partition& lambda) {
  ShiftedValue v = p_k(k, lambda);
  if (v.unit) return 1;
  return v.value / factorial(k);
}

LaurentSeries e_series(const Partition& lambda, int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  LaurentSeries e = inverse_sigma_series(order);
  for (int i = 1; i <= lambda.length(); ++i) {
    e += LaurentSeries::exp_linear(Rational(2 * (lambda.part(i - 1) - i) + 1, 2), order);
    e -= LaurentSeries::exp_linear(Rational(-2 * i + 1, 2), order);
  }
  return e;
}

}  // namespace gwh
