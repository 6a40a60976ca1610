#include "gwh/completion.hpp"

#include <stdexcept>

#include "gwh/linalg.hpp"
#include "gwh/series.hpp"
#include "gwh/shifted.hpp"

namespace gwh {

Rational completion_coefficient(int k, const Partition& mu) {
  if (k < 1) throw std::invalid_argument("completion coefficients need k >= 1");
  const int e = k + 1 - mu.size() - mu.length();
  if (e < 0 || e % 2 != 0) return 0;
  const int order = e + 1;
  LaurentSeries prod = series_pow(S_series(order), mu.size() - 1);
  for (int part : mu.parts()) prod = prod * S_series(order).scaled_argument(part);
  const Rational r = ratio(factorial(k - 1) * mu.product_of_parts(), factorial(mu.size()));
  return r * prod.coeff(e);
}

ClassAlgebraElement completed_cycle(int k) {
  if (k < 1) throw std::invalid_argument("completed cycles need k >= 1");
  ClassAlgebraElement c;
  for (const auto& mu : partitions_up_to(k))
    if (mu.size() + mu.length() <= k + 1) c.add(mu, completion_coefficient(k, mu));
  return c;
}

Rational fourier_eval(const ClassAlgebraElement& c, const Partition& lambda) {
  Rational s = 0;
  for (const auto& [mu, coeff] : c.terms()) s += coeff * central_character(mu, lambda);
  return s;
}

ClassAlgebraElement fourier_invert(const PartitionFunction& values, int D) {
  if (D < 0) throw std::invalid_argument("negative degree bound");
  const std::vector<Partition> basis = partitions_up_to(D);
  const std::size_t n = basis.size();
  Matrix A(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = central_character(basis[j], basis[i]);
    b[i] = values(basis[i]);
  }
  std::vector<Rational> x = solve_square(std::move(A), std::move(b));
  ClassAlgebraElement c;
  for (std::size_t j = 0; j < n; ++j) c.add(basis[j], x[j]);
  for (int extra = D + 1; extra <= D + 2; ++extra)
    for (const auto& lambda : enumerate_partitions(extra))
      if (fourier_eval(c, lambda) != values(lambda))
        throw std::domain_error("not in span up to degree " + std::to_string(D));
  return c;
}

}  // namespace gwh
