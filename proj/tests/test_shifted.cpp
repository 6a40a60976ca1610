#include <doctest.h>

#include "gwh/shifted.hpp"

using namespace gwh;

TEST_CASE("S and sigma expansions") {
  const LaurentSeries S = S_series(5);
  CHECK(S.coeff(0) == 1);
  CHECK(S.coeff(2) == ratio(1, 24));
  CHECK(S.coeff(4) == ratio(1, 1920));
  const LaurentSeries sigma = sigma_series(4);
  CHECK(sigma.coeff(1) == 1);
  CHECK(sigma.coeff(3) == ratio(1, 24));
}

TEST_CASE("shifted power sums") {
  for (const auto& l : partitions_up_to(6)) CHECK(p_k(1, l).value == Rational(l.size()) - ratio(1, 24));
  CHECK(p_k(2, Partition({2})).value == 2);
  CHECK(p_k(2, Partition({1, 1})).value == -2);
  CHECK(p_k(3, Partition()).value == ratio(7, 960));
  for (int k = 1; k <= 8; ++k) CHECK(p_k(k, Partition()).value == Rational(factorial(k)) * c_constant(k + 1));
  CHECK(p_k(-1, Partition({2})).unit);
  CHECK(p_k(0, Partition({2})).value == 0);
  CHECK(p_k_over_factorial(-1, Partition({3})) == 1);
  CHECK(p_k_over_factorial(0, Partition({3})) == 0);
}

TEST_CASE("conjugation flips odd-index signs") {
  for (const auto& l : partitions_up_to(6))
    for (int k = 1; k <= 6; ++k)
      CHECK(p_k(k, l.conjugate()).value == (k % 2 == 0 ? -1 : 1) * p_k(k, l).value);
}

TEST_CASE("generating function of shifted power sums") {
  CHECK(e_series(Partition(), 8) == inverse_sigma_series(8));
  CHECK(e_series(Partition({1}), 8) == sigma_series(8) + inverse_sigma_series(8));
  for (const auto& l : partitions_up_to(5)) {
    const LaurentSeries e = e_series(l, 9);
    for (int k = 1; k <= 8; ++k) CHECK(e.coeff(k) * Rational(factorial(k)) == p_k(k, l).value);
  }
}
