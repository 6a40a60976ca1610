#include "printers.hpp"

#include "gwh/fock.hpp"
#include "gwh/shifted.hpp"

using namespace gwh;

namespace {

MultiSeries one(int nvars) { return MultiSeries::constant(nvars, 1); }

}  // namespace

TEST_CASE("alpha operators") {
  const FockVector v = apply_alpha(-2, FockVector::vacuum(1, 6));
  CHECK(v.terms().size() == 2);
  CHECK(v.coefficient(Partition({2})) == one(1));
  CHECK(v.coefficient(Partition({1, 1})) == -one(1));
  CHECK(apply_alpha(3, FockVector::vacuum(1, 6)).terms().empty());
  for (int k = 1; k <= 4; ++k) {
    const MultiSeries e = vacuum_expectation({Alpha{k}, Alpha{-k}}, 1, kExactOrder);
    CHECK(e == MultiSeries::constant(1, k));
    CHECK(vacuum_expectation({Alpha{-k}, Alpha{k}}, 1, kExactOrder).is_zero());
  }
  CHECK_THROWS_AS(apply_alpha(-3, FockVector::vacuum(1, 2)), std::out_of_range);
}

TEST_CASE("E_r at zero is alpha_r") {
  const LinearForm zero{{0}};
  for (int r = -3; r <= 3; ++r) {
    if (r == 0) continue;
    for (const auto& l : partitions_up_to(4)) {
      const FockVector v = FockVector::basis(l, 1, 8);
      const FockVector a = apply_alpha(r, v);
      const FockVector e = apply_E(r, zero, v, 6);
      CHECK(a.terms().size() == e.terms().size());
      for (const auto& [mu, c] : a.terms()) CHECK(agree_below(e.coefficient(mu), c, 6));
    }
  }
}

TEST_CASE("P_k is diagonal with shifted power sums") {
  for (const auto& l : partitions_up_to(4))
    for (int k = 1; k <= 4; ++k) {
      const FockVector v = apply_P(k, FockVector::basis(l, 1, 6));
      CHECK(v.coefficient(l) == MultiSeries::constant(1, p_k(k, l).value));
    }
}

TEST_CASE("adjointness of E_r") {
  const LinearForm z = LinearForm::variable(0, 1);
  const int order = 5;
  for (int r = -2; r <= 2; ++r)
    for (const auto& a : partitions_up_to(4))
      for (const auto& b : partitions_up_to(4)) {
        if (a.size() - b.size() != -r) continue;
        const MultiSeries left = apply_E(r, z, FockVector::basis(a, 1, 8), order).coefficient(b);
        const MultiSeries right = apply_E(-r, z, FockVector::basis(b, 1, 8), order).coefficient(a);
        CHECK(agree_below(left, right, order - 1));
      }
}

TEST_CASE("connected correlators") {
  const int order = 7;
  const MultiSeries g0 = g_function({0}, order);
  CHECK(agree_below(g0, MultiSeries::from_univariate(inverse_sigma_series(order), 0, 1), order - 1));
  for (int a = 1; a <= 3; ++a) {
    const LinearForm s = LinearForm::sum_of({0, 1}, 2);
    const LaurentSeries ratio_series = Rational(a) * (S_series(order).scaled_argument(a) * inverse_S_series(order));
    const MultiSeries expected = MultiSeries::substitute(ratio_series, s);
    CHECK(agree_below(g_function({a, -a}, order), expected, order - 2));
  }
  CHECK(g_function({0, 0}, order).is_zero());
  CHECK(g_function({-1, 1}, order).is_zero());
  CHECK(agree_below(g_function({1, 1, -2}, order), g_function_direct({1, 1, -2}, order), order - 2));
  CHECK(agree_below(g_function({2, -1, -1}, order), g_function_direct({2, -1, -1}, order), order - 2));
}

TEST_CASE("traces and commutators") {
  const auto t = trace_qH({}, 1, 8, 4);
  const std::vector<int> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int d = 0; d <= 8; ++d) CHECK(agree_below(t[static_cast<std::size_t>(d)], MultiSeries::constant(1, p[static_cast<std::size_t>(d)]), 4));
  CHECK_THROWS_AS(trace_qH({Alpha{1}}, 1, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(trace_qH({Pk{2}}, 1, 3, 3), std::invalid_argument);
  CHECK(commutator_check(2, 3, 5, 6));
  CHECK(commutator_check(-1, 2, 5, 6));
  CHECK(commutator_check(1, -1, 5, 6));
}
