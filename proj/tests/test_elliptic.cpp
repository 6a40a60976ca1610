#include "printers.hpp"

#include "gwh/elliptic.hpp"

using namespace gwh;

TEST_CASE("theta function is odd in z") {
  const auto th = theta_series(0, 4, 8);
  for (const auto& c : th)
    for (int j = 0; j < 8; j += 2) CHECK(c.coeff(j) == 0);
  CHECK(th[0].coeff(1) == 1);
}

TEST_CASE("Eisenstein series") {
  const QSeries e2 = eisenstein_series(2, 4);
  CHECK(e2.coeff(0) == ratio(-1, 24));
  CHECK(e2.coeff(1) == 1);
  CHECK(e2.coeff(2) == 3);
  CHECK(e2.coeff(3) == 4);
  CHECK(eisenstein_series(4, 2).coeff(0) == ratio(1, 240));
  CHECK(eisenstein_series(6, 2).coeff(0) == ratio(-1, 504));
  CHECK(weight_monomials(6).size() == 3);
  CHECK(weight_monomials(12).size() == 7);
}

TEST_CASE("quasimodularity fits") {
  const QSeries zero = QSeries::zero(10);
  const QuasimodularFit f0 = quasimodularity_fit(zero, 4);
  CHECK(f0.ok);
  for (const auto& c : f0.coefficients) CHECK(c == 0);
  const QSeries tau0 = QSeries::euler_product(10) * elliptic_stationary_series({0}, 10);
  const QuasimodularFit f1 = quasimodularity_fit(tau0, 2);
  REQUIRE(f1.ok);
  CHECK(f1.coefficients == std::vector<Rational>{1});
  CHECK(tau0 == eisenstein_series(2, 10));
  const QuasimodularFit bad = quasimodularity_fit(elliptic_stationary_series({0}, 10), 2);
  CHECK_FALSE(bad.ok);
  CHECK_THROWS_AS(quasimodularity_fit(QSeries::zero(2), 8), std::invalid_argument);
}

TEST_CASE("trace and theta determinants agree") {
  for (int n = 1; n <= 2; ++n) {
    const QZSeries a = elliptic_npoint_trace(n, 3, 5);
    const QZSeries b = theta_determinant_npoint(n, 3, 5);
    for (std::size_t d = 0; d < a.size(); ++d) CHECK(agree_below(a[d], b[d], 5 - n));
  }
}
