#pragma once

#include <array>
#include <string>
#include <vector>

#include "gwh/parallel.hpp"
#include "gwh/series.hpp"

namespace gwh {

/// Series in q and z_1..z_n; entry d holds the coefficient of q^d.
using QZSeries = std::vector<MultiSeries>;

/// tr q^H prod E_0(z_i) on the charge-zero sector, through q^q_degree and
/// below total z-degree z_order.
QZSeries elliptic_npoint_trace(int n, int q_degree, int z_order, Execution ex = Execution::parallel);

/// sum_d q^d <prod tau_{k_i}(omega)>^bullet_d of the elliptic curve.
QSeries elliptic_stationary_series(const std::vector<int>& k, int q_degree, Execution ex = Execution::parallel);

/// k-th z-derivative of the odd theta function with the global q^{1/8}
/// removed; entry m is the coefficient of q^m, known below z^z_order.
std::vector<LaurentSeries> theta_series(int derivative, int q_degree, int z_order);

/// The n-point function as a sum over orderings of theta-function
/// determinants, n <= 3.
QZSeries theta_determinant_npoint(int n, int q_degree, int z_order);

/// E_2, E_4 or E_6 with constant terms -1/24, 1/240, -1/504.
QSeries eisenstein_series(int weight, int q_degree);

/// Exponents (a, b, c) of E_2^a E_4^b E_6^c of the given weight.
std::vector<std::array<int, 3>> weight_monomials(int weight);

struct QuasimodularFit {
  bool ok = false;
  std::vector<std::array<int, 3>> monomials;
  std::vector<Rational> coefficients;
  /// Leading q-coefficients that determined the fit.
  int fitted = 0;
  /// Further coefficients the fit reproduced.
  int held_out = 0;
  std::string message;
};

/// Expresses the series in the monomial basis of the given weight using the
/// shortest prefix of coefficients that determines it, then checks every
/// remaining coefficient. Throws std::invalid_argument when fewer than
/// `held_out` coefficients would remain.
QuasimodularFit quasimodularity_fit(const QSeries& series, int weight, int held_out = 3);

}  // namespace gwh
