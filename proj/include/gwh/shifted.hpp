#pragma once

#include "gwh/partition.hpp"
#include "gwh/rational.hpp"
#include "gwh/series.hpp"

namespace gwh {

/// S(z) = sinh(z/2)/(z/2), known below z^order.
LaurentSeries S_series(int order);
/// 1/S(z), known below z^order.
LaurentSeries inverse_S_series(int order);
/// sigma(z) = e^{z/2} - e^{-z/2}, known below z^order.
LaurentSeries sigma_series(int order);
/// 1/sigma(z), known below z^order.
LaurentSeries inverse_sigma_series(int order);

struct SigmaS {
  LaurentSeries sigma;
  LaurentSeries S;
};
SigmaS sigma_and_S(int order);

/// c_i = [z^i] 1/S(z). Cached; safe to call concurrently.
Rational c_constant(int i);

/// Value of p_k. For k = -1 the value is the bookkeeping unit (p_{-1}/(-1)! = 1),
/// flagged rather than represented as a number.
struct ShiftedValue {
  bool unit = false;
  Rational value;
};

/// Shifted symmetric power sum p_k(lambda) for k >= -1.
ShiftedValue p_k(int k, const Partition& lambda);

/// p_k(lambda)/k! with the conventions p_0 = 0 and p_{-1}/(-1)! = 1. This is
/// the weight of a tau_{k-1}(omega) insertion.
Rational p_k_over_factorial(int k, const Partition& lambda);

/// e(lambda, z) = sum_k p_k(lambda) z^k / k!, with the 1/sigma(z) pole, known
/// below z^order.
LaurentSeries e_series(const Partition& lambda, int order);

}  // namespace gwh
