#pragma once

#include <functional>

#include "gwh/characters.hpp"
#include "gwh/partition.hpp"
#include "gwh/rational.hpp"

namespace gwh {

/// rho_{k,mu}: coefficient of the class (mu) in the completed cycle of k.
Rational completion_coefficient(int k, const Partition& mu);

/// The completed cycle of k as a combination of classes, k >= 1.
ClassAlgebraElement completed_cycle(int k);

/// sum_mu c_mu f_mu(lambda).
Rational fourier_eval(const ClassAlgebraElement& c, const Partition& lambda);

using PartitionFunction = std::function<Rational(const Partition&)>;

/// Preimage of `values` in the span of {f_mu : |mu| <= D}, found by exact
/// elimination on all lambda with |lambda| <= D. The fit is then checked on
/// every lambda of size D+1 and D+2; a mismatch throws std::domain_error
/// ("not in span up to degree D").
ClassAlgebraElement fourier_invert(const PartitionFunction& values, int D);

}  // namespace gwh
