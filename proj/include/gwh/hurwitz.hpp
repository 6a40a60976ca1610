#pragma once

#include <optional>
#include <vector>

#include "gwh/parallel.hpp"
#include "gwh/partition.hpp"
#include "gwh/rational.hpp"

namespace gwh {

/// Extended Hurwitz number H_d^X(eta^1, ..., eta^n) of a genus g target,
/// as a sum over representations of central characters.
Rational hurwitz_number(int target_genus, int d, const std::vector<Partition>& profiles,
                        Execution ex = Execution::parallel);

/// Unextended character formula; every profile must have size d.
Rational hurwitz_number_strict(int target_genus, int d, const std::vector<Partition>& profiles,
                               Execution ex = Execution::parallel);

/// Extended Hurwitz number through explicit padding of each profile to size
/// d with binomial weights, followed by the strict formula.
Rational hurwitz_number_padded(int target_genus, int d, const std::vector<Partition>& profiles,
                               Execution ex = Execution::parallel);

/// Independent count of monodromy tuples divided by d!. Throws
/// std::out_of_range("oracle too large") above the configured ceiling.
Rational hurwitz_oracle(int target_genus, int d, const std::vector<Partition>& profiles,
                        Execution ex = Execution::parallel);

/// Genus of the (possibly disconnected) cover forced by Riemann-Hurwitz, or
/// nothing when 2g(C) would be odd. Profiles smaller than d are padded.
std::optional<int> riemann_hurwitz_genus(int d, int target_genus, const std::vector<Partition>& profiles);

}  // namespace gwh
