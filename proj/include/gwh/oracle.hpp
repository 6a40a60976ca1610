#pragma once

#include <cstdint>
#include <vector>

#include "gwh/parallel.hpp"
#include "gwh/partition.hpp"

namespace gwh {

/// Hard limit on the explicit multiplication table of S(d).
inline constexpr int kMaxOracleDegree = 6;

/// Number of tuples (s_1, ..., s_n) in S(d), s_i of cycle type eta^i, with
/// s_1 ... s_n = 1 (target genus 0), or of tuples (a, b, s_1, ..., s_n) with
/// a b a^-1 b^-1 s_1 ... s_n = 1 (target genus 1). Every profile must have
/// size d.
std::uint64_t count_monodromy_tuples(int target_genus, int d, const std::vector<Partition>& profiles, Execution ex);

}  // namespace gwh
