#pragma once

#include <optional>
#include <vector>

#include "gwh/rational.hpp"

namespace gwh {

using Matrix = std::vector<std::vector<Rational>>;

/// Solves the square system A x = b exactly. Throws std::domain_error
/// ("zero pivot") when A is singular.
std::vector<Rational> solve_square(Matrix A, std::vector<Rational> b);

/// Returns a solution of A x = b when the system is consistent (free
/// variables set to zero), or nothing when it is not.
std::optional<std::vector<Rational>> solve_consistent(Matrix A, std::vector<Rational> b);

int matrix_rank(Matrix A);

}  // namespace gwh
