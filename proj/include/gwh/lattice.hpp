#pragma once

#include <optional>
#include <vector>

#include "gwh/series.hpp"

namespace gwh {

/// Values attached to the lattice points 0 <= M <= top (componentwise),
/// i.e. to the monomials dividing x^top. Points are stored in mixed-radix
/// order, so every proper divisor of M precedes M.
class DivisorLattice {
 public:
  explicit DivisorLattice(std::vector<int> top);

  const std::vector<int>& top() const { return top_; }
  std::size_t size() const { return values_.size(); }
  std::vector<int> point(std::size_t index) const;
  std::size_t index(const std::vector<int>& point) const;

  bool has(std::size_t index) const { return values_[index].has_value(); }
  /// Throws std::domain_error("missing sub-query data") when unset.
  const MultiSeries& at(std::size_t index) const;
  void set(std::size_t index, MultiSeries value) { values_[index] = std::move(value); }

 private:
  std::vector<int> top_;
  std::vector<std::optional<MultiSeries>> values_;
};

/// Formal logarithm of sum_M D_M x^M; requires D_0 = 1.
DivisorLattice lattice_log(const DivisorLattice& D);
/// Formal exponential of sum_M C_M x^M; requires C_0 = 0.
DivisorLattice lattice_exp(const DivisorLattice& C);

}  // namespace gwh
