#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gwh/parallel.hpp"
#include "gwh/partition.hpp"
#include "gwh/rational.hpp"

namespace gwh {

/// Hard limit imposed by the 64-bit table storage.
inline constexpr int kMaxCharacterDegree = 30;

/// Full character table of S(d). Rows are representations, columns are
/// classes, both indexed in reverse-lexicographic partition order.
class CharacterTable {
 public:
  /// Builds the table for degree d. Tables of lower degree are taken from
  /// the shared cache.
  static std::unique_ptr<CharacterTable> build(int d, Execution ex);

  int degree() const { return degree_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  std::size_t index(const Partition& p) const;
  std::int64_t raw(std::size_t lambda, std::size_t eta) const { return values_[lambda * partitions_.size() + eta]; }
  Integer value(std::size_t lambda, std::size_t eta) const;

 private:
  int degree_ = 0;
  std::vector<Partition> partitions_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::int64_t> values_;
};

/// Shared, lazily built table. Concurrent callers are safe: each degree is
/// built exactly once and is read-only afterwards. Throws std::out_of_range
/// above the configured character ceiling.
const CharacterTable& character_table(int d);

/// chi^lambda at the class eta; throws std::invalid_argument on size mismatch.
Integer character(const Partition& lambda, const Partition& eta);
Integer dimension(const Partition& lambda);

/// Border strips of size r removable from lambda, with sign (-1)^height.
std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int r);

/// f_eta(lambda), extended to all sizes; f_empty = 1.
Rational central_character(const Partition& eta, const Partition& lambda);

/// Finite rational combination of conjugacy classes (mu), across degrees.
class ClassAlgebraElement {
 public:
  void add(const Partition& mu, const Rational& c);
  Rational coefficient(const Partition& mu) const;
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::string to_string() const;
  friend bool operator==(const ClassAlgebraElement&, const ClassAlgebraElement&) = default;

 private:
  std::map<Partition, Rational> terms_;
};

}  // namespace gwh
