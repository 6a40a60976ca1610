#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwh/rational.hpp"

namespace gwh {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// the default-constructed value.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  static Partition ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part, 0-based; zero past the end.
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  /// Number of parts equal to k.
  int multiplicity(int k) const;
  Integer product_of_parts() const;

  Partition conjugate() const;
  /// Multiset union.
  Partition operator+(const Partition& o) const;
  /// Removes `count` parts equal to k; throws when there are fewer.
  Partition without(int k, int count = 1) const;

  /// "[3,2,1]"; the empty partition is "[]".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of d in reverse-lexicographic order: (d), (d-1,1), ...
std::vector<Partition> enumerate_partitions(int d);
/// All partitions with size <= d, grouped by size then reverse-lexicographic.
std::vector<Partition> partitions_up_to(int d);

/// |Aut(mu)| * prod mu_i.
Integer z_factor(const Partition& mu);
/// Size of the conjugacy class of cycle type mu in S(|mu|).
Integer class_size(const Partition& mu);

struct PaddedProfile {
  Partition eta;
  Integer weight;
};
/// Adds d - |eta| parts equal to 1 and returns the binomial weight
/// C(m_1(padded), m_1(eta)); nothing when |eta| > d ("oversized profile").
std::optional<PaddedProfile> pad_to_degree(const Partition& eta, int d);

/// Parses a JSON-style list of partitions, e.g. "[[2],[1,1]]".
std::vector<Partition> parse_partition_list(std::string_view text);

}  // namespace gwh
