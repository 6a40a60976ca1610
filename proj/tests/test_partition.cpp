#include <doctest.h>

#include "gwh/partition.hpp"

using namespace gwh;

TEST_CASE("partition enumeration") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});
  const auto four = enumerate_partitions(4);
  REQUIRE(four.size() == 5);
  CHECK(four.front() == Partition({4}));
  CHECK(four.back() == Partition::ones(4));
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int d = 0; d <= 10; ++d) CHECK(enumerate_partitions(d).size() == counts[static_cast<std::size_t>(d)]);
  CHECK(partitions_up_to(3).size() == 7);
}

TEST_CASE("z factor and class sizes") {
  CHECK(z_factor(Partition::ones(4)) == 24);
  CHECK(z_factor(Partition({2, 2})) == 8);
  CHECK(z_factor(Partition({3})) == 3);
  CHECK(z_factor(Partition()) == 1);
  Integer total = 0;
  for (const auto& p : enumerate_partitions(6)) total += class_size(p);
  CHECK(total == 720);
}

TEST_CASE("padding profiles") {
  const auto one = pad_to_degree(Partition({1}), 2);
  REQUIRE(one);
  CHECK(one->eta == Partition({1, 1}));
  CHECK(one->weight == 2);
  const auto two = pad_to_degree(Partition({2}), 2);
  REQUIRE(two);
  CHECK(two->eta == Partition({2}));
  CHECK(two->weight == 1);
  const auto empty = pad_to_degree(Partition(), 0);
  REQUIRE(empty);
  CHECK(empty->weight == 1);
  CHECK_FALSE(pad_to_degree(Partition({3}), 2));
}

TEST_CASE("partition helpers") {
  const Partition p({1, 3, 1});
  CHECK(p.parts() == std::vector<int>{3, 1, 1});
  CHECK(p.to_string() == "[3,1,1]");
  CHECK(Partition::parse("[3,1,1]") == p);
  CHECK(Partition::parse("[]") == Partition());
  CHECK(p.conjugate() == Partition({3, 1, 1}));
  CHECK(Partition({4, 2}).conjugate() == Partition({2, 2, 1, 1}));
  CHECK(p.without(1, 2) == Partition({3}));
  CHECK_THROWS(p.without(2));
  CHECK(p.multiplicity(1) == 2);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(parse_partition_list("[[2],[1,1]]") == std::vector<Partition>{Partition({2}), Partition({1, 1})});
}
