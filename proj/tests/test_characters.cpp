#include <doctest.h>

#include "gwh/characters.hpp"
#include "gwh/config.hpp"

using namespace gwh;

TEST_CASE("small characters") {
  for (const auto& eta : enumerate_partitions(5)) CHECK(character(Partition({5}), eta) == 1);
  CHECK(character(Partition({1, 1}), Partition({2})) == -1);
  CHECK(character(Partition({2, 1}), Partition::ones(3)) == 2);
  CHECK_THROWS_AS(character(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("dimensions") {
  CHECK(dimension(Partition({4})) == 1);
  CHECK(dimension(Partition::ones(4)) == 1);
  CHECK(dimension(Partition({2, 1})) == 2);
  Integer s = 0;
  for (const auto& l : enumerate_partitions(5)) s += dimension(l) * dimension(l);
  CHECK(s == 120);
}

TEST_CASE("row orthogonality against brute force") {
  for (int d = 1; d <= 7; ++d) {
    const auto parts = enumerate_partitions(d);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        Integer s = 0;
        for (const auto& eta : parts) s += class_size(eta) * character(a, eta) * character(b, eta);
        CHECK(s == (a == b ? factorial(d) : Integer(0)));
      }
  }
}

TEST_CASE("serial and parallel tables agree") {
  const auto a = CharacterTable::build(9, Execution::serial);
  const auto b = CharacterTable::build(9, Execution::parallel);
  for (std::size_t i = 0; i < a->partitions().size(); ++i)
    for (std::size_t j = 0; j < a->partitions().size(); ++j) CHECK(a->raw(i, j) == b->raw(i, j));
}

TEST_CASE("border strips") {
  CHECK(remove_border_strips(Partition({2, 1}), 2).empty());
  CHECK(remove_border_strips(Partition({2, 2}), 2).size() == 2);
  CHECK(remove_border_strips(Partition({2, 1}), 3).size() == 1);
  CHECK(remove_border_strips(Partition({2, 1}), 4).empty());
}

TEST_CASE("central characters") {
  for (const auto& l : partitions_up_to(5)) {
    CHECK(central_character(Partition(), l) == 1);
    CHECK(central_character(Partition({1}), l) == l.size());
  }
  CHECK(central_character(Partition({2}), Partition({2})) == 1);
  CHECK(central_character(Partition({2}), Partition({1, 1})) == -1);
  CHECK(central_character(Partition({3}), Partition({2})) == 0);
}

TEST_CASE("character ceiling") {
  Limits l = limits();
  const Limits saved = l;
  l.character_degree = 8;
  set_limits(l);
  CHECK_THROWS_AS(character_table(12), std::out_of_range);
  set_limits(saved);
  CHECK_THROWS_AS(character_table(kMaxCharacterDegree + 1), std::out_of_range);
}
