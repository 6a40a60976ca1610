#include <doctest.h>

#include "gwh/completion.hpp"
#include "gwh/shifted.hpp"

using namespace gwh;

TEST_CASE("completion coefficients") {
  CHECK(completion_coefficient(3, Partition({1, 1})) == 1);
  CHECK(completion_coefficient(4, Partition({2})) == ratio(5, 4));
  CHECK(completion_coefficient(1, Partition()) == ratio(-1, 24));
  CHECK(completion_coefficient(3, Partition({1})) == ratio(1, 12));
  CHECK(completion_coefficient(3, Partition()) == ratio(7, 2880));
  CHECK(completion_coefficient(4, Partition({3})) == 0);
}

TEST_CASE("completed cycles evaluate to shifted power sums") {
  for (int k = 1; k <= 6; ++k) {
    const ClassAlgebraElement c = completed_cycle(k);
    for (const auto& l : partitions_up_to(6)) CHECK(fourier_eval(c, l) == p_k(k, l).value / k);
  }
  ClassAlgebraElement unit;
  unit.add(Partition(), 1);
  CHECK(fourier_eval(unit, Partition({3, 1})) == 1);
  ClassAlgebraElement two;
  two.add(Partition({2}), 1);
  CHECK(fourier_eval(two, Partition({1, 1})) == -1);
}

TEST_CASE("Fourier inversion") {
  ClassAlgebraElement one;
  one.add(Partition({1}), 1);
  one.add(Partition(), ratio(-1, 24));
  CHECK(fourier_invert([](const Partition& l) -> Rational { return p_k(1, l).value; }, 1) == one);
  CHECK(fourier_invert([](const Partition& l) -> Rational { return p_k(3, l).value / 3; }, 3) == completed_cycle(3));
  for (const auto& mu : partitions_up_to(3)) {
    const ClassAlgebraElement c = fourier_invert([&](const Partition& l) { return central_character(mu, l); }, 3);
    ClassAlgebraElement expected;
    expected.add(mu, 1);
    CHECK(c == expected);
  }
  CHECK_THROWS_AS(fourier_invert([](const Partition& l) -> Rational { return p_k(4, l).value; }, 2), std::domain_error);
}
