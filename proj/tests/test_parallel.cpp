#include "printers.hpp"

#include "gwh/characters.hpp"
#include "gwh/elliptic.hpp"
#include "gwh/fock.hpp"
#include "gwh/gw.hpp"
#include "gwh/parallel.hpp"

using namespace gwh;

TEST_CASE("indexed map rethrows") {
  auto fn = [](std::size_t i) -> int {
    if (i == 7) throw std::runtime_error("boom");
    return static_cast<int>(i);
  };
  CHECK_THROWS_AS(indexed_map<int>(20, fn, Execution::parallel), std::runtime_error);
  CHECK_THROWS_AS(indexed_map<int>(20, fn, Execution::serial), std::runtime_error);
}

TEST_CASE("serial and parallel kernels agree") {
  for (int d = 0; d <= 6; ++d)
    CHECK(stationary_disconnected(0, d, {1, 2, 3}, Execution::serial) ==
          stationary_disconnected(0, d, {1, 2, 3}, Execution::parallel));
  CHECK(relative_series_character(Partition({2, 1}), Partition({3}), 2, 5, Execution::serial) ==
        relative_series_character(Partition({2, 1}), Partition({3}), 2, 5, Execution::parallel));
  CHECK(elliptic_stationary_series({1, 1}, 8, Execution::serial) ==
        elliptic_stationary_series({1, 1}, 8, Execution::parallel));
  const std::vector<WedgeOperator> ops{Ecal{0, LinearForm::variable(0, 2)}, Ecal{0, LinearForm::variable(1, 2)}};
  const auto a = trace_qH(ops, 2, 6, 5, Execution::serial);
  const auto b = trace_qH(ops, 2, 6, 5, Execution::parallel);
  CHECK(a == b);
}

TEST_CASE("thread count") {
  const int saved = thread_count();
  set_thread_count(2);
  CHECK(thread_count() == 2);
  set_thread_count(saved);
}
