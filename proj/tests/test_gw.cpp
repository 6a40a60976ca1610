#include "printers.hpp"

#include "gwh/completion.hpp"
#include "gwh/gw.hpp"
#include "gwh/hurwitz.hpp"

using namespace gwh;

TEST_CASE("stationary invariants from characters") {
  CHECK(stationary_disconnected(0, 0, {2}) == ratio(7, 5760));
  CHECK(stationary_disconnected(1, 1, {0}) == ratio(23, 24));
  CHECK(stationary_disconnected(0, 2, {1, 1}) == ratio(1, 2));
  CHECK(stationary_disconnected(0, 1, {1}) == 0);
  CHECK(stationary_disconnected(0, 2, {}) == hurwitz_number(0, 2, {}));
}

TEST_CASE("relative invariants of P^1") {
  CHECK(relative_p1_disconnected(Partition({2}), Partition({1}), {0}) == 0);
  CHECK(relative_p1_disconnected(Partition({2}), Partition({1, 1}), {}) == 0);
  for (int k = 1; k <= 4; ++k) {
    const auto conn = connected_relative(Partition({k}), Partition({k}), {}, [](const Partition& a, const Partition& b, const std::vector<int>& ks) {
      return relative_p1_disconnected(a, b, ks);
    });
    CHECK(conn == ratio(1, k));
  }
  for (const auto& mu : partitions_up_to(4))
    for (const auto& nu : enumerate_partitions(mu.size())) {
      CHECK(relative_p1_disconnected(mu, nu, {2, 0}) == relative_p1_disconnected(nu, mu, {2, 0}));
      CHECK(relative_p1_disconnected(mu, nu, {-2}) == relative_p1_disconnected(mu, nu, {}));
      CHECK(relative_p1_disconnected(mu, nu, {1, -2}) == relative_p1_disconnected(mu, nu, {1}));
      CHECK(relative_p1_disconnected(mu, nu, {-1}) == 0);
    }
}

TEST_CASE("one-point closed form") {
  CHECK(one_point_connected(Partition({1}), Partition({1}), 0) == 1);
  const RelativeValues disc = [](const Partition& a, const Partition& b, const std::vector<int>& ks) {
    return relative_p1_disconnected(a, b, ks);
  };
  for (const auto& mu : partitions_up_to(4))
    for (const auto& nu : enumerate_partitions(mu.size()))
      for (int k = -2; k <= 5; ++k) CHECK(one_point_connected(mu, nu, k) == connected_relative(mu, nu, {k}, disc));
  CHECK_THROWS_AS(one_point_closed_form(Partition({2}), Partition({1}), 4), std::invalid_argument);
  for (int k = 1; k <= 4; ++k)
    for (const auto& mu : enumerate_partitions(3)) CHECK(trivial_parts_check(mu, k));
}

TEST_CASE("character and operator series agree") {
  const Partition mu({2, 1});
  const Partition nu({3});
  CHECK(agree_below(relative_series_character(mu, nu, 2, 5), relative_series_operator(mu, nu, 2, 5), 5));
  CHECK(agree_below(relative_connected_series(mu, nu, 2, 5),
                    relative_connected_series(mu, nu, 2, 5, SeriesSource::operator_formalism), 5));
  CHECK(agree_below(relative_connected_series(mu, nu, 2, 6), n_point_closed_form(mu, nu, 2, 6), 6));
}

TEST_CASE("connected and disconnected absolute invariants") {
  const AbsoluteValues disc = [](int d, const std::vector<int>& k) { return stationary_disconnected(0, d, k); };
  CHECK(connected_absolute(2, {1, 1}, disc) == stationary_connected(0, 2, {1, 1}));
  CHECK(stationary_connected(1, 1, {0}) == 1);
}

TEST_CASE("pipelines agree") {
  std::vector<InvariantQuery> queries;
  queries.push_back({0, 2, {1, 1}, std::nullopt, std::nullopt, false});
  queries.push_back({0, 2, {1, 1}, std::nullopt, std::nullopt, true});
  queries.push_back({0, 3, {2, 1, 1}, std::nullopt, std::nullopt, true});
  queries.push_back({1, 2, {1, 3}, std::nullopt, std::nullopt, false});
  queries.push_back({1, 2, {2}, std::nullopt, std::nullopt, true});
  queries.push_back({0, 3, {2}, Partition({2, 1}), Partition({3}), true});
  queries.push_back({0, 3, {2, 0}, Partition({1, 1, 1}), Partition({2, 1}), false});
  for (const auto& q : queries) {
    const Rational expected = evaluate(q, Pipeline::character).value;
    for (Pipeline p : {Pipeline::operator_formalism, Pipeline::closed, Pipeline::substitution}) {
      if (p == Pipeline::closed && q.target_genus != 0) {
        CHECK_THROWS_AS(evaluate(q, p), std::invalid_argument);
        continue;
      }
      CAPTURE(pipeline_name(p));
      CHECK(evaluate(q, p).value == expected);
    }
  }
  CHECK(evaluate(queries[0], Pipeline::character).value == ratio(1, 2));
  CHECK(evaluate(queries[0], Pipeline::character).domain_genus == 0);
  CHECK(parse_pipeline("operator") == Pipeline::operator_formalism);
  CHECK_THROWS_AS(parse_pipeline("nope"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate({2, 1, {0}, std::nullopt, std::nullopt, false}, Pipeline::operator_formalism),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate({0, 1, {-3}, std::nullopt, std::nullopt, false}, Pipeline::character),
                  std::invalid_argument);
}

TEST_CASE("completed cycles replace descendents") {
  CHECK(gwh_substitution(0, 2, {1, 1}, {}) == stationary_disconnected(0, 2, {1, 1}));
  CHECK(gwh_substitution(1, 2, {2}, {}) == stationary_disconnected(1, 2, {2}));
  ClassAlgebraElement two;
  two.add(Partition({2}), 1);
  CHECK(hurwitz_with_classes(0, 2, {two, two}, {}) == hurwitz_number(0, 2, {Partition({2}), Partition({2})}));
}

TEST_CASE("structural identities") {
  CHECK(toda_recurrence_check(Partition({1}), Partition({1}), 1, 6));
  CHECK(toda_recurrence_check(Partition({2}), Partition({1, 1}), 2, 5));
  CHECK(degeneration_check(0, 2, {1, 1}));
  CHECK(degeneration_check(1, 2, {1, 3}));
  CHECK(hurwitz_degeneration_check(0, 2, {1, 1}));
  CHECK(completion_coefficient_check(3, Partition({1})));
  CHECK(completion_coefficient_check(4, Partition({2})));
}
