#include "printers.hpp"

#include "gwh/lattice.hpp"

using namespace gwh;

TEST_CASE("lattice indexing") {
  const DivisorLattice L({2, 1, 3});
  CHECK(L.size() == 24);
  for (std::size_t i = 0; i < L.size(); ++i) CHECK(L.index(L.point(i)) == i);
  CHECK(L.point(0) == std::vector<int>{0, 0, 0});
  CHECK(L.point(L.size() - 1) == std::vector<int>{2, 1, 3});
  CHECK_FALSE(L.has(0));
  CHECK_THROWS_AS(L.at(0), std::domain_error);
}

TEST_CASE("lattice exp and log") {
  DivisorLattice C({2, 2});
  for (std::size_t i = 0; i < C.size(); ++i) {
    const auto p = C.point(i);
    MultiSeries v(1, 6);
    if (i != 0) {
      v.add_term({0}, ratio(p[0] + 1, p[1] + 2));
      v.add_term({p[0] + 1}, p[1] - p[0]);
    }
    C.set(i, v);
  }
  const DivisorLattice D = lattice_exp(C);
  CHECK(agree_below(D.at(0), MultiSeries::constant(1, 1), 6));
  const auto x = D.index({1, 0});
  CHECK(D.at(x) == C.at(x));
  const auto xx = D.index({2, 0});
  CHECK(D.at(xx) == C.at(xx) + ratio(1, 2) * C.at(x) * C.at(x));
  const auto xy = D.index({1, 1});
  CHECK(D.at(xy) == C.at(xy) + C.at(x) * C.at(D.index({0, 1})));
  const DivisorLattice back = lattice_log(D);
  for (std::size_t i = 0; i < C.size(); ++i) CHECK(agree_below(back.at(i), C.at(i), 6));
}

TEST_CASE("lattice preconditions") {
  DivisorLattice bad({1});
  bad.set(0, MultiSeries::constant(1, 2, 4));
  bad.set(1, MultiSeries::constant(1, 1, 4));
  CHECK_THROWS(lattice_log(bad));
  CHECK_THROWS(lattice_exp(bad));
}
