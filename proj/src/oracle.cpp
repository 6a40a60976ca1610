#include "gwh/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace gwh {

namespace {

struct SymmetricGroup {
  int d = 0;
  std::vector<std::vector<int>> elements;  // one-line notation
  std::vector<int> mult;                   // mult[i * n + j] = index of p_i o p_j
  std::vector<int> inverse;
  std::map<Partition, std::vector<int>> classes;
  std::vector<std::uint64_t> commutators;  // #{(a, b) : a b a^-1 b^-1 = g}
  int identity = 0;

  std::size_t order() const { return elements.size(); }
  int product(int i, int j) const { return mult[static_cast<std::size_t>(i) * order() + static_cast<std::size_t>(j)]; }
};

Partition cycle_type(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> cycles;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  return Partition(std::move(cycles));
}

std::unique_ptr<SymmetricGroup> build_group(int d) {
  auto g = std::make_unique<SymmetricGroup>();
  g->d = d;
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do g->elements.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < g->order(); ++i) index.emplace(g->elements[i], static_cast<int>(i));
  const std::size_t n = g->order();
  g->mult.resize(n * n);
  std::vector<int> c(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (p_i o p_j)(x) = p_i(p_j(x))
      for (int x = 0; x < d; ++x) c[static_cast<std::size_t>(x)] = g->elements[i][static_cast<std::size_t>(g->elements[j][static_cast<std::size_t>(x)])];
      g->mult[i * n + j] = index.at(c);
    }
  }
  g->identity = 0;
  g->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g->mult[i * n + j] == g->identity) g->inverse[i] = static_cast<int>(j);
  for (std::size_t i = 0; i < n; ++i) g->classes[cycle_type(g->elements[i])].push_back(static_cast<int>(i));
  g->commutators.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      int ab = g->product(static_cast<int>(a), static_cast<int>(b));
      int abai = g->product(ab, g->inverse[a]);
      ++g->commutators[static_cast<std::size_t>(g->product(abai, g->inverse[b]))];
    }
  return g;
}

const SymmetricGroup& group(int d) {
  static std::array<std::once_flag, kMaxOracleDegree + 1> flags;
  static std::array<std::unique_ptr<SymmetricGroup>, kMaxOracleDegree + 1> groups;
  std::call_once(flags[static_cast<std::size_t>(d)], [d] { groups[static_cast<std::size_t>(d)] = build_group(d); });
  return *groups[static_cast<std::size_t>(d)];
}

}  // namespace

std::uint64_t count_monodromy_tuples(int target_genus, int d, const std::vector<Partition>& profiles, Execution ex) {
  if (target_genus != 0 && target_genus != 1) throw std::invalid_argument("oracle supports target genus 0 and 1");
  if (d < 0 || d > kMaxOracleDegree) throw std::out_of_range("oracle too large");
  for (const auto& eta : profiles)
    if (eta.size() != d) throw std::invalid_argument("oracle profiles must have size d");
  const SymmetricGroup& G = group(d);
  const std::size_t n = G.order();

  // dist[g] = number of prefixes whose running product is g.
  std::vector<std::uint64_t> dist(n, 0);
  if (target_genus == 0) {
    dist[static_cast<std::size_t>(G.identity)] = 1;
  } else {
    dist = G.commutators;
  }
  for (const auto& eta : profiles) {
    const std::vector<int>& cls = G.classes.at(eta);
    auto step = [&](std::size_t t) {
      std::uint64_t s = 0;
      for (int x : cls) s += dist[static_cast<std::size_t>(G.product(static_cast<int>(t), G.inverse[static_cast<std::size_t>(x)]))];
      return s;
    };
    dist = indexed_map<std::uint64_t>(n, step, ex);
  }
  return dist[static_cast<std::size_t>(G.identity)];
}

}  // namespace gwh
