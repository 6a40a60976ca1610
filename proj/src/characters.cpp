#include "gwh/characters.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gwh/config.hpp"

namespace gwh {

std::vector<std::pair<Partition, int>> remove_border_strips(const Partition& lambda, int r) {
  std::vector<std::pair<Partition, int>> out;
  const int len = lambda.length();
  std::vector<int> beads(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);
  std::set<int> occupied(beads.begin(), beads.end());
  for (int i = 0; i < len; ++i) {
    const int b = beads[static_cast<std::size_t>(i)];
    const int t = b - r;
    if (t < 0 || occupied.count(t)) continue;
    int between = 0;
    for (int c : beads)
      if (c > t && c < b) ++between;
    std::vector<int> moved = beads;
    moved[static_cast<std::size_t>(i)] = t;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int j = 0; j < len; ++j) {
      int p = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (p > 0) parts.push_back(p);
    }
    out.emplace_back(Partition(std::move(parts)), between % 2 == 0 ? 1 : -1);
  }
  return out;
}

std::size_t CharacterTable::index(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::invalid_argument("partition " + p.to_string() + " not of table degree");
  return it->second;
}

Integer CharacterTable::value(std::size_t lambda, std::size_t eta) const {
  Integer v;
  mpz_set_si(v.get_mpz_t(), raw(lambda, eta));
  return v;
}

std::unique_ptr<CharacterTable> CharacterTable::build(int d, Execution ex) {
  if (d < 0 || d > kMaxCharacterDegree) throw std::out_of_range("character degree out of range");
  for (int k = 0; k < d; ++k) character_table(k);

  auto table = std::make_unique<CharacterTable>();
  table->degree_ = d;
  table->partitions_ = enumerate_partitions(d);
  const std::size_t n = table->partitions_.size();
  for (std::size_t i = 0; i < n; ++i) table->index_.emplace(table->partitions_[i], i);
  table->values_.assign(n * n, 0);
  if (d == 0) {
    table->values_[0] = 1;
    return table;
  }

  // Column eta is obtained by stripping a border strip of size eta_1 and
  // reading column eta minus eta_1 of the smaller table.
  std::vector<std::size_t> rest_index(n);
  for (std::size_t e = 0; e < n; ++e) {
    const Partition& eta = table->partitions_[e];
    const Partition rest = eta.without(eta.part(0));
    rest_index[e] = character_table(rest.size()).index(rest);
  }

  auto row = [&](std::size_t l) {
    const Partition& lambda = table->partitions_[l];
    std::vector<std::vector<std::pair<std::size_t, int>>> strips(static_cast<std::size_t>(d + 1));
    for (int r = 1; r <= d; ++r) {
      const CharacterTable& lower = character_table(d - r);
      for (auto& [mu, sign] : remove_border_strips(lambda, r)) strips[static_cast<std::size_t>(r)].emplace_back(lower.index(mu), sign);
    }
    for (std::size_t e = 0; e < n; ++e) {
      const int r = table->partitions_[e].part(0);
      const CharacterTable& lower = character_table(d - r);
      std::int64_t v = 0;
      for (auto [mu, sign] : strips[static_cast<std::size_t>(r)]) v += sign * lower.raw(mu, rest_index[e]);
      table->values_[l * n + e] = v;
    }
    return 0;
  };
  indexed_map<int>(n, row, ex);
  return table;
}

const CharacterTable& character_table(int d) {
  static std::array<std::once_flag, kMaxCharacterDegree + 1> flags;
  static std::array<std::unique_ptr<CharacterTable>, kMaxCharacterDegree + 1> tables;
  if (d < 0) throw std::out_of_range("negative character degree");
  if (d > limits().character_degree || d > kMaxCharacterDegree)
    throw std::out_of_range("degree " + std::to_string(d) + " exceeds the character ceiling");
  std::call_once(flags[static_cast<std::size_t>(d)], [d] { tables[static_cast<std::size_t>(d)] = CharacterTable::build(d, Execution::parallel); });
  return *tables[static_cast<std::size_t>(d)];
}

Integer character(const Partition& lambda, const Partition& eta) {
  if (lambda.size() != eta.size()) throw std::invalid_argument("character arguments of different sizes");
  const CharacterTable& t = character_table(lambda.size());
  return t.value(t.index(lambda), t.index(eta));
}

Integer dimension(const Partition& lambda) { return character(lambda, Partition::ones(lambda.size())); }

Rational central_character(const Partition& eta, const Partition& lambda) {
  if (eta.empty()) return 1;
  if (eta.size() > lambda.size()) return 0;
  const Partition padded = eta + Partition::ones(lambda.size() - eta.size());
  Rational r(binomial(lambda.size(), eta.size()) * class_size(eta) * character(lambda, padded));
  r /= dimension(lambda);
  return r;
}

void ClassAlgebraElement::add(const Partition& mu, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational ClassAlgebraElement::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string ClassAlgebraElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << (first ? "" : " + ") << it->second.get_str() << "*" << it->first.to_string();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gwh
