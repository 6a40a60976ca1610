#include "gwh/hurwitz.hpp"

#include <stdexcept>

#include "gwh/characters.hpp"
#include "gwh/config.hpp"
#include "gwh/oracle.hpp"

namespace gwh {

namespace {

Rational dimension_weight(const Partition& lambda, int d, int target_genus) {
  return power(Rational(dimension(lambda), factorial(d)), 2 - 2 * target_genus);
}

}  // namespace

Rational hurwitz_number(int target_genus, int d, const std::vector<Partition>& profiles, Execution ex) {
  if (target_genus < 0 || d < 0) throw std::invalid_argument("negative genus or degree");
  for (const auto& eta : profiles)
    if (eta.size() > d) return 0;
  const auto& reps = character_table(d).partitions();
  return exact_sum(
      reps.size(),
      [&](std::size_t i) {
        Rational term = dimension_weight(reps[i], d, target_genus);
        for (const auto& eta : profiles) {
          if (term == 0) break;
          term *= central_character(eta, reps[i]);
        }
        return term;
      },
      ex);
}

Rational hurwitz_number_strict(int target_genus, int d, const std::vector<Partition>& profiles, Execution ex) {
  if (target_genus < 0 || d < 0) throw std::invalid_argument("negative genus or degree");
  for (const auto& eta : profiles)
    if (eta.size() != d) throw std::invalid_argument("strict profiles must have size d");
  const CharacterTable& table = character_table(d);
  const auto& reps = table.partitions();
  std::vector<std::size_t> cols;
  std::vector<Integer> sizes;
  for (const auto& eta : profiles) {
    cols.push_back(table.index(eta));
    sizes.push_back(class_size(eta));
  }
  // |C_eta| chi^lambda_eta / dim(lambda) per profile.
  return exact_sum(
      reps.size(),
      [&](std::size_t i) {
        const Integer dim = table.value(i, table.index(Partition::ones(d)));
        Rational term = dimension_weight(reps[i], d, target_genus);
        for (std::size_t j = 0; j < cols.size(); ++j) term *= ratio(sizes[j] * table.value(i, cols[j]), dim);
        return term;
      },
      ex);
}

Rational hurwitz_number_padded(int target_genus, int d, const std::vector<Partition>& profiles, Execution ex) {
  std::vector<Partition> padded;
  Integer weight = 1;
  for (const auto& eta : profiles) {
    auto p = pad_to_degree(eta, d);
    if (!p) return 0;
    padded.push_back(p->eta);
    weight *= p->weight;
  }
  return Rational(weight) * hurwitz_number_strict(target_genus, d, padded, ex);
}

Rational hurwitz_oracle(int target_genus, int d, const std::vector<Partition>& profiles, Execution ex) {
  const int ceiling = target_genus == 0 ? limits().oracle_degree_genus0 : limits().oracle_degree_genus1;
  if (d > ceiling || d > kMaxOracleDegree) throw std::out_of_range("oracle too large");
  const Integer count = static_cast<unsigned long>(count_monodromy_tuples(target_genus, d, profiles, ex));
  return ratio(count, factorial(d));
}

std::optional<int> riemann_hurwitz_genus(int d, int target_genus, const std::vector<Partition>& profiles) {
  int ramification = 0;
  for (const auto& eta : profiles) {
    auto p = pad_to_degree(eta, d);
    if (!p) throw std::invalid_argument("profile larger than the degree");
    ramification += d - p->eta.length();
  }
  const int twice = 2 + ramification - d * (2 - 2 * target_genus);
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

}  // namespace gwh
