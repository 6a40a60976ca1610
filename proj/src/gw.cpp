#include "gwh/gw.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "gwh/completion.hpp"
#include "gwh/fock.hpp"
#include "gwh/hurwitz.hpp"
#include "gwh/lattice.hpp"
#include "gwh/shifted.hpp"

namespace gwh {

std::string pipeline_name(Pipeline p) {
  switch (p) {
    case Pipeline::character: return "character";
    case Pipeline::operator_formalism: return "operator";
    case Pipeline::closed: return "closed";
    case Pipeline::substitution: return "substitution";
  }
  return "character";
}

Pipeline parse_pipeline(const std::string& name) {
  if (name == "character") return Pipeline::character;
  if (name == "operator") return Pipeline::operator_formalism;
  if (name == "closed") return Pipeline::closed;
  if (name == "substitution") return Pipeline::substitution;
  throw std::invalid_argument("unknown pipeline: " + name);
}

namespace {

MultiSeries clip(const MultiSeries& s, int order) {
  if (s.order() < order) throw std::logic_error("series lost precision below the requested order");
  return s.order() > order ? s.truncated(order) : s;
}

Rational insertion_weight(const std::vector<int>& k, const Partition& lambda) {
  Rational w = 1;
  for (int ki : k) {
    w *= p_k_over_factorial(ki + 1, lambda);
    if (w == 0) break;
  }
  return w;
}

std::vector<int> select(const std::vector<int>& k, unsigned mask) {
  std::vector<int> out;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (mask & (1u << i)) out.push_back(k[i]);
  return out;
}

std::vector<int> bits(unsigned mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

// Lattice of sub-queries (mu' <= mu, nu' <= nu, S subset of the insertions).
class ProfileLattice {
 public:
  ProfileLattice(const Partition& mu, const Partition& nu, int n) : n_(n) {
    collect(mu, mu_values_);
    collect(nu, nu_values_);
    for (const auto& [v, m] : mu_values_) top_.push_back(m);
    for (const auto& [v, m] : nu_values_) top_.push_back(m);
    for (int i = 0; i < n; ++i) top_.push_back(1);
  }
  const std::vector<int>& top() const { return top_; }

  struct Point {
    Partition mu, nu;
    unsigned mask = 0;
  };
  Point decode(const std::vector<int>& p) const {
    Point out;
    std::size_t j = 0;
    out.mu = build(mu_values_, p, j);
    out.nu = build(nu_values_, p, j);
    for (int i = 0; i < n_; ++i, ++j)
      if (p[j]) out.mask |= 1u << i;
    return out;
  }

 private:
  static void collect(const Partition& p, std::vector<std::pair<int, int>>& out) {
    for (int part : p.parts()) {
      if (!out.empty() && out.back().first == part) ++out.back().second;
      else out.emplace_back(part, 1);
    }
  }
  static Partition build(const std::vector<std::pair<int, int>>& values, const std::vector<int>& p, std::size_t& j) {
    std::vector<int> parts;
    for (const auto& [v, m] : values) {
      parts.insert(parts.end(), static_cast<std::size_t>(p[j]), v);
      ++j;
    }
    return Partition(parts);
  }

  int n_;
  std::vector<std::pair<int, int>> mu_values_, nu_values_;
  std::vector<int> top_;
};

MultiSeries number(const Rational& x) { return MultiSeries::constant(0, x); }

Rational as_number(const MultiSeries& s) { return s.coeff({}); }

const ClassAlgebraElement& cached_completed_cycle(int k) {
  static std::mutex mutex;
  static std::map<int, ClassAlgebraElement> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, completed_cycle(k)).first;
  return it->second;
}

// Calls fn(index tuple) for every tuple with idx[i] < sizes[i].
template <class Fn>
void for_each_tuple(const std::vector<std::size_t>& sizes, Fn&& fn) {
  for (auto s : sizes)
    if (s == 0) return;
  std::vector<std::size_t> idx(sizes.size(), 0);
  while (true) {
    fn(idx);
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == sizes[i]) idx[i++] = 0;
    if (i == idx.size()) return;
  }
}

Integer automorphisms(const Partition& p) { return z_factor(p) / p.product_of_parts(); }

}  // namespace

std::optional<int> domain_genus(const InvariantQuery& q) {
  int twice = 2 - q.degree * (2 - 2 * q.target_genus);
  for (int k : q.k) twice += k;
  if (q.mu) twice += q.degree - q.mu->length();
  if (q.nu) twice += q.degree - q.nu->length();
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

Rational stationary_disconnected(int target_genus, int d, const std::vector<int>& k, Execution ex) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const std::vector<Partition> lambdas = enumerate_partitions(d);
  const Rational d_fact(factorial(d));
  return exact_sum(
      lambdas.size(),
      [&](std::size_t i) -> Rational {
        Rational w = insertion_weight(k, lambdas[i]);
        if (w == 0 || target_genus == 1) return w;
        return w * power(Rational(dimension(lambdas[i])) / d_fact, 2 - 2 * target_genus);
      },
      ex);
}

Rational relative_p1_disconnected(const Partition& mu, const Partition& nu, const std::vector<int>& k,
                                  Execution ex) {
  if (mu.size() != nu.size()) return 0;
  if (mu.size() == 0) return insertion_weight(k, Partition());
  const std::vector<Partition> lambdas = enumerate_partitions(mu.size());
  const Rational sum = exact_sum(
      lambdas.size(),
      [&](std::size_t i) -> Rational {
        Rational w = insertion_weight(k, lambdas[i]);
        if (w == 0) return w;
        return w * Rational(character(lambdas[i], mu) * character(lambdas[i], nu));
      },
      ex);
  return sum / Rational(z_factor(mu) * z_factor(nu));
}

Rational coefficient_at(const MultiSeries& F, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != F.nvars()) throw std::invalid_argument("insertion count differs from variables");
  Exponent e(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) e[i] = k[i] + 1;
  return F.coeff(e);
}

int order_for(const std::vector<int>& k) {
  int s = 1;
  for (int ki : k) s += ki + 1;
  return std::max(s, 1);
}

MultiSeries relative_series_character(const Partition& mu, const Partition& nu, int n, int order, Execution ex) {
  if (mu.size() != nu.size()) return MultiSeries(n, kExactOrder);
  const int d = mu.size();
  const std::vector<Partition> lambdas = enumerate_partitions(d);
  const int factor_order = order + std::max(0, n - 1);
  auto terms = indexed_map<MultiSeries>(
      lambdas.size(),
      [&](std::size_t i) -> MultiSeries {
        const Partition& lambda = lambdas[i];
        const Integer chi = d == 0 ? Integer(1) : Integer(character(lambda, mu) * character(lambda, nu));
        if (chi == 0) return MultiSeries(n, kExactOrder);
        MultiSeries prod = MultiSeries::constant(n, Rational(chi));
        if (n > 0) {
          const LaurentSeries e = e_series(lambda, factor_order);
          for (int j = 0; j < n; ++j) prod = prod * MultiSeries::from_univariate(e, j, n);
        }
        return prod;
      },
      ex);
  MultiSeries total(n, kExactOrder);
  for (const auto& t : terms) total += t;
  total *= Rational(1) / Rational(z_factor(mu) * z_factor(nu));
  return n == 0 ? total : clip(total, order);
}

MultiSeries relative_series_operator(const Partition& mu, const Partition& nu, int n, int order) {
  std::vector<WedgeOperator> ops;
  for (int part : mu.parts()) ops.emplace_back(Alpha{part});
  for (int j = 0; j < n; ++j) ops.emplace_back(Ecal{0, LinearForm::variable(j, n)});
  for (int part : nu.parts()) ops.emplace_back(Alpha{-part});
  MultiSeries v = vacuum_expectation(ops, n, order);
  return v * (Rational(1) / Rational(z_factor(mu) * z_factor(nu)));
}

MultiSeries relative_connected_series(const Partition& mu, const Partition& nu, int n, int order,
                                      SeriesSource source) {
  const int working = order + n;
  ProfileLattice shape(mu, nu, n);
  DivisorLattice D(shape.top());
  for (std::size_t i = 0; i < D.size(); ++i) {
    const auto p = shape.decode(D.point(i));
    const std::vector<int> vars = bits(p.mask, n);
    const int m = static_cast<int>(vars.size());
    MultiSeries f = source == SeriesSource::character ? relative_series_character(p.mu, p.nu, m, working)
                                                      : relative_series_operator(p.mu, p.nu, m, working);
    D.set(i, f.embedded(vars, n));
  }
  const DivisorLattice C = lattice_log(D);
  return clip(C.at(C.size() - 1), order);
}

Rational connected_relative(const Partition& mu, const Partition& nu, const std::vector<int>& k,
                            const RelativeValues& disconnected) {
  const int n = static_cast<int>(k.size());
  ProfileLattice shape(mu, nu, n);
  DivisorLattice D(shape.top());
  for (std::size_t i = 0; i < D.size(); ++i) {
    const auto p = shape.decode(D.point(i));
    D.set(i, number(disconnected(p.mu, p.nu, select(k, p.mask))));
  }
  return as_number(lattice_log(D).at(D.size() - 1));
}

Rational disconnected_relative(const Partition& mu, const Partition& nu, const std::vector<int>& k,
                               const RelativeValues& connected) {
  const int n = static_cast<int>(k.size());
  ProfileLattice shape(mu, nu, n);
  DivisorLattice C(shape.top());
  C.set(0, number(0));
  for (std::size_t i = 1; i < C.size(); ++i) {
    const auto p = shape.decode(C.point(i));
    C.set(i, number(connected(p.mu, p.nu, select(k, p.mask))));
  }
  return as_number(lattice_exp(C).at(C.size() - 1));
}

Rational connected_absolute(int d, const std::vector<int>& k, const AbsoluteValues& disconnected) {
  std::vector<int> top{d};
  top.insert(top.end(), k.size(), 1);
  DivisorLattice D(top);
  for (std::size_t i = 0; i < D.size(); ++i) {
    const std::vector<int> p = D.point(i);
    unsigned mask = 0;
    for (std::size_t j = 0; j < k.size(); ++j)
      if (p[j + 1]) mask |= 1u << j;
    D.set(i, number(disconnected(p[0], select(k, mask))));
  }
  return as_number(lattice_log(D).at(D.size() - 1));
}

Rational stationary_connected(int target_genus, int d, const std::vector<int>& k) {
  return connected_absolute(d, k, [&](int dd, const std::vector<int>& kk) {
    return stationary_disconnected(target_genus, dd, kk);
  });
}

LaurentSeries one_point_closed_form(const Partition& mu, const Partition& nu, int order) {
  if (mu.size() != nu.size()) throw std::invalid_argument("profiles of different sizes");
  const LaurentSeries S = S_series(order);
  LaurentSeries prod = inverse_S_series(order);
  for (int part : mu.parts()) prod = prod * S.scaled_argument(part);
  for (int part : nu.parts()) prod = prod * S.scaled_argument(part);
  return prod * (Rational(1) / Rational(automorphisms(mu) * automorphisms(nu)));
}

Rational one_point_connected(const Partition& mu, const Partition& nu, int k) {
  if (mu.size() != nu.size()) return 0;
  const int twice_genus = k + 2 - mu.length() - nu.length();
  if (twice_genus < 0 || twice_genus % 2 != 0) return 0;
  return one_point_closed_form(mu, nu, twice_genus + 1).coeff(twice_genus);
}

MultiSeries n_point_closed_form(const Partition& mu, const Partition& nu, int n, int order) {
  if (n < 1) throw std::invalid_argument("closed form needs at least one variable");
  if (mu.size() != nu.size()) throw std::invalid_argument("profiles of different sizes");
  std::vector<int> items;
  for (int part : mu.parts()) items.push_back(part);
  for (int part : nu.parts()) items.push_back(-part);

  // sigma(|m| z_j) for every item size and variable.
  const LaurentSeries sigma = sigma_series(order + 1);
  std::map<std::pair<int, int>, MultiSeries> sig;
  for (int m : items)
    for (int j = 0; j < n; ++j)
      if (!sig.count({std::abs(m), j}))
        sig.emplace(std::make_pair(std::abs(m), j),
                    MultiSeries::from_univariate(sigma.scaled_argument(std::abs(m)), j, n));

  std::map<std::vector<int>, MultiSeries> G;
  MultiSeries total(n, kExactOrder);
  const std::vector<std::size_t> sizes(items.size(), static_cast<std::size_t>(n));
  auto visit = [&](const std::vector<std::size_t>& f) {
    std::vector<int> rows(static_cast<std::size_t>(n), 0);
    MultiSeries weight = MultiSeries::constant(n, 1);
    for (std::size_t i = 0; i < items.size(); ++i) {
      rows[f[i]] += items[i];
      weight = weight * sig.at({std::abs(items[i]), static_cast<int>(f[i])});
    }
    auto it = G.find(rows);
    if (it == G.end()) it = G.emplace(rows, g_function(rows, order)).first;
    if (it->second.is_zero() && it->second.is_exact()) return;
    total += weight * it->second;
  };
  for_each_tuple(sizes, visit);
  total *= Rational(1) / Rational(z_factor(mu) * z_factor(nu));
  if (total.is_zero() && total.is_exact()) return total;
  return clip(total, order);
}

namespace {

// Restricted growth strings: block[i] is the block of element i.
template <class Fn>
void for_each_set_partition(int n, Fn&& fn) {
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      fn(block, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

// All ordered ways of splitting the multiset p into `blocks` sub-multisets.
std::vector<std::vector<Partition>> distributions(const Partition& p, int blocks) {
  std::vector<std::pair<int, int>> values;
  for (int part : p.parts()) {
    if (!values.empty() && values.back().first == part) ++values.back().second;
    else values.emplace_back(part, 1);
  }
  std::vector<std::vector<std::vector<int>>> partial{std::vector<std::vector<int>>(static_cast<std::size_t>(blocks))};
  for (const auto& [v, m] : values) {
    std::vector<std::vector<std::vector<int>>> next;
    for (const auto& base : partial) {
      // Compositions of m into `blocks` non-negative parts.
      std::vector<int> comp(static_cast<std::size_t>(blocks), 0);
      std::function<void(int, int)> rec = [&](int b, int left) {
        if (b == blocks - 1) {
          comp[static_cast<std::size_t>(b)] = left;
          auto grown = base;
          for (int i = 0; i < blocks; ++i)
            grown[static_cast<std::size_t>(i)].insert(grown[static_cast<std::size_t>(i)].end(),
                                                      static_cast<std::size_t>(comp[static_cast<std::size_t>(i)]), v);
          next.push_back(std::move(grown));
          return;
        }
        for (int c = 0; c <= left; ++c) {
          comp[static_cast<std::size_t>(b)] = c;
          rec(b + 1, left - c);
        }
      };
      rec(0, m);
    }
    partial = std::move(next);
  }
  std::vector<std::vector<Partition>> out;
  for (const auto& split : partial) {
    std::vector<Partition> parts;
    for (const auto& s : split) parts.emplace_back(s);
    out.push_back(std::move(parts));
  }
  return out;
}

}  // namespace

bool toda_recurrence_check(const Partition& mu, const Partition& nu, int n, int order) {
  if (n < 1) throw std::invalid_argument("recurrence needs at least one variable");
  if (mu.size() != nu.size()) throw std::invalid_argument("profiles of different sizes");
  const Partition one({1});
  MultiSeries lhs = relative_connected_series(mu + one, nu + one, n, order);
  lhs *= Rational((mu.multiplicity(1) + 1) * (nu.multiplicity(1) + 1));

  const int working = order + 2 * n;
  const LaurentSeries sigma_sq = series_pow(sigma_series(working + 1), 2);
  MultiSeries rhs(n, kExactOrder);
  for_each_set_partition(n, [&](const std::vector<int>& block, int blocks) {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(blocks));
    for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])].push_back(i);
    std::vector<MultiSeries> squares;
    for (const auto& vars : members) squares.push_back(MultiSeries::substitute(sigma_sq, LinearForm::sum_of(vars, n)));
    for (const auto& mus : distributions(mu, blocks)) {
      for (const auto& nus : distributions(nu, blocks)) {
        MultiSeries term = MultiSeries::constant(n, 1);
        bool vanishes = false;
        for (int b = 0; b < blocks && !vanishes; ++b) {
          const auto ub = static_cast<std::size_t>(b);
          const auto& vars = members[ub];
          if (mus[ub].size() != nus[ub].size() || (mus[ub].empty() && vars.size() > 1)) {
            vanishes = true;
            break;
          }
          const MultiSeries f =
              n_point_closed_form(mus[ub], nus[ub], static_cast<int>(vars.size()), working).embedded(vars, n);
          if (f.is_zero() && f.is_exact()) vanishes = true;
          else term = term * squares[ub] * f;
        }
        if (!vanishes) rhs += term;
      }
    }
  });
  if (rhs.order() < order) throw std::logic_error("recurrence lost precision");
  return agree_below(lhs, rhs, order);
}

Rational hurwitz_with_classes(int target_genus, int d, const std::vector<ClassAlgebraElement>& classes,
                              const std::vector<Partition>& profiles, Execution ex) {
  std::vector<std::vector<std::pair<Partition, Rational>>> terms;
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) {
    terms.emplace_back(c.terms().begin(), c.terms().end());
    sizes.push_back(terms.back().size());
  }
  std::vector<std::vector<std::size_t>> choices;
  for_each_tuple(sizes, [&](const std::vector<std::size_t>& idx) { choices.push_back(idx); });
  return exact_sum(
      choices.size(),
      [&](std::size_t c) -> Rational {
        Rational coeff = 1;
        std::vector<Partition> all;
        for (std::size_t i = 0; i < classes.size(); ++i) {
          const auto& [eta, x] = terms[i][choices[c][i]];
          coeff *= x;
          all.push_back(eta);
        }
        all.insert(all.end(), profiles.begin(), profiles.end());
        return coeff * hurwitz_number_padded(target_genus, d, all, Execution::serial);
      },
      ex);
}

Rational gwh_substitution(int target_genus, int d, const std::vector<int>& k, const std::vector<Partition>& profiles,
                          Execution ex) {
  std::vector<ClassAlgebraElement> classes;
  Rational scale = 1;
  for (int ki : k) {
    if (ki < -2) throw std::invalid_argument("descendent index below -2");
    if (ki == -1) return 0;
    if (ki == -2) continue;
    classes.push_back(cached_completed_cycle(ki + 1));
    scale /= Rational(factorial(ki));
  }
  return scale * hurwitz_with_classes(target_genus, d, classes, profiles, ex);
}

bool degeneration_check(int target_genus, int d, const std::vector<int>& k) {
  const Rational lhs = stationary_disconnected(target_genus, d, k);
  const std::vector<Partition> parts = enumerate_partitions(d);
  const Partition trivial = Partition::ones(d);

  std::vector<std::vector<Rational>> local(k.size());
  for (std::size_t i = 0; i < k.size(); ++i)
    for (const auto& m : parts) local[i].push_back(Rational(z_factor(m)) * relative_p1_disconnected(m, trivial, {k[i]}));

  Rational rhs = 0;
  for_each_tuple(std::vector<std::size_t>(k.size(), parts.size()), [&](const std::vector<std::size_t>& idx) {
    Rational w = 1;
    std::vector<Partition> profiles;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      w *= local[i][idx[i]];
      profiles.push_back(parts[idx[i]]);
    }
    if (w != 0) rhs += w * hurwitz_number(target_genus, d, profiles);
  });
  if (lhs != rhs) return false;
  if (target_genus != 1) return true;

  Rational trace = 0;
  for (const auto& m : parts)
    trace += Rational(z_factor(m)) *
             coefficient_at(relative_series_operator(m, m, static_cast<int>(k.size()), order_for(k)), k);
  return lhs == trace;
}

bool hurwitz_degeneration_check(int target_genus, int d, const std::vector<int>& k) {
  std::vector<ClassAlgebraElement> classes;
  for (int ki : k) classes.push_back(cached_completed_cycle(ki + 1));
  const Rational lhs = hurwitz_with_classes(target_genus, d, classes, {});
  const std::vector<Partition> parts = enumerate_partitions(d);

  std::vector<std::vector<Rational>> local(k.size());
  for (std::size_t i = 0; i < k.size(); ++i)
    for (const auto& m : parts)
      local[i].push_back(Rational(z_factor(m)) * hurwitz_with_classes(0, d, {classes[i]}, {m}, Execution::serial));

  Rational rhs = 0;
  for_each_tuple(std::vector<std::size_t>(k.size(), parts.size()), [&](const std::vector<std::size_t>& idx) {
    Rational w = 1;
    std::vector<Partition> profiles;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      w *= local[i][idx[i]];
      profiles.push_back(parts[idx[i]]);
    }
    if (w != 0) rhs += w * hurwitz_number(target_genus, d, profiles);
  });
  return lhs == rhs;
}

bool trivial_parts_check(const Partition& mu, int k) {
  const int d = mu.size();
  const Rational lhs = relative_p1_disconnected(mu, Partition::ones(d), {k});
  Rational rhs = 0;
  for (int i = 0; i <= mu.multiplicity(1); ++i)
    rhs += one_point_connected(mu.without(1, i), Partition::ones(d - i), k) / Rational(factorial(i));
  return lhs == rhs;
}

bool completion_coefficient_check(int k, const Partition& mu) {
  const Rational lhs = completion_coefficient(k + 1, mu) / Rational(factorial(k));
  const Partition trivial = Partition::ones(mu.size());
  const Rational z(z_factor(mu));
  const Rational closed = z * one_point_connected(mu, trivial, k);
  const Rational logged = z * connected_relative(mu, trivial, {k}, [](const Partition& a, const Partition& b,
                                                                      const std::vector<int>& kk) {
                            return relative_p1_disconnected(a, b, kk, Execution::serial);
                          });
  return lhs == closed && lhs == logged;
}

namespace {

Rational operator_relative(const Partition& mu, const Partition& nu, const std::vector<int>& k) {
  if (mu.size() != nu.size()) return 0;
  const int n = static_cast<int>(k.size());
  return coefficient_at(relative_series_operator(mu, nu, n, order_for(k)), k);
}

Rational closed_connected(const Partition& mu, const Partition& nu, const std::vector<int>& k) {
  if (mu.size() != nu.size()) return 0;
  const int n = static_cast<int>(k.size());
  if (n == 0) return mu == nu && mu.length() == 1 ? Rational(1, mu.part(0)) : Rational(0);
  if (n == 1) return one_point_connected(mu, nu, k[0]);
  return coefficient_at(n_point_closed_form(mu, nu, n, order_for(k)), k);
}

}  // namespace

InvariantResult evaluate(const InvariantQuery& q, Pipeline p, Execution ex) {
  if (q.degree < 0) throw std::invalid_argument("negative degree");
  for (int ki : q.k)
    if (ki < -2) throw std::invalid_argument("descendent index below -2");
  if (q.k.size() > 16) throw std::invalid_argument("too many insertions");
  InvariantResult r;
  r.domain_genus = domain_genus(q);

  if (q.mu.has_value() != q.nu.has_value()) throw std::invalid_argument("give both relative profiles or neither");
  if (q.mu) {
    if (q.target_genus != 0) throw std::invalid_argument("relative profiles need target genus 0");
    if (q.mu->size() != q.degree || q.nu->size() != q.degree)
      throw std::invalid_argument("relative profiles must have size equal to the degree");
    RelativeValues disconnected;
    switch (p) {
      case Pipeline::character:
        disconnected = [ex](const Partition& a, const Partition& b, const std::vector<int>& k) {
          return relative_p1_disconnected(a, b, k, ex);
        };
        break;
      case Pipeline::operator_formalism: disconnected = operator_relative; break;
      case Pipeline::substitution:
        disconnected = [ex](const Partition& a, const Partition& b, const std::vector<int>& k) -> Rational {
          if (a.size() != b.size()) return 0;
          return gwh_substitution(0, a.size(), k, {a, b}, ex);
        };
        break;
      case Pipeline::closed:
        r.value = q.connected ? closed_connected(*q.mu, *q.nu, q.k) : disconnected_relative(*q.mu, *q.nu, q.k, closed_connected);
        return r;
    }
    r.value = q.connected ? connected_relative(*q.mu, *q.nu, q.k, disconnected) : disconnected(*q.mu, *q.nu, q.k);
    return r;
  }

  AbsoluteValues disconnected;
  const int g = q.target_genus;
  switch (p) {
    case Pipeline::character:
      disconnected = [g, ex](int d, const std::vector<int>& k) { return stationary_disconnected(g, d, k, ex); };
      break;
    case Pipeline::substitution:
      disconnected = [g, ex](int d, const std::vector<int>& k) { return gwh_substitution(g, d, k, {}, ex); };
      break;
    case Pipeline::operator_formalism:
      if (g == 0) {
        disconnected = [](int d, const std::vector<int>& k) {
          return operator_relative(Partition::ones(d), Partition::ones(d), k);
        };
      } else if (g == 1) {
        disconnected = [](int d, const std::vector<int>& k) {
          Rational s = 0;
          for (const auto& m : enumerate_partitions(d)) s += Rational(z_factor(m)) * operator_relative(m, m, k);
          return s;
        };
      } else {
        throw std::invalid_argument("operator pipeline covers target genus 0 and 1");
      }
      break;
    case Pipeline::closed: {
      if (g != 0) throw std::invalid_argument("closed pipeline covers target genus 0");
      const Partition trivial = Partition::ones(q.degree);
      r.value = q.connected ? closed_connected(trivial, trivial, q.k)
                            : disconnected_relative(trivial, trivial, q.k, closed_connected);
      return r;
    }
  }
  r.value = q.connected ? connected_absolute(q.degree, q.k, disconnected) : disconnected(q.degree, q.k);
  return r;
}

}  // namespace gwh
