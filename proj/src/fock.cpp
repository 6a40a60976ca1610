#include "gwh/fock.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gwh/shifted.hpp"

namespace gwh {

int energy_shift(const WedgeOperator& op) {
  if (const auto* a = std::get_if<Alpha>(&op)) return -a->k;
  if (const auto* e = std::get_if<Ecal>(&op)) return -e->r;
  return 0;
}

FockVector FockVector::basis(const Partition& lambda, int nvars, int cutoff) {
  FockVector v(nvars, cutoff);
  v.add(lambda, MultiSeries::constant(nvars, 1));
  return v;
}

void FockVector::add(const Partition& lambda, const MultiSeries& c) {
  if (c.is_zero()) {
    // Keep track of truncation even for zero coefficients of existing terms.
    auto it = terms_.find(lambda);
    if (it != terms_.end()) it->second += c;
    return;
  }
  if (lambda.size() > cutoff_) throw std::out_of_range("energy cutoff exceeded");
  if (c.nvars() != nvars_) throw std::invalid_argument("coefficient in a different ring");
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiSeries FockVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? MultiSeries(nvars_, kExactOrder) : it->second;
}

void FockVector::restrict_energy(int e) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() > e)
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::vector<LevelMove> level_moves(const Partition& lambda, int r) {
  std::vector<LevelMove> out;
  if (r == 0) return out;
  const int len = lambda.length();
  const int reach = std::abs(r);
  // Occupied levels m_i = lambda_i - i; everything below the window is occupied.
  std::vector<int> occupied;
  for (int i = 1; i <= len + reach + 1; ++i) occupied.push_back(lambda.part(i - 1) - i);
  const std::set<int> occ(occupied.begin(), occupied.end());
  const int floor_level = -(len + reach + 1);
  for (int s : occupied) {
    const int t = s - r;
    if (t < floor_level || occ.count(t)) continue;
    int between = 0;
    for (int m : occupied)
      if (m > std::min(s, t) && m < std::max(s, t)) ++between;
    std::vector<int> moved = occupied;
    *std::find(moved.begin(), moved.end(), s) = t;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts;
    for (int i = 1; i <= static_cast<int>(moved.size()); ++i) {
      int p = moved[static_cast<std::size_t>(i - 1)] + i;
      if (p > 0) parts.push_back(p);
    }
    out.push_back({Partition(std::move(parts)), between % 2 == 0 ? 1 : -1, ratio(2 * s + 1 - r, 2)});
  }
  return out;
}

FockVector apply_alpha(int k, const FockVector& v) {
  if (k == 0) throw std::invalid_argument("alpha_0 is not used");
  FockVector out(v.nvars(), v.cutoff());
  for (const auto& [lambda, c] : v.terms())
    for (const auto& m : level_moves(lambda, k)) out.add(m.result, c * Rational(m.sign));
  return out;
}

namespace {

LaurentSeries normal_ordered_eigenvalue(const Partition& lambda, int order) {
  LaurentSeries e = LaurentSeries::zero(order);
  for (int i = 1; i <= lambda.length(); ++i) {
    e += LaurentSeries::exp_linear(Rational(2 * (lambda.part(i - 1) - i) + 1, 2), order);
    e -= LaurentSeries::exp_linear(Rational(-2 * i + 1, 2), order);
  }
  return e;
}

}  // namespace

FockVector apply_E(int r, const LinearForm& L, const FockVector& v, int order, bool include_constant) {
  if (L.nvars() != v.nvars()) throw std::invalid_argument("linear form in a different ring");
  FockVector out(v.nvars(), v.cutoff());
  if (r == 0) {
    MultiSeries constant(v.nvars(), order);
    if (include_constant) constant = MultiSeries::substitute(inverse_sigma_series(order), L);
    for (const auto& [lambda, c] : v.terms()) {
      MultiSeries eig = MultiSeries::substitute(normal_ordered_eigenvalue(lambda, order), L);
      if (include_constant) eig += constant;
      out.add(lambda, c * eig);
    }
    return out;
  }
  std::map<Rational, MultiSeries> exps;
  for (const auto& [lambda, c] : v.terms()) {
    for (const auto& m : level_moves(lambda, r)) {
      auto it = exps.find(m.exponent);
      if (it == exps.end())
        it = exps.emplace(m.exponent, MultiSeries::substitute(LaurentSeries::exp_linear(m.exponent, order), L)).first;
      out.add(m.result, c * it->second * Rational(m.sign));
    }
  }
  return out;
}

FockVector apply_P(int k, const FockVector& v) {
  if (k < 1) throw std::invalid_argument("P_k needs k >= 1");
  FockVector out(v.nvars(), v.cutoff());
  for (const auto& [lambda, c] : v.terms()) out.add(lambda, c * p_k(k, lambda).value);
  return out;
}

FockVector apply_operator(const WedgeOperator& op, const FockVector& v, int order) {
  if (const auto* a = std::get_if<Alpha>(&op)) return apply_alpha(a->k, v);
  if (const auto* e = std::get_if<Ecal>(&op)) return apply_E(e->r, e->z, v, order);
  return apply_P(std::get<Pk>(op).k, v);
}

MultiSeries vacuum_expectation(const std::vector<WedgeOperator>& ops, int nvars, int order) {
  int balance = 0, cutoff = 0, poles = 0;
  for (const auto& op : ops) {
    balance += energy_shift(op);
    cutoff += std::max(0, energy_shift(op));
    if (const auto* e = std::get_if<Ecal>(&op); e && e->r == 0) ++poles;
  }
  if (balance != 0) return MultiSeries(nvars, order);
  const int working = order + poles;
  // lowering[j] = energy the operators left of position j can still remove.
  std::vector<int> lowering(ops.size() + 1, 0);
  for (std::size_t j = 0; j < ops.size(); ++j) lowering[j + 1] = lowering[j] + std::max(0, -energy_shift(ops[j]));
  FockVector v = FockVector::vacuum(nvars, cutoff);
  for (std::size_t j = ops.size(); j-- > 0;) {
    v = apply_operator(ops[j], v, working);
    v.restrict_energy(lowering[j]);
  }
  MultiSeries r = v.coefficient(Partition());
  return r.order() > order ? r.truncated(order) : r;
}

namespace {

// Power series sigma(a u)/sigma(u), known below u^order.
LaurentSeries central_ratio(int a, int order) {
  return sigma_series(order + 1).scaled_argument(a) * inverse_sigma_series(order);
}

bool same_vectors(const FockVector& x, const FockVector& y, int order) {
  std::set<Partition> keys;
  for (const auto& [l, c] : x.terms()) keys.insert(l);
  for (const auto& [l, c] : y.terms()) keys.insert(l);
  for (const auto& l : keys)
    if (!agree_below(x.coefficient(l), y.coefficient(l), order)) return false;
  return true;
}

}  // namespace

bool commutator_check(int a, int b, int order, int cutoff) {
  const LinearForm z = LinearForm::variable(0, 2);
  const LinearForm w = LinearForm::variable(1, 2);
  const int working = order + 2;
  for (int d = 0; d <= cutoff; ++d) {
    if (std::max({d - a, d - b, d - a - b}) > cutoff) continue;
    for (const auto& lambda : enumerate_partitions(d)) {
      const FockVector v = FockVector::basis(lambda, 2, cutoff);
      FockVector lhs = apply_E(a, z, apply_E(b, w, v, working), working);
      const FockVector ba = apply_E(b, w, apply_E(a, z, v, working), working);
      for (const auto& [l, c] : ba.terms()) lhs.add(l, -c);

      FockVector rhs(2, cutoff);
      const LinearForm det = w * a + z * (-b);
      const MultiSeries factor = MultiSeries::substitute(sigma_series(working), det);
      if (a + b != 0) {
        const FockVector image = apply_E(a + b, z + w, v, working);
        for (const auto& [l, c] : image.terms()) rhs.add(l, factor * c);
      } else if (a != 0) {
        const FockVector image = apply_E(0, z + w, v, working, false);
        for (const auto& [l, c] : image.terms()) rhs.add(l, factor * c);
        rhs.add(lambda, MultiSeries::substitute(central_ratio(a, working), z + w));
      }
      if (!same_vectors(lhs, rhs, order)) return false;
    }
  }
  return true;
}

namespace {

// Numerator of the recursion: every term ends in G(0; sum z) = 1/sigma(sum z),
// which is left out here.
MultiSeries g_numerator(const std::vector<int>& a, const std::vector<LinearForm>& forms, int nvars, int order) {
  if (a.size() == 1) return a[0] == 0 ? MultiSeries::constant(nvars, 1) : MultiSeries(nvars, order);
  MultiSeries total(nvars, order);
  if (a[0] <= 0) return total;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const LinearForm det = forms[i] * a[0] + forms[0] * (-a[i]);
    if (det.is_zero()) continue;
    std::vector<int> a2(a.begin() + 1, a.end());
    std::vector<LinearForm> f2(forms.begin() + 1, forms.end());
    a2[i - 1] += a[0];
    f2[i - 1] = f2[i - 1] + forms[0];
    MultiSeries rest = g_numerator(a2, f2, nvars, order);
    if (rest.is_zero()) continue;
    total += MultiSeries::substitute(sigma_series(order), det) * rest;
  }
  return total;
}

int sum_of(const std::vector<int>& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

}  // namespace

MultiSeries g_function(const std::vector<int>& a, int order) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("G needs at least one entry");
  if (sum_of(a) != 0) return MultiSeries(n, order);
  if (n == 1) return MultiSeries::from_univariate(inverse_sigma_series(order), 0, 1);
  std::vector<LinearForm> forms;
  for (int i = 0; i < n; ++i) forms.push_back(LinearForm::variable(i, n));
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  const LinearForm s = LinearForm::sum_of(all, n);
  MultiSeries N = g_numerator(a, forms, n, order + 1);
  N = N * MultiSeries::substitute(inverse_S_series(order + 1), s);
  MultiSeries G = divide_by_linear_form(N, s);
  return G.order() > order ? G.truncated(order) : G;
}

MultiSeries g_function_direct(const std::vector<int>& a, int order) {
  const int n = static_cast<int>(a.size());
  if (n == 0) throw std::invalid_argument("G needs at least one entry");
  const int working = order + n;
  const unsigned full = (1u << n) - 1;
  std::vector<MultiSeries> V(full + 1), C(full + 1);
  for (unsigned T = 1; T <= full; ++T) {
    std::vector<WedgeOperator> ops;
    for (int i = 0; i < n; ++i)
      if (T & (1u << i)) ops.push_back(Ecal{a[static_cast<std::size_t>(i)], LinearForm::variable(i, n)});
    V[T] = vacuum_expectation(ops, n, working);
  }
  V[0] = MultiSeries::constant(n, 1);
  for (unsigned T = 1; T <= full; ++T) {
    const unsigned low = T & (~T + 1);
    MultiSeries c = V[T];
    // Subsets B of T containing the lowest element, B != T.
    for (unsigned B = (T - 1) & T; B; B = (B - 1) & T) {
      if (!(B & low)) continue;
      c -= C[B] * V[T & ~B];
    }
    C[T] = c;
  }
  MultiSeries G = C[full];
  return G.order() > order ? G.truncated(order) : G;
}

std::vector<MultiSeries> trace_qH(const std::vector<WedgeOperator>& ops, int nvars, int q_order, int z_order,
                                  Execution ex) {
  std::vector<LinearForm> forms;
  for (const auto& op : ops) {
    const auto* e = std::get_if<Ecal>(&op);
    if (!e || e->r != 0) throw std::invalid_argument("trace restricted to diagonal products");
    forms.push_back(e->z);
  }
  const int working = z_order + static_cast<int>(ops.size());
  const std::vector<Partition> lambdas = partitions_up_to(q_order);
  auto terms = indexed_map<MultiSeries>(
      lambdas.size(),
      [&](std::size_t i) {
        MultiSeries t = MultiSeries::constant(nvars, 1);
        for (const auto& L : forms) t = t * MultiSeries::substitute(e_series(lambdas[i], working), L);
        return t.order() > z_order ? t.truncated(z_order) : t;
      },
      ex);
  std::vector<MultiSeries> out(static_cast<std::size_t>(q_order + 1), MultiSeries(nvars, z_order));
  for (std::size_t i = 0; i < lambdas.size(); ++i) out[static_cast<std::size_t>(lambdas[i].size())] += terms[i];
  return out;
}

}  // namespace gwh
