#include "gwh/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gwh/characters.hpp"
#include "gwh/completion.hpp"
#include "gwh/config.hpp"
#include "gwh/elliptic.hpp"
#include "gwh/fock.hpp"
#include "gwh/gw.hpp"
#include "gwh/hurwitz.hpp"
#include "gwh/oracle.hpp"
#include "gwh/shifted.hpp"

namespace gwh {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& label) {
    if (ok) {
      ++r_.passed;
    } else {
      ++r_.failed;
      if (r_.failures.size() < 10) r_.failures.push_back(label);
    }
  }
  // Runs fn, counting an exception as a failure.
  void check(const std::function<bool()>& fn, const std::string& label) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      check(false, label + ": " + e.what());
      return;
    }
    check(ok, label);
  }
  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

std::string label(const std::vector<Partition>& ps) {
  std::string s;
  for (const auto& p : ps) s += p.to_string();
  return s;
}

std::string label(const std::vector<int>& k) {
  std::string s = "[";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + "]";
}

// Non-decreasing tuples of length n with entries in [lo, hi].
std::vector<std::vector<int>> index_multisets(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= hi; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

SuiteResult hurwitz_suite(int max_degree, Execution ex) {
  Tally t("hurwitz");
  for (int g = 0; g <= 1; ++g) {
    const int top = std::min({max_degree, kMaxOracleDegree,
                              g == 0 ? limits().oracle_degree_genus0 : limits().oracle_degree_genus1});
    for (int d = 1; d <= top; ++d) {
      const auto parts = enumerate_partitions(d);
      const int max_profiles = g == 0 ? 3 : 2;
      for (int n = 0; n <= max_profiles; ++n)
        for (const auto& idx : index_multisets(n, 0, static_cast<int>(parts.size()) - 1)) {
          std::vector<Partition> profiles;
          for (int i : idx) profiles.push_back(parts[static_cast<std::size_t>(i)]);
          t.check([&] {
            const Rational burn = hurwitz_number(g, d, profiles, ex);
            return burn == hurwitz_oracle(g, d, profiles, ex) && burn == hurwitz_number_strict(g, d, profiles, ex);
          }, "g=" + std::to_string(g) + " d=" + std::to_string(d) + " " + label(profiles));
        }
    }
  }
  return t.result();
}

SuiteResult characters_suite(int max_degree) {
  Tally t("characters");
  for (int d = 1; d <= std::min(max_degree, limits().character_degree); ++d) {
    const auto parts = enumerate_partitions(d);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        Integer s = 0;
        for (const auto& l : parts) s += character(l, a) * character(l, b);
        t.check(s == (a == b ? z_factor(a) : Integer(0)), "orthogonality " + a.to_string() + b.to_string());
      }
    Integer squares = 0;
    for (const auto& l : parts) squares += dimension(l) * dimension(l);
    t.check(squares == factorial(d), "sum of squared dimensions d=" + std::to_string(d));
  }
  return t.result();
}

SuiteResult completion_suite(int max_degree) {
  Tally t("completion");
  for (int k = 1; k <= max_degree; ++k) {
    t.check([&] {
      const ClassAlgebraElement c = fourier_invert([k](const Partition& l) -> Rational { return p_k(k, l).value / k; }, k);
      return c == completed_cycle(k);
    }, "completed cycle " + std::to_string(k));
    t.check(completion_coefficient(k, Partition({k})) == 1, "leading coefficient " + std::to_string(k));
  }
  for (int k = 0; k < max_degree; ++k)
    for (const auto& mu : partitions_up_to(k + 1))
      t.check([&] { return completion_coefficient_check(k, mu); }, "connected one-point " + std::to_string(k) + mu.to_string());
  return t.result();
}

SuiteResult fock_suite(int max_degree) {
  Tally t("fock");
  for (int k = 1; k <= std::min(max_degree, 6); ++k)
    for (const auto& l : partitions_up_to(std::min(max_degree, 6))) {
      FockVector v = apply_P(k, FockVector::basis(l, 0, l.size()));
      t.check(v.coefficient(l).coeff({}) == p_k(k, l).value, "P eigenvalue " + std::to_string(k) + l.to_string());
    }
  for (int d = 0; d <= std::min(max_degree, 4); ++d)
    for (const auto& mu : enumerate_partitions(d))
      for (const auto& nu : enumerate_partitions(d))
        for (int n = 0; n <= 2; ++n)
          t.check([&] {
            const int order = 8;
            return agree_below(relative_series_operator(mu, nu, n, order), relative_series_character(mu, nu, n, order),
                               order);
          }, "operator vs character " + mu.to_string() + nu.to_string() + " n=" + std::to_string(n));
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      t.check([&] { return commutator_check(a, b, 6, 6); }, "commutator " + std::to_string(a) + "," + std::to_string(b));
  for (const auto& a : std::vector<std::vector<int>>{{1, -1}, {2, -2}, {1, 1, -2}, {2, -1, -1}, {1, 0, -1}})
    t.check([&] { return agree_below(g_function(a, 6), g_function_direct(a, 6), 6); }, "connected correlator " + label(a));
  return t.result();
}

SuiteResult gw_suite(int max_degree, Execution ex) {
  Tally t("gw");
  const int top = std::min(max_degree, 5);
  for (int g = 0; g <= 2; ++g)
    for (int d = 0; d <= top; ++d)
      for (int n = 0; n <= 3; ++n)
        for (const auto& k : index_multisets(n, 0, 4))
          t.check([&] { return gwh_substitution(g, d, k, {}, ex) == stationary_disconnected(g, d, k, ex); },
                  "substitution g=" + std::to_string(g) + " d=" + std::to_string(d) + " k=" + label(k));
  for (int g = 0; g <= 1; ++g)
    for (int d = 0; d <= std::min(max_degree, 4); ++d)
      for (int n = 0; n <= 2; ++n)
        for (const auto& k : index_multisets(n, 0, 4)) {
          const std::string where = "g=" + std::to_string(g) + " d=" + std::to_string(d) + " k=" + label(k);
          t.check([&] { return degeneration_check(g, d, k); }, "degeneration " + where);
          t.check([&] { return hurwitz_degeneration_check(g, d, k); }, "Hurwitz degeneration " + where);
        }
  for (int d = 0; d <= std::min(max_degree, 5); ++d)
    for (const auto& mu : enumerate_partitions(d))
      for (const auto& nu : enumerate_partitions(d))
        t.check([&] {
          const LaurentSeries closed = one_point_closed_form(mu, nu, 9);
          const int shift = mu.length() + nu.length() - 1;
          const MultiSeries logged = relative_connected_series(mu, nu, 1, 9 + shift);
          for (int e = 0; e < 9; ++e)
            if (closed.coeff(e) != logged.coeff({e + shift})) return false;
          return true;
        }, "one-point closed form " + mu.to_string() + nu.to_string());
  for (int d = 0; d <= std::min(max_degree, 3); ++d)
    for (const auto& mu : enumerate_partitions(d))
      for (const auto& nu : enumerate_partitions(d)) {
        t.check([&] {
          return agree_below(n_point_closed_form(mu, nu, 2, 6), relative_connected_series(mu, nu, 2, 6), 6);
        }, "two-point closed form " + mu.to_string() + nu.to_string());
        for (int n = 1; n <= 2; ++n)
          t.check([&] { return toda_recurrence_check(mu, nu, n, 6); },
                  "Toda " + mu.to_string() + nu.to_string() + " n=" + std::to_string(n));
      }
  for (int d = 0; d <= std::min(max_degree, 4); ++d)
    for (const auto& mu : enumerate_partitions(d))
      for (int k = -2; k <= 6; ++k)
        t.check([&] { return trivial_parts_check(mu, k); }, "trivial parts " + mu.to_string() + " k=" + std::to_string(k));
  return t.result();
}

SuiteResult elliptic_suite(int max_degree, Execution ex) {
  Tally t("elliptic");
  const int q = std::min(max_degree + 1, limits().q_order);
  for (int n = 0; n <= 2; ++n)
    t.check([&] {
      const QZSeries a = elliptic_npoint_trace(n, q, 6, ex);
      const QZSeries b = theta_determinant_npoint(n, q, 6);
      for (int m = 0; m <= q; ++m)
        if (!agree_below(a[static_cast<std::size_t>(m)], b[static_cast<std::size_t>(m)], 6))
          return false;
      return true;
    }, "trace vs theta n=" + std::to_string(n));
  const int fit_degree = std::max(limits().q_order, 12);
  const QSeries euler = QSeries::euler_product(fit_degree);
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : index_multisets(n, 0, 6)) {
      int weight = 0;
      for (int ki : k) weight += ki + 2;
      if (weight > 8) continue;
      t.check([&] {
        return quasimodularity_fit(euler * elliptic_stationary_series(k, fit_degree, ex), weight).ok;
      }, "quasimodular k=" + label(k));
    }
  return t.result();
}

}  // namespace

std::vector<std::string> suite_names() { return {"hurwitz", "characters", "completion", "fock", "gw", "elliptic"}; }

SuiteResult run_suite(const std::string& name, int max_degree, Execution ex) {
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  if (name == "hurwitz") return hurwitz_suite(max_degree, ex);
  if (name == "characters") return characters_suite(max_degree);
  if (name == "completion") return completion_suite(max_degree);
  if (name == "fock") return fock_suite(max_degree);
  if (name == "gw") return gw_suite(max_degree, ex);
  if (name == "elliptic") return elliptic_suite(max_degree, ex);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace gwh
