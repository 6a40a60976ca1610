#include "gwh/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gwh/fock.hpp"
#include "gwh/gw.hpp"
#include "gwh/linalg.hpp"

namespace gwh {

QZSeries elliptic_npoint_trace(int n, int q_degree, int z_order, Execution ex) {
  std::vector<WedgeOperator> ops;
  for (int i = 0; i < n; ++i) ops.emplace_back(Ecal{0, LinearForm::variable(i, n)});
  return trace_qH(ops, n, q_degree, z_order, ex);
}

QSeries elliptic_stationary_series(const std::vector<int>& k, int q_degree, Execution ex) {
  std::vector<Rational> c(static_cast<std::size_t>(q_degree + 1));
  for (int d = 0; d <= q_degree; ++d) c[static_cast<std::size_t>(d)] = stationary_disconnected(1, d, k, ex);
  return QSeries(std::move(c));
}

std::vector<LaurentSeries> theta_series(int derivative, int q_degree, int z_order) {
  std::vector<LaurentSeries> out(static_cast<std::size_t>(q_degree + 1), LaurentSeries::zero(z_order));
  // q^{n(n+1)/2} carries the terms n and -1-n.
  for (int n = 0; n * (n + 1) / 2 <= q_degree; ++n) {
    const Rational half(2 * n + 1, 2);
    const Rational sign = n % 2 == 0 ? 1 : -1;
    LaurentSeries t = LaurentSeries::exp_linear(half, z_order) * (sign * power(half, derivative));
    t -= LaurentSeries::exp_linear(-half, z_order) * (sign * power(-half, derivative));
    out[static_cast<std::size_t>(n * (n + 1) / 2)] += t;
  }
  return out;
}

namespace {

QZSeries qz_mul(const QZSeries& a, const QZSeries& b) {
  const std::size_t D = std::min(a.size(), b.size());
  QZSeries out;
  for (std::size_t m = 0; m < D; ++m) {
    MultiSeries s = a[0] * b[m];
    for (std::size_t j = 1; j <= m; ++j) s += a[j] * b[m - j];
    out.push_back(std::move(s));
  }
  return out;
}

QZSeries qz_add(QZSeries a, const QZSeries& b) {
  for (std::size_t m = 0; m < a.size(); ++m) a[m] += b[m];
  return a;
}

QZSeries qz_substitute(const std::vector<LaurentSeries>& f, const LinearForm& L) {
  QZSeries out;
  for (const auto& fm : f) out.push_back(MultiSeries::substitute(fm, L));
  return out;
}

// Coefficients in q of u / theta(u).
std::vector<LaurentSeries> inverse_theta_quotient(int q_degree, int z_order) {
  const std::vector<LaurentSeries> theta = theta_series(0, q_degree, z_order + 1);
  std::vector<LaurentSeries> phi;
  for (const auto& t : theta) phi.push_back(t.shifted(-1));
  std::vector<LaurentSeries> psi{series_invert(phi[0])};
  for (int m = 1; m <= q_degree; ++m) {
    LaurentSeries s = LaurentSeries::zero(z_order);
    for (int j = 1; j <= m; ++j) s += phi[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(m - j)];
    psi.push_back(-(psi[0] * s));
  }
  return psi;
}

QZSeries determinant(const std::vector<std::vector<QZSeries>>& M) {
  const int n = static_cast<int>(M.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  QZSeries total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    QZSeries term = M[0][static_cast<std::size_t>(perm[0])];
    for (int i = 1; i < n; ++i) term = qz_mul(term, M[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    if (inversions % 2) for (auto& t : term) t = -t;
    total = total.empty() ? term : qz_add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

QZSeries theta_determinant_npoint(int n, int q_degree, int z_order) {
  if (n < 0 || n > 3) throw std::invalid_argument("theta determinant supports n <= 3");
  const QSeries inv_euler = QSeries::euler_product(q_degree).inverse();
  if (n == 0) {
    QZSeries out;
    for (int m = 0; m <= q_degree; ++m) out.push_back(MultiSeries::constant(0, inv_euler.coeff(m)));
    return out;
  }
  const int working = z_order + n + 1;
  std::vector<std::vector<LaurentSeries>> theta_derivs;
  for (int k = 0; k <= n; ++k) {
    std::vector<LaurentSeries> t = theta_series(k, q_degree, working);
    const Rational scale = ratio(1, factorial(k));
    for (auto& s : t) s *= scale;
    theta_derivs.push_back(std::move(t));
  }
  const std::vector<LaurentSeries> psi = inverse_theta_quotient(q_degree, working);

  std::vector<std::vector<int>> orders;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do orders.push_back(sigma);
  while (std::next_permutation(sigma.begin(), sigma.end()));

  auto partial = [n](const std::vector<int>& s, int m) {
    return LinearForm::sum_of(std::vector<int>(s.begin(), s.begin() + m), n);
  };
  // Every denominator form, multi-variable ones first.
  std::vector<LinearForm> forms;
  for (const auto& s : orders)
    for (int j = 1; j <= n; ++j)
      if (std::find(forms.begin(), forms.end(), partial(s, j)) == forms.end()) forms.push_back(partial(s, j));
  std::stable_partition(forms.begin(), forms.end(), [](const LinearForm& L) { return L.single_variable() < 0; });

  QZSeries numerator;
  for (const auto& s : orders) {
    std::vector<std::vector<QZSeries>> M(static_cast<std::size_t>(n), std::vector<QZSeries>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const int k = j - i + 1;
        QZSeries& entry = M[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (k < 0) entry.assign(static_cast<std::size_t>(q_degree + 1), MultiSeries(n, kExactOrder));
        else entry = qz_substitute(theta_derivs[static_cast<std::size_t>(k)], partial(s, n - j));
      }
    QZSeries term = determinant(M);
    std::vector<LinearForm> own;
    for (int j = 1; j <= n; ++j) {
      own.push_back(partial(s, j));
      term = qz_mul(term, qz_substitute(psi, own.back()));
    }
    for (const auto& L : forms)
      if (std::find(own.begin(), own.end(), L) == own.end())
        for (auto& t : term) t = t * MultiSeries::linear(L);
    numerator = numerator.empty() ? term : qz_add(numerator, term);
  }

  for (auto& t : numerator)
    for (const auto& L : forms) t = divide_by_linear_form(t, L);

  QZSeries out;
  for (int m = 0; m <= q_degree; ++m) {
    MultiSeries s(n, kExactOrder);
    for (int j = 0; j <= m; ++j) s += numerator[static_cast<std::size_t>(j)] * inv_euler.coeff(m - j);
    if (s.order() < z_order) throw std::logic_error("theta determinant lost precision");
    out.push_back(s.order() > z_order ? s.truncated(z_order) : s);
  }
  return out;
}

QSeries eisenstein_series(int weight, int q_degree) {
  Rational constant;
  switch (weight) {
    case 2: constant = Rational(-1, 24); break;
    case 4: constant = Rational(1, 240); break;
    case 6: constant = Rational(-1, 504); break;
    default: throw std::invalid_argument("Eisenstein series of weight 2, 4 or 6");
  }
  std::vector<Rational> c(static_cast<std::size_t>(q_degree + 1), 0);
  c[0] = constant;
  for (int n = 1; n <= q_degree; ++n) {
    Integer s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(weight - 1));
        s += p;
      }
    c[static_cast<std::size_t>(n)] = Rational(s);
  }
  return QSeries(std::move(c));
}

std::vector<std::array<int, 3>> weight_monomials(int weight) {
  std::vector<std::array<int, 3>> out;
  if (weight < 0 || weight % 2 != 0) return out;
  for (int a = weight / 2; a >= 0; --a)
    for (int b = (weight - 2 * a) / 4; b >= 0; --b) {
      const int rest = weight - 2 * a - 4 * b;
      if (rest % 6 == 0) out.push_back({a, b, rest / 6});
    }
  return out;
}

QuasimodularFit quasimodularity_fit(const QSeries& series, int weight, int held_out) {
  QuasimodularFit fit;
  fit.monomials = weight_monomials(weight);
  const int D = series.degree();
  const int m = static_cast<int>(fit.monomials.size());
  if (D + 1 < m + held_out) throw std::invalid_argument("series too short for the fit");

  const QSeries e2 = eisenstein_series(2, D), e4 = eisenstein_series(4, D), e6 = eisenstein_series(6, D);
  std::vector<QSeries> basis;
  for (const auto& [a, b, c] : fit.monomials) {
    std::vector<Rational> one(static_cast<std::size_t>(D + 1), 0);
    one[0] = 1;
    QSeries p(std::move(one));
    for (int i = 0; i < a; ++i) p = p * e2;
    for (int i = 0; i < b; ++i) p = p * e4;
    for (int i = 0; i < c; ++i) p = p * e6;
    basis.push_back(p);
  }

  Matrix A;
  std::vector<Rational> rhs;
  int prefix = 0;
  while (matrix_rank(A) < m) {
    if (prefix > D) {
      fit.message = "basis not determined by the available coefficients";
      return fit;
    }
    std::vector<Rational> row;
    for (const auto& p : basis) row.push_back(p.coeff(prefix));
    A.push_back(std::move(row));
    rhs.push_back(series.coeff(prefix));
    ++prefix;
  }
  fit.fitted = prefix;
  if (D + 1 - prefix < held_out) {
    fit.message = "series too short for the held-out check";
    return fit;
  }
  auto solution = solve_consistent(A, rhs);
  if (!solution) {
    fit.message = "not quasimodular at this weight";
    return fit;
  }
  fit.coefficients = *solution;
  for (int q = prefix; q <= D; ++q) {
    Rational v = 0;
    for (int i = 0; i < m; ++i) v += fit.coefficients[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(i)].coeff(q);
    if (v != series.coeff(q)) {
      fit.message = "not quasimodular at this weight";
      return fit;
    }
    ++fit.held_out;
  }
  fit.ok = true;
  return fit;
}

}  // namespace gwh
