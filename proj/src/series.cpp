#include "gwh/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gwh {

namespace {

int sat_add(int order, int shift) {
  if (order >= kExactOrder) return kExactOrder;
  long long r = static_cast<long long>(order) + shift;
  if (r >= kExactOrder) return kExactOrder;
  return static_cast<int>(r);
}

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

// ---------------------------------------------------------------------------
// LaurentSeries

LaurentSeries::LaurentSeries(int low, std::vector<Rational> coeffs, int order)
    : low_(low), order_(order), coeffs_(std::move(coeffs)) {
  if (low_ + static_cast<long long>(coeffs_.size()) > order_) {
    coeffs_.resize(static_cast<std::size_t>(std::max(0, order_ - low_)));
  }
  normalize();
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    low_ = order_;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  low_ += static_cast<int>(lead);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentSeries LaurentSeries::zero(int order) { return LaurentSeries(order, {}, order); }

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int order) {
  if (exponent >= order) return zero(order);
  return LaurentSeries(exponent, {c}, order);
}

LaurentSeries LaurentSeries::exp_linear(const Rational& c, int order) {
  std::vector<Rational> out;
  Rational term = 1;
  for (int k = 0; k < order; ++k) {
    out.push_back(term);
    term *= c;
    term /= k + 1;
  }
  return LaurentSeries(0, std::move(out), order);
}

Rational LaurentSeries::coeff(int k) const {
  if (k >= order_) throw std::out_of_range("coefficient beyond truncation order");
  if (k < low_) return 0;
  std::size_t i = static_cast<std::size_t>(k - low_);
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot raise truncation order");
  return LaurentSeries(low_, coeffs_, order);
}

LaurentSeries LaurentSeries::scaled_argument(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= power(c, low_ + static_cast<int>(i));
  return LaurentSeries(low_, std::move(out), order_);
}

LaurentSeries LaurentSeries::shifted(int k) const {
  if (is_zero()) return zero(sat_add(order_, k));
  return LaurentSeries(low_ + k, coeffs_, sat_add(order_, k));
}

LaurentSeries LaurentSeries::derivative() const {
  std::vector<Rational> out;
  int lo = low_ - 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * (low_ + static_cast<int>(i)));
  return LaurentSeries(lo, std::move(out), sat_add(order_, -1));
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  int order = std::min(order_, o.order_);
  int lo = std::min(low_, o.low_);
  int hi = lo;
  if (!coeffs_.empty()) hi = std::max(hi, low_ + static_cast<int>(coeffs_.size()));
  if (!o.coeffs_.empty()) hi = std::max(hi, o.low_ + static_cast<int>(o.coeffs_.size()));
  hi = std::min(hi, order);
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0, hi - lo)));
  for (int k = lo; k < hi; ++k) {
    Rational v = 0;
    if (k >= low_ && k - low_ < static_cast<int>(coeffs_.size())) v += coeffs_[static_cast<std::size_t>(k - low_)];
    if (k >= o.low_ && k - o.low_ < static_cast<int>(o.coeffs_.size())) v += o.coeffs_[static_cast<std::size_t>(k - o.low_)];
    out[static_cast<std::size_t>(k - lo)] = v;
  }
  *this = LaurentSeries(std::min(lo, order), std::move(out), order);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return series_mul(a, b); }

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.order_ == b.order_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str() << "*z^" << low_ + static_cast<int>(i);
  }
  if (first) os << "0";
  if (order_ < kExactOrder) os << " + O(z^" << order_ << ")";
  return os.str();
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  int order = std::min(sat_add(a.order(), b.low()), sat_add(b.order(), a.low()));
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(order);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  const int lo = a.low() + b.low();
  const int hi = std::min(order, lo + static_cast<int>(ca.size() + cb.size()) - 1);
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0, hi - lo)));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size() && lo + static_cast<int>(i + j) < hi; ++j) {
      if (cb[j] == 0) continue;
      out[i + j] += ca[i] * cb[j];
    }
  }
  return LaurentSeries(std::min(lo, order), std::move(out), order);
}

LaurentSeries series_invert(const LaurentSeries& a) {
  if (a.is_zero()) throw std::domain_error("not invertible");
  const int v = a.low();
  if (a.order() >= kExactOrder) {
    if (a.coeffs().size() == 1) return LaurentSeries::monomial(1 / a.coeffs()[0], -v, kExactOrder);
    throw std::invalid_argument("inverse of an exact series needs a truncation order");
  }
  const int n = a.order() - v;  // relative precision
  const Rational a0 = a.coeff(v);
  std::vector<Rational> b(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Rational s = k == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= k; ++j) s -= a.coeff(v + j) * b[static_cast<std::size_t>(k - j)];
    b[static_cast<std::size_t>(k)] = s / a0;
  }
  return LaurentSeries(-v, std::move(b), n - v);
}

LaurentSeries series_pow(const LaurentSeries& a, int e) {
  if (e < 0) return series_pow(series_invert(a), -e);
  LaurentSeries result = LaurentSeries::monomial(1, 0, kExactOrder);
  LaurentSeries base = a;
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

bool agree_below(const LaurentSeries& a, const LaurentSeries& b, int order) {
  if (a.order() < order || b.order() < order) throw std::invalid_argument("series not known to the requested order");
  int lo = std::min(a.low(), b.low());
  for (int k = lo; k < order; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm LinearForm::variable(int var, int nvars) {
  LinearForm L{std::vector<int>(static_cast<std::size_t>(nvars), 0)};
  L.coeffs.at(static_cast<std::size_t>(var)) = 1;
  return L;
}

LinearForm LinearForm::sum_of(const std::vector<int>& vars, int nvars) {
  LinearForm L{std::vector<int>(static_cast<std::size_t>(nvars), 0)};
  for (int v : vars) L.coeffs.at(static_cast<std::size_t>(v)) += 1;
  return L;
}

int LinearForm::single_variable() const {
  int found = -1;
  for (int i = 0; i < nvars(); ++i) {
    if (coeffs[static_cast<std::size_t>(i)] == 0) continue;
    if (found >= 0) return -1;
    found = i;
  }
  return found;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  if (o.nvars() != nvars()) throw std::invalid_argument("linear forms in different rings");
  LinearForm r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

LinearForm LinearForm::operator*(int c) const {
  LinearForm r = *this;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

// ---------------------------------------------------------------------------
// MultiSeries

MultiSeries::MultiSeries(int nvars, int order) : nvars_(nvars), order_(std::min(order, kExactOrder)) {}

MultiSeries MultiSeries::constant(int nvars, const Rational& c, int order) {
  MultiSeries r(nvars, order);
  r.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return r;
}

MultiSeries MultiSeries::monomial(const Exponent& e, const Rational& c, int order) {
  MultiSeries r(static_cast<int>(e.size()), order);
  r.add_term(e, c);
  return r;
}

MultiSeries MultiSeries::from_univariate(const LaurentSeries& f, int var, int nvars) {
  return substitute(f, LinearForm::variable(var, nvars));
}

MultiSeries MultiSeries::linear(const LinearForm& L) {
  MultiSeries r(L.nvars(), kExactOrder);
  for (int i = 0; i < L.nvars(); ++i) {
    Exponent e(static_cast<std::size_t>(L.nvars()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    r.add_term(e, L.coeffs[static_cast<std::size_t>(i)]);
  }
  return r;
}

MultiSeries MultiSeries::substitute(const LaurentSeries& f, const LinearForm& L) {
  const int n = L.nvars();
  MultiSeries r(n, f.order());
  if (f.is_zero()) return r;
  const int single = L.single_variable();
  if (single >= 0) {
    const Rational c = L.coeffs[static_cast<std::size_t>(single)];
    for (int k = f.low(); k < f.order(); ++k) {
      Rational a = f.coeff(k);
      if (a == 0) continue;
      if (f.order() >= kExactOrder && k > f.low() + 4096) break;
      Exponent e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(single)] = k;
      r.add_term(e, a * power(c, k));
    }
    return r;
  }
  if (f.low() < 0) throw std::domain_error("pole at a multi-variable linear form");
  if (L.is_zero()) {
    r.add_term(Exponent(static_cast<std::size_t>(n), 0), f.coeff(0));
    return r;
  }
  if (f.order() >= kExactOrder) throw std::invalid_argument("substitution of an exact series needs a truncation order");
  MultiSeries lin = linear(L);
  MultiSeries pw = constant(n, 1);
  for (int k = 0; k < f.order(); ++k) {
    if (k > 0) pw = pw * lin;
    Rational a = f.coeff(k);
    if (a == 0) continue;
    for (const auto& [e, c] : pw.terms()) r.add_term(e, a * c);
  }
  return r;
}

int MultiSeries::valuation() const {
  int v = order_;
  for (const auto& [e, c] : terms_) v = std::min(v, total_degree(e));
  return v;
}

Rational MultiSeries::coeff(const Exponent& e) const {
  if (total_degree(e) >= order_) throw std::out_of_range("coefficient beyond truncation order");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0 || total_degree(e) >= order_) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiSeries MultiSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot raise truncation order");
  MultiSeries r(nvars_, order);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) < order) r.terms_.emplace(e, c);
  return r;
}

MultiSeries MultiSeries::embedded(const std::vector<int>& var_map, int nvars) const {
  if (static_cast<int>(var_map.size()) != nvars_) throw std::invalid_argument("variable map length mismatch");
  MultiSeries r(nvars, order_);
  for (const auto& [e, c] : terms_) {
    Exponent f(static_cast<std::size_t>(nvars), 0);
    for (int i = 0; i < nvars_; ++i) f.at(static_cast<std::size_t>(var_map[static_cast<std::size_t>(i)])) += e[static_cast<std::size_t>(i)];
    r.add_term(f, c);
  }
  return r;
}

LaurentSeries MultiSeries::to_univariate() const {
  if (nvars_ != 1) throw std::invalid_argument("not a univariate series");
  if (terms_.empty()) return LaurentSeries::zero(order_);
  int lo = terms_.begin()->first[0];
  int hi = terms_.rbegin()->first[0];
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e[0] - lo)] = c;
  return LaurentSeries(lo, std::move(out), order_);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("series in different rings");
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) { return *this += -o; }

MultiSeries& MultiSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& [e, x] : r.terms_) x = -x;
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("series in different rings");
  int order = std::min(sat_add(a.order_, b.valuation()), sat_add(b.order_, a.valuation()));
  MultiSeries r(a.nvars_, order);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) >= order) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
  return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

std::string MultiSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) os << "*z" << i + 1 << "^" << e[i];
  }
  if (first) os << "0";
  if (order_ < kExactOrder) os << " + O(" << order_ << ")";
  return os.str();
}

bool agree_below(const MultiSeries& a, const MultiSeries& b, int order) {
  if (a.order() < order || b.order() < order) throw std::invalid_argument("series not known to the requested order");
  if (a.nvars() != b.nvars()) return false;
  return a.truncated(order).terms() == b.truncated(order).terms();
}

MultiSeries divide_by_linear_form(const MultiSeries& N, const LinearForm& L) {
  if (L.nvars() != N.nvars()) throw std::invalid_argument("linear form in a different ring");
  if (L.is_zero()) throw std::domain_error("division by the zero form");
  const int n = N.nvars();
  const int out_order = sat_add(N.order(), -1);
  MultiSeries Q(n, out_order);

  const int single = L.single_variable();
  if (single >= 0) {
    const Rational c = L.coeffs[static_cast<std::size_t>(single)];
    for (const auto& [e, v] : N.terms()) {
      Exponent f = e;
      f[static_cast<std::size_t>(single)] -= 1;
      Q.add_term(f, v / c);
    }
    return Q;
  }

  std::vector<int> involved;
  for (int i = 0; i < n; ++i)
    if (L.coeffs[static_cast<std::size_t>(i)] != 0) involved.push_back(i);
  const int p = involved.front();
  const Rational cp = L.coeffs[static_cast<std::size_t>(p)];

  // Group terms by exponents outside L and by degree inside L; each group is a
  // homogeneous polynomial in the variables of L, divided by long division in z_p.
  using Poly = std::map<Exponent, Rational>;
  std::map<std::pair<Exponent, int>, Poly> groups;
  for (const auto& [e, v] : N.terms()) {
    Exponent outside = e;
    int deg = 0;
    for (int i : involved) {
      if (e[static_cast<std::size_t>(i)] < 0) throw std::domain_error("not divisible");
      deg += e[static_cast<std::size_t>(i)];
      outside[static_cast<std::size_t>(i)] = 0;
    }
    groups[{outside, deg}][e] = v;
  }

  for (auto& [key, poly] : groups) {
    if (key.second == 0) throw std::domain_error("not divisible");
    // Peel off the highest power of z_p repeatedly.
    while (!poly.empty()) {
      int top = -1;
      for (const auto& [e, v] : poly) top = std::max(top, e[static_cast<std::size_t>(p)]);
      if (top == 0) throw std::domain_error("not divisible");
      std::vector<std::pair<Exponent, Rational>> lead;
      for (const auto& [e, v] : poly)
        if (e[static_cast<std::size_t>(p)] == top) lead.emplace_back(e, v);
      for (auto& [e, v] : lead) {
        Exponent q = e;
        q[static_cast<std::size_t>(p)] -= 1;
        Rational qc = v / cp;
        Q.add_term(q, qc);
        // Subtract L * qc * z^q from the group.
        for (int i : involved) {
          Exponent t = q;
          t[static_cast<std::size_t>(i)] += 1;
          Rational& slot = poly[t];
          slot -= qc * L.coeffs[static_cast<std::size_t>(i)];
          if (slot == 0) poly.erase(t);
        }
      }
    }
  }
  return Q;
}

MultiSeries exp_log_transform(const MultiSeries& f, ExpLog direction) {
  const int n = f.nvars();
  const Exponent zero_exp(static_cast<std::size_t>(n), 0);
  if (f.order() >= kExactOrder) throw std::invalid_argument("exp/log needs a finite truncation order");
  Rational c0 = f.order() > 0 ? f.coeff(zero_exp) : Rational(0);
  MultiSeries x = f;
  if (direction == ExpLog::exp) {
    if (c0 != 0) throw std::domain_error("exp requires zero constant term");
  } else {
    if (c0 != 1) throw std::domain_error("log requires constant term 1");
    x -= MultiSeries::constant(n, 1);
  }
  for (const auto& [e, v] : x.terms())
    if (total_degree(e) < 1) throw std::domain_error("exp/log argument has terms of non-positive degree");

  MultiSeries result = direction == ExpLog::exp ? MultiSeries::constant(n, 1, f.order()) : MultiSeries(n, f.order());
  MultiSeries pw = MultiSeries::constant(n, 1, f.order());
  for (int k = 1; k < f.order() + 1; ++k) {
    pw = pw * x;
    if (pw.is_zero()) break;
    if (direction == ExpLog::exp) {
      result += pw * ratio(1, factorial(k));
    } else {
      result += pw * Rational(k % 2 == 1 ? 1 : -1, k);
    }
  }
  return result.truncated(std::min(result.order(), f.order()));
}

// ---------------------------------------------------------------------------
// QSeries

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("q-series needs at least one coefficient");
}

QSeries QSeries::zero(int degree) { return QSeries(std::vector<Rational>(static_cast<std::size_t>(degree + 1))); }

QSeries QSeries::euler_product(int degree) {
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  c[0] = 1;
  for (int m = 1; m <= degree; ++m)
    for (int k = degree; k >= m; --k) c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - m)];
  return QSeries(std::move(c));
}

const Rational& QSeries::coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

QSeries QSeries::truncated(int degree) const {
  if (degree > this->degree()) throw std::invalid_argument("cannot raise truncation degree");
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

QSeries QSeries::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("not invertible");
  std::vector<Rational> b(coeffs_.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    Rational s = k == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k; ++j) s -= coeffs_[j] * b[k - j];
    b[k] = s / coeffs_[0];
  }
  return QSeries(std::move(b));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int d = std::min(a.degree(), b.degree());
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= d; ++j)
      c[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return QSeries(std::move(c));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  int d = std::min(a.degree(), b.degree());
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)] + b.coeffs_[static_cast<std::size_t>(i)];
  return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  int d = std::min(a.degree(), b.degree());
  std::vector<Rational> c(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)] - b.coeffs_[static_cast<std::size_t>(i)];
  return QSeries(std::move(c));
}

}  // namespace gwh
