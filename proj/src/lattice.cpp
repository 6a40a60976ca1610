#include "gwh/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace gwh {

DivisorLattice::DivisorLattice(std::vector<int> top) : top_(std::move(top)) {
  std::size_t n = 1;
  for (int t : top_) {
    if (t < 0) throw std::invalid_argument("negative lattice bound");
    n *= static_cast<std::size_t>(t + 1);
  }
  values_.resize(n);
}

std::vector<int> DivisorLattice::point(std::size_t index) const {
  std::vector<int> p(top_.size());
  for (std::size_t i = top_.size(); i-- > 0;) {
    const std::size_t radix = static_cast<std::size_t>(top_[i] + 1);
    p[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return p;
}

std::size_t DivisorLattice::index(const std::vector<int>& point) const {
  if (point.size() != top_.size()) throw std::invalid_argument("lattice point of wrong dimension");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < top_.size(); ++i) {
    if (point[i] < 0 || point[i] > top_[i]) throw std::out_of_range("lattice point outside the box");
    idx = idx * static_cast<std::size_t>(top_[i] + 1) + static_cast<std::size_t>(point[i]);
  }
  return idx;
}

const MultiSeries& DivisorLattice::at(std::size_t index) const {
  if (!values_[index]) throw std::domain_error("missing sub-query data");
  return *values_[index];
}

namespace {

int weight(const std::vector<int>& p) { return std::accumulate(p.begin(), p.end(), 0); }

// Calls fn(A, M - A) for every lattice point 0 < A < M.
template <class Fn>
void for_each_proper_divisor(const DivisorLattice& L, const std::vector<int>& M, Fn&& fn) {
  std::vector<int> A(M.size(), 0);
  std::vector<int> rest(M.size());
  while (true) {
    std::size_t i = 0;
    while (i < A.size() && A[i] == M[i]) A[i++] = 0;
    if (i == A.size()) return;
    ++A[i];
    if (A == M) continue;
    for (std::size_t j = 0; j < M.size(); ++j) rest[j] = M[j] - A[j];
    fn(L.index(A), L.index(rest), weight(A));
  }
}

}  // namespace

// With x d/dx the Euler derivation and w(M) the total degree of x^M, the
// identity E(D) = D * E(log D) gives
//   w(M) C_M = w(M) D_M - sum_{0<A<M} w(A) C_A D_{M-A}.
DivisorLattice lattice_log(const DivisorLattice& D) {
  DivisorLattice C(D.top());
  const MultiSeries& one = D.at(0);
  if (!agree_below(one, MultiSeries::constant(one.nvars(), 1), one.order()))
    throw std::domain_error("logarithm needs constant term 1");
  C.set(0, MultiSeries(one.nvars(), kExactOrder));
  for (std::size_t m = 1; m < D.size(); ++m) {
    const std::vector<int> M = D.point(m);
    const int w = weight(M);
    MultiSeries acc = D.at(m) * Rational(w);
    for_each_proper_divisor(D, M, [&](std::size_t a, std::size_t rest, int wa) {
      acc -= C.at(a) * D.at(rest) * Rational(wa);
    });
    C.set(m, acc * Rational(1, w));
  }
  return C;
}

// w(M) E_M = sum_{0<A<=M} w(A) C_A E_{M-A}.
DivisorLattice lattice_exp(const DivisorLattice& C) {
  DivisorLattice E(C.top());
  const MultiSeries& zero = C.at(0);
  if (!zero.is_zero()) throw std::domain_error("exponential needs constant term 0");
  E.set(0, MultiSeries::constant(zero.nvars(), 1));
  for (std::size_t m = 1; m < C.size(); ++m) {
    const std::vector<int> M = C.point(m);
    const int w = weight(M);
    MultiSeries acc = C.at(m) * Rational(w);
    for_each_proper_divisor(C, M, [&](std::size_t a, std::size_t rest, int wa) {
      acc += C.at(a) * E.at(rest) * Rational(wa);
    });
    E.set(m, acc * Rational(1, w));
  }
  return E;
}

}  // namespace gwh
