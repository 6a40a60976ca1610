#pragma once

#include <map>
#include <variant>
#include <vector>

#include "gwh/parallel.hpp"
#include "gwh/partition.hpp"
#include "gwh/series.hpp"

namespace gwh {

/// alpha_k.
struct Alpha {
  int k;
};
/// E_r evaluated at a linear form in the series variables.
struct Ecal {
  int r;
  LinearForm z;
};
/// P_k = k! [z^k] E_0(z), diagonal with eigenvalue p_k.
struct Pk {
  int k;
};
using WedgeOperator = std::variant<Alpha, Ecal, Pk>;

/// Energy change of an operator (alpha_k lowers energy by k).
int energy_shift(const WedgeOperator& op);

/// Finite combination of basis vectors v_lambda of the charge-zero sector,
/// with series coefficients in `nvars` variables and energies <= cutoff.
class FockVector {
 public:
  FockVector(int nvars, int cutoff) : nvars_(nvars), cutoff_(cutoff) {}
  static FockVector basis(const Partition& lambda, int nvars, int cutoff);
  static FockVector vacuum(int nvars, int cutoff) { return basis(Partition(), nvars, cutoff); }

  int nvars() const { return nvars_; }
  int cutoff() const { return cutoff_; }
  const std::map<Partition, MultiSeries>& terms() const { return terms_; }
  /// Throws std::out_of_range("energy cutoff exceeded") above the cutoff.
  void add(const Partition& lambda, const MultiSeries& c);
  MultiSeries coefficient(const Partition& lambda) const;
  /// Drops basis vectors of energy above e.
  void restrict_energy(int e);

 private:
  int nvars_;
  int cutoff_;
  std::map<Partition, MultiSeries> terms_;
};

/// One occupied level moved by E_{k-r,k}: the resulting partition, the
/// fermionic sign, and the half-integer level k - r/2 entering the exponent.
struct LevelMove {
  Partition result;
  int sign;
  Rational exponent;
};
/// All moves of one occupied level of lambda down by r (up by -r).
std::vector<LevelMove> level_moves(const Partition& lambda, int r);

FockVector apply_alpha(int k, const FockVector& v);
/// E_r(L) applied to v, coefficient series known below total degree `order`.
/// With include_constant false the 1/sigma term of E_0 is omitted; the term
/// needs L to be a multiple of one variable.
FockVector apply_E(int r, const LinearForm& L, const FockVector& v, int order, bool include_constant = true);
FockVector apply_P(int k, const FockVector& v);
FockVector apply_operator(const WedgeOperator& op, const FockVector& v, int order);

/// (A v_empty, v_empty) for A the ordered product of ops, known below total
/// degree `order`. Zero when the charges do not balance.
MultiSeries vacuum_expectation(const std::vector<WedgeOperator>& ops, int nvars, int order);

/// Checks [E_a(z), E_b(w)] = sigma(aw - bz) E_{a+b}(z+w) on every basis
/// vector whose images stay within the energy cutoff.
bool commutator_check(int a, int b, int order, int cutoff);

/// Connected correlator G(a_1..a_n; z_1..z_n) via the commutation recursion.
MultiSeries g_function(const std::vector<int>& a, int order);
/// The same correlator from vacuum expectations by removing disconnected parts.
MultiSeries g_function_direct(const std::vector<int>& a, int order);

/// tr_0 q^H prod ops for diagonal operators: entry d is the q^d coefficient.
/// Throws std::invalid_argument("trace restricted to diagonal products").
std::vector<MultiSeries> trace_qH(const std::vector<WedgeOperator>& ops, int nvars, int q_order, int z_order,
                                  Execution ex = Execution::parallel);

}  // namespace gwh
