#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gwh/characters.hpp"
#include "gwh/parallel.hpp"
#include "gwh/partition.hpp"
#include "gwh/rational.hpp"
#include "gwh/series.hpp"

namespace gwh {

/// Routes to a stationary invariant: sums over characters, vacuum
/// expectations on the infinite wedge, closed-form series, or completed
/// cycles fed into Hurwitz numbers.
enum class Pipeline { character, operator_formalism, closed, substitution };

std::string pipeline_name(Pipeline p);
/// Throws std::invalid_argument on an unknown name.
Pipeline parse_pipeline(const std::string& name);

/// Insertions tau_{k_i}(omega), k_i >= -2, on a target of the given genus.
/// Profiles mu, nu (both or neither) make the query relative to 0 and
/// infinity of P^1.
struct InvariantQuery {
  int target_genus = 0;
  int degree = 0;
  std::vector<int> k;
  std::optional<Partition> mu;
  std::optional<Partition> nu;
  bool connected = false;
};

struct InvariantResult {
  Rational value;
  /// Domain genus forced by the dimension constraint, when integral.
  std::optional<int> domain_genus;
};

std::optional<int> domain_genus(const InvariantQuery& q);

/// Throws std::invalid_argument when the pipeline cannot serve the query.
InvariantResult evaluate(const InvariantQuery& q, Pipeline p, Execution ex = Execution::parallel);

/// sum_{|lambda|=d} (dim lambda/d!)^{2-2g} prod p_{k_i+1}(lambda)/(k_i+1)!.
Rational stationary_disconnected(int target_genus, int d, const std::vector<int>& k,
                                 Execution ex = Execution::parallel);

/// Disconnected relative invariant <mu, prod tau_{k_i}, nu> of P^1.
Rational relative_p1_disconnected(const Partition& mu, const Partition& nu, const std::vector<int>& k,
                                  Execution ex = Execution::parallel);

/// [prod z_i^{k_i+1}] of an n-point function.
Rational coefficient_at(const MultiSeries& F, const std::vector<int>& k);

/// Total order needed to read the coefficient of prod z_i^{k_i+1}.
int order_for(const std::vector<int>& k);

/// F^bullet_{mu,nu}(z_1..z_n) as a sum over characters, known below total
/// degree `order`.
MultiSeries relative_series_character(const Partition& mu, const Partition& nu, int n, int order,
                                      Execution ex = Execution::parallel);
/// F^bullet_{mu,nu}(z_1..z_n) as a vacuum expectation of
/// prod alpha_{mu_i} prod E_0(z_i) prod alpha_{-nu_i}.
MultiSeries relative_series_operator(const Partition& mu, const Partition& nu, int n, int order);

enum class SeriesSource { character, operator_formalism };

/// F^circ_{mu,nu}(z_1..z_n) as the logarithm of the disconnected n-point
/// functions of all sub-profiles and variable subsets.
MultiSeries relative_connected_series(const Partition& mu, const Partition& nu, int n, int order,
                                      SeriesSource source = SeriesSource::character);

using RelativeValues = std::function<Rational(const Partition&, const Partition&, const std::vector<int>&)>;
using AbsoluteValues = std::function<Rational(int, const std::vector<int>&)>;

/// Connected value from disconnected values on every sub-query; throws
/// std::domain_error("missing sub-query data") if the source gives up.
Rational connected_relative(const Partition& mu, const Partition& nu, const std::vector<int>& k,
                            const RelativeValues& disconnected);
/// Disconnected value from connected values on every sub-query.
Rational disconnected_relative(const Partition& mu, const Partition& nu, const std::vector<int>& k,
                               const RelativeValues& connected);
/// Connected absolute invariant from disconnected ones in degrees <= d.
Rational connected_absolute(int d, const std::vector<int>& k, const AbsoluteValues& disconnected);

Rational stationary_connected(int target_genus, int d, const std::vector<int>& k);

/// sum_g z^{2g} <mu, tau_{2g-2+l(mu)+l(nu)}, nu>^circ in closed form.
/// Throws std::invalid_argument when |mu| != |nu|.
LaurentSeries one_point_closed_form(const Partition& mu, const Partition& nu, int order);

/// Connected one-point invariant <mu, tau_k, nu>^circ read off the closed form.
Rational one_point_connected(const Partition& mu, const Partition& nu, int k);

/// F^circ_{mu,nu}(z_1..z_n), n >= 1, as a sum over maps from the parts of mu
/// and nu to the variables.
MultiSeries n_point_closed_form(const Partition& mu, const Partition& nu, int n, int order);

/// Compares both sides of the Toda recurrence for F^circ_{mu+(1),nu+(1)}
/// below total degree `order`.
bool toda_recurrence_check(const Partition& mu, const Partition& nu, int n, int order);

/// Degeneration of a genus g target into P^1 relative invariants glued by
/// Hurwitz numbers; for g = 1 also the trace over relative profiles.
bool degeneration_check(int target_genus, int d, const std::vector<int>& k);

/// The same degeneration on the Hurwitz side, with completed cycles of
/// sizes k_i + 1 in place of the descendents.
bool hurwitz_degeneration_check(int target_genus, int d, const std::vector<int>& k);

/// Multilinear extension of extended Hurwitz numbers to class-algebra
/// arguments (followed by plain profiles).
Rational hurwitz_with_classes(int target_genus, int d, const std::vector<ClassAlgebraElement>& classes,
                              const std::vector<Partition>& profiles, Execution ex = Execution::parallel);

/// The invariant computed by replacing each tau_k by the completed cycle of
/// k+1 divided by k!.
Rational gwh_substitution(int target_genus, int d, const std::vector<int>& k, const std::vector<Partition>& profiles,
                          Execution ex = Execution::parallel);

/// <mu, tau_k>^bullet against the sum over removed parts equal to 1 of
/// connected one-point invariants.
bool trivial_parts_check(const Partition& mu, int k);

/// rho_{k+1,mu}/k! against z(mu) <mu, tau_k, (1^|mu|)>^circ from both the
/// closed form and the logarithm of the character sum.
bool completion_coefficient_check(int k, const Partition& mu);

}  // namespace gwh
