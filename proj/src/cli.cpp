#include "gwh/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwh/characters.hpp"
#include "gwh/completion.hpp"
#include "gwh/config.hpp"
#include "gwh/elliptic.hpp"
#include "gwh/gw.hpp"
#include "gwh/hurwitz.hpp"
#include "gwh/shifted.hpp"
#include "gwh/verify.hpp"

namespace gwh {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw UsageError("malformed integer list: " + text);
  }
  if (!j.is_array()) throw UsageError("expected a list of integers: " + text);
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw UsageError("expected a list of integers: " + text);
    out.push_back(x.get<int>());
  }
  return out;
}

Partition parse_profile(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

json qseries_json(const QSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(to_string(c));
  return a;
}

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << h;
  return o.str();
}

// Results keyed by a hash of the canonical query, one JSON object per line.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}
  bool enabled() const { return !path_.empty(); }

  std::optional<json> find(const std::string& query) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_);
    const std::string key = fnv1a(query);
    std::string line;
    while (std::getline(in, line)) {
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object()) continue;
      if (j.value("key", "") == key && j.value("query", "") == query && j.contains("result")) return j["result"];
    }
    return std::nullopt;
  }

  void store(const std::string& query, const json& result) const {
    if (!enabled()) return;
    std::ofstream out(path_, std::ios::app);
    out << json{{"key", fnv1a(query)}, {"query", query}, {"result", result}}.dump() << '\n';
  }

 private:
  std::string path_;
};

struct Options {
  std::string config;
  std::string cache;
  bool timing = false;
  bool serial = false;
  int character_limit = -1;
};

json run_hurwitz(int g, int d, const std::string& profiles_text, const std::string& method, Execution ex) {
  std::vector<Partition> profiles;
  try {
    profiles = parse_partition_list(profiles_text);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Rational value;
  if (method == "burn") value = hurwitz_number(g, d, profiles, ex);
  else if (method == "strict") value = hurwitz_number_strict(g, d, profiles, ex);
  else if (method == "padded") value = hurwitz_number_padded(g, d, profiles, ex);
  else if (method == "oracle") value = hurwitz_oracle(g, d, profiles, ex);
  else throw UsageError("unknown method: " + method);
  json labels = json::array();
  for (const auto& p : profiles) labels.push_back(p.to_string());
  json r{{"query", {{"target_genus", g}, {"degree", d}, {"profiles", labels}}}, {"value", to_string(value)},
         {"pipeline", method}};
  if (auto genus = riemann_hurwitz_genus(d, g, profiles)) r["domain_genus"] = *genus;
  else r["domain_genus"] = nullptr;
  return r;
}

json run_characters(int d) {
  const CharacterTable& t = character_table(d);
  json classes = json::array();
  for (const auto& p : t.partitions()) classes.push_back(p.to_string());
  json rows = json::array();
  for (std::size_t i = 0; i < t.partitions().size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.partitions().size(); ++j) row.push_back(to_string(t.value(i, j)));
    rows.push_back(row);
  }
  return json{{"query", {{"degree", d}}}, {"classes", classes}, {"values", rows}, {"pipeline", "border-strip"}};
}

json run_pk(int k, const std::string& lambda_text) {
  const Partition lambda = parse_profile(lambda_text);
  if (k < -1) throw UsageError("p_k needs k >= -1");
  const ShiftedValue v = p_k(k, lambda);
  json r{{"query", {{"k", k}, {"lambda", lambda.to_string()}}}, {"pipeline", "shifted"}};
  if (v.unit) r["value"] = "unit";
  else r["value"] = to_string(v.value);
  return r;
}

json run_completed_cycle(int k, const std::string& method) {
  if (k < 1) throw UsageError("completed cycles need k >= 1");
  ClassAlgebraElement c;
  if (method == "closed") c = completed_cycle(k);
  else if (method == "fourier") c = fourier_invert([k](const Partition& l) -> Rational { return p_k(k, l).value / k; }, k);
  else throw UsageError("unknown method: " + method);
  json terms = json::array();
  for (const auto& [mu, x] : c.terms()) terms.push_back({{"class", mu.to_string()}, {"coefficient", to_string(x)}});
  return json{{"query", {{"k", k}}}, {"values", terms}, {"pipeline", method}};
}

json run_gw(const InvariantQuery& q, Pipeline p, Execution ex) {
  InvariantResult r;
  try {
    r = evaluate(q, p, ex);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json query{{"target_genus", q.target_genus}, {"degree", q.degree}, {"k", q.k}, {"connected", q.connected}};
  if (q.mu) query["mu"] = q.mu->to_string();
  if (q.nu) query["nu"] = q.nu->to_string();
  json out{{"query", query}, {"value", to_string(r.value)}, {"pipeline", pipeline_name(p)}};
  if (r.domain_genus) out["domain_genus"] = *r.domain_genus;
  else out["domain_genus"] = nullptr;
  return out;
}

// Exit code 1 is signalled through the "passed" member.
json run_elliptic(const std::vector<int>& k, int q_degree, int fit_weight, const std::string& pipeline, Execution ex) {
  if (q_degree < 0) throw UsageError("negative q-order");
  for (int ki : k)
    if (ki < -2) throw UsageError("descendent index below -2");
  QSeries series;
  if (pipeline == "trace") {
    series = elliptic_stationary_series(k, q_degree, ex);
  } else if (pipeline == "theta") {
    const int n = static_cast<int>(k.size());
    if (n > 3) throw UsageError("theta pipeline supports at most three insertions");
    const QZSeries F = theta_determinant_npoint(n, q_degree, order_for(k));
    std::vector<Rational> c;
    for (const auto& s : F) c.push_back(n == 0 ? s.coeff({}) : coefficient_at(s, k));
    series = QSeries(std::move(c));
  } else {
    throw UsageError("unknown pipeline: " + pipeline);
  }
  json out{{"query", {{"k", k}, {"q_order", q_degree}}}, {"values", qseries_json(series)}, {"pipeline", pipeline},
           {"truncation", {{"q_order", q_degree}}}};
  if (fit_weight >= 0) {
    QuasimodularFit fit;
    try {
      fit = quasimodularity_fit(QSeries::euler_product(q_degree) * series, fit_weight);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    json poly = json::array();
    for (std::size_t i = 0; i < fit.coefficients.size(); ++i) {
      const auto& [a, b, c] = fit.monomials[i];
      if (fit.coefficients[i] != 0)
        poly.push_back({{"E2", a}, {"E4", b}, {"E6", c}, {"coefficient", to_string(fit.coefficients[i])}});
    }
    out["fit"] = {{"weight", fit_weight}, {"ok", fit.ok}, {"polynomial", poly}, {"fitted", fit.fitted},
                  {"held_out", fit.held_out}};
    if (!fit.ok) out["fit"]["message"] = fit.message;
    out["passed"] = fit.ok;
  }
  return out;
}

json run_verify(const std::string& suite, int max_degree, Execution ex) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else {
    bool known = false;
    for (const auto& n : suite_names()) known = known || n == suite;
    if (!known) throw UsageError("unknown suite: " + suite);
    names.push_back(suite);
  }
  json suites = json::array();
  bool passed = true;
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, max_degree, ex);
    passed = passed && r.failed == 0;
    suites.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}});
  }
  return json{{"query", {{"suite", suite}, {"max_degree", max_degree}}}, {"suites", suites}, {"passed", passed},
              {"pipeline", "verify"}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact stationary Gromov-Witten and Hurwitz computations"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--config", opt.config, "JSON file with work ceilings");
  app.add_option("--cache", opt.cache, "JSON-lines result cache");
  app.add_flag("--timing", opt.timing, "Report elapsed_ms");
  app.add_flag("--serial", opt.serial, "Use the serial reference kernels");
  app.add_option("--character-limit", opt.character_limit, "Largest degree of character tables");

  int g = 0, d = 0, k = 0, q_degree = 10, fit_weight = -1, max_degree = 4;
  std::string profiles = "[]", method = "burn", lambda = "[]", k_list = "[]", mu, nu, pipeline = "character",
              elliptic_pipeline = "trace", suite = "all", cycle_method = "closed";
  bool connected = false;

  auto* hurwitz = app.add_subcommand("hurwitz", "Extended Hurwitz numbers");
  hurwitz->add_option("--target-genus", g)->check(CLI::NonNegativeNumber);
  hurwitz->add_option("--degree", d)->required()->check(CLI::NonNegativeNumber);
  hurwitz->add_option("--profiles", profiles, "e.g. [[2],[2]]");
  hurwitz->add_option("--method", method, "burn|strict|padded|oracle");

  auto* characters = app.add_subcommand("characters", "Character table of S(d)");
  characters->add_option("--degree", d)->required()->check(CLI::NonNegativeNumber);

  auto* pk = app.add_subcommand("pk", "Shifted power sum p_k(lambda)");
  pk->add_option("--k", k)->required();
  pk->add_option("--lambda", lambda, "e.g. [2,1]");

  auto* cycle = app.add_subcommand("completed-cycle", "Completed cycle expansion");
  cycle->add_option("--k", k)->required();
  cycle->add_option("--method", cycle_method, "closed|fourier");

  auto* gw = app.add_subcommand("gw", "Stationary Gromov-Witten invariant");
  gw->add_option("--target-genus", g)->check(CLI::NonNegativeNumber);
  gw->add_option("--degree", d)->required()->check(CLI::NonNegativeNumber);
  gw->add_option("--k", k_list, "e.g. [1,1]");
  gw->add_option("--mu", mu);
  gw->add_option("--nu", nu);
  gw->add_flag("--connected", connected);
  gw->add_option("--pipeline", pipeline, "character|operator|closed|substitution");

  auto* elliptic = app.add_subcommand("elliptic", "Stationary series of the elliptic curve");
  elliptic->add_option("--k", k_list, "e.g. [0]");
  elliptic->add_option("--q-order", q_degree)->check(CLI::NonNegativeNumber);
  elliptic->add_option("--fit-weight", fit_weight);
  elliptic->add_option("--pipeline", elliptic_pipeline, "trace|theta");

  auto* verify = app.add_subcommand("verify", "Cross-pipeline verification suites");
  verify->add_option("--suite", suite, "all|hurwitz|characters|completion|fock|gw|elliptic");
  verify->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    Limits l = limits();
    if (!opt.config.empty()) l = load_limits(opt.config, l);
    if (opt.character_limit >= 0) l.character_degree = opt.character_limit;
    set_limits(l);
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  apply_thread_env();
  const Execution ex = opt.serial ? Execution::serial : Execution::parallel;

  const auto start = std::chrono::steady_clock::now();
  const ResultCache cache(opt.cache);
  json result;
  try {
    std::string query_key;
    std::function<json()> compute;
    if (*hurwitz) {
      query_key = "hurwitz " + std::to_string(g) + " " + std::to_string(d) + " " + profiles + " " + method;
      compute = [&] { return run_hurwitz(g, d, profiles, method, ex); };
    } else if (*characters) {
      compute = [&] { return run_characters(d); };
    } else if (*pk) {
      query_key = "pk " + std::to_string(k) + " " + lambda;
      compute = [&] { return run_pk(k, lambda); };
    } else if (*cycle) {
      query_key = "completed-cycle " + std::to_string(k) + " " + cycle_method;
      compute = [&] { return run_completed_cycle(k, cycle_method); };
    } else if (*gw) {
      InvariantQuery q;
      q.target_genus = g;
      q.degree = d;
      q.k = parse_int_list(k_list);
      if (!mu.empty()) q.mu = parse_profile(mu);
      if (!nu.empty()) q.nu = parse_profile(nu);
      q.connected = connected;
      const Pipeline p = [&] {
        try {
          return parse_pipeline(pipeline);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }();
      query_key = "gw " + std::to_string(g) + " " + std::to_string(d) + " " + json(q.k).dump() + " " +
                  (q.mu ? q.mu->to_string() : "-") + " " + (q.nu ? q.nu->to_string() : "-") + " " +
                  (connected ? "connected" : "disconnected") + " " + pipeline_name(p);
      compute = [q, p, ex] { return run_gw(q, p, ex); };
    } else if (*elliptic) {
      const std::vector<int> ks = parse_int_list(k_list);
      query_key = "elliptic " + json(ks).dump() + " " + std::to_string(q_degree) + " " + std::to_string(fit_weight) +
                  " " + elliptic_pipeline;
      compute = [ks, q_degree, fit_weight, elliptic_pipeline, ex] {
        return run_elliptic(ks, q_degree, fit_weight, elliptic_pipeline, ex);
      };
    } else if (*verify) {
      compute = [&] { return run_verify(suite, max_degree, ex); };
    }
    std::optional<json> cached;
    if (!query_key.empty()) cached = cache.find(query_key);
    if (cached) {
      result = *cached;
    } else {
      result = compute();
      if (!query_key.empty()) cache.store(query_key, result);
    }
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (opt.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result["elapsed_ms"] = ms;
  }
  out << result.dump(2) << "\n";
  if (result.contains("passed") && !result["passed"].get<bool>()) return 1;
  return 0;
}

}  // namespace gwh
