#include "gwh/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "gwh/parallel.hpp"

namespace gwh {

namespace {
Limits& mutable_limits() {
  static Limits l;
  return l;
}
}  // namespace

const Limits& limits() { return mutable_limits(); }

void set_limits(const Limits& l) { mutable_limits() = l; }

Limits load_limits(const std::string& path, Limits base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed config file: " + std::string(e.what()));
  }
  if (!j.is_object()) throw std::runtime_error("config file must hold a JSON object");
  auto read = [&](const char* key, int& slot) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer() || j[key].get<int>() < 0)
      throw std::runtime_error(std::string("config key must be a non-negative integer: ") + key);
    slot = j[key].get<int>();
  };
  read("character_degree", base.character_degree);
  read("oracle_degree_genus0", base.oracle_degree_genus0);
  read("oracle_degree_genus1", base.oracle_degree_genus1);
  read("series_order", base.series_order);
  read("q_order", base.q_order);
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* known[] = {"character_degree", "oracle_degree_genus0", "oracle_degree_genus1", "series_order",
                                  "q_order"};
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw std::runtime_error("unknown config key: " + it.key());
  }
  return base;
}

int apply_thread_env() {
  if (const char* s = std::getenv("GWH_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && n > 0 && n < 4096) set_thread_count(static_cast<int>(n));
  }
  return thread_count();
}

}  // namespace gwh
