#pragma once

#include <string>

namespace gwh {

/// Work ceilings. Set them once at startup, before any parallel work.
struct Limits {
  int character_degree = 16;
  int oracle_degree_genus0 = 6;
  int oracle_degree_genus1 = 4;
  int series_order = 10;
  int q_order = 10;
};

const Limits& limits();
void set_limits(const Limits& l);

/// Reads a JSON object with any of the keys "character_degree",
/// "oracle_degree_genus0", "oracle_degree_genus1", "series_order",
/// "q_order" on top of `base`. Throws std::runtime_error on malformed input.
Limits load_limits(const std::string& path, Limits base);

/// Applies GWH_THREADS when set to a positive integer; returns the thread
/// count in effect.
int apply_thread_env();

}  // namespace gwh
