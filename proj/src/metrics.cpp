#include "incpar/metrics.hpp"

#include <json.hpp>

namespace incpar::metrics {

std::string MetricsReport::to_json() const {
  nlohmann::json j;
  j["algo"] = algo;
  j["n"] = n;
  j["m"] = m;
  j["seed"] = seed;
  j["mode"] = mode;
  j["threads"] = threads;
  j["rounds"] = rounds;
  if (depth) j["depth"] = *depth;
  j["counters"] = counters;
  j["wall_ms"] = wall_ms;
  if (validated) j["validated"] = *validated;
  return j.dump();
}

}  // namespace incpar::metrics
