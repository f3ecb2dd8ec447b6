#ifndef ARTINSYS_RANDOM_GAMMA_HPP
#define ARTINSYS_RANDOM_GAMMA_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "artinsys/gamma_assembly.hpp"

namespace artinsys {

struct RandomGammaOptions {
  int min_generators = 2;
  int max_generators = 6;
  int max_label = 7;
  double edge_probability = 0.6;
  int max_attempts = 10000;
};

/// Draws labelled graphs until one is of almost large type. Generators are
/// named g0, g1, ...; labels are uniform in [2, max_label]. Uses only the
/// engine's raw output so the sequence does not depend on the standard
/// library's distribution implementations.
inline LabeledDefiningGraph random_almost_large_graph(std::mt19937_64& rng, const RandomGammaOptions& options = {}) {
  if (options.min_generators < 1 || options.max_generators < options.min_generators || options.max_label < 2) {
    throw std::invalid_argument("bad random graph options");
  }
  auto uniform = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  auto coin = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    LabeledDefiningGraph g;
    const int k = uniform(options.min_generators, options.max_generators);
    for (int s = 0; s < k; ++s) g.add_generator("g" + std::to_string(s));
    for (int s = 0; s < k; ++s) {
      for (int t = s + 1; t < k; ++t) {
        if (coin(options.edge_probability)) {
          g.add_edge("g" + std::to_string(s), "g" + std::to_string(t), uniform(2, options.max_label));
        }
      }
    }
    if (check_almost_large(g).pass) return g;
  }
  throw std::runtime_error("no almost large graph found within the attempt budget");
}

inline nlohmann::ordered_json defining_graph_to_json(const LabeledDefiningGraph& g) {
  nlohmann::ordered_json doc;
  doc["generators"] = g.generators();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"m", e.m}});
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace artinsys

#endif  // ARTINSYS_RANDOM_GAMMA_HPP
