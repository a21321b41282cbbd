#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "busemann/bodies.hpp"

namespace busemann {

enum class SearchSense { Maximize, Minimize };

struct SearchSettings {
  SpaceSpec space = SpaceSpec::make(1, 2);
  bool convex = false;
  bool symmetric = false;
  std::optional<double> volume;  // defaults to the volume of the ball of radius 0.8
  SearchSense sense = SearchSense::Maximize;
  int budget = 300;        // proposed steps
  std::uint64_t seed = 1;
  int nodes = 48;          // grid size of the radial profile
  double step = 0.08;      // initial bump amplitude, relative to the mean radius
  double start_noise = 0.15;  // relative amplitude of the random starting profile
};

struct SearchStep {
  int iteration = 0;
  bool accepted = false;
  double objective = 0.0;
  double volume_drift = 0.0;  // |vol - target| / target after renormalization
  double step = 0.0;
  std::vector<double> profile;  // radial values, kept for accepted steps only
};

/// Volume-preserving local search over piecewise-linear radial profiles in
/// two dimensions; claims nothing beyond "best found".
struct SearchTrace {
  SearchSettings settings;
  double target_volume = 0.0;
  std::vector<SearchStep> steps;
  std::vector<double> best_profile;
  double best_objective = 0.0;
  int accepted = 0;
  double max_drift = 0.0;
};

SearchTrace extremizer_search(const SearchSettings& settings);

/// Body with the given grid profile (n = 2).
StarBody grid_body(const SpaceSpec& space, const std::vector<double>& values, bool symmetric);

}  // namespace busemann
