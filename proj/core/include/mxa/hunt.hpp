#pragma once
//
// Counterexample and sharp-constant search: seeded random restarts plus
// adaptive Gaussian hill-climbing over constraint-respecting parametrizations
// (objectives are nonsmooth operator-norm ratios, so the search is
// derivative-free).
//

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mxa/dense.hpp"

namespace mxa {

struct SearchConfig {
  std::uint64_t seed = 0;
  std::size_t restarts = 4;
  std::size_t steps = 2000;
  std::vector<std::size_t> dims = {2, 3, 4};
  std::size_t threads = 1;
};

struct SearchImprovement {
  std::size_t step = 0;
  double ratio = 0.0;
};

struct SearchReport {
  std::string problem;
  double best_ratio = 0.0;
  double threshold = 1.0;       // ratio beyond threshold (1 + tau) is a finding
  bool violation_found = false;
  bool sanity_violated = false;  // a proven ceiling was crossed: the run is bad
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  std::size_t best_restart = 0;
  std::vector<SearchImprovement> history;  // winning restart, nondecreasing
  nlohmann::json witness;

  nlohmann::json to_json() const;
};

// Open problems hunted for counterexamples.
//   CONJ_A            ||AZB|| / ||ZAB|| over monotone pairs, threshold sqrt2,
//                     proven ceiling 8
//   CONJ_B            ||A^pB^q + B^pA^q|| / ||A^{p+q} + B^{p+q}||, threshold 1
//   HAYASHI_ESSHERM   block-norm / ||A+B|| over completions of a nonnormal X
//   QUEST_SHARP_R     eigenvalue-step excess over the disc radius
//   SUBADD_NOMONO     necessary-condition deficit for non-monotone concave f
//   SCHATTEN_NORMAL_P p-norm ratio for normal off-diagonal blocks
SearchReport search(const std::string& problem, const SearchConfig& cfg);

// Sharp-constant probes seeded with the known extremal families:
//   CARTESIAN_2P (2^{p-1}), SQRT3, FOURBLOCK_2, SEMI_SQRT2.
SearchReport probe_constant(const std::string& problem, const SearchConfig& cfg);

std::vector<std::string> hunt_problems();
std::vector<std::string> probe_problems();

// Replays a witness produced by search/probe_constant and returns the ratio;
// used to validate reports.
double replay_witness(const std::string& problem, const nlohmann::json& witness);

}  // namespace mxa
