#pragma once
//
// Randomized checker catalog: each entry verifies one inequality or identity
// on seeded random instances and reports the worst signed margin together
// with a replayable witness. Margins are relative; pass means
// worst_margin >= -1e-8. Conjecture probes are reported but never gate a
// suite.
//

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mxa/dense.hpp"
#include "mxa/rng.hpp"

namespace mxa {

struct TrialConfig {
  std::size_t trials = 200;
  std::vector<std::size_t> dims = {2, 3, 4, 5};
  std::uint64_t seed = 0;
  std::map<std::string, double> params;
  std::size_t threads = 1;  // 0 = hardware concurrency
};

// Handed to a checker for one trial. Matrices are only recorded during the
// witness replay of the worst trial.
struct TrialContext {
  Rng rng;
  std::size_t n = 2;
  const TrialConfig* cfg = nullptr;
  bool record = false;
  nlohmann::json* sink = nullptr;

  explicit TrialContext(std::uint64_t seed) : rng(seed) {}
  void put(const std::string& key, const Matrix& m);
  void put_value(const std::string& key, double v);
  double param(const std::string& key, double fallback) const;
};

struct TheoremDef {
  std::string id;
  std::string summary;  // what the checker verifies, in plain language
  std::function<double(TrialContext&)> margin;
  bool proven = true;  // false: probe only, never gates a suite
};

const std::vector<TheoremDef>& theorem_catalog();
bool theorem_exists(const std::string& id);

struct CheckReport {
  std::string theorem;
  std::size_t trials_run = 0;
  double worst_margin = 0.0;
  std::size_t worst_trial = 0;
  bool verdict = false;
  bool proven = true;
  nlohmann::json witness;

  nlohmann::json to_json() const;
};

CheckReport run_check(const std::string& id, const TrialConfig& cfg);

// Re-executes a single trial deterministically (witness replay).
double rerun_trial(const std::string& id, const TrialConfig& cfg, std::size_t trial);

struct SuiteResult {
  std::vector<CheckReport> reports;
  std::size_t failed_proven = 0;
  bool all_proven_pass() const { return failed_proven == 0; }
};

// Empty id list means the whole catalog.
SuiteResult run_suite(const std::vector<std::string>& ids, const TrialConfig& cfg);

// Margin helpers shared by checkers and the acceptance suite. All margins
// are scaled so that -1e-8 is a meaningful failure threshold.
namespace margin {
// lhs <= rhs entrywise in the PSD order.
double psd_gap(const Matrix& lhs, const Matrix& rhs);
// exists U unitary with x <= U y U^*.
double dominance(const Matrix& x, const Matrix& y);
double dominance_values(std::vector<double> lx, std::vector<double> ly);
// exists V with x <= a + V b V^*.
double dominance_offset(const Matrix& x, const Matrix& a, const Matrix& b);
// necessary condition for x <= U y U^* + V z V^* (Weyl pairs + trace).
double weyl_two_orbit(const Matrix& x, const Matrix& y, const Matrix& z);
// lhs <= rhs as scalars.
double scalar(double lhs, double rhs);
// min over the norm catalog of ||lhs|| <= ||rhs||.
double norms(const Matrix& lhs, const Matrix& rhs);
// weak log-majorization from eigenvalue lists (log-space margin).
double wlog_values(std::vector<double> lx, std::vector<double> ly);
double superwlog_values(std::vector<double> lx, std::vector<double> ly);
double log_values(std::vector<double> lx, std::vector<double> ly);
}  // namespace margin

}  // namespace mxa
