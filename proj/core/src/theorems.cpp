#include "mxa/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "mxa/eig.hpp"
#include "mxa/json_io.hpp"
#include "mxa/norms.hpp"

namespace mxa {

void TrialContext::put(const std::string& key, const Matrix& m) {
  if (record && sink) (*sink)[key] = matrix_to_json(m);
}

void TrialContext::put_value(const std::string& key, double v) {
  if (record && sink) (*sink)[key] = v;
}

double TrialContext::param(const std::string& key, double fallback) const {
  if (!cfg) return fallback;
  auto it = cfg->params.find(key);
  return it == cfg->params.end() ? fallback : it->second;
}

namespace margin {

double scalar(double lhs, double rhs) {
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return (rhs - lhs) / scale;
}

double psd_gap(const Matrix& lhs, const Matrix& rhs) {
  const Matrix gap = hermitian_part(rhs - lhs);
  const double scale = std::max({opnorm(lhs), opnorm(rhs), 1e-6});
  return min_eig(gap) / scale;
}

double dominance_values(std::vector<double> lx, std::vector<double> ly) {
  std::sort(lx.rbegin(), lx.rend());
  std::sort(ly.rbegin(), ly.rend());
  double scale = 1e-6;
  for (double v : ly) scale = std::max(scale, std::abs(v));
  for (double v : lx) scale = std::max(scale, std::abs(v));
  double worst = 1e300;
  for (std::size_t k = 0; k < lx.size(); ++k) worst = std::min(worst, (ly[k] - lx[k]) / scale);
  return worst;
}

double dominance(const Matrix& x, const Matrix& y) {
  return dominance_values(eigvals(hermitian_part(x)), eigvals(hermitian_part(y)));
}

double dominance_offset(const Matrix& x, const Matrix& a, const Matrix& b) {
  return dominance(hermitian_part(x - a), b);
}

double weyl_two_orbit(const Matrix& x, const Matrix& y, const Matrix& z) {
  auto lx = eigvals(hermitian_part(x));
  auto ly = eigvals(hermitian_part(y));
  auto lz = eigvals(hermitian_part(z));
  const std::size_t n = lx.size();
  double scale = 1e-6;
  for (double v : lx) scale = std::max(scale, std::abs(v));
  for (double v : ly) scale = std::max(scale, std::abs(v));
  for (double v : lz) scale = std::max(scale, std::abs(v));
  double worst = 1e300;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + i < n; ++j)
      worst = std::min(worst, (ly[i] + lz[j] - lx[i + j]) / scale);
  // trace necessary condition
  double tx = 0.0, ty = 0.0, tz = 0.0;
  for (double v : lx) tx += v;
  for (double v : ly) ty += v;
  for (double v : lz) tz += v;
  worst = std::min(worst, (ty + tz - tx) / (scale * n));
  return worst;
}

double norms(const Matrix& lhs, const Matrix& rhs) {
  auto ml = singular_values(lhs);
  auto mr = singular_values(rhs);
  double worst = 1e300;
  for (const auto& id : norm_catalog(std::min(ml.size(), mr.size())))
    worst = std::min(worst, scalar(norm_from_singvals(id, ml), norm_from_singvals(id, mr)));
  return worst;
}

namespace {

double log_partials(std::vector<double> lx, std::vector<double> ly, bool ascending,
                    bool flip_sign, bool require_final_equality) {
  if (ascending) {
    std::sort(lx.begin(), lx.end());
    std::sort(ly.begin(), ly.end());
  } else {
    std::sort(lx.rbegin(), lx.rend());
    std::sort(ly.rbegin(), ly.rend());
  }
  double top = 1e-300;
  for (double v : lx) top = std::max(top, std::abs(v));
  for (double v : ly) top = std::max(top, std::abs(v));
  const double floor = tol::eig_floor * top;
  double sx = 0.0, sy = 0.0, worst = 1e300;
  double final_margin = 0.0;
  bool floored = false;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    if (lx[k] <= floor || ly[k] <= floor) floored = true;
    sx += std::log(std::max(lx[k], floor));
    sy += std::log(std::max(ly[k], floor));
    const double m = flip_sign ? sx - sy : sy - sx;
    worst = std::min(worst, m);
    final_margin = m;
  }
  if (require_final_equality && !floored) worst = std::min(worst, -std::abs(final_margin));
  return worst;
}

}  // namespace

double wlog_values(std::vector<double> lx, std::vector<double> ly) {
  return log_partials(std::move(lx), std::move(ly), false, false, false);
}

double superwlog_values(std::vector<double> lx, std::vector<double> ly) {
  return log_partials(std::move(lx), std::move(ly), true, true, false);
}

double log_values(std::vector<double> lx, std::vector<double> ly) {
  // weak log plus determinant equality: the final margin enters with both
  // signs so equality failures surface as negative margins.
  double weak = log_partials(lx, ly, false, false, false);
  std::sort(lx.rbegin(), lx.rend());
  std::sort(ly.rbegin(), ly.rend());
  double top = 1e-300;
  for (double v : lx) top = std::max(top, std::abs(v));
  for (double v : ly) top = std::max(top, std::abs(v));
  const double floor = tol::eig_floor * top;
  double sx = 0.0, sy = 0.0;
  bool floored = false;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    if (lx[k] <= floor || ly[k] <= floor) floored = true;
    sx += std::log(std::max(lx[k], floor));
    sy += std::log(std::max(ly[k], floor));
  }
  if (!floored) weak = std::min(weak, -std::abs(sy - sx));
  return weak;
}

}  // namespace margin

bool theorem_exists(const std::string& id) {
  for (const auto& def : theorem_catalog())
    if (def.id == id) return true;
  return false;
}

namespace {

const TheoremDef& find_theorem(const std::string& id) {
  for (const auto& def : theorem_catalog())
    if (def.id == id) return def;
  throw Error(Errc::UnknownTheorem, id);
}

std::uint64_t trial_seed(const TrialConfig& cfg, const std::string& id, std::size_t trial) {
  return mix64(hash_combine(hash_combine(cfg.seed, hash_string(id)), trial));
}

double run_one(const TheoremDef& def, const TrialConfig& cfg, std::size_t trial,
               bool record, nlohmann::json* sink) {
  TrialContext ctx(trial_seed(cfg, def.id, trial));
  ctx.cfg = &cfg;
  ctx.n = cfg.dims.empty() ? 3 : cfg.dims[trial % cfg.dims.size()];
  ctx.record = record;
  ctx.sink = sink;
  return def.margin(ctx);
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
  return {{"theorem", theorem},     {"trials", trials_run}, {"worst_margin", worst_margin},
          {"worst_trial", worst_trial}, {"verdict", verdict ? "pass" : "fail"},
          {"proven", proven},       {"witness", witness}};
}

CheckReport run_check(const std::string& id, const TrialConfig& cfg) {
  const TheoremDef& def = find_theorem(id);
  if (cfg.trials < 1) throw Error(Errc::BadConfig, "trials >= 1 required");

  std::vector<double> margins(cfg.trials);
  std::size_t threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
  threads = std::max<std::size_t>(1, std::min(threads, cfg.trials));

  if (threads == 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) margins[t] = run_one(def, cfg, t, false, nullptr);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t t = next.fetch_add(1);
          if (t >= cfg.trials) return;
          margins[t] = run_one(def, cfg, t, false, nullptr);
        }
      });
    for (auto& th : pool) th.join();
  }

  CheckReport rep;
  rep.theorem = id;
  rep.trials_run = cfg.trials;
  rep.proven = def.proven;
  rep.worst_margin = margins[0];
  rep.worst_trial = 0;
  for (std::size_t t = 1; t < cfg.trials; ++t)
    if (margins[t] < rep.worst_margin) {
      rep.worst_margin = margins[t];
      rep.worst_trial = t;
    }
  rep.verdict = rep.worst_margin >= -tol::check;

  // Replay the worst trial with recording on; embeds the full instance.
  nlohmann::json witness;
  witness["trial"] = rep.worst_trial;
  witness["margin"] = rep.worst_margin;
  witness["seed"] = cfg.seed;
  const double replayed = run_one(def, cfg, rep.worst_trial, true, &witness);
  witness["replayed_margin"] = replayed;
  rep.witness = std::move(witness);
  return rep;
}

double rerun_trial(const std::string& id, const TrialConfig& cfg, std::size_t trial) {
  return run_one(find_theorem(id), cfg, trial, false, nullptr);
}

SuiteResult run_suite(const std::vector<std::string>& ids, const TrialConfig& cfg) {
  SuiteResult out;
  if (ids.empty()) {
    for (const auto& def : theorem_catalog()) out.reports.push_back(run_check(def.id, cfg));
  } else {
    for (const auto& id : ids) out.reports.push_back(run_check(id, cfg));
  }
  for (const auto& rep : out.reports)
    if (rep.proven && !rep.verdict) ++out.failed_proven;
  return out;
}

}  // namespace mxa
