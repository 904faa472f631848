// Command line front end: verify / decompose / numrange / hunt / demo.
// Exit codes: 0 success, 1 verification failure, 2 usage or IO error.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mxa/decomp.hpp"
#include "mxa/hunt.hpp"
#include "mxa/json_io.hpp"
#include "mxa/numrange.hpp"
#include "mxa/theorems.hpp"

namespace {

using nlohmann::json;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    mxa::save_json(out_path, j);
}

json config_echo(const mxa::TrialConfig& cfg) {
  return {{"trials", cfg.trials}, {"dims", cfg.dims}, {"seed", cfg.seed},
          {"threads", cfg.threads}};
}

int cmd_verify(const std::vector<std::string>& ids, mxa::TrialConfig cfg,
               const std::string& out_path) {
  for (const auto& id : ids)
    if (!mxa::theorem_exists(id)) {
      std::cerr << "unknown theorem id: " << id << "\n";
      return 2;
    }
  auto result = mxa::run_suite(ids, cfg);
  json reports = json::array();
  for (const auto& rep : result.reports) reports.push_back(rep.to_json());
  json out = {{"command", "verify"},
              {"config", config_echo(cfg)},
              {"reports", reports},
              {"failed_proven", result.failed_proven}};
  emit(out, out_path);
  for (const auto& rep : result.reports)
    std::fprintf(stderr, "%-22s %10.3e %s%s\n", rep.theorem.c_str(), rep.worst_margin,
                 rep.verdict ? "pass" : "FAIL", rep.proven ? "" : " (probe)");
  return result.all_proven_pass() ? 0 : 1;
}

json cert_to_json(const mxa::DecompositionCertificate& cert) {
  json terms = json::array();
  for (const auto& t : cert.terms)
    terms.push_back({{"factor", mxa::matrix_to_json(t.factor)},
                     {"middle", mxa::matrix_to_json(t.middle)},
                     {"weight", t.weight}});
  return {{"terms", terms},
          {"residual", cert.residual},
          {"factor_orthonormality", cert.factor_orthonormality()}};
}

int cmd_decompose(const std::string& op, const std::string& in_path,
                  const std::string& out_path, std::size_t beta, std::size_t top,
                  std::vector<std::size_t> sizes) {
  json in = mxa::load_json(in_path);
  mxa::DecompositionCertificate cert;
  if (op == "pythagoras") {
    mxa::PartitionedMatrix pa;
    pa.base = mxa::matrix_from_json(in.at("matrix"));
    for (const auto& b : in.at("blocks"))
      pa.blocks.push_back({b.at("row_start").get<std::size_t>(),
                           b.at("row_end").get<std::size_t>(),
                           b.at("col_start").get<std::size_t>(),
                           b.at("col_end").get<std::size_t>()});
    cert = mxa::pythagoras(pa);
  } else {
    mxa::Matrix m = in.contains("matrix") ? mxa::matrix_from_json(in.at("matrix"))
                                          : mxa::matrix_from_json(in);
    if (op == "split2") {
      cert = mxa::split_positive_2x2(m, top ? top : m.rows() / 2);
    } else if (op == "splitmulti") {
      if (sizes.empty()) sizes.assign(m.rows(), 1);
      cert = mxa::split_positive_multi(m, sizes);
    } else if (op == "hermhalves") {
      cert = mxa::hermitian_offdiag_halves(m);
    } else if (op == "clifford") {
      cert = mxa::clifford_partial_trace(m, beta, beta == 8);
    } else {
      std::cerr << "unknown op: " << op << "\n";
      return 2;
    }
  }
  json out = {{"command", "decompose"}, {"op", op}, {"certificate", cert_to_json(cert)}};
  emit(out, out_path);
  return cert.residual <= 1e-8 ? 0 : 1;
}

int cmd_numrange(const std::string& in_path, const std::string& out_path,
                 const std::string& csv_path, std::size_t grid, std::size_t budget,
                 std::uint64_t seed) {
  mxa::Matrix m = mxa::load_matrix(in_path);
  auto prof = mxa::support_profile(m, grid);
  auto geo = mxa::geometry(prof);
  json out = {{"command", "numrange"},
              {"config", {{"grid", grid}, {"budget", budget}, {"seed", seed}}},
              {"width", geo.width},
              {"diameter", geo.diameter},
              {"dist0", geo.dist0},
              {"inradius", geo.inradius},
              {"indiameter", geo.indiameter},
              {"center", {geo.center.real(), geo.center.imag()}},
              {"degenerate", geo.degenerate}};
  if (m.rows() >= 2) {
    auto ew = mxa::elliptical_width(m, budget, seed);
    auto ds = mxa::dist_to_scalars(m);
    out["elliptical_width_lower"] = ew.lower;
    out["elliptical_width_upper"] = ew.upper;
    out["dist_to_scalars"] = ds.value;
    out["dist_to_scalars_argmin"] = {ds.argmin.real(), ds.argmin.imag()};
  }
  if (m.rows() == 2) {
    auto e = mxa::ellipse_2x2(m);
    out["ellipse"] = {{"focus1", {e.focus1.real(), e.focus1.imag()}},
                      {"focus2", {e.focus2.real(), e.focus2.imag()}},
                      {"minor_axis", e.minor_axis},
                      {"major_axis", e.major_axis}};
  }
  emit(out, out_path);
  if (!csv_path.empty()) {
    std::FILE* f = std::fopen(csv_path.c_str(), "w");
    if (!f) {
      std::cerr << "cannot write " << csv_path << "\n";
      return 2;
    }
    std::fprintf(f, "theta,x,y\n");
    for (std::size_t k = 0; k < prof.angles.size(); ++k) {
      // boundary point attaining the support in direction theta
      mxa::Matrix v = prof.extreme_vectors.column(k);
      const mxa::cpx z = (v.adjoint() * m * v)(0, 0);
      std::fprintf(f, "%.12g,%.12g,%.12g\n", prof.angles[k], z.real(), z.imag());
    }
    std::fclose(f);
  }
  return 0;
}

int cmd_hunt(const std::string& problem, const mxa::SearchConfig& cfg,
             const std::string& out_path) {
  mxa::SearchReport rep;
  bool found = false;
  for (const auto& id : mxa::hunt_problems())
    if (id == problem) {
      rep = mxa::search(problem, cfg);
      found = true;
    }
  for (const auto& id : mxa::probe_problems())
    if (id == problem) {
      rep = mxa::probe_constant(problem, cfg);
      found = true;
    }
  if (!found) {
    std::cerr << "unknown problem: " << problem << "\n";
    return 2;
  }
  json out = {{"command", "hunt"},
              {"config",
               {{"seed", cfg.seed},
                {"restarts", cfg.restarts},
                {"steps", cfg.steps},
                {"dims", cfg.dims}}},
              {"report", rep.to_json()}};
  emit(out, out_path);
  std::fprintf(stderr, "%s: best ratio %.9g (threshold %.9g)%s%s\n", rep.problem.c_str(),
               rep.best_ratio, rep.threshold, rep.violation_found ? " [finding]" : "",
               rep.sanity_violated ? " [SANITY VIOLATED]" : "");
  return rep.sanity_violated ? 1 : 0;
}

int cmd_demo(bool as_json, const std::string& out_path) {
  mxa::Matrix a{{1.0, 4.0, 5.0}, {2.0, 6.0, 7.0}, {3.0, 8.0, 9.0}};
  mxa::PartitionedMatrix pa;
  pa.base = a;
  pa.blocks = {{0, 3, 0, 1}, {0, 1, 1, 3}, {1, 3, 1, 3}};
  auto cert = mxa::pythagoras(pa);
  double trace_sum = 0.0;
  for (const auto& t : cert.terms) trace_sum += t.middle.trace().real();
  const double trace_full = (a.adjoint() * a).trace().real();
  if (as_json || !out_path.empty()) {
    json out = {{"command", "demo"},
                {"matrix", mxa::matrix_to_json(a)},
                {"certificate", cert_to_json(cert)},
                {"trace_sum", trace_sum},
                {"trace_full", trace_full}};
    emit(out, out_path);
  } else {
    std::printf("|A|^2 = U |A_1|^2 U* + V |A_2|^2 V* + W |A_3|^2 W*\n");
    std::printf("column block (1,2,3)^T, row block (4,5), square block [[6,7],[8,9]]\n");
    std::printf("residual               %.3e\n", cert.residual);
    std::printf("factor orthonormality  %.3e\n", cert.factor_orthonormality());
    std::printf("trace identity         %.0f = %.0f\n", trace_sum, trace_full);
  }
  return cert.residual <= 1e-10 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix analysis engine: decompositions, numerical range, checkers, search"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the randomized checker catalog");
  std::vector<std::string> ids;
  mxa::TrialConfig tcfg;
  tcfg.threads = 0;
  std::string out_path;
  verify->add_option("--ids", ids, "theorem ids (default: whole catalog)");
  verify->add_option("--trials", tcfg.trials, "trials per id");
  verify->add_option("--dims", tcfg.dims, "dimension cycle");
  verify->add_option("--seed", tcfg.seed, "master seed");
  verify->add_option("--threads", tcfg.threads, "worker threads (0 = all cores)");
  verify->add_option("--out", out_path, "write the JSON report here");

  // decompose
  auto* dec = app.add_subcommand("decompose", "build a decomposition certificate");
  std::string op = "pythagoras", in_path, dec_out;
  std::size_t beta = 2, top = 0;
  std::vector<std::size_t> sizes;
  dec->add_option("--op", op, "pythagoras|split2|splitmulti|hermhalves|clifford");
  dec->add_option("--in", in_path, "input JSON (matrix, plus blocks for pythagoras)")
      ->required();
  dec->add_option("--out", dec_out, "write the certificate JSON here");
  dec->add_option("--beta", beta, "block count for clifford (2, 4, 8)");
  dec->add_option("--top", top, "top block size for split2");
  dec->add_option("--sizes", sizes, "diagonal block sizes for splitmulti");

  // numrange
  auto* nr = app.add_subcommand("numrange", "numerical range geometry report");
  std::string nr_in, nr_out, nr_csv;
  std::size_t grid = 720, budget = 200;
  std::uint64_t nr_seed = 0;
  nr->add_option("--in", nr_in, "matrix JSON")->required();
  nr->add_option("--grid", grid, "support grid size (even, >= 8)");
  nr->add_option("--budget", budget, "sample budget for the elliptical width");
  nr->add_option("--seed", nr_seed, "seed for the elliptical width sampling");
  nr->add_option("--out", nr_out, "write the JSON report here");
  nr->add_option("--boundary-csv", nr_csv, "write boundary points (theta,x,y)");

  // hunt
  auto* hu = app.add_subcommand("hunt", "counterexample / sharp-constant search");
  std::string problem;
  mxa::SearchConfig scfg;
  std::string hunt_out;
  hu->add_option("--problem", problem, "problem id")->required();
  hu->add_option("--seed", scfg.seed, "master seed");
  hu->add_option("--restarts", scfg.restarts, "independent restarts");
  hu->add_option("--steps", scfg.steps, "hill-climb steps per restart");
  hu->add_option("--dims", scfg.dims, "dimension cycle");
  hu->add_option("--out", hunt_out, "write the JSON report here");

  // demo
  auto* demo = app.add_subcommand("demo", "title identity on the 3x3 example");
  bool demo_json = false;
  std::string demo_out;
  demo->add_flag("--json", demo_json, "machine readable output");
  demo->add_option("--out", demo_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(ids, tcfg, out_path);
    if (*dec) return cmd_decompose(op, in_path, dec_out, beta, top, sizes);
    if (*nr) return cmd_numrange(nr_in, nr_out, nr_csv, grid, budget, nr_seed);
    if (*hu) return cmd_hunt(problem, scfg, hunt_out);
    if (*demo) return cmd_demo(demo_json, demo_out);
  } catch (const mxa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
