#include <cmath>

#include <doctest.h>

#include "mxa/hunt.hpp"

using namespace mxa;

namespace {

SearchConfig small_cfg() {
  SearchConfig cfg;
  cfg.seed = 17;
  cfg.restarts = 2;
  cfg.steps = 120;
  cfg.dims = {2, 3};
  return cfg;
}

}  // namespace

TEST_CASE("search is deterministic per seed") {
  auto cfg = small_cfg();
  auto r1 = search("CONJ_A", cfg);
  auto r2 = search("CONJ_A", cfg);
  CHECK(r1.to_json().dump() == r2.to_json().dump());
  cfg.seed = 18;
  auto r3 = search("CONJ_A", cfg);
  CHECK(r1.to_json().dump() != r3.to_json().dump());
}

TEST_CASE("history of improvements is nondecreasing") {
  auto rep = search("HAYASHI_ESSHERM", small_cfg());
  for (std::size_t i = 1; i < rep.history.size(); ++i)
    CHECK(rep.history[i].ratio >= rep.history[i - 1].ratio);
  CHECK_FALSE(rep.history.empty());
}

TEST_CASE("witness replays to the reported ratio") {
  for (const auto& id : hunt_problems()) {
    auto rep = search(id, small_cfg());
    const double replay = replay_witness(id, rep.witness);
    INFO(id);
    CHECK(std::abs(replay - rep.best_ratio) <= 1e-10 * std::max(1.0, std::abs(rep.best_ratio)));
  }
}

TEST_CASE("scale invariance of the ratio objectives") {
  auto rep = search("CONJ_A", small_cfg());
  auto witness = rep.witness;
  // scale A, B, Z; the ratio is invariant
  auto scale_matrix = [](nlohmann::json& j, double s) {
    for (auto& e : j["entries"]) {
      e[0] = e[0].get<double>() * s;
      e[1] = e[1].get<double>() * s;
    }
  };
  scale_matrix(witness["A"], 2.0);
  scale_matrix(witness["B"], 0.5);
  scale_matrix(witness["Z"], 3.0);
  CHECK(replay_witness("CONJ_A", witness) ==
        doctest::Approx(rep.best_ratio).epsilon(1e-9));
}

TEST_CASE("conj_a at n = 1 is exactly 1") {
  SearchConfig cfg;
  cfg.seed = 5;
  cfg.restarts = 2;
  cfg.steps = 60;
  cfg.dims = {1};
  auto rep = search("CONJ_A", cfg);
  CHECK(rep.best_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(rep.sanity_violated);
}

TEST_CASE("probes reach the sharp constants on their witness families") {
  SearchConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 4;
  cfg.steps = 150;
  cfg.dims = {2, 3};
  auto p1 = probe_constant("CARTESIAN_2P", cfg);
  CHECK(std::abs(p1.best_ratio - 2.0) <= 1e-3);
  CHECK_FALSE(p1.sanity_violated);
  auto p2 = probe_constant("SQRT3", cfg);
  CHECK(std::abs(p2.best_ratio - std::sqrt(3.0)) <= 1e-3);
  auto p3 = probe_constant("FOURBLOCK_2", cfg);
  CHECK(std::abs(p3.best_ratio - 2.0) <= 1e-3);
  auto p4 = probe_constant("SEMI_SQRT2", cfg);
  CHECK(p4.best_ratio <= std::sqrt(2.0) + 1e-9);
}

TEST_CASE("bad configs are rejected") {
  SearchConfig cfg;
  cfg.restarts = 0;
  CHECK_THROWS_AS(search("CONJ_A", cfg), Error);
  cfg.restarts = 1;
  cfg.dims = {40};
  CHECK_THROWS_AS(search("CONJ_A", cfg), Error);
  cfg.dims = {3};
  CHECK_THROWS_AS(search("NOT_A_PROBLEM", cfg), Error);
}
