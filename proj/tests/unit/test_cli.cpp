#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ldmac/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ldmac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_dir(const std::string& name) {
  const auto d = std::filesystem::temp_directory_path() / ("ldmac_cli_test_" + name);
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("bounds and classify") {
  const Run r = run({"bounds", "--n1", "23", "--n2", "21", "--ni", "13"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["sum_rate_bound"] == 30);
  CHECK(j["branch"] == "AlignHigh");
  CHECK(j["subcase"] == "RhoPosHigh");
  CHECK(j["derived"]["alpha_bar"]["exact"] == "25/46");

  const Run c = run({"classify", "--n1", "5", "--n2", "4", "--ni", "2"});
  REQUIRE(c.code == 0);
  CHECK(c.doc()["branch"] == "Weak");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == ldmac::cli::kUsageError);
  CHECK(run({"nonsense"}).code == ldmac::cli::kUsageError);
  CHECK(run({"bounds", "--n1", "5"}).code == ldmac::cli::kUsageError);
  const Run r = run({"bounds", "--n1", "3", "--n2", "4", "--ni", "1"});
  CHECK(r.code == ldmac::cli::kUsageError);
  CHECK(r.doc()["error"]["type"] == "usage");
  CHECK(r.err.find("ldmac:") == 0);
  CHECK(run({"gdof", "--a", "x", "--b", "0.8"}).code == ldmac::cli::kUsageError);
}

TEST_CASE("construct") {
  const Run r = run({"construct", "--n1", "12", "--n2", "11", "--ni", "7", "--verify"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["bound_match"] == true);
  CHECK(j["rates"]["sum"] == 16);
  CHECK(j["zero_error"]["consistent_with_rank"] == true);

  const Run d = run({"construct", "--n1", "5", "--n2", "5", "--ni", "3"});
  CHECK(d.code == ldmac::cli::kDegenerate);
  CHECK(d.doc()["error"]["type"] == "degenerate");

  const Run lit = run({"construct", "--n1", "23", "--n2", "21", "--ni", "13", "--k-convention", "literal"});
  REQUIRE(lit.code == 0);
  CHECK(lit.doc()["rates"]["sum"] == 28);
  CHECK(lit.doc()["bound_match"] == false);
}

TEST_CASE("construct writes a precoder file that verify accepts") {
  const auto dir = temp_dir("construct");
  REQUIRE(run({"construct", "--n1", "9", "--n2", "7", "--ni", "5", "--out", dir.string()}).code == 0);
  REQUIRE(std::filesystem::exists(dir / "precoders.txt"));
  CHECK(json::parse(slurp(dir / "construct.json"))["rates"]["sum"] == 12);
  const Run v = run({"verify", "--precoders", (dir / "precoders.txt").string()});
  REQUIRE(v.code == 0);
  CHECK(v.doc()["zero_error"]["rx1_joint_unique"] == true);
  CHECK(v.doc()["bound_match"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify guard refusal and rank-only mode") {
  const Run r = run({"verify", "--n1", "23", "--n2", "21", "--ni", "13"});
  CHECK(r.code == ldmac::cli::kGuardRefused);
  CHECK(r.doc()["error"]["required_bits"] == 30);
  const Run k = run({"verify", "--n1", "23", "--n2", "21", "--ni", "13", "--rank-only"});
  REQUIRE(k.code == 0);
  CHECK(k.doc()["rank_rates"]["sum"] == 30);
}

TEST_CASE("search") {
  const Run r = run({"search", "--n1", "3", "--n2", "2", "--ni", "2"});
  REQUIRE(r.code == 0);
  const json j = r.doc();
  CHECK(j["match"] == true);
  CHECK(j["complete"] == true);
  CHECK(j["best_sum_rate"] == j["bound"]);
}

TEST_CASE("lemma1") {
  const Run r = run({"lemma1", "--n", "2", "--delta", "1", "--m", "1", "--instances", "50", "--restarts", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["all_hold"] == true);
  CHECK(r.doc()["bound"]["exact"] == "1");
}

TEST_CASE("gdof and sweep") {
  const Run g = run({"gdof", "--a", "0.55", "--b", "0.8"});
  REQUIRE(g.code == 0);
  CHECK(g.doc()["d_lower"]["exact"] == "13/10");
  const Run csv = run({"gdof", "--a", "0.55", "--b", "0.8", "--format", "csv"});
  CHECK(csv.out == "a,b,d_lower,w_ref,branch\n0.55,0.8,1.3,1.1,AlignLow\n");

  const Run s = run({"sweep", "--a-lo", "0", "--a-hi", "0.1", "--b-lo", "0.8", "--b-hi", "0.8", "--step", "0.05"});
  REQUIRE(s.code == 0);
  CHECK(s.out ==
        "a,b,d_lower,w_ref,branch\n"
        "0,0.8,2,2,Weak\n"
        "0.05,0.8,1.9,1.9,Weak\n"
        "0.1,0.8,1.8,1.8,Weak\n");
}

TEST_CASE("repro-figs is deterministic") {
  const auto a = temp_dir("figs_a"), b = temp_dir("figs_b");
  REQUIRE(run({"repro-figs", "--out", a.string()}).code == 0);
  REQUIRE(run({"repro-figs", "--out", b.string()}).code == 0);
  for (const char* f : {"fig3_grid.csv", "fig4_line.csv", "fig2_precoders.txt", "fig2_construction.json"}) {
    CAPTURE(f);
    CHECK(slurp(a / f) == slurp(b / f));
    CHECK_FALSE(slurp(a / f).empty());
  }
  const json fig2 = json::parse(slurp(a / "fig2_construction.json"));
  CHECK(fig2["sum_rate_bound"] == 30);
  CHECK(fig2["conventions"]["shifted"]["rates"]["sum"] == 30);
  CHECK(fig2["conventions"]["literal"]["rates"]["sum"] == 28);
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
}
