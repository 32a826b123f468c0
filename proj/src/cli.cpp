#include "ldmac/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "ldmac/bounds.hpp"
#include "ldmac/channel.hpp"
#include "ldmac/coding.hpp"
#include "ldmac/gdof.hpp"
#include "ldmac/oracle.hpp"
#include "ldmac/precoder_io.hpp"
#include "ldmac/rational.hpp"

namespace ldmac::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Raised for well-formed command lines with unusable values.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json rational_json(const Rational& r) { return {{"decimal", to_decimal_string(r)}, {"exact", to_exact_string(r)}}; }

std::string fixed12(long double x) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(12) << static_cast<double>(x);
  return s.str();
}

Json params_json(const SystemParams& p) { return {{"n1", p.n1}, {"n2", p.n2}, {"ni", p.ni}}; }

Json regime_json(const Regime& r) {
  return {{"branch", to_string(r.branch)}, {"subcase", r.subcase ? Json(to_string(*r.subcase)) : Json(nullptr)}};
}

Json rates_json(const RateTriple& r) { return {{"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}, {"sum", r.sum()}}; }

Json precoders_json(const PrecoderTriple& v) {
  return {{"q", v.v1.rows()}, {"V1", v.v1.to_strings()}, {"V2", v.v2.to_strings()}, {"V3", v.v3.to_strings()}};
}

Json zero_error_json(const ZeroErrorReport& z) {
  return {{"k1", z.k1},
          {"k2", z.k2},
          {"k3", z.k3},
          {"rx1_joint_unique", z.rx1_joint_unique},
          {"rx2_unique", z.rx2_unique},
          {"decodable_bits", {z.decodable1, z.decodable2, z.decodable3}},
          {"consistent_with_rank", z.consistent_with_rank}};
}

Json derived_json(const SystemParams& p) {
  const DerivedParams d = derive(p);
  return {{"Delta", d.delta},         {"sigma", d.sigma},          {"tau", d.tau},
          {"rho", d.rho},             {"alpha", rational_json(d.alpha)}, {"beta", rational_json(d.beta)},
          {"alpha_bar", rational_json(d.alpha_bar)}};
}

SystemParams checked(const SystemParams& p) {
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read precoder file '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("--format '" + format + "' not supported here (use " + list + ")");
}

// ---------------------------------------------------------------------------
// Commands

Json bounds_json(const SystemParams& p) {
  const SumRateBound b = sum_rate_bound(p);
  Json j = {{"command", "bounds"}, {"params", params_json(p)}};
  j.update(regime_json(b.regime));
  j["sum_rate_bound"] = b.value.numerator();
  j["expression"] = b.expression;
  j["uncapped"] = b.uncapped.numerator();
  j["derived"] = derived_json(p);
  return j;
}

Json construct_json(const SystemParams& p, const Construction& c, KConvention conv) {
  const RateTriple r = achievable_rates(p, c.precoders);
  const SumRateBound b = sum_rate_bound(p);
  Json j = {{"command", "construct"}, {"params", params_json(p)}, {"k_convention", to_string(conv)}};
  j["regime"] = regime_json(c.regime);
  j["scheme"] = c.scheme;
  j["columns"] = {{"k1", c.precoders.v1.cols()}, {"k2", c.precoders.v2.cols()}, {"k3", c.precoders.v3.cols()}};
  j["rates"] = rates_json(r);
  j["sum_rate_bound"] = b.value.numerator();
  j["bound_match"] = Rational(r.sum()) == b.value;
  j["precoders"] = precoders_json(c.precoders);
  return j;
}

Json fig2_json() {
  const SystemParams p{23, 21, 13};
  Json j = {{"params", params_json(p)}, {"sum_rate_bound", sum_rate_bound(p).value.numerator()}};
  Json conventions = Json::object();
  for (KConvention conv : {KConvention::Shifted, KConvention::Literal}) {
    const Construction c = construct_precoders(p, {conv});
    const RateTriple r = achievable_rates(p, c.precoders);
    conventions[to_string(conv)] = {
        {"columns", {c.precoders.v1.cols(), c.precoders.v2.cols(), c.precoders.v3.cols()}},
        {"rates", rates_json(r)},
        {"bound_match", Rational(r.sum()) == sum_rate_bound(p).value}};
  }
  j["conventions"] = conventions;
  j["caption_rates"] = {{"r1", 11}, {"r2", 5}, {"r3", 12}, {"sum", 28}};
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-capacity tools for the deterministic MAC with an interfering point-to-point link", "ldmac"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");

  int n1 = 0, n2 = 0, ni = 0, jobs = 0, max_bits = kDefaultEnumerationGuard;
  std::uint64_t seed = 1;
  std::string format, k_conv = "shifted", out_path, precoder_path, mode = "exhaustive";
  std::string a_text, b_text, a_lo = "0", a_hi = "7/10", b_lo = "4/5", b_hi = "1", step_text = "1/100";
  bool do_verify = false, rank_only = false;
  int lemma_n = 1, lemma_delta = 1, lemma_m = 1, instances = 1000, restarts = 20;

  const auto gains = [&](CLI::App* sc, bool required) {
    for (auto [name, ref] : {std::pair{"--n1", &n1}, std::pair{"--n2", &n2}, std::pair{"--ni", &ni}}) {
      auto* o = sc->add_option(name, *ref, "Channel gain (nonnegative integer)")->check(CLI::NonNegativeNumber);
      if (required) o->required();
    }
  };

  auto* bounds = app.add_subcommand("bounds", "Sum-rate bound and regime for (n1, n2, ni)");
  gains(bounds, true);
  auto* classify_cmd = app.add_subcommand("classify", "Regime and derived parameters");
  gains(classify_cmd, true);

  auto* construct = app.add_subcommand("construct", "Build precoders meeting the bound");
  gains(construct, true);
  construct->add_option("--k-convention", k_conv, "Alignment index convention: shifted | literal");
  construct->add_flag("--verify", do_verify, "Also run the exhaustive zero-error check when small enough");
  construct->add_option("--out", out_path, "Directory for precoders.txt and construct.json");
  construct->add_option("--format", format, "json | text (text prints the precoder file)");
  construct->add_option("--jobs", jobs, "Worker threads for verification")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Rank rates and exhaustive zero-error check of precoders");
  gains(verify, false);
  verify->add_option("--precoders", precoder_path, "Precoder file (default: the built-in construction)");
  verify->add_flag("--rank-only", rank_only, "Skip exhaustive enumeration");
  verify->add_option("--max-bits", max_bits, "Enumeration guard in total data bits")->check(CLI::Range(0, 30));
  verify->add_option("--k-convention", k_conv, "Alignment index convention for the built-in construction");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::NonNegativeNumber);

  auto* search = app.add_subcommand("search", "Best linear sum rate by search");
  gains(search, true);
  search->add_option("--mode", mode, "exhaustive | randomized");
  search->add_option("--seed", seed, "Random seed");
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::NonNegativeNumber);

  auto* lemma1 = app.add_subcommand("lemma1", "Exact-entropy check of the shifted-sum inequality");
  lemma1->add_option("--n", lemma_n, "Rows of A")->check(CLI::Range(0, 6));
  lemma1->add_option("--delta", lemma_delta, "Row offset Delta")->check(CLI::Range(0, 6));
  lemma1->add_option("--m", lemma_m, "Columns")->check(CLI::Range(1, 4));
  lemma1->add_option("--instances", instances, "Random distribution pairs to check")->check(CLI::NonNegativeNumber);
  lemma1->add_option("--restarts", restarts, "Restarts of the gap-maximizing search")->check(CLI::NonNegativeNumber);
  lemma1->add_option("--seed", seed, "Random seed");

  auto* gdof_cmd = app.add_subcommand("gdof", "Normalized lower bound at one point (a, b)");
  gdof_cmd->add_option("--a", a_text, "Interference exponent (decimal or p/q)")->required();
  gdof_cmd->add_option("--b", b_text, "Weak-user exponent in [0, 1]")->required();
  gdof_cmd->add_option("--format", format, "json | csv");

  auto* sweep_cmd = app.add_subcommand("sweep", "Grid of normalized values as CSV");
  sweep_cmd->add_option("--a-lo", a_lo, "Smallest a");
  sweep_cmd->add_option("--a-hi", a_hi, "Largest a");
  sweep_cmd->add_option("--b-lo", b_lo, "Smallest b");
  sweep_cmd->add_option("--b-hi", b_hi, "Largest b");
  sweep_cmd->add_option("--step", step_text, "Grid step");
  sweep_cmd->add_option("--out", out_path, "CSV file (default: standard output)");
  sweep_cmd->add_option("--format", format, "csv | json");

  auto* repro = app.add_subcommand("repro-figs", "Write the figure data sets to a directory");
  repro->add_option("--out", out_path, "Output directory")->required();
  repro->add_option("--seed", seed, "Random seed (recorded; the figure data are deterministic)");
  repro->add_option("--k-convention", k_conv, "Alignment index convention for the construction");
  repro->add_option("--jobs", jobs, "Worker threads")->check(CLI::NonNegativeNumber);

  std::string command = "";
  const auto error = [&](int code, const std::string& type, const std::string& message, Json extra = Json::object()) {
    Json j = {{"command", command}, {"error", {{"type", type}, {"message", message}}}};
    for (auto& [k, v] : extra.items()) j["error"][k] = v;
    out << dump(j);
    err << "ldmac: " << message << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    return error(kUsageError, "usage", e.what());
  }
  command = app.get_subcommands().front()->get_name();

  try {
    const auto default_format = [&](const char* def) {
      if (format.empty()) format = def;
    };
    const auto conv = [&] {
      try {
        return parse_k_convention(k_conv);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    };
    const unsigned workers = static_cast<unsigned>(jobs);

    if (bounds->parsed()) {
      default_format("json");
      require_format(format, {"json"});
      out << dump(bounds_json(checked({n1, n2, ni})));
      return 0;
    }
    if (classify_cmd->parsed()) {
      default_format("json");
      require_format(format, {"json"});
      const SystemParams p = checked({n1, n2, ni});
      if (p.n1 == 0) throw UsageError("classification needs n1 > 0");
      Json j = {{"command", "classify"}, {"params", params_json(p)}};
      j.update(regime_json(classify(p)));
      j["derived"] = derived_json(p);
      out << dump(j);
      return 0;
    }
    if (construct->parsed()) {
      default_format("json");
      require_format(format, {"json", "text"});
      const SystemParams p = checked({n1, n2, ni});
      const KConvention kc = conv();
      const Construction c = construct_precoders(p, {kc});
      Json j = construct_json(p, c, kc);
      if (do_verify) {
        try {
          j["zero_error"] = zero_error_json(verify_zero_error(p, c.precoders, kDefaultEnumerationGuard, workers));
        } catch (const EnumerationBudgetExceeded& e) {
          j["zero_error"] = {{"skipped", e.what()}};
        }
      }
      if (!out_path.empty()) {
        fs::create_directories(out_path);
        write_file(fs::path(out_path) / "precoders.txt", format_precoders(p, c.precoders));
        write_file(fs::path(out_path) / "construct.json", dump(j));
      }
      out << (format == "text" ? format_precoders(p, c.precoders) : dump(j));
      return 0;
    }
    if (verify->parsed()) {
      default_format("json");
      require_format(format, {"json"});
      SystemParams p;
      PrecoderTriple v;
      std::string source;
      if (!precoder_path.empty()) {
        PrecoderFile f;
        try {
          f = parse_precoders(read_file(precoder_path));
        } catch (const UsageError&) {
          throw;
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        p = f.params;
        v = f.precoders;
        source = "file";
      } else {
        p = checked({n1, n2, ni});
        v = construct_precoders(p, {conv()}).precoders;
        source = "construction";
      }
      const RateTriple r = achievable_rates(p, v);
      Json j = {{"command", "verify"}, {"params", params_json(p)}, {"source", source}};
      j["columns"] = {{"k1", v.v1.cols()}, {"k2", v.v2.cols()}, {"k3", v.v3.cols()}};
      j["rank_rates"] = rates_json(r);
      j["sum_rate_bound"] = sum_rate_bound(p).value.numerator();
      j["bound_match"] = Rational(r.sum()) == sum_rate_bound(p).value;
      if (!rank_only) j["zero_error"] = zero_error_json(verify_zero_error(p, v, max_bits, workers));
      out << dump(j);
      return 0;
    }
    if (search->parsed()) {
      default_format("json");
      require_format(format, {"json"});
      const SystemParams p = checked({n1, n2, ni});
      oracle::SearchBudget budget;
      if (mode == "exhaustive") budget.mode = oracle::SearchMode::Exhaustive;
      else if (mode == "randomized") budget.mode = oracle::SearchMode::Randomized;
      else throw UsageError("--mode must be 'exhaustive' or 'randomized'");
      budget.seed = seed;
      budget.jobs = workers;
      const oracle::SearchResult res = oracle::best_linear_sum_rate(p, budget);
      const SumRateBound b = sum_rate_bound(p);
      Json j = {{"command", "search"}, {"params", params_json(p)}, {"mode", mode}, {"seed", seed}};
      j["mode_used"] = res.mode_used == oracle::SearchMode::Exhaustive ? "exhaustive" : "randomized";
      j["best_sum_rate"] = res.rates.sum();
      j["rates"] = rates_json(res.rates);
      j["bound"] = b.value.numerator();
      j["match"] = Rational(res.rates.sum()) == b.value;
      j["complete"] = res.complete;
      j["precoders"] = precoders_json(res.precoders);
      out << dump(j);
      return 0;
    }
    if (lemma1->parsed()) {
      default_format("json");
      require_format(format, {"json"});
      std::mt19937_64 rng(seed);
      long double max_gap = 0;
      bool all_hold = true;
      int checked_count = 0;
      for (int i = 0; i < instances; ++i) {
        const auto a = oracle::random_distribution(lemma_n, lemma_m, rng);
        const auto b = oracle::random_distribution(lemma_n + lemma_delta, lemma_m, rng);
        const oracle::Lemma1Result r = oracle::lemma1_gap(a, b);
        max_gap = std::max(max_gap, r.gap);
        all_hold = all_hold && r.holds;
        ++checked_count;
      }
      const long double searched = oracle::max_lemma1_gap_search(lemma_n, lemma_delta, lemma_m, restarts, seed);
      const Rational bound = Rational(lemma_m) * phi2(lemma_n, lemma_delta);
      Json j = {{"command", "lemma1"},
                {"params",
                 {{"n", lemma_n}, {"delta", lemma_delta}, {"m", lemma_m}, {"instances", instances},
                  {"restarts", restarts}, {"seed", seed}}}};
      j["bound"] = rational_json(bound);
      j["checked"] = checked_count;
      j["all_hold"] = all_hold && searched <= static_cast<long double>(bound.to_double()) + oracle::kEntropySlack;
      j["max_gap_sampled"] = fixed12(max_gap);
      j["max_gap_search"] = fixed12(searched);
      out << dump(j);
      return 0;
    }
    if (gdof_cmd->parsed()) {
      default_format("json");
      require_format(format, {"json", "csv"});
      const Rational a = rational_arg("a", a_text), b = rational_arg("b", b_text);
      if (a < 0 || b < 0 || b > 1) throw UsageError("need a >= 0 and 0 <= b <= 1");
      const gdof::GdofPoint pt = gdof::gdof_lower(a, b);
      if (format == "csv") {
        gdof::write_csv(out, {pt});
        return 0;
      }
      Json j = {{"command", "gdof"}, {"params", {{"a", rational_json(a)}, {"b", rational_json(b)}}}};
      j["branch"] = to_string(pt.branch);
      j["d_lower"] = rational_json(pt.d_lower);
      j["w_ref"] = rational_json(pt.w_ref);
      j["a_bar"] = rational_json(gdof::a_bar(b));
      out << dump(j);
      return 0;
    }
    if (sweep_cmd->parsed()) {
      default_format("csv");
      require_format(format, {"csv", "json"});
      const gdof::GridRange ar{rational_arg("a-lo", a_lo), rational_arg("a-hi", a_hi)};
      const gdof::GridRange br{rational_arg("b-lo", b_lo), rational_arg("b-hi", b_hi)};
      const Rational step = rational_arg("step", step_text);
      if (step <= 0 || ar.lo < 0 || br.lo < 0 || br.hi > 1 || ar.lo > ar.hi || br.lo > br.hi)
        throw UsageError("need step > 0, 0 <= a-lo <= a-hi and 0 <= b-lo <= b-hi <= 1");
      const auto points = gdof::sweep(ar, br, step);
      std::ostringstream body;
      if (format == "csv") {
        gdof::write_csv(body, points);
      } else {
        Json rows = Json::array();
        for (const auto& pt : points)
          rows.push_back({{"a", rational_json(pt.a)}, {"b", rational_json(pt.b)}, {"d_lower", rational_json(pt.d_lower)},
                          {"w_ref", rational_json(pt.w_ref)}, {"branch", to_string(pt.branch)}});
        body << dump({{"command", "sweep"},
                      {"params", {{"a_lo", a_lo}, {"a_hi", a_hi}, {"b_lo", b_lo}, {"b_hi", b_hi}, {"step", step_text}}},
                      {"points", rows}});
      }
      if (out_path.empty()) {
        out << body.str();
      } else {
        write_file(out_path, body.str());
        out << dump({{"command", "sweep"}, {"rows", points.size()}, {"file", out_path}});
      }
      return 0;
    }
    if (repro->parsed()) {
      default_format("json");
      require_format(format, {"json"});
      const KConvention kc = conv();
      const fs::path dir(out_path);
      fs::create_directories(dir);

      std::ostringstream fig3, fig4;
      gdof::write_csv(fig3, gdof::sweep({0, Rational(7, 10)}, {Rational(4, 5), 1}, Rational(1, 100)));
      gdof::write_csv(fig4, gdof::sweep({0, Rational(3, 2)}, {Rational(4, 5), Rational(4, 5)}, Rational(1, 100)));
      write_file(dir / "fig3_grid.csv", fig3.str());
      write_file(dir / "fig4_line.csv", fig4.str());

      const SystemParams p{23, 21, 13};
      const Construction c = construct_precoders(p, {kc});
      write_file(dir / "fig2_precoders.txt", format_precoders(p, c.precoders));
      Json fig2 = fig2_json();
      fig2["k_convention"] = to_string(kc);
      fig2["construction"] = construct_json(p, c, kc);
      write_file(dir / "fig2_construction.json", dump(fig2));

      Json j = {{"command", "repro-figs"}, {"params", {{"out", out_path}, {"seed", seed}, {"k_convention", to_string(kc)}}}};
      j["files"] = {"fig3_grid.csv", "fig4_line.csv", "fig2_precoders.txt", "fig2_construction.json"};
      j["fig2_sum_rate"] = achievable_rates(p, c.precoders).sum();
      j["fig2_bound"] = sum_rate_bound(p).value.numerator();
      out << dump(j);
      return 0;
    }
    return error(kUsageError, "usage", "no command given");
  } catch (const UsageError& e) {
    return error(kUsageError, "usage", e.what());
  } catch (const DegenerateParameters& e) {
    return error(kDegenerate, "degenerate", e.what());
  } catch (const EnumerationBudgetExceeded& e) {
    return error(kGuardRefused, "enumeration_guard", std::string(e.what()),
                 {{"required_bits", e.required_bits()}, {"guard_bits", e.guard_bits()}, {"suggestion", "--rank-only"}});
  } catch (const std::length_error& e) {
    return error(kGuardRefused, "enumeration_guard", e.what());
  } catch (const std::invalid_argument& e) {
    return error(kUsageError, "invalid_argument", e.what());
  } catch (const std::exception& e) {
    return error(kInternalError, "internal", e.what());
  }
}

}  // namespace ldmac::cli
