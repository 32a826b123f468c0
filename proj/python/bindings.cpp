#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ldmac/bounds.hpp"
#include "ldmac/coding.hpp"
#include "ldmac/gdof.hpp"
#include "ldmac/oracle.hpp"

namespace py = pybind11;
using namespace ldmac;

namespace {

// Rationals cross the boundary as (numerator, denominator) pairs.
using Pair = std::pair<std::int64_t, std::int64_t>;

Pair to_pair(const Rational& r) { return {r.numerator(), r.denominator()}; }
Rational from_pair(const Pair& p) { return Rational(p.first, p.second); }

py::object subcase_or_none(const Regime& r) {
  return r.subcase ? py::cast(to_string(*r.subcase)) : py::none();
}

py::dict rates_dict(const RateTriple& r) {
  py::dict d;
  d["r1"] = r.r1;
  d["r2"] = r.r2;
  d["r3"] = r.r3;
  d["sum"] = r.sum();
  return d;
}

py::dict precoders_dict(const PrecoderTriple& v) {
  py::dict d;
  d["q"] = v.q();
  d["V1"] = v.v1.to_strings();
  d["V2"] = v.v2.to_strings();
  d["V3"] = v.v3.to_strings();
  return d;
}

gf2::BitMatrix matrix(const std::vector<std::string>& rows, std::size_t q) {
  if (rows.size() != q) throw std::invalid_argument("precoder must have q = " + std::to_string(q) + " rows");
  return gf2::BitMatrix::from_strings(rows, rows.empty() ? 0 : rows.front().size());
}

PrecoderTriple triple(const SystemParams& p, const std::vector<std::string>& v1, const std::vector<std::string>& v2,
                      const std::vector<std::string>& v3) {
  const auto q = static_cast<std::size_t>(p.levels());
  return {matrix(v1, q), matrix(v2, q), matrix(v3, q)};
}

py::dict gdof_dict(const gdof::GdofPoint& g) {
  py::dict d;
  d["a"] = to_pair(g.a);
  d["b"] = to_pair(g.b);
  d["d_lower"] = to_pair(g.d_lower);
  d["w_ref"] = to_pair(g.w_ref);
  d["branch"] = to_string(g.branch);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<DegenerateParameters>(m, "DegenerateParameters", PyExc_ValueError);
  py::register_exception<EnumerationBudgetExceeded>(m, "EnumerationBudgetExceeded", PyExc_RuntimeError);

  m.def("phi1", [](Pair p, Pair q) { return to_pair(phi1(from_pair(p), from_pair(q))); });
  m.def("phi2", [](Pair p, Pair q) { return to_pair(phi2(from_pair(p), from_pair(q))); });

  m.def("classify", [](int n1, int n2, int ni) {
    const SystemParams p{n1, n2, ni};
    p.validate();
    const Regime r = ldmac::classify(p);
    const DerivedParams d = derive(p);
    py::dict out;
    out["branch"] = to_string(r.branch);
    out["subcase"] = subcase_or_none(r);
    out["delta"] = d.delta;
    out["sigma"] = d.sigma;
    out["tau"] = d.tau;
    out["rho"] = d.rho;
    out["alpha"] = to_pair(d.alpha);
    out["beta"] = to_pair(d.beta);
    out["alpha_bar"] = to_pair(d.alpha_bar);
    return out;
  });

  m.def("sum_rate_bound", [](int n1, int n2, int ni) {
    const SumRateBound b = ldmac::sum_rate_bound({n1, n2, ni});
    py::dict out;
    out["value"] = to_pair(b.value);
    out["uncapped"] = to_pair(b.uncapped);
    out["branch"] = to_string(b.regime.branch);
    out["subcase"] = subcase_or_none(b.regime);
    out["expression"] = b.expression;
    return out;
  });

  m.def(
      "construct",
      [](int n1, int n2, int ni, int q, const std::string& k_convention) {
        const SystemParams p{n1, n2, ni, q};
        const Construction c = construct_precoders(p, {parse_k_convention(k_convention)});
        py::dict out;
        out["scheme"] = c.scheme;
        out["branch"] = to_string(c.regime.branch);
        out["subcase"] = subcase_or_none(c.regime);
        out["rates"] = rates_dict(achievable_rates(p, c.precoders));
        out["precoders"] = precoders_dict(c.precoders);
        return out;
      },
      py::arg("n1"), py::arg("n2"), py::arg("ni"), py::arg("q") = 0, py::arg("k_convention") = "shifted");

  m.def(
      "achievable_rates",
      [](int n1, int n2, int ni, const std::vector<std::string>& v1, const std::vector<std::string>& v2,
         const std::vector<std::string>& v3, int q) {
        const SystemParams p{n1, n2, ni, q};
        return rates_dict(ldmac::achievable_rates(p, triple(p, v1, v2, v3)));
      },
      py::arg("n1"), py::arg("n2"), py::arg("ni"), py::arg("v1"), py::arg("v2"), py::arg("v3"), py::arg("q") = 0);

  m.def(
      "verify_zero_error",
      [](int n1, int n2, int ni, const std::vector<std::string>& v1, const std::vector<std::string>& v2,
         const std::vector<std::string>& v3, int q, int max_bits) {
        const SystemParams p{n1, n2, ni, q};
        ZeroErrorReport r;
        {
          py::gil_scoped_release release;
          r = ldmac::verify_zero_error(p, triple(p, v1, v2, v3), max_bits);
        }
        py::dict out;
        out["rx1_joint_unique"] = r.rx1_joint_unique;
        out["rx2_unique"] = r.rx2_unique;
        out["decodable_bits"] = std::vector<double>{r.decodable1, r.decodable2, r.decodable3};
        out["rank_rates"] = rates_dict(r.rank_rates);
        out["consistent_with_rank"] = r.consistent_with_rank;
        return out;
      },
      py::arg("n1"), py::arg("n2"), py::arg("ni"), py::arg("v1"), py::arg("v2"), py::arg("v3"), py::arg("q") = 0,
      py::arg("max_bits") = kDefaultEnumerationGuard);

  m.def(
      "best_linear_sum_rate",
      [](int n1, int n2, int ni, bool randomized, std::uint64_t seed, unsigned jobs) {
        oracle::SearchBudget budget;
        budget.mode = randomized ? oracle::SearchMode::Randomized : oracle::SearchMode::Exhaustive;
        budget.seed = seed;
        budget.jobs = jobs;
        oracle::SearchResult r;
        {
          py::gil_scoped_release release;
          r = oracle::best_linear_sum_rate({n1, n2, ni}, budget);
        }
        py::dict out;
        out["rates"] = rates_dict(r.rates);
        out["precoders"] = precoders_dict(r.precoders);
        out["complete"] = r.complete;
        out["mode_used"] = r.mode_used == oracle::SearchMode::Exhaustive ? "exhaustive" : "randomized";
        return out;
      },
      py::arg("n1"), py::arg("n2"), py::arg("ni"), py::arg("randomized") = false, py::arg("seed") = 1,
      py::arg("jobs") = 0);

  m.def("gdof_lower", [](Pair a, Pair b) { return gdof_dict(gdof::gdof_lower(from_pair(a), from_pair(b))); });
  m.def("w_curve", [](Pair a) { return to_pair(gdof::w_curve(from_pair(a))); });
  m.def("sweep", [](Pair a_lo, Pair a_hi, Pair b_lo, Pair b_hi, Pair step) {
    py::list out;
    for (const auto& g : gdof::sweep({from_pair(a_lo), from_pair(a_hi)}, {from_pair(b_lo), from_pair(b_hi)},
                                     from_pair(step)))
      out.append(gdof_dict(g));
    return out;
  });
}
