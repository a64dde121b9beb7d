#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "fbridge/errors.hpp"
#include "fbridge/verification.hpp"

using namespace fbridge;

namespace {

const Check* find(const SuiteReport& r, const std::string& id) {
  for (const Check& c : r.checks) {
    if (c.check_id == id) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(385.0) == "385");
  CHECK(format_double(-0.5) == "-0.5");
  CHECK(format_double(1e-20) == "9.9999999999999995e-21");
  for (double x : {M_PI, -1.0 / 3.0, 6.02214076e23}) CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("within is scale relative above one") {
  CHECK(within(1.0 + 1e-10, 1.0, 1e-9));
  CHECK(within(1000.0 + 1e-7, 1000.0, 1e-9));
  CHECK_FALSE(within(1000.0 + 1e-5, 1000.0, 1e-9));
  CHECK_FALSE(within(NAN, 0.0, 1.0));
}

TEST_CASE("combinatorics suite") {
  const SuiteReport r = run_suite("combinatorics");
  CHECK(r.passed());
  const Check* s32 = find(r, "comb.stirling_3_2_recurrence");
  REQUIRE(s32);
  CHECK(s32->status == Status::pass);
  CHECK(s32->measured == 3.0);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const Check& a, const Check& b) { return a.check_id < b.check_id; }));
}

TEST_CASE("discrepancies are documented, not failed") {
  const SuiteReport all = run_suite("all");
  CHECK(all.passed());
  std::set<std::string> documented;
  for (const Check& c : all.checks) {
    CHECK(c.status != Status::fail);
    if (c.status == Status::discrepancy_documented) documented.insert(c.check_id);
  }
  for (const char* id : {"kernels.composition_idempotent_claim", "kernels.boxed_closed_form_vs_j2_example",
                         "zeta.sinc_bernoulli_claim", "zeta.glaisher_formula_claim",
                         "kernels.selector_leading_term_claim"}) {
    CHECK(documented.count(id) == 1);
  }
  std::set<std::string> ids;
  for (const Check& c : all.checks) CHECK(ids.insert(c.check_id).second);
}

TEST_CASE("tolerance floor") {
  SuiteConfig cfg;
  cfg.tolerance_floor = 1e-3;
  const SuiteReport r = run_suite("kernels", cfg);
  for (const Check& c : r.checks) {
    if (c.expected) CHECK(c.tolerance >= 1e-3);
  }
}

TEST_CASE("unknown names") {
  CHECK_THROWS_AS(run_suite("nope"), UsageError);
  CHECK_THROWS_AS(run_sweep("nope"), UsageError);
}

TEST_CASE("csv and json reports") {
  SuiteReport r;
  r.suite = "demo";
  Check c;
  c.check_id = "a";
  c.measured = 0.5;
  c.expected = 0.5;
  c.tolerance = 1e-9;
  c.note = "x, \"y\"";
  r.checks.push_back(c);
  Check d;
  d.check_id = "b";
  d.measured = 2.0;
  r.checks.push_back(d);
  const std::string csv = report_csv(r);
  CHECK(csv ==
        "check_id,status,measured,expected,tolerance,provenance,note\n"
        "a,pass,0.5,0.5,1.0000000000000001e-09,derived,\"x, \"\"y\"\"\"\n"
        "b,pass,2,reported-only,0,derived,\n");
  CHECK(csv.find('\r') == std::string::npos);

  const auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["suite"] == "demo");
  CHECK_FALSE(j.contains("timestamp"));
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["expected"] == "reported-only");
  CHECK(nlohmann::json::parse(report_json(r, "2026-01-01T00:00:00Z"))["timestamp"] == "2026-01-01T00:00:00Z");
}

TEST_CASE("sweeps") {
  const SweepTable sine = run_sweep("sine_det");
  CHECK(sine.rows.size() == 60);
  CHECK(sine.columns.front() == "s");
  CHECK(std::find(sine.columns.begin(), sine.columns.end(), "residual_sigma") != sine.columns.end());
  CHECK(sine.rows.front()[0] == doctest::Approx(0.1));
  CHECK(sine.rows.back()[0] == doctest::Approx(6.0));

  const SweepTable sel = run_sweep("selector_det");
  CHECK(sel.rows.size() == 10);
  CHECK(sel.rows.back()[0] == 1024.0);
  CHECK(sel.rows.back()[4] < 2e-4);

  const SweepTable ratio = run_sweep("det_ratio");
  CHECK(ratio.rows.size() == 59);
  CHECK(ratio.rows.front()[1] == doctest::Approx(std::sinh(2.0) / 2.0));
  CHECK(ratio.rows.back()[0] == 25.0);

  const std::string csv = sweep_csv(ratio);
  CHECK(csv.rfind("lambda,dd,dn\n-4,", 0) == 0);
  CHECK(sweep_csv(run_sweep("det_ratio")) == csv);
  CHECK(nlohmann::json::parse(sweep_json(sel))["rows"].size() == 10);
}

TEST_CASE("sweep ranges") {
  SweepConfig cfg;
  cfg.grid_step = 0.25;
  cfg.s_max = 2.0;
  CHECK(run_sweep("sine_det", cfg).rows.size() == 8);
  cfg.grid_step = 1.0;
  cfg.s_max = 0.0;
  CHECK(run_sweep("det_ratio", cfg).rows.size() == 5);
  cfg.s_max = -10.0;
  CHECK_THROWS_AS(run_sweep("det_ratio", cfg), UsageError);
}
