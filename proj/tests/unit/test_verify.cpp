#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "g2cert/error.hpp"
#include "g2cert/verify/suite.hpp"

using namespace g2cert;
using namespace g2cert::verify;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("glob matching over check ids") {
  CHECK(matches("twist.descent", {"twist.*"}));
  CHECK(matches("prop1.char-p", {"prop1.char-?"}));
  CHECK_FALSE(matches("prop1.char-p", {"prop1.char-"}));
  CHECK(matches("weyl.elements", {"nothing", "*elements"}));
  CHECK_FALSE(matches("weyl.elements", {}));
}

TEST_CASE("registry ids are unique and every group selects something") {
  std::set<std::string> ids;
  for (const auto& d : registry()) CHECK(ids.insert(d.id).second);
  for (const char* g : {"all", "weyl", "lambda-chain", "prop1", "freeness", "twist", "quotient", "smoothness",
                        "invariants"}) {
    const auto patterns = group_patterns(g);
    const bool any = std::any_of(registry().begin(), registry().end(),
                                 [&](const CheckDescriptor& d) { return matches(d.id, patterns); });
    CHECK_MESSAGE(any, g);
  }
  CHECK_THROWS_AS(group_patterns("bogus"), UsageError);
}

TEST_CASE("empty selection is vacuous, not a failure") {
  const VerificationReport r = run_suite({"no-such-check"}, VerifyConfig{});
  CHECK(r.results.empty());
  CHECK(r.overall() == "pass-vacuous");
  CHECK(r.passed());
  CHECK(emit_report(r, ReportFormat::json).find("\"note\": \"0 checks\"") != std::string::npos);
  CHECK(emit_report(r, ReportFormat::markdown).find("0 checks") != std::string::npos);
}

TEST_CASE("config validation") {
  VerifyConfig c;
  c.prop1_primes = {2, 9};
  CHECK_THROWS_AS(run_suite({"*"}, c), UsageError);
  c = VerifyConfig{};
  c.smooth_primes = {101};
  CHECK_THROWS_AS(c.validate(), UsageError);
  c = VerifyConfig{};
  c.cubic = {0, 0, 2, 1};  // x^3 + 2x^2 has a double root at 0
  CHECK_THROWS_AS(c.validate(), UsageError);
  c = VerifyConfig{};
  c.quadratic = {1, 0, 2};
  CHECK_THROWS_AS(c.validate(), UsageError);
  CHECK_NOTHROW(VerifyConfig{}.validate());
}

TEST_CASE("JSON round trip preserves every field") {
  const VerificationReport r = run_suite({"torus.*", "freeness.*", "reduction.*"}, VerifyConfig{});
  REQUIRE(r.results.size() >= 4);
  const VerificationReport back = report_from_json(emit_report(r, ReportFormat::json));
  CHECK(back == r);
  CHECK_THROWS_AS(report_from_json("{\"toolkit\": 1}"), StructuralError);
  CHECK_THROWS_AS(report_from_json("not json"), StructuralError);
}

TEST_CASE("out-of-scope entries are skipped and do not affect the verdict") {
  const VerificationReport r = run_suite({"reduction.*"}, VerifyConfig{});
  REQUIRE_FALSE(r.results.empty());
  for (const auto& c : r.results) {
    CHECK(c.kind == CheckKind::out_of_scope);
    CHECK(c.status == CheckStatus::skipped);
  }
  CHECK(r.overall() == "pass-vacuous");
}

TEST_CASE("a negative control that unexpectedly holds fails the run") {
  VerificationReport r = run_suite({"freeness.*"}, VerifyConfig{});
  REQUIRE(r.overall() == "pass");
  for (auto& c : r.results)
    if (c.kind == CheckKind::negative_control) c.status = CheckStatus::fail;
  CHECK(r.overall() == "fail");
}

TEST_CASE("full suite is deterministic and matches the golden report") {
  const VerificationReport a = run_suite({"*"}, VerifyConfig{});
  const VerificationReport b = run_suite({"*"}, VerifyConfig{});
  CHECK(a.overall() == "pass");
  CHECK(emit_report(a.without_timing(), ReportFormat::json) == emit_report(b.without_timing(), ReportFormat::json));
  const std::string md = emit_report(a, ReportFormat::markdown);
  CHECK(md == emit_report(b, ReportFormat::markdown));
  CHECK(md == read_file(G2CERT_GOLDEN_REPORT));
}
