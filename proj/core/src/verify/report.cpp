#include "g2cert/verify/report.hpp"

#include <json.hpp>
#include <map>
#include <sstream>

#include "g2cert/arith/upoly.hpp"
#include "g2cert/error.hpp"

namespace g2cert::verify {

namespace {

using ojson = nlohmann::ordered_json;

std::string poly_text(const std::vector<long>& coeffs) {
  return UniPoly::from_ints(Field::rationals(), coeffs).to_string();
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  return out.str();
}

std::string area_title(const std::string& area) {
  static const std::map<std::string, std::string> titles = {
      {"setup", "Torus, quadric and Weyl group"},
      {"reduction", "Reduction to the Cartan subalgebra"},
      {"w-model", "W-models, smoothness and rationality"},
      {"plumbing", "Toolkit self-checks"},
  };
  const auto it = titles.find(area);
  return it == titles.end() ? area : it->second;
}

std::string area_of(const std::string& anchor) { return anchor.substr(0, anchor.find('/')); }

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
    case CheckStatus::skipped: return "skipped";
  }
  return "error";
}

CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "error") return CheckStatus::error;
  if (s == "skipped") return CheckStatus::skipped;
  throw StructuralError("unknown check status '" + s + "'");
}

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::check: return "check";
    case CheckKind::negative_control: return "negative-control";
    case CheckKind::out_of_scope: return "out-of-scope";
  }
  return "check";
}

CheckKind kind_from_string(const std::string& s) {
  if (s == "check") return CheckKind::check;
  if (s == "negative-control") return CheckKind::negative_control;
  if (s == "out-of-scope") return CheckKind::out_of_scope;
  throw StructuralError("unknown check kind '" + s + "'");
}

void VerifyConfig::validate() const {
  auto check_primes = [](const std::vector<std::uint64_t>& ps, const char* what) {
    for (auto p : ps) {
      if (!is_prime(p)) throw UsageError(std::string(what) + ": " + std::to_string(p) + " is not prime");
      if (p > kDefaultPrimeCap)
        throw UsageError(std::string(what) + ": " + std::to_string(p) + " exceeds the prime cap " +
                         std::to_string(kDefaultPrimeCap));
    }
  };
  check_primes(prop1_primes, "characteristic");
  check_primes(smooth_primes, "smoothness characteristic");
  auto check_poly = [](const std::vector<long>& c, std::size_t degree, const char* what) {
    if (c.size() != degree + 1 || c.back() != 1)
      throw UsageError(std::string(what) + " must be monic of degree " + std::to_string(degree) +
                       " (coefficients constant term first)");
    const UniPoly f = UniPoly::from_ints(Field::rationals(), c);
    if (upoly_gcd(f, f.derivative()).degree() != 0u)
      throw UsageError(std::string(what) + " " + f.to_string() + " is not squarefree");
  };
  check_poly(cubic, 3, "cubic");
  check_poly(quadratic, 2, "quadratic");
}

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.status == s;
  return n;
}

std::string VerificationReport::overall() const {
  if (count(CheckStatus::fail) || count(CheckStatus::error)) return "fail";
  if (results.size() == count(CheckStatus::skipped)) return "pass-vacuous";
  return "pass";
}

VerificationReport VerificationReport::without_timing() const {
  VerificationReport r = *this;
  for (auto& c : r.results) c.ms = 0.0;
  return r;
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    ojson j;
    j["toolkit"] = report.toolkit;
    j["version"] = report.version;
    j["config"] = {{"prop1_primes", report.config.prop1_primes},
                   {"smooth_primes", report.config.smooth_primes},
                   {"cubic", report.config.cubic},
                   {"quadratic", report.config.quadratic},
                   {"seed", report.config.seed}};
    j["selection"] = report.selection;
    ojson summary = {{"total", report.results.size()},
                     {"pass", report.count(CheckStatus::pass)},
                     {"fail", report.count(CheckStatus::fail)},
                     {"error", report.count(CheckStatus::error)},
                     {"skipped", report.count(CheckStatus::skipped)},
                     {"overall", report.overall()}};
    if (report.results.empty()) summary["note"] = "0 checks";
    j["summary"] = summary;
    ojson checks = ojson::array();
    for (const auto& r : report.results)
      checks.push_back({{"id", r.id},
                        {"anchor", r.anchor},
                        {"title", r.title},
                        {"kind", to_string(r.kind)},
                        {"status", to_string(r.status)},
                        {"witness", r.witness},
                        {"ms", r.ms}});
    j["checks"] = checks;
    return j.dump(2) + "\n";
  }

  std::ostringstream md;
  md << "# g2cert verification report\n\n";
  md << "- toolkit: " << report.toolkit << " " << report.version << "\n";
  md << "- torsor: cubic `" << poly_text(report.config.cubic) << "`, quadratic `"
     << poly_text(report.config.quadratic) << "`\n";
  md << "- Lie algebra characteristics: " << join(report.config.prop1_primes) << "\n";
  md << "- smoothness characteristics: " << join(report.config.smooth_primes) << "\n";
  md << "- seed: " << report.config.seed << "\n";
  md << "- selection: `" << join(report.selection) << "`\n";
  md << "- overall: **" << report.overall() << "** (" << report.results.size() << " checks: "
     << report.count(CheckStatus::pass) << " pass, " << report.count(CheckStatus::fail) << " fail, "
     << report.count(CheckStatus::error) << " error, " << report.count(CheckStatus::skipped) << " skipped)\n";
  if (report.results.empty()) md << "\n0 checks matched the selection.\n";

  std::vector<std::string> areas = {"setup", "reduction", "w-model", "plumbing"};
  for (const auto& r : report.results)
    if (std::find(areas.begin(), areas.end(), area_of(r.anchor)) == areas.end()) areas.push_back(area_of(r.anchor));
  std::erase_if(areas, [&](const std::string& a) {
    return std::none_of(report.results.begin(), report.results.end(),
                        [&](const CheckResult& r) { return area_of(r.anchor) == a; });
  });
  for (const auto& area : areas) {
    md << "\n## " << area_title(area) << "\n\n";
    md << "| status | check | anchor | kind |\n|---|---|---|---|\n";
    for (const auto& r : report.results)
      if (area_of(r.anchor) == area)
        md << "| " << to_string(r.status) << " | `" << r.id << "` | " << r.anchor << " | " << to_string(r.kind)
           << " |\n";
    for (const auto& r : report.results) {
      if (area_of(r.anchor) != area) continue;
      md << "\n### `" << r.id << "`: " << to_string(r.status) << "\n\n" << r.title << "\n\n";
      for (const auto& w : r.witness) md << "- `" << w << "`\n";
    }
  }
  return md.str();
}

VerificationReport report_from_json(const std::string& text) {
  try {
    const ojson j = ojson::parse(text);
    VerificationReport r;
    r.toolkit = j.at("toolkit").get<std::string>();
    r.version = j.at("version").get<std::string>();
    const auto& c = j.at("config");
    r.config.prop1_primes = c.at("prop1_primes").get<std::vector<std::uint64_t>>();
    r.config.smooth_primes = c.at("smooth_primes").get<std::vector<std::uint64_t>>();
    r.config.cubic = c.at("cubic").get<std::vector<long>>();
    r.config.quadratic = c.at("quadratic").get<std::vector<long>>();
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.selection = j.at("selection").get<std::vector<std::string>>();
    for (const auto& e : j.at("checks")) {
      CheckResult res;
      res.id = e.at("id").get<std::string>();
      res.anchor = e.at("anchor").get<std::string>();
      res.title = e.at("title").get<std::string>();
      res.kind = kind_from_string(e.at("kind").get<std::string>());
      res.status = status_from_string(e.at("status").get<std::string>());
      res.witness = e.at("witness").get<std::vector<std::string>>();
      res.ms = e.at("ms").get<double>();
      r.results.push_back(std::move(res));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace g2cert::verify
