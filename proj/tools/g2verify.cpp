// Command-line front end: runs the verification suite and writes reports.
#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "g2cert/error.hpp"
#include "g2cert/verify/suite.hpp"

namespace {

using namespace g2cert::verify;

std::vector<long> parse_coefficients(const std::string& text, const char* what) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw g2cert::UsageError(std::string(what) + ": '" + text + "' is not a comma-separated integer list");
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Options {
  std::string group = "all";
  std::vector<std::uint64_t> chars;
  std::string cubic, quadratic;
  std::uint64_t seed = VerifyConfig{}.seed;
  std::vector<std::string> filters;
  std::string format = "md";
  std::string out;
};

VerifyConfig make_config(const Options& o) {
  VerifyConfig c;
  if (!o.chars.empty()) c.prop1_primes = o.chars;
  if (!o.cubic.empty()) c.cubic = parse_coefficients(o.cubic, "--cubic");
  if (!o.quadratic.empty()) c.quadratic = parse_coefficients(o.quadratic, "--quadratic");
  c.seed = o.seed;
  return c;
}

void print_summary(const VerificationReport& r) {
  for (const auto& c : r.results) {
    std::cout << to_string(c.status) << "\t" << c.id;
    if (c.kind == CheckKind::negative_control) std::cout << " (negative control)";
    std::cout << "\n";
    if (c.status == CheckStatus::fail || c.status == CheckStatus::error)
      for (const auto& w : c.witness) std::cout << "\t  " << w << "\n";
  }
  std::cout << "overall: " << r.overall() << " (" << r.results.size() << " checks";
  if (r.results.empty()) std::cout << "; 0 checks matched";
  std::cout << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g2verify: exact certificates for the G2 rationality computations"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--char", o.chars, "Characteristics for the Lie algebra checks (repeatable)");
    cmd->add_option("--cubic", o.cubic, "Cubic of the torsor, integer coefficients constant term first");
    cmd->add_option("--quadratic", o.quadratic, "Quadratic of the torsor, integer coefficients constant term first");
    cmd->add_option("--seed", o.seed, "Seed of the randomized self-checks");
    cmd->add_option("--filter", o.filters, "Glob over check ids (repeatable); overrides the group");
  };

  CLI::App* verify = app.add_subcommand("verify", "Run a group of checks and print one line per check");
  verify
      ->add_option("group", o.group, "all | weyl | lambda-chain | prop1 | freeness | twist | quotient | smoothness | "
                                     "invariants")
      ->capture_default_str();
  add_common(verify);

  CLI::App* report = app.add_subcommand("report", "Run the suite and write a JSON or markdown report");
  report->add_option("--format", o.format, "json | md")->check(CLI::IsMember({"json", "md"}))->capture_default_str();
  report->add_option("--out", o.out, "Output file (default: $G2CERT_REPORT_DIR/report.<ext>, else stdout)");
  add_common(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const VerifyConfig config = make_config(o);
    const std::vector<std::string> patterns = o.filters.empty() ? group_patterns(o.group) : o.filters;
    const VerificationReport r = run_suite(patterns, config);
    if (verify->parsed()) {
      print_summary(r);
    } else {
      const ReportFormat fmt = o.format == "json" ? ReportFormat::json : ReportFormat::markdown;
      const std::string text = emit_report(r, fmt);
      std::string path = o.out;
      if (path.empty()) {
        if (const char* dir = std::getenv("G2CERT_REPORT_DIR"); dir && *dir)
          path = (std::filesystem::path(dir) / (fmt == ReportFormat::json ? "report.json" : "report.md")).string();
      }
      if (path.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw g2cert::UsageError("cannot write " + path);
        f << text;
        std::cerr << "wrote " << path << " (overall: " << r.overall() << ")\n";
      }
    }
    return r.passed() ? 0 : 1;
  } catch (const g2cert::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const g2cert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
