#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g2cert::verify {

enum class CheckStatus { pass, fail, error, skipped };
std::string to_string(CheckStatus s);
CheckStatus status_from_string(const std::string& s);

/// How a check's outcome is read: a negative control passes only when the
/// check inside it fails; an out-of-scope entry is always skipped.
enum class CheckKind { check, negative_control, out_of_scope };
std::string to_string(CheckKind k);
CheckKind kind_from_string(const std::string& s);

/// Run parameters. Coefficient lists are integers, constant term first.
struct VerifyConfig {
  std::vector<std::uint64_t> prop1_primes = {2, 3, 5, 7, 11};
  std::vector<std::uint64_t> smooth_primes = {2, 3, 5, 7};
  std::vector<long> cubic = {-2, 0, 0, 1};
  std::vector<long> quadratic = {-5, 0, 1};
  std::uint64_t seed = 1;

  /// UsageError for composite or out-of-range primes, or torsor
  /// polynomials that are not monic squarefree of degrees 3 and 2.
  void validate() const;
  friend bool operator==(const VerifyConfig&, const VerifyConfig&) = default;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  std::string title;
  CheckKind kind = CheckKind::check;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> witness;
  /// Wall time in milliseconds; excluded from deterministic comparisons.
  double ms = 0.0;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  std::string toolkit = "g2cert";
  std::string version;
  VerifyConfig config;
  std::vector<std::string> selection;
  std::vector<CheckResult> results;

  std::size_t count(CheckStatus s) const;
  /// "pass", "fail", or "pass-vacuous" when nothing ran.
  std::string overall() const;
  bool passed() const { return overall() != "fail"; }
  /// Copy with every timing field zeroed.
  VerificationReport without_timing() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

enum class ReportFormat { json, markdown };

/// JSON with fixed key order, or markdown grouped by anchor area. Markdown
/// never contains timings, so it is stable across runs.
std::string emit_report(const VerificationReport& report, ReportFormat format);
/// Inverse of the JSON emitter; StructuralError on malformed input.
VerificationReport report_from_json(const std::string& text);

}  // namespace g2cert::verify
