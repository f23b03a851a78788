#pragma once

#include <functional>
#include <string>
#include <vector>

#include "g2cert/certificate.hpp"
#include "g2cert/verify/report.hpp"

namespace g2cert::verify {

class SuiteContext;

/// One registered check. The producer returns a certificate; a thrown
/// g2cert::Error counts as an error (or, for a negative control, as the
/// expected failure).
struct CheckDescriptor {
  std::string id;
  /// Area/topic label, e.g. "w-model/lambda-chain", or "plumbing".
  std::string anchor;
  std::string title;
  CheckKind kind = CheckKind::check;
  std::function<Certificate(SuiteContext&)> producer;
};

/// The full registry in report order. Identifiers are unique.
const std::vector<CheckDescriptor>& registry();

/// Glob match ('*' and '?') of an identifier against any of the patterns.
bool matches(const std::string& id, const std::vector<std::string>& patterns);

/// Runs every registered check matching one of the patterns, in registry
/// order. Validates the config first (UsageError). A failing check never
/// stops the run.
VerificationReport run_suite(const std::vector<std::string>& patterns, const VerifyConfig& config);

/// Selection patterns for the named CLI groups ("all", "weyl",
/// "lambda-chain", "prop1", "freeness", "twist", "quotient", "smoothness",
/// "invariants"); UsageError for an unknown group.
std::vector<std::string> group_patterns(const std::string& group);

/// Integer vectors with entries in [-height, height] on which the form
/// given by its upper-triangular integer coefficients vanishes; an
/// independent oracle for descended points.
std::vector<std::vector<long>> small_isotropic_vectors(const std::vector<std::vector<long>>& upper, long height);

}  // namespace g2cert::verify
