#pragma once

#include <string>
#include <utility>
#include <vector>

namespace g2cert {

/// Outcome of a certified check. Witnesses are exact, canonical strings
/// (remainders, minors, divisors) so certificates compare and serialize
/// deterministically.
struct Certificate {
  std::string name;
  bool ok = true;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> witnesses;
  /// First failure reason, or empty when ok.
  std::string message;

  Certificate() = default;
  explicit Certificate(std::string n) : name(std::move(n)) {}

  void input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
  void witness(std::string w) { witnesses.push_back(std::move(w)); }

  /// Records a leg: the witness is kept either way; a false condition
  /// marks the certificate failed and keeps the first failure message.
  void require(bool condition, std::string what) {
    if (!condition) {
      if (ok) message = what;
      ok = false;
    }
    witnesses.push_back((condition ? "ok: " : "FAILED: ") + std::move(what));
  }

  /// Merges a sub-certificate, prefixing its witnesses with its name.
  void absorb(const Certificate& leg) {
    for (const auto& w : leg.witnesses) witnesses.push_back(leg.name + ": " + w);
    if (!leg.ok) {
      if (ok) message = leg.name + ": " + leg.message;
      ok = false;
    }
  }
};

}  // namespace g2cert
