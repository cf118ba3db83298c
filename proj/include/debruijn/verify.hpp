#pragma once

// Named agreement properties across the library, each reporting the
// smallest witness when it fails.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace debruijn {

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed = false;
  /// Smallest failing object or size; empty when the property holds.
  std::string witness;
  double seconds = 0;
};

struct VerifyOptions {
  /// Exhaustive checks run over every size up to this bound.
  std::uint64_t max_size = 11;
  /// Restrict to one module (empty: all).
  std::string module;
};

using PropertySink = std::function<void(const PropertyResult&)>;

std::vector<std::string> verification_modules();
/// Runs the suite, streaming each result to the sink as it finishes.
std::vector<PropertyResult> run_verification(const VerifyOptions& options = {}, const PropertySink& sink = {});

}  // namespace debruijn
