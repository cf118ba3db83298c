#pragma once

// Exhaustive enumeration of terms by size. This is the brute-force oracle the
// counting and bijection suites are checked against.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/term.hpp"

namespace debruijn {

enum class TermClassKind { Plain, NormalForm, Neutral, HeadNormal, NeutralHeadNormal, MOpen, Closed };

struct TermClass {
  TermClassKind kind = TermClassKind::Plain;
  std::uint64_t m = 0;  // bound for MOpen

  static TermClass plain() { return {TermClassKind::Plain, 0}; }
  static TermClass normal_form() { return {TermClassKind::NormalForm, 0}; }
  static TermClass neutral() { return {TermClassKind::Neutral, 0}; }
  static TermClass head_normal() { return {TermClassKind::HeadNormal, 0}; }
  static TermClass neutral_head_normal() { return {TermClassKind::NeutralHeadNormal, 0}; }
  static TermClass m_open(std::uint64_t m) { return {TermClassKind::MOpen, m}; }
  static TermClass closed() { return {TermClassKind::Closed, 0}; }

  bool contains(const Term& t) const;
  /// plain, nf, neutral, hnf, nhnf, closed, m-open:<m>
  static TermClass parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const TermClass&, const TermClass&) = default;
};

/// Enumeration is refused when the plain universe at the requested size is
/// larger than the plain natural-model universe at `max_natural_size`.
struct EnumerationLimits {
  std::uint64_t max_natural_size = 14;
};

/// Return false from the visitor to stop early.
using TermVisitor = std::function<bool(const Term&)>;

/// Streams every term of size n in the class exactly once. Order: the index
/// (if any), then abstractions, then applications by ascending left size;
/// recursively the same order inside each part. Memory is bounded by the
/// recursion depth. Returns false iff the visitor stopped the stream.
/// Throws UnsatisfiableError when the size exceeds the cap.
bool for_each_term(std::uint64_t n, const SizeModel& model, const TermClass& cls, const TermVisitor& visit,
                   const EnumerationLimits& limits = {});

std::vector<Term> enumerate_terms(std::uint64_t n, const SizeModel& model = SizeModel::natural(),
                                  const TermClass& cls = TermClass::plain(), const EnumerationLimits& limits = {});

}  // namespace debruijn
