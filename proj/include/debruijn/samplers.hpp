#pragma once

// Exact-size uniform samplers driven by big-integer counts, and rejection
// samplers on top of the plain one.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "debruijn/random.hpp"
#include "debruijn/term.hpp"
#include "debruijn/trees.hpp"

namespace debruijn {

MotzkinTree sample_motzkin_exact(std::uint64_t n, Rng& rng);
/// Motzkin sample pushed through motzkin_to_neutral.
Term sample_neutral_exact(std::uint64_t n, Rng& rng);
Term sample_plain_exact(std::uint64_t n, Rng& rng);
Term sample_nf_exact(std::uint64_t n, Rng& rng);

enum class RejectionTarget { Closed, HeadNormal, NeutralHeadNormal };

std::string rejection_target_name(RejectionTarget t);
bool accepts(RejectionTarget target, const Term& t);
/// Exact |plain(n)| / |target(n)| from the count tables: the mean number of
/// plain draws per accepted term. Throws UnsatisfiableError if the class is
/// empty at size n.
double expected_rejection_trials(std::uint64_t n, RejectionTarget target);

/// What a sampler returns with bookkeeping.
struct SampleReport {
  std::variant<Term, MotzkinTree> object;
  std::uint64_t size = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// The rejection sampler ran out of trials.
class RejectionExhausted : public UnsatisfiableError {
 public:
  explicit RejectionExhausted(std::uint64_t trials);
  std::uint64_t trials() const noexcept { return trials_; }

 private:
  std::uint64_t trials_;
};

/// Draw plain terms until one lies in the target class. The default budget
/// is 50 times the expected number of trials.
SampleReport sample_rejection(std::uint64_t n, RejectionTarget target, Rng& rng,
                              std::optional<std::uint64_t> max_trials = std::nullopt);

}  // namespace debruijn
