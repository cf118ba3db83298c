#include "debruijn/samplers.hpp"

#include <cmath>
#include <limits>

#include "debruijn/bijections.hpp"

namespace debruijn {

namespace {

void require_positive(std::uint64_t n, const char* who) {
  if (n == 0) throw DomainError(std::string(who) + ": size must be at least 1");
}

const std::vector<BigNat>& table(CountClass cls, std::uint64_t n, std::shared_ptr<const CountTable>& hold,
                                 std::uint64_t param = 0) {
  hold = cached_table(cls, n, param);
  return hold->values();
}

// Application splits i + j = n - 1 with i, j >= 1, visited from both ends
// inward: most of the weight sits at the extremes.
template <class F>
bool for_each_split(std::uint64_t n, F&& f) {
  if (n < 3) return false;
  std::uint64_t lo = 1, hi = n - 2;
  while (lo <= hi) {
    if (f(lo, n - 1 - lo)) return true;
    if (lo != hi && f(hi, n - 1 - hi)) return true;
    ++lo;
    --hi;
  }
  return false;
}

[[noreturn]] void table_mismatch() { throw std::logic_error("sampler: draw fell outside the count table"); }

MotzkinTree motzkin_rec(std::uint64_t n, const std::vector<BigNat>& t, Rng& rng) {
  if (n == 1) return MotzkinTree::leaf();
  BigNat r = rng.uniform_below(t[n]);
  if (r < t[n - 1]) return MotzkinTree::unary(motzkin_rec(n - 1, t, rng));
  r -= t[n - 1];
  BigNat w;
  std::optional<MotzkinTree> out;
  for_each_split(n, [&](std::uint64_t i, std::uint64_t j) {
    w = t[i] * t[j];
    if (r < w) {
      out = MotzkinTree::binary(motzkin_rec(i, t, rng), motzkin_rec(j, t, rng));
      return true;
    }
    r -= w;
    return false;
  });
  if (!out) table_mismatch();
  return std::move(*out);
}

Term plain_rec(std::uint64_t n, const std::vector<BigNat>& l, Rng& rng) {
  if (n == 1) return Term::index(0);
  BigNat r = rng.uniform_below(l[n]);
  if (r == 0) return Term::index(n - 1);
  r -= 1;
  if (r < l[n - 1]) return Term::abs(plain_rec(n - 1, l, rng));
  r -= l[n - 1];
  BigNat w;
  std::optional<Term> out;
  for_each_split(n, [&](std::uint64_t i, std::uint64_t j) {
    w = l[i] * l[j];
    if (r < w) {
      Term lhs = plain_rec(i, l, rng);
      out = Term::app(std::move(lhs), plain_rec(j, l, rng));
      return true;
    }
    r -= w;
    return false;
  });
  if (!out) table_mismatch();
  return std::move(*out);
}

struct NfTables {
  const std::vector<BigNat>& m;
  const std::vector<BigNat>& nf;
};

Term nf_rec(std::uint64_t n, const NfTables& t, Rng& rng);

Term neutral_rec(std::uint64_t n, const NfTables& t, Rng& rng) {
  if (n == 1) return Term::index(0);
  BigNat r = rng.uniform_below(t.m[n]);
  if (r == 0) return Term::index(n - 1);
  r -= 1;
  BigNat w;
  std::optional<Term> out;
  for_each_split(n, [&](std::uint64_t i, std::uint64_t j) {
    w = t.m[i] * t.nf[j];
    if (r < w) {
      Term lhs = neutral_rec(i, t, rng);
      out = Term::app(std::move(lhs), nf_rec(j, t, rng));
      return true;
    }
    r -= w;
    return false;
  });
  if (!out) table_mismatch();
  return std::move(*out);
}

Term nf_rec(std::uint64_t n, const NfTables& t, Rng& rng) {
  if (n == 1) return Term::index(0);
  if (rng.uniform_below(t.nf[n]) < t.m[n]) return neutral_rec(n, t, rng);
  return Term::abs(nf_rec(n - 1, t, rng));
}

const BigNat& class_count(std::uint64_t n, RejectionTarget target, std::shared_ptr<const CountTable>& hold) {
  switch (target) {
    case RejectionTarget::Closed:
      return table(CountClass::MOpen, n, hold, 0)[n];
    case RejectionTarget::HeadNormal:
      return table(CountClass::HeadNormal, n, hold)[n];
    case RejectionTarget::NeutralHeadNormal:
      return table(CountClass::NeutralHeadNormal, n, hold)[n];
  }
  throw std::logic_error("unknown rejection target");
}

}  // namespace

MotzkinTree sample_motzkin_exact(std::uint64_t n, Rng& rng) {
  require_positive(n, "sample_motzkin_exact");
  std::shared_ptr<const CountTable> hold;
  return motzkin_rec(n, table(CountClass::Motzkin, n, hold), rng);
}

Term sample_neutral_exact(std::uint64_t n, Rng& rng) { return motzkin_to_neutral(sample_motzkin_exact(n, rng)); }

Term sample_plain_exact(std::uint64_t n, Rng& rng) {
  require_positive(n, "sample_plain_exact");
  std::shared_ptr<const CountTable> hold;
  return plain_rec(n, table(CountClass::Plain, n, hold), rng);
}

Term sample_nf_exact(std::uint64_t n, Rng& rng) {
  require_positive(n, "sample_nf_exact");
  std::shared_ptr<const CountTable> hm, hn;
  const NfTables t{table(CountClass::Neutral, n, hm), table(CountClass::NormalForm, n, hn)};
  return nf_rec(n, t, rng);
}

std::string rejection_target_name(RejectionTarget t) {
  switch (t) {
    case RejectionTarget::Closed:
      return "closed";
    case RejectionTarget::HeadNormal:
      return "hnf";
    case RejectionTarget::NeutralHeadNormal:
      return "nhnf";
  }
  return "?";
}

bool accepts(RejectionTarget target, const Term& t) {
  switch (target) {
    case RejectionTarget::Closed:
      return is_closed(t);
    case RejectionTarget::HeadNormal:
      return is_head_normal(t);
    case RejectionTarget::NeutralHeadNormal:
      return is_neutral_head_normal(t);
  }
  return false;
}

double expected_rejection_trials(std::uint64_t n, RejectionTarget target) {
  require_positive(n, "expected_rejection_trials");
  std::shared_ptr<const CountTable> hc, hp;
  const BigNat& hits = class_count(n, target, hc);
  if (hits == 0) throw UnsatisfiableError("no " + rejection_target_name(target) + " terms of size " + std::to_string(n));
  mpq_class ratio(table(CountClass::Plain, n, hp)[n], hits);
  ratio.canonicalize();
  return ratio.get_d();
}

RejectionExhausted::RejectionExhausted(std::uint64_t trials)
    : UnsatisfiableError("rejection sampler gave up after " + std::to_string(trials) + " trials"), trials_(trials) {}

SampleReport sample_rejection(std::uint64_t n, RejectionTarget target, Rng& rng, std::optional<std::uint64_t> max_trials) {
  const auto start = std::chrono::steady_clock::now();
  const double expected = expected_rejection_trials(n, target);
  std::uint64_t budget = 0;
  if (max_trials) {
    if (*max_trials == 0) throw DomainError("sample_rejection: max_trials must be at least 1");
    budget = *max_trials;
  } else {
    const double b = std::ceil(50.0 * expected);
    budget = b >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(b);
  }

  std::shared_ptr<const CountTable> hold;
  const auto& l = table(CountClass::Plain, n, hold);
  for (std::uint64_t trial = 1; trial <= budget; ++trial) {
    Term t = plain_rec(n, l, rng);
    if (accepts(target, t)) {
      SampleReport rep{std::move(t), n, trial, rng.seed(), {}};
      rep.elapsed = std::chrono::steady_clock::now() - start;
      return rep;
    }
  }
  throw RejectionExhausted(budget);
}

}  // namespace debruijn
