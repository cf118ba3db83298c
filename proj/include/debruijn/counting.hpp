#pragma once

// Exact big-integer counting of term classes and tree families. Several
// classes have two independent routes (a convolution over the defining
// system and a closed or holonomic form); both are exposed so callers can
// cross-check them.

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "debruijn/term.hpp"

namespace debruijn {

using BigNat = mpz_class;

/// Every counted family.
enum class CountClass {
  Plain,
  NormalForm,
  Neutral,
  HeadNormal,
  NeutralHeadNormal,
  MOpen,       // parameter: m
  Containing,  // parameter: p = |M| of the fixed subterm
  Motzkin,
};

std::string count_class_name(CountClass c);
CountClass parse_count_class(const std::string& name);

/// Immutable table of counts values[0..n_max] for one family.
class CountTable {
 public:
  CountTable(CountClass cls, SizeModel model, std::uint64_t param, std::vector<BigNat> values);

  CountClass count_class() const noexcept { return cls_; }
  const SizeModel& model() const noexcept { return model_; }
  std::uint64_t param() const noexcept { return param_; }
  std::uint64_t max_size() const noexcept { return values_.size() - 1; }
  const BigNat& operator[](std::uint64_t n) const;
  const std::vector<BigNat>& values() const noexcept { return values_; }

  /// Header line `class model n_max` (class carries `:param` when it has one),
  /// then one decimal value per line.
  void save(const std::filesystem::path& path) const;
  static CountTable load(const std::filesystem::path& path);

 private:
  CountClass cls_;
  SizeModel model_;
  std::uint64_t param_;
  std::vector<BigNat> values_;
};

/// Builds the table by its primary route. Only Plain supports models other
/// than the natural one.
CountTable build_count_table(CountClass cls, std::uint64_t n_max, std::uint64_t param = 0,
                             const SizeModel& model = SizeModel::natural());

/// Shared read-only tables, extended on demand. Safe to call from several
/// threads; returned tables cover at least n_max.
std::shared_ptr<const CountTable> cached_table(CountClass cls, std::uint64_t n_max, std::uint64_t param = 0,
                                               const SizeModel& model = SizeModel::natural());

// --- plain terms -----------------------------------------------------------

/// Convolution over L = zL^2 + zL + z/(1-z).
std::vector<BigNat> plain_counts(std::uint64_t n_max);
/// Four-term linear recurrence with polynomial coefficients; every division
/// is checked to be exact (std::logic_error otherwise).
std::vector<BigNat> plain_counts_holonomic(std::uint64_t n_max);
/// Alternating binomial sum evaluated in exact rationals; n >= 1.
BigNat count_plain_explicit(std::uint64_t n);

BigNat count_plain(std::uint64_t n);
BigNat count_plain_holonomic(std::uint64_t n);

/// Weighted convolution for an arbitrary finitary size model.
std::vector<BigNat> plain_counts_model(const SizeModel& model, std::uint64_t n_max);
BigNat count_plain_model(const SizeModel& model, std::uint64_t n);

// --- normal forms ----------------------------------------------------------

struct NormalFormCounts {
  std::vector<BigNat> neutral;      // M = zMN + D
  std::vector<BigNat> normal_form;  // N = M + zN
};
NormalFormCounts normal_form_counts(std::uint64_t n_max);
BigNat count_neutral(std::uint64_t n);
BigNat count_nf(std::uint64_t n);

// --- head normal forms -----------------------------------------------------

struct HeadNormalCounts {
  std::vector<BigNat> neutral_head;  // K = zKL + D
  std::vector<BigNat> head;          // H = K + zH
};
HeadNormalCounts head_normal_counts(std::uint64_t n_max);
/// K = z + zL: K_1 = 1 and K_n = L_{n-1} for n >= 2.
std::vector<BigNat> nhnf_counts_closed_form(std::uint64_t n_max);
BigNat count_nhnf(std::uint64_t n);
BigNat count_hnf(std::uint64_t n);

// --- open terms ------------------------------------------------------------

/// table[n][m] for 0 <= n <= n_max and 0 <= m <= n_max: terms of size n whose
/// free indices are all below m.
std::vector<std::vector<BigNat>> m_open_table(std::uint64_t n_max);
/// Column m of the m-open table, values for n = 0..n_max.
std::vector<BigNat> m_open_counts(std::uint64_t n_max, std::uint64_t m);
BigNat count_m_open(std::uint64_t n, std::uint64_t m);

// --- containment -----------------------------------------------------------

/// Terms of size n containing a fixed non-index subterm of size p, from
/// T = z^p + zT + 2zTL - zT^2. Rejects p < 2; throws std::logic_error if an
/// intermediate value turns negative.
std::vector<BigNat> containing_counts(std::uint64_t n_max, std::uint64_t p);
BigNat count_containing(std::uint64_t n, std::uint64_t p);
/// Same, keyed by the subterm itself; rejects index-shaped subterms, whose
/// occurrences inside successor chains the equation does not model.
std::vector<BigNat> containing_counts(std::uint64_t n_max, const Term& subterm);

// --- Motzkin trees ---------------------------------------------------------

/// Motzkin trees by node count: T = z + zT + zT^2.
std::vector<BigNat> motzkin_tree_counts(std::uint64_t n_max);
BigNat count_motzkin(std::uint64_t n);
/// Classical Motzkin numbers M_0.. via (k+2) M_k = (2k+1) M_{k-1} + 3(k-1) M_{k-2}.
std::vector<BigNat> motzkin_numbers(std::uint64_t k_max);

// --- trees -----------------------------------------------------------------

/// Black-white trees with black (first) and white (second) roots.
std::pair<std::vector<BigNat>, std::vector<BigNat>> black_white_counts(std::uint64_t n_max);
/// Zigzag-free trees from the BZ1/BZ2 system.
std::vector<BigNat> zigzag_free_counts(std::uint64_t n_max);

}  // namespace debruijn
