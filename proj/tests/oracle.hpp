#pragma once

// Reference implementations for the test suites. Everything here is written
// from the definitions directly and shares no algorithm with the library.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "debruijn/term.hpp"

namespace oracle {

using debruijn::Term;

// All terms of natural size n, memoised; built by structural recursion only.
inline const std::vector<Term>& terms(std::uint64_t n) {
  static std::map<std::uint64_t, std::vector<Term>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<Term> out;
  if (n >= 1) out.push_back(Term::index(n - 1));
  if (n >= 2) {
    for (const auto& b : terms(n - 1)) out.push_back(Term::abs(b));
    for (std::uint64_t i = 1; i + 1 < n; ++i)
      for (const auto& l : terms(i))
        for (const auto& r : terms(n - 1 - i)) out.push_back(Term::app(l, r));
  }
  return memo.emplace(n, std::move(out)).first->second;
}

// Prefix code with explicit successor chains: S^k 0 -> "S..S0", abstraction
// "L", application "A". Subtree occurrences are exactly substring hits.
inline std::string unary_code(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return std::string(t.index_value(), 'S') + "0";
    case Term::Kind::Abs:
      return "L" + unary_code(t.body());
    case Term::Kind::App:
      return "A" + unary_code(t.lhs()) + unary_code(t.rhs());
  }
  return {};
}

inline bool contains(const Term& t, const Term& m) { return unary_code(t).find(unary_code(m)) != std::string::npos; }

inline bool has_redex(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return false;
    case Term::Kind::Abs:
      return has_redex(t.body());
    case Term::Kind::App:
      return t.lhs().is_abs() || has_redex(t.lhs()) || has_redex(t.rhs());
  }
  return false;
}

inline bool spine_head_is_index(const Term* t) {
  while (t->is_app()) t = &t->lhs();
  return t->is_index();
}

inline bool neutral(const Term& t) { return !has_redex(t) && spine_head_is_index(&t); }
inline bool nhnf(const Term& t) { return spine_head_is_index(&t); }
inline bool hnf(const Term& t) {
  const Term* cur = &t;
  while (cur->is_abs()) cur = &cur->body();
  return spine_head_is_index(cur);
}

// Smallest m with every free index below m.
inline std::uint64_t open_bound(const Term& t, std::uint64_t depth = 0) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return t.index_value() >= depth ? t.index_value() - depth + 1 : 0;
    case Term::Kind::Abs:
      return open_bound(t.body(), depth + 1);
    case Term::Kind::App:
      return std::max(open_bound(t.lhs(), depth), open_bound(t.rhs(), depth));
  }
  return 0;
}

// Plain counts straight from the grammar L = index | \L | L L.
inline std::vector<mpz_class> plain(std::uint64_t n_max) {
  std::vector<mpz_class> l(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    l[n] = 1 + l[n - 1];
    for (std::uint64_t i = 1; i + 1 < n; ++i) l[n] += l[i] * l[n - 1 - i];
  }
  return l;
}

// Terms avoiding a fixed non-index subterm of size p: the same grammar with
// the subterm itself removed at size p.
inline std::vector<mpz_class> avoiding(std::uint64_t n_max, std::uint64_t p) {
  std::vector<mpz_class> a(n_max + 1, 0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    a[n] = 1 + a[n - 1];
    for (std::uint64_t i = 1; i + 1 < n; ++i) a[n] += a[i] * a[n - 1 - i];
    if (n == p) a[n] -= 1;
  }
  return a;
}

inline mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Motzkin numbers from M_n = sum_k C(n, 2k) Catalan(k).
inline mpz_class motzkin(std::uint64_t n) {
  mpz_class s = 0;
  for (std::uint64_t k = 0; 2 * k <= n; ++k) s += binomial(n, 2 * k) * binomial(2 * k, k) / (k + 1);
  return s;
}

}  // namespace oracle
