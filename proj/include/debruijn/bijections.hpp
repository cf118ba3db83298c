#pragma once

// Size-preserving bijections between term classes and tree families.
//
//   plain terms  <-> black-rooted black-white trees <-> zigzag-free trees
//   neutral terms <-> Motzkin trees
//   neutral head normal forms other than 0 <-> plain terms (size shift by 1)
//
// Every inverse rejects inputs outside its domain with DomainError.

#include "debruijn/term.hpp"
#include "debruijn/trees.hpp"

namespace debruijn {

/// Index k becomes a left chain of k+1 black nodes. An abstraction, or an
/// application whose right operand has been translated, hangs a new white
/// node below the leftmost node of that translation; for an application the
/// white node's right child is the translation of the left operand.
BwTree lam_to_bw(const Term& t);
/// Inverse of lam_to_bw: peel white nodes off the bottom of the left spine.
Term bw_to_lam(const BwTree& t);

BzTree bw_to_bz(const BwTree& t);
BwTree bz_to_bw(const BzTree& t);

/// unary^k(leaf) is index k; unary^k(binary(a, b)) is a (\^k b).
Term motzkin_to_neutral(const MotzkinTree& t);
MotzkinTree neutral_to_motzkin(const Term& t);

/// 0 N1 ... Nm (m > 0) maps to (\N1) N2 ... Nm and (S n) N1 ... Nm to
/// n N1 ... Nm; the result is one smaller.
Term nhnf_to_plain(const Term& t);
Term plain_to_nhnf(const Term& t);

}  // namespace debruijn
