#include "debruijn/bijections.hpp"

#include <algorithm>
#include <vector>

namespace debruijn {

namespace {

// t = head N1 ... Nm; returns head and the arguments in application order.
const Term& unwind_spine(const Term& t, std::vector<Term>& args) {
  const Term* head = &t;
  while (head->is_app()) {
    args.push_back(head->rhs());
    head = &head->lhs();
  }
  std::reverse(args.begin(), args.end());
  return *head;
}

Term apply_all(Term head, const std::vector<Term>& args, std::size_t from = 0) {
  for (std::size_t i = from; i < args.size(); ++i) head = Term::app(std::move(head), args[i]);
  return head;
}

}  // namespace

// --- terms and black-white trees --------------------------------------------

BwTree lam_to_bw(const Term& t) {
  // The left spine of the image reads, top to bottom: the black chain of the
  // head index, then one white node per constructor on the path to it,
  // innermost first. Build it from the bottom up.
  std::vector<const Term*> path;
  const Term* cur = &t;
  while (!cur->is_index()) {
    path.push_back(cur);
    cur = cur->is_abs() ? &cur->body() : &cur->rhs();
  }
  std::optional<BwTree> below;
  for (const Term* ctor : path) {
    if (ctor->is_abs())
      below = BwTree::white(std::move(below));
    else
      below = BwTree::white(std::move(below), lam_to_bw(ctor->lhs()));
  }
  for (std::uint64_t i = 0; i <= cur->index_value(); ++i) below = BwTree::black(std::move(below));
  return *below;
}

Term bw_to_lam(const BwTree& t) {
  if (t.color() != Color::Black) throw DomainError("bw_to_lam: root must be black, got " + print(t));
  std::vector<const BwTree*> spine;
  for (const BwTree* cur = &t; cur; cur = cur->left() ? &*cur->left() : nullptr) spine.push_back(cur);

  std::size_t blacks = 0;
  while (blacks < spine.size() && spine[blacks]->color() == Color::Black) {
    if (spine[blacks]->right()) throw DomainError("bw_to_lam: black node with a right child in " + print(t));
    ++blacks;
  }
  Term acc = Term::index(blacks - 1);
  for (std::size_t i = blacks; i < spine.size(); ++i) {
    const BwTree& w = *spine[i];
    if (w.color() != Color::White) throw DomainError("bw_to_lam: white node with a black left child in " + print(t));
    if (w.right())
      acc = Term::app(bw_to_lam(*w.right()), std::move(acc));
    else
      acc = Term::abs(std::move(acc));
  }
  return acc;
}

// --- black-white and zigzag-free trees -------------------------------------

namespace {

BzTree bw_to_bz_white(const BwTree& t);

BzTree bw_to_bz_black(const BwTree& t) {
  if (t.color() != Color::Black) throw DomainError("bw_to_bz: expected a black node");
  if (t.right()) throw DomainError("bw_to_bz: black node with a right child");
  if (!t.left()) return BzTree::leaf();
  const BwTree& l = *t.left();
  if (l.color() == Color::Black) return BzTree(std::nullopt, bw_to_bz_black(l));
  // A black node over a white subtree vanishes; the white chain below pays
  // the node back at its bottom.
  return bw_to_bz_white(l);
}

BzTree bw_to_bz_white(const BwTree& t) {
  std::optional<BzTree> left = BzTree::leaf();
  if (t.left()) {
    if (t.left()->color() != Color::White) throw DomainError("bw_to_bz: white node with a black left child");
    left = bw_to_bz_white(*t.left());
  }
  std::optional<BzTree> right;
  if (t.right()) {
    if (t.right()->color() != Color::Black) throw DomainError("bw_to_bz: white node with a white right child");
    right = bw_to_bz_black(*t.right());
  }
  return BzTree(std::move(left), std::move(right));
}

BwTree bz_to_bw_white(const BzTree& t);

BwTree bz_to_bw_black(const BzTree& t) {
  if (t.is_leaf()) return BwTree::black();
  if (!t.left()) return BwTree::black(bz_to_bw_black(*t.right()));
  return BwTree::black(bz_to_bw_white(t));
}

// Domain: trees whose root has a left child.
BwTree bz_to_bw_white(const BzTree& t) {
  if (!t.left()) throw DomainError("bz_to_bw: zigzag (left child without a left child of its own)");
  const BzTree& l = *t.left();
  std::optional<BwTree> right;
  if (t.right()) right = bz_to_bw_black(*t.right());
  if (l.is_leaf()) return BwTree::white(std::nullopt, std::move(right));
  return BwTree::white(bz_to_bw_white(l), std::move(right));
}

}  // namespace

BzTree bw_to_bz(const BwTree& t) {
  if (t.color() != Color::Black) throw DomainError("bw_to_bz: root must be black, got " + print(t));
  return bw_to_bz_black(t);
}

BwTree bz_to_bw(const BzTree& t) { return bz_to_bw_black(t); }

// --- Motzkin trees and neutral terms -----------------------------------------

Term motzkin_to_neutral(const MotzkinTree& t) {
  std::uint64_t unary = 0;
  const MotzkinTree* cur = &t;
  while (cur->kind() == MotzkinTree::Kind::Unary) {
    ++unary;
    cur = &cur->child();
  }
  // No splitting node below the unary path: it spells an index.
  if (cur->kind() == MotzkinTree::Kind::Leaf) return Term::index(unary);
  Term arg = motzkin_to_neutral(cur->right());
  for (; unary > 0; --unary) arg = Term::abs(std::move(arg));
  return Term::app(motzkin_to_neutral(cur->left()), std::move(arg));
}

namespace {

MotzkinTree unary_chain(std::uint64_t k, MotzkinTree bottom) {
  for (; k > 0; --k) bottom = MotzkinTree::unary(std::move(bottom));
  return bottom;
}

MotzkinTree neutral_to_motzkin_unchecked(const Term& t) {
  if (t.is_index()) return unary_chain(t.index_value(), MotzkinTree::leaf());
  std::uint64_t lambdas = 0;
  const Term* arg = &t.rhs();
  while (arg->is_abs()) {
    ++lambdas;
    arg = &arg->body();
  }
  return unary_chain(lambdas, MotzkinTree::binary(neutral_to_motzkin_unchecked(t.lhs()),
                                                  neutral_to_motzkin_unchecked(*arg)));
}

}  // namespace

MotzkinTree neutral_to_motzkin(const Term& t) {
  if (!is_neutral(t)) throw DomainError("neutral_to_motzkin: '" + print(t) + "' is not neutral");
  return neutral_to_motzkin_unchecked(t);
}

// --- neutral head normal forms and plain terms ------------------------------

Term nhnf_to_plain(const Term& t) {
  std::vector<Term> args;
  const Term& head = unwind_spine(t, args);
  if (!head.is_index()) throw DomainError("nhnf_to_plain: '" + print(t) + "' is not a neutral head normal form");
  const std::uint64_t k = head.index_value();
  if (k > 0) return apply_all(Term::index(k - 1), args);
  if (args.empty()) throw DomainError("nhnf_to_plain: the bare index 0 has no plain counterpart");
  return apply_all(Term::abs(args[0]), args, 1);
}

Term plain_to_nhnf(const Term& t) {
  std::vector<Term> args;
  const Term& head = unwind_spine(t, args);
  if (head.is_index()) return apply_all(Term::index(head.index_value() + 1), args);
  args.insert(args.begin(), head.body());
  return apply_all(Term::index(0), args);
}

}  // namespace debruijn
