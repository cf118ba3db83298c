#pragma once

// Tree families in bijection with term classes: black-white trees and
// zigzag-free binary trees (both counted like plain terms) and Motzkin
// trees (counted like neutral terms).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "debruijn/term.hpp"

namespace debruijn {

enum class Color : std::uint8_t { Black, White };

/// Binary tree with coloured nodes. Children are optional; the tree itself
/// always has at least its root.
class BwTree {
 public:
  BwTree(Color color, std::optional<BwTree> left = std::nullopt, std::optional<BwTree> right = std::nullopt);

  static BwTree black(std::optional<BwTree> left = std::nullopt) { return BwTree(Color::Black, std::move(left)); }
  static BwTree white(std::optional<BwTree> left = std::nullopt, std::optional<BwTree> right = std::nullopt) {
    return BwTree(Color::White, std::move(left), std::move(right));
  }

  Color color() const noexcept;
  const std::optional<BwTree>& left() const noexcept;
  const std::optional<BwTree>& right() const noexcept;
  std::uint64_t size() const noexcept;

  friend bool operator==(const BwTree& a, const BwTree& b) noexcept;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Uncoloured binary tree.
class BzTree {
 public:
  explicit BzTree(std::optional<BzTree> left = std::nullopt, std::optional<BzTree> right = std::nullopt);

  static BzTree leaf() { return BzTree(); }

  const std::optional<BzTree>& left() const noexcept;
  const std::optional<BzTree>& right() const noexcept;
  bool is_leaf() const noexcept { return !left() && !right(); }
  std::uint64_t size() const noexcept;

  friend bool operator==(const BzTree& a, const BzTree& b) noexcept;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// Unary-binary tree; size is the node count.
class MotzkinTree {
 public:
  enum class Kind : std::uint8_t { Leaf, Unary, Binary };

  static MotzkinTree leaf();
  static MotzkinTree unary(MotzkinTree child);
  static MotzkinTree binary(MotzkinTree left, MotzkinTree right);

  Kind kind() const noexcept;
  /// Child of a unary node; DomainError otherwise.
  const MotzkinTree& child() const;
  const MotzkinTree& left() const;
  const MotzkinTree& right() const;
  std::uint64_t size() const noexcept;

  friend bool operator==(const MotzkinTree& a, const MotzkinTree& b) noexcept;

 private:
  struct Node;
  explicit MotzkinTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Black nodes have no right child; a white node's left child is white and
/// its right child is black.
bool is_valid_bw(const BwTree& t);
/// No node's left child lacks a left child of its own while having a right
/// child: following left branches from any left child ends at a leaf.
bool is_zigzag_free(const BzTree& t);
/// Literal scan for the forbidden shape X -left-> Y -right-> Z with Y having
/// no left child. Independent of is_zigzag_free, used as a cross-check.
bool has_zigzag_pattern(const BzTree& t);

template <class T>
using TreeVisitor = std::function<bool(const T&)>;

/// Generation from the defining grammars. Throws UnsatisfiableError above
/// `max_size`.
struct TreeLimits {
  std::uint64_t max_size = 14;
};

bool for_each_bw(std::uint64_t n, Color root, const TreeVisitor<BwTree>& visit, const TreeLimits& limits = {});
bool for_each_bz(std::uint64_t n, const TreeVisitor<BzTree>& visit, const TreeLimits& limits = {});
bool for_each_motzkin(std::uint64_t n, const TreeVisitor<MotzkinTree>& visit, const TreeLimits& limits = {});

std::vector<BwTree> enumerate_bw(std::uint64_t n, Color root = Color::Black, const TreeLimits& limits = {});
std::vector<BzTree> enumerate_bz(std::uint64_t n, const TreeLimits& limits = {});
std::vector<MotzkinTree> enumerate_motzkin(std::uint64_t n, const TreeLimits& limits = {});

/// Every coloured binary tree with n nodes, unconstrained (2^n Catalan(n)).
bool for_each_colored_binary(std::uint64_t n, const TreeVisitor<BwTree>& visit);
/// Every uncoloured binary tree with n nodes.
bool for_each_binary(std::uint64_t n, const TreeVisitor<BzTree>& visit);

// Text formats: BW as `B(l,r)` / `W(l,r)`, BZ as `N(l,r)`, `_` for an absent
// child; Motzkin as `L`, `U(c)`, `B(l,r)`.
std::string print(const BwTree& t);
std::string print(const BzTree& t);
std::string print(const MotzkinTree& t);
BwTree parse_bw(std::string_view text);
BzTree parse_bz(std::string_view text);
MotzkinTree parse_motzkin(std::string_view text);

}  // namespace debruijn
