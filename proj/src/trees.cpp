#include "debruijn/trees.hpp"

namespace debruijn {

struct BwTree::Node {
  Color color;
  std::uint64_t size;
  std::optional<BwTree> left;
  std::optional<BwTree> right;
};

BwTree::BwTree(Color color, std::optional<BwTree> left, std::optional<BwTree> right) {
  const std::uint64_t sz = 1 + (left ? left->size() : 0) + (right ? right->size() : 0);
  node_ = std::make_shared<const Node>(Node{color, sz, std::move(left), std::move(right)});
}

Color BwTree::color() const noexcept { return node_->color; }
const std::optional<BwTree>& BwTree::left() const noexcept { return node_->left; }
const std::optional<BwTree>& BwTree::right() const noexcept { return node_->right; }
std::uint64_t BwTree::size() const noexcept { return node_->size; }

bool operator==(const BwTree& a, const BwTree& b) noexcept {
  if (a.node_ == b.node_) return true;
  return a.color() == b.color() && a.size() == b.size() && a.left() == b.left() && a.right() == b.right();
}

struct BzTree::Node {
  std::uint64_t size;
  std::optional<BzTree> left;
  std::optional<BzTree> right;
};

BzTree::BzTree(std::optional<BzTree> left, std::optional<BzTree> right) {
  const std::uint64_t sz = 1 + (left ? left->size() : 0) + (right ? right->size() : 0);
  node_ = std::make_shared<const Node>(Node{sz, std::move(left), std::move(right)});
}

const std::optional<BzTree>& BzTree::left() const noexcept { return node_->left; }
const std::optional<BzTree>& BzTree::right() const noexcept { return node_->right; }
std::uint64_t BzTree::size() const noexcept { return node_->size; }

bool operator==(const BzTree& a, const BzTree& b) noexcept {
  if (a.node_ == b.node_) return true;
  return a.size() == b.size() && a.left() == b.left() && a.right() == b.right();
}

struct MotzkinTree::Node {
  Kind kind;
  std::uint64_t size;
  std::optional<MotzkinTree> first;
  std::optional<MotzkinTree> second;
};

MotzkinTree MotzkinTree::leaf() { return MotzkinTree(std::make_shared<const Node>(Node{Kind::Leaf, 1, {}, {}})); }

MotzkinTree MotzkinTree::unary(MotzkinTree child) {
  const std::uint64_t sz = 1 + child.size();
  return MotzkinTree(std::make_shared<const Node>(Node{Kind::Unary, sz, std::move(child), {}}));
}

MotzkinTree MotzkinTree::binary(MotzkinTree left, MotzkinTree right) {
  const std::uint64_t sz = 1 + left.size() + right.size();
  return MotzkinTree(std::make_shared<const Node>(Node{Kind::Binary, sz, std::move(left), std::move(right)}));
}

MotzkinTree::Kind MotzkinTree::kind() const noexcept { return node_->kind; }
std::uint64_t MotzkinTree::size() const noexcept { return node_->size; }

const MotzkinTree& MotzkinTree::child() const {
  if (kind() != Kind::Unary) throw DomainError("child() on a non-unary Motzkin node");
  return *node_->first;
}

const MotzkinTree& MotzkinTree::left() const {
  if (kind() != Kind::Binary) throw DomainError("left() on a non-binary Motzkin node");
  return *node_->first;
}

const MotzkinTree& MotzkinTree::right() const {
  if (kind() != Kind::Binary) throw DomainError("right() on a non-binary Motzkin node");
  return *node_->second;
}

bool operator==(const MotzkinTree& a, const MotzkinTree& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case MotzkinTree::Kind::Leaf:
      return true;
    case MotzkinTree::Kind::Unary:
      return a.child() == b.child();
    case MotzkinTree::Kind::Binary:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// --- validity ---------------------------------------------------------------

bool is_valid_bw(const BwTree& t) {
  if (t.color() == Color::Black) {
    if (t.right()) return false;
  } else {
    if (t.left() && t.left()->color() != Color::White) return false;
    if (t.right() && t.right()->color() != Color::Black) return false;
  }
  return (!t.left() || is_valid_bw(*t.left())) && (!t.right() || is_valid_bw(*t.right()));
}

namespace {

bool left_spine_ends_in_leaf(const BzTree& start) {
  const BzTree* cur = &start;
  while (cur->left()) cur = &*cur->left();
  return cur->is_leaf();
}

}  // namespace

bool is_zigzag_free(const BzTree& t) {
  if (t.left() && !left_spine_ends_in_leaf(*t.left())) return false;
  return (!t.left() || is_zigzag_free(*t.left())) && (!t.right() || is_zigzag_free(*t.right()));
}

bool has_zigzag_pattern(const BzTree& t) {
  if (const auto& y = t.left(); y && !y->left() && y->right()) return true;
  return (t.left() && has_zigzag_pattern(*t.left())) || (t.right() && has_zigzag_pattern(*t.right()));
}

// --- enumeration ------------------------------------------------------------

namespace {

void check_limit(std::uint64_t n, const TreeLimits& limits) {
  if (n > limits.max_size)
    throw UnsatisfiableError("tree enumeration of size " + std::to_string(n) + " exceeds the cap " +
                             std::to_string(limits.max_size));
}

// BW_black = B + B(BW_black) + B(BW_white)
// BW_white = W + W(BW_white, _) + W(_, BW_black) + W(BW_white, BW_black)
bool gen_bw(std::uint64_t n, Color root, const TreeVisitor<BwTree>& sink) {
  if (n == 0) return true;
  if (root == Color::Black) {
    if (n == 1) return sink(BwTree::black());
    if (!gen_bw(n - 1, Color::Black, [&](const BwTree& l) { return sink(BwTree::black(l)); })) return false;
    return gen_bw(n - 1, Color::White, [&](const BwTree& l) { return sink(BwTree::black(l)); });
  }
  if (n == 1) return sink(BwTree::white());
  if (!gen_bw(n - 1, Color::White, [&](const BwTree& l) { return sink(BwTree::white(l)); })) return false;
  if (!gen_bw(n - 1, Color::Black, [&](const BwTree& r) { return sink(BwTree::white(std::nullopt, r)); }))
    return false;
  for (std::uint64_t i = 1; i + 2 <= n; ++i) {
    bool go = gen_bw(i, Color::White, [&](const BwTree& l) {
      return gen_bw(n - 1 - i, Color::Black, [&](const BwTree& r) { return sink(BwTree::white(l, r)); });
    });
    if (!go) return false;
  }
  return true;
}

// BZ1 = N(_, BZ1) + BZ2
// BZ2 = N + N(BZ2, _) + N(BZ2, BZ1)
bool gen_bz2(std::uint64_t n, const TreeVisitor<BzTree>& sink);

bool gen_bz1(std::uint64_t n, const TreeVisitor<BzTree>& sink) {
  if (n == 0) return true;
  if (n >= 2 && !gen_bz1(n - 1, [&](const BzTree& r) { return sink(BzTree(std::nullopt, r)); })) return false;
  return gen_bz2(n, sink);
}

bool gen_bz2(std::uint64_t n, const TreeVisitor<BzTree>& sink) {
  if (n == 0) return true;
  if (n == 1) return sink(BzTree::leaf());
  if (!gen_bz2(n - 1, [&](const BzTree& l) { return sink(BzTree(l, std::nullopt)); })) return false;
  for (std::uint64_t i = 1; i + 2 <= n; ++i) {
    bool go = gen_bz2(i, [&](const BzTree& l) {
      return gen_bz1(n - 1 - i, [&](const BzTree& r) { return sink(BzTree(l, r)); });
    });
    if (!go) return false;
  }
  return true;
}

bool gen_motzkin(std::uint64_t n, const TreeVisitor<MotzkinTree>& sink) {
  if (n == 0) return true;
  if (n == 1) return sink(MotzkinTree::leaf());
  if (!gen_motzkin(n - 1, [&](const MotzkinTree& c) { return sink(MotzkinTree::unary(c)); })) return false;
  for (std::uint64_t i = 1; i + 2 <= n; ++i) {
    bool go = gen_motzkin(i, [&](const MotzkinTree& l) {
      return gen_motzkin(n - 1 - i, [&](const MotzkinTree& r) { return sink(MotzkinTree::binary(l, r)); });
    });
    if (!go) return false;
  }
  return true;
}

// Optional subtree of each size, absent allowed for size 0.
template <class T, class Make>
bool gen_binary(std::uint64_t n, const TreeVisitor<T>& sink, const Make& make);

template <class T, class Make>
bool gen_optional(std::uint64_t n, const std::function<bool(const std::optional<T>&)>& sink, const Make& make) {
  if (n == 0) return sink(std::nullopt);
  return gen_binary<T>(n, [&](const T& t) { return sink(t); }, make);
}

template <class T, class Make>
bool gen_binary(std::uint64_t n, const TreeVisitor<T>& sink, const Make& make) {
  for (std::uint64_t i = 0; i + 1 <= n; ++i) {
    bool go = gen_optional<T>(
        i,
        [&](const std::optional<T>& l) {
          return gen_optional<T>(
              n - 1 - i, [&](const std::optional<T>& r) { return make(l, r, sink); }, make);
        },
        make);
    if (!go) return false;
  }
  return true;
}

}  // namespace

bool for_each_bw(std::uint64_t n, Color root, const TreeVisitor<BwTree>& visit, const TreeLimits& limits) {
  check_limit(n, limits);
  return gen_bw(n, root, visit);
}

bool for_each_bz(std::uint64_t n, const TreeVisitor<BzTree>& visit, const TreeLimits& limits) {
  check_limit(n, limits);
  return gen_bz1(n, visit);
}

bool for_each_motzkin(std::uint64_t n, const TreeVisitor<MotzkinTree>& visit, const TreeLimits& limits) {
  check_limit(n, limits);
  return gen_motzkin(n, visit);
}

namespace {

template <class T, class F>
std::vector<T> collect(F&& f) {
  std::vector<T> out;
  f([&](const T& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace

std::vector<BwTree> enumerate_bw(std::uint64_t n, Color root, const TreeLimits& limits) {
  return collect<BwTree>([&](const TreeVisitor<BwTree>& v) { return for_each_bw(n, root, v, limits); });
}

std::vector<BzTree> enumerate_bz(std::uint64_t n, const TreeLimits& limits) {
  return collect<BzTree>([&](const TreeVisitor<BzTree>& v) { return for_each_bz(n, v, limits); });
}

std::vector<MotzkinTree> enumerate_motzkin(std::uint64_t n, const TreeLimits& limits) {
  return collect<MotzkinTree>([&](const TreeVisitor<MotzkinTree>& v) { return for_each_motzkin(n, v, limits); });
}

bool for_each_colored_binary(std::uint64_t n, const TreeVisitor<BwTree>& visit) {
  auto make = [](const std::optional<BwTree>& l, const std::optional<BwTree>& r, const TreeVisitor<BwTree>& sink) {
    return sink(BwTree(Color::Black, l, r)) && sink(BwTree(Color::White, l, r));
  };
  return gen_binary<BwTree>(n, visit, make);
}

bool for_each_binary(std::uint64_t n, const TreeVisitor<BzTree>& visit) {
  auto make = [](const std::optional<BzTree>& l, const std::optional<BzTree>& r, const TreeVisitor<BzTree>& sink) {
    return sink(BzTree(l, r));
  };
  return gen_binary<BzTree>(n, visit, make);
}

// --- text -------------------------------------------------------------------

namespace {

void print_bw(const std::optional<BwTree>& t, std::string& out) {
  if (!t) {
    out += '_';
    return;
  }
  out += t->color() == Color::Black ? 'B' : 'W';
  out += '(';
  print_bw(t->left(), out);
  out += ',';
  print_bw(t->right(), out);
  out += ')';
}

void print_bz(const std::optional<BzTree>& t, std::string& out) {
  if (!t) {
    out += '_';
    return;
  }
  out += "N(";
  print_bz(t->left(), out);
  out += ',';
  print_bz(t->right(), out);
  out += ')';
}

void print_mz(const MotzkinTree& t, std::string& out) {
  switch (t.kind()) {
    case MotzkinTree::Kind::Leaf:
      out += 'L';
      return;
    case MotzkinTree::Kind::Unary:
      out += "U(";
      print_mz(t.child(), out);
      out += ')';
      return;
    case MotzkinTree::Kind::Binary:
      out += "B(";
      print_mz(t.left(), out);
      out += ',';
      print_mz(t.right(), out);
      out += ')';
      return;
  }
}

class TreeReader {
 public:
  explicit TreeReader(std::string_view text) : text_(text) {
    while (!text_.empty() && (text_.back() == '\r' || text_.back() == '\n')) text_.remove_suffix(1);
  }

  std::optional<BwTree> bw() {
    char c = next();
    if (c == '_') return std::nullopt;
    if (c != 'B' && c != 'W') fail("expected 'B', 'W' or '_'");
    expect('(');
    auto l = bw();
    expect(',');
    auto r = bw();
    expect(')');
    return BwTree(c == 'B' ? Color::Black : Color::White, std::move(l), std::move(r));
  }

  std::optional<BzTree> bz() {
    char c = next();
    if (c == '_') return std::nullopt;
    if (c != 'N') fail("expected 'N' or '_'");
    expect('(');
    auto l = bz();
    expect(',');
    auto r = bz();
    expect(')');
    return BzTree(std::move(l), std::move(r));
  }

  MotzkinTree motzkin() {
    char c = next();
    if (c == 'L') return MotzkinTree::leaf();
    if (c == 'U') {
      expect('(');
      auto child = motzkin();
      expect(')');
      return MotzkinTree::unary(std::move(child));
    }
    if (c == 'B') {
      expect('(');
      auto l = motzkin();
      expect(',');
      auto r = motzkin();
      expect(')');
      return MotzkinTree::binary(std::move(l), std::move(r));
    }
    fail("expected 'L', 'U' or 'B'");
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(pos_ > 0 ? pos_ - 1 : 0, msg);
  }
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  char next() {
    skip_ws();
    if (pos_ >= text_.size()) {
      ++pos_;
      fail("unexpected end of input");
    }
    return text_[pos_++];
  }
  void expect(char want) {
    if (next() != want) fail(std::string("expected '") + want + "'");
  }
};

}  // namespace

std::string print(const BwTree& t) {
  std::string out;
  print_bw(t, out);
  return out;
}

std::string print(const BzTree& t) {
  std::string out;
  print_bz(t, out);
  return out;
}

std::string print(const MotzkinTree& t) {
  std::string out;
  print_mz(t, out);
  return out;
}

BwTree parse_bw(std::string_view text) {
  TreeReader r(text);
  auto t = r.bw();
  r.finish();
  if (!t) throw ParseError(0, "empty black-white tree");
  return *t;
}

BzTree parse_bz(std::string_view text) {
  TreeReader r(text);
  auto t = r.bz();
  r.finish();
  if (!t) throw ParseError(0, "empty binary tree");
  return *t;
}

MotzkinTree parse_motzkin(std::string_view text) {
  TreeReader r(text);
  auto t = r.motzkin();
  r.finish();
  return t;
}

}  // namespace debruijn
