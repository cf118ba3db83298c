#include "debruijn/term.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <vector>

namespace debruijn {

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}

struct Term::Node {
  Kind kind;
  std::uint64_t value;  // index value; unused otherwise
  std::uint64_t natural_size;
  std::size_t hash;
  Term first;   // body, or lhs
  Term second;  // rhs

  Node(Kind k, std::uint64_t v, std::uint64_t sz, std::size_t h, Term a, Term b)
      : kind(k), value(v), natural_size(sz), hash(h), first(std::move(a)), second(std::move(b)) {}
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  // boost::hash_combine constant
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::index(std::uint64_t value) {
  const std::size_t h = mix(0x1234, std::hash<std::uint64_t>{}(value));
  return Term(std::make_shared<const Node>(Kind::Index, value, value + 1, h, Term(nullptr), Term(nullptr)));
}

Term Term::abs(Term body) {
  const std::size_t h = mix(0xab5, body.hash());
  const std::uint64_t sz = body.natural_size() + 1;
  return Term(std::make_shared<const Node>(Kind::Abs, 0, sz, h, std::move(body), Term(nullptr)));
}

Term Term::app(Term lhs, Term rhs) {
  const std::size_t h = mix(mix(0xa99, lhs.hash()), rhs.hash());
  const std::uint64_t sz = lhs.natural_size() + rhs.natural_size() + 1;
  return Term(std::make_shared<const Node>(Kind::App, 0, sz, h, std::move(lhs), std::move(rhs)));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }

std::uint64_t Term::index_value() const {
  if (!is_index()) throw DomainError("index_value() on a non-index term");
  return node_->value;
}

const Term& Term::body() const {
  if (!is_abs()) throw DomainError("body() on a non-abstraction term");
  return node_->first;
}

const Term& Term::lhs() const {
  if (!is_app()) throw DomainError("lhs() on a non-application term");
  return node_->first;
}

const Term& Term::rhs() const {
  if (!is_app()) throw DomainError("rhs() on a non-application term");
  return node_->second;
}

std::uint64_t Term::natural_size() const noexcept { return node_->natural_size; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.hash != y.hash || x.natural_size != y.natural_size) return false;
  switch (x.kind) {
    case Term::Kind::Index:
      return x.value == y.value;
    case Term::Kind::Abs:
      return x.first == y.first;
    case Term::Kind::App:
      return x.first == y.first && x.second == y.second;
  }
  return false;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.natural_size <=> y.natural_size; c != 0) return c;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case Term::Kind::Index:
      return x.value <=> y.value;
    case Term::Kind::Abs:
      return x.first <=> y.first;
    case Term::Kind::App:
      if (auto c = x.first <=> y.first; c != 0) return c;
      return x.second <=> y.second;
  }
  return std::strong_ordering::equal;
}

void SizeModel::require_finitary() const {
  if (!is_finitary()) {
    throw DomainError("size model " + name() +
                      " admits infinitely many terms of some size "
                      "(need abs >= 1, succ >= 1 and zero + app >= 1)");
  }
}

SizeModel SizeModel::parse(std::string_view text) {
  if (text == "natural" || text == "A") return natural();
  if (text == "B") return model_b();
  if (text == "C") return model_c();
  std::uint32_t w[4];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 4; ++i) {
    auto [next, ec] = std::from_chars(p, end, w[i]);
    if (ec != std::errc() || next == p) throw DomainError("bad size model '" + std::string(text) + "'");
    p = next;
    if (i < 3) {
      if (p == end || *p != ',') throw DomainError("bad size model '" + std::string(text) + "'");
      ++p;
    }
  }
  if (p != end) throw DomainError("bad size model '" + std::string(text) + "'");
  return {w[0], w[1], w[2], w[3]};
}

std::string SizeModel::name() const {
  if (*this == natural()) return "natural";
  if (*this == model_b()) return "B";
  if (*this == model_c()) return "C";
  return std::to_string(abs_w) + "," + std::to_string(app_w) + "," + std::to_string(succ_w) + "," +
         std::to_string(zero_w);
}

std::uint64_t size(const Term& t, const SizeModel& m) {
  if (m == SizeModel::natural()) return t.natural_size();
  switch (t.kind()) {
    case Term::Kind::Index:
      return m.zero_w + t.index_value() * m.succ_w;
    case Term::Kind::Abs:
      return m.abs_w + size(t.body(), m);
    case Term::Kind::App:
      return m.app_w + size(t.lhs(), m) + size(t.rhs(), m);
  }
  return 0;
}

bool is_normal_form(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return true;
    case Term::Kind::Abs:
      return is_normal_form(t.body());
    case Term::Kind::App:
      return !t.lhs().is_abs() && is_normal_form(t.lhs()) && is_normal_form(t.rhs());
  }
  return false;
}

bool is_neutral(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return true;
    case Term::Kind::Abs:
      return false;
    case Term::Kind::App:
      return is_neutral(t.lhs()) && is_normal_form(t.rhs());
  }
  return false;
}

bool is_neutral_head_normal(const Term& t) {
  const Term* head = &t;
  while (head->is_app()) head = &head->lhs();
  return head->is_index();
}

bool is_head_normal(const Term& t) {
  const Term* cur = &t;
  while (cur->is_abs()) cur = &cur->body();
  return is_neutral_head_normal(*cur);
}

namespace {

std::uint64_t free_bound(const Term& t, std::uint64_t depth) {
  switch (t.kind()) {
    case Term::Kind::Index: {
      const std::uint64_t k = t.index_value();
      return k >= depth ? k - depth + 1 : 0;
    }
    case Term::Kind::Abs:
      return free_bound(t.body(), depth + 1);
    case Term::Kind::App:
      return std::max(free_bound(t.lhs(), depth), free_bound(t.rhs(), depth));
  }
  return 0;
}

bool has_index_at_least(const Term& t, std::uint64_t j) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return t.index_value() >= j;
    case Term::Kind::Abs:
      return has_index_at_least(t.body(), j);
    case Term::Kind::App:
      return has_index_at_least(t.lhs(), j) || has_index_at_least(t.rhs(), j);
  }
  return false;
}

bool has_equal_subterm(const Term& t, const Term& pattern) {
  if (t.natural_size() < pattern.natural_size()) return false;
  if (t == pattern) return true;
  switch (t.kind()) {
    case Term::Kind::Index:
      return false;
    case Term::Kind::Abs:
      return has_equal_subterm(t.body(), pattern);
    case Term::Kind::App:
      return has_equal_subterm(t.lhs(), pattern) || has_equal_subterm(t.rhs(), pattern);
  }
  return false;
}

}  // namespace

std::uint64_t max_free_index_bound(const Term& t) { return free_bound(t, 0); }

bool is_closed(const Term& t) { return max_free_index_bound(t) == 0; }

bool contains_subterm(const Term& t, const Term& pattern) {
  // Subtrees of a unary chain S^k 0 are exactly the shorter chains, and no
  // non-index pattern fits inside a chain.
  if (pattern.is_index()) return has_index_at_least(t, pattern.index_value());
  return has_equal_subterm(t, pattern);
}

std::uint64_t count_abstractions(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return 0;
    case Term::Kind::Abs:
      return 1 + count_abstractions(t.body());
    case Term::Kind::App:
      return count_abstractions(t.lhs()) + count_abstractions(t.rhs());
  }
  return 0;
}

std::uint64_t count_applications(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return 0;
    case Term::Kind::Abs:
      return count_applications(t.body());
    case Term::Kind::App:
      return 1 + count_applications(t.lhs()) + count_applications(t.rhs());
  }
  return 0;
}

std::uint64_t count_zeros(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Index:
      return 1;
    case Term::Kind::Abs:
      return count_zeros(t.body());
    case Term::Kind::App:
      return count_zeros(t.lhs()) + count_zeros(t.rhs());
  }
  return 0;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print(t); }

}  // namespace debruijn
