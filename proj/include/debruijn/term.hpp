#pragma once

// Lambda terms in unary de Bruijn notation, size models and structural
// predicates.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace debruijn {

/// Invalid argument for an operation's precondition (wrong class, absent child,
/// degenerate model, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request that is well formed but has no answer: an empty class at the
/// requested size, an enumeration above the configured cap, an exhausted
/// rejection budget.
class UnsatisfiableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with the 0-based byte offset where it was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Immutable lambda term. Copies share structure, so passing by value is cheap.
///
/// Indices are atomic: `Term::index(k)` stands for the successor chain S^k 0.
class Term {
 public:
  enum class Kind : std::uint8_t { Index, Abs, App };

  static Term index(std::uint64_t value);
  static Term abs(Term body);
  static Term app(Term lhs, Term rhs);

  Kind kind() const noexcept;
  bool is_index() const noexcept { return kind() == Kind::Index; }
  bool is_abs() const noexcept { return kind() == Kind::Abs; }
  bool is_app() const noexcept { return kind() == Kind::App; }

  // Accessors throw DomainError when called on the wrong kind.
  std::uint64_t index_value() const;
  const Term& body() const;
  const Term& lhs() const;
  const Term& rhs() const;

  /// Size in the natural model, cached at construction.
  std::uint64_t natural_size() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;
  /// Total order: natural size, then kind, then children lexicographically.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Constructor weights defining a size function over terms.
struct SizeModel {
  std::uint32_t abs_w = 1;
  std::uint32_t app_w = 1;
  std::uint32_t succ_w = 1;
  std::uint32_t zero_w = 1;

  static constexpr SizeModel natural() { return {1, 1, 1, 1}; }
  /// Zero is free, applications weigh two.
  static constexpr SizeModel model_b() { return {1, 2, 1, 0}; }
  /// Zero is free, everything else weighs one.
  static constexpr SizeModel model_c() { return {1, 1, 1, 0}; }

  /// Only finitely many terms of each size: no free abstraction or
  /// successor, and applications of zeros cannot all be free.
  bool is_finitary() const noexcept {
    return abs_w >= 1 && succ_w >= 1 && zero_w + app_w >= 1;
  }
  /// Throws DomainError unless is_finitary().
  void require_finitary() const;

  /// "natural", "B", "C" or four comma-separated weights abs,app,succ,zero.
  static SizeModel parse(std::string_view text);
  std::string name() const;

  friend bool operator==(const SizeModel&, const SizeModel&) = default;
};

std::uint64_t size(const Term& t, const SizeModel& model = SizeModel::natural());

/// No subterm of the form (\N) M.
bool is_normal_form(const Term& t);
/// M ::= M N | index, with N a normal form.
bool is_neutral(const Term& t);
/// \...\(k N1 ... Nm) with arbitrary N_i.
bool is_head_normal(const Term& t);
/// k N1 ... Nm: a head normal form without leading abstractions.
bool is_neutral_head_normal(const Term& t);

/// Smallest m such that every free index of t is below m; 0 iff t is closed.
std::uint64_t max_free_index_bound(const Term& t);
bool is_closed(const Term& t);

/// Whether `pattern` occurs as a subtree of `t`, reading Index(k) as the chain
/// S^k 0. An index pattern j therefore occurs inside any index k >= j.
bool contains_subterm(const Term& t, const Term& pattern);

std::uint64_t count_abstractions(const Term& t);
std::uint64_t count_applications(const Term& t);
/// Number of 0 constructors, which is one per index occurrence.
std::uint64_t count_zeros(const Term& t);

/// Canonical text: `\` binds as far right as possible, application is
/// left-associative juxtaposition separated by single spaces.
std::string print(const Term& t);
/// Accepts the canonical grammar; whitespace between atoms is optional when
/// a parenthesis delimits them. Throws ParseError.
Term parse_term(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace debruijn

template <>
struct std::hash<debruijn::Term> {
  std::size_t operator()(const debruijn::Term& t) const noexcept { return t.hash(); }
};
