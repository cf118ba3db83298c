// Concrete syntax for terms:
//
//   term   := '\' term | appseq
//   appseq := atom { ' ' atom }        (left-associative)
//   atom   := NAT | '(' term ')'

#include <cctype>
#include <charconv>
#include <vector>

#include "debruijn/term.hpp"

namespace debruijn {

namespace {

void print_into(const Term& t, std::string& out);

void print_atom(const Term& t, std::string& out) {
  if (t.is_index()) {
    out += std::to_string(t.index_value());
  } else {
    out += '(';
    print_into(t, out);
    out += ')';
  }
}

void print_appseq(const Term& t, std::string& out) {
  // Collect the left spine so long applications do not recurse per argument.
  std::vector<const Term*> args;
  const Term* head = &t;
  while (head->is_app()) {
    args.push_back(&head->rhs());
    head = &head->lhs();
  }
  print_atom(*head, out);
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    out += ' ';
    print_atom(**it, out);
  }
}

void print_into(const Term& t, std::string& out) {
  const Term* cur = &t;
  while (cur->is_abs()) {
    out += '\\';
    cur = &cur->body();
  }
  if (cur->is_index())
    out += std::to_string(cur->index_value());
  else
    print_appseq(*cur, out);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_all() {
    skip_ws();
    if (at_end()) fail("empty input");
    Term t = term();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  Term term() {
    skip_ws();
    std::size_t lambdas = 0;
    while (!at_end() && peek() == '\\') {
      ++lambdas;
      ++pos_;
      skip_ws();
    }
    Term t = appseq();
    for (; lambdas > 0; --lambdas) t = Term::abs(std::move(t));
    return t;
  }

  bool atom_starts() const { return !at_end() && (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek()))); }

  Term appseq() {
    Term acc = atom();
    for (;;) {
      skip_ws();
      if (!atom_starts()) {
        if (!at_end() && peek() == '\\') fail("abstraction must be parenthesised inside an application");
        break;
      }
      acc = Term::app(std::move(acc), atom());
    }
    return acc;
  }

  Term atom() {
    if (at_end()) fail("expected index or '('");
    if (peek() == '(') {
      ++pos_;
      Term t = term();
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return t;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("unexpected '") + peek() + "'");
    std::uint64_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [next, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) fail("index out of range");
    pos_ += static_cast<std::size_t>(next - first);
    return Term::index(value);
  }
};

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

Term parse_term(std::string_view text) {
  // Tolerate a trailing CR from files with Windows line endings.
  while (!text.empty() && (text.back() == '\r' || text.back() == '\n')) text.remove_suffix(1);
  return Parser(text).parse_all();
}

}  // namespace debruijn
