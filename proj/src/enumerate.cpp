#include "debruijn/enumerate.hpp"

#include <charconv>

#include "debruijn/counting.hpp"

namespace debruijn {

bool TermClass::contains(const Term& t) const {
  switch (kind) {
    case TermClassKind::Plain:
      return true;
    case TermClassKind::NormalForm:
      return is_normal_form(t);
    case TermClassKind::Neutral:
      return is_neutral(t);
    case TermClassKind::HeadNormal:
      return is_head_normal(t);
    case TermClassKind::NeutralHeadNormal:
      return is_neutral_head_normal(t);
    case TermClassKind::MOpen:
      return max_free_index_bound(t) <= m;
    case TermClassKind::Closed:
      return is_closed(t);
  }
  return false;
}

TermClass TermClass::parse(std::string_view text) {
  if (text == "plain") return plain();
  if (text == "nf") return normal_form();
  if (text == "neutral") return neutral();
  if (text == "hnf") return head_normal();
  if (text == "nhnf") return neutral_head_normal();
  if (text == "closed") return closed();
  constexpr std::string_view prefix = "m-open:";
  if (text.starts_with(prefix)) {
    std::uint64_t m = 0;
    auto digits = text.substr(prefix.size());
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec == std::errc() && p == digits.data() + digits.size() && !digits.empty()) return m_open(m);
  }
  throw DomainError("unknown term class '" + std::string(text) + "'");
}

std::string TermClass::name() const {
  switch (kind) {
    case TermClassKind::Plain:
      return "plain";
    case TermClassKind::NormalForm:
      return "nf";
    case TermClassKind::Neutral:
      return "neutral";
    case TermClassKind::HeadNormal:
      return "hnf";
    case TermClassKind::NeutralHeadNormal:
      return "nhnf";
    case TermClassKind::MOpen:
      return "m-open:" + std::to_string(m);
    case TermClassKind::Closed:
      return "closed";
  }
  return "?";
}

namespace {

class PlainEnumerator {
 public:
  explicit PlainEnumerator(const SizeModel& model) : m_(model) {}

  // Yields every plain term of size n; false once the sink asked to stop.
  bool run(std::uint64_t n, const TermVisitor& sink) const {
    if (n >= m_.zero_w && (n - m_.zero_w) % m_.succ_w == 0) {
      if (!sink(Term::index((n - m_.zero_w) / m_.succ_w))) return false;
    }
    if (n >= m_.abs_w) {
      bool go = run(n - m_.abs_w, [&](const Term& body) { return sink(Term::abs(body)); });
      if (!go) return false;
    }
    if (n >= m_.app_w) {
      const std::uint64_t rest = n - m_.app_w;
      // The smallest term is the index 0; skipping empty sides keeps the
      // recursion well-founded when applications are free.
      const std::uint64_t lo = m_.zero_w;
      if (rest < 2 * lo) return true;
      for (std::uint64_t i = lo; i <= rest - lo; ++i) {
        bool go = run(i, [&](const Term& l) {
          return run(rest - i, [&](const Term& r) { return sink(Term::app(l, r)); });
        });
        if (!go) return false;
      }
    }
    return true;
  }

 private:
  SizeModel m_;
};

}  // namespace

bool for_each_term(std::uint64_t n, const SizeModel& model, const TermClass& cls, const TermVisitor& visit,
                   const EnumerationLimits& limits) {
  model.require_finitary();
  const BigNat universe = count_plain_model(model, n);
  const BigNat budget = count_plain(limits.max_natural_size);
  if (universe > budget) {
    throw UnsatisfiableError("enumeration of size " + std::to_string(n) + " in model " + model.name() + " needs " +
                             universe.get_str() + " terms, above the cap of " + budget.get_str() +
                             " (natural size " + std::to_string(limits.max_natural_size) + ")");
  }
  PlainEnumerator gen(model);
  if (cls.kind == TermClassKind::Plain) return gen.run(n, visit);
  return gen.run(n, [&](const Term& t) { return !cls.contains(t) || visit(t); });
}

std::vector<Term> enumerate_terms(std::uint64_t n, const SizeModel& model, const TermClass& cls,
                                  const EnumerationLimits& limits) {
  std::vector<Term> out;
  for_each_term(
      n, model, cls,
      [&](const Term& t) {
        out.push_back(t);
        return true;
      },
      limits);
  return out;
}

}  // namespace debruijn
