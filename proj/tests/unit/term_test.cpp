#include <doctest.h>

#include <set>

#include "../oracle.hpp"
#include "debruijn/enumerate.hpp"
#include "debruijn/term.hpp"

using namespace debruijn;

namespace {

Term idx(std::uint64_t k) { return Term::index(k); }
Term lam(Term b) { return Term::abs(std::move(b)); }
Term ap(Term a, Term b) { return Term::app(std::move(a), std::move(b)); }

const Term K = lam(lam(idx(1)));
const Term S = lam(lam(lam(ap(ap(idx(2), idx(0)), ap(idx(1), idx(0))))));
const Term omega_half = lam(ap(idx(0), idx(0)));
const Term Omega = ap(omega_half, omega_half);
const Term P = ap(idx(0), lam(lam(ap(idx(0), idx(1)))));

}  // namespace

TEST_SUITE("term_core") {
  TEST_CASE("natural sizes of K, S and 0") {
    CHECK(size(K) == 4);
    CHECK(size(S) == 13);
    CHECK(size(idx(0)) == 1);
    CHECK(size(idx(0), SizeModel::model_c()) == 0);
    CHECK(size(idx(3)) == 4);
  }

  TEST_CASE("weighted sizes follow the constructor weights") {
    const SizeModel m{2, 3, 5, 7};
    // \ (1 0): 2 + 3 + (7 + 5) + 7
    CHECK(size(lam(ap(idx(1), idx(0))), m) == 24);
    CHECK(size(ap(idx(0), idx(0)), SizeModel::model_b()) == 2);
  }

  TEST_CASE("normal forms") {
    CHECK_FALSE(is_normal_form(Omega));
    CHECK(is_normal_form(K));
    CHECK(is_normal_form(ap(idx(0), lam(idx(0)))));
    CHECK_FALSE(is_normal_form(lam(ap(idx(0), ap(lam(idx(0)), idx(1))))));
  }

  TEST_CASE("neutral terms") {
    CHECK(is_neutral(idx(3)));
    CHECK_FALSE(is_neutral(lam(idx(0))));
    CHECK(is_neutral(P));
    CHECK_FALSE(is_neutral(ap(idx(0), Omega)));
  }

  TEST_CASE("head normal forms") {
    const Term h = lam(ap(idx(0), lam(ap(idx(0), idx(0)))));
    CHECK(is_head_normal(h));
    CHECK_FALSE(is_neutral_head_normal(h));
    CHECK_FALSE(is_head_normal(ap(lam(idx(0)), idx(0))));
    CHECK(is_head_normal(idx(0)));
    CHECK(is_neutral_head_normal(idx(0)));
    // Redexes in arguments do not matter.
    CHECK(is_neutral_head_normal(ap(idx(1), Omega)));
  }

  TEST_CASE("free index bound") {
    CHECK(max_free_index_bound(lam(idx(0))) == 0);
    CHECK(max_free_index_bound(idx(2)) == 3);
    CHECK(max_free_index_bound(K) == 0);
    CHECK(max_free_index_bound(lam(ap(idx(3), idx(0)))) == 3);
    CHECK(is_closed(S));
    CHECK_FALSE(is_closed(lam(idx(1))));
  }

  TEST_CASE("subterm containment") {
    CHECK(contains_subterm(Omega, omega_half));
    CHECK(contains_subterm(idx(2), idx(0)));
    CHECK(contains_subterm(idx(2), idx(2)));
    CHECK_FALSE(contains_subterm(idx(1), idx(2)));
    CHECK_FALSE(contains_subterm(lam(idx(0)), ap(idx(0), idx(0))));
    CHECK(contains_subterm(S, ap(idx(1), idx(0))));
  }

  TEST_CASE("containment agrees with the unary-chain oracle to size 8") {
    std::vector<Term> patterns;
    for (std::uint64_t n = 1; n <= 4; ++n)
      for (const auto& t : oracle::terms(n)) patterns.push_back(t);
    for (std::uint64_t n = 1; n <= 8; ++n)
      for (const auto& t : oracle::terms(n))
        for (const auto& m : patterns) REQUIRE(contains_subterm(t, m) == oracle::contains(t, m));
  }

  TEST_CASE("containment is reflexive and transitive to size 10") {
    for (std::uint64_t n = 1; n <= 10; ++n)
      for (const auto& t : oracle::terms(n)) REQUIRE(contains_subterm(t, t));
    std::vector<Term> small;
    for (std::uint64_t n = 1; n <= 5; ++n)
      for (const auto& t : oracle::terms(n)) small.push_back(t);
    for (std::uint64_t n = 1; n <= 10; n += 3) {
      for (const auto& t : oracle::terms(n)) {
        for (const auto& s : small) {
          if (!contains_subterm(t, s)) continue;
          for (const auto& u : small)
            if (contains_subterm(s, u)) REQUIRE(contains_subterm(t, u));
        }
      }
    }
  }

  TEST_CASE("parse canonical examples") {
    CHECK(parse_term("\\\\1") == K);
    CHECK(parse_term("(\\0 0)(\\0 0)") == Omega);
    CHECK(parse_term("(\\0 0) (\\0 0)") == Omega);
    CHECK(parse_term("\\\\\\2 0 (1 0)") == S);
    CHECK(parse_term("0 (\\\\0 1)") == P);
    CHECK(parse_term("  \\ \\ 1  ") == K);
    CHECK(parse_term("((0))") == idx(0));
    CHECK(parse_term("0 1 2") == ap(ap(idx(0), idx(1)), idx(2)));
    CHECK_THROWS_AS(parse_term("0 \\0"), ParseError);
  }

  TEST_CASE("print is canonical") {
    CHECK(print(K) == "\\\\1");
    CHECK(print(Omega) == "(\\0 0) (\\0 0)");
    CHECK(print(S) == "\\\\\\2 0 (1 0)");
    CHECK(print(ap(idx(0), ap(idx(1), idx(2)))) == "0 (1 2)");
  }

  TEST_CASE("print and parse are inverse to size 10") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
      for (const auto& t : oracle::terms(n)) {
        const std::string s = print(t);
        REQUIRE(parse_term(s) == t);
        REQUIRE(print(parse_term(s)) == s);
      }
    }
  }

  TEST_CASE("parse errors carry the offset") {
    auto offset_of = [](const char* text) -> std::size_t {
      try {
        parse_term(text);
      } catch (const ParseError& e) {
        return e.offset();
      }
      return 999;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("(0") == 2);
    CHECK(offset_of("0)") == 1);
    CHECK(offset_of("\\x") == 1);
    CHECK(offset_of("0 1 )") == 4);
    CHECK_THROWS_AS(parse_term("99999999999999999999999"), ParseError);
  }

  TEST_CASE("size models") {
    CHECK(SizeModel::parse("natural") == SizeModel::natural());
    CHECK(SizeModel::parse("B") == SizeModel::model_b());
    CHECK(SizeModel::parse("1,1,1,0") == SizeModel::model_c());
    CHECK(SizeModel::model_b().name() == "B");
    CHECK_THROWS_AS(SizeModel::parse("1,2"), DomainError);
    CHECK_THROWS_AS(SizeModel::parse("D"), DomainError);
    CHECK(SizeModel::natural().is_finitary());
    CHECK_FALSE(SizeModel({1, 1, 0, 1}).is_finitary());
    CHECK_FALSE(SizeModel({0, 1, 1, 1}).is_finitary());
    CHECK_FALSE(SizeModel({1, 0, 1, 0}).is_finitary());
    CHECK_THROWS_AS(SizeModel({1, 0, 1, 0}).require_finitary(), DomainError);
  }

  TEST_CASE("accessors reject the wrong constructor") {
    CHECK_THROWS_AS(idx(0).body(), DomainError);
    CHECK_THROWS_AS(lam(idx(0)).lhs(), DomainError);
    CHECK_THROWS_AS(Omega.index_value(), DomainError);
  }

  TEST_CASE("enumeration examples") {
    CHECK(enumerate_terms(3).size() == 4);
    const auto closed2 = enumerate_terms(2, SizeModel::natural(), TermClass::closed());
    REQUIRE(closed2.size() == 1);
    CHECK(closed2[0] == lam(idx(0)));
    CHECK(enumerate_terms(0).empty());
  }

  TEST_CASE("enumeration order is index, abstractions, applications") {
    const auto t4 = enumerate_terms(4);
    REQUIRE(t4.size() == 9);
    CHECK(t4.front() == idx(3));
    CHECK(t4[1].is_abs());
    CHECK(t4.back().is_app());
    CHECK(print(t4[4]) == "\\0 0");
    std::vector<std::string> apps;
    for (const auto& t : t4)
      if (t.is_app()) apps.push_back(print(t));
    CHECK(apps == std::vector<std::string>{"0 1", "0 (\\0)", "1 0", "(\\0) 0"});
  }

  TEST_CASE("enumeration cardinalities to 14 and exactly once") {
    const std::vector<std::uint64_t> seq{0, 1, 2, 4, 9, 22, 57, 154, 429, 1223, 3550, 10455, 31160, 93802, 284789};
    for (std::uint64_t n = 0; n <= 14; ++n) {
      std::uint64_t seen = 0;
      for_each_term(n, SizeModel::natural(), TermClass::plain(), [&](const Term& t) {
        REQUIRE(size(t) == n);
        ++seen;
        return true;
      });
      CHECK(seen == seq[n]);
    }
    std::set<std::string> distinct;
    for (const auto& t : enumerate_terms(9)) distinct.insert(print(t));
    CHECK(distinct.size() == 1223);
  }

  TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_terms(15), UnsatisfiableError);
    EnumerationLimits tight{5};
    CHECK_THROWS_AS(enumerate_terms(6, SizeModel::natural(), TermClass::plain(), tight), UnsatisfiableError);
    CHECK(enumerate_terms(5, SizeModel::natural(), TermClass::plain(), tight).size() == 22);
    // Model B at size 13 has the same universe as natural size 14.
    std::uint64_t seen = 0;
    for_each_term(13, SizeModel::model_b(), TermClass::plain(), [&](const Term& t) {
      REQUIRE(size(t, SizeModel::model_b()) == 13);
      ++seen;
      return true;
    });
    CHECK(seen == 284789);
    CHECK_THROWS_AS(enumerate_terms(3, SizeModel({1, 0, 1, 0})), DomainError);
  }

  TEST_CASE("early stop") {
    int seen = 0;
    const bool done = for_each_term(8, SizeModel::natural(), TermClass::plain(), [&](const Term&) { return ++seen < 5; });
    CHECK_FALSE(done);
    CHECK(seen == 5);
  }

  TEST_CASE("class filters agree with the oracle predicates to size 11") {
    for (std::uint64_t n = 1; n <= 11; ++n) {
      for (const auto& t : oracle::terms(n)) {
        REQUIRE(is_normal_form(t) == !oracle::has_redex(t));
        REQUIRE(is_neutral(t) == oracle::neutral(t));
        REQUIRE(is_head_normal(t) == oracle::hnf(t));
        REQUIRE(is_neutral_head_normal(t) == oracle::nhnf(t));
        REQUIRE(max_free_index_bound(t) == oracle::open_bound(t));
      }
    }
  }

  TEST_CASE("size invariants to size 12") {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      for_each_term(n, SizeModel::natural(), TermClass::plain(), [&](const Term& t) {
        REQUIRE(size(t) >= 1);
        REQUIRE((size(t) == 1) == (t == idx(0)));
        REQUIRE(count_zeros(t) == count_applications(t) + 1);
        REQUIRE(size(t) == size(t, SizeModel::model_b()) + 1);
        return true;
      });
    }
  }

  TEST_CASE("class inclusions to size 11") {
    for (std::uint64_t n = 1; n <= 11; ++n) {
      for (const auto& t : oracle::terms(n)) {
        if (is_neutral(t)) REQUIRE(is_normal_form(t));
        if (is_normal_form(t)) REQUIRE(is_head_normal(t));
      }
    }
  }

  TEST_CASE("term class names") {
    CHECK(TermClass::parse("m-open:3") == TermClass::m_open(3));
    CHECK(TermClass::parse("closed").name() == "closed");
    CHECK(TermClass::m_open(2).name() == "m-open:2");
    CHECK_THROWS_AS(TermClass::parse("m-open:"), DomainError);
    CHECK_THROWS_AS(TermClass::parse("open"), DomainError);
  }

  TEST_CASE("hash and ordering") {
    CHECK(std::hash<Term>{}(parse_term("\\0 0")) == std::hash<Term>{}(omega_half));
    CHECK(idx(0) < lam(idx(0)));
    CHECK(K != S);
  }
}
