#include <doctest.h>

#include <chrono>
#include <set>

#include "../oracle.hpp"
#include "debruijn/counting.hpp"
#include "debruijn/trees.hpp"

using namespace debruijn;

namespace {

// Edge rules written out per parent/child pair.
bool valid_bw(const BwTree& t) {
  if (t.color() == Color::Black) {
    if (t.right()) return false;
  } else {
    if (t.left() && t.left()->color() != Color::White) return false;
    if (t.right() && t.right()->color() != Color::Black) return false;
  }
  return (!t.left() || valid_bw(*t.left())) && (!t.right() || valid_bw(*t.right()));
}

// A left child with no left child of its own but with a right child.
bool zigzag(const BzTree& t, bool is_left_child = false) {
  if (is_left_child && !t.left() && t.right()) return true;
  return (t.left() && zigzag(*t.left(), true)) || (t.right() && zigzag(*t.right(), false));
}

}  // namespace

TEST_SUITE("trees") {
  TEST_CASE("black-white validity") {
    CHECK(is_valid_bw(BwTree::black()));
    CHECK_FALSE(is_valid_bw(BwTree(Color::Black, std::nullopt, BwTree::black())));
    CHECK_FALSE(is_valid_bw(BwTree::white(BwTree::black())));
    CHECK_FALSE(is_valid_bw(BwTree::white(std::nullopt, BwTree::white())));
    CHECK(is_valid_bw(BwTree::white(BwTree::white(), BwTree::black())));
    CHECK(is_valid_bw(BwTree::black(BwTree::white())));
    CHECK(is_valid_bw(BwTree::black(BwTree::black())));
  }

  TEST_CASE("zigzag freeness") {
    CHECK(is_zigzag_free(BzTree::leaf()));
    const BzTree fig = parse_bz("N(N(_,N(_,_)),_)");
    CHECK_FALSE(is_zigzag_free(fig));
    CHECK(has_zigzag_pattern(fig));
    BzTree comb = BzTree::leaf();
    for (int i = 0; i < 6; ++i) comb = BzTree(comb, std::nullopt);
    CHECK(is_zigzag_free(comb));
    BzTree right = BzTree::leaf();
    for (int i = 0; i < 6; ++i) right = BzTree(std::nullopt, right);
    CHECK(is_zigzag_free(right));
    CHECK(is_zigzag_free(parse_bz("N(N(N(_,_),N(_,_)),_)")));
  }

  TEST_CASE("enumeration examples") {
    CHECK(enumerate_bw(2, Color::Black).size() == 2);
    CHECK(enumerate_bz(3).size() == 4);
    CHECK(enumerate_bz(4).size() == 9);
    CHECK(enumerate_motzkin(5).size() == 9);
    CHECK(enumerate_bw(0).empty());
    CHECK(enumerate_bw(1, Color::White).size() == 1);
  }

  TEST_CASE("family sizes match the counts to 12") {
    const auto l = oracle::plain(12);
    const auto [black, white] = black_white_counts(12);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      std::uint64_t b = 0, z = 0, m = 0;
      for_each_bw(n, Color::Black, [&](const BwTree& t) {
        REQUIRE(t.size() == n);
        REQUIRE(t.color() == Color::Black);
        REQUIRE(valid_bw(t));
        ++b;
        return true;
      });
      for_each_bz(n, [&](const BzTree& t) {
        REQUIRE(t.size() == n);
        REQUIRE(!zigzag(t));
        ++z;
        return true;
      });
      for_each_motzkin(n, [&](const MotzkinTree& t) {
        REQUIRE(t.size() == n);
        ++m;
        return true;
      });
      CHECK(b == l[n]);
      CHECK(black[n] == l[n]);
      CHECK(z == l[n]);
      CHECK(m == oracle::motzkin(n - 1));
      CHECK(zigzag_free_counts(12)[n] == l[n]);
    }
  }

  TEST_CASE("white-rooted trees match the white count") {
    const auto [black, white] = black_white_counts(10);
    for (std::uint64_t n = 1; n <= 10; ++n) CHECK(enumerate_bw(n, Color::White).size() == white[n]);
  }

  TEST_CASE("filtering unconstrained coloured trees reproduces generation to 10") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
      std::set<std::string> generated;
      for_each_bw(n, Color::Black, [&](const BwTree& t) {
        generated.insert(print(t));
        return true;
      });
      std::uint64_t filtered = 0, total = 0;
      for_each_colored_binary(n, [&](const BwTree& t) {
        ++total;
        const bool ok = t.color() == Color::Black && valid_bw(t);
        REQUIRE(ok == (t.color() == Color::Black && is_valid_bw(t)));
        if (ok) {
          ++filtered;
          REQUIRE(generated.count(print(t)) == 1);
        }
        return true;
      });
      CHECK(filtered == generated.size());
      CHECK(total == (oracle::binomial(2 * n, n) / (n + 1)) << n);
    }
  }

  TEST_CASE("filtering unconstrained binary trees reproduces generation to 10") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
      std::set<std::string> generated;
      for_each_bz(n, [&](const BzTree& t) {
        generated.insert(print(t));
        return true;
      });
      std::uint64_t filtered = 0;
      for_each_binary(n, [&](const BzTree& t) {
        REQUIRE(is_zigzag_free(t) == !zigzag(t));
        REQUIRE(has_zigzag_pattern(t) == zigzag(t));
        if (is_zigzag_free(t)) {
          ++filtered;
          REQUIRE(generated.count(print(t)) == 1);
        }
        return true;
      });
      CHECK(filtered == generated.size());
    }
  }

  TEST_CASE("text round trips") {
    for (std::uint64_t n = 1; n <= 7; ++n) {
      for (const auto& t : enumerate_bw(n)) REQUIRE(parse_bw(print(t)) == t);
      for (const auto& t : enumerate_bw(n, Color::White)) REQUIRE(parse_bw(print(t)) == t);
      for (const auto& t : enumerate_bz(n)) REQUIRE(parse_bz(print(t)) == t);
      for (const auto& t : enumerate_motzkin(n)) REQUIRE(parse_motzkin(print(t)) == t);
    }
    CHECK(print(MotzkinTree::binary(MotzkinTree::leaf(), MotzkinTree::unary(MotzkinTree::leaf()))) == "B(L,U(L))");
    CHECK(print(BwTree::black(BwTree::white())) == "B(W(_,_),_)");
    CHECK(print(BzTree(BzTree::leaf(), std::nullopt)) == "N(N(_,_),_)");
  }

  TEST_CASE("malformed tree text") {
    CHECK_THROWS_AS(parse_bw("B(_)"), ParseError);
    CHECK_THROWS_AS(parse_bw("X(_,_)"), ParseError);
    CHECK_THROWS_AS(parse_bz("N(_,_"), ParseError);
    CHECK_THROWS_AS(parse_bz("N(_,_) N(_,_)"), ParseError);
    CHECK_THROWS_AS(parse_motzkin("U()"), ParseError);
    CHECK_THROWS_AS(parse_motzkin("B(L)"), ParseError);
    CHECK_THROWS_AS(parse_bw("_"), ParseError);
  }

  TEST_CASE("Motzkin accessors") {
    const MotzkinTree u = MotzkinTree::unary(MotzkinTree::leaf());
    CHECK(u.child() == MotzkinTree::leaf());
    CHECK_THROWS_AS(u.left(), DomainError);
    CHECK_THROWS_AS(MotzkinTree::leaf().child(), DomainError);
  }

  TEST_CASE("size cap") {
    CHECK_THROWS_AS(enumerate_bz(15), UnsatisfiableError);
    CHECK_THROWS_AS(enumerate_motzkin(6, TreeLimits{5}), UnsatisfiableError);
  }
}
