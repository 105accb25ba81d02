#include "doctest.h"

#include <random>

#include "cyclecount/error.hpp"
#include "cyclecount/generators.hpp"
#include "cyclecount/words.hpp"
#include "support.hpp"

using namespace cyclecount;
using testing::W;

TEST_CASE("parse and print") {
  CHECK(W("abAB").size() == 4);
  CHECK(W("abAB")[2] == Letter{1, -1});
  CHECK(W("abAB").to_string() == "abAB");
  CHECK(W("a. b  A").to_string() == "abA");
  CHECK(W("").empty());

  const Word big = W("a3A27b");
  REQUIRE(big.size() == 3);
  CHECK(big[0] == Letter{3, 1});
  CHECK(big[1] == Letter{27, -1});
  CHECK(big[2] == Letter{2, 1});
  CHECK(big.max_generator() == 27);
  CHECK(Word::parse(big.to_string()) == big);
  CHECK(W("z").max_generator() == 26);

  CHECK_THROWS_AS(W("a0"), InvalidInput);
  CHECK_THROWS_AS(W("ab1x?"), InvalidInput);
  CHECK_THROWS_AS(W("a-"), InvalidInput);
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(W("abB")) == W("a"));
  CHECK(free_reduce(W("aA")).empty());
  CHECK(free_reduce(W("abAB")) == W("abAB"));
  CHECK(free_reduce(W("abcCBA")).empty());
  CHECK(free_reduce(W("aBbbA")) == W("abA"));
  CHECK(is_reduced(W("abAB")));
  CHECK_FALSE(is_reduced(W("abB")));
}

TEST_CASE("cyclic_reduce") {
  CyclicReduction c = cyclic_reduce(W("baB"));
  CHECK(c.core == W("a"));
  CHECK(c.conjugator == W("b"));

  c = cyclic_reduce(W("ab"));
  CHECK(c.core == W("ab"));
  CHECK(c.conjugator.empty());

  c = cyclic_reduce(W(""));
  CHECK(c.core.empty());
  CHECK(c.conjugator.empty());

  c = cyclic_reduce(W("bcaCB"));
  CHECK(c.core == W("a"));
  CHECK(c.conjugator == W("bc"));

  CHECK(is_cyclically_reduced(W("ab")));
  CHECK_FALSE(is_cyclically_reduced(W("abA")));
  CHECK(is_cyclically_reduced(W("")));
}

TEST_CASE("primitive_root") {
  PrimitiveRoot p = primitive_root(W("abab"));
  CHECK(p.root == W("ab"));
  CHECK(p.exponent == 2);

  p = primitive_root(W("aba"));
  CHECK(p.root == W("aba"));
  CHECK(p.exponent == testing::brute_exponent(W("aba")));
  CHECK(p.exponent == 1);

  p = primitive_root(W("aabaabaab"));
  CHECK(p.root == W("aab"));
  CHECK(p.exponent == 3);

  CHECK(primitive_root(W("aaaa")).root == W("a"));
  CHECK(is_simple(W("a")));
  CHECK_FALSE(is_simple(W("bb")));

  CHECK_THROWS_AS(primitive_root(W("")), PreconditionViolation);
  CHECK_THROWS_AS(primitive_root(W("abA")), PreconditionViolation);
}

TEST_CASE("invert") {
  CHECK(invert(W("ab")) == W("BA"));
  CHECK(invert(W("")).empty());
  CHECK(invert(W("aBc")) == W("CbA"));
}

TEST_CASE("word algebra helpers") {
  CHECK(W("ab") * W("c") == W("abc"));
  CHECK(W("ab").pow(3) == W("ababab"));
  CHECK(W("ab").pow(0).empty());
  CHECK(W("abc").rotate(1) == W("bca"));
  CHECK(W("abc").rotate(3) == W("abc"));
  CHECK(W("").rotate(2).empty());
}

TEST_CASE("word properties on random input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    // Unreduced random sequences.
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    std::vector<Letter> ls;
    for (std::size_t i = 0; i < len; ++i) {
      ls.push_back(Letter{static_cast<std::uint32_t>(std::uniform_int_distribution<int>(1, 3)(rng)),
                          std::bernoulli_distribution(0.5)(rng) ? 1 : -1});
    }
    const Word w(ls);
    const Word r = free_reduce(w);
    CHECK(r == testing::slow_reduce(w));
    CHECK(free_reduce(r) == r);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(w * invert(w)).empty());
    CHECK(invert(invert(w)) == w);

    const CyclicReduction c = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(c.core));
    CHECK(free_reduce(c.conjugator * c.core * invert(c.conjugator)) == r);

    if (!c.core.empty()) {
      const PrimitiveRoot p = primitive_root(c.core);
      CHECK(p.root.pow(p.exponent) == c.core);
      CHECK(primitive_root(p.root).exponent == 1);
      CHECK(p.exponent == testing::brute_exponent(c.core));
      CHECK(is_simple(c.core) == (p.exponent == 1));
      // The cyclic core of a rotation is a rotation of the core.
      for (std::size_t k = 0; k < r.size(); ++k) {
        const Word rc = cyclic_reduce(r.rotate(k)).core;
        bool is_rotation = false;
        for (std::size_t j = 0; j < rc.size(); ++j) is_rotation = is_rotation || rc.rotate(j) == c.core;
        CHECK(is_rotation);
      }
    }
  }
}

TEST_CASE("random_simple_word") {
  TrialConfig cfg;
  cfg.alphabet = 2;
  cfg.max_word_length = 10;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Word w = random_simple_word(cfg, seed);
    CHECK(!w.empty());
    CHECK(w.size() <= 10);
    CHECK(is_cyclically_reduced(w));
    CHECK(is_simple(w));
    CHECK(w.max_generator() <= 2);
    CHECK(random_simple_word(cfg, seed) == w);
  }
  Rng rng(3);
  CHECK(random_simple_word(1, 3, rng).size() == 1);
  CHECK_THROWS_AS(random_simple_word(0, 3, rng), PreconditionViolation);
  CHECK_THROWS_AS(random_simple_word(2, 1, rng), PreconditionViolation);
}
