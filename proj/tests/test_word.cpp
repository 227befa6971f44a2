#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "quadembed/error.hpp"
#include "quadembed/word.hpp"

using namespace quadembed;

namespace {
  Word w(char const* text) {
    return parse_word(text);
  }
}  // namespace

TEST_CASE("letter order and inverses") {
  CHECK(Letter::a(1) < Letter::a(1, true));
  CHECK(Letter::a(1, true) < Letter::a(2));
  CHECK(Letter::a(9) < Letter::x(1));
  CHECK(Letter::x(1, true) < Letter::x(2));
  CHECK(Letter::x(100) < Letter::h(1));
  CHECK(Letter::h(1, true) < Letter::h(2));
  CHECK(Letter::x(3).inverse() == Letter::x(3, true));
  CHECK(Letter::x(3).inverse().inverse() == Letter::x(3));
  CHECK_THROWS_AS(Letter::make(Letter::Sort::H, 3), InputError);
  CHECK_THROWS_AS(Letter::make(Letter::Sort::A, 0), InputError);
}

TEST_CASE("word grammar") {
  CHECK(to_string(w("a1.x3^-1.h2")) == "a1.x3^-1.h2");
  CHECK(w("e").empty());
  CHECK(to_string(Word{}) == "e");
  CHECK(w("a12") == Word{Letter::a(12)});
  CHECK(w("h1^-1") == Word{Letter::h(1, true)});
  for (char const* bad : {"", "a", "a0", "a01", "h3", "a1..a2", "a1.", ".a1", "b1", "a1^1", "a1^-2", "x1^-1^-1",
                          "e.a1", "a1 .a2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_word(bad), ParseError);
  }
  try {
    parse_word("a1.a2.q1");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("reduce examples") {
  CHECK(reduce(w("a1.a1^-1")).empty());
  CHECK(reduce(w("a1.a2.a2^-1.a1")) == w("a1.a1"));
  CHECK(reduce(w("x3.h1.h1^-1.x3^-1.a2")) == w("a2"));
}

TEST_CASE("cyclic_reduce examples") {
  auto r = cyclic_reduce(w("a1.a2.a1^-1"));
  CHECK(r.core == w("a2"));
  CHECK(r.conjugator == w("a1"));
  r = cyclic_reduce(w("a2"));
  CHECK(r.core == w("a2"));
  CHECK(r.conjugator.empty());
  r = cyclic_reduce(w("a1^-1.a2.a2.a1"));
  CHECK(r.core == w("a2.a2"));
  CHECK(r.conjugator == w("a1^-1"));
}

TEST_CASE("invert and concat examples") {
  CHECK(invert(w("a1.a2^-1")) == w("a2.a1^-1"));
  CHECK(concat(Word{}, w("a1.x2")) == w("a1.x2"));
  CHECK(concat(w("a1"), w("a1^-1")) == w("a1.a1^-1"));
  CHECK(reduce(concat(w("a1.x2.h1"), invert(w("a1.x2.h1")))).empty());
}

TEST_CASE("common_subword_occurrences examples") {
  auto occ = common_subword_occurrences(w("h1.h2.h2.h1"), w("h2.h2.h1"), 3);
  REQUIRE(occ.size() == 1);
  CHECK(occ[0] == SubwordOccurrence{1, 0, 3});
  CHECK(common_subword_occurrences(w("a1"), w("a2"), 1).empty());
  occ = common_subword_occurrences(w("h1.h2"), w("h1.h2"), 2);
  REQUIRE(occ.size() == 1);
  CHECK(occ[0] == SubwordOccurrence{0, 0, 2});
}

TEST_CASE("common_subword_occurrences agrees with an exhaustive scan") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    // Few letters and long runs exercise the run-skipping path.
    auto make = [&](std::size_t len) {
      std::vector<Letter> v;
      while (v.size() < len) {
        Letter l     = rng() % 3 == 0 ? Letter::h(1) : Letter::h(2);
        auto   run   = 1 + rng() % 5;
        for (std::size_t k = 0; k < run && v.size() < len; ++k) {
          v.push_back(l);
        }
      }
      return Word(v);
    };
    Word              u       = make(1 + rng() % 30);
    Word              v       = make(1 + rng() % 30);
    std::size_t const min_len = 1 + rng() % 6;
    std::vector<SubwordOccurrence> expected;
    for (std::size_t p = 0; p < u.size(); ++p) {
      for (std::size_t q = 0; q < v.size(); ++q) {
        if (p > 0 && q > 0 && u[p - 1] == v[q - 1]) {
          continue;  // not left-maximal
        }
        std::size_t len = 0;
        while (p + len < u.size() && q + len < v.size() && u[p + len] == v[q + len]) {
          ++len;
        }
        if (len >= min_len) {
          expected.push_back({p, q, len});
        }
      }
    }
    std::sort(expected.begin(), expected.end(), [](auto const& a, auto const& b) {
      return std::tie(a.pos_u, a.pos_v) < std::tie(b.pos_u, b.pos_v);
    });
    auto got = common_subword_occurrences(u, v, min_len);
    std::sort(got.begin(), got.end(), [](auto const& a, auto const& b) {
      return std::tie(a.pos_u, a.pos_v) < std::tie(b.pos_u, b.pos_v);
    });
    CAPTURE(to_string(u));
    CAPTURE(to_string(v));
    CHECK(got == expected);
  }
}

TEST_CASE("find_subword and cyclic permutations") {
  CHECK(find_subword(w("a1.a2.a1.a2.a3"), w("a2.a3")) == 3);
  CHECK(find_subword(w("a1.a2"), w("a3")) == npos);
  CHECK(find_subword(w("a1"), Word{}) == 0);
  CHECK(is_cyclic_permutation(w("a1.a2.a3"), w("a3.a1.a2")));
  CHECK_FALSE(is_cyclic_permutation(w("a1.a2.a3"), w("a2.a1.a3")));
  CHECK_FALSE(is_cyclic_permutation(w("a1.a2"), w("a1.a2.a1")));
  CHECK(is_cyclic_permutation(Word{}, Word{}));
  CHECK(rotate(w("a1.a2.a3"), 1) == w("a2.a3.a1"));
}

TEST_CASE("reduction properties on random words") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    Word u = fixtures::random_word(rng, 2, 2, rng() % 20);
    Word v = fixtures::random_word(rng, 2, 2, rng() % 20);
    Word r = reduce(u);
    CHECK(r == fixtures::naive_reduce(u));
    CHECK(r.is_reduced());
    CHECK(reduce(r) == r);
    Word uv = reduce(concat(u, v));
    CHECK(uv.size() <= u.size() + v.size());
    CHECK(uv.size() % 2 == (u.size() + v.size()) % 2);
    CHECK(reduce(concat(u, invert(u))).empty());

    auto c = cyclic_reduce(u);
    CHECK((c.core.empty() || c.core.is_cyclically_reduced()));
    CHECK(reduce(concat(concat(c.conjugator, c.core), invert(c.conjugator))) == r);

    if (!c.core.empty()) {
      Word rot = rotate(c.core, rng() % c.core.size());
      CHECK(cyclic_reduce(rot).core.size() == c.core.size());
    }
    CHECK(parse_word(to_string(u)) == u);
  }
}
