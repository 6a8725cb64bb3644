#include <catch_amalgamated.hpp>

#include <limits>

#include "tknot/word.hpp"

using namespace tknot;

namespace {
Word w(std::string_view s) { return parse_word(s); }
}  // namespace

TEST_CASE("reduce cancels and merges adjacent runs", "[word]") {
  const std::vector<Run> letters{{"a", 1}, {"b", 1}, {"b", -1}, {"a", 1}};
  CHECK(reduce(letters) == w("a^2"));
  CHECK(reduce(std::vector<Run>{}).is_identity());
  CHECK(reduce(std::vector<Run>{{"a", 0}, {"b", 0}}).is_identity());
}

TEST_CASE("reduce collapses h^-2 h^-1 h^2 h", "[word]") {
  const std::vector<Run> letters{{"h", -2}, {"h", -1}, {"h", 2}, {"h", 1}};
  CHECK(reduce(letters).is_identity());
}

TEST_CASE("reduce is idempotent", "[word]") {
  const Word x = w("a b^2 a^-1 c");
  CHECK(reduce(x.runs()) == x);
}

TEST_CASE("multiply, invert and conjugate", "[word]") {
  CHECK((w("b a") * w("a^-1 b^-1")).is_identity());
  CHECK(conjugate(w("a"), w("b a")) == w("b a b^-1"));
  CHECK(invert(w("a^-7 b^3 a")) == w("a^-1 b^-3 a^7"));
  CHECK(invert(Word{}).is_identity());
  CHECK(multiply(Word{}, w("x")) == w("x"));
}

TEST_CASE("power uses repeated squaring and handles signs", "[word]") {
  CHECK(power(w("b a"), 3) == w("b a b a b a"));
  CHECK(power(w("b a"), -2) == w("a^-1 b^-1 a^-1 b^-1"));
  CHECK(power(w("b a"), 0).is_identity());
  CHECK(power(w("a^3"), 4) == w("a^12"));
}

TEST_CASE("substitute applies a homomorphism", "[word]") {
  const std::int64_t v = 0;
  const SubstitutionMap m{{"xi", Word::generator("h", v + 1)},
                          {"alpha", Word::generator("h", v + 1) * w("g^-1")},
                          {"gamma", w("g^-1") * Word::generator("h", v + 1)}};
  CHECK(substitute(w("xi^-1 alpha xi gamma^-1"), m).is_identity());
  CHECK(substitute(w("h"), {{"h", w("b a")}}) == w("b a"));
  const Word g_image = power(w("b a"), 2) * w("b");
  CHECK(substitute(w("g"), {{"g", g_image}}) == w("b a b a b"));
  CHECK(to_text(substitute(w("g"), {{"g", g_image}})) == "b a b a b");
}

TEST_CASE("substitute names the unmapped generator", "[word][error]") {
  try {
    (void)substitute(w("a b"), {{"a", w("x")}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.module() == "word_core");
    CHECK(std::string(e.what()).find("'b'") != std::string::npos);
  }
}

TEST_CASE("rewrite leaves other generators alone", "[word]") {
  CHECK(rewrite(w("a b a^-1"), "b", w("c d")) == w("a c d a^-1"));
}

TEST_CASE("compose substitutes the first map's images through the second", "[word]") {
  const SubstitutionMap first{{"x", w("a b")}};
  const SubstitutionMap second{{"a", w("c")}, {"b", w("c^-1 d")}};
  CHECK(compose(first, second).at("x") == w("d"));
}

TEST_CASE("cyclic_reduce splits off the conjugator", "[word]") {
  const Word x = w("a b c b^-1 a^-1");
  const auto cr = cyclic_reduce(x);
  CHECK(cr.core == w("c"));
  CHECK(conjugate(cr.core, cr.conjugator) == x);
  CHECK(is_cyclically_reduced(cr.core));

  const auto partial = cyclic_reduce(w("a^2 b a^-1"));
  CHECK(partial.core == w("b a"));
  CHECK(partial.conjugator == w("a^2"));
  CHECK(conjugate(partial.core, partial.conjugator) == w("a^2 b a^-1"));
  CHECK(cyclic_reduce(Word{}).core.is_identity());
}

TEST_CASE("conjugacy in the free group", "[word]") {
  CHECK(is_conjugate(w("a b^2 c"), conjugate(w("a b^2 c"), w("c^3 a"))));
  CHECK_FALSE(is_conjugate(w("a"), w("b")));
  CHECK_FALSE(is_conjugate(w("a b"), w("a b^-1")));
  CHECK(is_conjugate(w("a b c"), w("c a b")));
  CHECK(is_conjugate(Word{}, Word{}));
  CHECK(is_conjugate_up_to_inverse(w("a b"), w("a^-1 b^-1")));
  CHECK_FALSE(is_conjugate(w("a b"), w("a^-1 b^-1")));
}

TEST_CASE("conjugator_between produces a witness", "[word]") {
  const Word x = w("a b^-1 c");
  const Word y = conjugate(x, w("b c^2"));
  auto [ok, c] = conjugator_between(x, y);
  REQUIRE(ok);
  CHECK(conjugate(x, c) == y);
  CHECK_FALSE(conjugator_between(w("a"), w("a^2")).first);
}

TEST_CASE("exponent sums and positivity", "[word]") {
  const Word r = w("b a b^-2 a");
  CHECK(exponent_sum(r, "a") == 2);
  CHECK(exponent_sum(r, "b") == -1);
  CHECK(exponent_sum(r, "c") == 0);
  CHECK(is_positive_excluding(w("b^3"), {"a", "b"}));
  CHECK_FALSE(is_positive_excluding(w("b a^-1"), {"a", "b"}));
  CHECK(is_positive_excluding(w("b a^-1"), {"b"}));
  // ((ba)^0 b^-1)^2 (ba)^0 b at u = -2, v = 0
  CHECK_FALSE(is_positive_excluding(w("b^-1 b^-1 b"), {"a", "b"}));
}

TEST_CASE("rotate_letters rotates cyclic words", "[word]") {
  CHECK(rotate_letters(w("a^2 b"), 1) == w("a b a"));
  CHECK(rotate_letters(w("a^2 b"), 3) == w("a^2 b"));
  CHECK(rotate_letters(w("a^2 b"), -1) == w("b a^2"));
}

TEST_CASE("text rendering round-trips", "[word]") {
  CHECK(to_text(w("b a b^-2 a")) == "b a b^-2 a");
  CHECK(to_text(Word{}) == "1");
  CHECK(parse_word("1").is_identity());
  CHECK(parse_word("delta1^-3 psi") == Word{{"delta1", -3}, {"psi", 1}});
  CHECK_THROWS_AS(parse_word("a^x"), Error);
  CHECK_THROWS_AS(parse_word("^2"), Error);
}

TEST_CASE("generator names are case-sensitive and nonempty", "[word]") {
  CHECK(Generator("a") != Generator("A"));
  CHECK_THROWS_AS(Generator(""), Error);
}

TEST_CASE("exponent overflow is reported, never wrapped", "[word][error]") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  const Word x = Word::generator("a", big);
  CHECK_THROWS_AS(x * w("a"), OverflowError);
  CHECK_THROWS_AS(power(w("a^2"), big), OverflowError);
  CHECK_THROWS_AS(invert(Word::generator("a", std::numeric_limits<std::int64_t>::min())), OverflowError);
}
