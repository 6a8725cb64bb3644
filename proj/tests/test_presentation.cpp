#include <catch_amalgamated.hpp>

#include "tknot/alexander.hpp"
#include "tknot/homology.hpp"
#include "tknot/laurent.hpp"
#include "tknot/presentation.hpp"
#include "tknot/tietze.hpp"
#include "tknot/wirtinger.hpp"

using namespace tknot;

namespace {

Word w(std::string_view s) { return parse_word(s); }

const Presentation& trefoil() {
  static const Presentation p({"a", "b"}, {w("b a b^-2 a")});
  return p;
}

// 2x2 integer determinant, written out.
std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d - b * c; }

// Polynomial long division on plain coefficient vectors (lowest degree first).
std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  std::vector<std::int64_t> r(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1] / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  for (auto c : num) REQUIRE(c == 0);
  return q;
}
std::vector<std::int64_t> t_pow_minus_1(std::size_t n) {
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = -1;
  c[n] = 1;
  return c;
}
// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))
LaurentPolynomial torus_knot_alexander(std::size_t p, std::size_t q) {
  return LaurentPolynomial::from_coefficients(
      poly_div_exact(poly_mul(t_pow_minus_1(p * q), t_pow_minus_1(1)), poly_mul(t_pow_minus_1(p), t_pow_minus_1(q))));
}

}  // namespace

TEST_CASE("presentations reject undeclared or repeated generators", "[presentation][error]") {
  CHECK_THROWS_AS(Presentation({"a"}, {w("a b")}), Error);
  CHECK_THROWS_AS(Presentation({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(add_relators(trefoil(), {w("c")}), Error);
  CHECK(add_relators(trefoil(), {}) == trefoil());
}

TEST_CASE("tietze_eliminate on a two-generator example", "[presentation]") {
  const Presentation p({"x", "y"}, {w("x y^-1")});
  const auto q = tietze_eliminate(p, "x", w("y"));
  CHECK(q.generators() == std::vector<Generator>{"y"});
  CHECK(q.relators().empty());
}

TEST_CASE("tietze_eliminate errors", "[presentation][error]") {
  const Presentation p({"x", "y"}, {w("x y^-1")});
  CHECK_THROWS_AS(tietze_eliminate(p, "z", w("y")), Error);
  CHECK_THROWS_AS(tietze_eliminate(p, "x", w("x y")), Error);
  CHECK_THROWS_AS(tietze_eliminate(p, "x", w("y^2")), Error);
}

TEST_CASE("tietze_eliminate accepts the defining relator up to conjugacy and inversion", "[presentation]") {
  const Presentation p({"x", "y", "z"}, {w("y^-1 x^-1 z y"), w("x z x^-1 y")});
  // first relator is conjugate to (x z^-1)^-1 ... so x := z
  const auto q = tietze_eliminate(p, "x", w("z"));
  CHECK(q.relators() == std::vector<Word>{w("z y")});
}

TEST_CASE("eliminating delta1 from the Wirtinger presentation of L", "[presentation]") {
  const auto wp = wirtinger_presentation(builtin_link_L());
  const auto q = tietze_eliminate(wp, "delta1", w("alpha^-1 xi alpha"));
  CHECK(q.generators().size() == 11);
  CHECK(q.relators().size() == 11);
  CHECK(homology(q) == homology(wp));
}

TEST_CASE("rewrite_relator needs a justifying relator", "[presentation][error]") {
  const Presentation p({"x", "y", "z"}, {w("x z^-1"), w("x y x^-1 y^-1")});
  const auto q = rewrite_relator(p, 1, "x", w("z"));
  CHECK(q.relators()[1] == w("z y z^-1 y^-1"));
  CHECK_THROWS_AS(rewrite_relator(p, 1, "x", w("y")), Error);
  CHECK_THROWS_AS(rewrite_relator(p, 0, "x", w("z")), Error);  // cannot justify itself
  CHECK_THROWS_AS(rewrite_relator(p, 7, "x", w("z")), Error);
}

TEST_CASE("relator moves and redundancy", "[presentation]") {
  const Presentation p({"a", "b"}, {w("a b"), w("b a")});
  CHECK(conjugate_relator(p, 0, w("a")).relators()[0] == w("a^2 b a^-1"));
  CHECK(invert_relator(p, 0).relators()[0] == w("b^-1 a^-1"));
  CHECK(multiply_relator(p, 0, 1, -1, w("b")).relators()[0] == w("a b^2 a^-1 b^-2"));
  CHECK(remove_redundant_relator(p, 1).relators() == std::vector<Word>{w("a b")});
  const Presentation r({"a", "b"}, {w("a b"), w("a^2")});
  CHECK_THROWS_AS(remove_redundant_relator(r, 1), Error);
  CHECK(drop_trivial_relators(Presentation({"a"}, {Word{}, w("a^3")})).relators().size() == 1);
  CHECK_THROWS_AS(add_generator(p, "a", w("b")), Error);
}

TEST_CASE("Smith normal form of small matrices", "[homology]") {
  const auto s = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
  CHECK(s.invariant_factors == std::vector<std::int64_t>{2, 6, 12});
  CHECK(s.rank == 3);
  const auto z = smith_normal_form({{0, 0}, {0, 0}}, 2);
  CHECK(z.rank == 0);
  const auto one = smith_normal_form({{2, -1}}, 2);
  CHECK(one.invariant_factors == std::vector<std::int64_t>{1});
}

TEST_CASE("homology of knot and surgery presentations", "[homology]") {
  CHECK(homology(trefoil()).is_integers());
  CHECK(homology(Presentation({"a"}, {})).free_rank == 1);
  CHECK(homology(Presentation({"a"}, {w("a^5")})).torsion_orders == std::vector<std::int64_t>{5});

  // a^5 (a^-7 b^3 a): exponent rows (2,-1) and (-1,3)
  const auto surgered = add_relators(trefoil(), {w("a^5 a^-7 b^3 a")});
  const auto h = homology(surgered);
  CHECK(h.free_rank == 0);
  CHECK(h.order() == std::abs(det2(2, -1, -1, 3)));
  CHECK(h.torsion_orders == std::vector<std::int64_t>{5});
}

TEST_CASE("class_in_h1 in the trefoil group", "[homology]") {
  CHECK(class_in_h1(trefoil(), w("a^-7 b^3 a")).is_zero());
  CHECK(integer_class(trefoil(), w("a")) == 1);
  CHECK(integer_class(trefoil(), w("b")) == 2);
  const Presentation u_minus_1({"a", "b"}, {w("b a b^-1 a b^-1")});
  CHECK(integer_class(u_minus_1, w("a^-5 b a")) == -2);
  CHECK_THROWS_AS(class_in_h1(trefoil(), w("c")), Error);
  CHECK_THROWS_AS(integer_class(Presentation({"a"}, {w("a^2")}), w("a")), Error);
}

TEST_CASE("class_in_h1 reports torsion residues", "[homology]") {
  const Presentation p({"a", "b"}, {w("a^6"), w("b")});
  const auto c = class_in_h1(p, w("a^8"));
  REQUIRE(c.torsion.size() == 1);
  CHECK(c.torsion.front() == 2);
  CHECK(c.free.empty());
}

TEST_CASE("Laurent polynomial arithmetic", "[laurent]") {
  const auto t = LaurentPolynomial::monomial(1, 1);
  const auto one = LaurentPolynomial::constant(1);
  const auto p = t * t - t + one;
  CHECK(p.to_string() == "t^2 - t + 1");
  CHECK((p - p).is_zero());
  CHECK(exact_divide(p * (t - one), t - one) == p);
  CHECK_THROWS_AS(exact_divide(p, t - one), Error);
  CHECK_THROWS_AS(exact_divide(p, LaurentPolynomial{}), Error);
  CHECK((-p.shifted(-3)).normalized() == p);
  CHECK(LaurentPolynomial::monomial(-2, -1).to_string() == "-2t^-1");
}

TEST_CASE("Fox derivatives of the trefoil relator", "[alexander]") {
  // b a b^-2 a with a, b -> t, t^2:
  // d/da = b + b a b^-2 = t^2 + t^-1,   d/db = 1 + b a (-b^-1 - b^-2) = 1 - t - t^-1
  const AbelianWeights wt{{"a", 1}, {"b", 2}};
  CHECK(fox_derivative(w("b a b^-2 a"), "a", wt) == LaurentPolynomial::from_coefficients({1, 0, 0, 1}, -1));
  CHECK(fox_derivative(w("b a b^-2 a"), "b", wt) == LaurentPolynomial::from_coefficients({-1, 1, -1}, -1));
  CHECK(fox_derivative(Word{}, "a", wt).is_zero());
  CHECK_THROWS_AS(fox_derivative(w("c"), "a", wt), Error);
}

TEST_CASE("Alexander polynomials", "[alexander]") {
  CHECK(alexander_polynomial(trefoil()).to_string() == "t^2 - t + 1");
  CHECK(alexander_polynomial(trefoil()) == torus_knot_alexander(2, 3));
  CHECK(alexander_polynomial(Presentation({"a"}, {})) == LaurentPolynomial::constant(1));
  // T(3,5) as <x, y | x^3 = y^5> is not a meridional presentation but the
  // minor still gives Delta * (t^e - 1)/(t - 1), which is divided out
  const Presentation t35({"x", "y"}, {w("x^3 y^-5")});
  CHECK(alexander_polynomial(t35) == torus_knot_alexander(3, 5));
  CHECK_THROWS_AS(alexander_polynomial(Presentation({"a", "b"}, {})), Error);
  CHECK_THROWS_AS(alexander_polynomial(Presentation({"a", "b"}, {w("a^2")})), Error);
}

TEST_CASE("determinant over Z[t, t^-1]", "[alexander]") {
  const auto t = LaurentPolynomial::monomial(1, 1);
  const auto one = LaurentPolynomial::constant(1);
  // [[t, 1], [1, t]] -> t^2 - 1 ; a zero pivot forces a swap
  CHECK(determinant({{t, one}, {one, t}}) == t * t - one);
  CHECK(determinant({{LaurentPolynomial{}, one}, {one, t}}) == -one);
  CHECK(determinant({}) == one);
}

TEST_CASE("TrackedPresentation carries words through moves", "[tietze]") {
  TrackedPresentation tp(Presentation({"x", "y"}, {w("x y^-2")}), {{"m", w("x y")}});
  tp.eliminate("x", w("y^2"));
  CHECK(tp.tracked("m") == w("y^3"));
  CHECK(tp.presentation().relators().empty());
  CHECK(tp.steps().size() == 1);
  CHECK_THROWS_AS(tp.tracked("nope"), Error);
  CHECK_THROWS_AS(tp.index_of(w("y")), Error);
}
