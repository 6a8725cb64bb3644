#include <catch_amalgamated.hpp>

#include "tknot/alexander.hpp"
#include "tknot/homology.hpp"
#include "tknot/wirtinger.hpp"

using namespace tknot;

namespace {

Word w(std::string_view s) { return parse_word(s); }

const std::vector<Word>& crossing_fixture() {
  static const std::vector<Word> rels{
      w("xi alpha delta1^-1 alpha^-1"),          w("delta1 beta delta2^-1 beta^-1"),
      w("delta2 gamma xi^-1 gamma^-1"),          w("xi^-1 alpha xi gamma^-1"),
      w("xi^-1 beta xi delta3^-1"),              w("xi^-1 gamma xi delta4^-1"),
      w("delta5^-1 gamma delta3 gamma^-1"),      w("delta6^-1 gamma delta4 gamma^-1"),
      w("psi delta5 delta7^-1 delta5^-1"),       w("delta7 delta6 psi^-1 delta6^-1"),
      w("psi^-1 delta5 psi alpha^-1"),           w("psi^-1 delta6 psi beta^-1"),
  };
  return rels;
}

const std::vector<Word>& lemma_fixture() {
  static const std::vector<Word> rels{
      w("xi^-1 gamma^-1 beta^-1 alpha^-1 xi alpha beta gamma"),
      w("xi^-1 alpha xi gamma^-1"),
      w("psi^-1 gamma xi^-1 beta xi gamma^-1 psi alpha^-1"),
      w("psi^-1 gamma xi^-1 gamma xi gamma^-1 psi beta^-1"),
      w("psi^-1 beta^-1 alpha^-1 psi alpha beta"),
  };
  return rels;
}

// Each relator of `got` matches a distinct one of `want` up to conjugacy and inversion.
bool same_relators_up_to_conjugacy(const std::vector<Word>& got, const std::vector<Word>& want) {
  if (got.size() != want.size()) return false;
  std::vector<bool> used(want.size(), false);
  for (const auto& g : got) {
    bool hit = false;
    for (std::size_t i = 0; i < want.size() && !hit; ++i)
      if (!used[i] && is_conjugate_up_to_inverse(g, want[i])) used[i] = hit = true;
    if (!hit) return false;
  }
  return true;
}

LinkDiagram pd(const std::vector<std::array<std::int64_t, 4>>& code) { return diagram_from_pd(code); }

}  // namespace

TEST_CASE("L reproduces the twelve crossing relators letter for letter", "[wirtinger]") {
  const auto d = builtin_link_L();
  CHECK(d.crossings().size() == 12);
  const auto p = wirtinger_presentation(d);
  CHECK(p.generators().size() == 12);
  REQUIRE(p.relators().size() == 12);
  for (std::size_t i = 0; i < 12; ++i) {
    INFO("P" << i + 1);
    CHECK(p.relators()[i] == crossing_fixture()[i]);
  }
}

TEST_CASE("erasing the deltas gives the five-relator link group", "[wirtinger]") {
  const auto red = reduce_builtin_link();
  const auto& p = red.reduced.presentation();
  CHECK(p.generators() == std::vector<Generator>{"alpha", "beta", "gamma", "xi", "psi"});
  CHECK(same_relators_up_to_conjugacy(p.relators(), lemma_fixture()));
  CHECK(homology(p) == homology(red.wirtinger));
  CHECK(homology(p).free_rank == 3);
}

TEST_CASE("peripheral words of L after erasing the deltas", "[wirtinger]") {
  const auto red = reduce_builtin_link();
  const auto& t = red.reduced;
  CHECK(t.tracked("meridian:l0") == w("alpha"));
  CHECK(t.tracked("longitude:l0") == w("xi xi gamma^-1 psi xi gamma^-1 psi"));
  CHECK(t.tracked("meridian:l1") == w("xi"));
  CHECK(t.tracked("longitude:l1") == w("alpha beta gamma"));
  CHECK(t.tracked("meridian:l2") == w("psi"));
  CHECK(t.tracked("longitude:l2") == w("alpha beta"));
}

TEST_CASE("l1 and l2 longitudes are preferred; l0 has self-writhe -2", "[wirtinger]") {
  const auto d = builtin_link_L();
  const auto l1 = peripheral_system(d, "l1");
  const auto l2 = peripheral_system(d, "l2");
  const auto l0 = peripheral_system(d, "l0");
  CHECK(l1.framing_class == 0);
  CHECK(l2.framing_class == 0);
  // the only l0 self-crossings are P7 and P8, both negative
  CHECK(l0.framing_class == -2);
  CHECK(l0.linking.at("l1") == 3);
  CHECK(l0.linking.at("l2") == 2);
  CHECK(l1.linking.at("l0") == 3);
  CHECK(l2.linking.at("l0") == 2);
  CHECK(l2.linking.at("l1") == 0);
  // in the link group, a longitude of l1 is homologous to lk(l1, l0) meridians of l0
  const auto h = AbelianizationMap(wirtinger_presentation(d));
  CHECK(h(l1.preferred_longitude()) == h(power(w("alpha"), 3)));
  CHECK(h(l2.preferred_longitude()) == h(power(w("alpha"), 2)));
  CHECK(h(l0.preferred_longitude()) == h(w("xi^3 psi^2")));
  CHECK_THROWS_AS(peripheral_system(d, "l9"), Error);
}

TEST_CASE("components of L", "[wirtinger]") {
  const auto d = builtin_link_L();
  CHECK(d.component("l1").arcs == std::vector<Generator>{"xi", "delta1", "delta2"});
  CHECK(d.component("l2").arcs == std::vector<Generator>{"psi", "delta7"});
  CHECK(d.component("l0").arcs.size() == 7);
  CHECK(d.component_of("delta4") == "l0");
}

TEST_CASE("the twisting relators are appended as written", "[wirtinger]") {
  const auto red = reduce_builtin_link();
  const auto p = add_twist_relations(red.reduced.presentation(), 0, 0);
  REQUIRE(p.relators().size() == 7);
  CHECK(p.relators()[5] == w("xi gamma^-1 beta^-1 alpha^-1"));
  CHECK(p.relators()[6] == w("psi"));
  const auto q = add_twist_relations(red.reduced.presentation(), 2, 1);
  CHECK(q.relators()[5] == w("xi") * power(w("alpha beta gamma"), -2));
  CHECK(q.relators()[6] == w("psi alpha beta alpha beta"));
  const auto s = add_twist_relations(red.reduced.presentation(), 2, 1, TwistConvention::slope_consistent);
  CHECK(s.relators()[6] == w("psi") * power(w("alpha beta"), -2));
  CHECK(homology(p).is_integers());
  CHECK_THROWS_AS(add_twist_relations(red.reduced.presentation(), 0, -1), Error);
  CHECK_THROWS_AS(add_twist_relations(Presentation({"a"}, {}), 0, 0), Error);
}

TEST_CASE("trefoil diagram and its knot group", "[wirtinger]") {
  const auto d = trefoil_diagram();
  const auto p = knot_presentation(d);
  CHECK(p.generators().size() == 3);
  CHECK(p.relators().size() == 2);
  CHECK(homology(p).is_integers());
  CHECK(alexander_polynomial(p).to_string() == "t^2 - t + 1");
  const auto ps = peripheral_system(d, d.components().front().id);
  CHECK(ps.framing_class == 3);
  CHECK(class_in_h1(p, ps.preferred_longitude()).is_zero());
}

TEST_CASE("a kinked unknot has writhe 1 and trivial group relator", "[wirtinger]") {
  const auto d = kinked_unknot_diagram();
  CHECK(wirtinger_presentation(d).relators().front().is_identity());
  const auto ps = peripheral_system(d, "k");
  CHECK(ps.framing_class == 1);
  CHECK(ps.preferred_longitude().is_identity());
}

TEST_CASE("PD codes: trefoil and figure-eight", "[wirtinger][pd]") {
  const auto t = pd({{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}});
  CHECK(t.arcs().size() == 3);
  CHECK(t.components().size() == 1);
  const auto tp = knot_presentation(t);
  CHECK(alexander_polynomial(tp).to_string() == "t^2 - t + 1");
  const auto tps = peripheral_system(t, "c0");
  CHECK((tps.framing_class == 3 || tps.framing_class == -3));
  CHECK(class_in_h1(tp, tps.preferred_longitude()).is_zero());

  const auto f = pd({{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}});
  const auto fp = knot_presentation(f);
  CHECK(alexander_polynomial(fp).to_string() == "t^2 - 3t + 1");
  CHECK(peripheral_system(f, "c0").framing_class == 0);
}

TEST_CASE("PD codes: Hopf link", "[wirtinger][pd]") {
  const auto h = pd({{4, 1, 3, 2}, {2, 3, 1, 4}});
  CHECK(h.components().size() == 2);
  const auto p = wirtinger_presentation(h);
  CHECK(homology(p).free_rank == 2);
  const auto ps = peripheral_system(h, h.components().front().id);
  const auto other = h.components().back().id;
  CHECK((ps.linking.at(other) == 1 || ps.linking.at(other) == -1));
}

TEST_CASE("PD code errors", "[wirtinger][pd][error]") {
  CHECK_THROWS_AS(pd({}), Error);
  CHECK_THROWS_AS(pd({{1, 2, 3, 4}}), Error);
}

TEST_CASE("diagram validation", "[wirtinger][error]") {
  // arc b is never an incoming under-arc
  CHECK_THROWS_AS(LinkDiagram({"a", "b"}, {{"k", {"a", "b"}}}, {{"c1", "a", "a", "b", 1, 0}}), Error);
  // bad sign
  CHECK_THROWS_AS(LinkDiagram({"a"}, {{"k", {"a"}}}, {{"c1", "a", "a", "a", 2, 0}}), Error);
  // bad rotation
  CHECK_THROWS_AS(LinkDiagram({"a"}, {{"k", {"a"}}}, {{"c1", "a", "a", "a", 1, 4}}), Error);
  // arc listed in no component
  CHECK_THROWS_AS(LinkDiagram({"a"}, {}, {{"c1", "a", "a", "a", 1, 0}}), Error);
  // undeclared over-arc
  CHECK_THROWS_AS(LinkDiagram({"a"}, {{"k", {"a"}}}, {{"c1", "z", "a", "a", 1, 0}}), Error);
}

TEST_CASE("crossing relator rotation", "[wirtinger]") {
  const Crossing c{"c", "o", "i", "u", -1, 0};
  CHECK(crossing_relator(c) == w("i o^-1 u^-1 o"));
  const Crossing r{"c", "o", "i", "u", -1, 2};
  CHECK(is_conjugate(crossing_relator(r), crossing_relator(c)));
  CHECK(crossing_relator(r) == w("u^-1 o i o^-1"));
}
