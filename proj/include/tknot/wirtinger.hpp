#pragma once

// Link diagrams, Wirtinger presentations and peripheral systems, plus the
// built-in three-component link L whose surgeries give the twisted torus
// knot family.
//
// Crossing convention: a crossing with over-arc o, incoming under-arc x,
// outgoing under-arc y and sign e contributes the relator
//     x o^e y^-1 o^-e        (so y = o^-e x o^e),
// read cyclically from letter `rotation` (0..3). Sign +1 means the
// under-strand passes right-to-left seen along the over-strand's
// orientation, i.e. a positive crossing.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tknot/error.hpp"
#include "tknot/presentation.hpp"
#include "tknot/tietze.hpp"
#include "tknot/word.hpp"

namespace tknot {

inline constexpr std::string_view kWirtingerModule = "wirtinger";

struct Crossing {
  std::string id;
  Generator over;
  Generator under_in;
  Generator under_out;
  int sign = 1;
  int rotation = 0;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct LinkComponent {
  std::string id;
  std::vector<Generator> arcs;  // cyclic order; arcs.front() is the basepoint

  friend bool operator==(const LinkComponent&, const LinkComponent&) = default;
};

class LinkDiagram {
 public:
  LinkDiagram(std::vector<Generator> arcs, std::vector<LinkComponent> components, std::vector<Crossing> crossings)
      : arcs_(std::move(arcs)), components_(std::move(components)), crossings_(std::move(crossings)) {
    validate();
  }

  const std::vector<Generator>& arcs() const noexcept { return arcs_; }
  const std::vector<LinkComponent>& components() const noexcept { return components_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }

  const LinkComponent& component(std::string_view id) const {
    for (const auto& c : components_)
      if (c.id == id) return c;
    throw Error(kWirtingerModule, "unknown component '" + std::string(id) + "'");
  }

  /// Component id owning an arc.
  const std::string& component_of(const Generator& arc) const { return owner_.at(arc); }

  /// The crossing where `arc` ends (is the incoming under-arc).
  const Crossing& crossing_ending(const Generator& arc) const { return crossings_[ends_at_.at(arc)]; }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.arcs_ == b.arcs_ && a.components_ == b.components_ && a.crossings_ == b.crossings_;
  }

 private:
  void validate() {
    auto fail = [](const std::string& m) { throw Error(kWirtingerModule, "malformed diagram: " + m); };
    if (arcs_.empty()) fail("no arcs");
    std::map<Generator, int> as_in;
    std::map<Generator, int> as_out;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      if (as_in.count(arcs_[i])) fail("arc '" + arcs_[i].name() + "' listed twice");
      as_in[arcs_[i]] = 0;
      as_out[arcs_[i]] = 0;
    }
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
      const auto& c = crossings_[i];
      for (const auto* g : {&c.over, &c.under_in, &c.under_out})
        if (!as_in.count(*g)) fail("crossing " + c.id + " references unknown arc '" + g->name() + "'");
      if (c.sign != 1 && c.sign != -1) fail("crossing " + c.id + " has sign other than +-1");
      if (c.rotation < 0 || c.rotation > 3) fail("crossing " + c.id + " has rotation outside 0..3");
      ++as_in[c.under_in];
      ++as_out[c.under_out];
      ends_at_[c.under_in] = i;
    }
    for (const auto& a : arcs_) {
      if (as_in[a] != 1) fail("arc '" + a.name() + "' is the incoming under-arc of " + std::to_string(as_in[a]) + " crossings");
      if (as_out[a] != 1) fail("arc '" + a.name() + "' is the outgoing under-arc of " + std::to_string(as_out[a]) + " crossings (dangling arc)");
    }
    std::size_t covered = 0;
    for (const auto& comp : components_) {
      if (comp.arcs.empty()) fail("component " + comp.id + " has no arcs");
      for (const auto& other : components_)
        if (&other != &comp && other.id == comp.id) fail("duplicate component id " + comp.id);
      for (std::size_t i = 0; i < comp.arcs.size(); ++i) {
        const auto& a = comp.arcs[i];
        if (!as_in.count(a)) fail("component " + comp.id + " lists unknown arc '" + a.name() + "'");
        if (owner_.count(a)) fail("arc '" + a.name() + "' belongs to two components");
        owner_[a] = comp.id;
        const auto& next = comp.arcs[(i + 1) % comp.arcs.size()];
        if (crossings_[ends_at_[a]].under_out != next)
          fail("component " + comp.id + ": arc '" + a.name() + "' is not followed by '" + next.name() + "'");
      }
      covered += comp.arcs.size();
    }
    if (covered != arcs_.size()) fail("components do not cover every arc");
  }

  std::vector<Generator> arcs_;
  std::vector<LinkComponent> components_;
  std::vector<Crossing> crossings_;
  std::map<Generator, std::string> owner_;
  std::map<Generator, std::size_t> ends_at_;
};

inline Word crossing_relator(const Crossing& c) {
  const std::array<Run, 4> letters{Run{c.under_in, 1}, Run{c.over, c.sign}, Run{c.under_out, -1},
                                   Run{c.over, -c.sign}};
  std::array<Run, 4> rotated;
  for (std::size_t i = 0; i < 4; ++i) rotated[i] = letters[(i + static_cast<std::size_t>(c.rotation)) % 4];
  return reduce(rotated);
}

/// One generator per arc (in declared order) and one relator per crossing.
inline Presentation wirtinger_presentation(const LinkDiagram& d) {
  std::vector<Word> rels;
  rels.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) rels.push_back(crossing_relator(c));
  return {d.arcs(), std::move(rels)};
}

/// For a knot diagram: the Wirtinger presentation with its last relator
/// dropped (any one relator is a consequence of the others), which gives a
/// deficiency-one presentation.
inline Presentation knot_presentation(const LinkDiagram& d) {
  if (d.components().size() != 1) throw Error(kWirtingerModule, "knot_presentation needs a one-component diagram");
  auto p = wirtinger_presentation(d);
  auto rels = p.relators();
  rels.pop_back();
  return {p.generators(), std::move(rels)};
}

struct PeripheralSystem {
  std::string component;
  Word meridian;
  Word longitude;
  /// Coefficient of the component's own meridian in the longitude's H1 class
  /// (the writhe of its self-crossings); zero for a preferred longitude.
  std::int64_t framing_class = 0;
  /// Coefficient of every other component's meridian: the linking numbers.
  std::map<std::string, std::int64_t> linking;

  /// meridian^-framing_class * longitude, null-homologous in the link exterior.
  Word preferred_longitude() const { return power(meridian, -framing_class) * longitude; }
};

/// Meridian: the component's basepoint arc. Longitude: the product of
/// over-arcs (to the crossing sign) met while traversing the component from
/// the basepoint.
inline PeripheralSystem peripheral_system(const LinkDiagram& d, std::string_view component_id) {
  const auto& comp = d.component(component_id);
  PeripheralSystem ps;
  ps.component = comp.id;
  ps.meridian = Word::generator(comp.arcs.front());
  std::vector<Run> lon;
  for (const auto& c : d.components()) ps.linking[c.id] = 0;
  for (const auto& arc : comp.arcs) {
    const auto& c = d.crossing_ending(arc);
    lon.push_back({c.over, c.sign});
    ps.linking[d.component_of(c.over)] += c.sign;
  }
  ps.longitude = reduce(lon);
  ps.framing_class = ps.linking[comp.id];
  ps.linking.erase(comp.id);
  return ps;
}

// --- built-in diagrams -------------------------------------------------------

/// The three-component link L: l0 carries alpha, beta, gamma, delta3..6 and
/// is the (3,2) torus-knot braid closure; l1 (xi, delta1, delta2) encircles
/// its three strands; l2 (psi, delta7) encircles two of them. Crossing data
/// reproduce the relators P1..P12 letter for letter.
inline LinkDiagram builtin_link_L() {
  const std::vector<Generator> arcs{"alpha",  "beta",   "gamma",  "xi",     "psi",    "delta1",
                                    "delta2", "delta3", "delta4", "delta5", "delta6", "delta7"};
  std::vector<Crossing> crossings{
      {"P1", "alpha", "xi", "delta1", 1, 0},      // xi alpha delta1^-1 alpha^-1
      {"P2", "beta", "delta1", "delta2", 1, 0},   // delta1 beta delta2^-1 beta^-1
      {"P3", "gamma", "delta2", "xi", 1, 0},      // delta2 gamma xi^-1 gamma^-1
      {"P4", "xi", "alpha", "gamma", 1, 3},       // xi^-1 alpha xi gamma^-1
      {"P5", "xi", "beta", "delta3", 1, 3},       // xi^-1 beta xi delta3^-1
      {"P6", "xi", "gamma", "delta4", 1, 3},      // xi^-1 gamma xi delta4^-1
      {"P7", "gamma", "delta3", "delta5", -1, 2}, // delta5^-1 gamma delta3 gamma^-1
      {"P8", "gamma", "delta4", "delta6", -1, 2}, // delta6^-1 gamma delta4 gamma^-1
      {"P9", "delta5", "psi", "delta7", 1, 0},    // psi delta5 delta7^-1 delta5^-1
      {"P10", "delta6", "delta7", "psi", 1, 0},   // delta7 delta6 psi^-1 delta6^-1
      {"P11", "psi", "delta5", "alpha", 1, 3},    // psi^-1 delta5 psi alpha^-1
      {"P12", "psi", "delta6", "beta", 1, 3},     // psi^-1 delta6 psi beta^-1
  };
  std::vector<LinkComponent> components{
      {"l0", {"alpha", "gamma", "delta4", "delta6", "beta", "delta3", "delta5"}},
      {"l1", {"xi", "delta1", "delta2"}},
      {"l2", {"psi", "delta7"}},
  };
  return {arcs, std::move(components), std::move(crossings)};
}

/// Standard three-crossing trefoil with all crossings positive.
inline LinkDiagram trefoil_diagram() {
  return {{"x", "y", "z"},
          {{"k", {"x", "y", "z"}}},
          {{"c1", "z", "x", "y", 1, 0}, {"c2", "x", "y", "z", 1, 0}, {"c3", "y", "z", "x", 1, 0}}};
}

/// Unknot drawn with a single Reidemeister-I kink.
inline LinkDiagram kinked_unknot_diagram() { return {{"a"}, {{"k", {"a"}}}, {{"c1", "a", "a", "a", 1, 0}}}; }

/// Builds a diagram from a PD code. Each entry X[i,j,k,l] lists edge labels
/// counterclockwise starting from the incoming under-edge i; k is the
/// outgoing under-edge. The over-strand runs j -> l when l == j + 1 or when
/// j is the larger label of a non-adjacent pair (wrap-around), else l -> j.
/// A crossing is positive when the over-strand runs l -> j. Arcs are named
/// "x<smallest edge>", components "c<i>" from the lowest edge upward.
inline LinkDiagram diagram_from_pd(const std::vector<std::array<std::int64_t, 4>>& pd) {
  if (pd.empty()) throw Error(kWirtingerModule, "empty PD code");
  std::map<std::int64_t, std::int64_t> parent;
  auto find = [&](std::int64_t e) {
    while (parent[e] != e) e = parent[e] = parent[parent[e]];
    return e;
  };
  std::map<std::int64_t, int> seen;
  for (const auto& x : pd)
    for (auto e : x) {
      parent.try_emplace(e, e);
      ++seen[e];
    }
  for (const auto& [e, n] : seen)
    if (n != 2) throw Error(kWirtingerModule, "PD edge " + std::to_string(e) + " appears " + std::to_string(n) + " times");
  auto unite = [&](std::int64_t a, std::int64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  struct Oriented {
    std::int64_t in_under, out_under, over_from, over_to;
    int sign;
  };
  std::vector<Oriented> xs;
  std::map<std::int64_t, std::int64_t> next_edge;
  for (const auto& x : pd) {
    const auto [i, j, k, l] = x;
    const bool j_to_l = (l == j + 1) || (j > l && j - l > 1);
    xs.push_back({i, k, j_to_l ? j : l, j_to_l ? l : j, j_to_l ? -1 : 1});
    unite(j, l);
    next_edge[i] = k;
    next_edge[j_to_l ? j : l] = j_to_l ? l : j;
  }
  auto arc_of = [&](std::int64_t e) { return Generator("x" + std::to_string(find(e))); };
  std::vector<Generator> arcs;
  for (const auto& [e, n] : seen)
    if (find(e) == e) arcs.push_back(arc_of(e));
  std::vector<Crossing> crossings;
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const auto& o = xs[n];
    crossings.push_back({"X" + std::to_string(n + 1), arc_of(o.over_from), arc_of(o.in_under), arc_of(o.out_under), o.sign, 0});
  }
  std::vector<LinkComponent> components;
  std::map<std::int64_t, bool> visited;
  for (const auto& [start, n] : seen) {
    if (visited[start]) continue;
    // start the traversal at the edge that begins the first arc of this cycle
    std::vector<std::int64_t> cycle;
    for (std::int64_t e = start; !visited[e]; e = next_edge.at(e)) {
      visited[e] = true;
      cycle.push_back(e);
    }
    std::vector<Generator> comp_arcs;
    const auto base = std::find_if(cycle.begin(), cycle.end(), [&](std::int64_t e) { return find(e) == e; });
    std::rotate(cycle.begin(), base == cycle.end() ? cycle.begin() : base, cycle.end());
    for (auto e : cycle) {
      Generator a = arc_of(e);
      if (comp_arcs.empty() || comp_arcs.back() != a) comp_arcs.push_back(a);
    }
    if (comp_arcs.size() > 1 && comp_arcs.front() == comp_arcs.back()) comp_arcs.pop_back();
    components.push_back({"c" + std::to_string(components.size()), std::move(comp_arcs)});
  }
  return {std::move(arcs), std::move(components), std::move(crossings)};
}

// --- twisting ------------------------------------------------------------------

/// Which sign the l2 twisting relator carries. `as_printed` appends
/// psi (alpha beta)^u; `slope_consistent` appends psi (alpha beta)^-u, the
/// meridian-longitude relation of the -1/u filling and the one under which
/// psi = (alpha beta)^u, as used by the substitution chain.
enum class TwistConvention { as_printed, slope_consistent };

/// Appends xi (alpha beta gamma)^(-v-1) and the l2 relator for u twists.
inline Presentation add_twist_relations(const Presentation& p, std::int64_t u, std::int64_t v,
                                        TwistConvention convention = TwistConvention::as_printed) {
  if (v < 0) throw Error(kWirtingerModule, "twist parameter v must be >= 0");
  for (const char* g : {"xi", "psi", "alpha", "beta", "gamma"})
    if (!p.declares(Generator(g))) throw Error(kWirtingerModule, std::string("presentation lacks generator ") + g);
  const Word abc{{"alpha", 1}, {"beta", 1}, {"gamma", 1}};
  const Word ab{{"alpha", 1}, {"beta", 1}};
  const std::int64_t l2_exp = convention == TwistConvention::as_printed ? u : checked::neg(u, kWirtingerModule);
  return add_relators(p, {Word::generator("xi") * power(abc, checked::sub(-v, 1, kWirtingerModule)),
                          Word::generator("psi") * power(ab, l2_exp)});
}

// --- reduction of L to five generators -------------------------------------------

struct LinkReduction {
  Presentation wirtinger;
  TrackedPresentation reduced;  // tracked words "meridian:<id>", "longitude:<id>"
  std::vector<PeripheralSystem> peripheral;
};

/// Erases delta1..delta7 from the Wirtinger presentation of L. delta7 goes
/// first through P9; P10 is then rewritten with delta5 = psi alpha psi^-1
/// and delta6 = psi beta psi^-1 (justified by P11 and P12); the remaining
/// deltas are eliminated through P1, P3, P5, P6, P7, P8. Peripheral words
/// travel along, and each longitude is finally shortened by conjugating
/// with powers of its own meridian.
inline LinkReduction reduce_builtin_link() {
  const auto d = builtin_link_L();
  LinkReduction out{wirtinger_presentation(d), {}, {}};
  std::map<std::string, Word> tracked;
  std::vector<PeripheralSystem> raw;
  for (const auto& c : d.components()) {
    raw.push_back(peripheral_system(d, c.id));
    tracked["meridian:" + c.id] = raw.back().meridian;
    tracked["longitude:" + c.id] = raw.back().longitude;
  }
  TrackedPresentation tp(out.wirtinger, tracked);
  auto w = [](std::string_view text) { return parse_word(text); };

  const Word p10 = crossing_relator(d.crossings()[9]);
  const Word d7_def = w("delta5^-1 psi delta5");
  tp.eliminate("delta7", d7_def);
  Word p10r = rewrite(p10, "delta7", d7_def);
  tp.rewrite_in(p10r, "delta5", w("psi alpha psi^-1"));
  p10r = rewrite(p10r, "delta5", w("psi alpha psi^-1"));
  tp.rewrite_in(p10r, "delta6", w("psi beta psi^-1"));

  tp.eliminate("delta1", w("alpha^-1 xi alpha"));
  tp.eliminate("delta2", w("gamma xi gamma^-1"));
  tp.eliminate("delta3", w("xi^-1 beta xi"));
  tp.eliminate("delta4", w("xi^-1 gamma xi"));
  tp.eliminate("delta5", w("gamma xi^-1 beta xi gamma^-1"));
  tp.eliminate("delta6", w("gamma xi^-1 gamma xi gamma^-1"));

  for (auto ps : raw) {
    const std::string lon = "longitude:" + ps.component;
    tp.shorten_by_commuting(lon, ps.meridian, tp.tracked(lon).length());
    ps.longitude = tp.tracked(lon);
    ps.meridian = tp.tracked("meridian:" + ps.component);
    out.peripheral.push_back(ps);
  }
  out.reduced = std::move(tp);
  return out;
}

}  // namespace tknot
