#pragma once

// JSON encodings of the library's values. Keys are emitted in sorted order
// (nlohmann's default object type), so identical values serialize to
// identical bytes.

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "tknot/alexander.hpp"
#include "tknot/coset.hpp"
#include "tknot/homology.hpp"
#include "tknot/nlo_criterion.hpp"
#include "tknot/presentation.hpp"
#include "tknot/twisted_torus.hpp"
#include "tknot/wirtinger.hpp"
#include "tknot/word.hpp"

namespace tknot::json_io {

using nlohmann::json;

inline constexpr std::string_view kJsonModule = "cli";

[[noreturn]] inline void malformed(const std::string& what) { throw Error(kJsonModule, "malformed JSON input: " + what); }

// --- words and presentations ------------------------------------------------------

inline json to_json(const Word& w) {
  json a = json::array();
  for (const auto& r : w.runs()) a.push_back(json::array({r.gen.name(), r.exp}));
  return a;
}

/// Accepts the pair-array form or a text word such as "b a b^-2 a".
inline Word word_from_json(const json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  if (!j.is_array()) malformed("a word must be an array of [generator, exponent] pairs");
  std::vector<Run> runs;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_integer())
      malformed("word entry " + e.dump() + " is not a [generator, exponent] pair");
    const auto name = e[0].get<std::string>();
    if (name.empty()) malformed("empty generator name");
    runs.push_back({Generator(name), e[1].get<std::int64_t>()});
  }
  return reduce(runs);
}

inline json to_json(const Presentation& p) {
  json gens = json::array();
  for (const auto& g : p.generators()) gens.push_back(g.name());
  json rels = json::array();
  json text = json::array();
  for (const auto& r : p.relators()) {
    rels.push_back(to_json(r));
    text.push_back(to_text(r));
  }
  return {{"generators", gens}, {"relators", rels}, {"relators_text", text}};
}

inline Presentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    malformed("a presentation needs \"generators\" and \"relators\"");
  std::vector<Generator> gens;
  for (const auto& g : j.at("generators")) {
    if (!g.is_string()) malformed("generator names must be strings");
    gens.emplace_back(g.get<std::string>());
  }
  std::vector<Word> rels;
  for (const auto& r : j.at("relators")) rels.push_back(word_from_json(r));
  return {std::move(gens), std::move(rels)};
}

inline json to_json(const HomologySummary& h) {
  return {{"torsion", h.torsion_orders}, {"rank", h.free_rank}, {"order", h.order()}};
}

inline json to_json(const LaurentPolynomial& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c;
  return {{"polynomial", p.to_string()}, {"coefficients", coeffs}};
}

// --- diagrams ---------------------------------------------------------------------

inline json to_json(const LinkDiagram& d) {
  json arcs = json::array();
  for (const auto& a : d.arcs()) arcs.push_back(a.name());
  json comps = json::array();
  for (const auto& c : d.components()) {
    json ca = json::array();
    for (const auto& a : c.arcs) ca.push_back(a.name());
    comps.push_back({{"id", c.id}, {"arcs", ca}});
  }
  json xs = json::array();
  for (const auto& c : d.crossings())
    xs.push_back({{"id", c.id},
                  {"over", c.over.name()},
                  {"under_in", c.under_in.name()},
                  {"under_out", c.under_out.name()},
                  {"sign", c.sign},
                  {"rotation", c.rotation}});
  return {{"arcs", arcs}, {"components", comps}, {"crossings", xs}};
}

/// Either {"pd": [[i,j,k,l], ...]} or {"arcs", "components", "crossings"}.
/// Components may be bare arc lists (ids become l0, l1, ...) or objects
/// with "id" and "arcs".
inline LinkDiagram diagram_from_json(const json& j) {
  if (!j.is_object()) malformed("a diagram must be a JSON object");
  try {
    if (j.contains("pd")) {
      std::vector<std::array<std::int64_t, 4>> pd;
      for (const auto& x : j.at("pd")) {
        if (!x.is_array() || x.size() != 4) malformed("PD entries must have four edge labels");
        pd.push_back({x[0].get<std::int64_t>(), x[1].get<std::int64_t>(), x[2].get<std::int64_t>(),
                      x[3].get<std::int64_t>()});
      }
      return diagram_from_pd(pd);
    }
    std::vector<Generator> arcs;
    for (const auto& a : j.at("arcs")) arcs.emplace_back(a.get<std::string>());
    std::vector<LinkComponent> comps;
    for (const auto& c : j.at("components")) {
      LinkComponent lc;
      const json* list = &c;
      if (c.is_object()) {
        lc.id = c.at("id").get<std::string>();
        list = &c.at("arcs");
      } else {
        lc.id = "l" + std::to_string(comps.size());
      }
      for (const auto& a : *list) lc.arcs.emplace_back(a.get<std::string>());
      comps.push_back(std::move(lc));
    }
    std::vector<Crossing> xs;
    for (const auto& c : j.at("crossings"))
      xs.push_back({c.at("id").get<std::string>(), Generator(c.at("over").get<std::string>()),
                    Generator(c.at("under_in").get<std::string>()), Generator(c.at("under_out").get<std::string>()),
                    c.at("sign").get<int>(), c.value("rotation", 0)});
    return {std::move(arcs), std::move(comps), std::move(xs)};
  } catch (const json::exception& e) {
    malformed(e.what());
  }
}

inline json to_json(const PeripheralSystem& ps) {
  return {{"component", ps.component},
          {"meridian", to_json(ps.meridian)},
          {"meridian_text", to_text(ps.meridian)},
          {"longitude", to_json(ps.longitude)},
          {"longitude_text", to_text(ps.longitude)},
          {"framing_class", ps.framing_class},
          {"linking", ps.linking}};
}

// --- family, proof, criterion, enumeration ------------------------------------------

inline json to_json(const TwistParams& p) { return {{"u", p.u}, {"v", p.v}}; }

inline json to_json(const KnotGroupModel& m) {
  return {{"params", to_json(m.params)},
          {"presentation", to_json(m.presentation)},
          {"relator_text", to_text(m.relator())},
          {"meridian", to_json(m.meridian)},
          {"longitude_diagram", to_json(m.longitude_diagram)},
          {"longitude_paper", to_json(m.longitude_paper)},
          {"longitude_paper_text", to_text(m.longitude_paper)},
          {"longitude_corrected", to_json(m.longitude_corrected)},
          {"longitude_corrected_text", to_text(m.longitude_corrected)},
          {"s_paper", m.s_paper},
          {"s_corrected", m.s_corrected},
          {"t", m.t},
          {"w", to_json(m.w)},
          {"w_text", to_text(m.w)}};
}

inline json to_json(const ProofReport& r) {
  json checks = json::array();
  bool core_ok = true;
  for (const auto& c : r.checks) {
    json jc = {{"index", c.index},      {"name", c.name},       {"identity", c.identity},
               {"passed", c.passed},    {"witness", c.witness}, {"informational", c.informational}};
    jc["measured"] = c.measured ? json(*c.measured) : json(nullptr);
    checks.push_back(std::move(jc));
    if (c.index <= 8) core_ok = core_ok && c.passed;
  }
  return {{"params", to_json(r.params)}, {"checks", checks}, {"checks_1_to_8_pass", core_ok}};
}

inline json to_json(const ITShape& s) {
  return {{"a", s.a.name()}, {"b", s.b.name()}, {"m", s.m},           {"n", s.n},
          {"r", s.r},        {"k", s.k},        {"w1", to_json(s.w1)}, {"w2", to_json(s.w2)},
          {"w1_text", to_text(s.w1)}, {"w2_text", to_text(s.w2)}};
}

inline json to_json(const LongitudeForm& f) {
  return {{"s", f.s}, {"t", f.t}, {"w", to_json(f.w)}, {"w_text", to_text(f.w)}, {"w_positive", f.w_positive}};
}

inline json to_json(const CriterionReport& r) {
  json verdict = {{"kind", to_string(r.decision.verdict)}};
  if (r.decision.verdict == Verdict::NotApplicable) verdict["reason"] = r.decision.reason;
  return {{"params", to_json(r.params)},
          {"slope", {{"p", r.slope.p()}, {"q", r.slope.q()}}},
          {"longitude", to_string(r.choice)},
          {"shape", r.shape ? to_json(*r.shape) : json(nullptr)},
          {"form_paper", to_json(r.form_paper)},
          {"form_corrected", to_json(r.form_corrected)},
          {"bound_paper", r.bound_paper},
          {"bound_corrected", r.bound_corrected},
          {"verdict", verdict}};
}

inline json to_json(const EnumerationResult& r) {
  json outcome = r.finished ? json{{"kind", "Finished"}, {"order", r.order}} : json{{"kind", "Exceeded"}, {"limit", r.limit}};
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(r.trace_hash));
  return {{"outcome", outcome}, {"cosets_defined", r.cosets_defined}, {"trace_hash", hash}, {"strategy", r.strategy}};
}

}  // namespace tknot::json_io
