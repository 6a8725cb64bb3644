#pragma once

// Finite presentations and the Tietze moves used to transform them. Every
// move returns a new Presentation; none of them alters the group.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tknot/error.hpp"
#include "tknot/word.hpp"

namespace tknot {

inline constexpr std::string_view kPresentationModule = "presentations";

class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<Generator> generators, std::vector<Word> relators)
      : generators_(std::move(generators)), relators_(std::move(relators)) {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (generators_[i] == generators_[j])
          throw Error(kPresentationModule, "generator '" + generators_[i].name() + "' declared twice");
    for (const auto& r : relators_) require_declared(r);
  }

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }

  bool declares(const Generator& g) const {
    return std::find(generators_.begin(), generators_.end(), g) != generators_.end();
  }

  std::size_t index_of(const Generator& g) const {
    auto it = std::find(generators_.begin(), generators_.end(), g);
    if (it == generators_.end())
      throw Error(kPresentationModule, "generator '" + g.name() + "' is not declared");
    return static_cast<std::size_t>(it - generators_.begin());
  }

  void require_declared(const Word& w) const {
    for (const auto& r : w.runs())
      if (!declares(r.gen))
        throw Error(kPresentationModule, "generator '" + r.gen.name() + "' is not declared");
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<Generator> generators_;
  std::vector<Word> relators_;
};

/// Appends relators in the given order.
inline Presentation add_relators(const Presentation& p, const std::vector<Word>& rs) {
  auto rels = p.relators();
  for (const auto& r : rs) {
    p.require_declared(r);
    rels.push_back(r);
  }
  return {p.generators(), std::move(rels)};
}

/// Index of the first relator (in stored order) conjugate to g * defining^-1
/// or to its inverse, skipping `skip`.
inline std::optional<std::size_t> find_defining_relator(const Presentation& p, const Generator& g,
                                                        const Word& defining,
                                                        std::optional<std::size_t> skip = std::nullopt) {
  const Word target = Word::generator(g) * invert(defining);
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (skip && *skip == i) continue;
    if (is_conjugate_up_to_inverse(p.relators()[i], target)) return i;
  }
  return std::nullopt;
}

/// Removes generator g, which must be defined by `defining` through one of
/// the relators. That relator is consumed and every other relator has g
/// replaced by `defining`.
inline Presentation tietze_eliminate(const Presentation& p, const Generator& g, const Word& defining) {
  if (!p.declares(g))
    throw Error(kPresentationModule, "cannot eliminate '" + g.name() + "': not a generator");
  if (defining.mentions(g))
    throw Error(kPresentationModule, "defining word for '" + g.name() + "' mentions it");
  p.require_declared(defining);
  const auto consumed = find_defining_relator(p, g, defining);
  if (!consumed)
    throw Error(kPresentationModule,
                "no relator defines '" + g.name() + "' as " + to_text(defining));
  std::vector<Generator> gens;
  for (const auto& x : p.generators())
    if (x != g) gens.push_back(x);
  std::vector<Word> rels;
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    if (i != *consumed) rels.push_back(rewrite(p.relators()[i], g, defining));
  return {std::move(gens), std::move(rels)};
}

/// Adds a new generator g together with the relator g * defining^-1.
inline Presentation add_generator(const Presentation& p, const Generator& g, const Word& defining) {
  if (p.declares(g)) throw Error(kPresentationModule, "generator '" + g.name() + "' already declared");
  p.require_declared(defining);
  auto gens = p.generators();
  gens.push_back(g);
  auto rels = p.relators();
  rels.push_back(Word::generator(g) * invert(defining));
  return {std::move(gens), std::move(rels)};
}

/// Replaces every occurrence of g in relator `index` by `defining`. Some
/// other relator must say g == defining (up to conjugacy and inversion).
inline Presentation rewrite_relator(const Presentation& p, std::size_t index, const Generator& g,
                                    const Word& defining) {
  if (index >= p.relators().size()) throw Error(kPresentationModule, "relator index out of range");
  p.require_declared(defining);
  if (!find_defining_relator(p, g, defining, index))
    throw Error(kPresentationModule,
                "rewrite " + g.name() + " -> " + to_text(defining) + " is not justified by a relator");
  auto rels = p.relators();
  rels[index] = rewrite(rels[index], g, defining);
  return {p.generators(), std::move(rels)};
}

inline Presentation conjugate_relator(const Presentation& p, std::size_t index, const Word& by) {
  if (index >= p.relators().size()) throw Error(kPresentationModule, "relator index out of range");
  p.require_declared(by);
  auto rels = p.relators();
  rels[index] = conjugate(rels[index], by);
  return {p.generators(), std::move(rels)};
}

inline Presentation invert_relator(const Presentation& p, std::size_t index) {
  if (index >= p.relators().size()) throw Error(kPresentationModule, "relator index out of range");
  auto rels = p.relators();
  rels[index] = invert(rels[index]);
  return {p.generators(), std::move(rels)};
}

/// R_index := R_index * (by R_other^sign by^-1).
inline Presentation multiply_relator(const Presentation& p, std::size_t index, std::size_t other,
                                     int sign, const Word& by) {
  if (index >= p.relators().size() || other >= p.relators().size() || index == other)
    throw Error(kPresentationModule, "bad relator indices");
  p.require_declared(by);
  auto rels = p.relators();
  const Word factor = conjugate(sign < 0 ? invert(rels[other]) : rels[other], by);
  rels[index] = rels[index] * factor;
  return {p.generators(), std::move(rels)};
}

/// Drops relator `index` when it is provably redundant: it reduces to the
/// identity, or it is conjugate (up to inversion) to another relator.
inline Presentation remove_redundant_relator(const Presentation& p, std::size_t index) {
  if (index >= p.relators().size()) throw Error(kPresentationModule, "relator index out of range");
  const Word& r = p.relators()[index];
  bool redundant = r.is_identity();
  for (std::size_t j = 0; j < p.relators().size() && !redundant; ++j)
    if (j != index) redundant = is_conjugate_up_to_inverse(r, p.relators()[j]);
  if (!redundant)
    throw Error(kPresentationModule, "relator " + std::to_string(index) + " is not evidently redundant");
  auto rels = p.relators();
  rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(index));
  return {p.generators(), std::move(rels)};
}

/// Drops every relator that reduces to the identity.
inline Presentation drop_trivial_relators(const Presentation& p) {
  std::vector<Word> rels;
  for (const auto& r : p.relators())
    if (!r.is_identity()) rels.push_back(r);
  return {p.generators(), std::move(rels)};
}

/// Appends a relator known to be a consequence of the existing ones. The
/// caller vouches for it; no check is possible in general.
inline Presentation add_consequence(const Presentation& p, const Word& r) { return add_relators(p, {r}); }

inline std::string to_text(const Presentation& p) {
  std::string s = "< ";
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) s += ", ";
    s += p.generators()[i].name();
  }
  s += " | ";
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    if (i) s += ", ";
    s += to_text(p.relators()[i]);
  }
  s += " >";
  return s;
}

}  // namespace tknot
