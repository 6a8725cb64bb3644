#pragma once

// A presentation together with named words (meridians, longitudes) that are
// carried through each Tietze move, and a log of the moves applied.

#include <map>
#include <string>
#include <vector>

#include "tknot/presentation.hpp"

namespace tknot {

struct TietzeStep {
  std::string description;
  Presentation after;
};

class TrackedPresentation {
 public:
  TrackedPresentation() = default;
  TrackedPresentation(Presentation p, std::map<std::string, Word> tracked)
      : p_(std::move(p)), tracked_(std::move(tracked)) {
    for (const auto& [name, w] : tracked_) p_.require_declared(w);
  }

  const Presentation& presentation() const noexcept { return p_; }
  const std::vector<TietzeStep>& steps() const noexcept { return steps_; }
  const Word& tracked(const std::string& name) const {
    auto it = tracked_.find(name);
    if (it == tracked_.end()) throw Error(kPresentationModule, "no tracked word '" + name + "'");
    return it->second;
  }
  const std::map<std::string, Word>& tracked_words() const noexcept { return tracked_; }

  void eliminate(const Generator& g, const Word& defining) {
    p_ = tietze_eliminate(p_, g, defining);
    for (auto& [name, w] : tracked_) w = rewrite(w, g, defining);
    log("eliminate " + g.name() + " := " + to_text(defining));
  }

  void add_generator(const Generator& g, const Word& defining) {
    p_ = tknot::add_generator(p_, g, defining);
    log("add generator " + g.name() + " := " + to_text(defining));
  }

  void add_relators(const std::vector<Word>& rs, const std::string& why) {
    p_ = tknot::add_relators(p_, rs);
    log("add relators (" + why + ")");
  }

  /// Rewrites g -> defining inside the relator currently equal to `relator`,
  /// and inside every tracked word. The move must be justified by another relator.
  void rewrite_in(const Word& relator, const Generator& g, const Word& defining) {
    const auto idx = index_of(relator);
    p_ = rewrite_relator(p_, idx, g, defining);
    for (auto& [name, w] : tracked_) w = rewrite(w, g, defining);
    log("rewrite " + g.name() + " -> " + to_text(defining) + " in relator " + std::to_string(idx));
  }

  void drop_trivial() {
    p_ = drop_trivial_relators(p_);
    log("drop trivial relators");
  }

  void remove_redundant(std::size_t index) {
    p_ = remove_redundant_relator(p_, index);
    log("remove redundant relator " + std::to_string(index));
  }

  /// Conjugates a tracked word by a power of a word it commutes with in the
  /// group (e.g. a longitude by its own meridian), choosing the power in
  /// [-bound, bound] that minimizes length; ties go to the smallest |k|, then k > 0.
  void shorten_by_commuting(const std::string& name, const Word& commuting, std::int64_t bound) {
    auto& w = tracked_.at(name);
    Word best = w;
    for (std::int64_t k = 1; k <= bound; ++k)
      for (std::int64_t s : {k, -k}) {
        Word c = conjugate(w, power(commuting, s));
        if (c.length() < best.length()) best = c;
      }
    w = best;
  }

  std::size_t index_of(const Word& relator) const {
    const auto& rels = p_.relators();
    for (std::size_t i = 0; i < rels.size(); ++i)
      if (rels[i] == relator) return i;
    throw Error(kPresentationModule, "relator " + to_text(relator) + " not present");
  }

 private:
  void log(std::string what) { steps_.push_back({std::move(what), p_}); }

  Presentation p_;
  std::map<std::string, Word> tracked_;
  std::vector<TietzeStep> steps_;
};

}  // namespace tknot
