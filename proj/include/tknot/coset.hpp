#pragma once

// Todd-Coxeter enumeration of the cosets of the trivial subgroup, HLT
// strategy: relators are traced from each live coset in turn, defining new
// cosets whenever a trace gets stuck.

#include <cstdint>
#include <string>
#include <vector>

#include "tknot/error.hpp"
#include "tknot/nlo_criterion.hpp"
#include "tknot/presentation.hpp"
#include "tknot/twisted_torus.hpp"

namespace tknot {

inline constexpr std::string_view kCosetModule = "coset_oracle";
inline constexpr std::int64_t kDefaultMaxCosets = 1'000'000;

/// The model's group with the relator meridian^p * longitude^q added.
inline Presentation surgered_presentation(const KnotGroupModel& model, const Slope& slope, LongitudeChoice choice) {
  const Word& lon = choice == LongitudeChoice::paper ? model.longitude_paper : model.longitude_corrected;
  const Word filling = power(model.meridian, slope.p()) * power(lon, slope.q());
  return add_relators(model.presentation, {filling});
}

struct EnumerationResult {
  bool finished = false;
  std::int64_t order = 0;  // live cosets when finished
  std::int64_t limit = 0;
  std::int64_t cosets_defined = 0;
  std::uint64_t trace_hash = 0;
  std::string strategy = "HLT";
};

namespace detail {

class CosetTable {
 public:
  CosetTable(const Presentation& p, std::int64_t limit) : cols_(2 * p.generators().size()), limit_(limit) {
    for (const auto& r : p.relators()) {
      const Word core = cyclic_reduce(r).core;
      if (core.is_identity()) continue;
      std::vector<int> letters;
      for (const auto& run : core.runs()) {
        const int col = 2 * static_cast<int>(p.index_of(run.gen)) + (run.exp > 0 ? 0 : 1);
        for (std::int64_t i = 0; i < (run.exp > 0 ? run.exp : -run.exp); ++i) letters.push_back(col);
      }
      relators_.push_back(std::move(letters));
    }
  }

  EnumerationResult run() {
    new_coset();
    live_ = 1;
    for (std::int64_t c = 0; c < defined_ && !exceeded_; ++c) {
      for (const auto& rel : relators_) {
        if (!alive(c) || exceeded_) break;
        scan_and_fill(c, rel);
      }
      for (int x = 0; x < cols_ && alive(c) && !exceeded_; ++x)
        if (at(c, x) < 0) define(c, x);
    }
    EnumerationResult res;
    res.limit = limit_;
    res.cosets_defined = defined_;
    res.finished = !exceeded_;
    res.order = exceeded_ ? 0 : live_;
    mix(res.finished ? 1u : 0u);
    mix(static_cast<std::uint64_t>(res.order));
    res.trace_hash = hash_;
    return res;
  }

 private:
  static int inv(int x) { return x ^ 1; }
  std::int64_t& at(std::int64_t c, int x) { return table_[static_cast<std::size_t>(c * cols_ + x)]; }
  bool alive(std::int64_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  void mix(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (v >> (8 * i)) & 0xffu;
      hash_ *= 1099511628211ull;
    }
  }

  std::int64_t new_coset() {
    const std::int64_t d = defined_++;
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    parent_.push_back(d);
    return d;
  }

  void define(std::int64_t c, int x) {
    if (defined_ >= limit_) {
      exceeded_ = true;
      return;
    }
    const std::int64_t d = new_coset();
    ++live_;
    at(c, x) = d;
    at(d, inv(x)) = c;
    mix(static_cast<std::uint64_t>(c) * 64 + static_cast<std::uint64_t>(x));
  }

  void scan_and_fill(std::int64_t alpha, const std::vector<int>& w) {
    std::int64_t f = alpha;
    std::int64_t b = alpha;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= i && at(b, inv(w[j])) >= 0) b = at(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        return;
      }
      define(f, w[i]);
      if (exceeded_) return;
    }
  }

  std::int64_t rep(std::int64_t c) {
    std::int64_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const std::int64_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(std::int64_t x, std::int64_t y) {
    x = rep(x);
    y = rep(y);
    if (x == y) return;
    if (y < x) std::swap(x, y);
    parent_[static_cast<std::size_t>(y)] = x;
    --live_;
    queue_.push_back(y);
    mix(0xC0FFEEull ^ (static_cast<std::uint64_t>(x) << 20) ^ static_cast<std::uint64_t>(y));
  }

  void coincidence(std::int64_t x, std::int64_t y) {
    queue_.clear();
    merge(x, y);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::int64_t g = queue_[qi];
      for (int col = 0; col < cols_; ++col) {
        const std::int64_t d = at(g, col);
        if (d < 0) continue;
        at(d, inv(col)) = -1;
        const std::int64_t mu = rep(g);
        const std::int64_t nu = rep(d);
        if (at(mu, col) >= 0) {
          merge(nu, at(mu, col));
        } else if (at(nu, inv(col)) >= 0) {
          merge(mu, at(nu, inv(col)));
        } else {
          at(mu, col) = nu;
          at(nu, inv(col)) = mu;
        }
      }
    }
  }

  int cols_;
  std::int64_t limit_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> queue_;
  std::int64_t defined_ = 0;
  std::int64_t live_ = 0;
  bool exceeded_ = false;
  std::uint64_t hash_ = 14695981039346656037ull;
};

}  // namespace detail

/// Deterministic for a given presentation and limit. Running past the limit
/// is reported through `finished == false`, not thrown.
inline EnumerationResult todd_coxeter(const Presentation& p, std::int64_t max_cosets = kDefaultMaxCosets) {
  if (max_cosets < 1) throw Error(kCosetModule, "max_cosets must be >= 1");
  if (p.generators().empty()) {
    EnumerationResult r;
    r.finished = true;
    r.order = 1;
    r.limit = max_cosets;
    r.cosets_defined = 1;
    return r;
  }
  return detail::CosetTable(p, max_cosets).run();
}

}  // namespace tknot
