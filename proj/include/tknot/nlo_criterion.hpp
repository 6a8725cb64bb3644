#pragma once

// Hypothesis checking for the two-generator slope criterion: relators of the
// form (w1 a^m w1^-1) b^-r (w2^-1 a^n w2) b^(r-k), longitudes a^-s w a^-t with
// w free of a^-1 and b^-1, and surgery slopes p/q >= s + t.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tknot/error.hpp"
#include "tknot/presentation.hpp"
#include "tknot/twisted_torus.hpp"
#include "tknot/word.hpp"

namespace tknot {

inline constexpr std::string_view kCriterionModule = "nlo_criterion";

struct ITShape {
  Generator a{"a"};
  Generator b{"b"};
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t k = 0;
  Word w1;
  Word w2;

  Word relator() const {
    return product({conjugate(Word::generator(a, m), w1), Word::generator(b, -r),
                    conjugate(Word::generator(a, n), invert(w2)),
                    Word::generator(b, checked::sub(r, k, kCriterionModule))});
  }

  /// Normal form of the same cyclic relator: a-letters absorbed into the
  /// a-power they conjugate, outer b-runs of w1 and w2 absorbed into r.
  ITShape canonical() const {
    ITShape s = *this;
    if (s.m == 0) s.w1 = {};
    if (s.n == 0) s.w2 = {};
    for (bool changed = true; changed;) {
      changed = false;
      if (s.m != 0 && !s.w1.is_identity() && s.w1.runs().back().gen == a) {
        s.w1 = s.w1 * Word::generator(a, -s.w1.runs().back().exp);
        changed = true;
      }
      if (s.n != 0 && !s.w2.is_identity() && s.w2.runs().front().gen == a) {
        s.w2 = Word::generator(a, -s.w2.runs().front().exp) * s.w2;
        changed = true;
      }
      if (!s.w1.is_identity() && s.w1.runs().front().gen == b) {
        const auto j = s.w1.runs().front().exp;
        s.w1 = Word::generator(b, -j) * s.w1;
        s.r = checked::add(s.r, j, kCriterionModule);
        changed = true;
      }
      if (!s.w2.is_identity() && s.w2.runs().back().gen == b) {
        const auto j = s.w2.runs().back().exp;
        s.w2 = s.w2 * Word::generator(b, -j);
        s.r = checked::add(s.r, j, kCriterionModule);
        changed = true;
      }
    }
    if (s.m == 0 || s.n == 0) s.r = 0;
    return s;
  }

  bool equivalent(const ITShape& other) const { return canonical() == other.canonical(); }

  std::int64_t conjugator_length() const { return w1.length() + w2.length(); }

  friend bool operator==(const ITShape&, const ITShape&) = default;

  friend bool operator<(const ITShape& x, const ITShape& y) {
    auto key = [](const ITShape& s) {
      return std::tuple(s.conjugator_length(), s.a, s.b, s.m, s.n, s.r, s.k);
    };
    if (key(x) != key(y)) return key(x) < key(y);
    if (x.w1 != y.w1) return x.w1 < y.w1;
    return x.w2 < y.w2;
  }
};

namespace detail {

struct Letter {
  int gen;  // 0 = the "a" role, 1 = the "b" role
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

inline Word letters_to_word(const std::vector<Letter>& ls, std::size_t from, std::size_t to,
                            const Generator& a, const Generator& b) {
  std::vector<Run> runs;
  runs.reserve(to - from);
  for (std::size_t i = from; i < to; ++i) runs.push_back({ls[i].gen == 0 ? a : b, ls[i].sign});
  return reduce(runs);
}

struct Block {
  std::int64_t power = 0;
  std::size_t conj_len = 0;  // letters of the conjugator on each side
};

/// Recognizes ls[from, to) as c a^m c^-1 with m > 0 and the conjugator c
/// canonical: its inner end is not an a-letter and its outer end is not a
/// b-letter. The conjugator is read from the `from` end.
inline std::optional<Block> conjugated_a_power(const std::vector<Letter>& ls, std::size_t from, std::size_t to) {
  const std::size_t len = to - from;
  for (std::size_t c = 0; 2 * c < len; ++c) {
    bool ok = true;
    for (std::size_t i = from + c; i < to - c && ok; ++i) ok = ls[i] == Letter{0, 1};
    for (std::size_t i = 0; i < c && ok; ++i) ok = ls[from + i] == inverse(ls[to - 1 - i]);
    if (!ok) continue;
    if (c > 0 && (ls[from + c - 1].gen == 0 || ls[from].gen == 1)) continue;
    return Block{static_cast<std::int64_t>(len - 2 * c), c};
  }
  return std::nullopt;
}

inline std::int64_t b_exponent(const std::vector<Letter>& ls, std::size_t from, std::size_t to) {
  std::int64_t e = 0;
  for (std::size_t i = from; i < to; ++i) e += ls[i].sign;
  return e;
}

inline bool all_b(const std::vector<Letter>& ls, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (ls[i].gen != 1) return false;
  return true;
}

inline void match_cyclic_word(const std::vector<Letter>& t, const Generator& a, const Generator& b,
                              std::set<ITShape>& out) {
  const std::size_t len = t.size();
  auto block_or_empty = [&](std::size_t from, std::size_t to) -> std::optional<Block> {
    if (from == to) return Block{};
    return conjugated_a_power(t, from, to);
  };
  for (std::size_t x_end = 0; x_end <= len; ++x_end) {
    const auto x = block_or_empty(0, x_end);
    if (!x) continue;
    for (std::size_t y_begin = x_end; y_begin <= len && all_b(t, x_end, y_begin); ++y_begin) {
      for (std::size_t y_end = len; y_end >= y_begin; --y_end) {
        if (!all_b(t, y_end, len)) break;
        const auto y = block_or_empty(y_begin, y_end);
        if (y) {
          const std::int64_t r = -b_exponent(t, x_end, y_begin);
          const std::int64_t k = r - b_exponent(t, y_end, len);
          const bool degenerate = x->power == 0 || y->power == 0;
          if (k >= 0 && (!degenerate || r == 0) && (x->power > 0 || y->power > 0)) {
            ITShape s;
            s.a = a;
            s.b = b;
            s.m = x->power;
            s.n = y->power;
            s.r = r;
            s.k = k;
            s.w1 = letters_to_word(t, 0, x->conj_len, a, b);
            s.w2 = letters_to_word(t, y_end - y->conj_len, y_end, a, b);
            out.insert(s);
          }
        }
        if (y_end == y_begin) break;
      }
    }
  }
}

}  // namespace detail

/// Every way of reading the relator, over both generator roles, both
/// orientations and all cyclic rotations, as an instance of the shape with
/// m, n, k >= 0. Shapes are in canonical form, sorted by |w1| + |w2|.
inline std::vector<ITShape> match_it_shape(const Presentation& p) {
  if (p.generators().size() != 2 || p.relators().size() != 1)
    throw Error(kCriterionModule, "shape matching needs exactly 2 generators and 1 relator");
  const Word core = cyclic_reduce(p.relators().front()).core;
  std::set<ITShape> found;
  const auto& gens = p.generators();
  for (int role = 0; role < 2; ++role) {
    const Generator& a = gens[role];
    const Generator& b = gens[1 - role];
    if (core.mentions(a) == false || core.mentions(b) == false) continue;
    for (const Word& oriented : {core, invert(core)}) {
      std::vector<detail::Letter> ls;
      for (const auto& run : oriented.runs()) {
        const int gen = run.gen == a ? 0 : 1;
        const int sign = run.exp > 0 ? 1 : -1;
        for (std::int64_t i = 0; i < (run.exp > 0 ? run.exp : -run.exp); ++i) ls.push_back({gen, sign});
      }
      for (std::size_t s = 0; s < ls.size(); ++s) {
        std::vector<detail::Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(s), ls.end());
        rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(s));
        detail::match_cyclic_word(rot, a, b, found);
      }
    }
  }
  std::set<ITShape> canon;
  for (const auto& s : found) canon.insert(s.canonical());
  return {canon.begin(), canon.end()};
}

/// The decomposition read off the closed-form family relator directly.
inline ITShape family_shape(const TwistParams& p) {
  ITShape s;
  s.m = 1;
  s.n = 1;
  s.r = checked::add(p.u, 1, kCriterionModule);
  s.k = 1;
  s.w1 = family::ba(p.v + 1);
  s.w2 = family::ba(p.v);
  return s;
}

struct LongitudeForm {
  std::int64_t s = 0;
  std::int64_t t = 0;
  Word w;
  bool w_positive = false;

  Word reconstruct(const Generator& a = "a") const {
    return product({Word::generator(a, -s), w, Word::generator(a, -t)});
  }
};

/// Splits x as a^-s w a^-t with w nonempty and neither starting nor ending
/// with an a-run. Missing outer a-runs give s = 0 or t = 0.
inline LongitudeForm parse_longitude(const Word& x, const Generator& a = "a", const Generator& b = "b") {
  for (const auto& g : x.support())
    if (g != a && g != b)
      throw Error(kCriterionModule, "longitude mentions '" + g.name() + "' outside {" + a.name() + ", " +
                                        b.name() + "}");
  auto runs = x.runs();
  LongitudeForm f;
  std::size_t lo = 0;
  std::size_t hi = runs.size();
  if (lo < hi && runs[lo].gen == a) f.s = checked::neg(runs[lo++].exp, kCriterionModule);
  if (lo < hi && runs[hi - 1].gen == a) f.t = checked::neg(runs[--hi].exp, kCriterionModule);
  if (lo >= hi)
    throw Error(kCriterionModule, "not applicable: " + to_text(x) + " has no middle word between a-runs");
  f.w = reduce(std::span<const Run>(runs.data() + lo, hi - lo));
  f.w_positive = is_positive_excluding(f.w, {a, b});
  return f;
}

/// A surgery slope p/q, stored with gcd(|p|, |q|) = 1 and q > 0, or as 1/0.
class Slope {
 public:
  Slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw Error(kCriterionModule, "0/0 is not a slope");
    if (std::gcd(checked::abs(p, kCriterionModule), checked::abs(q, kCriterionModule)) != 1)
      throw Error(kCriterionModule,
                  "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
    if (q < 0) {
      p = checked::neg(p, kCriterionModule);
      q = -q;
    }
    if (q == 0) p = 1;
    p_ = p;
    q_ = q;
  }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }
  /// p/q >= bound, exactly; q must be nonzero.
  bool at_least(std::int64_t bound) const { return p_ >= checked::mul(bound, q_, kCriterionModule); }
  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

enum class Verdict { GuaranteedNonLO, NotApplicable, Unknown };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::GuaranteedNonLO: return "GuaranteedNonLO";
    case Verdict::NotApplicable: return "NotApplicable";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::string reason;  // the first failed hypothesis for NotApplicable
  std::int64_t bound = 0;
};

inline Decision decide(const ITShape& shape, const LongitudeForm& form, const Slope& slope) {
  Decision d;
  d.bound = checked::add(form.s, form.t, kCriterionModule);
  auto not_applicable = [&](std::string why) {
    d.verdict = Verdict::NotApplicable;
    d.reason = std::move(why);
    return d;
  };
  if (shape.m < 0 || shape.n < 0) return not_applicable("m, n must be >= 0");
  if (shape.k < 0) return not_applicable("k must be >= 0");
  if (!form.w_positive) return not_applicable("w not positive");
  if (slope.q() == 0) return not_applicable("q = 0");
  d.verdict = slope.at_least(d.bound) ? Verdict::GuaranteedNonLO : Verdict::Unknown;
  return d;
}

enum class LongitudeChoice { paper, corrected };

inline std::string to_string(LongitudeChoice c) { return c == LongitudeChoice::paper ? "paper" : "corrected"; }

inline LongitudeChoice parse_longitude_choice(std::string_view s) {
  if (s == "paper") return LongitudeChoice::paper;
  if (s == "corrected") return LongitudeChoice::corrected;
  throw Error(kCriterionModule, "longitude must be 'paper' or 'corrected', got '" + std::string(s) + "'");
}

struct CriterionReport {
  TwistParams params;
  Slope slope{1, 0};
  LongitudeChoice choice = LongitudeChoice::paper;
  std::optional<ITShape> shape;
  LongitudeForm form_paper;
  LongitudeForm form_corrected;
  std::int64_t bound_paper = 0;
  std::int64_t bound_corrected = 0;
  Decision decision;
};

inline CriterionReport check_slope(const TwistParams& params, const Slope& slope, LongitudeChoice choice) {
  const auto model = closed_form(params);
  CriterionReport rep;
  rep.params = params;
  rep.slope = slope;
  rep.choice = choice;
  const auto shapes = match_it_shape(model.presentation);
  rep.form_paper = parse_longitude(model.longitude_paper);
  rep.form_corrected = parse_longitude(model.longitude_corrected);
  rep.bound_paper = checked::add(rep.form_paper.s, rep.form_paper.t, kCriterionModule);
  rep.bound_corrected = checked::add(rep.form_corrected.s, rep.form_corrected.t, kCriterionModule);
  if (shapes.empty()) {
    rep.decision = {Verdict::NotApplicable, "relator does not match the shape", 0};
    return rep;
  }
  rep.shape = shapes.front();
  rep.decision =
      decide(*rep.shape, choice == LongitudeChoice::paper ? rep.form_paper : rep.form_corrected, slope);
  return rep;
}

/// Smallest integer slope n/1 with a guaranteed verdict.
inline std::int64_t minimal_integer_bound(const TwistParams& params, LongitudeChoice choice) {
  params.validate();
  if (params.u <= -2) throw Error(kCriterionModule, "u <= -2: w is not positive, the criterion does not apply");
  const auto rep = check_slope(params, Slope(0, 1), choice);
  if (rep.decision.verdict == Verdict::NotApplicable)
    throw Error(kCriterionModule, "criterion not applicable: " + rep.decision.reason);
  const std::int64_t n = rep.decision.bound;
  auto verdict_at = [&](std::int64_t p) { return check_slope(params, Slope(p, 1), choice).decision.verdict; };
  if (verdict_at(n) != Verdict::GuaranteedNonLO || verdict_at(n - 1) != Verdict::Unknown)
    throw Error(kCriterionModule, "bound " + std::to_string(n) + " is not the threshold");
  return n;
}

}  // namespace tknot
