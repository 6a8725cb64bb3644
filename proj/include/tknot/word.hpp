#pragma once

// Free-group word algebra. A Word is kept in run-length freely reduced
// normal form at all times, so equality of group elements of the free group
// is plain structural equality.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tknot/error.hpp"

namespace tknot {

inline constexpr std::string_view kWordModule = "word_core";

/// A named free generator. Names are case-sensitive and compared exactly.
class Generator {
 public:
  Generator() = default;
  explicit Generator(std::string name) : name_(std::move(name)) {
    if (name_.empty()) throw Error(kWordModule, "generator name must be nonempty");
  }
  Generator(const char* name) : Generator(std::string(name)) {}  // NOLINT: literal convenience

  const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  std::string name_;
};

/// One run g^e of a word; e != 0 inside a reduced Word.
struct Run {
  Generator gen;
  std::int64_t exp = 1;

  friend bool operator==(const Run&, const Run&) = default;
};

class Word;
Word reduce(std::span<const Run> letters);

class Word {
 public:
  Word() = default;

  /// Builds the reduced word of the given sequence, e.g. Word{{"b",1},{"a",-2}}.
  Word(std::initializer_list<std::pair<const char*, std::int64_t>> letters) {
    std::vector<Run> runs;
    runs.reserve(letters.size());
    for (const auto& [name, e] : letters) runs.push_back({Generator(name), e});
    *this = reduce(runs);
  }

  static Word generator(const Generator& g, std::int64_t e = 1) {
    Word w;
    if (e != 0) w.runs_.push_back({g, e});
    return w;
  }

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool is_identity() const noexcept { return runs_.empty(); }
  std::size_t run_count() const noexcept { return runs_.size(); }

  /// Number of letters, i.e. the sum of |exponent| over runs.
  std::int64_t length() const {
    std::int64_t n = 0;
    for (const auto& r : runs_) n = checked::add(n, checked::abs(r.exp, kWordModule), kWordModule);
    return n;
  }

  bool mentions(const Generator& g) const {
    return std::any_of(runs_.begin(), runs_.end(), [&](const Run& r) { return r.gen == g; });
  }

  std::set<Generator> support() const {
    std::set<Generator> s;
    for (const auto& r : runs_) s.insert(r.gen);
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& x, const Word& y) {
    return std::lexicographical_compare(
        x.runs_.begin(), x.runs_.end(), y.runs_.begin(), y.runs_.end(),
        [](const Run& l, const Run& r) { return l.gen != r.gen ? l.gen < r.gen : l.exp < r.exp; });
  }

 private:
  friend Word reduce(std::span<const Run> letters);
  std::vector<Run> runs_;
};

/// Free reduction with a stack of runs. Zero exponents are dropped.
inline Word reduce(std::span<const Run> letters) {
  Word w;
  auto& out = w.runs_;
  for (const auto& run : letters) {
    if (run.exp == 0) continue;
    if (!out.empty() && out.back().gen == run.gen) {
      std::int64_t e = checked::add(out.back().exp, run.exp, kWordModule);
      if (e == 0) {
        out.pop_back();
      } else {
        out.back().exp = e;
      }
    } else {
      out.push_back(run);
    }
  }
  return w;
}

inline Word multiply(const Word& x, const Word& y) {
  std::vector<Run> seq;
  seq.reserve(x.runs().size() + y.runs().size());
  seq.insert(seq.end(), x.runs().begin(), x.runs().end());
  seq.insert(seq.end(), y.runs().begin(), y.runs().end());
  return reduce(seq);
}

inline Word operator*(const Word& x, const Word& y) { return multiply(x, y); }

inline Word invert(const Word& x) {
  std::vector<Run> seq;
  seq.reserve(x.runs().size());
  for (auto it = x.runs().rbegin(); it != x.runs().rend(); ++it)
    seq.push_back({it->gen, checked::neg(it->exp, kWordModule)});
  return reduce(seq);
}

/// by * x * by^-1
inline Word conjugate(const Word& x, const Word& by) { return by * x * invert(by); }

inline Word power(const Word& x, std::int64_t n) {
  if (n == 0 || x.is_identity()) return {};
  if (x.run_count() == 1) {
    const auto& r = x.runs().front();
    return Word::generator(r.gen, checked::mul(r.exp, n, kWordModule));
  }
  Word base = n < 0 ? invert(x) : x;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Word acc;
  while (k > 0) {
    if (k & 1U) acc = acc * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return acc;
}

/// Product of the given words, left to right.
inline Word product(std::initializer_list<Word> factors) {
  std::vector<Run> seq;
  for (const auto& f : factors) seq.insert(seq.end(), f.runs().begin(), f.runs().end());
  return reduce(seq);
}

using SubstitutionMap = std::map<Generator, Word>;

/// Image of x under the homomorphism induced by `images`, which must be
/// defined on every generator occurring in x.
inline Word substitute(const Word& x, const SubstitutionMap& images) {
  std::vector<Run> seq;
  for (const auto& run : x.runs()) {
    auto it = images.find(run.gen);
    if (it == images.end())
      throw Error(kWordModule, "substitution is not defined on generator '" + run.gen.name() + "'");
    Word img = power(it->second, run.exp);
    seq.insert(seq.end(), img.runs().begin(), img.runs().end());
  }
  return reduce(seq);
}

/// Replaces g by `image` and leaves every other generator fixed.
inline Word rewrite(const Word& x, const Generator& g, const Word& image) {
  if (!x.mentions(g)) return x;
  std::vector<Run> seq;
  for (const auto& run : x.runs()) {
    if (run.gen == g) {
      Word img = power(image, run.exp);
      seq.insert(seq.end(), img.runs().begin(), img.runs().end());
    } else {
      seq.push_back(run);
    }
  }
  return reduce(seq);
}

/// Composition: the map sending g to substitute(first[g], second).
inline SubstitutionMap compose(const SubstitutionMap& first, const SubstitutionMap& second) {
  SubstitutionMap out;
  for (const auto& [g, w] : first) out.emplace(g, substitute(w, second));
  return out;
}

struct CyclicReduction {
  Word core;
  Word conjugator;  // x == conjugator * core * conjugator^-1
};

inline CyclicReduction cyclic_reduce(const Word& x) {
  std::vector<Run> runs = x.runs();
  std::vector<Run> conj;
  std::size_t lo = 0;
  std::size_t hi = runs.size();
  while (hi - lo >= 2 && runs[lo].gen == runs[hi - 1].gen) {
    const Run first = runs[lo];
    const Run last = runs[hi - 1];
    std::int64_t sum = checked::add(first.exp, last.exp, kWordModule);
    conj.push_back(first);
    if (sum == 0) {
      ++lo;
      --hi;
      continue;
    }
    // g^e1 M g^e2 = g^e1 (M g^(e1+e2)) g^-e1
    ++lo;
    runs[hi - 1].exp = sum;
    break;
  }
  std::vector<Run> core(runs.begin() + static_cast<std::ptrdiff_t>(lo),
                        runs.begin() + static_cast<std::ptrdiff_t>(hi));
  return {reduce(core), reduce(conj)};
}

inline bool is_cyclically_reduced(const Word& x) {
  const auto& r = x.runs();
  return r.size() < 2 || r.front().gen != r.back().gen;
}

namespace detail {

/// Returns k such that rotating `b` left by k runs gives `a`, or -1.
inline std::ptrdiff_t run_rotation_offset(const std::vector<Run>& a, const std::vector<Run>& b) {
  if (a.size() != b.size()) return -1;
  const std::size_t n = a.size();
  if (n == 0) return 0;
  for (std::size_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + k) % n];
    if (ok) return static_cast<std::ptrdiff_t>(k);
  }
  return -1;
}

}  // namespace detail

/// Free-group conjugacy: cyclically reduced cores must be cyclic rotations
/// of one another. Cores with distinct first and last generators rotate at
/// run granularity, so the scan is over runs rather than letters.
inline bool is_conjugate(const Word& x, const Word& y) {
  const Word cx = cyclic_reduce(x).core;
  const Word cy = cyclic_reduce(y).core;
  return detail::run_rotation_offset(cx.runs(), cy.runs()) >= 0;
}

/// Conjugate to y or to y^-1.
inline bool is_conjugate_up_to_inverse(const Word& x, const Word& y) {
  return is_conjugate(x, y) || is_conjugate(x, invert(y));
}

/// If y is conjugate to x, returns some c with c * x * c^-1 == y.
inline std::pair<bool, Word> conjugator_between(const Word& x, const Word& y) {
  const auto rx = cyclic_reduce(x);
  const auto ry = cyclic_reduce(y);
  const auto& a = ry.core.runs();
  const auto& b = rx.core.runs();
  const auto k = detail::run_rotation_offset(a, b);
  if (k < 0) return {false, {}};
  // core_y = rotate_k(core_x) = P^-1 core_x P with P the first k runs of core_x
  std::vector<Run> prefix(b.begin(), b.begin() + k);
  const Word p = reduce(prefix);
  // y = cy core_y cy^-1 = cy P^-1 cx^-1 x cx P cy^-1
  const Word c = ry.conjugator * invert(p) * invert(rx.conjugator);
  return {true, c};
}

inline std::int64_t exponent_sum(const Word& x, const Generator& g) {
  std::int64_t s = 0;
  for (const auto& r : x.runs())
    if (r.gen == g) s = checked::add(s, r.exp, kWordModule);
  return s;
}

/// True iff no run of x has a negative exponent on a generator in
/// `forbidden_inverses` (the set {a, b} stands for "excludes a^-1 and b^-1").
inline bool is_positive_excluding(const Word& x, const std::set<Generator>& forbidden_inverses) {
  return std::none_of(x.runs().begin(), x.runs().end(), [&](const Run& r) {
    return r.exp < 0 && forbidden_inverses.count(r.gen) > 0;
  });
}

/// Rotation of a cyclically reduced word by `letters` letters to the left,
/// as a reduced word (runs split at the cut are merged around the seam).
inline Word rotate_letters(const Word& x, std::int64_t letters) {
  const std::int64_t n = x.length();
  if (n == 0) return x;
  std::int64_t k = ((letters % n) + n) % n;
  std::vector<Run> head;
  std::vector<Run> tail;
  for (const auto& r : x.runs()) {
    const std::int64_t len = r.exp < 0 ? -r.exp : r.exp;
    const std::int64_t sgn = r.exp < 0 ? -1 : 1;
    if (k >= len) {
      head.push_back(r);
      k -= len;
    } else if (k > 0) {
      head.push_back({r.gen, sgn * k});
      tail.push_back({r.gen, sgn * (len - k)});
      k = 0;
    } else {
      tail.push_back(r);
    }
  }
  tail.insert(tail.end(), head.begin(), head.end());
  return reduce(tail);
}

/// Plain-text rendering, e.g. "b a b^-2 a"; the identity renders as "1".
inline std::string to_text(const Word& x) {
  if (x.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& r : x.runs()) {
    if (!first) os << ' ';
    first = false;
    os << r.gen.name();
    if (r.exp != 1) os << '^' << r.exp;
  }
  return os.str();
}

/// Inverse of to_text. Tokens are separated by whitespace; "1" is the identity.
inline Word parse_word(std::string_view text) {
  std::vector<Run> seq;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    auto caret = tok.find('^');
    std::string name = tok.substr(0, caret);
    std::int64_t e = 1;
    if (caret != std::string::npos) {
      const std::string num = tok.substr(caret + 1);
      std::size_t used = 0;
      try {
        e = std::stoll(num, &used);
      } catch (const std::exception&) {
        throw Error(kWordModule, "bad exponent in token '" + tok + "'");
      }
      if (used != num.size()) throw Error(kWordModule, "bad exponent in token '" + tok + "'");
    }
    if (name.empty()) throw Error(kWordModule, "empty generator name in token '" + tok + "'");
    seq.push_back({Generator(name), e});
  }
  return reduce(seq);
}

}  // namespace tknot
