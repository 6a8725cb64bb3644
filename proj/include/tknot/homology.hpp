#pragma once

// Abelianization of a finite presentation via the Smith normal form of its
// exponent-sum matrix. All arithmetic is checked int64.

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "tknot/error.hpp"
#include "tknot/presentation.hpp"

namespace tknot {

inline constexpr std::string_view kHomologyModule = "presentations";

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithForm {
  IntMatrix diagonal;  // same shape as the input; nonzero only on the diagonal
  IntMatrix column_ops;  // V with U * A * V == diagonal
  std::size_t rank = 0;
  std::vector<std::int64_t> invariant_factors;  // the first `rank` diagonal entries, d1 | d2 | ...
};

namespace detail {

inline void add_row_multiple(IntMatrix& a, std::size_t dst, std::size_t src, std::int64_t q) {
  for (std::size_t j = 0; j < a[dst].size(); ++j)
    a[dst][j] = checked::sub(a[dst][j], checked::mul(q, a[src][j], kHomologyModule), kHomologyModule);
}

inline void add_col_multiple(IntMatrix& a, std::size_t dst, std::size_t src, std::int64_t q) {
  for (auto& row : a)
    row[dst] = checked::sub(row[dst], checked::mul(q, row[src], kHomologyModule), kHomologyModule);
}

inline void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}

}  // namespace detail

/// Smith normal form. Pivots are chosen as the entry of smallest nonzero
/// absolute value in the remaining block, ties broken by row-major position.
inline SmithForm smith_normal_form(IntMatrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  for (const auto& r : a)
    if (r.size() != cols) throw Error(kHomologyModule, "ragged matrix");
  IntMatrix v(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    auto pick_pivot = [&](std::size_t& pr, std::size_t& pc) {
      bool found = false;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0) {
            std::int64_t m = checked::abs(a[i][j], kHomologyModule);
            if (!found || m < best) {
              found = true;
              best = m;
              pr = i;
              pc = j;
            }
          }
      return found;
    };
    std::size_t pr = 0;
    std::size_t pc = 0;
    if (!pick_pivot(pr, pc)) break;

    while (true) {
      std::swap(a[t], a[pr]);
      detail::swap_cols(a, t, pc);
      detail::swap_cols(v, t, pc);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        detail::add_row_multiple(a, i, t, a[i][t] / a[t][t]);
        dirty = dirty || a[i][t] != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const std::int64_t q = a[t][j] / a[t][t];
        detail::add_col_multiple(a, j, t, q);
        detail::add_col_multiple(v, j, t, q);
        dirty = dirty || a[t][j] != 0;
      }
      if (dirty) {
        // a remainder smaller than the pivot survived; it becomes the pivot
        std::int64_t best = checked::abs(a[t][t], kHomologyModule);
        pr = t;
        pc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && checked::abs(a[i][t], kHomologyModule) < best) {
            best = checked::abs(a[i][t], kHomologyModule);
            pr = i;
            pc = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && checked::abs(a[t][j], kHomologyModule) < best) {
            best = checked::abs(a[t][j], kHomologyModule);
            pr = t;
            pc = j;
          }
        continue;
      }
      // row and column are clear; enforce divisibility on the remaining block
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      detail::add_row_multiple(a, t, bad_row, -1);
      pr = t;
      pc = t;
    }
    if (a[t][t] < 0)
      for (auto& x : a[t]) x = checked::neg(x, kHomologyModule);
  }

  SmithForm f;
  f.rank = t;
  for (std::size_t i = 0; i < t; ++i) f.invariant_factors.push_back(a[i][i]);
  f.diagonal = std::move(a);
  f.column_ops = std::move(v);
  return f;
}

/// Relators x generators exponent-sum matrix.
inline IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m;
  for (const auto& r : p.relators()) {
    std::vector<std::int64_t> row(p.generators().size(), 0);
    for (const auto& run : r.runs()) {
      auto& cell = row[p.index_of(run.gen)];
      cell = checked::add(cell, run.exp, kHomologyModule);
    }
    m.push_back(std::move(row));
  }
  return m;
}

struct HomologySummary {
  std::vector<std::int64_t> torsion_orders;  // invariant factors > 1
  std::int64_t free_rank = 0;

  bool is_integers() const { return free_rank == 1 && torsion_orders.empty(); }
  /// |H1| when finite, 0 when infinite.
  std::int64_t order() const {
    if (free_rank > 0) return 0;
    std::int64_t n = 1;
    for (auto d : torsion_orders) n = checked::mul(n, d, kHomologyModule);
    return n;
  }

  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

inline HomologySummary homology(const Presentation& p) {
  const auto snf = smith_normal_form(relation_matrix(p), p.generators().size());
  HomologySummary h;
  for (auto d : snf.invariant_factors)
    if (d > 1) h.torsion_orders.push_back(d);
  h.free_rank = static_cast<std::int64_t>(p.generators().size() - snf.rank);
  return h;
}

/// Coordinates of an element of H1 in the Smith basis: one residue per
/// torsion factor and one integer per free summand.
struct H1Class {
  std::vector<std::int64_t> torsion;  // residues in [0, d_i)
  std::vector<std::int64_t> free;

  bool is_zero() const {
    for (auto x : torsion)
      if (x != 0) return false;
    for (auto x : free)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const H1Class&, const H1Class&) = default;
};

/// The abelianization map written in the Smith basis. Each free basis vector
/// is oriented so that the first generator with a nonzero coordinate on it
/// has a positive one; for a knot group this makes a meridian map to +1.
class AbelianizationMap {
 public:
  explicit AbelianizationMap(const Presentation& p) : p_(p) {
    const auto snf = smith_normal_form(relation_matrix(p), p.generators().size());
    v_ = snf.column_ops;
    const std::size_t n = p.generators().size();
    for (std::size_t i = 0; i < snf.rank; ++i)
      if (snf.invariant_factors[i] > 1) {
        torsion_cols_.push_back(i);
        torsion_orders_.push_back(snf.invariant_factors[i]);
      }
    for (std::size_t j = snf.rank; j < n; ++j) {
      free_cols_.push_back(j);
      for (std::size_t g = 0; g < n; ++g) {
        if (v_[g][j] == 0) continue;
        if (v_[g][j] < 0)
          for (std::size_t r = 0; r < n; ++r) v_[r][j] = checked::neg(v_[r][j], kHomologyModule);
        break;
      }
    }
  }

  H1Class operator()(const Word& x) const {
    p_.require_declared(x);
    std::vector<std::int64_t> c(p_.generators().size(), 0);
    for (const auto& run : x.runs()) {
      auto& cell = c[p_.index_of(run.gen)];
      cell = checked::add(cell, run.exp, kHomologyModule);
    }
    auto coord = [&](std::size_t col) {
      std::int64_t s = 0;
      for (std::size_t g = 0; g < c.size(); ++g)
        s = checked::add(s, checked::mul(c[g], v_[g][col], kHomologyModule), kHomologyModule);
      return s;
    };
    H1Class out;
    for (std::size_t i = 0; i < torsion_cols_.size(); ++i) {
      const std::int64_t d = torsion_orders_[i];
      out.torsion.push_back(((coord(torsion_cols_[i]) % d) + d) % d);
    }
    for (auto col : free_cols_) out.free.push_back(coord(col));
    return out;
  }

  const std::vector<std::int64_t>& torsion_orders() const { return torsion_orders_; }
  std::size_t free_rank() const { return free_cols_.size(); }

 private:
  Presentation p_;
  IntMatrix v_;
  std::vector<std::size_t> torsion_cols_;
  std::vector<std::int64_t> torsion_orders_;
  std::vector<std::size_t> free_cols_;
};

inline H1Class class_in_h1(const Presentation& p, const Word& x) { return AbelianizationMap(p)(x); }

/// For presentations with H1 = Z: the integer class of x.
inline std::int64_t integer_class(const Presentation& p, const Word& x) {
  AbelianizationMap phi(p);
  if (phi.free_rank() != 1 || !phi.torsion_orders().empty())
    throw Error(kHomologyModule, "integer_class needs H1 = Z");
  return phi(x).free.front();
}

}  // namespace tknot
