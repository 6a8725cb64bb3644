#pragma once

// Fox calculus over Z[t, t^-1] and the Alexander polynomial of a
// deficiency-one knot-group presentation.

#include <cstdint>
#include <map>
#include <vector>

#include "tknot/homology.hpp"
#include "tknot/laurent.hpp"
#include "tknot/presentation.hpp"

namespace tknot {

/// Exponent of t that each generator maps to under abelianization onto Z.
using AbelianWeights = std::map<Generator, std::int64_t>;

/// Weights of the abelianization H1 = Z, meridian direction positive.
inline AbelianWeights abelian_weights(const Presentation& p) {
  AbelianizationMap phi(p);
  if (phi.free_rank() != 1 || !phi.torsion_orders().empty())
    throw Error(kPresentationModule, "Alexander polynomial needs H1 = Z");
  AbelianWeights w;
  for (const auto& g : p.generators()) w[g] = phi(Word::generator(g)).free.front();
  return w;
}

/// Image of the Fox derivative d(word)/d(wrt) in Z[t, t^-1].
inline LaurentPolynomial fox_derivative(const Word& word, const Generator& wrt, const AbelianWeights& weights) {
  LaurentPolynomial out;
  std::int64_t prefix = 0;
  for (const auto& run : word.runs()) {
    auto it = weights.find(run.gen);
    if (it == weights.end()) throw Error(kPresentationModule, "no weight for '" + run.gen.name() + "'");
    const std::int64_t step = it->second;
    const std::int64_t n = run.exp < 0 ? -run.exp : run.exp;
    for (std::int64_t i = 0; i < n; ++i) {
      if (run.exp > 0) {
        if (run.gen == wrt) out.add_term(prefix, 1);
        prefix = checked::add(prefix, step, kPresentationModule);
      } else {
        prefix = checked::sub(prefix, step, kPresentationModule);
        if (run.gen == wrt) out.add_term(prefix, -1);
      }
    }
  }
  return out;
}

/// Fraction-free (Bareiss) determinant over the integral domain Z[t, t^-1].
inline LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial::constant(1);
  LaurentPolynomial sign = LaurentPolynomial::constant(1);
  LaurentPolynomial prev = LaurentPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Alexander polynomial of a presentation with n generators, n - 1 relators
/// and H1 = Z, normalized to lowest exponent 0 and positive leading
/// coefficient. Deleting the column of a generator x of weight e gives a
/// minor equal to Delta * (t^e - 1) / (t - 1) up to units.
inline LaurentPolynomial alexander_polynomial(const Presentation& p) {
  const std::size_t n = p.generators().size();
  if (n == 0 || p.relators().size() + 1 != n)
    throw Error(kPresentationModule, "Alexander polynomial needs a deficiency-one presentation");
  const auto weights = abelian_weights(p);
  std::size_t drop = n;
  for (std::size_t j = 0; j < n; ++j)
    if (weights.at(p.generators()[j]) != 0) {
      drop = j;
      break;
    }
  if (drop == n) throw Error(kPresentationModule, "every generator is null-homologous");
  std::vector<std::vector<LaurentPolynomial>> minor;
  for (const auto& r : p.relators()) {
    std::vector<LaurentPolynomial> row;
    for (std::size_t j = 0; j < n; ++j)
      if (j != drop) row.push_back(fox_derivative(r, p.generators()[j], weights));
    minor.push_back(std::move(row));
  }
  const std::int64_t e = weights.at(p.generators()[drop]);
  const auto t_minus_1 = LaurentPolynomial::monomial(1, 1) - LaurentPolynomial::constant(1);
  const auto te_minus_1 = LaurentPolynomial::monomial(1, e) - LaurentPolynomial::constant(1);
  const auto delta = exact_divide(determinant(std::move(minor)) * t_minus_1, te_minus_1);
  return delta.normalized();
}

}  // namespace tknot
