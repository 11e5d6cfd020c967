#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "linmonad/groebner.hpp"
#include "linmonad/monomial.hpp"
#include "linmonad/rational.hpp"

namespace linmonad {

namespace detail {

using ZPoly = std::vector<long long>;  // integer polynomial, coeffs by degree

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

inline ZPoly zp_shift(ZPoly a, int k) {
  if (a.empty()) return a;
  a.insert(a.begin(), k, 0);
  return a;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline long long zp_eval_one(const ZPoly& a) {
  long long s = 0;
  for (long long c : a) s += c;
  return s;
}

// exact quotient by (1 - t); caller guarantees zp_eval_one(a) == 0
inline ZPoly zp_div_one_minus_t(const ZPoly& a) {
  ZPoly q(a.size() ? a.size() - 1 : 0, 0);
  long long carry = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    carry += a[i];
    q[i] = carry;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

inline void minimalize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool dominated = false;
    for (const Monomial& g : out)
      if (g.divides(m)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(m);
  }
  gens = std::move(out);
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of S/(gens), by the
// pivot-variable recursion N(I) = N(I + (x)) + t N(I : x).
inline ZPoly hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  minimalize_monomials(gens);
  if (gens.empty()) return {1};
  if (gens.size() == 1 && gens.front().is_one()) return {};  // unit ideal
  // pure powers of distinct variables: product formula
  bool pure = true;
  for (const Monomial& m : gens)
    if (__builtin_popcount(m.support()) > 1) {
      pure = false;
      break;
    }
  if (pure) {
    ZPoly r = {1};
    for (const Monomial& m : gens) {
      ZPoly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] = -1;
      r = zp_mul(r, f);
    }
    return r;
  }
  // pivot: the variable hitting the most mixed-support generators
  int best_var = -1, best_count = -1;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const Monomial& m : gens)
      if (m.exponent(v) > 0 && __builtin_popcount(m.support()) > 1) ++count;
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }
  Monomial xv = Monomial::variable(best_var, gens.front().nvars());
  std::vector<Monomial> plus;  // I + (x_v)
  plus.push_back(xv);
  for (const Monomial& m : gens)
    if (m.exponent(best_var) == 0) plus.push_back(m);
  std::vector<Monomial> colon;  // I : x_v
  for (const Monomial& m : gens) colon.push_back(m.colon(xv));
  return zp_add(hilbert_numerator(std::move(plus), nvars),
                zp_shift(hilbert_numerator(std::move(colon), nvars), 1));
}

}  // namespace detail

/// Dimension data of the projective locus of an ideal in P^n, n = nvars - 1.
struct DimensionReport {
  int n = 0;                        // ambient projective dimension
  int affine_dim = 0;               // Krull dimension of S/I; -1 for the unit ideal
  bool empty = true;                // projective locus empty (affine_dim <= 0)
  int projective_dim = -1;          // affine_dim - 1, meaningful when !empty
  int codim = 0;                    // n - projective_dim; n + 1 when empty
  std::optional<long long> length;  // constant Hilbert polynomial, projective dim 0 only
};

/// Hilbert polynomial of S/I from the leading-term ideal; coefficients by
/// ascending power, empty vector for the eventually-zero polynomial.
template <Field K>
std::vector<Rational> hilbert_polynomial(const GroebnerBasis<K>& G) {
  detail::ZPoly N = detail::hilbert_numerator(G.leading_monomials(), G.nvars());
  int D = G.nvars();
  while (!N.empty() && detail::zp_eval_one(N) == 0) {
    N = detail::zp_div_one_minus_t(N);
    --D;
  }
  if (N.empty() || D <= 0) return {};
  // HP(T) = sum_i q_i * C(T - i + D - 1, D - 1), expanded with exact arithmetic
  std::vector<Rational> hp(1, Rational(0));
  for (std::size_t i = 0; i < N.size(); ++i) {
    if (N[i] == 0) continue;
    std::vector<Rational> term = {Rational(N[i])};
    for (int j = 0; j < D - 1; ++j) {
      // multiply by (T - i + D - 1 - j) / (j + 1)
      std::vector<Rational> next(term.size() + 1, Rational(0));
      Rational shift(-static_cast<long long>(i) + D - 1 - j);
      Rational inv_j(1, j + 1);
      for (std::size_t d = 0; d < term.size(); ++d) {
        next[d + 1] += term[d] * inv_j;
        next[d] += term[d] * shift * inv_j;
      }
      term = std::move(next);
    }
    if (hp.size() < term.size()) hp.resize(term.size(), Rational(0));
    for (std::size_t d = 0; d < term.size(); ++d) hp[d] += term[d];
  }
  while (!hp.empty() && hp.back().is_zero()) hp.pop_back();
  return hp;
}

/// Affine Krull dimension, combinatorially: the largest set Y of variables
/// such that no leading monomial is supported inside Y; -1 for the unit ideal.
template <Field K>
int affine_dimension(const GroebnerBasis<K>& G) {
  std::vector<Monomial> lms = G.leading_monomials();
  detail::minimalize_monomials(lms);
  std::vector<unsigned> supports;
  for (const Monomial& m : lms) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  const int nv = G.nvars();
  int best = -1;
  for (unsigned y = 0; y < (1u << nv); ++y) {
    bool ok = true;
    for (unsigned s : supports)
      if ((s & ~y) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(y));
  }
  return best;  // the empty set always qualifies unless the ideal is (1)
}

template <Field K>
DimensionReport dimension(const GroebnerBasis<K>& G) {
  DimensionReport r;
  r.n = G.nvars() - 1;
  r.affine_dim = affine_dimension(G);
  r.empty = r.affine_dim <= 0;
  r.projective_dim = r.empty ? -1 : r.affine_dim - 1;
  r.codim = r.empty ? r.n + 1 : r.n - r.projective_dim;
  if (!r.empty && r.projective_dim == 0) {
    std::vector<Rational> hp = hilbert_polynomial(G);
    if (hp.size() != 1)
      throw std::logic_error("dimension: zero-dimensional locus without constant Hilbert polynomial");
    r.length = hp.front().to_int();
  }
  return r;
}

}  // namespace linmonad
