#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "linmonad/field.hpp"
#include "linmonad/matrix.hpp"
#include "linmonad/monomial.hpp"
#include "linmonad/polynomial.hpp"

namespace linmonad {

/// Homogeneous ideal given by generators in a fixed monomial order.
template <Field K>
struct Ideal {
  int nvars;
  FieldInfo<K> field;
  MonomialOrder order;
  std::vector<Polynomial<K>> generators;

  Ideal(std::vector<Polynomial<K>> gens, int nvars_, FieldInfo<K> field_,
        MonomialOrder order_ = MonomialOrder::Grevlex)
      : nvars(nvars_), field(field_), order(order_) {
    for (Polynomial<K>& g : gens) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous())
        throw std::invalid_argument("Ideal: generators must be homogeneous");
      if (g.nvars() != nvars)
        throw std::invalid_argument("Ideal: variable count mismatch");
      generators.push_back(g.with_order(order));
    }
  }
};

namespace detail {

// a -= c * x^shift * g, both sides sorted descending; single merge pass.
template <Field K>
void sub_scaled(std::vector<typename Polynomial<K>::Term>& a, const Polynomial<K>& g,
                const Monomial& shift, const K& c, MonomialOrder order) {
  using Term = typename Polynomial<K>::Term;
  std::vector<Term> out;
  out.reserve(a.size() + g.term_count());
  std::size_t i = 0, j = 0;
  const auto& gt = g.terms();
  while (i < a.size() || j < gt.size()) {
    if (j == gt.size()) {
      out.push_back(std::move(a[i++]));
      continue;
    }
    Monomial gm = gt[j].first * shift;
    if (i == a.size()) {
      K v = -(c * gt[j].second);
      if (!v.is_zero()) out.emplace_back(gm, v);
      ++j;
      continue;
    }
    int cmpres = mono_cmp(a[i].first, gm, order);
    if (cmpres > 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmpres < 0) {
      K v = -(c * gt[j].second);
      if (!v.is_zero()) out.emplace_back(gm, v);
      ++j;
    } else {
      K v = a[i].second - c * gt[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace detail

/// Full normal form of p modulo the (not necessarily reduced) family G.
template <Field K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& G,
                          MonomialOrder order) {
  using Term = typename Polynomial<K>::Term;
  std::vector<Term> work(p.terms().begin(), p.terms().end());
  std::vector<Term> remainder;
  while (!work.empty()) {
    bool reduced = false;
    for (const Polynomial<K>& g : G) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(work.front().first)) {
        K c = work.front().second / g.leading_coeff();
        Monomial shift = work.front().first / g.leading_monomial();
        detail::sub_scaled<K>(work, g, shift, c, order);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(work.front());
      work.erase(work.begin());
    }
  }
  return Polynomial<K>(std::move(remainder), p.nvars(), p.field(), order);
}

/// Reduced Groebner basis: S-polynomials reduce to zero, no leading monomial
/// divides any monomial of another element, leading coefficients are 1. The
/// reduced basis is unique for a fixed order.
template <Field K>
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial<K>> basis, int nvars, FieldInfo<K> field,
                MonomialOrder order)
      : nvars_(nvars), field_(field), order_(order), basis_(std::move(basis)) {}

  int nvars() const { return nvars_; }
  FieldInfo<K> field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Polynomial<K>>& basis() const { return basis_; }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis_.size());
    for (const Polynomial<K>& g : basis_) out.push_back(g.leading_monomial());
    return out;
  }

  Polynomial<K> reduce(const Polynomial<K>& p) const {
    return normal_form(p.with_order(order_), basis_, order_);
  }

  /// Ideal membership via multivariate division.
  bool contains(const Polynomial<K>& p) const { return reduce(p).is_zero(); }

  bool operator==(const GroebnerBasis& o) const { return basis_ == o.basis_; }

 private:
  int nvars_;
  FieldInfo<K> field_;
  MonomialOrder order_;
  std::vector<Polynomial<K>> basis_;
};

namespace detail {

// Homogeneous generators of one common degree span a vector space; replacing
// them by a row-space basis leaves the ideal unchanged and shrinks big minor
// families (e.g. hundreds of dependent cubics) before pair processing.
template <Field K>
std::vector<Polynomial<K>> span_prune(const std::vector<Polynomial<K>>& gens, int nvars,
                                      FieldInfo<K> field, MonomialOrder order) {
  std::map<int, std::vector<const Polynomial<K>*>> by_degree;
  for (const Polynomial<K>& g : gens) by_degree[g.degree()].push_back(&g);
  std::vector<Polynomial<K>> out;
  for (auto& [deg, group] : by_degree) {
    if (group.size() <= 1) {
      for (const Polynomial<K>* g : group) out.push_back(g->monic());
      continue;
    }
    // column space: union of monomials, descending so leading structure survives
    std::vector<Monomial> cols;
    for (const Polynomial<K>* g : group)
      for (const auto& t : g->terms()) cols.push_back(t.first);
    std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) {
      return mono_cmp(a, b, order) > 0;
    });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::map<std::uint64_t, std::size_t> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index[cols[i].pack()] = i;
    Matrix<K> m(group.size(), cols.size(), field);
    for (std::size_t r = 0; r < group.size(); ++r)
      for (const auto& t : group[r]->terms()) m(r, col_index[t.first.pack()]) = t.second;
    auto ech = m.rref();
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) {
      std::vector<typename Polynomial<K>::Term> terms;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!ech.m(r, c).is_zero()) terms.emplace_back(cols[c], ech.m(r, c));
      out.emplace_back(std::move(terms), nvars, field, order);
    }
  }
  return out;
}

inline std::uint64_t pair_key(std::size_t i, std::size_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace detail

/// Buchberger's algorithm with the two standard pair criteria (coprime
/// leading terms; chain criterion), normal selection strategy, and a final
/// interreduction to the unique reduced basis.
template <Field K>
GroebnerBasis<K> buchberger(const Ideal<K>& I) {
  const MonomialOrder order = I.order;
  std::vector<Polynomial<K>> G = detail::span_prune(I.generators, I.nvars, I.field, order);

  struct PairRef {
    Monomial lcm_m;
    int deg;
    std::size_t i, j;
  };
  auto pair_before = [&](const PairRef& a, const PairRef& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = mono_cmp(a.lcm_m, b.lcm_m, order);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<PairRef> queue;
  std::unordered_set<std::uint64_t> pending;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    PairRef p;
    p.lcm_m = lcm(G[i].leading_monomial(), G[j].leading_monomial());
    p.deg = p.lcm_m.degree();
    p.i = i;
    p.j = j;
    queue.push_back(p);
    std::push_heap(queue.begin(), queue.end(),
                   [&](const PairRef& a, const PairRef& b) { return pair_before(b, a); });
    pending.insert(detail::pair_key(i, j));
  };

  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) push_pair(i, j);

  while (!queue.empty()) {
    std::pop_heap(queue.begin(), queue.end(),
                  [&](const PairRef& a, const PairRef& b) { return pair_before(b, a); });
    PairRef p = queue.back();
    queue.pop_back();
    pending.erase(detail::pair_key(p.i, p.j));

    const Monomial& lmi = G[p.i].leading_monomial();
    const Monomial& lmj = G[p.j].leading_monomial();
    if (lmi.coprime_with(lmj)) continue;
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].leading_monomial().divides(p.lcm_m)) continue;
      auto k1 = detail::pair_key(std::min(p.i, k), std::max(p.i, k));
      auto k2 = detail::pair_key(std::min(p.j, k), std::max(p.j, k));
      if (!pending.count(k1) && !pending.count(k2)) chained = true;
    }
    if (chained) continue;

    // S-polynomial, fully reduced
    Polynomial<K> spoly =
        G[p.i].times_term(p.lcm_m / lmi, FieldTraits<K>::one(I.field) / G[p.i].leading_coeff()) -
        G[p.j].times_term(p.lcm_m / lmj, FieldTraits<K>::one(I.field) / G[p.j].leading_coeff());
    Polynomial<K> r = normal_form(spoly, G, order);
    if (r.is_zero()) continue;
    G.push_back(r.monic());
    std::size_t t = G.size() - 1;
    for (std::size_t i = 0; i < t; ++i) push_pair(i, t);
  }

  // minimalize: keep only elements whose leading monomial is not divisible by
  // another survivor's
  std::sort(G.begin(), G.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  std::vector<Polynomial<K>> minimal;
  for (const Polynomial<K>& g : G) {
    bool dominated = false;
    for (const Polynomial<K>& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g);
  }

  // interreduce to the unique reduced basis
  std::vector<Polynomial<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial<K> r = normal_form(minimal[i], others, order);
    assert(!r.is_zero());
    reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return mono_cmp(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  return GroebnerBasis<K>(std::move(reduced), I.nvars, I.field, order);
}

}  // namespace linmonad
