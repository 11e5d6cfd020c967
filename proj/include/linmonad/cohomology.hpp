#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linmonad/errors.hpp"
#include "linmonad/linear_form.hpp"
#include "linmonad/monad.hpp"

namespace linmonad {

/// h^p(E(k)) for the cohomology sheaf E of a valid linear monad, by exact
/// linear algebra on the two kernel-bundle sequences
///   0 -> K(k) -> O(k)^w -> O(k+1)^u -> 0,
///   0 -> O(k-1)^v -> K(k) -> E(k) -> 0,
/// using that line bundles on P^n have cohomology only in degrees 0 and n.
/// With B_k, A_k the section-space matrices of beta (at k) and alpha (at k-1)
/// and B''_k, A''_k their top-cohomology counterparts:
///   h^0 = dim ker B_k - v dim S_{k-1}        (alpha injective on sections)
///   h^1 = dim coker B_k (+ dim ker A''_k when n = 2)
///   h^p = 0 for 2 <= p <= n-2
///   h^{n-1} = dim ker A''_k                  (n >= 3)
///   h^n = dim ker B''_k - rank A''_k
template <Field K>
long long h_p(const ValidatedMonad<K>& vm, int p, int k) {
  const LinearMonad<K>& m = vm.monad();
  const int n = m.n;
  if (n < 2) throw std::invalid_argument("h_p: cohomology formulas need n >= 2");
  if (p < 0 || p > n) throw std::invalid_argument("h_p: degree out of range");

  auto rank_B = [&]() { return static_cast<long long>(multiply_matrix(m.beta, k).rank()); };
  auto rank_A2 = [&]() {
    return static_cast<long long>(serre_multiply_matrix(m.alpha, k - 1).rank());
  };

  if (p == 0) {
    long long ker = m.w * graded_dim(n, k) - rank_B();
    long long h = ker - m.v * graded_dim(n, k - 1);
    assert(h >= 0);
    return h;
  }
  if (p == 1) {
    long long coker = m.u * graded_dim(n, k + 1) - rank_B();
    if (n == 2) coker += m.v * serre_dim(n, k - 1) - rank_A2();
    return coker;
  }
  if (p <= n - 2) return 0;
  if (p == n - 1) return m.v * serre_dim(n, k - 1) - rank_A2();
  // p == n
  long long ker = m.w * serre_dim(n, k) -
                  static_cast<long long>(serre_multiply_matrix(m.beta, k).rank());
  long long h = ker - rank_A2();
  assert(h >= 0);
  return h;
}

/// Twisted cohomology over a window of twists, with the Euler characteristic
/// column and natural-cohomology flags for -n <= k <= -1.
struct CohomologyTable {
  int n = 0;
  int k_min = 0, k_max = 0;
  std::vector<std::vector<long long>> h;  // h[p][k - k_min], 0 <= p <= n
  std::vector<long long> chi;             // chi[k - k_min]
  std::optional<long long> charge;        // set when v = u
  int natural_k_min = 0;                  // flags cover [natural_k_min, natural_k_max]
  int natural_k_max = -1;
  std::vector<bool> natural;              // at most one nonzero h^p in the column

  long long at(int p, int k) const { return h[p][k - k_min]; }
};

template <Field K>
CohomologyTable cohomology_table(const ValidatedMonad<K>& vm, int k_min, int k_max) {
  if (k_min > k_max) throw std::invalid_argument("cohomology_table: empty window");
  const LinearMonad<K>& m = vm.monad();
  const int n = m.n;
  CohomologyTable t;
  t.n = n;
  t.k_min = k_min;
  t.k_max = k_max;
  t.h.assign(n + 1, std::vector<long long>(k_max - k_min + 1, 0));
  t.chi.assign(k_max - k_min + 1, 0);
  for (int k = k_min; k <= k_max; ++k) {
    long long alternating = 0;
    for (int p = 0; p <= n; ++p) {
      long long v = h_p(vm, p, k);
      t.h[p][k - k_min] = v;
      alternating += (p % 2 == 0) ? v : -v;
    }
    t.chi[k - k_min] = euler_characteristic(m, k);
    if (alternating != t.chi[k - k_min])
      throw std::logic_error("cohomology_table: Euler characteristic mismatch at k=" +
                             std::to_string(k));
  }
  if (m.v == m.u) t.charge = charge(m);
  t.natural_k_min = std::max(-n, k_min);
  t.natural_k_max = std::min(-1, k_max);
  for (int k = t.natural_k_min; k <= t.natural_k_max; ++k) {
    int nonzero = 0;
    for (int p = 0; p <= n; ++p)
      if (t.h[p][k - k_min] != 0) ++nonzero;
    t.natural.push_back(nonzero <= 1);
  }
  return t;
}

struct InstantonFailure {
  std::string what;
  std::optional<std::pair<int, int>> pk;  // (p, k) for cohomology failures
  long long value = 0;
};

/// Instanton test: c1 = 0, torsion-free, and the finite list of twisted
/// vanishings; middle degrees 2 <= p <= n-2 vanish for every valid linear
/// monad (a consequence of the two kernel-bundle sequences), so they are
/// recorded as structural rather than searched.
struct InstantonReport {
  bool is_instanton = false;
  long long charge = 0;
  int rank = 0;
  int c1 = 0;
  SheafClass sheaf_class = SheafClass::NotTorsionFree;
  std::vector<std::pair<int, int>> checked;  // the (p,k) vanishings computed
  std::vector<InstantonFailure> failures;
};

template <Field K>
InstantonReport instanton_check(const ValidatedMonad<K>& vm) {
  const LinearMonad<K>& m = vm.monad();
  const int n = m.n;
  if (n < 2) throw std::invalid_argument("instanton_check: needs n >= 2");
  InstantonReport r;
  r.charge = charge(m);
  r.rank = m.rank();
  r.c1 = m.c1();
  r.sheaf_class = classify(vm).sheaf_class;
  if (r.c1 != 0)
    r.failures.push_back({"c1 = " + std::to_string(r.c1) + ", an instanton sheaf needs c1 = 0",
                          std::nullopt, r.c1});
  if (r.sheaf_class == SheafClass::NotTorsionFree)
    r.failures.push_back({"degeneration locus has codimension < 2, sheaf is not torsion-free",
                          std::nullopt, 0});
  std::vector<std::pair<int, int>> conditions = {{0, -1}, {n, -n}};
  if (n >= 3) {
    conditions.push_back({1, -2});
    conditions.push_back({n - 1, 1 - n});
  }
  for (auto [p, k] : conditions) {
    long long v = h_p(vm, p, k);
    r.checked.push_back({p, k});
    if (v != 0)
      r.failures.push_back({"h^" + std::to_string(p) + "(E(" + std::to_string(k) +
                                ")) = " + std::to_string(v) + ", must vanish",
                            std::make_pair(p, k), v});
  }
  r.is_instanton = r.failures.empty();
  return r;
}

/// Section counts feeding the semistability/stability criteria. Definitive
/// verdicts are limited to rank-2 instantons on P^2/P^3; "stable" addition-
/// ally requires local freeness, since only then does the dual monad compute
/// the dual sheaf.
struct StabilityProbe {
  long long h0_E_minus1 = 0;
  long long h0_E = 0;
  std::optional<long long> h0_Edual_minus1;  // locally-free inputs only
  std::optional<long long> h0_Edual;
  long long lower_bound_h0 = 0;  // h^0(E) >= w - u(n+1) via H^0(E) = ker H^0(beta)
  SheafClass sheaf_class = SheafClass::NotTorsionFree;
  bool is_instanton = false;
  bool not_semistable = false;
  bool semistable_verdict = false;
  bool stable_verdict = false;
  bool rank_bound_excludes_stable = false;  // rank > (n-1) * charge forces h^0(E) > 0
  bool non_locally_free_caveat = false;
};

template <Field K>
StabilityProbe stability_probe(const ValidatedMonad<K>& vm) {
  const LinearMonad<K>& m = vm.monad();
  StabilityProbe r;
  r.sheaf_class = classify(vm).sheaf_class;
  r.non_locally_free_caveat = r.sheaf_class != SheafClass::LocallyFree;
  r.h0_E_minus1 = h_p(vm, 0, -1);
  r.h0_E = h_p(vm, 0, 0);
  r.lower_bound_h0 = std::max(0LL, static_cast<long long>(m.w) - m.u * (m.n + 1));
  assert(r.h0_E >= r.lower_bound_h0);
  if (r.sheaf_class == SheafClass::LocallyFree) {
    ValidatedMonad<K> dm(dual(m));
    r.h0_Edual_minus1 = h_p(dm, 0, -1);
    r.h0_Edual = h_p(dm, 0, 0);
  }
  r.is_instanton = instanton_check(vm).is_instanton;
  r.not_semistable = r.h0_E_minus1 > 0 ||
                     (r.h0_Edual_minus1 && *r.h0_Edual_minus1 > 0);
  if (m.v == m.u && m.v > 0)
    r.rank_bound_excludes_stable = m.rank() > (m.n - 1) * m.v;
  bool rank2_small = m.rank() == 2 && (m.n == 2 || m.n == 3);
  r.semistable_verdict = rank2_small && r.is_instanton && !r.not_semistable;
  r.stable_verdict = r.semistable_verdict && r.sheaf_class == SheafClass::LocallyFree &&
                     r.h0_E == 0 && r.h0_Edual && *r.h0_Edual == 0;
  return r;
}

/// Checks h^p(E(k)) = h^{n-p}(E*(-k-n-1)) for all p, computing both sides
/// independently (the right side on the dual monad). Locally-free only.
template <Field K>
bool serre_duality_check(const ValidatedMonad<K>& vm, int k) {
  const LinearMonad<K>& m = vm.monad();
  if (classify(vm).sheaf_class != SheafClass::LocallyFree)
    throw NotLocallyFreeError("serre_duality_check: sheaf is not locally-free");
  ValidatedMonad<K> dm(dual(m));
  for (int p = 0; p <= m.n; ++p)
    if (h_p(vm, p, k) != h_p(dm, m.n - p, -k - m.n - 1)) return false;
  return true;
}

}  // namespace linmonad
