#pragma once

#include <cassert>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "linmonad/errors.hpp"
#include "linmonad/field.hpp"
#include "linmonad/groebner.hpp"
#include "linmonad/hilbert.hpp"
#include "linmonad/linear_form.hpp"
#include "linmonad/matrix.hpp"

namespace linmonad {

/// The datum of a linear monad on P^n:
///   0 -> V (x) O(-1) --alpha--> W (x) O --beta--> U (x) O(1) -> 0
/// with dim V = v, dim W = w, dim U = u, alpha a w x v matrix of linear
/// forms and beta u x w.
template <Field K>
struct LinearMonad {
  int n;
  FieldInfo<K> field;
  int v, w, u;
  LinearFormMatrix<K> alpha;
  LinearFormMatrix<K> beta;

  LinearMonad(int n_, FieldInfo<K> field_, int v_, int w_, int u_,
              LinearFormMatrix<K> alpha_, LinearFormMatrix<K> beta_)
      : n(n_), field(field_), v(v_), w(w_), u(u_),
        alpha(std::move(alpha_)), beta(std::move(beta_)) {
    if (n < 1 || v < 0 || u < 0 || w < 1)
      throw DimensionMismatchError("monad: need n >= 1, w >= 1, v,u >= 0");
    if (alpha.rows() != static_cast<std::size_t>(w) ||
        alpha.cols() != static_cast<std::size_t>(v) || alpha.n() != n)
      throw DimensionMismatchError("monad: alpha must be w x v on P^n");
    if (beta.rows() != static_cast<std::size_t>(u) ||
        beta.cols() != static_cast<std::size_t>(w) || beta.n() != n)
      throw DimensionMismatchError("monad: beta must be u x w on P^n");
  }

  int rank() const { return w - v - u; }
  int c1() const { return v - u; }

  bool operator==(const LinearMonad& o) const {
    return n == o.n && v == o.v && w == o.w && u == o.u && alpha == o.alpha && beta == o.beta;
  }
};

struct ValidationReport {
  bool complex_ok = false;                  // beta.alpha = 0 on coefficients
  bool beta_surjective = false;             // u x u minors of beta have empty locus
  bool alpha_generically_injective = false; // some v x v minor of alpha is nonzero
  DimensionReport beta_locus;

  bool valid() const { return complex_ok && beta_surjective && alpha_generically_injective; }
};

/// Checks the three monad axioms exactly: the complex condition on
/// coefficients, fiberwise surjectivity of beta (empty degeneration locus of
/// its maximal minors), and generic injectivity of alpha.
template <Field K>
ValidationReport validate(const LinearMonad<K>& m) {
  ValidationReport r;
  r.complex_ok = composition_is_zero(m.beta, m.alpha);
  if (m.u > m.w) {
    // more targets than sources: the fiberwise rank is short everywhere
    r.beta_surjective = false;
    r.beta_locus.n = m.n;
    r.beta_locus.affine_dim = m.n + 1;
    r.beta_locus.empty = false;
    r.beta_locus.projective_dim = m.n;
    r.beta_locus.codim = 0;
  } else {
    Ideal<K> bi(minors(m.beta, m.u), m.n + 1, m.field);
    r.beta_locus = dimension(buchberger(bi));
    r.beta_surjective = r.beta_locus.empty;
  }
  r.alpha_generically_injective = m.v == 0 || (m.v <= m.w && has_nonzero_minor(m.alpha, m.v));
  return r;
}

/// A monad together with a proof that validate() passed; the precondition
/// carrier for classification and cohomology.
template <Field K>
class ValidatedMonad {
 public:
  explicit ValidatedMonad(LinearMonad<K> m) : m_(std::move(m)), rep_(validate(m_)) {
    if (!rep_.valid()) {
      std::string what = "invalid monad:";
      if (!rep_.complex_ok) what += " beta.alpha != 0;";
      if (!rep_.beta_surjective) what += " beta not fiberwise surjective;";
      if (!rep_.alpha_generically_injective) what += " alpha not generically injective;";
      throw InvalidMonadError(what);
    }
  }

  /// Wraps a monad whose validity the caller has already established.
  static ValidatedMonad trusted(LinearMonad<K> m, ValidationReport rep) {
    assert(rep.valid());
    return ValidatedMonad(std::move(m), std::move(rep));
  }

  const LinearMonad<K>& monad() const { return m_; }
  const LinearMonad<K>* operator->() const { return &m_; }
  const ValidationReport& report() const { return rep_; }

 private:
  ValidatedMonad(LinearMonad<K> m, ValidationReport rep)
      : m_(std::move(m)), rep_(std::move(rep)) {}
  LinearMonad<K> m_;
  ValidationReport rep_;
};

enum class SheafClass {
  LocallyFree,
  ReflexiveNotLocallyFree,
  TorsionFreeNotReflexive,
  NotTorsionFree,
};

inline std::string to_string(SheafClass c) {
  switch (c) {
    case SheafClass::LocallyFree: return "locally-free";
    case SheafClass::ReflexiveNotLocallyFree: return "reflexive-not-locally-free";
    case SheafClass::TorsionFreeNotReflexive: return "torsion-free-not-reflexive";
    case SheafClass::NotTorsionFree: return "not-torsion-free";
  }
  return "?";
}

template <Field K>
struct ClassificationReport {
  Ideal<K> degeneration_ideal;  // v x v minors of alpha
  DimensionReport locus;
  SheafClass sheaf_class = SheafClass::NotTorsionFree;
  int rank = 0;
  int c1 = 0;

  std::optional<int> codim() const {
    if (locus.empty) return std::nullopt;
    return locus.codim;
  }
};

/// Classifies the cohomology sheaf by the codimension of the degeneration
/// locus: empty <=> locally-free, codim >= 3 <=> reflexive, codim >= 2 <=>
/// torsion-free.
template <Field K>
ClassificationReport<K> classify(const ValidatedMonad<K>& vm) {
  const LinearMonad<K>& m = vm.monad();
  Ideal<K> ideal(minors(m.alpha, m.v), m.n + 1, m.field);
  DimensionReport locus = dimension(buchberger(ideal));
  SheafClass cls;
  if (locus.empty)
    cls = SheafClass::LocallyFree;
  else if (locus.codim >= 3)
    cls = SheafClass::ReflexiveNotLocallyFree;
  else if (locus.codim == 2)
    cls = SheafClass::TorsionFreeNotReflexive;
  else
    cls = SheafClass::NotTorsionFree;
  return ClassificationReport<K>{std::move(ideal), locus, cls, m.rank(), m.c1()};
}

/// Total Chern class in Z[H]/(H^{n+1}): the truncation of
/// (1-H)^{-v} (1+H)^{-u}; coefficient i is c_i.
struct ChernClass {
  std::vector<long long> coeff;  // size n+1, coeff[0] = 1
};

inline ChernClass chern_total(int n, int v, int u) {
  // coefficient of H^a in (1-H)^{-v} is C(v-1+a, a); the empty product v = 0
  // contributes only at a = 0
  auto geometric = [](int count, int a) -> long long {
    if (count == 0) return a == 0 ? 1 : 0;
    return binomial(count - 1 + a, a);
  };
  ChernClass c;
  c.coeff.assign(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    long long s = 0;
    for (int a = 0; a <= i; ++a)
      s += geometric(v, a) * geometric(u, i - a) * ((i - a) % 2 == 0 ? 1 : -1);
    c.coeff[i] = s;
  }
  return c;
}

template <Field K>
ChernClass chern_total(const LinearMonad<K>& m) {
  return chern_total(m.n, m.v, m.u);
}

/// Value of the numerical polynomial C(t+n, n) = (t+1)...(t+n)/n! at an
/// arbitrary integer t (negative included). Computed in exact rationals so
/// large twists cannot overflow silently.
inline long long line_bundle_chi(int n, long long t) {
  Rational num(1);
  for (int i = 1; i <= n; ++i) {
    num *= Rational(t + i);
    num = num / Rational(i);
  }
  return num.to_int();
}

/// chi(E(k)) = w P(k) - v P(k-1) - u P(k+1), an exact integer.
template <Field K>
long long euler_characteristic(const LinearMonad<K>& m, int k) {
  return m.w * line_bundle_chi(m.n, k) - m.v * line_bundle_chi(m.n, k - 1) -
         m.u * line_bundle_chi(m.n, k + 1);
}

/// c = -chi(E(-1)), the charge.
template <Field K>
long long charge(const LinearMonad<K>& m) {
  return -euler_characteristic(m, -1);
}

/// The dual monad: alpha' = beta^T, beta' = alpha^T, (v,w,u) -> (u,w,v). Its
/// cohomology is the dual sheaf precisely when the original is locally-free.
template <Field K>
LinearMonad<K> dual(const LinearMonad<K>& m) {
  return LinearMonad<K>(m.n, m.field, m.u, m.w, m.v, m.beta.transpose(), m.alpha.transpose());
}

/// Substitutes x_i = 0, drops the variable, and revalidates on P^{n-1}.
/// Throws InvalidRestrictionError when the hyperplane is non-generic for the
/// monad (beta stops being surjective or alpha generically injective).
template <Field K>
ValidatedMonad<K> restrict_hyperplane(const LinearMonad<K>& m, int var) {
  if (m.n < 2) throw DimensionMismatchError("restrict: need n >= 2");
  if (var < 0 || var > m.n) throw DimensionMismatchError("restrict: variable index out of range");
  LinearMonad<K> r(m.n - 1, m.field, m.v, m.w, m.u, m.alpha.substitute_zero(var),
                   m.beta.substitute_zero(var));
  ValidationReport rep = validate(r);
  if (!rep.valid()) {
    std::string what = "restriction at x_" + std::to_string(var) + " is invalid:";
    if (!rep.beta_surjective) what += " beta not surjective;";
    if (!rep.alpha_generically_injective) what += " alpha not generically injective;";
    throw InvalidRestrictionError(what);
  }
  return ValidatedMonad<K>::trusted(std::move(r), std::move(rep));
}

/// Block-diagonal direct sum; (v,w,u) add componentwise.
template <Field K>
LinearMonad<K> direct_sum(const LinearMonad<K>& a, const LinearMonad<K>& b) {
  if (a.n != b.n) throw DimensionMismatchError("direct_sum: ambient dimension mismatch");
  if (!(a.field == b.field)) throw DimensionMismatchError("direct_sum: field mismatch");
  return LinearMonad<K>(a.n, a.field, a.v + b.v, a.w + b.w, a.u + b.u,
                        LinearFormMatrix<K>::block_diag(a.alpha, b.alpha),
                        LinearFormMatrix<K>::block_diag(a.beta, b.beta));
}

/// Existence test for linear monads with the given dimension vector, and the
/// degeneration codimension of the generic one.
struct ExistenceReport {
  bool exists = false;
  int expected_codim = 0;   // w - v - u + 1 when a monad exists
  bool locus_empty = false; // expected codimension exceeds n
};

inline ExistenceReport monad_exists(int n, int v, int w, int u) {
  if (n < 1 || v < 0 || w < 0 || u < 0)
    throw std::invalid_argument("monad_exists: need n >= 1 and nonnegative counts");
  ExistenceReport r;
  bool cond_i = w >= 2 * u + n - 1 && w >= v + u;
  bool cond_ii = w >= v + u + n;
  r.exists = cond_i || cond_ii;
  if (r.exists) {
    r.expected_codim = w - v - u + 1;
    r.locus_empty = r.expected_codim > n;
  }
  return r;
}

/// Draws a random valid monad: beta uniform until fiberwise surjective, then
/// alpha sampled from the exact solution space of beta.alpha = 0 (linear in
/// alpha's coefficients) until generically injective. Deterministic per seed.
template <Field K>
ValidatedMonad<K> random_monad(int n, int v, int w, int u, FieldInfo<K> field,
                               std::uint64_t seed, int max_tries = 50) {
  std::mt19937_64 rng(seed);
  const int nv = n + 1;
  auto draw_form = [&]() {
    LinearForm<K> f(nv, field);
    for (int l = 0; l < nv; ++l) f[l] = FieldTraits<K>::random(field, rng);
    return f;
  };
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    LinearFormMatrix<K> beta(u, w, n, field);
    for (int i = 0; i < u; ++i)
      for (int j = 0; j < w; ++j) beta(i, j) = draw_form();
    ValidationReport rep;
    Ideal<K> bi(minors(beta, u), nv, field);
    rep.beta_locus = dimension(buchberger(bi));
    rep.beta_surjective = rep.beta_locus.empty;
    if (!rep.beta_surjective) continue;

    // solution space for one column of alpha: coefficients a_{k,l} with
    // sum_k beta_{ik} * (sum_l a_{k,l} x_l) = 0 in S_2 for every i
    std::vector<std::vector<K>> solution_space;
    if (u == 0) {
      solution_space.assign(static_cast<std::size_t>(w) * nv, {});
      // unconstrained: standard basis
      std::size_t dim = static_cast<std::size_t>(w) * nv;
      for (std::size_t b = 0; b < dim; ++b) {
        std::vector<K> e(dim, FieldTraits<K>::zero(field));
        e[b] = FieldTraits<K>::one(field);
        solution_space[b] = std::move(e);
      }
    } else if (v > 0) {
      BasisIndex s2(section_basis(nv, 2));
      Matrix<K> C(static_cast<std::size_t>(u) * s2.size(), static_cast<std::size_t>(w) * nv,
                  field);
      for (int i = 0; i < u; ++i)
        for (int k = 0; k < w; ++k)
          for (int lp = 0; lp < nv; ++lp) {
            if (beta(i, k)[lp].is_zero()) continue;
            for (int l = 0; l < nv; ++l) {
              std::size_t mu = s2.find(Monomial::variable(lp, nv) * Monomial::variable(l, nv));
              C(i * s2.size() + mu, static_cast<std::size_t>(k) * nv + l) += beta(i, k)[lp];
            }
          }
      solution_space = C.kernel_basis();
      if (solution_space.empty()) continue;
    }

    const int alpha_attempts = v > 0 ? 5 : 1;
    for (int inner = 0; inner < alpha_attempts; ++inner) {
      LinearFormMatrix<K> alpha(w, v, n, field);
      for (int j = 0; j < v; ++j) {
        std::vector<K> col(static_cast<std::size_t>(w) * nv, FieldTraits<K>::zero(field));
        for (const auto& basis_vec : solution_space) {
          K c = FieldTraits<K>::random(field, rng);
          if (c.is_zero()) continue;
          for (std::size_t t = 0; t < col.size(); ++t) col[t] += basis_vec[t] * c;
        }
        for (int k = 0; k < w; ++k)
          for (int l = 0; l < nv; ++l) alpha(k, j)[l] = col[static_cast<std::size_t>(k) * nv + l];
      }
      rep.alpha_generically_injective = v == 0 || has_nonzero_minor(alpha, v);
      if (!rep.alpha_generically_injective) continue;
      LinearMonad<K> m(n, field, v, w, u, alpha, beta);
      rep.complex_ok = composition_is_zero(m.beta, m.alpha);
      assert(rep.complex_ok);
      if (rep.valid()) return ValidatedMonad<K>::trusted(std::move(m), rep);
    }
  }
  throw ExhaustedTriesError("random_monad: no valid monad for (n,v,w,u) = (" +
                            std::to_string(n) + "," + std::to_string(v) + "," +
                            std::to_string(w) + "," + std::to_string(u) + ") within " +
                            std::to_string(max_tries) + " tries");
}

/// Monad of a nullcorrelation sheaf: beta = (x_0 ... x_n), alpha = A.x for an
/// antisymmetric scalar matrix A; the complex condition x^T A x = 0 holds
/// automatically. The locus is the projectivized kernel of A.
template <Field K>
ValidatedMonad<K> nullcorrelation(int n, const Matrix<K>& A) {
  const int nv = n + 1;
  if (A.rows() != static_cast<std::size_t>(nv) || A.cols() != static_cast<std::size_t>(nv))
    throw DimensionMismatchError("nullcorrelation: A must be (n+1) x (n+1)");
  if (A.is_zero()) throw std::invalid_argument("nullcorrelation: A must be nonzero");
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j <= i; ++j)
      if (!(A(i, j) + A(j, i)).is_zero())
        throw std::invalid_argument("nullcorrelation: A must be antisymmetric");
  LinearFormMatrix<K> beta(1, nv, n, A.field());
  for (int j = 0; j < nv; ++j) beta(0, j)[j] = FieldTraits<K>::one(A.field());
  LinearFormMatrix<K> alpha(nv, 1, n, A.field());
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) alpha(i, 0)[j] = A(i, j);
  return ValidatedMonad<K>(LinearMonad<K>(n, A.field(), 1, nv, 1, alpha, beta));
}

/// Seeded antisymmetric matrix, handy for sampling nullcorrelation monads.
template <Field K>
Matrix<K> random_antisymmetric(int size, FieldInfo<K> field, std::mt19937_64& rng) {
  Matrix<K> A(size, size, field);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      K x = FieldTraits<K>::random(field, rng);
      A(i, j) = x;
      A(j, i) = -x;
    }
  return A;
}

/// Projective dimension of the parameter space of nullcorrelation monads on
/// P^n: antisymmetric (n+1) x (n+1) matrices up to scale.
inline long long moduli_dimension_nullcorrelation(int n) {
  if (n < 2) throw std::invalid_argument("moduli_dimension_nullcorrelation: need n >= 2");
  return static_cast<long long>(n) * (n + 1) / 2 - 1;
}

}  // namespace linmonad
