#pragma once

#include <string>
#include <vector>

#include "linmonad/errors.hpp"
#include "linmonad/monad.hpp"
#include "linmonad/rational.hpp"

namespace linmonad {

inline const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {"dnoi", "ex-ref", "p5", "ex4", "nc-p2", "nc-p3"};
  return names;
}

/// Built-in example monads (integer coefficients, so they exist over any
/// field):
///   dnoi    P^3, (v,w,u) = (1,4,1): rank-2 torsion-free sheaf, locus a line
///   ex-ref  P^3, (1,5,1): rank-3 reflexive sheaf, locus a single point
///   p5      P^5, (1,6,1): rank-4 reflexive sheaf, locus a line
///   ex4     P^4, (2,5,1): rank-2 reflexive sheaf with c1 = 1, locus two lines
///   nc-p2   P^2, (1,3,1): rank-1 sheaf, the ideal of one point
///   nc-p3   P^3, (1,4,1): rank-2 locally-free nullcorrelation sheaf
template <Field K>
LinearMonad<K> gallery_monad(const std::string& name, FieldInfo<K> field = {}) {
  const K one = FieldTraits<K>::one(field);
  auto entry = [&](LinearFormMatrix<K>& M, std::size_t i, std::size_t j, int var, bool neg) {
    M(i, j)[var] = neg ? -one : one;
  };
  if (name == "dnoi") {
    LinearFormMatrix<K> alpha(4, 1, 3, field), beta(1, 4, 3, field);
    entry(alpha, 0, 0, 0, false);  // x0
    entry(alpha, 1, 0, 1, false);  // x1
    entry(beta, 0, 0, 1, true);    // -x1
    entry(beta, 0, 1, 0, false);   // x0
    entry(beta, 0, 2, 2, false);   // x2
    entry(beta, 0, 3, 3, false);   // x3
    return LinearMonad<K>(3, field, 1, 4, 1, alpha, beta);
  }
  if (name == "ex-ref") {
    LinearFormMatrix<K> alpha(5, 1, 3, field), beta(1, 5, 3, field);
    entry(alpha, 0, 0, 0, false);
    entry(alpha, 1, 0, 1, false);
    entry(alpha, 4, 0, 2, false);
    entry(beta, 0, 0, 1, true);
    entry(beta, 0, 1, 0, false);
    entry(beta, 0, 2, 2, false);
    entry(beta, 0, 3, 3, false);
    return LinearMonad<K>(3, field, 1, 5, 1, alpha, beta);
  }
  if (name == "p5") {
    LinearFormMatrix<K> alpha(6, 1, 5, field), beta(1, 6, 5, field);
    entry(alpha, 0, 0, 1, true);   // -x1
    entry(alpha, 1, 0, 0, false);  // x0
    entry(alpha, 2, 0, 3, true);   // -x3
    entry(alpha, 3, 0, 2, false);  // x2
    for (int j = 0; j < 6; ++j) entry(beta, 0, j, j, false);
    return LinearMonad<K>(5, field, 1, 6, 1, alpha, beta);
  }
  if (name == "ex4") {
    LinearFormMatrix<K> alpha(5, 2, 4, field), beta(1, 5, 4, field);
    entry(alpha, 0, 0, 1, true);   // -x1
    entry(alpha, 1, 0, 0, false);  // x0
    entry(alpha, 2, 0, 3, true);   // -x3
    entry(alpha, 3, 0, 2, false);  // x2
    entry(alpha, 0, 1, 4, true);   // -x4
    entry(alpha, 1, 1, 2, false);  // x2
    entry(alpha, 2, 1, 1, true);   // -x1
    entry(alpha, 4, 1, 0, false);  // x0
    for (int j = 0; j < 5; ++j) entry(beta, 0, j, j, false);
    return LinearMonad<K>(4, field, 2, 5, 1, alpha, beta);
  }
  if (name == "nc-p2") {
    LinearFormMatrix<K> alpha(3, 1, 2, field), beta(1, 3, 2, field);
    entry(alpha, 0, 0, 0, false);
    entry(alpha, 1, 0, 1, false);
    entry(beta, 0, 0, 1, true);
    entry(beta, 0, 1, 0, false);
    entry(beta, 0, 2, 2, false);
    return LinearMonad<K>(2, field, 1, 3, 1, alpha, beta);
  }
  if (name == "nc-p3") {
    // nullcorrelation with the standard symplectic pairing
    Matrix<K> A(4, 4, field);
    A(0, 1) = one; A(1, 0) = -one;
    A(2, 3) = one; A(3, 2) = -one;
    return nullcorrelation(3, A).monad();
  }
  throw UnknownGalleryError("unknown gallery item: " + name);
}

template <Field K>
ValidatedMonad<K> gallery(const std::string& name, FieldInfo<K> field = {}) {
  return ValidatedMonad<K>(gallery_monad<K>(name, field));
}

}  // namespace linmonad
