#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "linmonad/cohomology.hpp"
#include "linmonad/fp.hpp"
#include "linmonad/gallery.hpp"
#include "linmonad/monad.hpp"
#include "linmonad/rational.hpp"

using namespace linmonad;

namespace {
const QInfo q{};
const FpInfo f101{101};
}  // namespace

TEST_CASE("gallery monads transcribe correctly and validate") {
  auto p5 = gallery_monad<Rational>("p5", q);
  CHECK(p5.beta(0, 0).str() == "x0");
  CHECK(p5.beta(0, 5).str() == "x5");
  CHECK(p5.alpha(0, 0).str() == "-x1");
  CHECK(p5.alpha(1, 0).str() == "x0");
  CHECK(p5.alpha(2, 0).str() == "-x3");
  CHECK(p5.alpha(3, 0).str() == "x2");
  CHECK(p5.alpha(4, 0).is_zero());

  auto ex4 = gallery_monad<Rational>("ex4", q);
  CHECK(ex4.alpha.cols() == 2);

  for (const auto& name : gallery_names()) {
    auto m = gallery_monad<Rational>(name, q);
    CHECK(validate(m).valid());
    // the items have 0/1/-1 coefficients, so they live over any field
    CHECK(validate(gallery_monad<Fp>(name, f101)).valid());
  }
  CHECK_THROWS_AS(gallery_monad<Rational>("nope", q), UnknownGalleryError);
}

TEST_CASE("validation catches broken monads") {
  auto m = gallery_monad<Rational>("dnoi", q);

  SECTION("zeroing the last beta entry leaves a common zero") {
    auto bad = m;
    bad.beta(0, 3) = LinearForm<Rational>(4, q);
    auto rep = validate(bad);
    CHECK(rep.complex_ok);
    CHECK_FALSE(rep.beta_surjective);
    CHECK_FALSE(rep.valid());
    CHECK_THROWS_AS(ValidatedMonad<Rational>(bad), InvalidMonadError);
  }

  SECTION("zero alpha is never generically injective") {
    auto bad = m;
    for (int i = 0; i < 4; ++i) bad.alpha(i, 0) = LinearForm<Rational>(4, q);
    auto rep = validate(bad);
    CHECK_FALSE(rep.alpha_generically_injective);
    CHECK(rep.beta_surjective);
  }

  SECTION("complex condition is a coefficient identity") {
    auto bad = m;
    bad.alpha(2, 0)[2] = Rational(1);  // now beta.alpha = x2^2 != 0
    auto rep = validate(bad);
    CHECK_FALSE(rep.complex_ok);
  }
}

TEST_CASE("shape mismatches are rejected at construction") {
  LinearFormMatrix<Rational> a(4, 1, 3, q), b(1, 3, 3, q);
  CHECK_THROWS_AS(LinearMonad<Rational>(3, q, 1, 4, 1, a, b), DimensionMismatchError);
}

TEST_CASE("classification of the gallery") {
  auto check = [&](const char* name, SheafClass cls, int codim, int rank, int c1) {
    auto rep = classify(gallery<Rational>(name, q));
    CHECK(rep.sheaf_class == cls);
    REQUIRE(rep.codim());
    CHECK(*rep.codim() == codim);
    CHECK(rep.rank == rank);
    CHECK(rep.c1 == c1);
  };
  check("dnoi", SheafClass::TorsionFreeNotReflexive, 2, 2, 0);
  check("ex-ref", SheafClass::ReflexiveNotLocallyFree, 3, 3, 0);
  check("p5", SheafClass::ReflexiveNotLocallyFree, 4, 4, 0);
  check("ex4", SheafClass::ReflexiveNotLocallyFree, 3, 2, 1);
  check("nc-p2", SheafClass::TorsionFreeNotReflexive, 2, 1, 0);
  CHECK(classify(gallery<Rational>("nc-p3", q)).sheaf_class == SheafClass::LocallyFree);

  auto ncp2 = classify(gallery<Rational>("nc-p2", q));
  REQUIRE(ncp2.locus.length);
  CHECK(*ncp2.locus.length == 1);  // one point, matching the charge

  auto exref = classify(gallery<Rational>("ex-ref", q));
  CHECK(exref.locus.projective_dim == 0);  // a single point
  REQUIRE(exref.locus.length);
  CHECK(*exref.locus.length == 1);
  auto p5 = classify(gallery<Rational>("p5", q));
  CHECK(p5.locus.projective_dim == 1);  // a line
}

TEST_CASE("total Chern class expansion") {
  auto c1 = chern_total(3, 1, 1);
  CHECK(c1.coeff == std::vector<long long>{1, 0, 1, 0});
  auto c0 = chern_total(3, 0, 0);
  CHECK(c0.coeff == std::vector<long long>{1, 0, 0, 0});
  auto c4 = chern_total(gallery_monad<Rational>("ex4", q));
  CHECK(c4.coeff == std::vector<long long>{1, 1, 2, 2, 3});
  // H-coefficient is always c1 = v - u
  for (const auto& name : gallery_names()) {
    auto m = gallery_monad<Rational>(name, q);
    CHECK(chern_total(m).coeff[1] == m.c1());
  }
}

TEST_CASE("Euler characteristics of twists") {
  auto dnoi = gallery_monad<Rational>("dnoi", q);
  CHECK(euler_characteristic(dnoi, -1) == -1);
  CHECK(charge(dnoi) == 1);
  CHECK(euler_characteristic(dnoi, 1) == 5);
  // on P^3 with v = u, chi(E(-2)) = 0
  for (const auto& name : {"dnoi", "ex-ref", "nc-p3"}) {
    auto m = gallery_monad<Rational>(name, q);
    CHECK(euler_characteristic(m, -2) == 0);
  }
}

TEST_CASE("dual is an involution and flips (v,u)") {
  auto dnoi = gallery_monad<Rational>("dnoi", q);
  auto d = dual(dnoi);
  CHECK(d.v == dnoi.u);
  CHECK(d.u == dnoi.v);
  CHECK(dual(d) == dnoi);

  auto nc = gallery_monad<Rational>("nc-p3", q);
  CHECK(validate(dual(nc)).valid());
  CHECK(dual(nc).v == 1);
  CHECK(dual(nc).w == 4);

  // dnoi is not locally-free: its transposed alpha has a common zero line, so
  // the dual complex fails fiberwise surjectivity of beta
  auto rep = validate(d);
  CHECK(rep.complex_ok);
  CHECK(rep.alpha_generically_injective);
  CHECK_FALSE(rep.beta_surjective);
}

TEST_CASE("dual validates whenever the monad is locally-free") {
  std::mt19937_64 rng(2024);
  for (int s = 0; s < 5; ++s) {
    auto m = random_monad<Fp>(3, 1, 8, 1, f101, 900 + s);
    if (classify(m).sheaf_class == SheafClass::LocallyFree)
      CHECK(validate(dual(m.monad())).valid());
  }
}

TEST_CASE("hyperplane restriction of dnoi stays valid and keeps the charge") {
  auto dnoi = gallery_monad<Rational>("dnoi", q);
  for (int i = 0; i <= 3; ++i) {
    auto r = restrict_hyperplane(dnoi, i);
    CHECK(r.monad().n == 2);
    CHECK(r.monad().v == 1);
    CHECK(r.monad().w == 4);
    CHECK(charge(r.monad()) == charge(dnoi));
  }
}

TEST_CASE("restriction fails when beta collapses") {
  // beta = (x2) on P^2: restricting x2 = 0 forces the zero map
  LinearFormMatrix<Rational> alpha(1, 0, 2, q), beta(1, 1, 2, q);
  beta(0, 0)[2] = Rational(1);
  LinearMonad<Rational> m(2, q, 0, 1, 1, alpha, beta);
  CHECK_THROWS_AS(restrict_hyperplane(m, 2), InvalidRestrictionError);
  CHECK_THROWS_AS(restrict_hyperplane(gallery_monad<Rational>("dnoi", q), 7),
                  DimensionMismatchError);
}

TEST_CASE("direct sums add dimension vectors and charges") {
  auto dnoi = gallery_monad<Rational>("dnoi", q);

  LinearFormMatrix<Rational> ta(1, 0, 3, q), tb(0, 1, 3, q);
  LinearMonad<Rational> trivial(3, q, 0, 1, 0, ta, tb);
  auto plus = direct_sum(dnoi, trivial);
  CHECK(plus.rank() == dnoi.rank() + 1);
  CHECK(validate(plus).valid());

  auto dd = direct_sum(dnoi, dnoi);
  CHECK(dd.v == 2);
  CHECK(dd.w == 8);
  CHECK(dd.rank() == 4);
  CHECK(charge(dd) == 2);

  auto ex4 = gallery_monad<Rational>("ex4", q);
  auto mixed = direct_sum(ex4, dual(ex4));
  CHECK(mixed.c1() == 0);

  auto ncp2 = gallery_monad<Rational>("nc-p2", q);
  CHECK_THROWS_AS(direct_sum(dnoi, ncp2), DimensionMismatchError);
}

TEST_CASE("existence oracle matches the classification bounds") {
  auto r1 = monad_exists(3, 1, 6, 1);
  CHECK(r1.exists);
  CHECK(r1.expected_codim == 5);

  auto r2 = monad_exists(4, 1, 4, 1);
  CHECK_FALSE(r2.exists);

  auto r3 = monad_exists(3, 1, 9, 1);
  CHECK(r3.exists);
  CHECK(r3.expected_codim == 8);
  CHECK(r3.locus_empty);

  CHECK_FALSE(monad_exists(2, 1, 2, 1).exists);
}

TEST_CASE("random monads are deterministic per seed") {
  auto a = random_monad<Fp>(3, 1, 6, 1, f101, 42);
  auto b = random_monad<Fp>(3, 1, 6, 1, f101, 42);
  CHECK(a.monad() == b.monad());
  auto c = random_monad<Fp>(3, 1, 6, 1, f101, 43);
  CHECK_FALSE(a.monad() == c.monad());
  CHECK_THROWS_AS(random_monad<Fp>(2, 1, 2, 1, f101, 7, 10), ExhaustedTriesError);
  // over Q as well
  auto d = random_monad<Rational>(2, 1, 4, 1, q, 11);
  CHECK(validate(d.monad()).valid());
}

TEST_CASE("sampled instanton monads degenerate in the expected codimension") {
  // v = u and rank >= n-1; the generic degeneration codimension is
  // w - v - u + 1, capped by emptiness beyond n, and never below 2
  struct Params { int n, v, w; } tuples[] = {{4, 1, 5}, {2, 2, 5}, {3, 2, 7}};
  for (auto [n, v, w] : tuples) {
    int expected = w - 2 * v + 1;
    int hits = 0;
    const int draws = 100;
    for (int s = 0; s < draws; ++s) {
      auto m = random_monad<Fp>(n, v, w, v, f101, 5000 + 17 * s);
      auto rep = classify(m);
      if (rep.locus.empty ? expected > n : rep.locus.codim == expected) ++hits;
      CHECK((rep.locus.empty || rep.locus.codim >= 2));
      // nonempty loci never cut deeper than the expected codimension
      CHECK((rep.locus.empty || rep.locus.codim <= expected));
    }
    CHECK(hits >= 90);
  }
}

TEST_CASE("nullcorrelation dichotomy between odd and even ambient dimension") {
  // standard symplectic pairing on P^3: locally-free
  Matrix<Rational> A(4, 4, q);
  A(0, 1) = Rational(1); A(1, 0) = Rational(-1);
  A(2, 3) = Rational(1); A(3, 2) = Rational(-1);
  auto nc = nullcorrelation(3, A);
  CHECK(classify(nc).sheaf_class == SheafClass::LocallyFree);
  CHECK(nc.monad().v == 1);
  CHECK(nc.monad().w == 4);

  // P^4: odd-size antisymmetric matrices are singular, never locally-free
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 6; ++trial) {
    Matrix<Rational> B(5, 5, q);
    do {
      B = random_antisymmetric<Rational>(5, q, rng);
    } while (B.is_zero());
    auto rep = classify(nullcorrelation(4, B));
    CHECK(rep.sheaf_class != SheafClass::LocallyFree);
  }

  // odd ambient dimension with an invertible pairing: locally-free again
  Matrix<Rational> S6(6, 6, q);
  for (int b = 0; b < 3; ++b) {
    S6(2 * b, 2 * b + 1) = Rational(1);
    S6(2 * b + 1, 2 * b) = Rational(-1);
  }
  CHECK(classify(nullcorrelation(5, S6)).sheaf_class == SheafClass::LocallyFree);

  // symplectic block plus a zero row/column: locus is one point of codim 4
  Matrix<Rational> C(5, 5, q);
  C(0, 1) = Rational(1); C(1, 0) = Rational(-1);
  C(2, 3) = Rational(1); C(3, 2) = Rational(-1);
  auto rep = classify(nullcorrelation(4, C));
  REQUIRE(rep.codim());
  CHECK(*rep.codim() == 4);
  CHECK(rep.sheaf_class == SheafClass::ReflexiveNotLocallyFree);
  CHECK(rep.locus.projective_dim == 0);

  CHECK_THROWS_AS(nullcorrelation(3, Matrix<Rational>(4, 4, q)), std::invalid_argument);
  Matrix<Rational> S(4, 4, q);
  S(0, 1) = Rational(1); S(1, 0) = Rational(1);
  CHECK_THROWS_AS(nullcorrelation(3, S), std::invalid_argument);
}

TEST_CASE("moduli dimension of nullcorrelation monads") {
  CHECK(moduli_dimension_nullcorrelation(3) == 5);
  CHECK(moduli_dimension_nullcorrelation(2) == 2);
  CHECK(moduli_dimension_nullcorrelation(5) == 14);
  for (int n = 2; n <= 6; ++n) {
    long long params = 0;  // independent entries of an antisymmetric matrix
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) ++params;
    CHECK(moduli_dimension_nullcorrelation(n) == params - 1);
  }
}

TEST_CASE("graded complex condition for random monads") {
  for (int s = 0; s < 3; ++s) {
    auto m = random_monad<Fp>(3, 2, 8, 2, f101, 600 + s);
    for (int k = -2; k <= 2; ++k) {
      auto prod = multiply_matrix(m->beta, k) * multiply_matrix(m->alpha, k - 1);
      CHECK(prod.is_zero());
    }
  }
}
