#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "nilorb/matrixlab.hpp"
#include "nilorb/orbits.hpp"

using namespace nilorb;

namespace {

MultiplicityDatum datum(std::vector<std::pair<int, MultiplicityEntry>> e) {
  return MultiplicityDatum::from_entries(std::move(e));
}

/// Checks the defining identities of a negation conjugator directly.
void check_conjugator(const StandardTriple& t, const Matrix& a) {
  CHECK(a * t.x + t.x * a == Matrix(t.x.rows(), t.x.cols()));  // A x A^{-1} = -x
  if (t.ambient.form) {
    const Matrix at = t.ambient.alg.family() == Family::SU ? a.adjoint() : a.transpose();
    CHECK(at * *t.ambient.form * a == *t.ambient.form);
  }
}

std::vector<AlgebraDescriptor> matrix_algebras(int max_dim) {
  std::vector<AlgebraDescriptor> out;
  for (int n = 2; n <= max_dim; ++n) out.push_back(AlgebraDescriptor::sl_r(n));
  for (int n = 1; 2 * n <= max_dim; ++n) out.push_back(AlgebraDescriptor::sp_r(n));
  for (int s = 2; s <= max_dim; ++s)
    for (int p = 1; p < s; ++p) {
      out.push_back(AlgebraDescriptor::so_r(p, s - p));
      out.push_back(AlgebraDescriptor::su(p, s - p));
    }
  return out;
}

}  // namespace

TEST_CASE("membership examples") {
  const auto sl2 = standard_ambient(AlgebraDescriptor::sl_r(2));
  CHECK(algebra_membership(Matrix{{0, 1}, {0, 0}}, sl2));
  CHECK_FALSE(algebra_membership(Matrix::identity(2), sl2));
  const auto so21 = standard_ambient(AlgebraDescriptor::so_r(2, 1));
  CHECK_FALSE(algebra_membership(Matrix::identity(3), so21));
  CHECK_THROWS_AS(algebra_membership(Matrix::identity(2), so21), ValidationError);

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-3, 3);
  const Matrix& b = *so21.form;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix z(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) z(i, j) = Scalar(d(rng));
    Matrix proj = (z - inverse(b) * z.transpose() * b) * Scalar(Rational(1, 2));
    CHECK(algebra_membership(proj, so21));
  }
}

TEST_CASE("algebra bases have the classical dimensions") {
  CHECK(algebra_basis(standard_ambient(AlgebraDescriptor::sl_r(3))).size() == 8);
  CHECK(algebra_basis(standard_ambient(AlgebraDescriptor::so_r(2, 2))).size() == 6);
  CHECK(algebra_basis(standard_ambient(AlgebraDescriptor::sp_r(2))).size() == 10);
  CHECK(algebra_basis(standard_ambient(AlgebraDescriptor::su(2, 1))).size() == 8);
  for (const auto& alg : matrix_algebras(4)) {
    const auto amb = standard_ambient(alg);
    for (const auto& z : algebra_basis(amb)) CHECK(algebra_membership(z, amb));
  }
}

TEST_CASE("quaternionic families have no matrix engine") {
  CHECK_THROWS_AS(standard_ambient(AlgebraDescriptor::sp_hq(1, 1)), ValidationError);
  CHECK_THROWS_AS(build_model(AlgebraDescriptor::sl_h(2), datum({{1, Dim{1}}})), ValidationError);
}

TEST_CASE("make_ambient validates the form") {
  const auto so21 = AlgebraDescriptor::so_r(2, 1);
  CHECK_NOTHROW(make_ambient(so21, Matrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK_THROWS_AS(make_ambient(so21, Matrix::identity(3)), ValidationError);
  CHECK_THROWS_AS(make_ambient(AlgebraDescriptor::sp_r(1), Matrix::identity(2)), ValidationError);
  CHECK_THROWS_AS(make_ambient(so21, Matrix(3, 3)), ValidationError);
}

TEST_CASE("triple completion examples") {
  const auto sl2 = standard_ambient(AlgebraDescriptor::sl_r(2));
  auto t = complete_standard_triple(Matrix{{0, 1}, {0, 0}}, sl2);
  CHECK(t.h == Matrix::diagonal({1, -1}));
  CHECK(t.y == Matrix{{0, 0}, {1, 0}});

  const auto sl3 = standard_ambient(AlgebraDescriptor::sl_r(3));
  auto t3 = complete_standard_triple(Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, sl3);
  CHECK(t3.h == Matrix::diagonal({2, 0, -2}));
  CHECK(t3.y == Matrix{{0, 0, 0}, {2, 0, 0}, {0, 2, 0}});

  const auto so21 = AlgebraDescriptor::so_r(2, 1);
  const auto model = build_model(so21, datum({{2, Sig{1, 0}}}));
  auto t21 = complete_standard_triple(model.x, model.ambient);
  std::vector<Scalar> eig;
  for (std::size_t i = 0; i < 3; ++i) eig.push_back(t21.h(i, i));
  // h is diagonalisable with eigenvalues 2, 0, -2: check via (h-2)h(h+2) = 0
  const Matrix id = Matrix::identity(3);
  CHECK(((t21.h - id * Scalar(2)) * t21.h * (t21.h + id * Scalar(2))).is_zero());
  CHECK(t21.h.trace().is_zero());
  CHECK(rank(t21.h) == 2);
}

TEST_CASE("triple completion rejects bad input") {
  const auto sl2 = standard_ambient(AlgebraDescriptor::sl_r(2));
  CHECK_THROWS_WITH_AS(complete_standard_triple(Matrix(2, 2), sl2), "x must be nonzero", ValidationError);
  CHECK_THROWS_AS(complete_standard_triple(Matrix{{1, 0}, {0, -1}}, sl2), ValidationError);
  CHECK_THROWS_AS(complete_standard_triple(Matrix{{1, 1}, {0, 0}}, sl2), ValidationError);
  const auto so21 = standard_ambient(AlgebraDescriptor::so_r(2, 1));
  CHECK_THROWS_AS(complete_standard_triple(Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, so21), ValidationError);
}

TEST_CASE("datum extraction examples") {
  const auto sl2 = standard_ambient(AlgebraDescriptor::sl_r(2));
  CHECK(extract_datum(complete_standard_triple(Matrix{{0, 1}, {0, 0}}, sl2)) == datum({{1, Dim{1}}}));

  const auto so21 = AlgebraDescriptor::so_r(2, 1);
  CHECK(extract_datum(build_model(so21, datum({{2, Sig{1, 0}}}))) == datum({{2, Sig{1, 0}}}));

  // sp(4,R) with B = [[0,I],[-I,0]], basis e1,e2,f1,f2 and B(e_i,f_i) = 1.
  // x = E(e1 <- f1) - E(e2 <- f2) sends f1 -> e1 and f2 -> -e2: two 2-blocks.
  // For V_1 with b0 = -1: phi_1(a,a) = B(a, y a) / -1; the two highest
  // vectors e1, e2 have opposite signs.
  const auto sp2 = standard_ambient(AlgebraDescriptor::sp_r(2));
  Matrix x(4, 4);
  x(0, 2) = 1;
  x(1, 3) = -1;
  REQUIRE(algebra_membership(x, sp2));
  CHECK(extract_datum(complete_standard_triple(x, sp2)) == datum({{1, Sig{1, 1}}}));
  // a single 2-block: y e1 = f1, so phi_1(e1, e1) = B(e1, f1) / b0 = 1 / -1
  Matrix x1(4, 4);
  x1(0, 2) = 1;
  CHECK(extract_datum(complete_standard_triple(x1, sp2)) == datum({{0, Dim{2}}, {1, Sig{0, 1}}}));
  CHECK(extract_datum(complete_standard_triple(-x1, sp2)) == datum({{0, Dim{2}}, {1, Sig{1, 0}}}));
}

TEST_CASE("build_model examples") {
  CHECK_THROWS_WITH_AS(build_model(AlgebraDescriptor::so_r(2, 1), zero_orbit_datum(AlgebraDescriptor::so_r(2, 1))),
                       doctest::Contains("x must be nonzero"), ValidationError);
  CHECK_THROWS_AS(build_model(AlgebraDescriptor::so_r(2, 1), datum({{1, Dim{1}}})), ValidationError);

  const auto t21 = build_model(AlgebraDescriptor::so_r(2, 1), datum({{2, Sig{1, 0}}}));
  CHECK(t21.x.rows() == 3);
  CHECK(signature_symmetric(*t21.ambient.form) == Inertia{2, 1, 0});

  const auto t4 = build_model(AlgebraDescriptor::sp_r(2), datum({{1, Sig{1, 1}}}));
  CHECK(t4.x.rows() == 4);
  CHECK(t4.ambient.form->is_antisymmetric());
  CHECK(determinant(*t4.ambient.form) == Scalar(1));
  CHECK(*t4.ambient.form == kron(Matrix::diagonal({1, -1}), build_invariant_form(1).b));
}

TEST_CASE("negation conjugator examples") {
  const auto sl2 = standard_ambient(AlgebraDescriptor::sl_r(2));
  const auto t = complete_standard_triple(Matrix{{0, 1}, {0, 0}}, sl2);
  const Matrix a = build_negation_conjugator(t);
  CHECK(a == Matrix::diagonal({1, -1}));
  check_conjugator(t, a);

  const auto t21 = build_model(AlgebraDescriptor::so_r(2, 1), datum({{2, Sig{1, 0}}}));
  const Matrix a21 = build_negation_conjugator(t21);
  check_conjugator(t21, a21);
  CHECK(a21 == build_negation_intertwiner(2, true));
  CHECK(sigma_tau(a21, *t21.ambient.form) == SigmaTau{-1, -1});
  CHECK(determinant(a21) == Scalar(1));

  const auto t4 = build_model(AlgebraDescriptor::sp_r(2), datum({{1, Sig{1, 1}}}));
  const Matrix a4 = build_negation_conjugator(t4);
  check_conjugator(t4, a4);
  CHECK(a4 == kron(Matrix{{0, 1}, {1, 0}}, build_negation_intertwiner(1)));

  const auto bad = build_model(AlgebraDescriptor::sp_r(1), datum({{1, Sig{1, 0}}}));
  CHECK_THROWS_AS(build_negation_conjugator(bad), NotConjugateInFullGroup);
}

TEST_CASE("matrix verdict examples") {
  const auto sl2 = standard_ambient(AlgebraDescriptor::sl_r(2));
  auto v = decide_negation_matrix(complete_standard_triple(Matrix{{0, 1}, {0, 0}}, sl2));
  CHECK_FALSE(v.verdict.stable);
  CHECK(v.conjugator_det_sign == -1);
  CHECK(v.centralizer_has_negative_det == false);

  v = decide_negation_matrix(build_model(AlgebraDescriptor::so_r(2, 1), datum({{2, Sig{1, 0}}})));
  CHECK_FALSE(v.verdict.stable);
  REQUIRE(v.centralizer);
  CHECK(*v.centralizer == ComponentSet::product(false, true));
  CHECK(v.conjugator_component == SigmaTau{-1, -1});

  const auto t4 = build_model(AlgebraDescriptor::sp_r(2), datum({{1, Sig{1, 1}}}));
  v = decide_negation_matrix(t4);
  CHECK(v.verdict.stable);
  REQUIRE(v.conjugator);
  check_conjugator(t4, *v.conjugator);

  v = decide_negation_matrix(build_model(AlgebraDescriptor::su(1, 1), datum({{1, Sig{1, 0}}})));
  CHECK_FALSE(v.verdict.stable);
  CHECK(v.negated_datum == datum({{1, Sig{0, 1}}}));
}

TEST_CASE("sl(n,R) with two 2-blocks: the orbit is stable") {
  // The all-blocks-of-size-2-mod-4 rule would call [2,2] unstable. Here is
  // the explicit conjugator with positive determinant.
  Matrix x(4, 4);
  x(0, 1) = 1;
  x(2, 3) = 1;
  const auto t = complete_standard_triple(x, standard_ambient(AlgebraDescriptor::sl_r(4)));
  const Matrix a = Matrix::diagonal({1, -1, 1, -1});
  CHECK(a * x * inverse(a) == -x);
  CHECK(determinant(a) == Scalar(1));
  const auto v = decide_negation_matrix(t);
  CHECK(v.verdict.stable);
  CHECK(negation_stable(AlgebraDescriptor::sl_r(4), v.datum).stable);

  // [4,2]: the conjugator has det -1 and centraliser elements all have det > 0
  Matrix y(6, 6);
  y(0, 1) = y(1, 2) = y(2, 3) = 1;
  y(4, 5) = 1;
  const auto v2 = decide_negation_matrix(complete_standard_triple(y, standard_ambient(AlgebraDescriptor::sl_r(6))));
  CHECK_FALSE(v2.verdict.stable);
  CHECK(v2.conjugator_det_sign == -1);
  CHECK(v2.centralizer_has_negative_det == false);
}

TEST_CASE("round trip and oracle agreement up to dimension 5") {
  for (const auto& alg : matrix_algebras(5)) {
    for (const auto& d : enumerate_orbit_data(alg)) {
      if (d.is_zero_orbit()) continue;
      CAPTURE(alg.to_string());
      CAPTURE(d.to_string());
      const auto t = build_model(alg, d);
      CHECK(extract_datum(t) == d);
      const auto v = decide_negation_matrix(t);
      CHECK(v.verdict.stable == negation_stable(alg, d).stable);
      CHECK(v.negated_datum == negate_datum(alg, d));
      if (v.conjugator) check_conjugator(t, *v.conjugator);
      if (alg.family() == Family::SO_R) {
        REQUIRE(v.centralizer);
        CHECK(*v.centralizer == centralizer_components(alg, d));
      }
    }
  }
}

TEST_CASE("extraction is invariant under conjugation and recompletion") {
  std::mt19937_64 rng(404);
  std::uint64_t seed = 1;
  for (const auto& alg : matrix_algebras(4)) {
    const auto amb = standard_ambient(alg);
    for (const auto& d : enumerate_orbit_data(alg)) {
      if (d.is_zero_orbit()) continue;
      CAPTURE(alg.to_string());
      CAPTURE(d.to_string());
      const auto model = build_model(alg, d);
      // move the model onto the standard form, then conjugate by a random isometry
      // of that form; the datum must survive independent triple completions
      const auto t1 = complete_standard_triple(model.x, model.ambient, seed++);
      const auto t2 = complete_standard_triple(model.x, model.ambient, seed++);
      CHECK(extract_datum(t1) == d);
      CHECK(extract_datum(t2) == d);
      if (alg.family() == Family::SL_R) {
        const Matrix g = random_isometry(amb, rng);
        const auto moved = conjugate_triple(model, g);
        CHECK(extract_datum(complete_standard_triple(moved.x, moved.ambient, seed++)) == d);
      } else {
        const Matrix g = random_isometry(model.ambient, rng);
        const auto moved = conjugate_triple(model, g);
        const auto t3 = complete_standard_triple(moved.x, moved.ambient, seed++);
        CHECK(extract_datum(t3) == d);
        CHECK(decide_negation_matrix(t3).verdict.stable == negation_stable(alg, d).stable);
      }
    }
  }
}

TEST_CASE("random isometries preserve the form") {
  std::mt19937_64 rng(77);
  for (const auto& alg : matrix_algebras(4)) {
    const auto amb = standard_ambient(alg);
    const Matrix g = random_isometry(amb, rng);
    if (!amb.form) {
      CHECK(sgn(determinant(g).re()) > 0);
      continue;
    }
    const Matrix gt = alg.family() == Family::SU ? g.adjoint() : g.transpose();
    CHECK(gt * *amb.form * g == *amb.form);
  }
}

TEST_CASE("nonstandard forms") {
  // so(2,1) on the antidiagonal form, x built from the model form directly
  const auto alg = AlgebraDescriptor::so_r(2, 1);
  const auto amb = make_ambient(alg, build_invariant_form(2).b);
  const auto t = complete_standard_triple(build_irreducible(2).x, amb);
  CHECK(extract_datum(t) == datum({{2, Sig{1, 0}}}));
  CHECK_FALSE(decide_negation_matrix(t).verdict.stable);
}
