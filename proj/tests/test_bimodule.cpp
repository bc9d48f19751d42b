#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nearassoc/bimodule.hpp"

using namespace nearassoc;

namespace {

const FieldContext kQ = FieldContext::rationals();

Algebra sample_b() {
  Algebra a(kQ, 2);
  a.at(0, 0, 1) = Scalar::one(kQ);
  a.at(0, 1, 0) = Scalar::one(kQ);
  a.at(1, 0, 0) = Scalar::one(kQ);
  a.at(1, 1, 1) = Scalar::one(kQ);
  return a;
}

Algebra upper_triangular() {
  Algebra a(kQ, 2);
  a.at(0, 0, 0) = Scalar::one(kQ);
  a.at(0, 1, 1) = Scalar::one(kQ);
  return a;
}

}  // namespace

TEST_CASE("the regular bimodule satisfies the compatibility equations") {
  const HomAlgebra h = with_identity_twist(sample_b());
  const Bimodule reg = regular_bimodule(h);
  CHECK(reg.vdim == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(reg.l[i] == left_op(h.alg, basis_vec(kQ, 2, i)));
    CHECK(reg.r[i] == right_op(h.alg, basis_vec(kQ, 2, i)));
  }
  const CheckReport r = check_bimodule(reg);
  CHECK(r.holds);
  CHECK(r.warnings.empty());
}

TEST_CASE("corrupting an action matrix produces an equation witness") {
  Bimodule reg = regular_bimodule(with_identity_twist(sample_b()));
  reg.l[0].at(0, 0) = Scalar::of_int(kQ, 7);
  const CheckReport r = check_bimodule(reg);
  CHECK(!r.holds);
  REQUIRE(r.witness.has_value());
  // the witness names the violated operator equation verbatim
  CHECK(r.witness->where.find(" = ") != std::string::npos);
  CHECK(r.witness->at.size() >= 2);
}

TEST_CASE("a bad base algebra is a warning, not an equation failure") {
  // zero actions satisfy every compatibility equation regardless of the base
  std::vector<Matrix> z(2, Matrix(kQ, 1, 1));
  const Bimodule b(with_identity_twist(upper_triangular()), 1, z, z);
  const CheckReport r = check_bimodule(b);
  CHECK(r.holds);
  REQUIRE(!r.warnings.empty());
  CHECK(r.warnings.front() == "base algebra fails its defining identity");
}

TEST_CASE("bimodule construction validates shapes") {
  const HomAlgebra h = with_identity_twist(sample_b());
  std::vector<Matrix> good(2, Matrix(kQ, 3, 3));
  std::vector<Matrix> short_list(1, Matrix(kQ, 3, 3));
  std::vector<Matrix> wrong_shape(2, Matrix(kQ, 2, 3));
  CHECK_THROWS_AS(Bimodule(h, 3, short_list, good), Error);
  CHECK_THROWS_AS(Bimodule(h, 3, wrong_shape, good), Error);
  CHECK_THROWS_AS(Bimodule(h, 3, good, good, Matrix(kQ, 2, 2)), Error);
  // default twist on V is the identity
  CHECK(Bimodule(h, 3, good, good).phi.is_identity());
}

TEST_CASE("semidirect product extends the base and stays valid") {
  const Bimodule reg = regular_bimodule(with_identity_twist(sample_b()));
  const HomAlgebra sd = semidirect(reg);
  CHECK(sd.alg.dim() == 4);
  CHECK(sd.alpha.is_identity());

  // base block of the product is the base product
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(sd.alg.at(i, j, k) == sample_b().at(i, j, k));
        CHECK(sd.alg.at(i, j, 2 + k).is_zero());
      }

  CHECK(check_identity(sd.alg, IdentityId::NearlyAssociative).holds);

  // mixed products follow the actions: e_i * v_j = l(e_i) v_j
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Vec lv = reg.l[i].apply(basis_vec(kQ, 2, j));
      const Vec rv = reg.r[i].apply(basis_vec(kQ, 2, j));
      for (std::size_t k = 0; k < 2; ++k) {
        CHECK(sd.alg.at(i, 2 + j, 2 + k) == lv[k]);
        CHECK(sd.alg.at(2 + j, i, 2 + k) == rv[k]);
        CHECK(sd.alg.at(i, 2 + j, k).is_zero());
        CHECK(sd.alg.at(2 + j, i, k).is_zero());
      }
    }
}

TEST_CASE("the induced bracket is the commutator of the semidirect product") {
  const Bimodule reg = regular_bimodule(with_identity_twist(sample_b()));
  CHECK(induced_lie_bracket(reg) == commutator_algebra(semidirect(reg).alg));
}

TEST_CASE("difference actions represent the commutator bracket") {
  // zero-product base with a square-zero left action: a valid bimodule with
  // a nonzero difference representation
  Matrix n(kQ, 2, 2);
  n.at(0, 1) = Scalar::one(kQ);
  const Algebra base(kQ, 2);
  const Bimodule b(with_identity_twist(base), 2, {n, Matrix(kQ, 2, 2)},
                   {Matrix(kQ, 2, 2), Matrix(kQ, 2, 2)});
  REQUIRE(check_bimodule(b).holds);

  const LieRepresentation rep = minus_representation(b);
  for (std::size_t i = 0; i < 2; ++i) CHECK(rep.rho[i] == b.l[i] - b.r[i]);
  CHECK(rep.rho[0] == n);
  CHECK(rep.psi.is_identity());
  const CheckReport r = check_lie_representation(commutator_algebra(base),
                                                 Matrix::identity(kQ, 2), rep.rho, rep.psi);
  CHECK(r.holds);

  // a base that breaks its own identity does not yield a bimodule at all,
  // and the difference construction refuses it
  const Bimodule invalid = regular_bimodule(with_identity_twist(upper_triangular()));
  try {
    minus_representation(invalid);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotABimodule);
  }
}

TEST_CASE("check_lie_representation rejects a broken pair") {
  // [e1,e2] = e2, but rho(e2) = I cannot be a commutator of anything
  const Algebra br = commutator_algebra(upper_triangular());
  std::vector<Matrix> rho{Matrix(kQ, 2, 2), Matrix::identity(kQ, 2)};
  const CheckReport r =
      check_lie_representation(br, Matrix::identity(kQ, 2), rho, Matrix::identity(kQ, 2));
  CHECK(!r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->where ==
        "rho([x,y]) psi = rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x)");
}

TEST_CASE("dual actions by transposes keep or swap slot order") {
  const Bimodule reg = regular_bimodule(with_identity_twist(sample_b()));
  const Bimodule lr = dual_bimodule(reg, DualOrder::LR);
  const Bimodule rl = dual_bimodule(reg, DualOrder::RL);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(lr.l[i] == reg.l[i].transpose());
    CHECK(lr.r[i] == reg.r[i].transpose());
    CHECK(rl.l[i] == reg.r[i].transpose());
    CHECK(rl.r[i] == reg.l[i].transpose());
  }
  // the base is commutative with commuting operators, so both duals validate
  CHECK(check_bimodule(lr).holds);
  CHECK(check_bimodule(rl).holds);
}

TEST_CASE("bilinear forms must be square and symmetric") {
  CHECK_THROWS_AS(BilinearForm{Matrix(kQ, 2, 3)}, Error);
  Matrix skew(kQ, 2, 2);
  skew.at(0, 1) = Scalar::one(kQ);
  skew.at(1, 0) = Scalar::of_int(kQ, -1);
  CHECK_THROWS_AS(BilinearForm{skew}, Error);

  Matrix hyp(kQ, 2, 2);
  hyp.at(0, 1) = Scalar::one(kQ);
  hyp.at(1, 0) = Scalar::one(kQ);
  const BilinearForm form(hyp);
  Vec x{Scalar::of_int(kQ, 2), Scalar::of_int(kQ, 3)};
  Vec y{Scalar::of_int(kQ, 5), Scalar::of_int(kQ, -1)};
  // 2*(-1) + 3*5 with the off-diagonal pairing
  CHECK(form.eval(x, y) == Scalar::of_int(kQ, 13));
}

TEST_CASE("left invariance of a form is decided exactly") {
  // identity Gram matrix is invariant for this product
  const Algebra b = sample_b();
  const BilinearForm id_form(Matrix::identity(kQ, 2));
  CHECK(check_left_invariant(b, id_form).holds);

  Algebra a(kQ, 2);
  a.at(0, 0, 0) = Scalar::one(kQ);
  a.at(0, 0, 1) = Scalar::one(kQ);
  const CheckReport r = check_left_invariant(a, id_form);
  CHECK(!r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->where == "B(x*y, z) = B(x, y*z)");
}

TEST_CASE("the form intertwiner maps regular actions to their duals") {
  const Algebra b = sample_b();
  const Matrix t = form_intertwiner(b, BilinearForm(Matrix::identity(kQ, 2)));
  CHECK(t.is_identity());

  // degenerate forms are refused
  Matrix deg(kQ, 2, 2);
  deg.at(0, 0) = Scalar::one(kQ);
  CHECK_THROWS_AS(form_intertwiner(b, BilinearForm(deg)), Error);
  try {
    form_intertwiner(b, BilinearForm(deg));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegenerateForm);
  }

  // non-invariant forms are refused
  Algebra bad(kQ, 2);
  bad.at(0, 0, 0) = Scalar::one(kQ);
  bad.at(0, 0, 1) = Scalar::one(kQ);
  try {
    form_intertwiner(bad, BilinearForm(Matrix::identity(kQ, 2)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInvariant);
  }
}
