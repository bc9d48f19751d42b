#include "nearassoc/bialgebra.hpp"

namespace nearassoc {

namespace {

void require_compatible(const Algebra& alg, const Coproduct& cp) {
  if (alg.context() != cp.context())
    fail(Errc::ContextMismatch, "product and coproduct live over different fields");
  if (alg.dim() != cp.dim())
    fail(Errc::DimensionMismatch, "product and coproduct have different dimensions");
}

Matrix canonical_pairing(const FieldContext& ctx, std::size_t n) {
  Matrix gram(ctx, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    gram.at(i, n + i) = Scalar::one(ctx);
    gram.at(n + i, i) = Scalar::one(ctx);
  }
  return gram;
}

bool factors_isotropic(const BilinearForm& form, std::size_t n) {
  const FieldContext& ctx = form.context();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!form.eval(basis_vec(ctx, 2 * n, i), basis_vec(ctx, 2 * n, j)).is_zero())
        return false;
      if (!form.eval(basis_vec(ctx, 2 * n, n + i), basis_vec(ctx, 2 * n, n + j)).is_zero())
        return false;
    }
  return true;
}

void record_matrix_failure(CheckReport& report, const char* label, std::size_t i,
                           std::size_t j, const Matrix& lhs, const Matrix& rhs) {
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    Vec lcol = zero_vec(lhs.context(), lhs.rows());
    Vec rcol = lcol;
    bool differ = false;
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
      lcol[r] = lhs.at(r, c);
      rcol[r] = rhs.at(r, c);
      if (!(lhs.at(r, c) == rhs.at(r, c))) differ = true;
    }
    if (differ) {
      report.holds = false;
      report.witness = Witness{label, {i, j, c}, std::move(lcol), std::move(rcol)};
      return;
    }
  }
}

}  // namespace

Coproduct::Coproduct(FieldContext ctx, std::size_t n) : ctx_(ctx), n_(n) {
  if (n == 0 || n > kMaxDim)
    fail(Errc::DimensionMismatch, "dimension must be between 1 and " + std::to_string(kMaxDim));
  d_.assign(n * n * n, Scalar::zero(ctx_));
}

Matrix Coproduct::coeff_matrix(std::size_t k) const {
  Matrix m(ctx_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = at(k, i, j);
  return m;
}

bool operator==(const Coproduct& lhs, const Coproduct& rhs) {
  if (lhs.ctx_ != rhs.ctx_ || lhs.n_ != rhs.n_) return false;
  for (std::size_t idx = 0; idx < lhs.d_.size(); ++idx)
    if (!(lhs.d_[idx] == rhs.d_[idx])) return false;
  return true;
}

Algebra dual_algebra(const Coproduct& cp) {
  const std::size_t n = cp.dim();
  Algebra dual(cp.context(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) dual.at(i, j, k) = cp.at(k, i, j);
  return dual;
}

Coproduct coproduct_of(const Algebra& alg) {
  const std::size_t n = alg.dim();
  Coproduct cp(alg.context(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) cp.at(k, i, j) = alg.at(i, j, k);
  return cp;
}

CheckReport check_coalgebra_conditions(const Algebra& alg, const Coproduct& cp) {
  require_compatible(alg, cp);
  if (!check_identity(alg, IdentityId::LRCommute).holds)
    fail(Errc::LRNotCommuting, "left and right multiplications of the base do not commute");

  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();

  std::vector<Matrix> d, lops, rops;
  d.reserve(n);
  lops.reserve(n);
  rops.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    d.push_back(cp.coeff_matrix(k));
    const Vec e = basis_vec(ctx, n, k);
    lops.push_back(left_op(alg, e));
    rops.push_back(right_op(alg, e));
  }

  CheckReport report;
  report.check = "coalgebra-conditions";

  // The comultiplication must first induce a product on the dual space that
  // satisfies the defining identity; the two tensor conditions come on top.
  {
    const CheckReport dual_na =
        check_identity(dual_algebra(cp), IdentityId::NearlyAssociative);
    if (!dual_na.holds) {
      report.holds = false;
      report.witness = dual_na.witness;
      if (report.witness) report.witness->where = "dual product defining identity";
      return report;
    }
  }

  const Matrix zero(ctx, n, n);

  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j) {
      // (R(x)(x)id - flip) D(y) + (id(x)L(y) - flip) D(x) = 0
      const Matrix a = rops[i] * d[j];
      const Matrix b = d[i] * lops[j].transpose();
      const Matrix residual = a - a.transpose() + b - b.transpose();
      if (!residual.is_zero()) {
        record_matrix_failure(report, "coproduct compatibility 1", i, j, residual, zero);
        break;
      }
      // (L(x)(x)id) D(y) + flip(L(y)(x)id) D(x)
      //   = D(x*y) = flip(id(x)R(x)) D(y) + (id(x)R(y)) D(x)
      const Matrix left_form = lops[i] * d[j] + (lops[j] * d[i]).transpose();
      Matrix mid(ctx, n, n);
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& coeff = alg.at(i, j, k);
        if (!coeff.is_zero()) mid = mid + coeff * d[k];
      }
      if (!(left_form == mid)) {
        record_matrix_failure(report, "coproduct compatibility 2", i, j, left_form, mid);
        break;
      }
      const Matrix right_form = (d[j] * rops[i].transpose()).transpose() +
                                d[i] * rops[j].transpose();
      if (!(mid == right_form)) {
        record_matrix_failure(report, "coproduct compatibility 2", i, j, mid, right_form);
        break;
      }
    }
  return report;
}

ManinDouble manin_double(const Algebra& alg, const Coproduct& cp) {
  require_compatible(alg, cp);
  if (!check_identity(alg, IdentityId::LRCommute).holds)
    fail(Errc::ConditionsFail, "left and right multiplications of the base do not commute");
  {
    const CheckReport conditions = check_coalgebra_conditions(alg, cp);
    if (!conditions.holds)
      fail(Errc::ConditionsFail, conditions.witness ? conditions.witness->where + " fails"
                                                    : "coproduct compatibility fails");
  }

  const std::size_t n = alg.dim();
  HomAlgebra dbl = double_algebra(assemble_dual_matched_pair(alg, dual_algebra(cp)));
  BilinearForm form(canonical_pairing(alg.context(), n));

  if (!check_identity(dbl.alg, IdentityId::NearlyAssociative).holds)
    fail(Errc::PostconditionFailed, "double product fails the defining identity");
  if (!check_left_invariant(dbl.alg, form).holds)
    fail(Errc::PostconditionFailed, "canonical form is not left-invariant on the double");
  if (!factors_isotropic(form, n))
    fail(Errc::PostconditionFailed, "a factor of the double is not isotropic");
  if (form.matrix().det().is_zero())
    fail(Errc::PostconditionFailed, "canonical form is degenerate");

  return ManinDouble{std::move(dbl), std::move(form)};
}

TripleEquivalence check_manin_triple_equivalence(const Algebra& alg, const Coproduct& cp) {
  require_compatible(alg, cp);
  if (!check_identity(alg, IdentityId::LRCommute).holds)
    fail(Errc::LRNotCommuting, "left and right multiplications of the base do not commute");

  const std::size_t n = alg.dim();
  const Algebra dual = dual_algebra(cp);
  const MatchedPair pair = assemble_dual_matched_pair(alg, dual);

  TripleEquivalence out{};

  {
    const HomAlgebra dbl = assemble_double(pair);
    const BilinearForm form(canonical_pairing(alg.context(), n));
    out.manin_triple = check_identity(dbl.alg, IdentityId::NearlyAssociative).holds &&
                       check_left_invariant(dbl.alg, form).holds &&
                       factors_isotropic(form, n) && !form.matrix().det().is_zero();
  }
  try {
    out.matched_pair = check_matched_pair(pair).holds;
  } catch (const Error& err) {
    if (err.code() != Errc::NotABimodule) throw;
    out.matched_pair = false;
  }
  out.bialgebra = check_coalgebra_conditions(alg, cp).holds;
  return out;
}

}  // namespace nearassoc
