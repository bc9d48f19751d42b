#include "nearassoc/bimodule.hpp"

namespace nearassoc {

namespace {

// l(x) for a coordinate vector x, as the linear combination of generators.
Matrix combine(const std::vector<Matrix>& mats, const Vec& x, const FieldContext& ctx,
               std::size_t m) {
  Matrix out(ctx, m, m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    out = out + x[i] * mats[i];
  }
  return out;
}

// Finds the first column where two maps disagree and records it as a witness.
bool matrices_agree(const Matrix& lhs, const Matrix& rhs, const char* label,
                    std::vector<std::size_t> at, CheckReport& report) {
  if (lhs == rhs) return true;
  const FieldContext& ctx = lhs.context();
  for (std::size_t m = 0; m < lhs.cols(); ++m) {
    Vec lhs_col = lhs.apply(basis_vec(ctx, lhs.cols(), m));
    Vec rhs_col = rhs.apply(basis_vec(ctx, rhs.cols(), m));
    if (lhs_col != rhs_col) {
      at.push_back(m);
      report.holds = false;
      report.witness = Witness{label, std::move(at), std::move(lhs_col), std::move(rhs_col)};
      return false;
    }
  }
  return true;
}

}  // namespace

Bimodule::Bimodule(HomAlgebra base_, std::size_t vdim_, std::vector<Matrix> l_,
                   std::vector<Matrix> r_, std::optional<Matrix> phi_)
    : base(std::move(base_)),
      vdim(vdim_),
      l(std::move(l_)),
      r(std::move(r_)),
      phi(phi_ ? std::move(*phi_) : Matrix::identity(base.alg.context(), vdim_)) {
  const std::size_t n = base.alg.dim();
  if (l.size() != n || r.size() != n)
    fail(Errc::DimensionMismatch, "need one action matrix per basis element: got " +
                                      std::to_string(l.size()) + " left and " +
                                      std::to_string(r.size()) + " right for dimension " +
                                      std::to_string(n));
  auto check_shape = [&](const Matrix& m, const char* what) {
    if (m.rows() != vdim || m.cols() != vdim)
      fail(Errc::DimensionMismatch, std::string(what) + " matrix is " +
                                        std::to_string(m.rows()) + "x" +
                                        std::to_string(m.cols()) + ", expected " +
                                        std::to_string(vdim) + "x" + std::to_string(vdim));
    if (m.context() != base.alg.context())
      fail(Errc::ContextMismatch, std::string(what) + " matrix over " +
                                      m.context().describe() + ", base over " +
                                      base.alg.context().describe());
  };
  for (const Matrix& m : l) check_shape(m, "left action");
  for (const Matrix& m : r) check_shape(m, "right action");
  check_shape(phi, "twist");
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols())
    fail(Errc::DimensionMismatch, "form matrix must be square");
  if (gram_ != gram_.transpose())
    fail(Errc::InvalidParams, "form matrix must be symmetric");
}

Scalar BilinearForm::eval(const Vec& x, const Vec& y) const {
  const Vec by = gram_.apply(y);
  if (x.size() != by.size()) fail(Errc::DimensionMismatch, "form arguments of wrong length");
  Scalar total = Scalar::zero(gram_.context());
  for (std::size_t i = 0; i < x.size(); ++i) total += x[i] * by[i];
  return total;
}

CheckReport check_bimodule(const Bimodule& b) {
  const Algebra& alg = b.base.alg;
  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();
  const std::size_t m = b.vdim;

  CheckReport report;
  report.check = "bimodule";
  if (!check_identity(b.base, IdentityId::HomNearlyAssociative).holds)
    report.warnings.push_back("base algebra fails its defining identity");

  // alpha(e_i) combinations of the generators
  std::vector<Matrix> l_alpha, r_alpha;
  l_alpha.reserve(n);
  r_alpha.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ai = b.base.alpha.apply(basis_vec(ctx, n, i));
    l_alpha.push_back(combine(b.l, ai, ctx, m));
    r_alpha.push_back(combine(b.r, ai, ctx, m));
  }

  for (std::size_t i = 0; i < n && report.holds; ++i) {
    matrices_agree(b.phi * b.l[i], l_alpha[i] * b.phi, "phi l(x) = l(alpha(x)) phi", {i},
                   report);
    if (!report.holds) break;
    matrices_agree(b.phi * b.r[i], r_alpha[i] * b.phi, "phi r(x) = r(alpha(x)) phi", {i},
                   report);
  }
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j) {
      const Vec prod_ji = alg.basis_product(j, i);
      const Vec prod_ij = alg.basis_product(i, j);
      matrices_agree(l_alpha[i] * b.l[j], r_alpha[j] * b.r[i],
                     "l(alpha(x)) l(y) = r(alpha(y)) r(x)", {i, j}, report);
      if (!report.holds) break;
      matrices_agree(l_alpha[i] * b.r[j], combine(b.l, prod_ji, ctx, m) * b.phi,
                     "l(alpha(x)) r(y) = l(y*x) phi", {i, j}, report);
      if (!report.holds) break;
      matrices_agree(r_alpha[i] * b.l[j], combine(b.r, prod_ij, ctx, m) * b.phi,
                     "r(alpha(x)) l(y) = r(x*y) phi", {i, j}, report);
    }
  return report;
}

Bimodule regular_bimodule(const HomAlgebra& h) {
  const FieldContext& ctx = h.alg.context();
  const std::size_t n = h.alg.dim();
  std::vector<Matrix> l, r;
  l.reserve(n);
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    l.push_back(left_op(h.alg, basis_vec(ctx, n, i)));
    r.push_back(right_op(h.alg, basis_vec(ctx, n, i)));
  }
  return Bimodule(h, n, std::move(l), std::move(r), h.alpha);
}

namespace {

void require_valid(const Bimodule& b) {
  const CheckReport report = check_bimodule(b);
  if (!report.holds)
    fail(Errc::NotABimodule,
         report.witness ? "equation " + report.witness->where + " fails"
                        : "bimodule equations fail");
}

}  // namespace

HomAlgebra semidirect(const Bimodule& b) {
  require_valid(b);
  const Algebra& alg = b.base.alg;
  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();
  const std::size_t m = b.vdim;

  Algebra big(ctx, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) big.at(i, j, k) = alg.at(i, j, k);
  // e_i * v_j = l(e_i) v_j, v_i * e_j = r(e_j) v_i
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < m; ++t) {
        big.at(i, n + j, n + t) = b.l[i].at(t, j);
        big.at(n + j, i, n + t) = b.r[i].at(t, j);
      }

  Matrix twist(ctx, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) twist.at(i, j) = b.base.alpha.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) twist.at(n + i, n + j) = b.phi.at(i, j);

  HomAlgebra result(std::move(big), std::move(twist));
  if (!check_identity(result, IdentityId::HomNearlyAssociative).holds)
    fail(Errc::PostconditionFailed, "semidirect product fails the defining identity");
  return result;
}

Algebra induced_lie_bracket(const Bimodule& b) {
  require_valid(b);
  const Algebra& alg = b.base.alg;
  const std::size_t n = alg.dim();
  const std::size_t m = b.vdim;

  Algebra bracket(alg.context(), n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        bracket.at(i, j, k) = alg.at(i, j, k) - alg.at(j, i, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < m; ++t) {
        const Scalar action = b.l[i].at(t, j) - b.r[i].at(t, j);
        bracket.at(i, n + j, n + t) = action;
        bracket.at(n + j, i, n + t) = -action;
      }
  return bracket;
}

LieRepresentation minus_representation(const Bimodule& b) {
  require_valid(b);
  std::vector<Matrix> rho;
  rho.reserve(b.l.size());
  for (std::size_t i = 0; i < b.l.size(); ++i) rho.push_back(b.l[i] - b.r[i]);
  return LieRepresentation{std::move(rho), b.phi};
}

CheckReport check_lie_representation(const Algebra& bracket, const Matrix& alpha,
                                     const std::vector<Matrix>& rho, const Matrix& psi) {
  const FieldContext& ctx = bracket.context();
  const std::size_t n = bracket.dim();
  if (rho.size() != n)
    fail(Errc::DimensionMismatch, "need one representation matrix per basis element");
  if (alpha.rows() != n || alpha.cols() != n)
    fail(Errc::DimensionMismatch, "twist map shape does not match the bracket dimension");
  const std::size_t m = psi.rows();
  for (const Matrix& mat : rho)
    if (mat.rows() != m || mat.cols() != m || psi.cols() != m)
      fail(Errc::DimensionMismatch, "representation matrices and twist must share a shape");

  CheckReport report;
  report.check = "lie-representation";
  if (!check_hom_lie(bracket, alpha).holds)
    report.warnings.push_back("bracket fails the twisted Jacobi identity");

  std::vector<Matrix> rho_alpha;
  rho_alpha.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    rho_alpha.push_back(combine(rho, alpha.apply(basis_vec(ctx, n, i)), ctx, m));

  for (std::size_t i = 0; i < n && report.holds; ++i)
    matrices_agree(rho_alpha[i] * psi, psi * rho[i], "rho(alpha(x)) psi = psi rho(x)", {i},
                   report);
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j) {
      const Matrix lhs = combine(rho, bracket.basis_product(i, j), ctx, m) * psi;
      const Matrix rhs = rho_alpha[i] * rho[j] - rho_alpha[j] * rho[i];
      matrices_agree(lhs, rhs, "rho([x,y]) psi = rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x)",
                     {i, j}, report);
    }
  return report;
}

Bimodule dual_bimodule(const Bimodule& b, DualOrder order) {
  std::vector<Matrix> l_star, r_star;
  l_star.reserve(b.l.size());
  r_star.reserve(b.r.size());
  for (const Matrix& m : b.l) l_star.push_back(m.transpose());
  for (const Matrix& m : b.r) r_star.push_back(m.transpose());
  if (order == DualOrder::LR)
    return Bimodule(b.base, b.vdim, std::move(l_star), std::move(r_star),
                    b.phi.transpose());
  return Bimodule(b.base, b.vdim, std::move(r_star), std::move(l_star), b.phi.transpose());
}

CheckReport check_left_invariant(const Algebra& alg, const BilinearForm& form) {
  if (form.dim() != alg.dim())
    fail(Errc::DimensionMismatch, "form dimension does not match the algebra");
  if (form.context() != alg.context())
    fail(Errc::ContextMismatch, "form and algebra over different fields");
  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();
  CheckReport report;
  report.check = "left-invariant";
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j)
      for (std::size_t k = 0; k < n && report.holds; ++k) {
        const Scalar lhs = form.eval(alg.basis_product(i, j), basis_vec(ctx, n, k));
        const Scalar rhs = form.eval(basis_vec(ctx, n, i), alg.basis_product(j, k));
        if (lhs != rhs) {
          report.holds = false;
          report.witness = Witness{"B(x*y, z) = B(x, y*z)", {i, j, k}, Vec{lhs}, Vec{rhs}};
        }
      }
  return report;
}

Matrix form_intertwiner(const Algebra& alg, const BilinearForm& form) {
  if (form.dim() != alg.dim())
    fail(Errc::DimensionMismatch, "form dimension does not match the algebra");
  if (form.matrix().det().is_zero()) fail(Errc::DegenerateForm, "form has zero determinant");
  if (!check_left_invariant(alg, form).holds)
    fail(Errc::NotInvariant, "form is not left-invariant");

  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();
  const Matrix& t = form.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = basis_vec(ctx, n, i);
    const Matrix left = left_op(alg, e);
    const Matrix right = right_op(alg, e);
    if (t * left != right.transpose() * t || t * right != left.transpose() * t)
      fail(Errc::IntertwinerFails,
           "form map does not intertwine the regular actions with their duals");
  }
  return t;
}

}  // namespace nearassoc
