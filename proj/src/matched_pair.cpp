#include "nearassoc/matched_pair.hpp"

namespace nearassoc {

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vec& x, const FieldContext& ctx,
               std::size_t m) {
  Matrix out(ctx, m, m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    out = out + x[i] * mats[i];
  }
  return out;
}

Vec column(const Matrix& m, std::size_t j) {
  Vec out = zero_vec(m.context(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.at(i, j);
  return out;
}

void record_failure(CheckReport& report, const char* label, std::vector<std::size_t> at,
                    Vec residual, const Vec& zero) {
  report.holds = false;
  report.witness = Witness{label, std::move(at), std::move(residual), zero};
}

}  // namespace

MatchedPair::MatchedPair(HomAlgebra a_, HomAlgebra b_, std::vector<Matrix> la_,
                         std::vector<Matrix> ra_, std::vector<Matrix> lb_,
                         std::vector<Matrix> rb_)
    : a(std::move(a_)),
      b(std::move(b_)),
      la(std::move(la_)),
      ra(std::move(ra_)),
      lb(std::move(lb_)),
      rb(std::move(rb_)) {
  if (a.alg.context() != b.alg.context())
    fail(Errc::ContextMismatch, "the two algebras live over different fields");
  const std::size_t n = a.alg.dim();
  const std::size_t m = b.alg.dim();
  if (la.size() != n || ra.size() != n)
    fail(Errc::DimensionMismatch, "need one action on B per basis element of A");
  if (lb.size() != m || rb.size() != m)
    fail(Errc::DimensionMismatch, "need one action on A per basis element of B");
  auto check_shape = [](const std::vector<Matrix>& mats, std::size_t dim, const char* what) {
    for (const Matrix& mat : mats)
      if (mat.rows() != dim || mat.cols() != dim)
        fail(Errc::DimensionMismatch, std::string(what) + " matrices must be " +
                                          std::to_string(dim) + "x" + std::to_string(dim));
  };
  check_shape(la, m, "la");
  check_shape(ra, m, "ra");
  check_shape(lb, n, "lb");
  check_shape(rb, n, "rb");
}

CheckReport check_matched_pair(const MatchedPair& mp) {
  const Algebra& alg_a = mp.a.alg;
  const Algebra& alg_b = mp.b.alg;
  const FieldContext& ctx = alg_a.context();
  const std::size_t n = alg_a.dim();
  const std::size_t m = alg_b.dim();

  {
    const Bimodule on_b(mp.a, m, mp.la, mp.ra, mp.b.alpha);
    if (!check_bimodule(on_b).holds)
      fail(Errc::NotABimodule, "the actions of A on B fail the bimodule equations");
    const Bimodule on_a(mp.b, n, mp.lb, mp.rb, mp.a.alpha);
    if (!check_bimodule(on_a).holds)
      fail(Errc::NotABimodule, "the actions of B on A fail the bimodule equations");
  }

  CheckReport report;
  report.check = "matched-pair";

  // alpha images of basis vectors
  std::vector<Vec> alpha_a(n), alpha_b(m);
  for (std::size_t i = 0; i < n; ++i) alpha_a[i] = mp.a.alpha.apply(basis_vec(ctx, n, i));
  for (std::size_t s = 0; s < m; ++s) alpha_b[s] = mp.b.alpha.apply(basis_vec(ctx, m, s));

  const Vec zero_a = zero_vec(ctx, n);
  const Vec zero_b = zero_vec(ctx, m);

  // Equations on (x, y, a) with values in A.
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j)
      for (std::size_t s = 0; s < m && report.holds; ++s) {
        // aA(x)·(rB(a)y) + rB(lA(y)a)aA(x) - (lB(a)x)·aA(y) - lB(rA(x)a)aA(y)
        Vec r1 = multiply(alg_a, alpha_a[i], column(mp.rb[s], j));
        r1 = add(r1, combine(mp.rb, column(mp.la[j], s), ctx, n).apply(alpha_a[i]));
        r1 = sub(r1, multiply(alg_a, column(mp.lb[s], i), alpha_a[j]));
        r1 = sub(r1, combine(mp.lb, column(mp.ra[i], s), ctx, n).apply(alpha_a[j]));
        if (!is_zero(r1)) {
          record_failure(report, "mixed compatibility 1", {i, j, s}, std::move(r1), zero_a);
          break;
        }
        // aA(x)·(lB(a)y) + rB(rA(y)a)aA(x) - rB(aB(a))(y·x)
        Vec r2 = multiply(alg_a, alpha_a[i], column(mp.lb[s], j));
        r2 = add(r2, combine(mp.rb, column(mp.ra[j], s), ctx, n).apply(alpha_a[i]));
        r2 = sub(r2, combine(mp.rb, alpha_b[s], ctx, n).apply(alg_a.basis_product(j, i)));
        if (!is_zero(r2)) {
          record_failure(report, "mixed compatibility 2", {i, j, s}, std::move(r2), zero_a);
          break;
        }
        // lB(aB(a))(x·y) - (rB(a)y)·aA(x) - lB(lA(y)a)aA(x)
        Vec r3 = combine(mp.lb, alpha_b[s], ctx, n).apply(alg_a.basis_product(i, j));
        r3 = sub(r3, multiply(alg_a, column(mp.rb[s], j), alpha_a[i]));
        r3 = sub(r3, combine(mp.lb, column(mp.la[j], s), ctx, n).apply(alpha_a[i]));
        if (!is_zero(r3)) {
          record_failure(report, "mixed compatibility 3", {i, j, s}, std::move(r3), zero_a);
          break;
        }
      }

  // Equations on (x, a, b) with values in B.
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t s = 0; s < m && report.holds; ++s)
      for (std::size_t t = 0; t < m && report.holds; ++t) {
        // aB(a)∘(rA(x)b) + rA(lB(b)x)aB(a) - (lA(x)a)∘aB(b) - lA(rB(a)x)aB(b)
        Vec r4 = multiply(alg_b, alpha_b[s], column(mp.ra[i], t));
        r4 = add(r4, combine(mp.ra, column(mp.lb[t], i), ctx, m).apply(alpha_b[s]));
        r4 = sub(r4, multiply(alg_b, column(mp.la[i], s), alpha_b[t]));
        r4 = sub(r4, combine(mp.la, column(mp.rb[s], i), ctx, m).apply(alpha_b[t]));
        if (!is_zero(r4)) {
          record_failure(report, "mixed compatibility 4", {i, s, t}, std::move(r4), zero_b);
          break;
        }
        // aB(a)∘(lA(x)b) + rA(rB(b)x)aB(a) - rA(aA(x))(b∘a)
        Vec r5 = multiply(alg_b, alpha_b[s], column(mp.la[i], t));
        r5 = add(r5, combine(mp.ra, column(mp.rb[t], i), ctx, m).apply(alpha_b[s]));
        r5 = sub(r5, combine(mp.ra, alpha_a[i], ctx, m).apply(alg_b.basis_product(t, s)));
        if (!is_zero(r5)) {
          record_failure(report, "mixed compatibility 5", {i, s, t}, std::move(r5), zero_b);
          break;
        }
        // lA(aA(x))(b∘a) - (rA(x)a)∘aB(b) - lA(lB(a)x)aB(b)
        Vec r6 = combine(mp.la, alpha_a[i], ctx, m).apply(alg_b.basis_product(t, s));
        r6 = sub(r6, multiply(alg_b, column(mp.ra[i], s), alpha_b[t]));
        r6 = sub(r6, combine(mp.la, column(mp.lb[s], i), ctx, m).apply(alpha_b[t]));
        if (!is_zero(r6)) {
          record_failure(report, "mixed compatibility 6", {i, s, t}, std::move(r6), zero_b);
          break;
        }
      }
  return report;
}

HomAlgebra assemble_double(const MatchedPair& mp) {
  const Algebra& alg_a = mp.a.alg;
  const Algebra& alg_b = mp.b.alg;
  const FieldContext& ctx = alg_a.context();
  const std::size_t n = alg_a.dim();
  const std::size_t m = alg_b.dim();

  Algebra big(ctx, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) big.at(i, j, k) = alg_a.at(i, j, k);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t u = 0; u < m; ++u) big.at(n + s, n + t, n + u) = alg_b.at(s, t, u);
  // e_i * f_t = rb(f_t)e_i + la(e_i)f_t;  f_s * e_j = lb(f_s)e_j + ra(e_j)f_s
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < m; ++t) {
      for (std::size_t k = 0; k < n; ++k) big.at(i, n + t, k) = mp.rb[t].at(k, i);
      for (std::size_t u = 0; u < m; ++u) big.at(i, n + t, n + u) = mp.la[i].at(u, t);
      for (std::size_t k = 0; k < n; ++k) big.at(n + t, i, k) = mp.lb[t].at(k, i);
      for (std::size_t u = 0; u < m; ++u) big.at(n + t, i, n + u) = mp.ra[i].at(u, t);
    }

  Matrix twist(ctx, n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) twist.at(i, j) = mp.a.alpha.at(i, j);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) twist.at(n + s, n + t) = mp.b.alpha.at(s, t);

  return HomAlgebra(std::move(big), std::move(twist));
}

HomAlgebra double_algebra(const MatchedPair& mp) {
  const CheckReport report = check_matched_pair(mp);
  if (!report.holds)
    fail(Errc::NotAMatchedPair,
         report.witness ? report.witness->where + " fails" : "compatibility equations fail");

  HomAlgebra result = assemble_double(mp);
  if (!check_identity(result, IdentityId::HomNearlyAssociative).holds)
    fail(Errc::PostconditionFailed, "double product fails the defining identity");
  return result;
}

CheckReport check_lie_matched_pair(const LieMatchedPair& lmp) {
  const FieldContext& ctx = lmp.g.context();
  const std::size_t n = lmp.g.dim();
  const std::size_t m = lmp.h.dim();
  if (lmp.rho.size() != n || lmp.mu.size() != m)
    fail(Errc::DimensionMismatch, "need one action matrix per basis element");

  if (!check_lie_representation(lmp.g, lmp.alpha_g, lmp.rho, lmp.alpha_h).holds)
    fail(Errc::NotARepresentation, "rho is not a representation of the first bracket");
  if (!check_lie_representation(lmp.h, lmp.alpha_h, lmp.mu, lmp.alpha_g).holds)
    fail(Errc::NotARepresentation, "mu is not a representation of the second bracket");

  CheckReport report;
  report.check = "lie-matched-pair";

  std::vector<Vec> alpha_g(n), alpha_h(m);
  for (std::size_t i = 0; i < n; ++i) alpha_g[i] = lmp.alpha_g.apply(basis_vec(ctx, n, i));
  for (std::size_t s = 0; s < m; ++s) alpha_h[s] = lmp.alpha_h.apply(basis_vec(ctx, m, s));
  const Vec zero_g = zero_vec(ctx, n);
  const Vec zero_h = zero_vec(ctx, m);

  // rho(aG(x))[a,b] - [rho(x)a, aH(b)] - [aH(a), rho(x)b]
  //   + rho(mu(a)x)aH(b) - rho(mu(b)x)aH(a) = 0
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t s = 0; s < m && report.holds; ++s)
      for (std::size_t t = 0; t < m && report.holds; ++t) {
        Vec r = combine(lmp.rho, alpha_g[i], ctx, m).apply(lmp.h.basis_product(s, t));
        r = sub(r, multiply(lmp.h, lmp.rho[i].apply(basis_vec(ctx, m, s)), alpha_h[t]));
        r = sub(r, multiply(lmp.h, alpha_h[s], lmp.rho[i].apply(basis_vec(ctx, m, t))));
        r = add(r, combine(lmp.rho, column(lmp.mu[s], i), ctx, m).apply(alpha_h[t]));
        r = sub(r, combine(lmp.rho, column(lmp.mu[t], i), ctx, m).apply(alpha_h[s]));
        if (!is_zero(r)) {
          record_failure(report, "bracket compatibility 1", {i, s, t}, std::move(r), zero_h);
        }
      }
  // mu(aH(a))[x,y] - [mu(a)x, aG(y)] - [aG(x), mu(a)y]
  //   + mu(rho(x)a)aG(y) - mu(rho(y)a)aG(x) = 0
  for (std::size_t s = 0; s < m && report.holds; ++s)
    for (std::size_t i = 0; i < n && report.holds; ++i)
      for (std::size_t j = 0; j < n && report.holds; ++j) {
        Vec r = combine(lmp.mu, alpha_h[s], ctx, n).apply(lmp.g.basis_product(i, j));
        r = sub(r, multiply(lmp.g, lmp.mu[s].apply(basis_vec(ctx, n, i)), alpha_g[j]));
        r = sub(r, multiply(lmp.g, alpha_g[i], lmp.mu[s].apply(basis_vec(ctx, n, j))));
        r = add(r, combine(lmp.mu, column(lmp.rho[i], s), ctx, n).apply(alpha_g[j]));
        r = sub(r, combine(lmp.mu, column(lmp.rho[j], s), ctx, n).apply(alpha_g[i]));
        if (!is_zero(r)) {
          record_failure(report, "bracket compatibility 2", {s, i, j}, std::move(r), zero_g);
        }
      }
  return report;
}

LieMatchedPair induced_lie_matched_pair(const MatchedPair& mp) {
  const CheckReport report = check_matched_pair(mp);
  if (!report.holds)
    fail(Errc::NotAMatchedPair,
         report.witness ? report.witness->where + " fails" : "compatibility equations fail");

  std::vector<Matrix> rho, mu;
  rho.reserve(mp.la.size());
  mu.reserve(mp.lb.size());
  for (std::size_t i = 0; i < mp.la.size(); ++i) rho.push_back(mp.la[i] - mp.ra[i]);
  for (std::size_t s = 0; s < mp.lb.size(); ++s) mu.push_back(mp.lb[s] - mp.rb[s]);

  LieMatchedPair lmp{commutator_algebra(mp.a.alg),
                     commutator_algebra(mp.b.alg),
                     std::move(rho),
                     std::move(mu),
                     mp.a.alpha,
                     mp.b.alpha};
  if (!check_lie_matched_pair(lmp).holds)
    fail(Errc::PostconditionFailed, "induced bracket pair fails its compatibility equations");
  return lmp;
}

MatchedPair assemble_dual_matched_pair(const Algebra& alg, const Algebra& dual_product) {
  if (alg.dim() != dual_product.dim())
    fail(Errc::DimensionMismatch, "dual product must live on a space of the same dimension");
  if (alg.context() != dual_product.context())
    fail(Errc::ContextMismatch, "dual product over a different field");
  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();
  std::vector<Matrix> la, ra, lb, rb;
  la.reserve(n);
  ra.reserve(n);
  lb.reserve(n);
  rb.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = basis_vec(ctx, n, i);
    la.push_back(right_op(alg, e).transpose());
    ra.push_back(left_op(alg, e).transpose());
    lb.push_back(right_op(dual_product, e).transpose());
    rb.push_back(left_op(dual_product, e).transpose());
  }
  return MatchedPair(with_identity_twist(alg), with_identity_twist(dual_product),
                     std::move(la), std::move(ra), std::move(lb), std::move(rb));
}

CheckReport check_dual_matched_pair(const Algebra& alg, const Algebra& dual_product) {
  if (alg.dim() != dual_product.dim())
    fail(Errc::DimensionMismatch, "dual product must live on a space of the same dimension");
  if (alg.context() != dual_product.context())
    fail(Errc::ContextMismatch, "dual product over a different field");
  if (!check_identity(alg, IdentityId::LRCommute).holds)
    fail(Errc::LRNotCommuting, "left and right multiplications of the base do not commute");

  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();
  CheckReport report;
  report.check = "dual-matched-pair";

  // The dual-side bimodule axioms transpose to the operator identities of
  // the dual product, i.e. to its defining identity.
  {
    const CheckReport dual_na = check_identity(dual_product, IdentityId::NearlyAssociative);
    if (!dual_na.holds) {
      report.holds = false;
      report.witness = dual_na.witness;
      if (report.witness) report.witness->where = "dual product defining identity";
      return report;
    }
  }

  std::vector<Matrix> l_dot, r_dot, l_circ, r_circ;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = basis_vec(ctx, n, i);
    l_dot.push_back(left_op(alg, e).transpose());
    r_dot.push_back(right_op(alg, e).transpose());
    l_circ.push_back(left_op(dual_product, e).transpose());
    r_circ.push_back(right_op(dual_product, e).transpose());
  }
  const Vec zero = zero_vec(ctx, n);

  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j)
      for (std::size_t s = 0; s < n && report.holds; ++s) {
        const Vec x = basis_vec(ctx, n, i);
        const Vec y = basis_vec(ctx, n, j);
        // Lo*(Rd*(x)a)y + y·(Lo*(a)x) - (Ro*(a)y)·x - Ro*(Ld*(y)a)x
        Vec r1 = combine(l_circ, column(r_dot[i], s), ctx, n).apply(y);
        r1 = add(r1, multiply(alg, y, column(l_circ[s], i)));
        r1 = sub(r1, multiply(alg, column(r_circ[s], j), x));
        r1 = sub(r1, combine(r_circ, column(l_dot[j], s), ctx, n).apply(x));
        if (!is_zero(r1)) {
          record_failure(report, "reduced equation 1", {i, j, s}, std::move(r1), zero);
          break;
        }
        // Lo*(a)(x·y) - y·(Ro*(a)x) - Lo*(Ld*(x)a)y
        Vec r2 = l_circ[s].apply(alg.basis_product(i, j));
        r2 = sub(r2, multiply(alg, y, column(r_circ[s], i)));
        r2 = sub(r2, combine(l_circ, column(l_dot[i], s), ctx, n).apply(y));
        if (!is_zero(r2)) {
          record_failure(report, "reduced equation 2", {i, j, s}, std::move(r2), zero);
          break;
        }
        // Ro*(a)(x·y) - (Lo*(a)y)·x - Ro*(Rd*(y)a)x
        Vec r3 = r_circ[s].apply(alg.basis_product(i, j));
        r3 = sub(r3, multiply(alg, column(l_circ[s], j), x));
        r3 = sub(r3, combine(r_circ, column(r_dot[j], s), ctx, n).apply(x));
        if (!is_zero(r3)) {
          record_failure(report, "reduced equation 3", {i, j, s}, std::move(r3), zero);
          break;
        }
      }
  return report;
}

}  // namespace nearassoc
