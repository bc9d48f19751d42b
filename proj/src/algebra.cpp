#include "nearassoc/algebra.hpp"

#include <array>

namespace nearassoc {

namespace {

void require_vector(const Algebra& alg, const Vec& v, const char* what) {
  if (v.size() != alg.dim())
    fail(Errc::DimensionMismatch, std::string(what) + " has length " +
                                      std::to_string(v.size()) + ", expected " +
                                      std::to_string(alg.dim()));
  for (const Scalar& entry : v)
    if (entry.context() != alg.context())
      fail(Errc::ContextMismatch, std::string(what) + " scalars are from " +
                                      entry.context().describe() + ", algebra is over " +
                                      alg.context().describe());
}

struct SignedPerm {
  std::array<std::size_t, 3> slots;  // argument fed into each associator slot
  int sign;
};

constexpr SignedPerm kId{{0, 1, 2}, +1};
constexpr SignedPerm kSwap01{{1, 0, 2}, -1};
constexpr SignedPerm kSwap12{{0, 2, 1}, -1};
constexpr SignedPerm kSwap02{{2, 1, 0}, -1};
constexpr SignedPerm kCycle120{{1, 2, 0}, +1};
constexpr SignedPerm kCycle201{{2, 0, 1}, +1};

const std::vector<SignedPerm>& subgroup_elements(IdentityId id) {
  static const std::vector<SignedPerm> g1{kId};
  static const std::vector<SignedPerm> g2{kId, kSwap01};
  static const std::vector<SignedPerm> g3{kId, kSwap12};
  static const std::vector<SignedPerm> g4{kId, kSwap02};
  static const std::vector<SignedPerm> g5{kId, kCycle120, kCycle201};
  static const std::vector<SignedPerm> g6{kId,       kSwap01,   kSwap12,
                                          kSwap02,   kCycle120, kCycle201};
  switch (id) {
    case IdentityId::GHomAssociativeG1: return g1;
    case IdentityId::GHomAssociativeG2: return g2;
    case IdentityId::GHomAssociativeG3: return g3;
    case IdentityId::GHomAssociativeG4: return g4;
    case IdentityId::GHomAssociativeG5: return g5;
    default: return g6;
  }
}

// Signed sum of hom-associators over a subgroup of the permutations of the
// three arguments.
Vec alternating_sum(const HomAlgebra& h, const std::vector<SignedPerm>& perms,
                    const Vec& x, const Vec& y, const Vec& z) {
  const std::array<const Vec*, 3> args{&x, &y, &z};
  Vec total = zero_vec(h.alg.context(), h.alg.dim());
  for (const SignedPerm& perm : perms) {
    Vec term = hom_associator(h, *args[perm.slots[0]], *args[perm.slots[1]],
                              *args[perm.slots[2]]);
    total = perm.sign > 0 ? add(total, term) : sub(total, term);
  }
  return total;
}

// Checks lhs(i,j,k) == rhs(i,j,k) over all basis triples; fills the witness
// on the first failure.
template <typename LhsFn, typename RhsFn>
bool check_triples(std::size_t n, const std::string& where, LhsFn&& lhs_at,
                   RhsFn&& rhs_at, CheckReport& report) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = lhs_at(i, j, k);
        Vec rhs = rhs_at(i, j, k);
        if (lhs != rhs) {
          report.holds = false;
          report.witness = Witness{where, {i, j, k}, std::move(lhs), std::move(rhs)};
          return false;
        }
      }
  return true;
}

// The quantified diagonal form assoc(x, y, x) = 0: equivalent, over any
// field, to vanishing on basis diagonals plus symmetrized off-diagonal pairs.
template <typename Assoc>
void check_diagonal_form(const FieldContext& ctx, std::size_t n, Assoc&& assoc,
                         CheckReport& report) {
  const Vec zero = zero_vec(ctx, n);
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j) {
      Vec value = assoc(i, j, i);
      if (!is_zero(value)) {
        report.holds = false;
        report.witness = Witness{"diagonal", {i, j, i}, std::move(value), zero};
      }
    }
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t k = i + 1; k < n && report.holds; ++k)
      for (std::size_t j = 0; j < n && report.holds; ++j) {
        Vec sum = add(assoc(i, j, k), assoc(k, j, i));
        if (!is_zero(sum)) {
          report.holds = false;
          report.witness = Witness{"symmetrized pair", {i, j, k}, std::move(sum), zero};
        }
      }
  // The trilinear variant assoc(x,y,z) = -assoc(z,y,x); coincides with the
  // diagonal form away from characteristic 2.
  report.trilinear_variant = true;
  for (std::size_t i = 0; i < n && *report.trilinear_variant; ++i)
    for (std::size_t j = 0; j < n && *report.trilinear_variant; ++j)
      for (std::size_t k = 0; k < n && *report.trilinear_variant; ++k)
        if (!is_zero(add(assoc(i, j, k), assoc(k, j, i)))) report.trilinear_variant = false;
}

}  // namespace

Algebra::Algebra(const FieldContext& ctx, std::size_t n)
    : ctx_(ctx), n_(n), c_(n * n * n, Scalar::zero(ctx)) {
  if (n < 1 || n > kMaxDim)
    fail(Errc::DimensionMismatch,
         "dimension must be between 1 and " + std::to_string(kMaxDim) + ", got " +
             std::to_string(n));
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  Vec out = zero_vec(ctx_, n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = at(i, j, k);
  return out;
}

bool operator==(const Algebra& lhs, const Algebra& rhs) {
  if (lhs.ctx_ != rhs.ctx_ || lhs.n_ != rhs.n_) return false;
  for (std::size_t i = 0; i < lhs.c_.size(); ++i)
    if (lhs.c_[i] != rhs.c_[i]) return false;
  return true;
}

HomAlgebra::HomAlgebra(Algebra a, Matrix tw) : alg(std::move(a)), alpha(std::move(tw)) {
  if (alpha.rows() != alg.dim() || alpha.cols() != alg.dim())
    fail(Errc::DimensionMismatch, "twist map is " + std::to_string(alpha.rows()) + "x" +
                                      std::to_string(alpha.cols()) + " on a dimension-" +
                                      std::to_string(alg.dim()) + " algebra");
  if (alpha.context() != alg.context())
    fail(Errc::ContextMismatch, "twist map over " + alpha.context().describe() +
                                    ", algebra over " + alg.context().describe());
}

HomAlgebra with_identity_twist(const Algebra& alg) {
  return HomAlgebra(alg, Matrix::identity(alg.context(), alg.dim()));
}

Vec multiply(const Algebra& alg, const Vec& x, const Vec& y) {
  require_vector(alg, x, "left factor");
  require_vector(alg, y, "right factor");
  const std::size_t n = alg.dim();
  Vec out = zero_vec(alg.context(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar coeff = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k] += coeff * alg.at(i, j, k);
    }
  }
  return out;
}

Matrix left_op(const Algebra& alg, const Vec& x) {
  require_vector(alg, x, "left factor");
  const std::size_t n = alg.dim();
  Matrix m(alg.context(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m.at(k, j) += x[i] * alg.at(i, j, k);
  }
  return m;
}

Matrix right_op(const Algebra& alg, const Vec& x) {
  require_vector(alg, x, "right factor");
  const std::size_t n = alg.dim();
  Matrix m(alg.context(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) m.at(k, i) += x[j] * alg.at(i, j, k);
  }
  return m;
}

Vec associator(const Algebra& alg, const Vec& x, const Vec& y, const Vec& z) {
  return sub(multiply(alg, multiply(alg, x, y), z), multiply(alg, x, multiply(alg, y, z)));
}

Vec hom_associator(const HomAlgebra& h, const Vec& x, const Vec& y, const Vec& z) {
  return sub(multiply(h.alg, multiply(h.alg, x, y), h.alpha.apply(z)),
             multiply(h.alg, h.alpha.apply(x), multiply(h.alg, y, z)));
}

Algebra commutator_algebra(const Algebra& alg) {
  const std::size_t n = alg.dim();
  Algebra bracket(alg.context(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        bracket.at(i, j, k) = alg.at(i, j, k) - alg.at(j, i, k);
  return bracket;
}

std::string identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::NearlyAssociative: return "nearly-associative";
    case IdentityId::Associative: return "associative";
    case IdentityId::AntiFlexible: return "anti-flexible";
    case IdentityId::Flexible: return "flexible";
    case IdentityId::HomNearlyAssociative: return "hom-nearly-associative";
    case IdentityId::HomAssociative: return "hom-associative";
    case IdentityId::GHomAssociativeG1: return "g-hom-associative-g1";
    case IdentityId::GHomAssociativeG2: return "g-hom-associative-g2";
    case IdentityId::GHomAssociativeG3: return "g-hom-associative-g3";
    case IdentityId::GHomAssociativeG4: return "g-hom-associative-g4";
    case IdentityId::GHomAssociativeG5: return "g-hom-associative-g5";
    case IdentityId::GHomAssociativeG6: return "g-hom-associative-g6";
    case IdentityId::LRCommute: return "lr-commute";
    case IdentityId::HomFlexible: return "hom-flexible";
    case IdentityId::HomAntiFlexible: return "hom-anti-flexible";
  }
  return "?";
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids{
      IdentityId::NearlyAssociative,    IdentityId::Associative,
      IdentityId::AntiFlexible,         IdentityId::Flexible,
      IdentityId::HomNearlyAssociative, IdentityId::HomAssociative,
      IdentityId::GHomAssociativeG1,    IdentityId::GHomAssociativeG2,
      IdentityId::GHomAssociativeG3,    IdentityId::GHomAssociativeG4,
      IdentityId::GHomAssociativeG5,    IdentityId::GHomAssociativeG6,
      IdentityId::LRCommute,            IdentityId::HomFlexible,
      IdentityId::HomAntiFlexible,
  };
  return ids;
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (IdentityId id : all_identities())
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

bool is_plain_identity(IdentityId id) {
  switch (id) {
    case IdentityId::NearlyAssociative:
    case IdentityId::Associative:
    case IdentityId::AntiFlexible:
    case IdentityId::Flexible:
    case IdentityId::LRCommute:
      return true;
    default:
      return false;
  }
}

CheckReport check_identity(const HomAlgebra& h, IdentityId id) {
  const Algebra& alg = h.alg;
  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();
  CheckReport report;
  report.check = identity_name(id);

  auto basis = [&](std::size_t i) { return basis_vec(ctx, n, i); };
  auto product = [&](std::size_t i, std::size_t j) { return alg.basis_product(i, j); };
  const Vec zero = zero_vec(ctx, n);

  switch (id) {
    case IdentityId::NearlyAssociative:
      // x*(y*z) = (z*x)*y
      check_triples(
          n, "basis triple",
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return multiply(alg, basis(i), product(j, k));
          },
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return multiply(alg, product(k, i), basis(j));
          },
          report);
      break;
    case IdentityId::Associative:
      check_triples(
          n, "basis triple",
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return multiply(alg, product(i, j), basis(k));
          },
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return multiply(alg, basis(i), product(j, k));
          },
          report);
      break;
    case IdentityId::AntiFlexible:
      // assoc(x,y,z) = assoc(z,y,x)
      check_triples(
          n, "basis triple",
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return associator(alg, basis(i), basis(j), basis(k));
          },
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return associator(alg, basis(k), basis(j), basis(i));
          },
          report);
      break;
    case IdentityId::Flexible:
      check_diagonal_form(
          ctx, n,
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return associator(alg, basis(i), basis(j), basis(k));
          },
          report);
      break;
    case IdentityId::HomFlexible:
      check_diagonal_form(
          ctx, n,
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return hom_associator(h, basis(i), basis(j), basis(k));
          },
          report);
      break;
    case IdentityId::HomNearlyAssociative:
      // alpha(x)*(y*z) = (z*x)*alpha(y)
      check_triples(
          n, "basis triple",
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return multiply(alg, h.alpha.apply(basis(i)), product(j, k));
          },
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return multiply(alg, product(k, i), h.alpha.apply(basis(j)));
          },
          report);
      break;
    case IdentityId::HomAssociative:
      // (x*y)*alpha(z) = alpha(x)*(y*z)
      check_triples(
          n, "basis triple",
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return multiply(alg, product(i, j), h.alpha.apply(basis(k)));
          },
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return multiply(alg, h.alpha.apply(basis(i)), product(j, k));
          },
          report);
      break;
    case IdentityId::GHomAssociativeG1:
    case IdentityId::GHomAssociativeG2:
    case IdentityId::GHomAssociativeG3:
    case IdentityId::GHomAssociativeG4:
    case IdentityId::GHomAssociativeG5:
    case IdentityId::GHomAssociativeG6: {
      const auto& perms = subgroup_elements(id);
      check_triples(
          n, "alternating sum",
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return alternating_sum(h, perms, basis(i), basis(j), basis(k));
          },
          [&](std::size_t, std::size_t, std::size_t) { return zero; }, report);
      break;
    }
    case IdentityId::HomAntiFlexible:
      // hom-assoc(x,y,z) = hom-assoc(z,y,x)
      check_triples(
          n, "basis triple",
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return hom_associator(h, basis(i), basis(j), basis(k));
          },
          [&](std::size_t i, std::size_t j, std::size_t k) {
            return hom_associator(h, basis(k), basis(j), basis(i));
          },
          report);
      break;
    case IdentityId::LRCommute: {
      // L(x)R(y) = R(y)L(x), compared column by column
      for (std::size_t i = 0; i < n && report.holds; ++i) {
        const Matrix li = left_op(alg, basis(i));
        for (std::size_t j = 0; j < n && report.holds; ++j) {
          const Matrix rj = right_op(alg, basis(j));
          const Matrix lr = li * rj;
          const Matrix rl = rj * li;
          for (std::size_t m = 0; m < n && report.holds; ++m) {
            Vec lhs = lr.apply(basis(m));
            Vec rhs = rl.apply(basis(m));
            if (lhs != rhs) {
              report.holds = false;
              report.witness =
                  Witness{"operator images", {i, j, m}, std::move(lhs), std::move(rhs)};
            }
          }
        }
      }
      break;
    }
  }
  return report;
}

CheckReport check_identity(const Algebra& alg, IdentityId id) {
  return check_identity(with_identity_twist(alg), id);
}

CheckReport operator_identity_report(const Algebra& alg) {
  const FieldContext& ctx = alg.context();
  const std::size_t n = alg.dim();
  CheckReport report;
  report.check = "operator-identities";
  std::vector<Matrix> left, right;
  left.reserve(n);
  right.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(left_op(alg, basis_vec(ctx, n, i)));
    right.push_back(right_op(alg, basis_vec(ctx, n, i)));
  }
  struct Equation {
    const char* label;
    Matrix (*lhs)(const Algebra&, const std::vector<Matrix>&, const std::vector<Matrix>&,
                  std::size_t, std::size_t);
    Matrix (*rhs)(const Algebra&, const std::vector<Matrix>&, const std::vector<Matrix>&,
                  std::size_t, std::size_t);
  };
  static const Equation equations[] = {
      {"L(x)L(y) = R(y)R(x)",
       [](const Algebra&, const std::vector<Matrix>& l, const std::vector<Matrix>&,
          std::size_t i, std::size_t j) { return l[i] * l[j]; },
       [](const Algebra&, const std::vector<Matrix>&, const std::vector<Matrix>& r,
          std::size_t i, std::size_t j) { return r[j] * r[i]; }},
      {"L(x)R(y) = L(y*x)",
       [](const Algebra&, const std::vector<Matrix>& l, const std::vector<Matrix>& r,
          std::size_t i, std::size_t j) { return l[i] * r[j]; },
       [](const Algebra& alg, const std::vector<Matrix>&, const std::vector<Matrix>&,
          std::size_t i, std::size_t j) { return left_op(alg, alg.basis_product(j, i)); }},
      {"R(x)L(y) = R(x*y)",
       [](const Algebra&, const std::vector<Matrix>& l, const std::vector<Matrix>& r,
          std::size_t i, std::size_t j) { return r[i] * l[j]; },
       [](const Algebra& alg, const std::vector<Matrix>&, const std::vector<Matrix>&,
          std::size_t i, std::size_t j) { return right_op(alg, alg.basis_product(i, j)); }},
  };
  for (const Equation& eq : equations) {
    for (std::size_t i = 0; i < n && report.holds; ++i)
      for (std::size_t j = 0; j < n && report.holds; ++j) {
        const Matrix lhs = eq.lhs(alg, left, right, i, j);
        const Matrix rhs = eq.rhs(alg, left, right, i, j);
        if (lhs == rhs) continue;
        for (std::size_t m = 0; m < n; ++m) {
          Vec lhs_col = lhs.apply(basis_vec(ctx, n, m));
          Vec rhs_col = rhs.apply(basis_vec(ctx, n, m));
          if (lhs_col != rhs_col) {
            report.holds = false;
            report.witness =
                Witness{eq.label, {i, j, m}, std::move(lhs_col), std::move(rhs_col)};
            break;
          }
        }
      }
    if (!report.holds) break;
  }
  return report;
}

CheckReport check_hom_lie(const Algebra& bracket, const Matrix& alpha) {
  if (alpha.rows() != bracket.dim() || alpha.cols() != bracket.dim())
    fail(Errc::DimensionMismatch, "twist map shape does not match the bracket dimension");
  if (alpha.context() != bracket.context())
    fail(Errc::ContextMismatch, "twist map and bracket over different fields");
  const FieldContext& ctx = bracket.context();
  const std::size_t n = bracket.dim();
  CheckReport report;
  report.check = "hom-lie";
  // [x,y] = -[y,x]
  for (std::size_t i = 0; i < n && report.holds; ++i)
    for (std::size_t j = 0; j < n && report.holds; ++j) {
      Vec lhs = bracket.basis_product(i, j);
      Vec rhs = scale(-Scalar::one(ctx), bracket.basis_product(j, i));
      if (lhs != rhs) {
        report.holds = false;
        report.witness = Witness{"skew-symmetry", {i, j}, std::move(lhs), std::move(rhs)};
      }
    }
  // [alpha(x),[y,z]] + [alpha(y),[z,x]] + [alpha(z),[x,y]] = 0
  const Vec zero = zero_vec(ctx, n);
  for (std::size_t i = 0; i < n && report.holds; ++i) {
    const Vec ai = alpha.apply(basis_vec(ctx, n, i));
    for (std::size_t j = 0; j < n && report.holds; ++j) {
      const Vec aj = alpha.apply(basis_vec(ctx, n, j));
      for (std::size_t k = 0; k < n && report.holds; ++k) {
        const Vec ak = alpha.apply(basis_vec(ctx, n, k));
        Vec sum = multiply(bracket, ai, bracket.basis_product(j, k));
        sum = add(sum, multiply(bracket, aj, bracket.basis_product(k, i)));
        sum = add(sum, multiply(bracket, ak, bracket.basis_product(i, j)));
        if (!is_zero(sum)) {
          report.holds = false;
          report.witness = Witness{"twisted Jacobi", {i, j, k}, std::move(sum), zero};
        }
      }
    }
  }
  return report;
}

CheckReport is_hom_lie_admissible(const HomAlgebra& h) {
  CheckReport report = check_hom_lie(commutator_algebra(h.alg), h.alpha);
  report.check = "hom-lie-admissible";
  return report;
}

}  // namespace nearassoc
