#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearassoc/matrix.hpp"

namespace nearassoc {

inline constexpr std::size_t kMaxDim = 16;

// Finite-dimensional algebra given by structure constants:
// e_i * e_j = sum_k c(i,j,k) e_k.
class Algebra {
 public:
  Algebra(const FieldContext& ctx, std::size_t n);

  const FieldContext& context() const noexcept { return ctx_; }
  std::size_t dim() const noexcept { return n_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * n_ + j) * n_ + k];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }

  // Product of basis elements e_i * e_j as a coordinate vector.
  Vec basis_product(std::size_t i, std::size_t j) const;

  friend bool operator==(const Algebra& lhs, const Algebra& rhs);
  friend bool operator!=(const Algebra& lhs, const Algebra& rhs) { return !(lhs == rhs); }

 private:
  FieldContext ctx_;
  std::size_t n_;
  std::vector<Scalar> c_;
};

// Algebra with a twisting endomorphism.
struct HomAlgebra {
  Algebra alg;
  Matrix alpha;

  HomAlgebra(Algebra a, Matrix tw);
};

HomAlgebra with_identity_twist(const Algebra& alg);

Vec multiply(const Algebra& alg, const Vec& x, const Vec& y);
Matrix left_op(const Algebra& alg, const Vec& x);   // y -> x*y
Matrix right_op(const Algebra& alg, const Vec& x);  // y -> y*x

// (x*y)*z - x*(y*z)
Vec associator(const Algebra& alg, const Vec& x, const Vec& y, const Vec& z);
// (x*y)*alpha(z) - alpha(x)*(y*z); the ordinary associator when alpha = id
Vec hom_associator(const HomAlgebra& h, const Vec& x, const Vec& y, const Vec& z);

// Bracket [x,y] = x*y - y*x as a structure-constant algebra.
Algebra commutator_algebra(const Algebra& alg);

enum class IdentityId {
  NearlyAssociative,
  Associative,
  AntiFlexible,
  Flexible,
  HomNearlyAssociative,
  HomAssociative,
  GHomAssociativeG1,
  GHomAssociativeG2,
  GHomAssociativeG3,
  GHomAssociativeG4,
  GHomAssociativeG5,
  GHomAssociativeG6,
  LRCommute,
  HomFlexible,
  HomAntiFlexible,
};

std::string identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
const std::vector<IdentityId>& all_identities();
// True for identities that do not involve the twist map.
bool is_plain_identity(IdentityId id);

// First failing evaluation: which equation, at which basis indices, and the
// two sides that disagree.
struct Witness {
  std::string where;
  std::vector<std::size_t> at;
  Vec lhs;
  Vec rhs;
};

struct CheckReport {
  std::string check;
  bool holds = true;
  std::optional<Witness> witness;           // present iff holds is false
  std::optional<bool> trilinear_variant;    // flexible checks only
  std::vector<std::string> warnings;
};

CheckReport check_identity(const HomAlgebra& h, IdentityId id);
CheckReport check_identity(const Algebra& alg, IdentityId id);

// L(x)L(y) = R(y)R(x), L(x)R(y) = L(y*x), R(x)L(y) = R(x*y) on all basis
// pairs; together these hold exactly when the algebra is nearly associative.
CheckReport operator_identity_report(const Algebra& alg);

// Skew-symmetry plus the twisted Jacobi identity
// [alpha(x),[y,z]] + [alpha(y),[z,x]] + [alpha(z),[x,y]] = 0.
CheckReport check_hom_lie(const Algebra& bracket, const Matrix& alpha);

// Commutator bracket of h passes check_hom_lie with h.alpha.
CheckReport is_hom_lie_admissible(const HomAlgebra& h);

}  // namespace nearassoc
