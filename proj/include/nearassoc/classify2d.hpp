#pragma once

#include <array>
#include <optional>

#include "nearassoc/algebra.hpp"

namespace nearassoc {

// The defining identity x*(y*z) = (z*x)*y expanded on the eight basis
// triples of a two-dimensional algebra, in the fixed order
// (1,1,1), (1,1,2), (1,2,1), (2,1,1), (1,2,2), (2,1,2), (2,2,1), (2,2,2).
// All eight residuals vanish exactly when the identity holds.
std::array<Vec, 8> dim2_defining_residuals(const Algebra& alg);

// The three two-parameter / four-parameter families of two-dimensional
// algebras satisfying the defining identity.
enum class Family { I, II, III };

const char* family_name(Family f) noexcept;

struct FamilyParams {
  Family family;
  Scalar alpha;
  Scalar beta;
  std::optional<Scalar> gamma;  // family III only
  std::optional<Scalar> delta;  // family III; a square root of gamma^2 +
                                // 4*alpha*beta, resolved in-field when absent
};

// Families I and II: (alpha, beta) != (0, 0);
//   I:  e1*e1 = a e2,      e1*e2 = e2*e1 = b e1,      e2*e2 = b e2
//   II: e1*e1 = a e1+b e2, e1*e2 = e2*e1 = b e1+a e2, e2*e2 = a e1+b e2
// Family III: any (alpha, beta, gamma) with delta^2 = gamma^2+4ab in the
// field and characteristic != 2; with m = (gamma+delta)/2,
//   III: e1*e1 = a e1, e1*e2 = e2*e1 = m e1, e2*e2 = b e1+g e2
// The result is verified against the defining identity.
Algebra family_algebra(const FamilyParams& params, const FieldContext& ctx);

// All structure-constant tensors of dimension n over F_p satisfying the
// identity, in lexicographic order of the flattened tensor (entry (0,0,0)
// most significant). Deterministic regardless of NEARASSOC_THREADS.
std::vector<Algebra> enumerate_fp(std::size_t n, unsigned p, IdentityId id);

// Exhaustive scan over invertible matrices T with T(x*y) = T(x)oT(y);
// returns the lexicographically first witness, if any.
std::optional<Matrix> isomorphism_search_fp(const Algebra& a, const Algebra& b);

// Checks that T is invertible (exact determinant) and carries the first
// product to the second on all basis pairs. Works over any field.
CheckReport verify_isomorphism(const Algebra& a, const Algebra& b, const Matrix& t);

struct FamilyInstance {
  Family family;
  std::vector<Scalar> params;  // (alpha, beta) or (alpha, beta, gamma, delta)
};

struct IsoClass {
  Algebra representative;  // lexicographically smallest tensor in its orbit
  std::size_t size;        // number of tensors in the orbit
  std::vector<FamilyInstance> family_matches;
  bool family_gap;  // no family instantiation over F_p lands in this class
};

struct ClassifyReport {
  FieldContext ctx;
  std::vector<IsoClass> classes;  // sorted by representative tensor
};

// Partition of all dimension-2 tensors over F_p satisfying the defining
// identity into isomorphism classes, each tagged with every family
// instantiation over F_p that lands in it (family III only where the square
// root exists and p != 2).
ClassifyReport classify_report_fp(unsigned p);

}  // namespace nearassoc
