#pragma once

#include "nearassoc/bimodule.hpp"

namespace nearassoc {

// Two algebras acting on each other: la/ra are the actions of A's basis
// elements on B (m×m), lb/rb the actions of B's basis elements on A (n×n).
struct MatchedPair {
  HomAlgebra a;
  HomAlgebra b;
  std::vector<Matrix> la;
  std::vector<Matrix> ra;
  std::vector<Matrix> lb;
  std::vector<Matrix> rb;

  MatchedPair(HomAlgebra a_, HomAlgebra b_, std::vector<Matrix> la_,
              std::vector<Matrix> ra_, std::vector<Matrix> lb_, std::vector<Matrix> rb_);
};

// Verifies the two bimodule structures (throwing NotABimodule naming the
// failing side), then the six mixed compatibility equations on basis tuples.
CheckReport check_matched_pair(const MatchedPair& mp);

// Product on A ⊕ B:
// (x+a)*(y+b) = (x·y + lb(a)y + rb(b)x) + (a∘b + la(x)b + ra(y)a),
// twisted by alpha_A ⊕ alpha_B. assemble_double builds the structure with no
// validation; double_algebra additionally requires a valid matched pair and
// checks the result against the defining identity.
HomAlgebra assemble_double(const MatchedPair& mp);
HomAlgebra double_algebra(const MatchedPair& mp);

// Mutual representations of two brackets: rho maps G into endomorphisms of
// H, mu maps H into endomorphisms of G.
struct LieMatchedPair {
  Algebra g;
  Algebra h;
  std::vector<Matrix> rho;
  std::vector<Matrix> mu;
  Matrix alpha_g;
  Matrix alpha_h;
};

// Representation axioms for rho and mu (throwing NotARepresentation naming
// the failing map), then the two mixed bracket compatibility equations.
CheckReport check_lie_matched_pair(const LieMatchedPair& lmp);

// Commutator brackets with difference actions rho = la - ra, mu = lb - rb;
// the result is checked to be a valid pair of mutual representations.
LieMatchedPair induced_lie_matched_pair(const MatchedPair& mp);

// The pair built from an algebra and a candidate product on its dual space:
// A acts on A* through transposed regular actions and vice versa.
MatchedPair assemble_dual_matched_pair(const Algebra& alg, const Algebra& dual_product);

// Requires L and R of the base to commute (LRNotCommuting otherwise), then
// decides validity of the assembled pair through the three reduced
// equations plus the defining identity of the dual product.
CheckReport check_dual_matched_pair(const Algebra& alg, const Algebra& dual_product);

}  // namespace nearassoc
