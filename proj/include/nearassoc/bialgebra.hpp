#pragma once

#include "nearassoc/bimodule.hpp"
#include "nearassoc/matched_pair.hpp"

namespace nearassoc {

// A comultiplication on an n-dimensional space, stored densely:
// Delta(e_k) = sum_{i,j} d[k][i][j] e_i (x) e_j.
class Coproduct {
 public:
  Coproduct(FieldContext ctx, std::size_t n);

  const FieldContext& context() const noexcept { return ctx_; }
  std::size_t dim() const noexcept { return n_; }

  Scalar& at(std::size_t k, std::size_t i, std::size_t j) {
    return d_[(k * n_ + i) * n_ + j];
  }
  const Scalar& at(std::size_t k, std::size_t i, std::size_t j) const {
    return d_[(k * n_ + i) * n_ + j];
  }

  // Coefficient matrix of Delta(e_k); entry (i, j) multiplies e_i (x) e_j.
  Matrix coeff_matrix(std::size_t k) const;

  friend bool operator==(const Coproduct& lhs, const Coproduct& rhs);

 private:
  FieldContext ctx_;
  std::size_t n_;
  std::vector<Scalar> d_;
};

// Product on the dual space: e^i o e^j = sum_k d[k][i][j] e^k, so that
// <a o b, x> = <a (x) b, Delta(x)>.
Algebra dual_algebra(const Coproduct& cp);

// The comultiplication whose dual algebra is the given product; inverse of
// dual_algebra under the same index convention.
Coproduct coproduct_of(const Algebra& alg);

// Decides whether the comultiplication makes the algebra a bialgebra: the
// induced dual product must satisfy the defining identity, and the two
// compatibility conditions between product and comultiplication must hold on
// all basis pairs. Tensor elements are modeled as coefficient matrices; the
// flip is the transpose. Requires commuting left and right multiplications
// on the algebra.
CheckReport check_coalgebra_conditions(const Algebra& alg, const Coproduct& cp);

struct ManinDouble {
  HomAlgebra algebra;  // product on A + A* induced by the dual actions
  BilinearForm form;   // canonical pairing, Gram matrix [[0, I], [I, 0]]
};

// Builds the 2n-dimensional double of the algebra and its dual product,
// together with the canonical symmetric form. The compatibility conditions
// are enforced first; the result is verified to satisfy the defining
// identity, the form to be left-invariant and nondegenerate, and both
// factors to be isotropic.
ManinDouble manin_double(const Algebra& alg, const Coproduct& cp);

// The three characterizations of the same structure, each computed from
// scratch: the canonical double with its invariant form, the matched pair of
// dual actions, and the comultiplication conditions. They must agree.
struct TripleEquivalence {
  bool manin_triple;
  bool matched_pair;
  bool bialgebra;
};

TripleEquivalence check_manin_triple_equivalence(const Algebra& alg, const Coproduct& cp);

}  // namespace nearassoc
