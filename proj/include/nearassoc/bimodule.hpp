#pragma once

#include <optional>
#include <vector>

#include "nearassoc/algebra.hpp"

namespace nearassoc {

// Two compatible actions of a (possibly twisted) algebra on a space V.
// l[i] and r[i] are the action matrices of the i-th basis element; phi is the
// twist on V (identity when omitted).
struct Bimodule {
  HomAlgebra base;
  std::size_t vdim;
  std::vector<Matrix> l;
  std::vector<Matrix> r;
  Matrix phi;

  Bimodule(HomAlgebra base_, std::size_t vdim_, std::vector<Matrix> l_,
           std::vector<Matrix> r_, std::optional<Matrix> phi_ = std::nullopt);
};

// Symmetric bilinear form, stored as its Gram matrix.
class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);

  const FieldContext& context() const noexcept { return gram_.context(); }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& matrix() const noexcept { return gram_; }
  Scalar eval(const Vec& x, const Vec& y) const;

 private:
  Matrix gram_;
};

struct LieRepresentation {
  std::vector<Matrix> rho;
  Matrix psi;
};

// The compatibility equations between the twist, the actions, and the base
// product, on all basis pairs. A base algebra that fails its own identity
// yields a warning, not a failure.
CheckReport check_bimodule(const Bimodule& b);

// Left and right multiplication acting on the algebra itself.
Bimodule regular_bimodule(const HomAlgebra& h);

// Product (x+u)*(y+v) = x*y + l(x)v + r(y)u on base ⊕ V, twisted by
// alpha ⊕ phi. Requires a valid bimodule; the result is checked to satisfy
// the twisted defining identity.
HomAlgebra semidirect(const Bimodule& b);

// Bracket [x+u, y+v] = [x,y] + (l(x)-r(x))v - (l(y)-r(y))u; equals the
// commutator of the semidirect product.
Algebra induced_lie_bracket(const Bimodule& b);

// rho[i] = l[i] - r[i] with psi = phi: a representation of the commutator
// bracket of the base.
LieRepresentation minus_representation(const Bimodule& b);

// rho(alpha(x)) psi = psi rho(x) and
// rho([x,y]) psi = rho(alpha(x)) rho(y) - rho(alpha(y)) rho(x).
CheckReport check_lie_representation(const Algebra& bracket, const Matrix& alpha,
                                     const std::vector<Matrix>& rho, const Matrix& psi);

enum class DualOrder { LR, RL };

// Actions on the dual space via transposes: LR keeps slot order (l*, r*),
// RL swaps to (r*, l*).
Bimodule dual_bimodule(const Bimodule& b, DualOrder order);

// B(x*y, z) = B(x, y*z) on all basis triples.
CheckReport check_left_invariant(const Algebra& alg, const BilinearForm& form);

// For a nondegenerate left-invariant form, the map x -> B(x, .) from the
// regular actions to their dual; the intertwining equations are re-verified
// on the result.
Matrix form_intertwiner(const Algebra& alg, const BilinearForm& form);

}  // namespace nearassoc
