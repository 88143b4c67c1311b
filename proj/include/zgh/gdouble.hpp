#pragma once

#include "zgh/center.hpp"

namespace zgh {

/// Bilinear pairing σ: A × B -> k subject to the Hopf-pairing axioms.
/// When nondegenerate, the stored dual bases are the standard basis of A
/// and the columns of matrix⁻¹ in B.
struct HopfPairing {
  HopfPtr left;   // A
  HopfPtr right;  // B
  Mat matrix;     // σ(a_i, b_j)
  bool nondegenerate = false;
  std::optional<Mat> right_dual;  // f_j with σ(e_i, f_j) = δ_ij
};

/// ev: H × (H*)^cop -> k; the matrix is the identity in dual coordinates.
HopfPairing canonical_ev_pairing(const HopfPtr& h);
Report validate_pairing(const HopfPairing& p);

/// The algebra D_f = D(H, (H*)^cop; ev, f) on H⊗H*. Associativity and
/// unitality are verified exhaustively at construction.
struct DoubleAlgebra {
  HopfPtr base;
  Mat twist;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Mat mult;  // dim × dim²
  Vec unit;  // 1_H ⊗ ε
  std::string name;
};
using DoublePtr = std::shared_ptr<const DoubleAlgebra>;

/// Throws NotBialgebraAutomorphism unless Δ∘f = (f⊗f)∘Δ etc.;
/// ValidationFailure if the resulting product fails associativity.
DoubleAlgebra build_double(const HopfPtr& h, const Mat& f, std::string name = "");
Vec dalg_mult(const DoubleAlgebra& d, const Vec& a, const Vec& b);
Mat dalg_left_mult_matrix(const DoubleAlgebra& d, const Vec& a);
/// ι: a ↦ a⊗ε and κ: φ ↦ 1⊗φ are injective algebra maps into D_f.
Report check_double_embeddings(const DoubleAlgebra& d);

struct DoubleModule {
  DoublePtr over;
  std::size_t dim = 0;
  std::vector<Mat> rho;  // one matrix per D-basis element

  Mat act_of(const Vec& a) const;
};
Report validate_double_module(const DoubleModule& m);
DoubleModule regular_double_module(const DoublePtr& d);

/// Lemma-style dictionary: (a⊗φ).x := (φ∘S⁻¹)(x₍₋₁₎) a.x₍₀₎.
/// Requires the twist of x to have trivial comonoidal structure
/// (NontrivialComonoidalStructure) and to match d's twist map.
DoubleModule yd_to_double_module(const DoublePtr& d, const YDModule& x);
/// Inverse dictionary: action through ι, coaction δ(x) = Σ S(a_i)⊗(1⊗aⁱ).x.
/// `twist` must carry d's twist map with trivial comonoidal structure; when
/// omitted a fresh automorphism is built over d->base.
YDModule double_module_to_yd(const DoubleModule& m, AutoPtr twist = nullptr);

/// Hopf G-coalgebra data {D_{f_g}} for a strict action: comultiplications
/// Δ̄_{g,h}: D_{gh} -> D_g⊗D_h, crossings, and the R-matrix family
/// R̄_{g,h} = Σ_i (S(a_i)⊗ε)⊗(1⊗aⁱ) with inverse Σ_i (a_i⊗ε)⊗(1⊗aⁱ).
struct GCoalgebraData {
  /// Δ̄_{g,h}(a⊗x) = (a₍₁₎ ⊗ φ*_h(x₍₁₎)) ⊗ (a₍₂₎ ⊗ x₍₂₎) matches the
  /// anti-homomorphism picture; `virelizier` puts the automorphism on the
  /// first tensor factor's algebra leg instead (the original convention).
  enum class Convention { anti_hom, virelizier };

  ActionPtr action;
  Convention convention = Convention::anti_hom;
  std::vector<DoublePtr> components;
  std::vector<std::vector<Mat>> comult;    // [g][h]: dim² × dim
  std::vector<Mat> crossing;               // φ̂_g = f_g ⊗ (f_{g⁻¹})ᵀ
  std::vector<std::vector<Vec>> rmatrix;   // [g][h] ∈ D_g⊗D_h
  std::vector<std::vector<Vec>> rmatrix_inv;
};

/// Throws NonStrictAction unless every f⁽²⁾ = 1⊗1 and every b = 1.
GCoalgebraData build_g_coalgebra(const ActionPtr& action,
                                 GCoalgebraData::Convention convention =
                                     GCoalgebraData::Convention::anti_hom);
/// Algebra-map property of every Δ̄, the coassociativity family identity,
/// crossings as algebra isomorphisms with the reversed composition law,
/// crossing-comultiplication compatibility, and R̄ invertibility.
Report validate_g_coalgebra(const GCoalgebraData& gc);

/// The two functor diagrams and the R̄-braiding consistency, as exact
/// (column-streamed) matrix identities.
std::vector<DiagramReport> check_theorem_510(const GCoalgebraData& gc, const CenterObject& x,
                                             const CenterObject& y);

}  // namespace zgh
