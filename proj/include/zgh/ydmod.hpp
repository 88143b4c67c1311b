#pragma once

#include "zgh/autoact.hpp"

namespace zgh {

/// H-module plus H^{f⁽²⁾}-comodule subject to the twisted Yetter-Drinfeld
/// compatibility. The coaction is the component of the half-braiding at the
/// regular module; the full natural transformation is recovered by
/// half_braiding().
struct YDModule {
  HopfPtr over;
  AutoPtr twist;
  std::string grade;
  HModule module;
  HComodule comodule;
  std::string name;

  std::size_t dim() const { return module.dim; }
  const Mat& coaction() const { return comodule.coaction; }
};
using YDPtr = std::shared_ptr<const YDModule>;

struct YDMorphism {
  YDPtr source, target;
  Mat map;
};

/// Wraps raw data; the comodule is taken over twisted_coalgebra(H, f⁽²⁾).
YDModule make_yd(HopfPtr over, AutoPtr twist, std::string grade, HModule module, Mat coaction,
                 std::string name = "");
/// k with action ε and coaction 1⊗x.
YDModule trivial_yd(const HopfPtr& h, AutoPtr twist, std::string grade = "");
/// H with the left regular action and coaction x ↦ f(x₍₁₎)S(x₍₃₎)⊗x₍₂₎;
/// requires a twist with trivial comonoidal structure.
YDModule twisted_conjugation_yd(const HopfPtr& h, AutoPtr twist, std::string grade = "");
/// Transport along a gauge transformation a: twist -> new_twist; the
/// coaction becomes x ↦ a·x₍₋₁₎ ⊗ x₍₀₎.
YDModule gauge_transport_yd(const YDModule& x, AutoPtr new_twist, const Vec& a);

/// Module axioms, comodule axioms over H^{f⁽²⁾}, the Yetter-Drinfeld
/// compatibility checked exhaustively over basis pairs, and (when S, S⁻¹
/// exist) its antipode form together with an agreement entry.
Report validate_yd(const YDModule& x);

/// Matrix of γ_{X,V}: X⊗V -> F(V)⊗X, x⊗v ↦ x₍₋₁₎.v ⊗ x₍₀₎.
/// H-linearity of the result is asserted (ValidationFailure).
Mat half_braiding(const YDModule& x, const HModule& v);
/// Same matrix without the H-linearity assertion, for composites over
/// operands that were already validated.
Mat half_braiding_component(const YDModule& x, const HModule& v);
/// Exact two-sided inverse v⊗x ↦ x₍₀₎ ⊗ S⁻¹(x₍₋₁₎).v.
Mat half_braiding_inverse(const YDModule& x, const HModule& v);

/// Rebuilds the Yetter-Drinfeld structure from a claimed half-braiding
/// component at the regular module; throws NotHalfBraiding unless gamma_reg
/// is H-linear, the induced coaction validates, and the round trip
/// reproduces gamma_reg exactly.
YDModule coaction_from_half_braiding(const HopfPtr& h, AutoPtr twist, const HModule& x,
                                     const Mat& gamma_reg);

Report validate_yd_morphism(const YDMorphism& m);

/// Σ f2[(i,j)] ρ_A(e_i)⊗ρ_B(e_j) — the comonoidal structure map F²(A,B).
Mat pair_action(const HopfAlgebra& h, const Vec& elem2, const HModule& a, const HModule& b);

/// Both half-braiding axioms for the derived natural transformation, on
/// concrete operands V, W.
Report check_half_braiding_axioms(const YDModule& x, const HModule& v, const HModule& w);
/// Naturality of γ against a spanning set of Hom_H(V,W) found by solving
/// the intertwiner equations.
Report check_half_braiding_naturality(const YDModule& x, const HModule& v, const HModule& w);
/// Basis of H-linear maps V -> W.
std::vector<Mat> module_hom_basis(const HModule& v, const HModule& w);

}  // namespace zgh
