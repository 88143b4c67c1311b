#pragma once

#include <map>
#include <optional>

#include "zgh/hopf.hpp"

namespace zgh {

/// Comonoidal bialgebra automorphism (f, f⁽²⁾): an algebra automorphism
/// together with an invertible element of H⊗H controlling its failure to
/// respect Δ. The inverse of f⁽²⁾ is cached at construction.
struct ComonoidalAutomorphism {
  HopfPtr over;
  Mat f;
  Vec f2;
  Vec f2_inv;
  std::string name;
};
using AutoPtr = std::shared_ptr<const ComonoidalAutomorphism>;

/// Builds the pair and caches (f⁽²⁾)⁻¹; f2 defaults to 1⊗1.
/// Throws ValidationFailure when f⁽²⁾ is not invertible.
ComonoidalAutomorphism make_comonoidal(HopfPtr over, Mat f, std::optional<Vec> f2 = std::nullopt,
                                       std::string name = "");
ComonoidalAutomorphism identity_automorphism(HopfPtr over);
bool same_automorphism(const ComonoidalAutomorphism& a, const ComonoidalAutomorphism& b);

/// The five defining checks (algebra automorphism, comultiplication
/// compatibility, counit compatibility, cocycle, normality) plus the cached
/// inverse bookkeeping.
Report validate_comonoidal_automorphism(const ComonoidalAutomorphism& phi);

/// (f,f⁽²⁾) ⋆ (g,g⁽²⁾) = (g∘f, (g⊗g)(f⁽²⁾)·g⁽²⁾). Inputs and output are
/// validated; failures raise ValidationFailure.
ComonoidalAutomorphism star_compose(const ComonoidalAutomorphism& phi,
                                    const ComonoidalAutomorphism& psi);

/// Gauge transport of phi along an invertible a: (ad_a∘f, (a⊗a)·f⁽²⁾·Δ(a)⁻¹).
ComonoidalAutomorphism gauge_twist(const ComonoidalAutomorphism& phi, const Vec& a,
                                   std::string name = "");

/// Invertible a ∈ H intertwining two comonoidal automorphisms.
struct GaugeTransformation {
  AutoPtr source, target;
  Vec a, a_inv;
};
GaugeTransformation make_gauge(AutoPtr source, AutoPtr target, const Vec& a);
Report validate_gauge(const GaugeTransformation& t);

/// Raw group-action data on H: per-element comonoidal automorphisms and
/// per-pair gauge elements b_{g,h}, validated against the two conditions of
/// a categorical group action.
struct ActionData {
  HopfPtr over;
  GroupTable group;
  std::vector<AutoPtr> autos;
  std::vector<std::vector<Vec>> gauge;
  std::vector<std::vector<Vec>> gauge_inv;
  std::string name;

  const Vec& b(std::size_t g, std::size_t h) const { return gauge[g][h]; }
  const Vec& b_inv(std::size_t g, std::size_t h) const { return gauge_inv[g][h]; }
  bool is_strict() const;
  /// true when every f⁽²⁾ is 1⊗1 and every f_g is a bialgebra automorphism
  /// (gauges may still be nontrivial).
  bool has_trivial_comonoidal_structures() const;
};
using ActionPtr = std::shared_ptr<const ActionData>;

/// Missing gauge entries default to 1_H. Caches gauge inverses.
ActionData make_action(HopfPtr over, GroupTable group, std::vector<AutoPtr> autos,
                       std::map<std::pair<std::size_t, std::size_t>, Vec> gauges = {},
                       std::string name = "");

/// Condition (a) per pair, condition (b) per triple, plus the φ₀ = id
/// normalization checks.
Report validate_action(const ActionData& a);

/// The H-module with action a.x = f(a).x.
HModule pullback_module(const ComonoidalAutomorphism& phi, const HModule& x);

/// Action of G = B/A on k[A] induced by a set-theoretic section s: G -> B:
/// f_g = ad_{s(g)⁻¹} restricted to A, b_{g,h} = s(gh)⁻¹ s(g) s(h).
/// `section` maps new G element names to B element names; s(e) must be the
/// identity of B.
ActionData exact_sequence_action(const GroupTable& b_group,
                                 const std::vector<std::string>& a_elements,
                                 const std::vector<std::pair<std::string, std::string>>& section,
                                 const Field& field, std::string name = "");

/// Twists a whole action by per-element gauge elements u_g (u_e = 1):
/// f'_g = ad_{u_g}∘f_g with f'⁽²⁾ = (u_g⊗u_g)·f⁽²⁾·Δ(u_g)⁻¹ and
/// b'_{g,h} = u_{gh}·b_{g,h}·u_h⁻¹·u_g⁻¹.
ActionData gauge_twist_action(const ActionData& a, const std::vector<Vec>& u, std::string name = "");

}  // namespace zgh
