#include "zgh/autoact.hpp"

#include <algorithm>

namespace zgh {

namespace {
void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

std::optional<std::string> vec_mismatch(const HopfAlgebra& h, const Vec& lhs, const Vec& rhs,
                                        std::size_t arity) {
  if (lhs.dim() != rhs.dim()) return "shape mismatch";
  for (std::size_t i = 0; i < lhs.dim(); ++i)
    if (lhs[i] != rhs[i])
      return "coefficient of " + tensor_label(h.basis, arity, i) + ": " + lhs[i].str() + " vs " +
             rhs[i].str();
  return std::nullopt;
}

ComonoidalAutomorphism star_raw(const ComonoidalAutomorphism& phi,
                                const ComonoidalAutomorphism& psi) {
  const HopfAlgebra& h = *phi.over;
  Mat f = psi.f * phi.f;  // composition of the maps in reversed order
  Vec f2 = tensor_mult(h, 2, kron_apply_vec({h.dim, h.dim}, {&psi.f, &psi.f}, phi.f2), psi.f2);
  return make_comonoidal(phi.over, std::move(f), std::move(f2), phi.name + "⋆" + psi.name);
}
}  // namespace

ComonoidalAutomorphism make_comonoidal(HopfPtr over, Mat f, std::optional<Vec> f2,
                                       std::string name) {
  const std::size_t n = over->dim;
  require(f.rows() == n && f.cols() == n, Errc::shape_mismatch, "automorphism matrix shape");
  ComonoidalAutomorphism phi;
  phi.over = std::move(over);
  phi.f = std::move(f);
  phi.f2 = f2 ? std::move(*f2) : tensor_unit(*phi.over, 2);
  require(phi.f2.dim() == n * n, Errc::shape_mismatch, "f2 must live in H⊗H");
  auto inv = tensor_element_inverse(*phi.over, 2, phi.f2);
  if (!inv) throw Error(Errc::validation_failure, "f2 is not invertible in H⊗H");
  phi.f2_inv = std::move(*inv);
  phi.name = std::move(name);
  return phi;
}

ComonoidalAutomorphism identity_automorphism(HopfPtr over) {
  Mat id = Mat::identity(over->dim, over->field);
  return make_comonoidal(std::move(over), std::move(id), std::nullopt, "id");
}

bool same_automorphism(const ComonoidalAutomorphism& a, const ComonoidalAutomorphism& b) {
  return a.f == b.f && a.f2 == b.f2;
}

Report validate_comonoidal_automorphism(const ComonoidalAutomorphism& phi) {
  const HopfAlgebra& h = *phi.over;
  const std::size_t n = h.dim;
  const std::string who = phi.name.empty() ? "phi" : phi.name;
  Report rep;

  {  // unital algebra automorphism
    std::optional<std::string> w;
    if (!solve_inverse(phi.f)) w = "f is singular";
    if (!w && !(phi.f * h.unit == h.unit)) w = "f(1) ≠ 1";
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j) {
        Vec lhs = phi.f * alg_mult(h, basis_elem(h, i), basis_elem(h, j));
        Vec rhs = alg_mult(h, phi.f.col(i), phi.f.col(j));
        if (auto m = vec_mismatch(h, lhs, rhs, 1))
          w = "f(" + h.basis[i] + "·" + h.basis[j] + "): " + *m;
      }
    rep.add("algebra_automorphism", who, !w, w.value_or(""));
  }
  {  // ad_{f2} ∘ Δ ∘ f = (f⊗f) ∘ Δ
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Vec mid = comult_of(h, phi.f.col(i));
      Vec lhs = tensor_mult(h, 2, phi.f2, tensor_mult(h, 2, mid, phi.f2_inv));
      Vec rhs = kron_apply_vec({n, n}, {&phi.f, &phi.f}, h.comult.col(i));
      if (auto m = vec_mismatch(h, lhs, rhs, 2)) w = "at " + h.basis[i] + ": " + *m;
    }
    rep.add("comult_compat", who, !w, w.value_or(""));
  }
  {  // ε ∘ f = ε
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Scalar lhs = counit_of(h, phi.f.col(i));
      if (lhs != h.counit[i])
        w = "ε(f(" + h.basis[i] + ")) = " + lhs.str() + " vs " + h.counit[i].str();
    }
    rep.add("counit_compat", who, !w, w.value_or(""));
  }
  {  // cocycle
    Vec lhs = tensor_mult(h, 3, vec_kron(phi.f2, h.unit),
                          kron_apply_vec({n, n}, {&h.comult, nullptr}, phi.f2));
    Vec rhs = tensor_mult(h, 3, vec_kron(h.unit, phi.f2),
                          kron_apply_vec({n, n}, {nullptr, &h.comult}, phi.f2));
    auto w = vec_mismatch(h, lhs, rhs, 3);
    rep.add("cocycle", who, !w, w.value_or(""));
  }
  {  // normality
    std::optional<std::string> w;
    if (auto m = vec_mismatch(h, contract_leg({n, n}, 0, h.counit, phi.f2), h.unit, 1))
      w = "(ε⊗id)(f2): " + *m;
    if (!w)
      if (auto m = vec_mismatch(h, contract_leg({n, n}, 1, h.counit, phi.f2), h.unit, 1))
        w = "(id⊗ε)(f2): " + *m;
    rep.add("normality", who, !w, w.value_or(""));
  }
  {  // cached inverse bookkeeping
    bool ok = tensor_mult(h, 2, phi.f2, phi.f2_inv) == tensor_unit(h, 2) &&
              tensor_mult(h, 2, phi.f2_inv, phi.f2) == tensor_unit(h, 2);
    rep.add("f2_inverse", who, ok, ok ? "" : "f2·f2_inv ≠ 1⊗1");
  }
  return rep;
}

ComonoidalAutomorphism star_compose(const ComonoidalAutomorphism& phi,
                                    const ComonoidalAutomorphism& psi) {
  require(phi.over == psi.over ||
              (phi.over->mult == psi.over->mult && phi.over->comult == psi.over->comult),
          Errc::shape_mismatch, "star_compose over different algebras");
  for (const auto* p : {&phi, &psi}) {
    Report r = validate_comonoidal_automorphism(*p);
    if (!r.all_pass())
      throw Error(Errc::validation_failure, "star_compose input: " + r.first_failure());
  }
  ComonoidalAutomorphism out = star_raw(phi, psi);
  Report r = validate_comonoidal_automorphism(out);
  if (!r.all_pass())
    throw Error(Errc::validation_failure, "star_compose output: " + r.first_failure());
  return out;
}

ComonoidalAutomorphism gauge_twist(const ComonoidalAutomorphism& phi, const Vec& a,
                                   std::string name) {
  const HopfAlgebra& h = *phi.over;
  auto a_inv = element_inverse(h, a);
  if (!a_inv) throw Error(Errc::validation_failure, "gauge element is not invertible");
  if (!counit_of(h, a).is_one())
    throw Error(Errc::validation_failure, "gauge element needs ε(a) = 1, got " +
                                              counit_of(h, a).str());
  Mat f = left_mult_matrix(h, a) * right_mult_matrix(h, *a_inv) * phi.f;
  Vec da_inv = comult_of(h, *a_inv);
  Vec f2 = tensor_mult(h, 2, vec_kron(a, a), tensor_mult(h, 2, phi.f2, da_inv));
  return make_comonoidal(phi.over, std::move(f), std::move(f2),
                         name.empty() ? "ad_a·" + phi.name : std::move(name));
}

GaugeTransformation make_gauge(AutoPtr source, AutoPtr target, const Vec& a) {
  const HopfAlgebra& h = *source->over;
  auto a_inv = element_inverse(h, a);
  if (!a_inv) throw Error(Errc::validation_failure, "gauge element is not invertible");
  return GaugeTransformation{std::move(source), std::move(target), a, std::move(*a_inv)};
}

Report validate_gauge(const GaugeTransformation& t) {
  const HopfAlgebra& h = *t.source->over;
  const std::size_t n = h.dim;
  Report rep;
  {
    bool ok = alg_mult(h, t.a, t.a_inv) == h.unit && alg_mult(h, t.a_inv, t.a) == h.unit;
    rep.add("gauge_invertible", "a", ok, ok ? "" : "a·a_inv ≠ 1");
  }
  {  // Eq: ad_a ∘ f = g
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Vec lhs = alg_mult(h, t.a, alg_mult(h, t.source->f.col(i), t.a_inv));
      Vec rhs = t.target->f.col(i);
      if (auto m = vec_mismatch(h, lhs, rhs, 1)) w = "at " + h.basis[i] + ": " + *m;
    }
    rep.add("gauge_intertwines_f", "a", !w, w.value_or(""));
  }
  {  // Eq: g2 · Δ(a) = (a⊗a) · f2
    Vec lhs = tensor_mult(h, 2, t.target->f2, comult_of(h, t.a));
    Vec rhs = tensor_mult(h, 2, vec_kron(t.a, t.a), t.source->f2);
    auto w = vec_mismatch(h, lhs, rhs, 2);
    rep.add("gauge_comonoidal", "a", !w, w.value_or(""));
  }
  return rep;
}

bool ActionData::is_strict() const {
  if (!has_trivial_comonoidal_structures()) return false;
  for (const auto& row : gauge)
    for (const auto& b : row)
      if (!(b == over->unit)) return false;
  return true;
}

bool ActionData::has_trivial_comonoidal_structures() const {
  Vec unit2 = tensor_unit(*over, 2);
  for (const auto& a : autos)
    if (!(a->f2 == unit2)) return false;
  return true;
}

ActionData make_action(HopfPtr over, GroupTable group, std::vector<AutoPtr> autos,
                       std::map<std::pair<std::size_t, std::size_t>, Vec> gauges,
                       std::string name) {
  const std::size_t m = group.size();
  require(autos.size() == m, Errc::shape_mismatch, "one automorphism per group element");
  ActionData a;
  a.over = std::move(over);
  a.group = std::move(group);
  a.autos = std::move(autos);
  a.name = std::move(name);
  a.gauge.assign(m, std::vector<Vec>(m, a.over->unit));
  for (auto& [key, val] : gauges) {
    require(key.first < m && key.second < m, Errc::shape_mismatch, "gauge index out of range");
    a.gauge[key.first][key.second] = val;
  }
  a.gauge_inv.assign(m, std::vector<Vec>(m, a.over->unit));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) {
      auto inv = element_inverse(*a.over, a.gauge[g][h]);
      if (!inv)
        throw Error(Errc::validation_failure,
                    "b_{" + a.group.names[g] + "," + a.group.names[h] + "} is not invertible");
      a.gauge_inv[g][h] = std::move(*inv);
    }
  return a;
}

Report validate_action(const ActionData& a) {
  const HopfAlgebra& h = *a.over;
  const GroupTable& grp = a.group;
  const std::size_t m = grp.size();
  Report rep;

  for (std::size_t g = 0; g < m; ++g) {
    Report r = validate_comonoidal_automorphism(*a.autos[g]);
    for (auto& e : r.entries) e.operands = "f_" + grp.names[g];
    rep.merge(r);
  }

  {  // normalization φ_e = id, f_e⁽²⁾ = 1⊗1 (assumed throughout §4-§5)
    bool ok = a.autos[grp.identity]->f == Mat::identity(h.dim, h.field) &&
              a.autos[grp.identity]->f2 == tensor_unit(h, 2);
    rep.add("normalization[f_e=id]", "f_" + grp.names[grp.identity], ok,
            ok ? "" : "f_e or f_e2 nontrivial");
  }
  {  // b_{e,g} = b_{g,e} = 1; the b_{e,e} = 1 case is our φ₀ = id convention
    std::optional<std::string> w;
    for (std::size_t g = 0; g < m && !w; ++g) {
      if (!(a.b(grp.identity, g) == h.unit)) w = "b_{e," + grp.names[g] + "} ≠ 1";
      if (!w && !(a.b(g, grp.identity) == h.unit)) w = "b_{" + grp.names[g] + ",e} ≠ 1";
    }
    rep.add("normalization[b_e=1]", "convention: φ0 = id", !w, w.value_or(""));
  }

  // condition (a): b_{g,h} is a gauge transformation f_g ⋆ f_h -> f_{gh}
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t k = 0; k < m; ++k) {
      ComonoidalAutomorphism st = star_raw(*a.autos[g], *a.autos[k]);
      GaugeTransformation t{std::make_shared<const ComonoidalAutomorphism>(std::move(st)),
                            a.autos[grp.op(g, k)], a.b(g, k), a.b_inv(g, k)};
      Report r = validate_gauge(t);
      bool ok = r.all_pass();
      rep.add("action_(a)", "b_{" + grp.names[g] + "," + grp.names[k] + "}", ok,
              ok ? "" : r.first_failure());
    }

  // condition (b): b_{gh,k} · f_k(b_{g,h}) = b_{g,hk} · b_{h,k}
  {
    std::optional<std::string> w;
    for (std::size_t g = 0; g < m && !w; ++g)
      for (std::size_t k1 = 0; k1 < m && !w; ++k1)
        for (std::size_t k2 = 0; k2 < m && !w; ++k2) {
          Vec lhs = alg_mult(h, a.b(grp.op(g, k1), k2), a.autos[k2]->f * a.b(g, k1));
          Vec rhs = alg_mult(h, a.b(g, grp.op(k1, k2)), a.b(k1, k2));
          if (!(lhs == rhs))
            w = "triple (" + grp.names[g] + "," + grp.names[k1] + "," + grp.names[k2] +
                "): " + lhs.str() + " vs " + rhs.str();
        }
    rep.add("action_(b)", a.name.empty() ? "action" : a.name, !w, w.value_or(""));
  }
  return rep;
}

HModule pullback_module(const ComonoidalAutomorphism& phi, const HModule& x) {
  HModule out;
  out.over = x.over;
  out.dim = x.dim;
  for (std::size_t i = 0; i < phi.over->dim; ++i) out.rho.push_back(x.act_of(phi.f.col(i)));
  return out;
}

ActionData exact_sequence_action(const GroupTable& b_group,
                                 const std::vector<std::string>& a_elements,
                                 const std::vector<std::pair<std::string, std::string>>& section,
                                 const Field& field, std::string name) {
  const std::size_t nb = b_group.size();
  std::vector<std::size_t> a_idx;
  for (const auto& s : a_elements) a_idx.push_back(b_group.index(s));
  std::vector<long> pos_in_a(nb, -1);
  for (std::size_t i = 0; i < a_idx.size(); ++i) pos_in_a[a_idx[i]] = static_cast<long>(i);

  // subgroup checks
  require(pos_in_a[b_group.identity] >= 0, Errc::invalid_group_table, "A must contain e");
  for (auto i : a_idx)
    for (auto j : a_idx)
      require(pos_in_a[b_group.op(i, j)] >= 0, Errc::invalid_group_table, "A is not closed");
  for (auto i : a_idx)
    require(pos_in_a[b_group.inverse(i)] >= 0, Errc::invalid_group_table, "A lacks inverses");
  // normality
  for (std::size_t b = 0; b < nb; ++b)
    for (auto i : a_idx)
      require(pos_in_a[b_group.op(b_group.op(b, i), b_group.inverse(b))] >= 0,
              Errc::invalid_group_table, "A is not normal in B");

  // section
  std::vector<std::string> g_names;
  std::vector<std::size_t> s;
  for (const auto& [gname, bname] : section) {
    g_names.push_back(gname);
    s.push_back(b_group.index(bname));
  }
  const std::size_t ng = g_names.size();
  require(ng > 0, Errc::invalid_group_table, "empty section");
  require(ng * a_idx.size() == nb, Errc::invalid_group_table, "section size vs index of A");
  // identify the G identity: the g with s(g) ∈ A; require s(e) = e_B
  // coset membership: b ~ s(g)  iff  b·s(g)⁻¹ ∈ A
  auto coset_of = [&](std::size_t b) -> std::size_t {
    for (std::size_t g = 0; g < ng; ++g)
      if (pos_in_a[b_group.op(b, b_group.inverse(s[g]))] >= 0) return g;
    throw Error(Errc::invalid_group_table, "section does not hit every coset");
  };
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t g2 = 0; g2 < ng; ++g2)
      require(g == g2 || coset_of(s[g]) != coset_of(s[g2]), Errc::invalid_group_table,
              "section hits a coset twice");
  std::size_t e_g = coset_of(b_group.identity);
  require(s[e_g] == b_group.identity, Errc::invalid_group_table,
          "section must send the neutral element to e_B (φ0 = id normalization)");

  // quotient table
  std::vector<std::vector<std::string>> g_tab(ng, std::vector<std::string>(ng));
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t k = 0; k < ng; ++k) g_tab[g][k] = g_names[coset_of(b_group.op(s[g], s[k]))];
  GroupTable g_group = GroupTable::from_names(g_names, g_tab);

  // H = k[A]
  std::vector<std::string> a_names;
  for (auto i : a_idx) a_names.push_back(b_group.names[i]);
  std::vector<std::vector<std::string>> a_tab(a_idx.size(), std::vector<std::string>(a_idx.size()));
  for (std::size_t i = 0; i < a_idx.size(); ++i)
    for (std::size_t j = 0; j < a_idx.size(); ++j)
      a_tab[i][j] = b_group.names[b_group.op(a_idx[i], a_idx[j])];
  HopfPtr hopf = make_hopf(group_algebra(GroupTable::from_names(a_names, a_tab), field));

  // f_g = ad_{s(g)⁻¹}|_A as a basis permutation
  std::vector<AutoPtr> autos;
  for (std::size_t g = 0; g < ng; ++g) {
    Mat f(a_idx.size(), a_idx.size(), field);
    for (std::size_t i = 0; i < a_idx.size(); ++i) {
      std::size_t img = b_group.op(b_group.op(b_group.inverse(s[g]), a_idx[i]), s[g]);
      f(static_cast<std::size_t>(pos_in_a[img]), i) = Scalar::one(field);
    }
    autos.push_back(std::make_shared<const ComonoidalAutomorphism>(
        make_comonoidal(hopf, std::move(f), std::nullopt, "ad_s(" + g_names[g] + ")⁻¹")));
  }

  // b_{g,h} = s(gh)⁻¹ s(g) s(h) ∈ A
  std::map<std::pair<std::size_t, std::size_t>, Vec> gauges;
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t k = 0; k < ng; ++k) {
      std::size_t gh = g_group.op(g, k);
      std::size_t c = b_group.op(b_group.op(b_group.inverse(s[gh]), s[g]), s[k]);
      require(pos_in_a[c] >= 0, Errc::invalid_group_table, "cocycle escapes A");
      gauges[{g, k}] = Vec::basis(a_idx.size(), static_cast<std::size_t>(pos_in_a[c]), field);
    }
  return make_action(hopf, std::move(g_group), std::move(autos), std::move(gauges),
                     std::move(name));
}

ActionData gauge_twist_action(const ActionData& a, const std::vector<Vec>& u, std::string name) {
  const HopfAlgebra& h = *a.over;
  const std::size_t m = a.group.size();
  require(u.size() == m, Errc::shape_mismatch, "one twist element per group element");
  require(u[a.group.identity] == h.unit, Errc::validation_failure, "u_e must be 1");
  std::vector<AutoPtr> autos;
  std::vector<Vec> u_inv;
  for (std::size_t g = 0; g < m; ++g) {
    auto inv = element_inverse(h, u[g]);
    if (!inv) throw Error(Errc::validation_failure, "twist element u_g is not invertible");
    u_inv.push_back(std::move(*inv));
    autos.push_back(std::make_shared<const ComonoidalAutomorphism>(
        gauge_twist(*a.autos[g], u[g], a.autos[g]->name + "'")));
  }
  // The horizontal composite of the gauges u_g: f_g -> f'_g and
  // u_h: f_h -> f'_h carries the element f'_h(u_g)·u_h = f_h(u_g)·u_h up to
  // conjugation, so the transported compositor is
  // b'_{g,h} = u_{gh} · b_{g,h} · f_h(u_g)⁻¹ · u_h⁻¹.
  std::map<std::pair<std::size_t, std::size_t>, Vec> gauges;
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t k = 0; k < m; ++k) {
      std::size_t gh = a.group.op(g, k);
      Vec fk_ug_inv = a.autos[k]->f * u_inv[g];
      Vec b = alg_mult(h, u[gh], alg_mult(h, a.b(g, k), alg_mult(h, fk_ug_inv, u_inv[k])));
      gauges[{g, k}] = std::move(b);
    }
  ActionData out = make_action(a.over, a.group, std::move(autos), std::move(gauges),
                               name.empty() ? a.name + "'" : std::move(name));
  return out;
}

}  // namespace zgh
