#include "zgh/ydmod.hpp"

namespace zgh {

namespace {
void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

std::optional<std::string> hx_mismatch(const HopfAlgebra& h, std::size_t d, const Vec& lhs,
                                       const Vec& rhs) {
  for (std::size_t i = 0; i < lhs.dim(); ++i)
    if (lhs[i] != rhs[i])
      return "coefficient of " + h.basis[i / d] + "⊗x" + std::to_string(i % d) + ": " +
             lhs[i].str() + " vs " + rhs[i].str();
  return std::nullopt;
}
}  // namespace

YDModule make_yd(HopfPtr over, AutoPtr twist, std::string grade, HModule module, Mat coaction,
                 std::string name) {
  const std::size_t n = over->dim, d = module.dim;
  require(coaction.rows() == n * d && coaction.cols() == d, Errc::shape_mismatch,
          "coaction must map X to H⊗X");
  auto twisted = std::make_shared<const CoalgebraData>(twisted_coalgebra(*over, twist->f2));
  YDModule x;
  x.over = std::move(over);
  x.twist = std::move(twist);
  x.grade = std::move(grade);
  x.module = std::move(module);
  x.comodule = HComodule{std::move(twisted), d, std::move(coaction)};
  x.name = std::move(name);
  return x;
}

YDModule trivial_yd(const HopfPtr& h, AutoPtr twist, std::string grade) {
  HModule m = trivial_module(h);
  Mat coaction(h->dim, 1, h->field);
  for (std::size_t i = 0; i < h->dim; ++i) coaction(i, 0) = h->unit[i];
  return make_yd(h, std::move(twist), std::move(grade), std::move(m), std::move(coaction), "1");
}

YDModule twisted_conjugation_yd(const HopfPtr& h, AutoPtr twist, std::string grade) {
  require(twist->f2 == tensor_unit(*h, 2), Errc::nontrivial_comonoidal_structure,
          "twisted conjugation module needs f⁽²⁾ = 1⊗1");
  require(h->antipode.has_value(), Errc::missing_antipode_inverse, "needs an antipode");
  const std::size_t n = h->dim;
  const Mat& s = *h->antipode;
  Mat coaction(n * n, n, h->field);
  for (std::size_t x = 0; x < n; ++x) {
    // Δ²(e_x) = Σ e_p ⊗ e_q ⊗ e_r, coaction column: f(e_p)·S(e_r) ⊗ e_q
    Vec d2 = kron_apply_vec({n, n}, {&h->comult, nullptr}, h->comult.col(x));
    for_nonzero(d2, [&](std::size_t flat, const Scalar& c) {
      std::size_t p = flat / (n * n), q = (flat / n) % n, r = flat % n;
      Vec w = alg_mult(*h, twist->f.col(p), s.col(r));
      for_nonzero(w, [&](std::size_t m, const Scalar& wc) { coaction(m * n + q, x) += c * wc; });
    });
  }
  return make_yd(h, std::move(twist), std::move(grade), regular_module(h), std::move(coaction),
                 "conj(H)");
}

YDModule gauge_transport_yd(const YDModule& x, AutoPtr new_twist, const Vec& a) {
  const HopfAlgebra& h = *x.over;
  Mat la = left_mult_matrix(h, a);
  Mat coaction = kron_apply_rows({h.dim, x.dim()}, {&la, nullptr}, x.coaction());
  return make_yd(x.over, std::move(new_twist), x.grade, x.module, std::move(coaction),
                 x.name + "^a");
}

Report validate_yd(const YDModule& x) {
  const HopfAlgebra& h = *x.over;
  const std::size_t n = h.dim, d = x.dim();
  const std::string who = x.name.empty() ? "X" : x.name;
  Report rep;

  {
    Report r = validate_module(x.module);
    for (auto& e : r.entries) e.operands = who;
    rep.merge(r);
  }
  {
    Report r = validate_comodule(x.comodule);
    for (auto& e : r.entries) e.operands = who;
    rep.merge(r);
  }

  const Mat& f = x.twist->f;
  const Mat& coact = x.coaction();

  // Eq: f(a₍₁₎)x₍₋₁₎ ⊗ a₍₂₎x₍₀₎ = (a₍₁₎.x)₍₋₁₎a₍₂₎ ⊗ (a₍₁₎.x)₍₀₎
  bool eq13_ok;
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < d && !w; ++j) {
        Vec lhs(n * d, h.field), rhs(n * d, h.field);
        Vec dx = coact.col(j);
        for_nonzero(h.comult.col(i), [&](std::size_t pq, const Scalar& c) {
          std::size_t p = pq / n, q = pq % n;
          for_nonzero(dx, [&](std::size_t my, const Scalar& e) {
            std::size_t m = my / d, y = my % d;
            Vec hpart = alg_mult(h, f.col(p), basis_elem(h, m));
            Scalar ce = c * e;
            for_nonzero(hpart, [&](std::size_t k, const Scalar& hk) {
              for (std::size_t z = 0; z < d; ++z) {
                const Scalar& az = x.module.rho[q](z, y);
                if (!az.is_zero()) lhs[k * d + z] += ce * hk * az;
              }
            });
          });
          Vec ax = x.module.rho[p].col(j);
          Vec dax = coact * ax;
          for_nonzero(dax, [&](std::size_t my, const Scalar& e) {
            std::size_t m = my / d, y = my % d;
            Vec hpart = alg_mult(h, basis_elem(h, m), basis_elem(h, q));
            Scalar ce = c * e;
            for_nonzero(hpart,
                        [&](std::size_t k, const Scalar& hk) { rhs[k * d + y] += ce * hk; });
          });
        });
        if (auto m = hx_mismatch(h, d, lhs, rhs))
          w = "a=" + h.basis[i] + ", x=x" + std::to_string(j) + ": " + *m;
      }
    eq13_ok = !w;
    rep.add("yd_condition", who, eq13_ok, w.value_or(""));
  }

  // antipode form: δ(a.x) = f(a₍₁₎)x₍₋₁₎S(a₍₃₎) ⊗ a₍₂₎x₍₀₎
  if (h.antipode && h.antipode_inv) {
    const Mat& s = *h.antipode;
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < d && !w; ++j) {
        Vec lhs = coact * x.module.rho[i].col(j);
        Vec rhs(n * d, h.field);
        Vec d2 = kron_apply_vec({n, n}, {&h.comult, nullptr}, h.comult.col(i));
        Vec dx = coact.col(j);
        for_nonzero(d2, [&](std::size_t flat, const Scalar& c) {
          std::size_t p = flat / (n * n), q = (flat / n) % n, r = flat % n;
          for_nonzero(dx, [&](std::size_t my, const Scalar& e) {
            std::size_t m = my / d, y = my % d;
            Vec hpart = alg_mult(h, alg_mult(h, f.col(p), basis_elem(h, m)), s.col(r));
            Scalar ce = c * e;
            for_nonzero(hpart, [&](std::size_t k, const Scalar& hk) {
              for (std::size_t z = 0; z < d; ++z) {
                const Scalar& az = x.module.rho[q](z, y);
                if (!az.is_zero()) rhs[k * d + z] += ce * hk * az;
              }
            });
          });
        });
        if (auto m = hx_mismatch(h, d, lhs, rhs))
          w = "a=" + h.basis[i] + ", x=x" + std::to_string(j) + ": " + *m;
      }
    rep.add("yd_condition_antipode_form", who, !w, w.value_or(""));
    bool agree = eq13_ok == !w.has_value();
    rep.add("yd_condition_forms_agree", who, agree,
            agree ? "" : "the two equivalent forms disagree");
  }
  return rep;
}

Mat half_braiding_component(const YDModule& x, const HModule& v) {
  const HopfAlgebra& h = *x.over;
  const std::size_t d = x.dim(), dv = v.dim;
  Mat out(dv * d, d * dv, h.field);
  for (std::size_t j = 0; j < d; ++j) {
    Vec dx = x.coaction().col(j);
    for (std::size_t l = 0; l < dv; ++l) {
      std::size_t col = j * dv + l;
      for_nonzero(dx, [&](std::size_t my, const Scalar& c) {
        std::size_t m = my / d, y = my % d;
        for (std::size_t wrow = 0; wrow < dv; ++wrow) {
          const Scalar& av = v.rho[m](wrow, l);
          if (!av.is_zero()) out(wrow * d + y, col) += c * av;
        }
      });
    }
  }
  return out;
}

Mat half_braiding(const YDModule& x, const HModule& v) {
  const HopfAlgebra& h = *x.over;
  Mat out = half_braiding_component(x, v);
  // H-linearity: ρ_{F(V)⊗X}(a) γ = γ ρ_{X⊗V}(a) for all basis a
  HModule fv = pullback_module(*x.twist, v);
  HModule src = tensor_module(x.module, v);
  HModule dst = tensor_module(fv, x.module);
  for (std::size_t i = 0; i < h.dim; ++i) {
    if (!(dst.rho[i] * out == out * src.rho[i]))
      throw Error(Errc::validation_failure,
                  "half-braiding is not H-linear at " + h.basis[i]);
  }
  return out;
}

Mat half_braiding_inverse(const YDModule& x, const HModule& v) {
  const HopfAlgebra& h = *x.over;
  if (!h.antipode_inv)
    throw Error(Errc::missing_antipode_inverse, "half_braiding_inverse needs S⁻¹");
  const std::size_t d = x.dim(), dv = v.dim;
  const Mat& sinv = *h.antipode_inv;
  Mat out(d * dv, dv * d, h.field);
  for (std::size_t j = 0; j < d; ++j) {
    Vec dx = x.coaction().col(j);
    for (std::size_t l = 0; l < dv; ++l) {
      std::size_t col = l * d + j;  // input v_l ⊗ x_j
      for_nonzero(dx, [&](std::size_t my, const Scalar& c) {
        std::size_t m = my / d, y = my % d;
        Vec w = v.act_of(sinv.col(m)).col(l);  // S⁻¹(x₍₋₁₎).v
        for_nonzero(w, [&](std::size_t k, const Scalar& wc) { out(y * dv + k, col) += c * wc; });
      });
    }
  }
  if (dv * d > 0) {
    Mat gamma = half_braiding(x, v);
    if (!(gamma * out).is_identity() || !(out * gamma).is_identity())
      throw Error(Errc::validation_failure, "half-braiding inverse is not two-sided");
  }
  return out;
}

YDModule coaction_from_half_braiding(const HopfPtr& h, AutoPtr twist, const HModule& x,
                                     const Mat& gamma_reg) {
  const std::size_t n = h->dim, d = x.dim;
  require(gamma_reg.rows() == n * d && gamma_reg.cols() == d * n, Errc::shape_mismatch,
          "gamma_reg must map X⊗H to F(H)⊗X");
  // H-linearity of the claimed component
  HModule reg = regular_module(h);
  HModule freg = pullback_module(*twist, reg);
  HModule src = tensor_module(x, reg);
  HModule dst = tensor_module(freg, x);
  for (std::size_t i = 0; i < n; ++i)
    if (!(dst.rho[i] * gamma_reg == gamma_reg * src.rho[i]))
      throw Error(Errc::not_half_braiding, "gamma_reg is not H-linear at " + h->basis[i]);

  // δ(x) = γ(x ⊗ 1)
  Mat insert(d * n, d, h->field);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t m = 0; m < n; ++m)
      if (!h->unit[m].is_zero()) insert(j * n + m, j) = h->unit[m];
  Mat coaction = gamma_reg * insert;

  YDModule out = make_yd(h, std::move(twist), "", x, std::move(coaction), "from_gamma");
  Report rep = validate_yd(out);
  if (!rep.all_pass())
    throw Error(Errc::not_half_braiding, "induced coaction fails validation: " + rep.first_failure());
  if (!(half_braiding(out, reg) == gamma_reg))
    throw Error(Errc::not_half_braiding, "round trip does not reproduce gamma_reg");
  return out;
}

Report validate_yd_morphism(const YDMorphism& m) {
  const YDModule& xs = *m.source;
  const YDModule& xt = *m.target;
  const HopfAlgebra& h = *xs.over;
  const std::size_t n = h.dim;
  Report rep;
  require(m.map.rows() == xt.dim() && m.map.cols() == xs.dim(), Errc::shape_mismatch,
          "morphism shape");
  {
    bool ok = same_automorphism(*xs.twist, *xt.twist);
    rep.add("morphism_same_twist", xs.name + "->" + xt.name, ok, ok ? "" : "twists differ");
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      if (!(xt.module.rho[i] * m.map == m.map * xs.module.rho[i])) w = "at " + h.basis[i];
    rep.add("morphism_action_square", xs.name + "->" + xt.name, !w, w.value_or(""));
  }
  {
    Mat lhs = kron_apply_rows({n, xs.dim()}, {nullptr, &m.map}, xs.coaction());
    Mat rhs = xt.coaction() * m.map;
    auto mm = first_mismatch(lhs, rhs);
    rep.add("morphism_coaction_square", xs.name + "->" + xt.name, !mm,
            mm ? "entry (" + std::to_string(mm->first) + "," + std::to_string(mm->second) + ")"
               : "");
  }
  return rep;
}

Mat pair_action(const HopfAlgebra& h, const Vec& elem2, const HModule& a, const HModule& b) {
  Mat out(a.dim * b.dim, a.dim * b.dim, h.field);
  for_nonzero(elem2, [&](std::size_t flat, const Scalar& c) {
    out += kron(a.rho[flat / h.dim], b.rho[flat % h.dim]) * c;
  });
  return out;
}

Report check_half_braiding_axioms(const YDModule& x, const HModule& v, const HModule& w) {
  const HopfAlgebra& h = *x.over;
  Report rep;
  {
    HModule vw = tensor_module(v, w);
    Mat f2m = pair_action(h, x.twist->f2, v, w);
    Mat lhs = kron_apply_rows({v.dim * w.dim, x.dim()}, {&f2m, nullptr}, half_braiding(x, vw));
    Mat gv = half_braiding(x, v);
    Mat gw = half_braiding(x, w);
    Mat rhs = kron(Mat::identity(v.dim, h.field), gw) * kron(gv, Mat::identity(w.dim, h.field));
    auto mm = first_mismatch(lhs, rhs);
    rep.add("half_braiding_multiplicativity", x.name, !mm,
            mm ? "entry (" + std::to_string(mm->first) + "," + std::to_string(mm->second) + ")"
               : "");
  }
  {
    HModule triv = trivial_module(x.over);
    bool ok = half_braiding(x, triv).is_identity();
    rep.add("half_braiding_normality", x.name, ok, ok ? "" : "γ_{X,1} ≠ id");
  }
  return rep;
}

std::vector<Mat> module_hom_basis(const HModule& v, const HModule& w) {
  const HopfAlgebra& h = *v.over;
  const std::size_t n = h.dim, dv = v.dim, dw = w.dim;
  Mat sys(n * dw * dv, dw * dv, h.field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c) {
        std::size_t row = (i * dw + r) * dv + c;
        for (std::size_t k = 0; k < dw; ++k) sys(row, k * dv + c) += w.rho[i](r, k);
        for (std::size_t k = 0; k < dv; ++k) sys(row, r * dv + k) -= v.rho[i](k, c);
      }
  std::vector<Mat> out;
  for (const auto& sol : nullspace(sys)) {
    Mat phi(dw, dv, h.field);
    for (std::size_t r = 0; r < dw; ++r)
      for (std::size_t c = 0; c < dv; ++c) phi(r, c) = sol[r * dv + c];
    out.push_back(std::move(phi));
  }
  return out;
}

Report check_half_braiding_naturality(const YDModule& x, const HModule& v, const HModule& w) {
  Report rep;
  Mat gv = half_braiding(x, v);
  Mat gw = half_braiding(x, w);
  auto homs = module_hom_basis(v, w);
  std::optional<std::string> bad;
  for (std::size_t t = 0; t < homs.size() && !bad; ++t) {
    const Mat& phi = homs[t];
    Mat lhs = kron_apply_rows({v.dim, x.dim()}, {&phi, nullptr}, gv);
    Mat rhs = gw * kron(Mat::identity(x.dim(), x.over->field), phi);
    if (!(lhs == rhs)) bad = "hom basis element " + std::to_string(t);
  }
  rep.add("half_braiding_naturality",
          x.name + " against hom space of dim " + std::to_string(homs.size()), !bad,
          bad.value_or(""));
  return rep;
}

}  // namespace zgh
