#include "zgh/hopf.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace zgh {

namespace {
void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

// "coefficient of <label>: <lhs> vs <rhs>" at the first differing entry
std::optional<std::string> vec_mismatch(const Vec& lhs, const Vec& rhs,
                                        const std::vector<std::string>& labels,
                                        std::size_t arity) {
  if (lhs.dim() != rhs.dim()) return "shape mismatch";
  for (std::size_t i = 0; i < lhs.dim(); ++i)
    if (lhs[i] != rhs[i])
      return "coefficient of " + tensor_label(labels, arity, i) + ": " + lhs[i].str() + " vs " +
             rhs[i].str();
  return std::nullopt;
}
}  // namespace

std::size_t GroupTable::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (mul[i][j] == identity) return j;
  throw Error(Errc::invalid_group_table, "no inverse for " + names[i]);
}

std::size_t GroupTable::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end())
    throw Error(Errc::unresolved_reference, "group element '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

GroupTable GroupTable::from_names(std::vector<std::string> names,
                                  const std::vector<std::vector<std::string>>& table) {
  GroupTable g;
  g.names = std::move(names);
  const std::size_t n = g.names.size();
  require(n > 0, Errc::invalid_group_table, "empty element list");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      require(g.names[i] != g.names[j], Errc::invalid_group_table,
              "duplicate element '" + g.names[i] + "'");
  require(table.size() == n, Errc::invalid_group_table, "table must have one row per element");
  g.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    require(table[i].size() == n, Errc::invalid_group_table, "ragged table row");
    for (std::size_t j = 0; j < n; ++j) g.mul[i][j] = g.index(table[i][j]);
  }
  // identity
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && g.mul[e][i] == i && g.mul[i][e] == i;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  require(found, Errc::invalid_group_table, "no identity element");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        require(g.mul[g.mul[i][j]][k] == g.mul[i][g.mul[j][k]], Errc::invalid_group_table,
                "not associative at (" + g.names[i] + "," + g.names[j] + "," + g.names[k] + ")");
  for (std::size_t i = 0; i < n; ++i) g.inverse(i);  // throws when missing
  return g;
}

GroupTable GroupTable::trivial() { return from_names({"e"}, {{"e"}}); }

GroupTable GroupTable::cyclic(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(i == 0 ? "e" : (i == 1 ? "c" : "c" + std::to_string(i)));
  std::vector<std::vector<std::string>> tab(n, std::vector<std::string>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) tab[i][j] = names[(i + j) % n];
  return from_names(names, tab);
}

GroupTable GroupTable::symmetric3() {
  // permutations of {1,2,3} in cycle notation
  std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  auto perm = [](const std::string& s) -> std::array<int, 3> {
    if (s == "e") return {0, 1, 2};
    if (s == "(12)") return {1, 0, 2};
    if (s == "(13)") return {2, 1, 0};
    if (s == "(23)") return {0, 2, 1};
    if (s == "(123)") return {1, 2, 0};  // 1->2, 2->3, 3->1
    return {2, 0, 1};                    // (132)
  };
  auto compose = [&](const std::string& a, const std::string& b) {
    auto pa = perm(a), pb = perm(b);
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i) c[i] = pa[pb[i]];  // (a∘b)(i) = a(b(i))
    for (const auto& n : names) {
      if (perm(n) == c) return n;
    }
    return std::string("?");
  };
  std::vector<std::vector<std::string>> tab(6, std::vector<std::string>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) tab[i][j] = compose(names[i], names[j]);
  return from_names(names, tab);
}

HopfPtr make_hopf(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

Mat HModule::act_of(const Vec& a) const {
  Mat out(dim, dim, a.field());
  for_nonzero(a, [&](std::size_t i, const Scalar& c) { out += rho[i] * c; });
  return out;
}

Mat HModule::action_flat() const {
  const std::size_t n = over->dim;
  Mat out(dim, n * dim, over->field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        if (!rho[i](r, c).is_zero()) out(r, i * dim + c) = rho[i](r, c);
  return out;
}

Vec basis_elem(const HopfAlgebra& h, std::size_t i) { return Vec::basis(h.dim, i, h.field); }

Vec alg_mult(const HopfAlgebra& h, const Vec& a, const Vec& b) {
  Vec out(h.dim, h.field);
  for_nonzero(a, [&](std::size_t i, const Scalar& x) {
    for_nonzero(b, [&](std::size_t j, const Scalar& y) {
      Scalar xy = x * y;
      for (std::size_t k = 0; k < h.dim; ++k) {
        const Scalar& m = h.mult(k, i * h.dim + j);
        if (!m.is_zero()) out[k] += xy * m;
      }
    });
  });
  return out;
}

Mat left_mult_matrix(const HopfAlgebra& h, const Vec& a) {
  Mat out(h.dim, h.dim, h.field);
  for_nonzero(a, [&](std::size_t i, const Scalar& x) {
    for (std::size_t j = 0; j < h.dim; ++j)
      for (std::size_t k = 0; k < h.dim; ++k) {
        const Scalar& m = h.mult(k, i * h.dim + j);
        if (!m.is_zero()) out(k, j) += x * m;
      }
  });
  return out;
}

Mat right_mult_matrix(const HopfAlgebra& h, const Vec& a) {
  Mat out(h.dim, h.dim, h.field);
  for_nonzero(a, [&](std::size_t j, const Scalar& x) {
    for (std::size_t i = 0; i < h.dim; ++i)
      for (std::size_t k = 0; k < h.dim; ++k) {
        const Scalar& m = h.mult(k, i * h.dim + j);
        if (!m.is_zero()) out(k, i) += x * m;
      }
  });
  return out;
}

Scalar counit_of(const HopfAlgebra& h, const Vec& a) {
  Scalar s = Scalar::zero(h.field);
  for_nonzero(a, [&](std::size_t i, const Scalar& x) { s += x * h.counit[i]; });
  return s;
}

Vec comult_of(const HopfAlgebra& h, const Vec& a) { return h.comult * a; }

std::optional<Vec> element_inverse(const HopfAlgebra& h, const Vec& a) {
  auto inv = solve_linear(left_mult_matrix(h, a), h.unit);
  if (!inv) return std::nullopt;
  // left inverse; confirm it is two-sided
  if (!(alg_mult(h, *inv, a) == h.unit)) return std::nullopt;
  return inv;
}

Vec tensor_unit(const HopfAlgebra& h, std::size_t k) {
  Vec out = h.unit;
  for (std::size_t l = 1; l < k; ++l) out = vec_kron(out, h.unit);
  return out;
}

Vec tensor_mult(const HopfAlgebra& h, std::size_t k, const Vec& a, const Vec& b) {
  const std::size_t n = h.dim;
  std::vector<std::size_t> dims(k, n);
  Vec out(a.dim(), h.field);
  for_nonzero(a, [&](std::size_t fi, const Scalar& x) {
    auto I = unflatten(dims, fi);
    for_nonzero(b, [&](std::size_t fj, const Scalar& y) {
      auto J = unflatten(dims, fj);
      // accumulate ⊗_l (e_{I_l} · e_{J_l}) sparsely, leg by leg
      Scalar coeff = x * y;
      std::vector<std::pair<std::size_t, Scalar>> partial = {{0, coeff}};
      for (std::size_t l = 0; l < k; ++l) {
        std::vector<std::pair<std::size_t, Scalar>> next;
        for (const auto& [flat, c] : partial)
          for (std::size_t t = 0; t < n; ++t) {
            const Scalar& m = h.mult(t, I[l] * n + J[l]);
            if (!m.is_zero()) next.emplace_back(flat * n + t, c * m);
          }
        partial = std::move(next);
      }
      for (const auto& [flat, c] : partial) out[flat] += c;
    });
  });
  return out;
}

Mat tensor_left_mult_matrix(const HopfAlgebra& h, std::size_t k, const Vec& elem) {
  const std::size_t n = h.dim;
  std::vector<std::size_t> dims(k, n);
  Mat out(elem.dim(), elem.dim(), h.field);
  std::vector<Mat> lmats;
  for (std::size_t i = 0; i < n; ++i) lmats.push_back(left_mult_matrix(h, basis_elem(h, i)));
  for_nonzero(elem, [&](std::size_t flat, const Scalar& c) {
    auto idx = unflatten(dims, flat);
    Mat term = lmats[idx[0]];
    for (std::size_t l = 1; l < k; ++l) term = kron(term, lmats[idx[l]]);
    out += term * c;
  });
  return out;
}

Mat tensor_right_mult_matrix(const HopfAlgebra& h, std::size_t k, const Vec& elem) {
  const std::size_t n = h.dim;
  std::vector<std::size_t> dims(k, n);
  Mat out(elem.dim(), elem.dim(), h.field);
  std::vector<Mat> rmats;
  for (std::size_t i = 0; i < n; ++i) rmats.push_back(right_mult_matrix(h, basis_elem(h, i)));
  for_nonzero(elem, [&](std::size_t flat, const Scalar& c) {
    auto idx = unflatten(dims, flat);
    Mat term = rmats[idx[0]];
    for (std::size_t l = 1; l < k; ++l) term = kron(term, rmats[idx[l]]);
    out += term * c;
  });
  return out;
}

std::optional<Vec> tensor_element_inverse(const HopfAlgebra& h, std::size_t k, const Vec& elem) {
  auto inv = solve_linear(tensor_left_mult_matrix(h, k, elem), tensor_unit(h, k));
  if (!inv) return std::nullopt;
  if (!(tensor_mult(h, k, *inv, elem) == tensor_unit(h, k))) return std::nullopt;
  return inv;
}

std::string tensor_label(const std::vector<std::string>& labels, std::size_t arity,
                         std::size_t flat) {
  std::vector<std::size_t> dims(arity, labels.size());
  auto idx = unflatten(dims, flat);
  std::string out;
  for (std::size_t l = 0; l < arity; ++l) out += (l ? "⊗" : "") + labels[idx[l]];
  return out;
}

std::vector<std::string> indexed_labels(std::size_t d, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// --- validation ---------------------------------------------------------------

Report validate_hopf(const HopfAlgebra& h) {
  const std::size_t n = h.dim;
  require(h.mult.rows() == n && h.mult.cols() == n * n, Errc::shape_mismatch, "mult tensor");
  require(h.comult.rows() == n * n && h.comult.cols() == n, Errc::shape_mismatch, "comult tensor");
  require(h.unit.dim() == n && h.counit.dim() == n, Errc::shape_mismatch, "unit/counit");
  if (h.antipode) require(h.antipode->rows() == n && h.antipode->cols() == n, Errc::shape_mismatch, "antipode");

  Report rep;
  const std::string who = h.name.empty() ? "H" : h.name;
  const auto& L = h.basis;

  // associativity / unitality
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j)
        for (std::size_t k = 0; k < n && !w; ++k) {
          Vec lhs = alg_mult(h, alg_mult(h, basis_elem(h, i), basis_elem(h, j)), basis_elem(h, k));
          Vec rhs = alg_mult(h, basis_elem(h, i), alg_mult(h, basis_elem(h, j), basis_elem(h, k)));
          if (auto m = vec_mismatch(lhs, rhs, L, 1))
            w = "(" + L[i] + "," + L[j] + "," + L[k] + "): " + *m;
        }
    rep.add("associativity", who, !w, w.value_or(""));
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Vec e = basis_elem(h, i);
      if (auto m = vec_mismatch(alg_mult(h, h.unit, e), e, L, 1)) w = "1·" + L[i] + ": " + *m;
      if (!w)
        if (auto m = vec_mismatch(alg_mult(h, e, h.unit), e, L, 1)) w = L[i] + "·1: " + *m;
    }
    rep.add("unitality", who, !w, w.value_or(""));
  }

  // coassociativity / counitality
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Vec d = h.comult.col(i);
      Vec lhs = kron_apply_vec({n, n}, {&h.comult, nullptr}, d);
      Vec rhs = kron_apply_vec({n, n}, {nullptr, &h.comult}, d);
      if (auto m = vec_mismatch(lhs, rhs, L, 3)) w = L[i] + ": " + *m;
    }
    rep.add("coassociativity", who, !w, w.value_or(""));
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Vec d = h.comult.col(i);
      Vec e = basis_elem(h, i);
      if (auto m = vec_mismatch(contract_leg({n, n}, 0, h.counit, d), e, L, 1))
        w = "(ε⊗id)Δ(" + L[i] + "): " + *m;
      if (!w)
        if (auto m = vec_mismatch(contract_leg({n, n}, 1, h.counit, d), e, L, 1))
          w = "(id⊗ε)Δ(" + L[i] + "): " + *m;
    }
    rep.add("counitality", who, !w, w.value_or(""));
  }

  // bialgebra compatibility
  {
    std::optional<std::string> w;
    if (auto m = vec_mismatch(comult_of(h, h.unit), tensor_unit(h, 2), L, 2)) w = "Δ(1): " + *m;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j) {
        Vec lhs = comult_of(h, alg_mult(h, basis_elem(h, i), basis_elem(h, j)));
        Vec rhs = tensor_mult(h, 2, h.comult.col(i), h.comult.col(j));
        if (auto m = vec_mismatch(lhs, rhs, L, 2)) w = "Δ(" + L[i] + "·" + L[j] + "): " + *m;
      }
    rep.add("bialgebra_comult", who, !w, w.value_or(""));
  }
  {
    std::optional<std::string> w;
    if (!(counit_of(h, h.unit).is_one())) w = "ε(1) = " + counit_of(h, h.unit).str();
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j) {
        Scalar lhs = counit_of(h, alg_mult(h, basis_elem(h, i), basis_elem(h, j)));
        Scalar rhs = h.counit[i] * h.counit[j];
        if (lhs != rhs)
          w = "ε(" + L[i] + "·" + L[j] + "): " + lhs.str() + " vs " + rhs.str();
      }
    rep.add("bialgebra_counit", who, !w, w.value_or(""));
  }

  if (h.antipode) {
    const Mat& S = *h.antipode;
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i) {
      Vec d = h.comult.col(i);
      Vec expected = h.unit * h.counit[i];
      Vec lhs(n, h.field), rhs(n, h.field);
      for_nonzero(d, [&](std::size_t flat, const Scalar& c) {
        std::size_t a = flat / n, b = flat % n;
        lhs += alg_mult(h, S.col(a), basis_elem(h, b)) * c;
        rhs += alg_mult(h, basis_elem(h, a), S.col(b)) * c;
      });
      if (auto m = vec_mismatch(lhs, expected, L, 1)) w = "m(S⊗id)Δ(" + L[i] + "): " + *m;
      if (!w)
        if (auto m = vec_mismatch(rhs, expected, L, 1)) w = "m(id⊗S)Δ(" + L[i] + "): " + *m;
    }
    rep.add("antipode", who, !w, w.value_or(""));

    if (h.antipode_inv) {
      bool ok = (S * *h.antipode_inv).is_identity() && (*h.antipode_inv * S).is_identity();
      rep.add("antipode_inverse", who, ok, ok ? "" : "S·S⁻¹ ≠ id");
    }
  }
  return rep;
}

Report validate_module(const HModule& m) {
  const HopfAlgebra& h = *m.over;
  const std::size_t n = h.dim;
  require(m.rho.size() == n, Errc::shape_mismatch, "module needs one matrix per basis element");
  for (const auto& r : m.rho)
    require(r.rows() == m.dim && r.cols() == m.dim, Errc::shape_mismatch, "module action shape");
  Report rep;
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < n && !w; ++i)
      for (std::size_t j = 0; j < n && !w; ++j) {
        Mat lhs = m.rho[i] * m.rho[j];
        Mat rhs = m.act_of(alg_mult(h, basis_elem(h, i), basis_elem(h, j)));
        if (auto mm = first_mismatch(lhs, rhs))
          w = "ρ(" + h.basis[i] + ")ρ(" + h.basis[j] + ") entry (" + std::to_string(mm->first) +
              "," + std::to_string(mm->second) + "): " + lhs(mm->first, mm->second).str() + " vs " +
              rhs(mm->first, mm->second).str();
      }
    rep.add("module_algebra_map", "X", !w, w.value_or(""));
  }
  {
    bool ok = m.act_of(h.unit).is_identity();
    rep.add("module_unital", "X", ok, ok ? "" : "ρ(1) ≠ id");
  }
  return rep;
}

Report validate_comodule(const HComodule& c) {
  const CoalgebraData& C = *c.over;
  const std::size_t n = C.dim, d = c.dim;
  require(c.coaction.rows() == n * d && c.coaction.cols() == d, Errc::shape_mismatch, "coaction shape");
  Report rep;
  {
    std::optional<std::string> w;
    for (std::size_t x = 0; x < d && !w; ++x) {
      Vec dl = c.coaction.col(x);
      Vec lhs = kron_apply_vec({n, d}, {&C.comult, nullptr}, dl);
      Vec rhs = kron_apply_vec({n, d}, {nullptr, &c.coaction}, dl);
      if (lhs != rhs) w = "x" + std::to_string(x) + ": (Δ⊗id)δ ≠ (id⊗δ)δ";
    }
    rep.add("comodule_coassociative", "X", !w, w.value_or(""));
  }
  {
    std::optional<std::string> w;
    for (std::size_t x = 0; x < d && !w; ++x) {
      Vec lhs = contract_leg({n, d}, 0, C.counit, c.coaction.col(x));
      if (!(lhs == Vec::basis(d, x, C.field))) w = "x" + std::to_string(x) + ": (ε⊗id)δ ≠ id";
    }
    rep.add("comodule_counital", "X", !w, w.value_or(""));
  }
  return rep;
}

// --- constructions -------------------------------------------------------------

HopfAlgebra group_algebra(const GroupTable& g, const Field& f) {
  const std::size_t n = g.size();
  HopfAlgebra h;
  h.field = f;
  h.dim = n;
  h.basis = g.names;
  h.mult = Mat(n, n * n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.mult(g.op(i, j), i * n + j) = Scalar::one(f);
  h.unit = Vec::basis(n, g.identity, f);
  h.comult = Mat(n * n, n, f);
  for (std::size_t i = 0; i < n; ++i) h.comult(i * n + i, i) = Scalar::one(f);
  h.counit = Vec(n, f);
  for (std::size_t i = 0; i < n; ++i) h.counit[i] = Scalar::one(f);
  Mat S(n, n, f);
  for (std::size_t i = 0; i < n; ++i) S(g.inverse(i), i) = Scalar::one(f);
  h.antipode = S;
  h.antipode_inv = S;
  h.name = "k[G]";
  return h;
}

HopfAlgebra trivial_hopf(const Field& f) {
  HopfAlgebra h = group_algebra(GroupTable::trivial(), f);
  h.basis = {"1"};
  h.name = "k";
  return h;
}

HopfAlgebra sweedler_h4(const Field& f) {
  require(f.p != 2, Errc::validation_failure, "sweedler_h4 needs characteristic ≠ 2");
  const std::size_t n = 4;  // basis 1, g, x, gx
  HopfAlgebra h;
  h.field = f;
  h.dim = n;
  h.basis = {"1", "g", "x", "gx"};
  h.name = "H4";
  Scalar one = Scalar::one(f), neg = -one;
  h.mult = Mat(n, n * n, f);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    h.mult(k, i * n + j) = c;
  };
  // left/right unit row and column
  for (std::size_t j = 0; j < n; ++j) set(0, j, j, one);
  for (std::size_t i = 1; i < n; ++i) set(i, 0, i, one);
  set(1, 1, 0, one);   // g·g = 1
  set(1, 2, 3, one);   // g·x = gx
  set(1, 3, 2, one);   // g·gx = x
  set(2, 1, 3, neg);   // x·g = -gx
  set(3, 1, 2, neg);   // gx·g = -x
  // x·x = x·gx = gx·x = gx·gx = 0
  h.unit = Vec::basis(n, 0, f);
  h.comult = Mat(n * n, n, f);
  auto cset = [&](std::size_t i, std::size_t a, std::size_t b, const Scalar& c) {
    h.comult(a * n + b, i) = c;
  };
  cset(0, 0, 0, one);              // Δ(1) = 1⊗1
  cset(1, 1, 1, one);              // Δ(g) = g⊗g
  cset(2, 2, 0, one);              // Δ(x) = x⊗1 + g⊗x
  cset(2, 1, 2, one);
  cset(3, 3, 1, one);              // Δ(gx) = gx⊗g + 1⊗gx
  cset(3, 0, 3, one);
  h.counit = Vec(n, f);
  h.counit[0] = one;
  h.counit[1] = one;
  Mat S(n, n, f);
  S(0, 0) = one;
  S(1, 1) = one;
  S(3, 2) = neg;  // S(x) = -gx
  S(2, 3) = one;  // S(gx) = x
  h.antipode = S;
  h.antipode_inv = *solve_inverse(S);
  return h;
}

HopfAlgebra dual_cop(const HopfAlgebra& h) {
  if (!h.antipode || !h.antipode_inv)
    throw Error(Errc::missing_antipode_inverse, "dual_cop needs S and S⁻¹");
  const std::size_t n = h.dim;
  HopfAlgebra d;
  d.field = h.field;
  d.dim = n;
  for (const auto& b : h.basis) d.basis.push_back(b + "*");
  d.name = (h.name.empty() ? "H" : h.name) + "*cop";
  d.mult = Mat(n, n * n, h.field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.mult(k, i * n + j) = h.comult(i * n + j, k);
  d.unit = h.counit;
  d.comult = Mat(n * n, n, h.field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.comult(j * n + i, k) = h.mult(k, i * n + j);
  d.counit = h.unit;
  d.antipode = h.antipode_inv->transpose();
  d.antipode_inv = h.antipode->transpose();
  return d;
}

HModule regular_module(const HopfPtr& h) {
  HModule m;
  m.over = h;
  m.dim = h->dim;
  for (std::size_t i = 0; i < h->dim; ++i)
    m.rho.push_back(left_mult_matrix(*h, basis_elem(*h, i)));
  return m;
}

HModule trivial_module(const HopfPtr& h) {
  HModule m;
  m.over = h;
  m.dim = 1;
  for (std::size_t i = 0; i < h->dim; ++i) {
    Mat r(1, 1, h->field);
    r(0, 0) = h->counit[i];
    m.rho.push_back(r);
  }
  return m;
}

HModule tensor_module(const HModule& a, const HModule& b) {
  require(a.over == b.over || (a.over && b.over && a.over->name == b.over->name),
          Errc::shape_mismatch, "tensor_module over different algebras");
  const HopfAlgebra& h = *a.over;
  HModule t;
  t.over = a.over;
  t.dim = a.dim * b.dim;
  for (std::size_t i = 0; i < h.dim; ++i) {
    Mat r(t.dim, t.dim, h.field);
    for_nonzero(h.comult.col(i), [&](std::size_t flat, const Scalar& c) {
      std::size_t p = flat / h.dim, q = flat % h.dim;
      r += kron(a.rho[p], b.rho[q]) * c;
    });
    t.rho.push_back(std::move(r));
  }
  return t;
}

CoalgebraData twisted_coalgebra(const HopfAlgebra& h, const Vec& f2) {
  const std::size_t n = h.dim;
  require(f2.dim() == n * n, Errc::shape_mismatch, "f2 must live in H⊗H");
  // left multiplication by f2 in the algebra H⊗H
  Mat l2(n * n, n * n, h.field);
  for_nonzero(f2, [&](std::size_t flat, const Scalar& c) {
    std::size_t i = flat / n, j = flat % n;
    l2 += kron(left_mult_matrix(h, basis_elem(h, i)), left_mult_matrix(h, basis_elem(h, j))) * c;
  });
  CoalgebraData out;
  out.field = h.field;
  out.dim = n;
  out.basis = h.basis;
  out.comult = l2 * h.comult;
  out.counit = h.counit;
  // re-verify the axioms the twist is supposed to preserve
  for (std::size_t i = 0; i < n; ++i) {
    Vec d = out.comult.col(i);
    Vec lhs = kron_apply_vec({n, n}, {&out.comult, nullptr}, d);
    Vec rhs = kron_apply_vec({n, n}, {nullptr, &out.comult}, d);
    if (!(lhs == rhs))
      throw Error(Errc::cocycle_violation,
                  "Δ^{f2} not coassociative at " + h.basis[i]);
    if (!(contract_leg({n, n}, 0, out.counit, d) == Vec::basis(n, i, h.field)) ||
        !(contract_leg({n, n}, 1, out.counit, d) == Vec::basis(n, i, h.field)))
      throw Error(Errc::cocycle_violation, "counit fails for Δ^{f2} at " + h.basis[i]);
  }
  return out;
}

}  // namespace zgh
