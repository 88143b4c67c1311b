#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zgh/ydmod.hpp"

using namespace zgh;

namespace {
const Field Q = Field::rationals();

AutoPtr aptr(ComonoidalAutomorphism a) {
  return std::make_shared<const ComonoidalAutomorphism>(std::move(a));
}

HopfPtr z3_hopf() { return make_hopf(group_algebra(GroupTable::cyclic(3), Q)); }

AutoPtr z3_inversion(const HopfPtr& h) {
  Mat f(3, 3, Q);
  f(0, 0) = Scalar(1, Q);
  f(2, 1) = Scalar(1, Q);
  f(1, 2) = Scalar(1, Q);
  return aptr(make_comonoidal(h, f, std::nullopt, "inv"));
}

AutoPtr h4_fminus(const HopfPtr& h4) {
  Mat f = Mat::identity(4, Q);
  f(2, 2) = Scalar(-1, Q);
  f(3, 3) = Scalar(-1, Q);
  return aptr(make_comonoidal(h4, f, std::nullopt, "f_-1"));
}

/// 3-dim f-YD module over k[Z/3]: regular action, coaction x_b ↦ φ(b)⊗x_b.
YDModule z3_graded_module(const HopfPtr& h, AutoPtr twist, const std::vector<std::size_t>& phi,
                          std::string grade, std::string name) {
  Mat coaction(9, 3, Q);
  for (std::size_t b = 0; b < 3; ++b) coaction(phi[b] * 3 + b, b) = Scalar(1, Q);
  return make_yd(h, std::move(twist), std::move(grade), regular_module(h), std::move(coaction),
                 std::move(name));
}
}  // namespace

TEST_CASE("trivial YD module with identity twist validates") {
  for (const auto& h : {make_hopf(sweedler_h4(Q)), z3_hopf(), make_hopf(trivial_hopf(Q))}) {
    auto x = trivial_yd(h, aptr(identity_automorphism(h)));
    auto rep = validate_yd(x);
    INFO(rep.first_failure());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("trivial module passes iff the underlying map is the identity") {
  auto h4 = make_hopf(sweedler_h4(Q));
  auto good = validate_yd(trivial_yd(h4, aptr(identity_automorphism(h4))));
  CHECK(good.all_pass());

  auto bad = validate_yd(trivial_yd(h4, h4_fminus(h4)));
  CHECK(!bad.all_pass());
  bool witness_x = false;
  for (const auto& e : bad.entries)
    if (e.id == "yd_condition" && e.verdict == Verdict::fail)
      witness_x = e.witness.find("a=x") != std::string::npos;
  CHECK(witness_x);

  // nontrivial comonoidal structure with identity map also fails (comodule leg)
  auto z3 = z3_hopf();
  Vec a(3, Q);
  a[0] = Scalar(mpq_class(1, 3), Q);
  a[1] = Scalar(mpq_class(2, 3), Q);
  auto twisted_id = aptr(gauge_twist(identity_automorphism(z3), a));
  auto bad2 = validate_yd(trivial_yd(z3, twisted_id));
  CHECK(!bad2.all_pass());
}

TEST_CASE("graded 3-dim modules over k[Z/3] validate") {
  auto h = z3_hopf();
  auto inv = z3_inversion(h);
  auto xu = z3_graded_module(h, inv, {0, 1, 2}, "u", "X3u");  // φ(b) = b^{-2} = b
  auto rep = validate_yd(xu);
  INFO(rep.first_failure());
  CHECK(rep.all_pass());

  auto xe = z3_graded_module(h, aptr(identity_automorphism(h)), {1, 1, 1}, "e", "X3e");
  auto repe = validate_yd(xe);
  INFO(repe.first_failure());
  CHECK(repe.all_pass());
}

TEST_CASE("twisted conjugation modules validate over H4 and k[Z/3]") {
  auto h4 = make_hopf(sweedler_h4(Q));
  for (auto&& tw : {aptr(identity_automorphism(h4)), h4_fminus(h4)}) {
    auto x = twisted_conjugation_yd(h4, tw, "");
    auto rep = validate_yd(x);
    INFO(rep.first_failure());
    CHECK(rep.all_pass());
  }
  auto z3 = z3_hopf();
  auto x = twisted_conjugation_yd(z3, z3_inversion(z3), "u");
  CHECK(validate_yd(x).all_pass());
}

TEST_CASE("gauge transport of a YD module validates against the twisted automorphism") {
  auto z3 = z3_hopf();
  auto inv = z3_inversion(z3);
  Vec a(3, Q);
  a[0] = Scalar(mpq_class(1, 3), Q);
  a[1] = Scalar(mpq_class(2, 3), Q);
  auto inv_tw = aptr(gauge_twist(*inv, a, "inv'"));
  auto xu = z3_graded_module(z3, inv, {0, 1, 2}, "u", "X3u");
  auto moved = gauge_transport_yd(xu, inv_tw, a);
  auto rep = validate_yd(moved);
  INFO(rep.first_failure());
  CHECK(rep.all_pass());
  CHECK(!(moved.coaction() == xu.coaction()));
}

TEST_CASE("half-braiding of the trivial YD module is the flip") {
  auto h4 = make_hopf(sweedler_h4(Q));
  auto x = trivial_yd(h4, aptr(identity_automorphism(h4)));
  auto reg = regular_module(h4);
  CHECK(half_braiding(x, reg) == Mat::identity(4, Q));  // X is 1-dim
  // V trivial: the normality half of the axioms
  auto conj = twisted_conjugation_yd(h4, h4_fminus(h4));
  CHECK(half_braiding(conj, trivial_module(h4)).is_identity());
}

TEST_CASE("half-braiding axioms hold on concrete operands") {
  auto h4 = make_hopf(sweedler_h4(Q));
  auto conj = twisted_conjugation_yd(h4, h4_fminus(h4), "u");
  auto reg = regular_module(h4);
  auto rep = check_half_braiding_axioms(conj, reg, reg);
  INFO(rep.first_failure());
  CHECK(rep.all_pass());

  auto z3 = z3_hopf();
  auto xu = z3_graded_module(z3, z3_inversion(z3), {0, 1, 2}, "u", "X3u");
  auto rep2 = check_half_braiding_axioms(xu, regular_module(z3), regular_module(z3));
  CHECK(rep2.all_pass());
}

TEST_CASE("half-braiding inverse is a two-sided inverse") {
  auto h4 = make_hopf(sweedler_h4(Q));
  auto conj = twisted_conjugation_yd(h4, h4_fminus(h4));
  auto reg = regular_module(h4);
  Mat gamma = half_braiding(conj, reg);
  Mat inv = half_braiding_inverse(conj, reg);  // throws unless two-sided
  CHECK(gamma * inv == Mat::identity(16, Q));
  CHECK(inv * gamma == Mat::identity(16, Q));
}

TEST_CASE("zero-dimensional module is legal and vacuously valid") {
  auto h4 = make_hopf(sweedler_h4(Q));
  HModule zero{h4, 0, std::vector<Mat>(4, Mat(0, 0, Q))};
  CHECK(validate_module(zero).all_pass());
  auto conj = twisted_conjugation_yd(h4, h4_fminus(h4));
  Mat gamma = half_braiding(conj, zero);
  CHECK(gamma.rows() == 0);
  Mat inv = half_braiding_inverse(conj, zero);
  CHECK(inv.cols() == 0);
}

TEST_CASE("coaction_from_half_braiding round trip (both directions)") {
  auto z3 = z3_hopf();
  auto inv = z3_inversion(z3);
  auto xu = z3_graded_module(z3, inv, {0, 1, 2}, "u", "X3u");
  auto reg = regular_module(z3);
  Mat gamma = half_braiding(xu, reg);
  auto rebuilt = coaction_from_half_braiding(z3, inv, xu.module, gamma);
  CHECK(rebuilt.coaction() == xu.coaction());

  // flip with trivial coaction -> trivial YD module
  auto h4 = make_hopf(sweedler_h4(Q));
  auto idtw = aptr(identity_automorphism(h4));
  auto triv = trivial_yd(h4, idtw);
  Mat flip = half_braiding(triv, regular_module(h4));
  auto rebuilt2 = coaction_from_half_braiding(h4, idtw, trivial_module(h4), flip);
  CHECK(rebuilt2.coaction() == triv.coaction());
}

TEST_CASE("non-H-linear gamma_reg is rejected") {
  auto z3 = z3_hopf();
  auto inv = z3_inversion(z3);
  auto xu = z3_graded_module(z3, inv, {0, 1, 2}, "u", "X3u");
  Mat gamma = half_braiding(xu, regular_module(z3));
  gamma(0, 1) += Scalar(1, Q);
  CHECK_THROWS_AS(coaction_from_half_braiding(z3, inv, xu.module, gamma), Error);
}

TEST_CASE("YD morphism validation") {
  auto z3 = z3_hopf();
  auto id = aptr(identity_automorphism(z3));
  auto xe = z3_graded_module(z3, id, {1, 1, 1}, "e", "X3e");
  auto xe2 = z3_graded_module(z3, id, {2, 2, 2}, "e", "X3e2");
  auto xs = std::make_shared<const YDModule>(xe);

  YDMorphism ident{xs, xs, Mat::identity(3, Q)};
  CHECK(validate_yd_morphism(ident).all_pass());
  YDMorphism zero{xs, xs, Mat(3, 3, Q)};
  CHECK(validate_yd_morphism(zero).all_pass());

  // identity intertwines the (equal) actions but breaks the coactions
  YDMorphism broken{xs, std::make_shared<const YDModule>(xe2), Mat::identity(3, Q)};
  auto rep = validate_yd_morphism(broken);
  CHECK(!rep.all_pass());
  bool action_ok = false, coaction_bad = false;
  for (const auto& e : rep.entries) {
    if (e.id == "morphism_action_square") action_ok = e.verdict == Verdict::pass;
    if (e.id == "morphism_coaction_square") coaction_bad = e.verdict == Verdict::fail;
  }
  CHECK(action_ok);
  CHECK(coaction_bad);
}

TEST_CASE("naturality against a spanning set of module homs") {
  auto z3 = z3_hopf();
  auto xu = z3_graded_module(z3, z3_inversion(z3), {0, 1, 2}, "u", "X3u");
  auto reg = regular_module(z3);
  auto homs = module_hom_basis(reg, reg);
  CHECK(homs.size() == 3);  // commutative group algebra: End(reg) = H
  auto rep = check_half_braiding_naturality(xu, reg, reg);
  INFO(rep.first_failure());
  CHECK(rep.all_pass());

  auto h4 = make_hopf(sweedler_h4(Q));
  auto conj = twisted_conjugation_yd(h4, h4_fminus(h4));
  auto rep2 = check_half_braiding_naturality(conj, regular_module(h4), regular_module(h4));
  CHECK(rep2.all_pass());
  auto rep3 = check_half_braiding_naturality(conj, trivial_module(h4), regular_module(h4));
  CHECK(rep3.all_pass());
}
