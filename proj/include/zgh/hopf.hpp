#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zgh/linalg.hpp"
#include "zgh/report.hpp"

namespace zgh {

/// Finite group given by its multiplication table. Validated on construction.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mul;
  std::size_t identity = 0;

  std::size_t size() const { return names.size(); }
  std::size_t op(std::size_t i, std::size_t j) const { return mul[i][j]; }
  std::size_t inverse(std::size_t i) const;
  std::size_t index(const std::string& name) const;

  /// Validates closure/associativity/identity/inverses; throws InvalidGroupTable.
  static GroupTable from_names(std::vector<std::string> names,
                               const std::vector<std::vector<std::string>>& table);
  static GroupTable trivial();
  static GroupTable cyclic(std::size_t n);
  static GroupTable symmetric3();
};

/// Finite-dimensional (bi/Hopf) algebra as structure constants in a fixed
/// ordered basis. mult: H⊗H -> H is an n×n² matrix, comult: H -> H⊗H an
/// n²×n matrix, both under the global flattening e_i⊗e_k ↦ i·n+k.
struct HopfAlgebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Mat mult;
  Vec unit;
  Mat comult;
  Vec counit;
  std::optional<Mat> antipode;
  std::optional<Mat> antipode_inv;
  std::string name;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;
HopfPtr make_hopf(HopfAlgebra h);

/// Coassociative counital coalgebra data (houses the twisted coalgebra).
struct CoalgebraData {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  Mat comult;
  Vec counit;
};
using CoalgebraPtr = std::shared_ptr<const CoalgebraData>;

/// Left H-module: one action matrix per basis element of H.
struct HModule {
  HopfPtr over;
  std::size_t dim = 0;
  std::vector<Mat> rho;

  Mat act_of(const Vec& a) const;
  /// Flat action matrix H⊗X -> X.
  Mat action_flat() const;
};

/// Left comodule over a coalgebra: coaction X -> C⊗X as an (n·d)×d matrix.
struct HComodule {
  CoalgebraPtr over;
  std::size_t dim = 0;
  Mat coaction;
};

// --- element-level helpers -------------------------------------------------

Vec alg_mult(const HopfAlgebra& h, const Vec& a, const Vec& b);
Mat left_mult_matrix(const HopfAlgebra& h, const Vec& a);
Mat right_mult_matrix(const HopfAlgebra& h, const Vec& a);
Scalar counit_of(const HopfAlgebra& h, const Vec& a);
Vec comult_of(const HopfAlgebra& h, const Vec& a);
std::optional<Vec> element_inverse(const HopfAlgebra& h, const Vec& a);
/// Unit of H^{⊗k}.
Vec tensor_unit(const HopfAlgebra& h, std::size_t k);
/// Product in the algebra H^{⊗k}.
Vec tensor_mult(const HopfAlgebra& h, std::size_t k, const Vec& a, const Vec& b);
/// Matrix of left multiplication by elem inside the algebra H^{⊗k}.
Mat tensor_left_mult_matrix(const HopfAlgebra& h, std::size_t k, const Vec& elem);
Mat tensor_right_mult_matrix(const HopfAlgebra& h, std::size_t k, const Vec& elem);
/// Two-sided inverse of elem in H^{⊗k}, when it exists.
std::optional<Vec> tensor_element_inverse(const HopfAlgebra& h, std::size_t k, const Vec& elem);
Vec basis_elem(const HopfAlgebra& h, std::size_t i);
std::string tensor_label(const std::vector<std::string>& labels, std::size_t arity,
                         std::size_t flat);
std::vector<std::string> indexed_labels(std::size_t d, const std::string& prefix);

// --- operations -------------------------------------------------------------

/// Checks every axiom the library assumes of HopfAlgebra data; failures are
/// report entries with a witness basis tuple.
Report validate_hopf(const HopfAlgebra& h);
Report validate_module(const HModule& m);
Report validate_comodule(const HComodule& c);

HopfAlgebra trivial_hopf(const Field& f);
HopfAlgebra group_algebra(const GroupTable& g, const Field& f);
/// The 4-dimensional Sweedler Hopf algebra (char k ≠ 2).
HopfAlgebra sweedler_h4(const Field& f);
/// (H*)^cop on the dual basis; antipode (S⁻¹)*.
HopfAlgebra dual_cop(const HopfAlgebra& h);
HModule regular_module(const HopfPtr& h);
HModule trivial_module(const HopfPtr& h);
HModule tensor_module(const HModule& a, const HModule& b);
/// Coalgebra with comultiplication a ↦ f2 · Δ(a); re-verifies the axioms.
CoalgebraData twisted_coalgebra(const HopfAlgebra& h, const Vec& f2);

}  // namespace zgh
