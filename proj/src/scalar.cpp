#include "zgh/scalar.hpp"

#include <algorithm>

namespace zgh {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::bad_scalar: return "BadScalar";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::invalid_group_table: return "InvalidGroupTable";
    case Errc::missing_antipode_inverse: return "MissingAntipodeInverse";
    case Errc::cocycle_violation: return "CocycleViolation";
    case Errc::validation_failure: return "ValidationFailure";
    case Errc::not_bialgebra_automorphism: return "NotBialgebraAutomorphism";
    case Errc::nontrivial_comonoidal_structure: return "NontrivialComonoidalStructure";
    case Errc::non_strict_action: return "NonStrictAction";
    case Errc::grade_mismatch: return "GradeMismatch";
    case Errc::not_half_braiding: return "NotHalfBraiding";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::parse_error: return "ParseError";
    case Errc::unresolved_reference: return "UnresolvedReference";
  }
  return "Error";
}

Field Field::gf(unsigned long p) {
  if (p < 2) throw Error(Errc::bad_scalar, "GF(p) needs a prime p, got " + std::to_string(p));
  mpz_class m(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
    throw Error(Errc::bad_scalar, "GF(p) needs a prime p, got " + std::to_string(p));
  return Field{p};
}

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class p(p_);
  mpz_class num = v_.get_num(), den = v_.get_den();
  if (den != 1) {
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(Errc::bad_scalar, "denominator " + den.get_str() + " not invertible mod " + p.get_str());
    num *= dinv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  v_ = mpq_class(r);
}

Scalar Scalar::parse(std::string_view text, const Field& f) {
  std::string s(text);
  // strip surrounding blanks
  auto notspace = [](char c) { return c != ' ' && c != '\t'; };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  if (s.empty()) throw Error(Errc::bad_scalar, "empty scalar");

  if (auto pos = s.find(" mod "); pos != std::string::npos) {
    std::string k = s.substr(0, pos), p = s.substr(pos + 5);
    if (f.is_rational())
      throw Error(Errc::bad_scalar, "'" + s + "' is a GF(p) literal but the field is Q");
    if (p != std::to_string(f.p))
      throw Error(Errc::bad_scalar, "'" + s + "' does not match field " + f.str());
    s = k;
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw Error(Errc::bad_scalar, "cannot parse '" + s + "'");
  if (v.get_den() == 0) throw Error(Errc::bad_scalar, "zero denominator in '" + s + "'");
  v.canonicalize();
  return Scalar(std::move(v), f);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  r.reduce();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  v_ += o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  v_ -= o.v_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  v_ *= o.v_;
  reduce();
  return *this;
}

Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of 0");
  if (p_ == 0) return Scalar(1 / v_, Field{0});
  mpz_class p(p_), inv;
  mpz_class num = v_.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(inv), Field{p_});
}

std::string Scalar::str() const {
  if (p_ == 0) return v_.get_str();
  return v_.get_num().get_str() + " mod " + std::to_string(p_);
}

}  // namespace zgh
