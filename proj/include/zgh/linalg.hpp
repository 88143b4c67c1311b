#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zgh/scalar.hpp"

namespace zgh {

class Vec {
 public:
  Vec() = default;
  Vec(std::size_t n, const Field& f) : f_(f), e_(n, Scalar::zero(f)) {}
  explicit Vec(std::vector<Scalar> entries, const Field& f) : f_(f), e_(std::move(entries)) {}

  std::size_t dim() const { return e_.size(); }
  Field field() const { return f_; }
  const Scalar& operator[](std::size_t i) const { return e_[i]; }
  Scalar& operator[](std::size_t i) { return e_[i]; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  Vec operator*(const Scalar& c) const;
  bool operator==(const Vec& o) const { return f_ == o.f_ && e_ == o.e_; }
  bool is_zero() const;

  static Vec basis(std::size_t n, std::size_t i, const Field& f);
  std::string str() const;

 private:
  Field f_;
  std::vector<Scalar> e_;
};

/// Dense row-major matrix over an exact field.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const Field& f)
      : r_(rows), c_(cols), f_(f), e_(rows * cols, Scalar::zero(f)) {}

  static Mat identity(std::size_t n, const Field& f);
  static Mat zero(std::size_t rows, std::size_t cols, const Field& f) { return Mat(rows, cols, f); }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Field field() const { return f_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator*(const Scalar& c) const;
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && f_ == o.f_ && e_ == o.e_; }

  Mat transpose() const;
  Vec col(std::size_t j) const;
  Vec row(std::size_t i) const;
  void set_col(std::size_t j, const Vec& v);
  bool is_identity() const;
  bool is_zero() const;

  std::string str() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  Field f_;
  std::vector<Scalar> e_;
};

/// Kronecker product with the fixed flattening e_i⊗e_k ↦ i*dim2 + k:
/// kron(A,B)[(i*rB+k),(j*cB+l)] = A[i,j]*B[k,l].
Mat kron(const Mat& a, const Mat& b);
Vec vec_kron(const Vec& a, const Vec& b);

/// Multi-index helpers for the global flattening convention (first factor
/// is the most significant index).
std::size_t flatten(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& idx);
std::vector<std::size_t> unflatten(const std::vector<std::size_t>& dims, std::size_t flat);

/// Permutation matrix reordering tensor legs: the factor at position j
/// moves to position perm[j].
Mat leg_permutation(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm,
                    const Field& f);

/// leg_permutation(dims, perm) * m, without materializing the permutation.
Mat permute_legs_rows(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm,
                      const Mat& m);

/// (A_0 ⊗ A_1 ⊗ ... ⊗ A_{k-1}) * m where factor l acts on leg l of the row
/// index of m (nullptr = identity of size dims[l]). Applied leg by leg.
Mat kron_apply_rows(const std::vector<std::size_t>& dims, const std::vector<const Mat*>& factors,
                    const Mat& m);

/// (A_0 ⊗ ... ⊗ A_{k-1}) v on a flattened tensor vector.
Vec kron_apply_vec(const std::vector<std::size_t>& dims, const std::vector<const Mat*>& factors,
                   const Vec& v);

/// Contracts tensor leg `leg` of v with a functional (coefficient row).
Vec contract_leg(const std::vector<std::size_t>& dims, std::size_t leg, const Vec& functional,
                 const Vec& v);

/// Exact inverse by Gaussian elimination; std::nullopt when singular.
std::optional<Mat> solve_inverse(const Mat& a);
/// Solves A x = b; std::nullopt when no unique solution exists.
std::optional<Vec> solve_linear(const Mat& a, const Vec& b);
/// Basis of the right nullspace of a.
std::vector<Vec> nullspace(const Mat& a);

/// First position where two equal-shaped matrices differ, as (row, col).
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Mat& a, const Mat& b);

void for_nonzero(const Vec& v, const std::function<void(std::size_t, const Scalar&)>& fn);

}  // namespace zgh
