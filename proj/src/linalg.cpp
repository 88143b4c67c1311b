#include "zgh/linalg.hpp"

#include <sstream>

namespace zgh {

namespace {
void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}
}  // namespace

Vec& Vec::operator+=(const Vec& o) {
  require(dim() == o.dim(), Errc::shape_mismatch, "vec add");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require(dim() == o.dim(), Errc::shape_mismatch, "vec sub");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Vec Vec::operator*(const Scalar& c) const {
  Vec r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

bool Vec::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Vec::basis(std::size_t n, std::size_t i, const Field& f) {
  Vec v(n, f);
  v[i] = Scalar::one(f);
  return v;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? ", " : "") << e_[i].str();
  os << "]";
  return os.str();
}

Mat Mat::identity(std::size_t n, const Field& f) {
  Mat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  require(r_ == o.r_ && c_ == o.c_, Errc::shape_mismatch, "mat add");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require(r_ == o.r_ && c_ == o.c_, Errc::shape_mismatch, "mat sub");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat Mat::operator*(const Mat& o) const {
  require(c_ == o.r_, Errc::shape_mismatch,
          "mat mul " + std::to_string(c_) + " vs " + std::to_string(o.r_));
  Mat out(r_, o.c_, f_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.c_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

Vec Mat::operator*(const Vec& v) const {
  require(c_ == v.dim(), Errc::shape_mismatch, "mat*vec");
  Vec out(r_, f_);
  for (std::size_t j = 0; j < c_; ++j) {
    const Scalar& x = v[j];
    if (x.is_zero()) continue;
    for (std::size_t i = 0; i < r_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * x;
    }
  }
  return out;
}

Mat Mat::operator*(const Scalar& c) const {
  Mat r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

Mat Mat::transpose() const {
  Mat t(c_, r_, f_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vec Mat::col(std::size_t j) const {
  Vec v(r_, f_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Mat::row(std::size_t i) const {
  Vec v(c_, f_);
  for (std::size_t j = 0; j < c_; ++j) v[j] = (*this)(i, j);
  return v;
}

void Mat::set_col(std::size_t j, const Vec& v) {
  require(v.dim() == r_, Errc::shape_mismatch, "set_col");
  for (std::size_t i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) {
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
    }
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).str();
  }
  os << "]";
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  require(a.field() == b.field(), Errc::field_mismatch, "kron");
  Mat out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

Vec vec_kron(const Vec& a, const Vec& b) {
  require(a.field() == b.field(), Errc::field_mismatch, "vec_kron");
  Vec out(a.dim() * b.dim(), a.field());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.dim(); ++k)
      if (!b[k].is_zero()) out[i * b.dim() + k] = a[i] * b[k];
  }
  return out;
}

std::size_t flatten(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& idx) {
  std::size_t flat = 0;
  for (std::size_t l = 0; l < dims.size(); ++l) flat = flat * dims[l] + idx[l];
  return flat;
}

std::vector<std::size_t> unflatten(const std::vector<std::size_t>& dims, std::size_t flat) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t l = dims.size(); l-- > 0;) {
    idx[l] = flat % dims[l];
    flat /= dims[l];
  }
  return idx;
}

namespace {
// old flat index -> new flat index under leg permutation
std::vector<std::size_t> perm_map(const std::vector<std::size_t>& dims,
                                  const std::vector<std::size_t>& perm) {
  require(dims.size() == perm.size(), Errc::shape_mismatch, "leg permutation arity");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    require(p < perm.size() && !seen[p], Errc::shape_mismatch, "not a permutation");
    seen[p] = true;
  }
  std::vector<std::size_t> newdims(dims.size());
  for (std::size_t l = 0; l < dims.size(); ++l) newdims[perm[l]] = dims[l];
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> map(total);
  std::vector<std::size_t> nidx(dims.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    auto idx = unflatten(dims, flat);
    for (std::size_t l = 0; l < dims.size(); ++l) nidx[perm[l]] = idx[l];
    map[flat] = flatten(newdims, nidx);
  }
  return map;
}
}  // namespace

Mat leg_permutation(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm,
                    const Field& f) {
  auto map = perm_map(dims, perm);
  Mat out(map.size(), map.size(), f);
  for (std::size_t flat = 0; flat < map.size(); ++flat) out(map[flat], flat) = Scalar::one(f);
  return out;
}

Mat permute_legs_rows(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm,
                      const Mat& m) {
  auto map = perm_map(dims, perm);
  require(map.size() == m.rows(), Errc::shape_mismatch, "permute_legs_rows");
  Mat out(m.rows(), m.cols(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(map[i], j) = m(i, j);
  return out;
}

Mat kron_apply_rows(const std::vector<std::size_t>& dims, const std::vector<const Mat*>& factors,
                    const Mat& m) {
  require(dims.size() == factors.size(), Errc::shape_mismatch, "kron_apply_rows arity");
  Mat cur = m;
  std::vector<std::size_t> curdims = dims;
  for (std::size_t l = 0; l < factors.size(); ++l) {
    const Mat* a = factors[l];
    if (a == nullptr) continue;
    require(a->cols() == curdims[l], Errc::shape_mismatch, "kron_apply_rows leg " + std::to_string(l));
    std::size_t pre = 1, post = 1;
    for (std::size_t t = 0; t < l; ++t) pre *= curdims[t];
    for (std::size_t t = l + 1; t < curdims.size(); ++t) post *= curdims[t];
    Mat next(pre * a->rows() * post, cur.cols(), cur.field());
    for (std::size_t p = 0; p < pre; ++p)
      for (std::size_t i = 0; i < a->rows(); ++i)
        for (std::size_t j = 0; j < a->cols(); ++j) {
          const Scalar& x = (*a)(i, j);
          if (x.is_zero()) continue;
          for (std::size_t q = 0; q < post; ++q) {
            std::size_t src = (p * a->cols() + j) * post + q;
            std::size_t dst = (p * a->rows() + i) * post + q;
            for (std::size_t cjj = 0; cjj < cur.cols(); ++cjj) {
              const Scalar& y = cur(src, cjj);
              if (!y.is_zero()) next(dst, cjj) += x * y;
            }
          }
        }
    cur = std::move(next);
    curdims[l] = a->rows();
  }
  return cur;
}

Vec kron_apply_vec(const std::vector<std::size_t>& dims, const std::vector<const Mat*>& factors,
                   const Vec& v) {
  Mat m(v.dim(), 1, v.field());
  for (std::size_t i = 0; i < v.dim(); ++i) m(i, 0) = v[i];
  return kron_apply_rows(dims, factors, m).col(0);
}

Vec contract_leg(const std::vector<std::size_t>& dims, std::size_t leg, const Vec& functional,
                 const Vec& v) {
  require(leg < dims.size() && functional.dim() == dims[leg], Errc::shape_mismatch, "contract_leg");
  std::size_t pre = 1, post = 1;
  for (std::size_t t = 0; t < leg; ++t) pre *= dims[t];
  for (std::size_t t = leg + 1; t < dims.size(); ++t) post *= dims[t];
  Vec out(pre * post, v.field());
  for (std::size_t p = 0; p < pre; ++p)
    for (std::size_t j = 0; j < dims[leg]; ++j) {
      if (functional[j].is_zero()) continue;
      for (std::size_t q = 0; q < post; ++q) {
        const Scalar& x = v[(p * dims[leg] + j) * post + q];
        if (!x.is_zero()) out[p * post + q] += functional[j] * x;
      }
    }
  return out;
}

namespace {
// Gauss-Jordan on [a | rhs]; returns reduced rhs when a is invertible.
std::optional<Mat> eliminate(Mat a, Mat rhs) {
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
      }
    if (piv != col)
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(piv, j), rhs(col, j));
    Scalar inv = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) a(col, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(col, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      Scalar factor = a(i, col);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= factor * a(col, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= factor * rhs(col, j);
    }
  }
  return rhs;
}
}  // namespace

std::optional<Mat> solve_inverse(const Mat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  return eliminate(a, Mat::identity(a.rows(), a.field()));
}

std::optional<Vec> solve_linear(const Mat& a, const Vec& b) {
  if (a.rows() != a.cols() || b.dim() != a.rows()) return std::nullopt;
  Mat rhs(a.rows(), 1, a.field());
  for (std::size_t i = 0; i < a.rows(); ++i) rhs(i, 0) = b[i];
  auto r = eliminate(a, rhs);
  if (!r) return std::nullopt;
  return r->col(0);
}

std::vector<Vec> nullspace(const Mat& a) {
  // row echelon on a copy
  Mat m = a;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(rank, j));
    Scalar inv = m(rank, col).inverse();
    for (std::size_t j = 0; j < cols; ++j) m(rank, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m(i, col).is_zero()) continue;
      Scalar factor = m(i, col);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= factor * m(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, a.field());
    v[free] = Scalar::one(a.field());
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::make_pair(std::size_t(0), std::size_t(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

void for_nonzero(const Vec& v, const std::function<void(std::size_t, const Scalar&)>& fn) {
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!v[i].is_zero()) fn(i, v[i]);
}

}  // namespace zgh
