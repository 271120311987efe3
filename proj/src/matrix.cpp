#include "cmpreproj/matrix.hpp"

#include <sstream>
#include <type_traits>

#include "cmpreproj/errors.hpp"

namespace cmpreproj {

template <class F>
Matrix<F> Matrix<F>::identity(const F& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_rows(const F& f, int cols, const std::vector<std::vector<Elem>>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) m.set_row(i, rows[i]);
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_ints(const F& f, const std::vector<std::vector<long long>>& rows) {
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  Matrix m(f, static_cast<int>(rows.size()), c);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InvalidInput("ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::vstack(const F& f, int cols, const std::vector<Matrix>& parts) {
  int r = 0;
  for (auto& p : parts) r += p.rows_;
  Matrix m(f, r, cols);
  int at = 0;
  for (auto& p : parts) {
    m.set_block(at, 0, p);
    at += p.rows_;
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::hstack(const F& f, int rows, const std::vector<Matrix>& parts) {
  int c = 0;
  for (auto& p : parts) c += p.cols_;
  Matrix m(f, rows, c);
  int at = 0;
  for (auto& p : parts) {
    m.set_block(0, at, p);
    at += p.cols_;
  }
  return m;
}

template <class F>
void Matrix<F>::set_row(int i, const std::vector<Elem>& v) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

template <class F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class F>
Matrix<F> Matrix<F>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Matrix r(f_, rows_, o.cols_);
  if constexpr (std::is_same_v<F, PrimeField>) {
    // delayed reduction: p < 2^16 so p^2 < 2^32 and 2^32 terms fit in 64 bits
    std::vector<std::uint64_t> acc(o.cols_);
    for (int i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      const Elem* a = row_ptr(i);
      for (int k = 0; k < cols_; ++k) {
        std::uint64_t x = a[k];
        if (x == 0) continue;
        const Elem* b = o.row_ptr(k);
        for (int j = 0; j < o.cols_; ++j) acc[j] += x * b[j];
      }
      Elem* out = r.row_ptr(i);
      for (int j = 0; j < o.cols_; ++j) out[j] = static_cast<Elem>(acc[j] % f_.p);
    }
  } else {
    for (int i = 0; i < rows_; ++i) {
      Elem* out = r.row_ptr(i);
      for (int k = 0; k < cols_; ++k) {
        const Elem& x = (*this)(i, k);
        if (f_.is_zero(x)) continue;
        const Elem* b = o.row_ptr(k);
        for (int j = 0; j < o.cols_; ++j)
          if (!f_.is_zero(b[j])) out[j] += x * b[j];
      }
    }
  }
  return r;
}

template <class F>
Matrix<F> Matrix<F>::operator+(const Matrix& o) const {
  Matrix r = *this;
  r.add_scaled(o, f_.one());
  return r;
}

template <class F>
Matrix<F> Matrix<F>::operator-(const Matrix& o) const {
  Matrix r = *this;
  r.add_scaled(o, f_.neg(f_.one()));
  return r;
}

template <class F>
Matrix<F> Matrix<F>::scaled(const Elem& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = f_.mul(x, c);
  return r;
}

template <class F>
void Matrix<F>::add_scaled(const Matrix& o, const Elem& c) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
  if (f_.is_zero(c)) return;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!f_.is_zero(o.a_[i])) a_[i] = f_.add(a_[i], f_.mul(c, o.a_[i]));
}

template <class F>
bool Matrix<F>::is_zero() const {
  for (auto& x : a_)
    if (!f_.is_zero(x)) return false;
  return true;
}

template <class F>
Matrix<F> Matrix<F>::block(int r0, int c0, int nr, int nc) const {
  Matrix b(f_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

template <class F>
void Matrix<F>::set_block(int r0, int c0, const Matrix& b) {
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

template <class F>
Matrix<F> Matrix<F>::select_rows(const std::vector<int>& idx) const {
  Matrix r(f_, static_cast<int>(idx.size()), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) r(static_cast<int>(i), j) = (*this)(idx[i], j);
  return r;
}

template <class F>
Matrix<F> Matrix<F>::select_cols(const std::vector<int>& idx) const {
  Matrix r(f_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, static_cast<int>(j)) = (*this)(i, idx[j]);
  return r;
}

template <class F>
Matrix<F> Matrix<F>::append_rows(const Matrix& o) const {
  if (rows_ == 0) return o;
  if (o.rows_ == 0) return *this;
  return vstack(f_, cols_, {*this, o});
}

template <class F>
std::string Matrix<F>::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << f_.str((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

template <class F>
Vec<F> vec_mul(const Vec<F>& v, const Matrix<F>& m) {
  const F& f = m.field();
  Vec<F> out(m.cols(), f.zero());
  if constexpr (std::is_same_v<F, PrimeField>) {
    std::vector<std::uint64_t> acc(m.cols(), 0);
    for (int k = 0; k < m.rows(); ++k) {
      std::uint64_t x = v[k];
      if (!x) continue;
      const auto* b = m.row_ptr(k);
      for (int j = 0; j < m.cols(); ++j) acc[j] += x * b[j];
    }
    for (int j = 0; j < m.cols(); ++j) out[j] = static_cast<typename F::Elem>(acc[j] % f.p);
  } else {
    for (int k = 0; k < m.rows(); ++k) {
      if (f.is_zero(v[k])) continue;
      const auto* b = m.row_ptr(k);
      for (int j = 0; j < m.cols(); ++j)
        if (!f.is_zero(b[j])) out[j] += v[k] * b[j];
    }
  }
  return out;
}

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
  for (auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

namespace {

// row_dst += c * row_src over columns [from, n)
template <class F>
inline void axpy_row(const F& f, typename F::Elem* dst, const typename F::Elem* src,
                     const typename F::Elem& c, int from, int n) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    const std::uint64_t cc = c, p = f.p;
    for (int k = from; k < n; ++k)
      if (src[k]) dst[k] = static_cast<std::uint32_t>((dst[k] + cc * src[k]) % p);
  } else {
    for (int k = from; k < n; ++k)
      if (!f.is_zero(src[k])) dst[k] += c * src[k];
  }
}

template <class F>
RrefResult<F> rref_impl(Matrix<F> m, Matrix<F>* transform) {
  const F& f = m.field();
  const int R = m.rows(), C = m.cols();
  if (transform) *transform = Matrix<F>::identity(f, R);
  RrefResult<F> res;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int piv = -1;
    for (int i = r; i < R; ++i)
      if (!f.is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int k = 0; k < C; ++k) std::swap(m(piv, k), m(r, k));
      if (transform)
        for (int k = 0; k < R; ++k) std::swap((*transform)(piv, k), (*transform)(r, k));
    }
    auto inv = f.inv(m(r, c));
    if (!f.is_one(inv)) {
      for (int k = c; k < C; ++k) m(r, k) = f.mul(m(r, k), inv);
      if (transform)
        for (int k = 0; k < R; ++k) (*transform)(r, k) = f.mul((*transform)(r, k), inv);
    }
    for (int i = 0; i < R; ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = f.neg(m(i, c));
      axpy_row(f, m.row_ptr(i), m.row_ptr(r), factor, c, C);
      if (transform) axpy_row(f, transform->row_ptr(i), transform->row_ptr(r), factor, 0, R);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.m = std::move(m);
  return res;
}

}  // namespace

template <class F>
RrefResult<F> rref(Matrix<F> m) {
  return rref_impl<F>(std::move(m), nullptr);
}

template <class F>
RrefResult<F> rref_transform(Matrix<F> m, Matrix<F>& transform) {
  return rref_impl(std::move(m), &transform);
}

template <class F>
int rank(const Matrix<F>& m) {
  if (m.empty()) return 0;
  if (m.rows() > m.cols()) return rref(m.transpose()).rank;
  return rref(m).rank;
}

template <class F>
Subspace<F> Subspace<F>::span(const Matrix<F>& rows) {
  Subspace s;
  auto r = rref(rows);
  s.basis_ = r.m.block(0, 0, r.rank, rows.cols());
  s.pivots_ = r.pivots;
  return s;
}

template <class F>
Subspace<F> Subspace<F>::full(const F& f, int ambient) {
  Subspace s;
  s.basis_ = Matrix<F>::identity(f, ambient);
  for (int i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

template <class F>
Vec<F> Subspace<F>::reduce(Vec<F> v) const {
  const F& f = field();
  for (int i = 0; i < dim(); ++i) {
    const auto& x = v[pivots_[i]];
    if (f.is_zero(x)) continue;
    auto c = f.neg(x);
    axpy_row(f, v.data(), basis_.row_ptr(i), c, pivots_[i], ambient());
  }
  return v;
}

template <class F>
bool Subspace<F>::contains(const Vec<F>& v) const {
  return vec_is_zero(field(), reduce(v));
}

template <class F>
Vec<F> Subspace<F>::coordinates(const Vec<F>& v) const {
  Vec<F> c(dim());
  for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

template <class F>
Subspace<F> Subspace<F>::sum(const Subspace& o) const {
  return span(basis_.append_rows(o.basis_));
}

template <class F>
bool Subspace<F>::contains(const Subspace& o) const {
  for (int i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_.row(i))) return false;
  return true;
}

template <class F>
std::vector<int> Subspace<F>::non_pivot_columns() const {
  std::vector<int> out;
  std::size_t k = 0;
  for (int c = 0; c < ambient(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
  const F& f = m.field();
  auto r = rref(m);
  const int C = m.cols();
  std::vector<bool> is_piv(C, false);
  for (int p : r.pivots) is_piv[p] = true;
  std::vector<Vec<F>> vecs;
  for (int c = 0; c < C; ++c) {
    if (is_piv[c]) continue;
    Vec<F> v(C, f.zero());
    v[c] = f.one();
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.m(i, c));
    vecs.push_back(std::move(v));
  }
  return Subspace<F>::span(Matrix<F>::from_rows(f, C, vecs));
}

template <class F>
Subspace<F> left_kernel(const Matrix<F>& m) {
  return kernel_basis(m.transpose());
}

template <class F>
std::optional<Vec<F>> solve_linear(const Matrix<F>& m, const Vec<F>& b) {
  const F& f = m.field();
  if (static_cast<int>(b.size()) != m.rows()) throw InvalidInput("solve_linear: rhs length mismatch");
  Matrix<F> aug(f, m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (int i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  auto r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols(), f.zero());
  for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.m(i, m.cols());
  return x;
}

template <class F>
Matrix<F> left_inverse(const Matrix<F>& m) {
  Matrix<F> e;
  auto r = rref_transform(m, e);
  if (r.rank != m.cols()) throw Error("left_inverse: matrix lacks full column rank");
  return e.block(0, 0, m.cols(), m.rows());
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Matrix<F> e;
  auto r = rref_transform(m, e);
  if (r.rank != m.rows()) return std::nullopt;
  return e;
}

template <class F>
std::vector<int> independent_rows_modulo(const Matrix<F>& rows, const Subspace<F>& base) {
  std::vector<int> out;
  Subspace<F> cur = base;
  for (int i = 0; i < rows.rows(); ++i) {
    auto v = rows.row(i);
    if (cur.contains(v)) continue;
    out.push_back(i);
    cur = cur.sum(Subspace<F>::span(Matrix<F>::from_rows(rows.field(), rows.cols(), {v})));
  }
  return out;
}

#define CMPREPROJ_INSTANTIATE(F)                                                      \
  template class Matrix<F>;                                                           \
  template class Subspace<F>;                                                         \
  template Vec<F> vec_mul<F>(const Vec<F>&, const Matrix<F>&);                        \
  template bool vec_is_zero<F>(const F&, const Vec<F>&);                              \
  template RrefResult<F> rref<F>(Matrix<F>);                                          \
  template RrefResult<F> rref_transform<F>(Matrix<F>, Matrix<F>&);                    \
  template int rank<F>(const Matrix<F>&);                                             \
  template Subspace<F> kernel_basis<F>(const Matrix<F>&);                             \
  template Subspace<F> left_kernel<F>(const Matrix<F>&);                              \
  template std::optional<Vec<F>> solve_linear<F>(const Matrix<F>&, const Vec<F>&);    \
  template Matrix<F> left_inverse<F>(const Matrix<F>&);                               \
  template std::optional<Matrix<F>> inverse<F>(const Matrix<F>&);                     \
  template std::vector<int> independent_rows_modulo<F>(const Matrix<F>&, const Subspace<F>&);

CMPREPROJ_INSTANTIATE(PrimeField)
CMPREPROJ_INSTANTIATE(RationalField)

}  // namespace cmpreproj
