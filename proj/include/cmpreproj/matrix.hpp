#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmpreproj/field.hpp"

namespace cmpreproj {

// Dense row-major matrix over a field object F.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(const F& f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, f.zero()) {}

  static Matrix identity(const F& f, int n);
  static Matrix from_rows(const F& f, int cols, const std::vector<std::vector<Elem>>& rows);
  static Matrix from_ints(const F& f, const std::vector<std::vector<long long>>& rows);
  static Matrix vstack(const F& f, int cols, const std::vector<Matrix>& parts);
  static Matrix hstack(const F& f, int rows, const std::vector<Matrix>& parts);

  const F& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem* row_ptr(int i) { return a_.data() + static_cast<std::size_t>(i) * cols_; }
  const Elem* row_ptr(int i) const { return a_.data() + static_cast<std::size_t>(i) * cols_; }
  std::vector<Elem> row(int i) const { return {row_ptr(i), row_ptr(i) + cols_}; }
  void set_row(int i, const std::vector<Elem>& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Elem& c) const;
  void add_scaled(const Matrix& o, const Elem& c);
  bool is_zero() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const Matrix& b);
  Matrix select_rows(const std::vector<int>& idx) const;
  Matrix select_cols(const std::vector<int>& idx) const;
  Matrix append_rows(const Matrix& o) const;

  std::string str() const;

 private:
  F f_{};
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> a_;
};

template <class F>
using Vec = std::vector<typename F::Elem>;

// row vector times matrix
template <class F>
Vec<F> vec_mul(const Vec<F>& v, const Matrix<F>& m);

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v);

template <class F>
struct RrefResult {
  Matrix<F> m;
  int rank = 0;
  std::vector<int> pivots;
};

template <class F>
RrefResult<F> rref(Matrix<F> m);

// Also returns E with E * input = reduced form (E square, rows x rows).
template <class F>
RrefResult<F> rref_transform(Matrix<F> m, Matrix<F>& transform);

template <class F>
int rank(const Matrix<F>& m);

// Row space of a matrix, stored canonically as its nonzero rref rows.
template <class F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  Subspace() = default;
  Subspace(const F& f, int ambient) : basis_(f, 0, ambient) {}
  static Subspace span(const Matrix<F>& rows);
  static Subspace full(const F& f, int ambient);

  int dim() const { return basis_.rows(); }
  int ambient() const { return basis_.cols(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const F& field() const { return basis_.field(); }

  // v minus its projection along the pivot coordinates
  Vec<F> reduce(Vec<F> v) const;
  bool contains(const Vec<F>& v) const;
  // coordinates w.r.t. the rref basis (valid for members)
  Vec<F> coordinates(const Vec<F>& v) const;
  Subspace sum(const Subspace& o) const;
  bool contains(const Subspace& o) const;
  std::vector<int> non_pivot_columns() const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Matrix<F> basis_;
  std::vector<int> pivots_;
};

// {v : m v = 0}
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m);

// {x : x m = 0}
template <class F>
Subspace<F> left_kernel(const Matrix<F>& m);

// some x with m x = b, free variables set to zero
template <class F>
std::optional<Vec<F>> solve_linear(const Matrix<F>& m, const Vec<F>& b);

// S with S * m = I, for m of full column rank
template <class F>
Matrix<F> left_inverse(const Matrix<F>& m);

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m);

// indices of rows extending the span of `base` greedily, in order
template <class F>
std::vector<int> independent_rows_modulo(const Matrix<F>& rows, const Subspace<F>& base);

}  // namespace cmpreproj
