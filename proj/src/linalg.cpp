#include "pfaffcy/linalg.hpp"

#include <algorithm>

namespace pfaffcy {

Matrix Matrix::identity(const PrimeField& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Matrix::append_row(std::span<const Coeff> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) throw Error(Errc::invalid_argument, "row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::invalid_argument, "matrix shapes do not match");
  Matrix c(a.field_, a.rows_, b.cols_);
  DenseAccumulator acc(a.field_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    acc.clear();
    for (int k = 0; k < a.cols_; ++k)
      if (a(i, k)) acc.axpy_dense(a(i, k), b.row(k), 0);
    acc.reduce_all();
    for (int j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Coeff>(acc.data()[j]);
  }
  return c;
}

std::vector<Coeff> Matrix::apply(std::span<const Coeff> v) const {
  if (static_cast<int>(v.size()) != cols_) throw Error(Errc::invalid_argument, "vector length mismatch");
  std::vector<Coeff> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    std::uint64_t s = 0;
    int pending = 0;
    for (int j = 0; j < cols_; ++j) {
      s += static_cast<std::uint64_t>((*this)(i, j)) * v[j];
      if (++pending == 4) {
        s %= field_.prime();
        pending = 0;
      }
    }
    out[i] = static_cast<Coeff>(s % field_.prime());
  }
  return out;
}

DenseAccumulator::DenseAccumulator(const PrimeField& f, int width) : p_(f.prime()), acc_(width, 0) {
  const std::uint64_t sq = static_cast<std::uint64_t>(p_ - 1) * (p_ - 1);
  budget_ = std::max<std::uint64_t>(1, (UINT64_MAX - p_) / std::max<std::uint64_t>(sq, 1));
}

void DenseAccumulator::load(std::span<const Coeff> dense) {
  std::copy(dense.begin(), dense.end(), acc_.begin());
  used_ = 0;
}

void DenseAccumulator::clear() {
  std::fill(acc_.begin(), acc_.end(), 0);
  used_ = 0;
}

void DenseAccumulator::reduce_all() {
  for (auto& x : acc_) x %= p_;
  used_ = 0;
}

EchelonBuilder::EchelonBuilder(const PrimeField& f, int cols) : field_(f), cols_(cols), pivot_of_col_(cols, -1) {}

bool EchelonBuilder::insert(std::span<const Coeff> row) {
  if (static_cast<int>(row.size()) != cols_) throw Error(Errc::invalid_argument, "row length mismatch");
  DenseAccumulator acc(field_, cols_);
  acc.load(row);
  int lead = -1;
  for (int j = 0; j < cols_; ++j) {
    Coeff v = acc.value(j);
    if (!v) continue;
    if (pivot_of_col_[j] >= 0) {
      acc.axpy_dense(field_.neg(v), rows_[pivot_of_col_[j]], j);
    } else if (lead < 0) {
      lead = j;
    }
  }
  if (lead < 0) return false;
  acc.reduce_all();
  std::vector<Coeff> r(cols_, 0);
  Coeff inv = field_.inv(static_cast<Coeff>(acc.data()[lead]));
  for (int j = lead; j < cols_; ++j) r[j] = field_.mul(static_cast<Coeff>(acc.data()[j]), inv);
  pivot_of_col_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<int> rref(Matrix& m) {
  const PrimeField& f = m.field();
  const int cols = m.cols();
  std::vector<int> pivot_row(cols, -1);
  std::vector<std::vector<Coeff>> pivots;
  std::vector<int> pivot_cols;
  DenseAccumulator acc(f, cols);
  for (int i = 0; i < m.rows(); ++i) {
    acc.load(m.row(i));
    int lead = -1;
    for (int j = 0; j < cols; ++j) {
      Coeff v = acc.value(j);
      if (!v) continue;
      if (pivot_row[j] >= 0) {
        acc.axpy_dense(f.neg(v), pivots[pivot_row[j]], j);
      } else if (lead < 0) {
        lead = j;
      }
    }
    if (lead < 0) continue;
    acc.reduce_all();
    std::vector<Coeff> r(cols);
    Coeff inv = f.inv(static_cast<Coeff>(acc.data()[lead]));
    for (int j = lead; j < cols; ++j) r[j] = f.mul(static_cast<Coeff>(acc.data()[j]), inv);
    pivot_row[lead] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(r));
    pivot_cols.push_back(lead);
  }
  // back substitution, largest pivot column first
  std::vector<int> order(pivots.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot_cols[a] > pivot_cols[b]; });
  for (int idx : order) {
    int lead = pivot_cols[idx];
    acc.load(pivots[idx]);
    bool touched = false;
    for (int j = lead + 1; j < cols; ++j) {
      if (pivot_row[j] < 0) continue;
      Coeff v = acc.value(j);
      if (!v) continue;
      acc.axpy_dense(f.neg(v), pivots[pivot_row[j]], j);
      touched = true;
    }
    if (touched) {
      acc.reduce_all();
      for (int j = lead; j < cols; ++j) pivots[idx][j] = static_cast<Coeff>(acc.data()[j]);
    }
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot_cols[a] < pivot_cols[b]; });
  Matrix out(f, m.rows(), cols);
  std::vector<int> result;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::copy(pivots[order[k]].begin(), pivots[order[k]].end(), out.row(static_cast<int>(k)).begin());
    result.push_back(pivot_cols[order[k]]);
  }
  m = std::move(out);
  return result;
}

int rank(const Matrix& m) {
  Matrix c = m;
  return static_cast<int>(rref(c).size());
}

KernelResult rref_kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<int> piv = rref(r);
  const PrimeField& f = m.field();
  KernelResult out;
  out.rank = static_cast<int>(piv.size());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r(static_cast<int>(i), free));
    out.basis.push_back(std::move(v));
  }
  return out;
}

Matrix row_basis(const Matrix& m) {
  Matrix r = m;
  std::vector<int> piv = rref(r);
  Matrix out(m.field(), static_cast<int>(piv.size()), m.cols());
  for (int i = 0; i < out.rows(); ++i) std::copy(r.row(i).begin(), r.row(i).end(), out.row(i).begin());
  return out;
}

Coeff determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "determinant of a non-square matrix");
  const PrimeField& f = m.field();
  const int n = m.rows();
  Coeff det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    Coeff inv = f.inv(m(c, c));
    for (int r = c + 1; r < n; ++r) {
      if (!m(r, c)) continue;
      Coeff factor = f.mul(m(r, c), inv);
      for (int j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "inverse of a non-square matrix");
  const int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw Error(Errc::not_invertible, "singular matrix");
  Matrix inv(m.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Coeff> charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "characteristic polynomial of a non-square matrix");
  const PrimeField& f = m.field();
  const int n = m.rows();
  if (static_cast<Coeff>(n) >= f.prime()) throw Error(Errc::unsupported, "matrix too large for interpolation");
  // values det(t I - m) at t = 0..n, then Lagrange interpolation
  std::vector<Coeff> xs(n + 1), ys(n + 1);
  for (int t = 0; t <= n; ++t) {
    Matrix a(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = f.sub(i == j ? static_cast<Coeff>(t) : 0, m(i, j));
    xs[t] = static_cast<Coeff>(t);
    ys[t] = determinant(std::move(a));
  }
  std::vector<Coeff> result(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    // basis polynomial prod_{j != i} (t - xj) / (xi - xj)
    std::vector<Coeff> basis{1};
    Coeff denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Coeff> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] = f.add(next[k + 1], basis[k]);
        next[k] = f.sub(next[k], f.mul(basis[k], xs[j]));
      }
      basis = std::move(next);
      denom = f.mul(denom, f.sub(xs[i], xs[j]));
    }
    Coeff scale = f.mul(ys[i], f.inv(denom));
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] = f.add(result[k], f.mul(basis[k], scale));
  }
  return result;
}

}  // namespace pfaffcy
