#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pfaffcy/field.hpp"

namespace pfaffcy {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const PrimeField& f, int rows, int cols) : field_(f), rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

  static Matrix identity(const PrimeField& f, int n);

  const PrimeField& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Coeff& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  Coeff operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
  std::span<Coeff> row(int i) { return {data_.data() + std::size_t(i) * cols_, std::size_t(cols_)}; }
  std::span<const Coeff> row(int i) const { return {data_.data() + std::size_t(i) * cols_, std::size_t(cols_)}; }

  void append_row(std::span<const Coeff> r);

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  std::vector<Coeff> apply(std::span<const Coeff> v) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Coeff> data_;
};

/// Row-reduces m to reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);

int rank(const Matrix& m);

struct KernelResult {
  int rank = 0;
  /// Basis of {v : m v = 0}; one vector per free column, with a 1 in that
  /// column and zeros in the other free columns (canonical form).
  std::vector<std::vector<Coeff>> basis;
};

KernelResult rref_kernel(const Matrix& m);

/// Basis of the row space in reduced echelon form.
Matrix row_basis(const Matrix& m);

Coeff determinant(Matrix m);

/// Inverse; throws Errc::not_invertible for singular input.
Matrix inverse(const Matrix& m);

/// Characteristic polynomial det(t I - m), coefficients low degree first.
std::vector<Coeff> charpoly(const Matrix& m);

/// Incrementally grown row echelon form; insert() reports whether the new
/// row was independent of the rows seen so far.
class EchelonBuilder {
 public:
  EchelonBuilder(const PrimeField& f, int cols);

  bool insert(std::span<const Coeff> row);
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }

 private:
  PrimeField field_;
  int cols_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<int> pivot_of_col_;
};

/// Sparse-pivot elimination kernel shared with the Groebner engine: a dense
/// 64-bit accumulator that delays modular reduction as long as no overflow
/// can occur.
class DenseAccumulator {
 public:
  DenseAccumulator(const PrimeField& f, int width);

  void load(std::span<const Coeff> dense);
  void clear();
  std::uint64_t* data() noexcept { return acc_.data(); }
  int width() const noexcept { return static_cast<int>(acc_.size()); }

  /// Current residue in column j (reduces it in place).
  Coeff value(int j) {
    acc_[j] %= p_;
    return static_cast<Coeff>(acc_[j]);
  }
  /// acc += c * row, where row has entries at the given columns.
  void axpy(Coeff c, std::span<const std::uint32_t> cols, std::span<const Coeff> vals) {
    bump();
    const std::uint64_t cc = c;
    for (std::size_t k = 0; k < cols.size(); ++k) acc_[cols[k]] += cc * vals[k];
  }
  /// acc[from..] += c * dense[from..]
  void axpy_dense(Coeff c, std::span<const Coeff> dense, int from) {
    bump();
    const std::uint64_t cc = c;
    for (std::size_t k = from; k < dense.size(); ++k) acc_[k] += cc * dense[k];
  }
  void reduce_all();

 private:
  Coeff p_;
  std::vector<std::uint64_t> acc_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;

  void bump() {
    if (++used_ >= budget_) {
      reduce_all();
      used_ = 1;
    }
  }
};

}  // namespace pfaffcy
