#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace specbound {

class Graph;

/// Dense row-major square matrix with no structural constraint. Used for
/// eigenvector bases, whose columns are the eigenvectors.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  DenseMatrix transposed() const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

/// Dense real symmetric matrix.
///
/// Both triangles are stored, and every mutating operation writes (u, v) and
/// (v, u) together, so entry(u, v) == entry(v, u) holds bitwise. Entries are
/// required to be finite at every write through set()/add(); the elementwise
/// arithmetic below preserves finiteness for finite operands of sane
/// magnitude.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  /// From explicit rows. Throws DimensionError on a non-square input,
  /// ArgumentError if the rows are not exactly symmetric or hold a NaN/Inf.
  SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows);
  static SymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows);

  /// Symmetric part (D + Dᵀ)/2 of a dense matrix.
  static SymmetricMatrix symmetrized(const DenseMatrix& d);

  static SymmetricMatrix identity(std::size_t n);
  static SymmetricMatrix ones(std::size_t n);  // J
  static SymmetricMatrix diagonal(std::span<const double> values);

  std::size_t size() const noexcept { return n_; }

  double operator()(std::size_t u, std::size_t v) const { return data_[u * n_ + v]; }

  void set(std::size_t u, std::size_t v, double value);
  void add(std::size_t u, std::size_t v, double value);

  /// Row-major view over all n² entries.
  std::span<const double> data() const noexcept { return data_; }

  double trace() const;
  double sum() const;
  double min_entry() const;
  bool all_finite() const;

  SymmetricMatrix& operator+=(const SymmetricMatrix& other);
  SymmetricMatrix& operator-=(const SymmetricMatrix& other);
  SymmetricMatrix& operator*=(double scale);

  /// this += scale * other
  void axpy(double scale, const SymmetricMatrix& other);

  /// Entries replaced by max(entry, 0).
  SymmetricMatrix clamped_nonnegative() const;

  bool operator==(const SymmetricMatrix&) const = default;

 private:
  friend SymmetricMatrix hadamard(const SymmetricMatrix&, const SymmetricMatrix&);

  std::size_t n_ = 0;
  std::vector<double> data_;
};

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b);
SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b);
SymmetricMatrix operator*(double s, SymmetricMatrix a);

/// Ordinary matrix product. The product of two symmetric matrices is not
/// symmetric in general, hence the dense result.
DenseMatrix multiply(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Entrywise (Schur) product. Throws DimensionError on size mismatch.
SymmetricMatrix hadamard(const SymmetricMatrix& x, const SymmetricMatrix& y);

/// Frobenius inner product Σ x_uv y_uv over all n² positions.
double inner(const SymmetricMatrix& x, const SymmetricMatrix& y);

double frobenius_sq(const SymmetricMatrix& m);
double frobenius_sq(const DenseMatrix& m);
double frobenius_norm(const SymmetricMatrix& m);
double frobenius_norm(const DenseMatrix& m);

/// ‖a - b‖_F
double frobenius_distance(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Squared entries summed over ordered adjacent pairs (u, v), both
/// orientations of every edge.
double edge_sum_sq(const SymmetricMatrix& m, const Graph& g);

/// Squared entries summed over ordered non-adjacent pairs, diagonal included.
/// edge_sum_sq + nonedge_sum_sq == frobenius_sq.
double nonedge_sum_sq(const SymmetricMatrix& m, const Graph& g);

/// Σ x_uv y_uv over ordered adjacent pairs.
double edge_inner(const SymmetricMatrix& x, const SymmetricMatrix& y, const Graph& g);

/// Σ x_uv y_uv over ordered non-adjacent pairs, diagonal included.
double nonedge_inner(const SymmetricMatrix& x, const SymmetricMatrix& y, const Graph& g);

}  // namespace specbound
