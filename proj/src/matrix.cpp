#include "specbound/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specbound/errors.hpp"
#include "specbound/graph.hpp"

namespace specbound {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("matrix dimensions differ: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

void require_graph_size(const SymmetricMatrix& m, const Graph& g) {
  if (m.size() != g.vertex_count()) {
    throw DimensionError("matrix dimension " + std::to_string(m.size()) +
                         " does not match vertex count " +
                         std::to_string(g.vertex_count()));
  }
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_size(a.size(), b.size());
  const std::size_t n = a.size();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

SymmetricMatrix::SymmetricMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  *this = from_rows(copy);
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  SymmetricMatrix m(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (rows[u].size() != n) throw DimensionError("rows do not form a square matrix");
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) {
      if (rows[u][v] != rows[v][u]) {
        throw ArgumentError("matrix is not symmetric at (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
      }
      m.set(u, v, rows[u][v]);
    }
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::symmetrized(const DenseMatrix& d) {
  const std::size_t n = d.size();
  SymmetricMatrix m(n);
  for (std::size_t u = 0; u < n; ++u) {
    m.data_[u * n + u] = d(u, u);
    for (std::size_t v = u + 1; v < n; ++v) {
      const double x = 0.5 * (d(u, v) + d(v, u));
      m.data_[u * n + v] = x;
      m.data_[v * n + u] = x;
    }
  }
  return m;
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

SymmetricMatrix SymmetricMatrix::ones(std::size_t n) {
  SymmetricMatrix m(n);
  std::fill(m.data_.begin(), m.data_.end(), 1.0);
  return m;
}

SymmetricMatrix SymmetricMatrix::diagonal(std::span<const double> values) {
  SymmetricMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

void SymmetricMatrix::set(std::size_t u, std::size_t v, double value) {
  if (u >= n_ || v >= n_) throw DimensionError("index out of range");
  if (!std::isfinite(value)) throw ArgumentError("non-finite matrix entry");
  data_[u * n_ + v] = value;
  data_[v * n_ + u] = value;
}

void SymmetricMatrix::add(std::size_t u, std::size_t v, double value) {
  if (u >= n_ || v >= n_) throw DimensionError("index out of range");
  const double x = data_[u * n_ + v] + value;
  if (!std::isfinite(x)) throw ArgumentError("non-finite matrix entry");
  data_[u * n_ + v] = x;
  data_[v * n_ + u] = x;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += data_[i * n_ + i];
  return t;
}

double SymmetricMatrix::sum() const { return std::accumulate(data_.begin(), data_.end(), 0.0); }

double SymmetricMatrix::min_entry() const {
  if (data_.empty()) return 0.0;
  return *std::min_element(data_.begin(), data_.end());
}

bool SymmetricMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& other) {
  axpy(1.0, other);
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator-=(const SymmetricMatrix& other) {
  axpy(-1.0, other);
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double scale) {
  for (double& x : data_) x *= scale;
  return *this;
}

void SymmetricMatrix::axpy(double scale, const SymmetricMatrix& other) {
  require_same_size(n_, other.n_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += scale * other.data_[i];
}

SymmetricMatrix SymmetricMatrix::clamped_nonnegative() const {
  SymmetricMatrix out = *this;
  for (double& x : out.data_) x = std::max(x, 0.0);
  return out;
}

SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) {
  a += b;
  return a;
}

SymmetricMatrix operator-(SymmetricMatrix a, const SymmetricMatrix& b) {
  a -= b;
  return a;
}

SymmetricMatrix operator*(double s, SymmetricMatrix a) {
  a *= s;
  return a;
}

DenseMatrix multiply(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  require_same_size(a.size(), b.size());
  const std::size_t n = a.size();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

SymmetricMatrix hadamard(const SymmetricMatrix& x, const SymmetricMatrix& y) {
  require_same_size(x.size(), y.size());
  SymmetricMatrix out(x.size());
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = x.data_[i] * y.data_[i];
  return out;
}

double inner(const SymmetricMatrix& x, const SymmetricMatrix& y) {
  require_same_size(x.size(), y.size());
  const auto xs = x.data();
  const auto ys = y.data();
  return std::inner_product(xs.begin(), xs.end(), ys.begin(), 0.0);
}

double frobenius_sq(const SymmetricMatrix& m) { return inner(m, m); }

double frobenius_sq(const DenseMatrix& m) {
  double s = 0.0;
  for (double x : m.data()) s += x * x;
  return s;
}

double frobenius_norm(const SymmetricMatrix& m) { return std::sqrt(frobenius_sq(m)); }
double frobenius_norm(const DenseMatrix& m) { return std::sqrt(frobenius_sq(m)); }

double frobenius_distance(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  require_same_size(a.size(), b.size());
  double s = 0.0;
  const auto as = a.data();
  const auto bs = b.data();
  for (std::size_t i = 0; i < as.size(); ++i) {
    const double d = as[i] - bs[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double edge_inner(const SymmetricMatrix& x, const SymmetricMatrix& y, const Graph& g) {
  require_graph_size(x, g);
  require_graph_size(y, g);
  double s = 0.0;
  for (auto [u, v] : g.ordered_edges()) s += x(u, v) * y(u, v);
  return s;
}

double nonedge_inner(const SymmetricMatrix& x, const SymmetricMatrix& y, const Graph& g) {
  require_graph_size(x, g);
  require_graph_size(y, g);
  const std::size_t n = g.vertex_count();
  double s = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || !g.adjacent(u, v)) s += x(u, v) * y(u, v);
    }
  }
  return s;
}

double edge_sum_sq(const SymmetricMatrix& m, const Graph& g) { return edge_inner(m, m, g); }

double nonedge_sum_sq(const SymmetricMatrix& m, const Graph& g) {
  return nonedge_inner(m, m, g);
}

}  // namespace specbound
