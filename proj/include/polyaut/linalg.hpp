#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "scalar.hpp"

namespace polyaut {

template <field_scalar K>
using Matrix = std::vector<std::vector<K>>;

template <field_scalar K>
Matrix<K> identity_matrix(int n) {
  Matrix<K> m(static_cast<std::size_t>(n), std::vector<K>(static_cast<std::size_t>(n), K(0)));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = K(1);
  return m;
}

/// Gauss-Jordan inverse; nullopt when the matrix is singular.
template <field_scalar K>
std::optional<Matrix<K>> try_inverse(Matrix<K> m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  Matrix<K> inv = identity_matrix<K>(static_cast<int>(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    K lead = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] / lead;
      inv[col][j] = inv[col][j] / lead;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      K factor = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] = m[row][j] - factor * m[col][j];
        inv[row][j] = inv[row][j] - factor * inv[col][j];
      }
    }
  }
  return inv;
}

template <field_scalar K>
K determinant(Matrix<K> m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
  K det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return K(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det = det * m[col][col];
    K lead = m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      K factor = m[row][col] / lead;
      for (std::size_t j = col; j < n; ++j) m[row][j] = m[row][j] - factor * m[col][j];
    }
  }
  return det;
}

template <field_scalar K>
std::vector<K> matrix_vector(const Matrix<K>& m, const std::vector<K>& v) {
  std::vector<K> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != v.size()) throw std::invalid_argument("matrix/vector size mismatch");
    K acc(0);
    for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

/// Incrementally built linear span of polynomials, kept in row-echelon form
/// over the graded-lex monomial basis. Supports exact rank and membership.
template <field_scalar K>
class PolySpan {
 public:
  explicit PolySpan(int nvars) : nvars_(nvars) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  /// Adds p to the span; returns true when the rank grew.
  bool insert(const Polynomial<K>& p) {
    auto residue = reduce(p);
    if (residue.empty()) return false;
    K lead = residue.rbegin()->second;
    for (auto& [e, c] : residue) c = c / lead;
    Exponents pivot = residue.rbegin()->first;
    rows_.emplace(std::move(pivot), std::move(residue));
    return true;
  }

  bool contains(const Polynomial<K>& p) const { return reduce(p).empty(); }

 private:
  using Row = std::map<Exponents, K, GradedLexLess>;

  Row reduce(const Polynomial<K>& p) const {
    if (p.nvars() != nvars_) throw std::invalid_argument("variable-count mismatch");
    Row residue;
    for (const auto& [e, c] : p.terms()) residue.emplace_hint(residue.end(), e, c);
    while (!residue.empty()) {
      auto lead = residue.rbegin();
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) break;
      K factor = lead->second;
      for (const auto& [e, c] : row->second) {
        auto it = residue.find(e);
        if (it == residue.end()) {
          K v = -(factor * c);
          if (!v.is_zero()) residue.emplace(e, std::move(v));
        } else {
          it->second -= factor * c;
          if (it->second.is_zero()) residue.erase(it);
        }
      }
    }
    return residue;
  }

  int nvars_;
  // Keyed by pivot (graded-lex greatest) monomial; pivot coefficient is 1.
  std::map<Exponents, Row, GradedLexLess> rows_;
};

}  // namespace polyaut
