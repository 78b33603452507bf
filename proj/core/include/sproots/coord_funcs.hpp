#pragma once

// Linearized polynomials, Moore determinants and the coordinate-extraction
// polynomials f_1..f_n with f_i(x_1 omega_1 + ... + x_n omega_n) = x_i.

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "sproots/gf2n.hpp"
#include "sproots/sparse_poly.hpp"

namespace sproots {

/// sum_j c_j x^(2^j) for j = 0..n-1. F_2-linear as a map on F_{2^n}.
class LinearizedPolynomial {
 public:
  explicit LinearizedPolynomial(const FieldContext& ctx);
  /// At most n coefficients; missing ones are zero.
  LinearizedPolynomial(const FieldContext& ctx, std::vector<FieldElement> coeffs);

  static LinearizedPolynomial identity(const FieldContext& ctx);

  const FieldContext& context() const { return *ctx_; }
  std::span<const FieldElement> coefficients() const { return coeffs_; }
  const FieldElement& coefficient(std::size_t j) const { return coeffs_.at(j); }

  FieldElement operator()(const FieldElement& x) const;

  friend bool operator==(const LinearizedPolynomial&, const LinearizedPolynomial&) = default;

 private:
  const FieldContext* ctx_;
  std::vector<FieldElement> coeffs_;
};

FieldElement eval_linearized(const LinearizedPolynomial& L, const FieldElement& x);

/// Terms (c_j, 2^j) for the nonzero c_j.
SparsePolynomial lin_to_sparse(const LinearizedPolynomial& L);

/// Row-major square matrix over one field.
class FieldMatrix {
 public:
  FieldMatrix(const FieldContext& ctx, std::size_t rows, std::size_t cols);

  const FieldContext& context() const { return *ctx_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement at(std::size_t i, std::size_t j) const { return ctx_->element(cell(i, j)); }
  void set(std::size_t i, std::size_t j, const FieldElement& v);

  std::uint64_t& cell(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  std::uint64_t cell(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

 private:
  const FieldContext* ctx_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> entries_;
};

/// Determinant by Gaussian elimination. Row swaps need no sign change in
/// characteristic 2. The 0x0 determinant is 1.
FieldElement determinant(FieldMatrix m);

/// Matrix with entries alpha_i^(2^j) for rows alpha_1..alpha_k, j = 0..cols-1.
class MooreMatrix {
 public:
  MooreMatrix(std::span<const FieldElement> rows, std::size_t cols);
  explicit MooreMatrix(std::span<const FieldElement> rows) : MooreMatrix(rows, rows.size()) {}

  const FieldMatrix& matrix() const { return matrix_; }
  FieldElement entry(std::size_t i, std::size_t j) const { return matrix_.at(i, j); }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }

 private:
  FieldMatrix matrix_;
};

/// Determinant of the k x k Moore matrix of elems; nonzero iff the elements
/// are linearly independent over F_2.
FieldElement moore_determinant(std::span<const FieldElement> elems);

/// f_i (1-based i) by cofactor expansion of the Moore determinant whose
/// first row is x, x^2, ..., x^(2^(n-1)) and whose other rows come from
/// omega_j, j != i, scaled so that f_i(omega_i) = 1.
LinearizedPolynomial coordinate_poly(const FieldContext& ctx, unsigned i);

/// f_1..f_n for one field. Each f_i is built on first use, exactly once,
/// and is immutable afterwards; lookups are safe from any thread.
class CoordinateTable {
 public:
  /// Cached per field; the returned table lives for the whole program.
  static const CoordinateTable& for_field(const FieldContext& ctx);

  explicit CoordinateTable(const FieldContext& ctx);

  const FieldContext& context() const { return *ctx_; }
  /// f_i for 1 <= i <= n.
  const LinearizedPolynomial& linearized(unsigned i) const;
  /// f_i as a sparse polynomial.
  const SparsePolynomial& sparse(unsigned i) const;
  /// 1 + f_i as a sparse polynomial.
  const SparsePolynomial& complement(unsigned i) const;

 private:
  struct Entry {
    LinearizedPolynomial linearized;
    SparsePolynomial sparse;
    SparsePolynomial complement;
  };

  const Entry& entry(unsigned i) const;

  const FieldContext* ctx_;
  mutable std::unique_ptr<std::once_flag[]> built_;
  mutable std::vector<std::optional<Entry>> entries_;
};

}  // namespace sproots
