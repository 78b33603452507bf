#pragma once

// Sparse univariate polynomials over F_{2^n}: a list of (coefficient,
// exponent) pairs with arbitrary-precision exponents.

#include <cstdint>
#include <span>
#include <vector>

#include "sproots/gf2n.hpp"

namespace sproots {

struct Term {
  FieldElement coeff;
  BigUint exp;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Invariants: no zero coefficients, exponents strictly increasing. The
/// empty term list is the zero polynomial.
class SparsePolynomial {
 public:
  explicit SparsePolynomial(const FieldContext& ctx) : ctx_(&ctx) {}
  /// Sorts, merges equal exponents and drops zero coefficients.
  SparsePolynomial(const FieldContext& ctx, std::vector<Term> terms);

  static SparsePolynomial constant(const FieldElement& c);
  static SparsePolynomial monomial(const FieldElement& c, BigUint exp);
  /// The polynomial x.
  static SparsePolynomial variable(const FieldContext& ctx);

  const FieldContext& context() const { return *ctx_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  const FieldContext* ctx_;
  std::vector<Term> terms_;
};

SparsePolynomial add_polys(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial mul_polys(const SparsePolynomial& p, const SparsePolynomial& q);
/// c * p.
SparsePolynomial scale(const SparsePolynomial& p, const FieldElement& c);

inline SparsePolynomial operator+(const SparsePolynomial& p, const SparsePolynomial& q) {
  return add_polys(p, q);
}
inline SparsePolynomial operator*(const SparsePolynomial& p, const SparsePolynomial& q) {
  return mul_polys(p, q);
}

/// Value of p at x, with 0^0 = 1.
FieldElement evaluate(const SparsePolynomial& p, const FieldElement& x);

/// Input size: sum over terms of n + bit-length(exp), bit-length(0) = 1.
std::uint64_t bit_size(const SparsePolynomial& p);

/// Number of bits in the binary expansion of e; 1 for e = 0.
std::uint64_t bit_length(const BigUint& e);

/// Maps a nonzero exponent e to ((e-1) mod (2^n-1)) + 1 and 0 to 0. The
/// result agrees with e as an exponent for every element of F_{2^n},
/// including zero.
std::uint64_t reduced_exponent(const FieldContext& ctx, const BigUint& e);

/// p with every exponent replaced by its reduced_exponent (then normalized).
SparsePolynomial reduce_exponents(const SparsePolynomial& p);

/// p with exponents reduced once up front, for evaluating at many points.
class PreparedPolynomial {
 public:
  explicit PreparedPolynomial(const SparsePolynomial& p);

  const FieldContext& context() const { return *ctx_; }
  FieldElement operator()(const FieldElement& x) const;
  /// Evaluation on a raw coordinate vector.
  std::uint64_t evaluate_coords(std::uint64_t x) const;

 private:
  struct ReducedTerm {
    std::uint64_t coeff;
    std::uint64_t exp;
  };

  const FieldContext* ctx_;
  std::vector<ReducedTerm> terms_;
  std::uint64_t constant_ = 0;
};

}  // namespace sproots
