#pragma once

// Brute-force ground truth: exhaustive model and root counting, and
// construction-independent versions of the Moore determinant and of the
// coordinate polynomials.

#include <cstdint>
#include <span>

#include "sproots/cnf.hpp"
#include "sproots/coord_funcs.hpp"
#include "sproots/sparse_poly.hpp"

namespace sproots {

inline constexpr unsigned kMaxSatEnumerationVars = 24;
inline constexpr unsigned kMaxRootEnumerationDegree = 16;
inline constexpr std::size_t kMaxCofactorOracleSize = 6;

/// Model count over all 2^v assignments. Throws GuardExceeded for v > 24.
std::uint64_t count_sat_bruteforce(const Cnf& cnf);
/// Model count of the padded formula over all 2^(v+2s) assignments.
std::uint64_t count_sat_bruteforce(const PaddedCnf& padded);

/// Number of x in F_{2^n} with p(x) = 0. Throws GuardExceeded for n > 16.
std::uint64_t count_roots_bruteforce(const SparsePolynomial& p);

/// f_i from the interpolation conditions f_i(omega_j) = delta_ij, solved as
/// an n x n linear system over F_{2^n} by Gauss-Jordan elimination.
LinearizedPolynomial coordinate_poly_oracle(const FieldContext& ctx, unsigned i);

/// Moore determinant by full cofactor recursion. Throws GuardExceeded for k > 6.
FieldElement moore_determinant_oracle(std::span<const FieldElement> elems);

/// Rank over F_2 of the coordinate vectors.
std::size_t f2_rank(std::span<const FieldElement> elems);

}  // namespace sproots
