#pragma once

// Parsimonious reduction from #3SAT to counting roots of one sparse
// polynomial over F_{2^n}.
//
// Variable v of the (padded) formula is the coordinate x_v of a field
// element in the basis omega_v = alpha^(v-1). Each constraint k becomes a
// {0,1}-valued polynomial P_k that is 1 exactly where the constraint is
// violated, and the system P_1 = ... = P_m = 0 collapses to the single
// equation sum_k omega_k P_k = 0.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sproots/cnf.hpp"
#include "sproots/coord_funcs.hpp"
#include "sproots/sparse_poly.hpp"

namespace sproots {

/// Product of the violation factors: x_i contributes 1 + f_i, NOT x_i contributes f_i.
SparsePolynomial clause_to_poly(const CoordinateTable& table, const Clause& clause);

/// 1 + f_a f_b: zero iff both coordinates are 1.
SparsePolynomial dummy_pair_to_poly(const CoordinateTable& table, DummyPair pair);

/// sum_k omega_k P_k. Requires polys.size() <= n.
SparsePolynomial combine(const FieldContext& ctx, std::span<const SparsePolynomial> polys);

struct VarMapEntry {
  enum class Kind { kOriginal, kDummy };

  unsigned coordinate;  // field coordinate index, 1-based
  Kind kind;
  unsigned source;  // original variable index, or 1-based dummy pair index

  friend bool operator==(const VarMapEntry&, const VarMapEntry&) = default;
};

struct ConstraintRecord {
  enum class Kind { kClause, kDummyPair };

  Kind kind;
  std::size_t source;   // 1-based clause index or dummy pair index
  unsigned omega;       // basis element multiplying this constraint
  std::string formula;  // factored form, e.g. "(1+f1)*f2*(1+f3)" or "1+f5*f6"
  std::size_t terms;    // term count of the expanded P_k

  friend bool operator==(const ConstraintRecord&, const ConstraintRecord&) = default;
};

struct Provenance {
  unsigned s = 0;
  std::vector<VarMapEntry> var_map;
  std::vector<ConstraintRecord> clause_terms;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ReductionOutput {
  SparsePolynomial poly;
  Provenance provenance;

  const FieldContext& field() const { return poly.context(); }
  friend bool operator==(const ReductionOutput&, const ReductionOutput&) = default;
};

/// Pads, builds F_{2^n} with n = total_vars, and combines the per-constraint
/// polynomials. The root count of the result equals the model count of cnf.
/// Throws DomainError if cnf is invalid or n exceeds kMaxFieldDegree.
ReductionOutput reduce(const Cnf& cnf);

/// Per-constraint polynomials P_1..P_{m+s} in combination order.
std::vector<SparsePolynomial> constraint_polys(const PaddedCnf& padded,
                                               const CoordinateTable& table);

}  // namespace sproots
