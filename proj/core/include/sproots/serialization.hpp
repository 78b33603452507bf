#pragma once

// JSON interchange formats.
//
//   field:      {"n": 3, "modulus_hex": "b"}
//   polynomial: {"field": <field>, "terms": [{"coeff_hex": "3", "exp": "12"}, ...]}
//   reduction:  {"field": <field>, "poly": <polynomial>,
//                "provenance": {"s": .., "var_map": [..], "clause_terms": [..]}}
//
// Hex strings are the integer value of the bit vector (bit 0 = constant
// term / first coordinate), lowercase, zero-padded to a fixed width.
// Exponents are decimal strings so they are not limited to 64 bits.

#include <string>
#include <string_view>

#include "sproots/gf2n.hpp"
#include "sproots/reduction.hpp"
#include "sproots/sparse_poly.hpp"

namespace sproots {

std::string field_to_json(const FieldContext& ctx);
/// Accepts only the canonical modulus find_irreducible(n).
const FieldContext& field_from_json(std::string_view text);

std::string poly_to_json(const SparsePolynomial& p);
SparsePolynomial poly_from_json(std::string_view text);

std::string reduction_to_json(const ReductionOutput& out);
ReductionOutput reduction_from_json(std::string_view text);

/// A polynomial document, or the "poly" member of a reduction document.
SparsePolynomial any_poly_from_json(std::string_view text);

}  // namespace sproots
