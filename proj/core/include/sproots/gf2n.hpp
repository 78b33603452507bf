#pragma once

// Arithmetic in F_{2^n} for 1 <= n <= 64.
//
// Polynomials over F_2 are bit vectors with the constant term at bit 0. An
// element of F_{2^n} is the residue of a polynomial of degree < n modulo the
// field's irreducible polynomial; bit i-1 of its coordinate vector is the
// coefficient of the basis element omega_i = alpha^(i-1).

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "sproots/errors.hpp"

namespace sproots {

/// Arbitrary-precision integer used for exponents. Values are kept nonnegative.
using BigUint = boost::multiprecision::cpp_int;

/// Polynomial over F_2 of degree <= 127, bit i = coefficient of x^i.
__extension__ typedef unsigned __int128 Gf2Poly;

/// Largest supported extension degree.
inline constexpr unsigned kMaxFieldDegree = 64;

namespace gf2x {

/// Degree of p; -1 for the zero polynomial.
int degree(Gf2Poly p);
Gf2Poly mod(Gf2Poly a, Gf2Poly m);
/// a*b mod m for a, b already reduced mod m.
Gf2Poly mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m);
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
/// Carry-less product; uses PCLMULQDQ when the CPU has it.
Gf2Poly clmul(std::uint64_t a, std::uint64_t b);
/// Table-driven carry-less product, the fallback for clmul.
Gf2Poly clmul_portable(std::uint64_t a, std::uint64_t b);

/// Lowercase hex of the integer value of p, at least `min_digits` digits.
std::string to_hex(Gf2Poly p, std::size_t min_digits = 1);
Gf2Poly from_hex(std::string_view hex);

}  // namespace gf2x

/// Rabin's test: x^(2^d) = x (mod p) and gcd(x^(2^(d/q)) - x, p) = 1 for every
/// prime q | d. Throws DomainError for degree < 1 or degree > kMaxFieldDegree.
bool is_irreducible(Gf2Poly p);

/// Smallest (by integer value of the bit encoding) irreducible polynomial of
/// degree n.
Gf2Poly find_irreducible(unsigned n);

class FieldElement;

/// The field F_{2^n} with its canonical modulus find_irreducible(n).
///
/// Contexts are interned: there is exactly one instance per n, obtained from
/// get(), which lives for the whole program. Elements refer to their context
/// by address, so two elements are compatible iff their contexts are the
/// same object.
class FieldContext {
 public:
  static const FieldContext& get(unsigned n);

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  unsigned degree() const { return n_; }
  Gf2Poly modulus() const { return modulus_; }
  /// 2^n - 1: all-ones coordinate mask and the order of the multiplicative group.
  std::uint64_t mask() const { return mask_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Element with the given coordinate vector. Throws DomainError if bits >= n are set.
  FieldElement element(std::uint64_t coords) const;

  /// Raw arithmetic on coordinate vectors; no validation.
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t square(std::uint64_t a) const { return multiply(a, a); }
  std::uint64_t invert(std::uint64_t a) const;
  std::uint64_t power(std::uint64_t a, std::uint64_t e) const;

 private:
  explicit FieldContext(unsigned n);

  unsigned n_;
  Gf2Poly modulus_;
  std::uint64_t mask_;
  std::uint64_t reduction_;  // modulus without its x^n term
};

class FieldElement {
 public:
  FieldElement(const FieldContext& ctx, std::uint64_t coords);

  const FieldContext& context() const { return *ctx_; }
  std::uint64_t coords() const { return coords_; }
  /// Coordinate at 0-based `index`, i.e. the coefficient of omega_{index+1}.
  bool coordinate(unsigned index) const { return ((coords_ >> index) & 1u) != 0; }
  bool is_zero() const { return coords_ == 0; }
  bool is_one() const { return coords_ == 1; }

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.ctx_ == b.ctx_ && a.coords_ == b.coords_;
  }

  std::string to_hex() const;

 private:
  FieldElement(const FieldContext* ctx, std::uint64_t coords) : ctx_(ctx), coords_(coords) {}
  friend class FieldContext;

  const FieldContext* ctx_;
  std::uint64_t coords_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement square(const FieldElement& a);
/// Multiplicative inverse by the extended Euclidean algorithm. Throws DomainError on zero.
FieldElement inv(const FieldElement& a);
/// a^e with the convention 0^0 = 1. For a != 0 the exponent is reduced mod 2^n - 1.
FieldElement pow(const FieldElement& a, std::uint64_t e);
FieldElement pow(const FieldElement& a, const BigUint& e);
/// a^(2^j), the j-th iterate of the Frobenius map.
FieldElement frobenius_iter(const FieldElement& a, std::uint64_t j);
/// omega_i = alpha^(i-1) for 1 <= i <= n.
FieldElement basis(const FieldContext& ctx, unsigned i);

/// Parses the hex coordinate vector of an element of ctx.
FieldElement element_from_hex(const FieldContext& ctx, std::string_view hex);

}  // namespace sproots
