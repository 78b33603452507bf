#include "sproots/gf2n.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <ostream>
#include <utility>

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#endif

namespace sproots {

namespace gf2x {

int degree(Gf2Poly p) {
  const auto hi = static_cast<std::uint64_t>(p >> 64);
  const auto lo = static_cast<std::uint64_t>(p);
  if (hi != 0) return 127 - std::countl_zero(hi);
  if (lo != 0) return 63 - std::countl_zero(lo);
  return -1;
}

Gf2Poly mod(Gf2Poly a, Gf2Poly m) {
  const int dm = degree(m);
  if (dm < 0) throw DomainError("polynomial reduction modulo zero");
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

Gf2Poly mulmod(Gf2Poly a, Gf2Poly b, Gf2Poly m) {
  const int dm = degree(m);
  const Gf2Poly top = Gf2Poly{1} << dm;
  Gf2Poly r = 0;
  for (int i = degree(b); i >= 0; --i) {
    r <<= 1;
    if (r & top) r ^= m;
    if ((b >> i) & 1u) r ^= a;
  }
  return r;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::string to_hex(Gf2Poly p, std::size_t min_digits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  while (p != 0) {
    out.push_back(kDigits[static_cast<unsigned>(p & 0xf)]);
    p >>= 4;
  }
  while (out.size() < min_digits) out.push_back('0');
  return {out.rbegin(), out.rend()};
}

Gf2Poly from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw FormatError("empty hex string");
  Gf2Poly p = 0;
  int significant = 0;
  for (char c : hex) {
    unsigned digit;
    if (c >= '0' && c <= '9') digit = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') digit = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') digit = static_cast<unsigned>(c - 'A' + 10);
    else throw FormatError("invalid hex digit in '" + std::string(hex) + "'");
    if (p != 0 || digit != 0) ++significant;
    if (significant > 32) throw FormatError("hex value too wide: '" + std::string(hex) + "'");
    p = (p << 4) | digit;
  }
  return p;
}

Gf2Poly clmul_portable(std::uint64_t a, std::uint64_t b) {
  if (a < b) std::swap(a, b);
  std::array<Gf2Poly, 16> table{};
  for (unsigned k = 1; k < 16; ++k)
    table[k] = (k & 1u) ? table[k - 1] ^ a : table[k >> 1] << 1;
  Gf2Poly r = 0;
  for (int shift = (std::bit_width(b) + 3) / 4 * 4 - 4; shift >= 0; shift -= 4)
    r = (r << 4) ^ table[(b >> shift) & 0xf];
  return r;
}

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
namespace {

__attribute__((target("pclmul,sse4.1"))) Gf2Poly clmul_pclmul(std::uint64_t a, std::uint64_t b) {
  const __m128i product = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                               _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
  const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(product));
  const auto hi = static_cast<std::uint64_t>(_mm_extract_epi64(product, 1));
  return (Gf2Poly{hi} << 64) | lo;
}

using ClmulFn = Gf2Poly (*)(std::uint64_t, std::uint64_t);

ClmulFn select_clmul() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1") ? clmul_pclmul
                                                                              : clmul_portable;
}

}  // namespace

Gf2Poly clmul(std::uint64_t a, std::uint64_t b) {
  static const ClmulFn impl = select_clmul();
  return impl(a, b);
}
#else
Gf2Poly clmul(std::uint64_t a, std::uint64_t b) { return clmul_portable(a, b); }
#endif

}  // namespace gf2x

namespace {

std::array<unsigned, 8> prime_divisors(unsigned d) {
  std::array<unsigned, 8> primes{};  // 0-terminated; d <= 64 has at most 3
  std::size_t count = 0;
  for (unsigned q = 2; q * q <= d; ++q) {
    if (d % q != 0) continue;
    primes[count++] = q;
    while (d % q == 0) d /= q;
  }
  if (d > 1) primes[count++] = d;
  return primes;
}

// x^(2^k) mod p
Gf2Poly frobenius_power_of_x(Gf2Poly p, unsigned k) {
  Gf2Poly t = gf2x::mod(Gf2Poly{2}, p);
  for (unsigned i = 0; i < k; ++i) t = gf2x::mulmod(t, t, p);
  return t;
}

}  // namespace

bool is_irreducible(Gf2Poly p) {
  const int d = gf2x::degree(p);
  if (d < 1) throw DomainError("irreducibility test needs a polynomial of degree >= 1");
  if (d > static_cast<int>(kMaxFieldDegree))
    throw DomainError("irreducibility test limited to degree <= " +
                      std::to_string(kMaxFieldDegree));
  const auto degree = static_cast<unsigned>(d);
  const Gf2Poly x = gf2x::mod(Gf2Poly{2}, p);
  if (frobenius_power_of_x(p, degree) != x) return false;
  for (unsigned q : prime_divisors(degree)) {
    if (q == 0) break;
    const Gf2Poly t = frobenius_power_of_x(p, degree / q) ^ x;
    if (gf2x::degree(gf2x::gcd(p, t)) != 0) return false;
  }
  return true;
}

Gf2Poly find_irreducible(unsigned n) {
  if (n < 1 || n > kMaxFieldDegree)
    throw DomainError("field degree must be in 1.." + std::to_string(kMaxFieldDegree));
  const Gf2Poly first = Gf2Poly{1} << n;
  const Gf2Poly last = (first << 1) - 1;
  for (Gf2Poly candidate = first; candidate <= last; ++candidate) {
    // x divides every even candidate of degree >= 2
    if (n >= 2 && (candidate & 1u) == 0) continue;
    if (is_irreducible(candidate)) return candidate;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

// ---------------------------------------------------------------------------
// FieldContext

FieldContext::FieldContext(unsigned n)
    : n_(n),
      modulus_(find_irreducible(n)),
      mask_(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1),
      reduction_(static_cast<std::uint64_t>(modulus_) & mask_) {}

const FieldContext& FieldContext::get(unsigned n) {
  if (n < 1 || n > kMaxFieldDegree)
    throw DomainError("field degree must be in 1.." + std::to_string(kMaxFieldDegree) +
                      ", got " + std::to_string(n));
  static std::array<std::unique_ptr<const FieldContext>, kMaxFieldDegree + 1> registry;
  static std::mutex registry_mutex;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[n];
  if (!slot) slot.reset(new FieldContext(n));
  return *slot;
}

FieldElement FieldContext::zero() const { return FieldElement(this, 0); }
FieldElement FieldContext::one() const { return FieldElement(this, 1); }
FieldElement FieldContext::element(std::uint64_t coords) const { return {*this, coords}; }

std::uint64_t FieldContext::multiply(std::uint64_t a, std::uint64_t b) const {
  // x^n = reduction_ (mod modulus): fold the part above degree n back down
  Gf2Poly c = gf2x::clmul(a, b);
  for (Gf2Poly high = c >> n_; high != 0; high = c >> n_)
    c = (c & mask_) ^ gf2x::clmul(static_cast<std::uint64_t>(high), reduction_);
  return static_cast<std::uint64_t>(c);
}

std::uint64_t FieldContext::invert(std::uint64_t a) const {
  if (a == 0) throw DomainError("inverse of zero");
  Gf2Poly u = a;
  Gf2Poly v = modulus_;
  Gf2Poly g1 = 1;
  Gf2Poly g2 = 0;
  while (u != 1) {
    int j = gf2x::degree(u) - gf2x::degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return static_cast<std::uint64_t>(gf2x::mod(g1, modulus_));
}

std::uint64_t FieldContext::power(std::uint64_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  e %= mask_;
  std::uint64_t result = 1;
  for (int i = std::bit_width(e) - 1; i >= 0; --i) {
    result = square(result);
    if ((e >> i) & 1u) result = multiply(result, a);
  }
  return result;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const FieldContext& ctx, std::uint64_t coords)
    : ctx_(&ctx), coords_(coords) {
  if ((coords & ~ctx.mask()) != 0)
    throw DomainError("coordinate vector wider than field degree " +
                      std::to_string(ctx.degree()));
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  if (ctx_ != other.ctx_) throw ContextMismatch();
  coords_ ^= other.coords_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  if (ctx_ != other.ctx_) throw ContextMismatch();
  coords_ = ctx_->multiply(coords_, other.coords_);
  return *this;
}

std::string FieldElement::to_hex() const {
  return gf2x::to_hex(coords_, (ctx_->degree() + 3) / 4);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  return os << "0x" << a.to_hex();
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement square(const FieldElement& a) {
  return a.context().element(a.context().square(a.coords()));
}

FieldElement inv(const FieldElement& a) {
  return a.context().element(a.context().invert(a.coords()));
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  return a.context().element(a.context().power(a.coords(), e));
}

FieldElement pow(const FieldElement& a, const BigUint& e) {
  if (e < 0) throw DomainError("negative exponent");
  const FieldContext& ctx = a.context();
  if (a.is_zero()) return e == 0 ? ctx.one() : ctx.zero();
  const auto reduced = static_cast<std::uint64_t>(e % BigUint(ctx.mask()));
  return ctx.element(ctx.power(a.coords(), reduced));
}

FieldElement frobenius_iter(const FieldElement& a, std::uint64_t j) {
  const FieldContext& ctx = a.context();
  std::uint64_t v = a.coords();
  for (std::uint64_t step = j % ctx.degree(); step > 0; --step) v = ctx.square(v);
  return ctx.element(v);
}

FieldElement basis(const FieldContext& ctx, unsigned i) {
  if (i < 1 || i > ctx.degree())
    throw DomainError("basis index " + std::to_string(i) + " outside 1.." +
                      std::to_string(ctx.degree()));
  return ctx.element(std::uint64_t{1} << (i - 1));
}

FieldElement element_from_hex(const FieldContext& ctx, std::string_view hex) {
  const Gf2Poly value = gf2x::from_hex(hex);
  if ((value >> 64) != 0 || (static_cast<std::uint64_t>(value) & ~ctx.mask()) != 0)
    throw FormatError("element '" + std::string(hex) + "' does not fit in F_2^" +
                      std::to_string(ctx.degree()));
  return ctx.element(static_cast<std::uint64_t>(value));
}

}  // namespace sproots
