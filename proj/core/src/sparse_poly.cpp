#include "sproots/sparse_poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

namespace sproots {

namespace {

void check_same(const FieldContext& a, const FieldContext& b) {
  if (&a != &b) throw ContextMismatch();
}

// Sorted by exponent, equal exponents coalesced, zeros dropped.
std::vector<Term> normalize(const FieldContext& ctx, std::vector<Term> terms) {
  for (const Term& t : terms) {
    check_same(ctx, t.coeff.context());
    if (t.exp < 0) throw DomainError("negative exponent in sparse polynomial");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

SparsePolynomial::SparsePolynomial(const FieldContext& ctx, std::vector<Term> terms)
    : ctx_(&ctx), terms_(normalize(ctx, std::move(terms))) {}

SparsePolynomial SparsePolynomial::constant(const FieldElement& c) {
  return monomial(c, 0);
}

SparsePolynomial SparsePolynomial::monomial(const FieldElement& c, BigUint exp) {
  std::vector<Term> terms;
  terms.push_back({c, std::move(exp)});
  return {c.context(), std::move(terms)};
}

SparsePolynomial SparsePolynomial::variable(const FieldContext& ctx) {
  return monomial(ctx.one(), 1);
}

SparsePolynomial add_polys(const SparsePolynomial& p, const SparsePolynomial& q) {
  check_same(p.context(), q.context());
  std::vector<Term> merged;
  merged.reserve(p.size() + q.size());
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() || b != q.terms().end()) {
    if (b == q.terms().end() || (a != p.terms().end() && a->exp < b->exp)) {
      merged.push_back(*a++);
    } else if (a == p.terms().end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->coeff + b->coeff, a->exp});
      ++a;
      ++b;
    }
  }
  return {p.context(), std::move(merged)};
}

SparsePolynomial mul_polys(const SparsePolynomial& p, const SparsePolynomial& q) {
  check_same(p.context(), q.context());
  std::vector<Term> products;
  products.reserve(p.size() * q.size());
  for (const Term& s : p.terms())
    for (const Term& t : q.terms()) products.push_back({s.coeff * t.coeff, s.exp + t.exp});
  return {p.context(), std::move(products)};
}

SparsePolynomial scale(const SparsePolynomial& p, const FieldElement& c) {
  check_same(p.context(), c.context());
  std::vector<Term> scaled(p.terms().begin(), p.terms().end());
  for (Term& t : scaled) t.coeff *= c;
  return {p.context(), std::move(scaled)};
}

FieldElement evaluate(const SparsePolynomial& p, const FieldElement& x) {
  const FieldContext& ctx = p.context();
  check_same(ctx, x.context());
  FieldElement sum = ctx.zero();
  if (x.is_zero()) {
    if (!p.is_zero() && p.terms().front().exp == 0) sum = p.terms().front().coeff;
    return sum;
  }
  for (const Term& t : p.terms()) sum += t.coeff * pow(x, t.exp);
  return sum;
}

std::uint64_t bit_length(const BigUint& e) {
  if (e == 0) return 1;
  return boost::multiprecision::msb(e) + 1;
}

std::uint64_t bit_size(const SparsePolynomial& p) {
  std::uint64_t total = 0;
  for (const Term& t : p.terms()) total += p.context().degree() + bit_length(t.exp);
  return total;
}

std::uint64_t reduced_exponent(const FieldContext& ctx, const BigUint& e) {
  if (e < 0) throw DomainError("negative exponent");
  if (e == 0) return 0;
  return static_cast<std::uint64_t>((e - 1) % BigUint(ctx.mask())) + 1;
}

SparsePolynomial reduce_exponents(const SparsePolynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) terms.push_back({t.coeff, reduced_exponent(p.context(), t.exp)});
  return {p.context(), std::move(terms)};
}

// ---------------------------------------------------------------------------

PreparedPolynomial::PreparedPolynomial(const SparsePolynomial& p) : ctx_(&p.context()) {
  const SparsePolynomial reduced = reduce_exponents(p);
  for (const Term& t : reduced.terms()) {
    const auto e = static_cast<std::uint64_t>(t.exp);
    if (e == 0) constant_ = t.coeff.coords();
    else terms_.push_back({t.coeff.coords(), e});
  }
}

std::uint64_t PreparedPolynomial::evaluate_coords(std::uint64_t x) const {
  if (x == 0) return constant_;
  const FieldContext& ctx = *ctx_;
  // x^(2^j) for every bit position of a reduced exponent
  std::array<std::uint64_t, kMaxFieldDegree> frobenius{};
  frobenius[0] = x;
  for (unsigned j = 1; j < ctx.degree(); ++j) frobenius[j] = ctx.square(frobenius[j - 1]);

  std::uint64_t sum = constant_;
  for (const ReducedTerm& t : terms_) {
    std::uint64_t e = t.exp;
    std::uint64_t monomial = frobenius[static_cast<unsigned>(std::countr_zero(e))];
    for (e &= e - 1; e != 0; e &= e - 1)
      monomial = ctx.multiply(monomial, frobenius[static_cast<unsigned>(std::countr_zero(e))]);
    sum ^= ctx.multiply(t.coeff, monomial);
  }
  return sum;
}

FieldElement PreparedPolynomial::operator()(const FieldElement& x) const {
  check_same(*ctx_, x.context());
  return ctx_->element(evaluate_coords(x.coords()));
}

}  // namespace sproots
