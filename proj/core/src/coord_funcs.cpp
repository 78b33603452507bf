#include "sproots/coord_funcs.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace sproots {

LinearizedPolynomial::LinearizedPolynomial(const FieldContext& ctx)
    : ctx_(&ctx), coeffs_(ctx.degree(), ctx.zero()) {}

LinearizedPolynomial::LinearizedPolynomial(const FieldContext& ctx,
                                           std::vector<FieldElement> coeffs)
    : ctx_(&ctx), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > ctx.degree())
    throw DomainError("linearized polynomial over F_2^" + std::to_string(ctx.degree()) +
                      " has at most " + std::to_string(ctx.degree()) + " coefficients");
  for (const FieldElement& c : coeffs_)
    if (&c.context() != &ctx) throw ContextMismatch();
  coeffs_.resize(ctx.degree(), ctx.zero());
}

LinearizedPolynomial LinearizedPolynomial::identity(const FieldContext& ctx) {
  return {ctx, {ctx.one()}};
}

FieldElement LinearizedPolynomial::operator()(const FieldElement& x) const {
  return eval_linearized(*this, x);
}

FieldElement eval_linearized(const LinearizedPolynomial& L, const FieldElement& x) {
  const FieldContext& ctx = L.context();
  if (&x.context() != &ctx) throw ContextMismatch();
  std::uint64_t power = x.coords();
  std::uint64_t sum = 0;
  for (const FieldElement& c : L.coefficients()) {
    sum ^= ctx.multiply(c.coords(), power);
    power = ctx.square(power);
  }
  return ctx.element(sum);
}

SparsePolynomial lin_to_sparse(const LinearizedPolynomial& L) {
  std::vector<Term> terms;
  BigUint exp = 1;
  for (const FieldElement& c : L.coefficients()) {
    if (!c.is_zero()) terms.push_back({c, exp});
    exp <<= 1;
  }
  return {L.context(), std::move(terms)};
}

// ---------------------------------------------------------------------------

FieldMatrix::FieldMatrix(const FieldContext& ctx, std::size_t rows, std::size_t cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

void FieldMatrix::set(std::size_t i, std::size_t j, const FieldElement& v) {
  if (&v.context() != ctx_) throw ContextMismatch();
  cell(i, j) = v.coords();
}

FieldElement determinant(FieldMatrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const FieldContext& ctx = m.context();
  const std::size_t k = m.rows();
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m.cell(pivot, col) == 0) ++pivot;
    if (pivot == k) return ctx.zero();
    if (pivot != col)
      for (std::size_t j = col; j < k; ++j) std::swap(m.cell(pivot, j), m.cell(col, j));

    const std::uint64_t p = m.cell(col, col);
    det = ctx.multiply(det, p);
    const std::uint64_t p_inv = ctx.invert(p);
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m.cell(r, col) == 0) continue;
      const std::uint64_t factor = ctx.multiply(m.cell(r, col), p_inv);
      for (std::size_t j = col; j < k; ++j) m.cell(r, j) ^= ctx.multiply(factor, m.cell(col, j));
    }
  }
  return ctx.element(det);
}

MooreMatrix::MooreMatrix(std::span<const FieldElement> rows, std::size_t cols)
    : matrix_([&] {
        if (rows.empty()) throw DomainError("Moore matrix needs at least one row");
        return FieldMatrix(rows.front().context(), rows.size(), cols);
      }()) {
  const FieldContext& ctx = matrix_.context();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (&rows[i].context() != &ctx) throw ContextMismatch();
    std::uint64_t power = rows[i].coords();
    for (std::size_t j = 0; j < cols; ++j) {
      matrix_.cell(i, j) = power;
      power = ctx.square(power);
    }
  }
}

FieldElement moore_determinant(std::span<const FieldElement> elems) {
  if (elems.empty()) throw DomainError("Moore determinant of an empty tuple");
  if (elems.size() > elems.front().context().degree())
    throw DomainError("Moore determinant needs k <= n elements");
  return determinant(MooreMatrix(elems).matrix());
}

LinearizedPolynomial coordinate_poly(const FieldContext& ctx, unsigned i) {
  const unsigned n = ctx.degree();
  if (i < 1 || i > n)
    throw DomainError("coordinate index " + std::to_string(i) + " outside 1.." +
                      std::to_string(n));

  // rows omega_j^(2^t) for j != i, t = 0..n-1
  FieldMatrix rest(ctx, n - 1, n);
  for (unsigned j = 1, r = 0; j <= n; ++j) {
    if (j == i) continue;
    std::uint64_t power = basis(ctx, j).coords();
    for (unsigned t = 0; t < n; ++t) {
      rest.cell(r, t) = power;
      power = ctx.square(power);
    }
    ++r;
  }
  const std::vector<FieldElement> target{basis(ctx, i)};
  const MooreMatrix target_row(target, n);

  // Expansion along the symbolic first row: the coefficient of x^(2^j) is
  // the minor obtained by deleting column j (all cofactor signs are +1).
  std::vector<FieldElement> cofactors;
  cofactors.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    FieldMatrix minor(ctx, n - 1, n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r)
      for (std::size_t c = 0, dst = 0; c < n; ++c)
        if (c != j) minor.cell(r, dst++) = rest.cell(r, c);
    cofactors.push_back(determinant(std::move(minor)));
  }

  FieldElement at_target = ctx.zero();
  for (unsigned j = 0; j < n; ++j) at_target += target_row.entry(0, j) * cofactors[j];
  if (at_target.is_zero())
    throw std::logic_error("Moore determinant of the basis vanished; field arithmetic is broken");

  const FieldElement c = inv(at_target);
  for (FieldElement& cof : cofactors) cof *= c;
  return {ctx, std::move(cofactors)};
}

// ---------------------------------------------------------------------------

CoordinateTable::CoordinateTable(const FieldContext& ctx)
    : ctx_(&ctx),
      built_(std::make_unique<std::once_flag[]>(ctx.degree())),
      entries_(ctx.degree()) {}

const CoordinateTable& CoordinateTable::for_field(const FieldContext& ctx) {
  static std::array<std::unique_ptr<const CoordinateTable>, kMaxFieldDegree + 1> cache;
  static std::mutex cache_mutex;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[ctx.degree()];
  if (!slot) slot = std::make_unique<const CoordinateTable>(ctx);
  return *slot;
}

const CoordinateTable::Entry& CoordinateTable::entry(unsigned i) const {
  if (i < 1 || i > ctx_->degree())
    throw DomainError("coordinate index " + std::to_string(i) + " outside 1.." +
                      std::to_string(ctx_->degree()));
  std::call_once(built_[i - 1], [&] {
    LinearizedPolynomial f = coordinate_poly(*ctx_, i);
    SparsePolynomial sparse = lin_to_sparse(f);
    SparsePolynomial complement = SparsePolynomial::constant(ctx_->one()) + sparse;
    entries_[i - 1].emplace(Entry{std::move(f), std::move(sparse), std::move(complement)});
  });
  return *entries_[i - 1];
}

const LinearizedPolynomial& CoordinateTable::linearized(unsigned i) const {
  return entry(i).linearized;
}
const SparsePolynomial& CoordinateTable::sparse(unsigned i) const { return entry(i).sparse; }
const SparsePolynomial& CoordinateTable::complement(unsigned i) const {
  return entry(i).complement;
}

}  // namespace sproots
