#include "sproots/oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace sproots {

std::uint64_t count_sat_bruteforce(const Cnf& cnf) {
  if (cnf.num_vars > kMaxSatEnumerationVars)
    throw GuardExceeded("model count over variables", cnf.num_vars, kMaxSatEnumerationVars);
  cnf.validate();
  std::uint64_t count = 0;
  const std::uint64_t end = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t a = 0; a < end; ++a)
    if (satisfies(cnf, a)) ++count;
  return count;
}

std::uint64_t count_sat_bruteforce(const PaddedCnf& padded) {
  if (padded.total_vars() > kMaxSatEnumerationVars)
    throw GuardExceeded("model count over variables", padded.total_vars(),
                        kMaxSatEnumerationVars);
  padded.base.validate();
  std::uint64_t count = 0;
  const std::uint64_t end = std::uint64_t{1} << padded.total_vars();
  for (std::uint64_t a = 0; a < end; ++a)
    if (padded.satisfies(a)) ++count;
  return count;
}

std::uint64_t count_roots_bruteforce(const SparsePolynomial& p) {
  const unsigned n = p.context().degree();
  if (n > kMaxRootEnumerationDegree)
    throw GuardExceeded("root count over field degree", n, kMaxRootEnumerationDegree);
  const PreparedPolynomial prepared(p);
  const std::uint64_t size = std::uint64_t{1} << n;

  auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t roots = 0;
    for (std::uint64_t x = begin; x < end; ++x)
      if (prepared.evaluate_coords(x) == 0) ++roots;
    return roots;
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = n >= 12 ? std::min(hw, 16u) : 1u;
  if (workers == 1) return count_range(0, size);

  std::vector<std::uint64_t> partial(workers, 0);
  {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = (size + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(size, w * chunk);
      const std::uint64_t end = std::min(size, begin + chunk);
      threads.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
    }
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

LinearizedPolynomial coordinate_poly_oracle(const FieldContext& ctx, unsigned i) {
  const unsigned n = ctx.degree();
  if (i < 1 || i > n) throw DomainError("coordinate index out of range");

  // Row l: sum_j c_j omega_l^(2^j) = [l == i]
  std::vector<std::vector<FieldElement>> aug(n, std::vector<FieldElement>(n + 1, ctx.zero()));
  for (unsigned l = 0; l < n; ++l) {
    FieldElement power = basis(ctx, l + 1);
    for (unsigned j = 0; j < n; ++j) {
      aug[l][j] = power;
      power = power * power;
    }
    aug[l][n] = (l + 1 == i) ? ctx.one() : ctx.zero();
  }

  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == n)
      throw std::logic_error("interpolation system is singular; field arithmetic is broken");
    std::swap(aug[pivot], aug[col]);
    const FieldElement scale_by = inv(aug[col][col]);
    for (FieldElement& v : aug[col]) v = v * scale_by;
    for (unsigned r = 0; r < n; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      const FieldElement factor = aug[r][col];
      for (unsigned j = col; j <= n; ++j) aug[r][j] = aug[r][j] + factor * aug[col][j];
    }
  }

  std::vector<FieldElement> coeffs;
  coeffs.reserve(n);
  for (unsigned j = 0; j < n; ++j) coeffs.push_back(aug[j][n]);
  return {ctx, std::move(coeffs)};
}

namespace {

// Laplace expansion along the first remaining row; columns still available
// are flagged in `used`.
FieldElement cofactor_det(const std::vector<std::vector<FieldElement>>& m, std::size_t row,
                          std::vector<bool>& used) {
  const std::size_t k = m.size();
  if (row == k) return m.front().front().context().one();
  FieldElement sum = m.front().front().context().zero();
  for (std::size_t col = 0; col < k; ++col) {
    if (used[col] || m[row][col].is_zero()) continue;
    used[col] = true;
    sum = sum + m[row][col] * cofactor_det(m, row + 1, used);
    used[col] = false;
  }
  return sum;
}

}  // namespace

FieldElement moore_determinant_oracle(std::span<const FieldElement> elems) {
  if (elems.empty()) throw DomainError("Moore determinant of an empty tuple");
  if (elems.size() > kMaxCofactorOracleSize)
    throw GuardExceeded("cofactor determinant size", static_cast<unsigned>(elems.size()),
                        static_cast<unsigned>(kMaxCofactorOracleSize));
  const std::size_t k = elems.size();
  std::vector<std::vector<FieldElement>> m;
  for (const FieldElement& a : elems) {
    if (&a.context() != &elems.front().context()) throw ContextMismatch();
    std::vector<FieldElement> row;
    FieldElement power = a;
    for (std::size_t j = 0; j < k; ++j) {
      row.push_back(power);
      power = power * power;
    }
    m.push_back(std::move(row));
  }
  std::vector<bool> used(k, false);
  return cofactor_det(m, 0, used);
}

std::size_t f2_rank(std::span<const FieldElement> elems) {
  std::vector<std::uint64_t> rows;
  for (const FieldElement& a : elems) rows.push_back(a.coords());
  std::size_t rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [&](std::uint64_t r) { return (r & mask) != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

}  // namespace sproots
