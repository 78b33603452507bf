#pragma once

// Seeded random formulas and field elements for tests and the CLI.

#include <cstdint>
#include <random>
#include <vector>

#include "sproots/cnf.hpp"
#include "sproots/gf2n.hpp"

namespace sproots {

inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// mt19937_64 with unbiased bounded draws. The sequence depends only on the
/// seed, not on the standard library's distribution implementations.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() & 1u) != 0; }

  FieldElement element(const FieldContext& ctx) { return ctx.element(next() & ctx.mask()); }
  FieldElement nonzero_element(const FieldContext& ctx);

 private:
  std::mt19937_64 engine_;
};

/// m clauses of width min(3, v) over distinct variables with random signs.
Cnf random_3cnf(CorpusRng& rng, unsigned num_vars, std::size_t num_clauses);

/// `count` random 3-CNFs with v in 3..10, m in 1..10 and v + 2 max(0, m-v) <= 12.
std::vector<Cnf> random_corpus(std::uint64_t seed, std::size_t count);

}  // namespace sproots
