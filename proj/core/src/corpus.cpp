#include "sproots/corpus.hpp"

#include <algorithm>

namespace sproots {

std::uint64_t CorpusRng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r;
  do r = next();
  while (r >= limit);
  return r % bound;
}

FieldElement CorpusRng::nonzero_element(const FieldContext& ctx) {
  for (;;) {
    const std::uint64_t v = next() & ctx.mask();
    if (v != 0) return ctx.element(v);
  }
}

Cnf random_3cnf(CorpusRng& rng, unsigned num_vars, std::size_t num_clauses) {
  if (num_vars < 1) throw DomainError("random CNF needs at least one variable");
  Cnf cnf{num_vars, {}};
  const unsigned width = std::min(3u, num_vars);
  std::vector<unsigned> vars(num_vars);
  for (std::size_t k = 0; k < num_clauses; ++k) {
    for (unsigned v = 0; v < num_vars; ++v) vars[v] = v + 1;
    Clause clause;
    // partial Fisher-Yates picks `width` distinct variables
    for (unsigned j = 0; j < width; ++j) {
      const auto pick = j + static_cast<unsigned>(rng.below(num_vars - j));
      std::swap(vars[j], vars[pick]);
      clause.push_back({vars[j], rng.coin()});
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

std::vector<Cnf> random_corpus(std::uint64_t seed, std::size_t count) {
  CorpusRng rng(seed);
  std::vector<Cnf> corpus;
  corpus.reserve(count);
  while (corpus.size() < count) {
    const auto v = static_cast<unsigned>(rng.between(3, 10));
    const auto m = static_cast<std::size_t>(rng.between(1, 10));
    const std::size_t total = v + 2 * (m > v ? m - v : 0);
    if (total > 12) continue;
    corpus.push_back(random_3cnf(rng, v, m));
  }
  return corpus;
}

}  // namespace sproots
