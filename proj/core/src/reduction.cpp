#include "sproots/reduction.hpp"

#include <utility>

namespace sproots {

namespace {

void check_coordinate(const CoordinateTable& table, unsigned var) {
  if (var < 1 || var > table.context().degree())
    throw DomainError("variable " + std::to_string(var) + " has no coordinate in F_2^" +
                      std::to_string(table.context().degree()));
}

std::string clause_formula(const Clause& clause) {
  std::string out;
  for (const Literal& l : clause) {
    if (!out.empty()) out += '*';
    out += l.negated ? "f" + std::to_string(l.var) : "(1+f" + std::to_string(l.var) + ")";
  }
  return out;
}

std::string pair_formula(DummyPair p) {
  return "1+f" + std::to_string(p.first) + "*f" + std::to_string(p.second);
}

}  // namespace

SparsePolynomial clause_to_poly(const CoordinateTable& table, const Clause& clause) {
  SparsePolynomial product = SparsePolynomial::constant(table.context().one());
  for (const Literal& l : clause) {
    check_coordinate(table, l.var);
    product = product * (l.negated ? table.sparse(l.var) : table.complement(l.var));
  }
  return product;
}

SparsePolynomial dummy_pair_to_poly(const CoordinateTable& table, DummyPair pair) {
  check_coordinate(table, pair.first);
  check_coordinate(table, pair.second);
  const FieldContext& ctx = table.context();
  return SparsePolynomial::constant(ctx.one()) +
         table.sparse(pair.first) * table.sparse(pair.second);
}

SparsePolynomial combine(const FieldContext& ctx, std::span<const SparsePolynomial> polys) {
  if (polys.size() > ctx.degree())
    throw DomainError("cannot combine " + std::to_string(polys.size()) +
                      " constraints in F_2^" + std::to_string(ctx.degree()) + "; pad first");
  SparsePolynomial sum(ctx);
  for (std::size_t k = 0; k < polys.size(); ++k)
    sum = sum + scale(polys[k], basis(ctx, static_cast<unsigned>(k + 1)));
  return sum;
}

std::vector<SparsePolynomial> constraint_polys(const PaddedCnf& padded,
                                               const CoordinateTable& table) {
  std::vector<SparsePolynomial> polys;
  polys.reserve(padded.constraint_count());
  for (const Clause& c : padded.base.clauses) polys.push_back(clause_to_poly(table, c));
  for (unsigned k = 0; k < padded.s; ++k)
    polys.push_back(dummy_pair_to_poly(table, padded.dummy_pair(k)));
  return polys;
}

ReductionOutput reduce(const Cnf& cnf) {
  cnf.validate();
  const PaddedCnf padded = pad(cnf);
  if (padded.total_vars() > kMaxFieldDegree)
    throw DomainError("reduction needs F_2^" + std::to_string(padded.total_vars()) +
                      "; supported degrees are 1.." + std::to_string(kMaxFieldDegree));

  const FieldContext& ctx = FieldContext::get(padded.total_vars());
  const CoordinateTable& table = CoordinateTable::for_field(ctx);
  const std::vector<SparsePolynomial> polys = constraint_polys(padded, table);

  Provenance prov;
  prov.s = padded.s;
  for (unsigned v = 1; v <= cnf.num_vars; ++v)
    prov.var_map.push_back({v, VarMapEntry::Kind::kOriginal, v});
  for (unsigned k = 0; k < padded.s; ++k) {
    const DummyPair p = padded.dummy_pair(k);
    prov.var_map.push_back({p.first, VarMapEntry::Kind::kDummy, k + 1});
    prov.var_map.push_back({p.second, VarMapEntry::Kind::kDummy, k + 1});
  }
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto omega = static_cast<unsigned>(k + 1);
    if (k < cnf.clauses.size()) {
      prov.clause_terms.push_back({ConstraintRecord::Kind::kClause, k + 1, omega,
                                   clause_formula(cnf.clauses[k]), polys[k].size()});
    } else {
      const auto pair = static_cast<unsigned>(k - cnf.clauses.size());
      prov.clause_terms.push_back({ConstraintRecord::Kind::kDummyPair, pair + 1, omega,
                                   pair_formula(padded.dummy_pair(pair)), polys[k].size()});
    }
  }
  return {combine(ctx, polys), std::move(prov)};
}

}  // namespace sproots
