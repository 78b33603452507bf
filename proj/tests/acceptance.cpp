// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "sproots/cnf.hpp"
#include "sproots/coord_funcs.hpp"
#include "sproots/corpus.hpp"
#include "sproots/oracles.hpp"
#include "sproots/reduction.hpp"
#include "sproots/serialization.hpp"

namespace sproots {
namespace {

constexpr std::uint64_t kCorpusSeed = kDefaultSeed;
constexpr std::size_t kRandomInstances = 200;
constexpr double kCorpusTimeLimitSeconds = 300.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Handcrafted {
  const char* name;
  const char* dimacs;
  std::uint64_t models;  // worked out by hand
};

const std::vector<Handcrafted>& handcrafted_cases() {
  static const std::vector<Handcrafted> cases = {
      {"empty v=1", "p cnf 1 0\n", 2},
      {"empty v=3", "p cnf 3 0\n", 8},
      {"x1 and not x1", "p cnf 1 2\n1 0\n-1 0\n", 0},
      {"all 8 width-3 patterns", "p cnf 3 8\n1 2 3 0\n1 2 -3 0\n1 -2 3 0\n1 -2 -3 0\n"
                                 "-1 2 3 0\n-1 2 -3 0\n-1 -2 3 0\n-1 -2 -3 0\n", 0},
      {"all 4 width-2 patterns", "p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n", 0},
      {"tautology", "p cnf 2 1\n1 -1 2 0\n", 4},
      {"only tautologies", "p cnf 3 3\n1 -1 2 0\n-3 3 3 0\n2 -2 1 0\n", 8},
      {"width-1 clauses", "p cnf 3 3\n1 0\n2 0\n-3 0\n", 1},
      {"width-2 clauses", "p cnf 4 2\n1 2 0\n-3 4 0\n", 9},
      {"repeated literal", "p cnf 1 1\n1 1 1 0\n", 1},
      {"duplicate literals", "p cnf 3 2\n-2 -2 3 0\n1 1 -3 0\n", 4},
      {"repeated clause", "p cnf 2 4\n1 -2 0\n1 -2 0\n1 -2 0\n1 -2 0\n", 3},
      {"unit x1", "p cnf 1 1\n1 0\n", 1},
      {"unit not x1", "p cnf 1 1\n-1 0\n", 1},
      {"m = v units", "p cnf 4 4\n1 0\n2 0\n3 0\n4 0\n", 1},
      {"implication cycle", "p cnf 3 4\n1 2 3 0\n-1 2 0\n-2 3 0\n-3 1 0\n", 1},
      {"pigeonhole 3 into 2", "p cnf 6 9\n1 2 0\n3 4 0\n5 6 0\n-1 -3 0\n-1 -5 0\n-3 -5 0\n"
                              "-2 -4 0\n-2 -6 0\n-4 -6 0\n", 0},
      {"single model", "p cnf 3 3\n1 0\n-2 0\n3 0\n", 1},
      {"odd parity", "p cnf 3 4\n1 2 3 0\n1 -2 -3 0\n-1 2 -3 0\n-1 -2 3 0\n", 4},
      {"one clause over 10 vars", "p cnf 10 1\n1 -5 10 0\n", 896},
  };
  return cases;
}

struct CorpusRun {
  std::vector<Cnf> formulas;
  std::vector<std::string> labels;
  std::vector<std::uint64_t> models;
  std::vector<std::uint64_t> roots;
  std::vector<ReductionOutput> outputs;
  double seconds = 0;
  std::string setup_error;
};

const CorpusRun& corpus_run() {
  static const CorpusRun run = [] {
    CorpusRun r;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Cnf> random = random_corpus(kCorpusSeed, kRandomInstances);
    for (std::size_t k = 0; k < random.size(); ++k) {
      r.formulas.push_back(random[k]);
      r.labels.push_back("random #" + std::to_string(k));
    }
    for (const Handcrafted& h : handcrafted_cases()) {
      const Cnf cnf = parse_dimacs(h.dimacs);
      if (count_sat_bruteforce(cnf) != h.models)
        r.setup_error += std::string(" hand count wrong for '") + h.name + "'";
      r.formulas.push_back(cnf);
      r.labels.push_back(h.name);
    }
    for (const Cnf& cnf : r.formulas) {
      r.outputs.push_back(reduce(cnf));
      r.models.push_back(count_sat_bruteforce(cnf));
      r.roots.push_back(count_roots_bruteforce(r.outputs.back().poly));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }();
  return run;
}

Outcome count_preservation() {
  const CorpusRun& run = corpus_run();
  Outcome o;
  std::size_t agree = 0;
  std::string first_failure;
  for (std::size_t k = 0; k < run.formulas.size(); ++k) {
    if (run.models[k] == run.roots[k]) ++agree;
    else if (first_failure.empty())
      first_failure = " first mismatch: " + run.labels[k] + " models=" +
                      std::to_string(run.models[k]) + " roots=" + std::to_string(run.roots[k]);
  }
  o.pass = agree == run.formulas.size() && run.formulas.size() == kRandomInstances + 20 &&
           run.seconds < kCorpusTimeLimitSeconds && run.setup_error.empty();
  std::ostringstream d;
  d << agree << "/" << run.formulas.size() << " exact, " << run.seconds << " s (limit "
    << kCorpusTimeLimitSeconds << " s)" << first_failure << run.setup_error;
  o.detail = d.str();
  return o;
}

Outcome parity_preservation() {
  const CorpusRun& run = corpus_run();
  std::size_t agree = 0;
  for (std::size_t k = 0; k < run.formulas.size(); ++k)
    if (run.models[k] % 2 == run.roots[k] % 2) ++agree;
  return {agree == run.formulas.size() && run.formulas.size() == kRandomInstances + 20,
          std::to_string(agree) + "/" + std::to_string(run.formulas.size()) + " parities agree"};
}

Outcome lemma_suite() {
  CorpusRng rng(kCorpusSeed + 3);
  std::size_t failures = 0;
  std::size_t tuples = 0;
  for (unsigned n = 2; n <= 14; ++n) {
    const FieldContext& ctx = FieldContext::get(n);
    for (int t = 0; t < 50; ++t) {
      const std::size_t k = rng.between(1, n);
      std::vector<FieldElement> elems;
      do {
        elems.clear();
        for (std::size_t i = 0; i < k; ++i) elems.push_back(rng.element(ctx));
      } while (f2_rank(elems) != k);
      ++tuples;
      if (moore_determinant(elems).is_zero()) ++failures;
    }
    for (int t = 0; t < 50; ++t) {
      // a random F_2-combination of the other entries, placed at a random position
      const std::size_t k = rng.between(1, n);
      std::vector<FieldElement> elems;
      for (std::size_t i = 0; i + 1 < k; ++i) elems.push_back(rng.element(ctx));
      FieldElement combo = ctx.zero();
      for (const FieldElement& e : elems)
        if (rng.coin()) combo += e;
      elems.insert(elems.begin() + static_cast<std::ptrdiff_t>(rng.below(k)), combo);
      ++tuples;
      if (f2_rank(elems) == k || !moore_determinant(elems).is_zero()) ++failures;
    }
  }
  std::size_t mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const FieldContext& ctx = FieldContext::get(static_cast<unsigned>(rng.between(5, 16)));
    const std::size_t k = rng.between(1, 5);
    std::vector<FieldElement> elems;
    for (std::size_t i = 0; i < k; ++i) elems.push_back(rng.element(ctx));
    if (moore_determinant(elems) != moore_determinant_oracle(elems)) ++mismatches;
  }
  return {failures == 0 && mismatches == 0,
          std::to_string(tuples) + " tuples, " + std::to_string(failures) +
              " wrong zero/nonzero; elimination vs cofactor: " + std::to_string(100 - mismatches) +
              "/100 agree"};
}

Outcome coordinate_suite() {
  std::uint64_t evaluations = 0;
  std::uint64_t wrong = 0;
  for (unsigned n = 1; n <= 10; ++n) {
    const FieldContext& ctx = FieldContext::get(n);
    const CoordinateTable& table = CoordinateTable::for_field(ctx);
    for (unsigned i = 1; i <= n; ++i)
      for (std::uint64_t x = 0; x <= ctx.mask(); ++x) {
        ++evaluations;
        if (eval_linearized(table.linearized(i), ctx.element(x)).coords() != ((x >> (i - 1)) & 1u))
          ++wrong;
      }
  }
  std::size_t polys = 0;
  std::size_t differ = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    const FieldContext& ctx = FieldContext::get(n);
    for (unsigned i = 1; i <= n; ++i) {
      ++polys;
      if (coordinate_poly(ctx, i) != coordinate_poly_oracle(ctx, i)) ++differ;
    }
  }
  return {wrong == 0 && differ == 0,
          std::to_string(evaluations - wrong) + "/" + std::to_string(evaluations) +
              " evaluations exact; " + std::to_string(polys - differ) + "/" +
              std::to_string(polys) + " coordinate polynomials match the linear-system oracle"};
}

Outcome size_bounds() {
  const CorpusRun& run = corpus_run();
  std::size_t within = 0;
  for (std::size_t k = 0; k < run.formulas.size(); ++k) {
    const PaddedCnf padded = pad(run.formulas[k]);
    const std::uint64_t n = padded.total_vars();
    const std::uint64_t constraints = padded.constraint_count();
    const std::uint64_t cube = (n + 1) * (n + 1) * (n + 1);
    const std::uint64_t max_exp_bits = bit_length(BigUint(3) << (n - 1));
    const ReductionOutput& out = run.outputs[k];
    const bool terms_ok = out.poly.size() <= constraints * cube;
    const bool bits_ok = bit_size(out.poly) <= 2 * constraints * cube * (n + max_exp_bits);
    if (terms_ok && bits_ok) ++within;
  }
  return {within == run.formulas.size(),
          std::to_string(within) + "/" + std::to_string(run.formulas.size()) +
              " within term-count and bit-size bounds"};
}

Outcome field_core() {
  CorpusRng rng(kCorpusSeed + 6);
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  auto expect = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };
  for (unsigned n = 1; n <= 16; ++n) {
    const FieldContext& ctx = FieldContext::get(n);
    for (int t = 0; t < 10000; ++t) {
      const FieldElement a = rng.element(ctx);
      const FieldElement b = rng.element(ctx);
      const FieldElement c = rng.element(ctx);
      expect((a + b) + c == a + (b + c));
      expect((a * b) * c == a * (b * c));
      expect(a + b == b + a);
      expect(a * b == b * a);
      expect(a * (b + c) == a * b + a * c);
      expect(a + ctx.zero() == a && a * ctx.one() == a && (a + a).is_zero());
      if (!a.is_zero()) expect((a * inv(a)).is_one());
    }
    for (int t = 0; t < 200; ++t) {
      const FieldElement a = rng.element(ctx);
      const FieldElement b = rng.element(ctx);
      for (unsigned j = 0; j <= n; ++j)
        expect(frobenius_iter(a + b, j) == frobenius_iter(a, j) + frobenius_iter(b, j));
      const FieldElement nz = rng.nonzero_element(ctx);
      const std::uint64_t e = rng.below(std::uint64_t{1} << (2 * n));
      expect(pow(nz, BigUint(e)) == pow(nz, e % ctx.mask()));
    }
  }
  for (unsigned n = 1; n <= kMaxFieldDegree; ++n) {
    const Gf2Poly first = find_irreducible(n);
    expect(first == find_irreducible(n) && is_irreducible(first));
  }
  return {failures == 0, std::to_string(checks - failures) + "/" + std::to_string(checks) +
                             " axiom, Frobenius, exponent and determinism checks"};
}

struct CliCall {
  int code;
  std::string out;
};

CliCall cli_call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str()};
}

Outcome cli_contract() {
  std::vector<std::string> failed;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };

  // reduce -> count-roots round trip, and serialize(parse(x)) == x
  std::size_t round_trips = 0;
  const CorpusRun& run = corpus_run();
  for (std::size_t k = 0; k < run.formulas.size(); k += 11) {
    const CliCall reduced = cli_call({"reduce"}, to_dimacs(run.formulas[k]));
    const CliCall counted = cli_call({"count-roots"}, reduced.out);
    const bool ok = reduced.code == cli::kSuccess && counted.code == cli::kSuccess &&
                    counted.out == std::to_string(run.models[k]) + "\n" &&
                    reduction_to_json(reduction_from_json(reduced.out)) == reduced.out;
    expect(ok, "round trip " + run.labels[k]);
    ++round_trips;
  }

  expect(cli_call({"gen-field", "-n", "2"}).out == field_to_json(FieldContext::get(2)),
         "gen-field output");
  expect(cli_call({"gen-field", "-n", "0"}).code == cli::kUsageError, "gen-field n=0 exit 1");
  expect(cli_call({"count-sat"}, "p cnf 2 1\n1 2 -1 2 0\n").code == cli::kUsageError,
         "parse error exit 1");
  expect(cli_call({"verify", "-"}, "p cnf 3 1\n1 2 3 0\n").code == cli::kSuccess, "verify exit 0");

  const FieldContext& f17 = FieldContext::get(17);
  expect(cli_call({"count-roots"}, poly_to_json(SparsePolynomial::variable(f17))).code ==
             cli::kGuardExceeded,
         "count-roots n=17 exit 2");
  expect(cli_call({"verify", "-"}, "p cnf 17 1\n1 0\n").code == cli::kGuardExceeded,
         "verify n=17 exit 2");
  expect(cli_call({"count-sat"}, "p cnf 25 0\n").code == cli::kGuardExceeded,
         "count-sat v=25 exit 2");

  // A genuine reduction output with one coefficient altered.
  const std::string dimacs = "p cnf 3 2\n1 -2 3 0\n-1 2 0\n";
  ReductionOutput fixture = reduce(parse_dimacs(dimacs));
  std::vector<Term> terms(fixture.poly.terms().begin(), fixture.poly.terms().end());
  terms.front().coeff += fixture.field().element(1);
  fixture.poly = SparsePolynomial(fixture.field(), std::move(terms));
  const auto dir = std::filesystem::temp_directory_path();
  const auto cnf_path = dir / "sproots_acceptance.cnf";
  const auto poly_path = dir / "sproots_acceptance_corrupted.json";
  std::ofstream(cnf_path) << dimacs;
  std::ofstream(poly_path) << reduction_to_json(fixture);
  expect(cli_call({"verify", cnf_path.string(), "--poly", poly_path.string()}).code ==
             cli::kVerificationMismatch,
         "corrupted fixture exit 3");
  std::filesystem::remove(cnf_path);
  std::filesystem::remove(poly_path);

  std::string detail = std::to_string(round_trips) + " round trips, exit codes 0/1/2/3 checked";
  for (const std::string& f : failed) detail += "; FAILED " + f;
  return {failed.empty(), detail};
}

}  // namespace
}  // namespace sproots

int main() {
  using sproots::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"AC1 count preservation", sproots::count_preservation},
      {"AC2 parity preservation", sproots::parity_preservation},
      {"AC3 Moore determinant lemma", sproots::lemma_suite},
      {"AC4 coordinate polynomials", sproots::coordinate_suite},
      {"AC5 output size bounds", sproots::size_bounds},
      {"AC6 field core properties", sproots::field_core},
      {"AC7 CLI round trip and exit codes", sproots::cli_contract},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << o.detail << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
