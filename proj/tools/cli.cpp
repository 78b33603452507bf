#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sproots/cnf.hpp"
#include "sproots/corpus.hpp"
#include "sproots/oracles.hpp"
#include "sproots/reduction.hpp"
#include "sproots/serialization.hpp"

namespace sproots::cli {

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
}

struct Options {
  unsigned field_degree = 0;
  std::string input;
  std::string out_path;
  std::string poly_path;
  std::uint64_t seed = kDefaultSeed;
};

int cmd_gen_field(const Options& opt, std::ostream& out) {
  out << field_to_json(FieldContext::get(opt.field_degree));
  return kSuccess;
}

int cmd_reduce(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const Cnf cnf = parse_dimacs(read_input(opt.input, in));
  const ReductionOutput result = reduce(cnf);
  write_output(opt.out_path, reduction_to_json(result), out);
  err << "n=" << result.field().degree() << " s=" << result.provenance.s
      << " terms=" << result.poly.size() << " bit_size=" << bit_size(result.poly) << '\n';
  return kSuccess;
}

int cmd_count_roots(const Options& opt, std::istream& in, std::ostream& out) {
  const SparsePolynomial p = any_poly_from_json(read_input(opt.input, in));
  out << count_roots_bruteforce(p) << '\n';
  return kSuccess;
}

int cmd_count_sat(const Options& opt, std::istream& in, std::ostream& out) {
  const Cnf cnf = parse_dimacs(read_input(opt.input, in));
  out << count_sat_bruteforce(cnf) << '\n';
  return kSuccess;
}

int cmd_verify(const Options& opt, std::istream& in, std::ostream& out) {
  Cnf cnf;
  if (opt.input.empty()) {
    cnf = random_corpus(opt.seed, 1).front();
    out << "random instance (seed " << opt.seed << "):\n" << to_dimacs(cnf);
  } else {
    cnf = parse_dimacs(read_input(opt.input, in));
  }
  cnf.validate();

  const PaddedCnf padded = pad(cnf);
  if (padded.total_vars() > kMaxRootEnumerationDegree)
    throw GuardExceeded("verification over padded variables", padded.total_vars(),
                        kMaxRootEnumerationDegree);

  const SparsePolynomial poly = opt.poly_path.empty()
                                    ? reduce(cnf).poly
                                    : any_poly_from_json(read_input(opt.poly_path, in));
  const std::uint64_t models = count_sat_bruteforce(cnf);
  const std::uint64_t roots = count_roots_bruteforce(poly);
  const bool equal = models == roots;
  const bool parity = (models % 2) == (roots % 2);

  out << "n=" << poly.context().degree() << " s=" << padded.s << " terms=" << poly.size() << '\n';
  out << "models=" << models << " roots=" << roots << ' ' << (equal ? "PASS" : "FAIL") << '\n';
  out << (parity ? "models≡roots (mod 2)" : "models≢roots (mod 2)") << ' '
      << (parity ? "PASS" : "FAIL") << '\n';
  return equal && parity ? kSuccess : kVerificationMismatch;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Counting roots of sparse polynomials over F_2^n and the #3SAT reduction"};
  app.name("sproots");
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("gen-field", "Print the canonical field F_2^n as JSON");
  gen->add_option("-n", opt.field_degree, "Extension degree")
      ->required()
      ->check(CLI::Range(1u, kMaxFieldDegree));

  auto* red = app.add_subcommand("reduce", "Reduce a DIMACS 3-CNF to one sparse polynomial");
  red->add_option("file", opt.input, "DIMACS file (default: stdin)");
  red->add_option("--out", opt.out_path, "Output JSON path (default: stdout)");

  auto* roots = app.add_subcommand("count-roots", "Count roots of a polynomial by enumeration");
  roots->add_option("file", opt.input, "Polynomial or reduction JSON (default: stdin)");

  auto* sat = app.add_subcommand("count-sat", "Count models of a DIMACS CNF by enumeration");
  sat->add_option("file", opt.input, "DIMACS file (default: stdin)");

  auto* ver = app.add_subcommand("verify", "Check that the reduction preserves the model count");
  ver->add_option("file", opt.input, "DIMACS file (default: a random instance from --seed)");
  ver->add_option("--poly", opt.poly_path, "Check this polynomial JSON instead of reducing");
  ver->add_option("--seed", opt.seed, "Seed for the random instance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gen) return cmd_gen_field(opt, out);
    if (*red) return cmd_reduce(opt, in, out, err);
    if (*roots) return cmd_count_roots(opt, in, out);
    if (*sat) return cmd_count_sat(opt, in, out);
    if (*ver) return cmd_verify(opt, in, out);
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sproots::cli
