#include "sproots/serialization.hpp"

#include <json.hpp>

namespace sproots {

namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object()) throw FormatError(std::string("expected an object holding '") + key + "'");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing member '") + key + "'");
  return *it;
}

std::string string_member(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_string()) throw FormatError(std::string("member '") + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t uint_member(const Json& obj, const char* key) {
  const Json& v = member(obj, key);
  if (!v.is_number_unsigned())
    throw FormatError(std::string("member '") + key + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

Json field_json(const FieldContext& ctx) {
  Json j;
  j["n"] = ctx.degree();
  j["modulus_hex"] = gf2x::to_hex(ctx.modulus(), (ctx.degree() + 4) / 4);
  return j;
}

const FieldContext& field_of(const Json& j) {
  const std::uint64_t n = uint_member(j, "n");
  if (n < 1 || n > kMaxFieldDegree)
    throw FormatError("field degree " + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxFieldDegree));
  const FieldContext& ctx = FieldContext::get(static_cast<unsigned>(n));
  if (gf2x::from_hex(string_member(j, "modulus_hex")) != ctx.modulus())
    throw FormatError("modulus is not the canonical irreducible polynomial 0x" +
                      gf2x::to_hex(ctx.modulus()) + " for n=" + std::to_string(n));
  return ctx;
}

Json poly_json(const SparsePolynomial& p) {
  Json j;
  j["field"] = field_json(p.context());
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json term;
    term["coeff_hex"] = t.coeff.to_hex();
    term["exp"] = t.exp.str();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

BigUint parse_exponent(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw FormatError("exponent '" + s + "' is not a nonnegative decimal integer");
  return BigUint(s);
}

SparsePolynomial poly_of(const Json& j) {
  const FieldContext& ctx = field_of(member(j, "field"));
  const Json& terms = member(j, "terms");
  if (!terms.is_array()) throw FormatError("'terms' must be an array");
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Json& t : terms)
    out.push_back({element_from_hex(ctx, string_member(t, "coeff_hex")),
                   parse_exponent(string_member(t, "exp"))});
  return {ctx, std::move(out)};
}

const char* kind_name(VarMapEntry::Kind k) {
  return k == VarMapEntry::Kind::kOriginal ? "original" : "dummy";
}

const char* kind_name(ConstraintRecord::Kind k) {
  return k == ConstraintRecord::Kind::kClause ? "clause" : "dummy_pair";
}

}  // namespace

std::string field_to_json(const FieldContext& ctx) { return field_json(ctx).dump(2) + "\n"; }

const FieldContext& field_from_json(std::string_view text) { return field_of(parse(text)); }

std::string poly_to_json(const SparsePolynomial& p) { return poly_json(p).dump(2) + "\n"; }

SparsePolynomial poly_from_json(std::string_view text) { return poly_of(parse(text)); }

std::string reduction_to_json(const ReductionOutput& out) {
  Json j;
  j["field"] = field_json(out.field());
  j["poly"] = poly_json(out.poly);
  Json prov;
  prov["s"] = out.provenance.s;
  Json vars = Json::array();
  for (const VarMapEntry& v : out.provenance.var_map)
    vars.push_back({{"coordinate", v.coordinate}, {"kind", kind_name(v.kind)}, {"source", v.source}});
  prov["var_map"] = std::move(vars);
  Json constraints = Json::array();
  for (const ConstraintRecord& c : out.provenance.clause_terms)
    constraints.push_back({{"kind", kind_name(c.kind)},
                           {"source", c.source},
                           {"omega", c.omega},
                           {"formula", c.formula},
                           {"terms", c.terms}});
  prov["clause_terms"] = std::move(constraints);
  j["provenance"] = std::move(prov);
  return j.dump(2) + "\n";
}

ReductionOutput reduction_from_json(std::string_view text) {
  const Json j = parse(text);
  const FieldContext& field = field_of(member(j, "field"));
  SparsePolynomial poly = poly_of(member(j, "poly"));
  if (&poly.context() != &field) throw FormatError("'field' and 'poly.field' disagree");

  const Json& pj = member(j, "provenance");
  Provenance prov;
  prov.s = static_cast<unsigned>(uint_member(pj, "s"));
  const Json& vars = member(pj, "var_map");
  if (!vars.is_array()) throw FormatError("'var_map' must be an array");
  for (const Json& v : vars) {
    const std::string kind = string_member(v, "kind");
    if (kind != "original" && kind != "dummy")
      throw FormatError("unknown var_map kind '" + kind + "'");
    prov.var_map.push_back({static_cast<unsigned>(uint_member(v, "coordinate")),
                            kind == "original" ? VarMapEntry::Kind::kOriginal
                                               : VarMapEntry::Kind::kDummy,
                            static_cast<unsigned>(uint_member(v, "source"))});
  }
  const Json& constraints = member(pj, "clause_terms");
  if (!constraints.is_array()) throw FormatError("'clause_terms' must be an array");
  for (const Json& c : constraints) {
    const std::string kind = string_member(c, "kind");
    if (kind != "clause" && kind != "dummy_pair")
      throw FormatError("unknown clause_terms kind '" + kind + "'");
    prov.clause_terms.push_back({kind == "clause" ? ConstraintRecord::Kind::kClause
                                                  : ConstraintRecord::Kind::kDummyPair,
                                 static_cast<std::size_t>(uint_member(c, "source")),
                                 static_cast<unsigned>(uint_member(c, "omega")),
                                 string_member(c, "formula"),
                                 static_cast<std::size_t>(uint_member(c, "terms"))});
  }
  return {std::move(poly), std::move(prov)};
}

SparsePolynomial any_poly_from_json(std::string_view text) {
  const Json j = parse(text);
  if (j.is_object() && j.contains("poly")) return poly_of(member(j, "poly"));
  return poly_of(j);
}

}  // namespace sproots
