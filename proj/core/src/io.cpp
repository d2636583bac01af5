#include "nilgen/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "nilgen/errors.hpp"

namespace nilgen {

using nlohmann::json;

namespace {

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(static_cast<int>(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json type_json(const TypeSymbol& t) { return json::array({t.factors, json::array({t.center_dim})}); }

json algebra_json(const NilAlgebra& L) {
  const int n = L.dim();
  json defs = json::object();
  for (int k = 0; k < n; ++k)
    if (const auto& d = L.definitions()[k]) defs[std::to_string(k + 1)] = {d->left + 1, d->right + 1};
  json brackets = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& t = L.table().terms(i, j);
      if (t.empty()) continue;
      json terms = json::array();
      for (const Term& x : t) terms.push_back({x.index + 1, static_cast<int>(x.coeff)});
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"terms", std::move(terms)}});
    }
  return {{"p", L.p()}, {"dim", n}, {"weights", L.weights()}, {"definitions", std::move(defs)},
          {"brackets", std::move(brackets)}};
}

const json& require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field", path + key);
  return *it;
}

int as_int(const json& v, const std::string& field, long long lo, long long hi) {
  if (!v.is_number_integer()) throw ParseError("expected an integer", field);
  long long x = v.get<long long>();
  if (x < lo || x > hi)
    throw ParseError("value " + std::to_string(x) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                     field);
  return static_cast<int>(x);
}

ParsedAlgebra algebra_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError("expected an object", path.empty() ? "algebra" : path);
  const int p = as_int(require(j, "p", path), path + "p", 2, kMaxPrime);
  if (!is_prime(p)) throw ParseError("not a prime", path + "p");
  const int n = as_int(require(j, "dim", path), path + "dim", 1, 255);

  LieTable table(p, n);
  const json& br = require(j, "brackets", path);
  if (!br.is_array()) throw ParseError("expected an array", path + "brackets");
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  for (std::size_t e = 0; e < br.size(); ++e) {
    const std::string f = path + "brackets[" + std::to_string(e) + "]";
    const json& b = br[e];
    if (!b.is_object()) throw ParseError("expected an object", f);
    int i = as_int(require(b, "i", f + "."), f + ".i", 1, n) - 1;
    int k = as_int(require(b, "j", f + "."), f + ".j", 1, n) - 1;
    if (i == k) throw ParseError("bracket of an element with itself", f);
    int lo = std::min(i, k), hi = std::max(i, k);
    if (seen[lo * n + hi]) throw ParseError("pair given twice", f);
    seen[lo * n + hi] = true;
    const json& terms = require(b, "terms", f + ".");
    if (!terms.is_array()) throw ParseError("expected an array", f + ".terms");
    Vec v(n, 0);
    const Field& F = Field::get(p);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tf = f + ".terms[" + std::to_string(t) + "]";
      if (!terms[t].is_array() || terms[t].size() != 2) throw ParseError("expected [index, coefficient]", tf);
      int idx = as_int(terms[t][0], tf, 1, n) - 1;
      int c = as_int(terms[t][1], tf, 0, p - 1);
      v[idx] = F.add(v[idx], static_cast<Elem>(c));
    }
    table.set(i, k, std::span<const Elem>(v));
  }

  const bool has_w = j.contains("weights"), has_d = j.contains("definitions");
  if (!has_w) {
    if (has_d) throw ParseError("definitions given without weights", path + "weights");
    try {
      Normalized nz = normalize(table);
      return {std::move(nz.algebra), std::move(nz.basis_change)};
    } catch (const JacobiFailure& e) {
      throw ParseError(e.what(), path + "brackets");
    } catch (const NotNilpotent& e) {
      throw ParseError(e.what(), path + "brackets");
    }
  }
  const json& wj = j["weights"];
  if (!wj.is_array() || static_cast<int>(wj.size()) != n) throw ParseError("expected dim integers", path + "weights");
  std::vector<int> weights;
  for (std::size_t k = 0; k < wj.size(); ++k)
    weights.push_back(as_int(wj[k], path + "weights[" + std::to_string(k) + "]", 1, n));
  std::vector<std::optional<Definition>> defs(n);
  if (has_d) {
    const json& dj = j["definitions"];
    if (!dj.is_object()) throw ParseError("expected an object", path + "definitions");
    for (const auto& [key, val] : dj.items()) {
      const std::string f = path + "definitions." + key;
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError("key is not an index", f);
      }
      if (k < 1 || k > n) throw ParseError("index out of range", f);
      if (!val.is_array() || val.size() != 2) throw ParseError("expected [left, right]", f);
      defs[k - 1] = Definition{as_int(val[0], f, 1, n) - 1, as_int(val[1], f, 1, n) - 1};
    }
  }
  NilAlgebra L(std::move(table), std::move(weights), std::move(defs));
  if (ValidationReport r = validate(L); !r) {
    std::string field = r.kind == "jacobi" || r.kind == "grading" || r.kind == "lcs" ? "brackets"
                        : r.kind == "definition"                                     ? "definitions"
                                                                                     : "weights";
    throw ParseError(r.message, path + field);
  }
  return {std::move(L), std::nullopt};
}

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), where);
  }
}

TypeSymbol type_from_json(const json& t, const std::string& f) {
  if (!t.is_array() || t.size() != 2 || !t[0].is_array() || !t[1].is_array() || t[1].size() != 1)
    throw ParseError("expected [[factors], [center]]", f);
  TypeSymbol s;
  for (const json& x : t[0]) s.factors.push_back(as_int(x, f, 1, 255));
  s.center_dim = as_int(t[1][0], f, 0, 255);
  return s;
}

}  // namespace

ParsedAlgebra parse_algebra(const std::string& text) { return algebra_from_json(parse_json(text, "document"), ""); }

std::string serialize_algebra(const NilAlgebra& L) { return algebra_json(L).dump(); }

void write_catalog(std::ostream& out, const Catalog& catalog) {
  json reinterp = json::array();
  for (const ReinterpretationRecord& r : catalog.reinterpretations)
    reinterp.push_back({{"parent", r.parent},
                        {"step", r.step},
                        {"source", r.source_catalog},
                        {"candidates", r.candidates},
                        {"kept", r.kept},
                        {"undecided_pairs", r.undecided_pairs},
                        {"duplicates", r.duplicates},
                        {"failures", r.failures}});
  json header = {{"format", "nilgen-catalog"},
                 {"p", catalog.p},
                 {"max_dim", catalog.max_dim},
                 {"version", catalog.version},
                 {"max_enumeration", std::to_string(catalog.max_enumeration)},
                 {"counts", catalog.counts()},
                 {"reinterpretations", std::move(reinterp)}};
  if (!catalog.reinterpretations.empty())
    header["completeness"] =
        "reinterpreted families assume the GF(2) descendant list is complete over this field; "
        "validity and irredundancy were checked";
  out << header.dump() << '\n';
  for (const auto& d : catalog.dims)
    for (const CatalogEntry& e : d) {
      json rec = {{"id", e.id},
                  {"type", type_json(e.type)},
                  {"aut_order", e.aut.order ? to_string(*e.aut.order) : "unknown"},
                  {"source", e.source},
                  {"step", e.step},
                  {"algebra", algebra_json(e.algebra)}};
      rec["parent"] = e.parent ? json(*e.parent) : json(nullptr);
      if (e.rep_index) rec["rep_index"] = std::to_string(*e.rep_index);
      if (e.orbit_size) rec["orbit_size"] = to_string(*e.orbit_size);
      if (e.origin) rec["origin"] = *e.origin;
      out << rec.dump() << '\n';
    }
}

Catalog read_catalog(std::istream& in) {
  Catalog cat;
  std::string line;
  int lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string at = "line " + std::to_string(lineno) + ": ";
    json j = parse_json(line, at + "record");
    if (!j.is_object()) throw ParseError("expected an object", at + "record");
    if (!have_header) {
      if (j.value("format", "") != "nilgen-catalog") throw ParseError("missing catalog header", at + "format");
      cat.p = as_int(require(j, "p", at), at + "p", 2, kMaxPrime);
      cat.max_dim = as_int(require(j, "max_dim", at), at + "max_dim", 1, 255);
      cat.version = j.value("version", "");
      try {
        cat.max_enumeration = std::stoull(j.value("max_enumeration", "0"));
      } catch (const std::exception&) {
        throw ParseError("expected a decimal string", at + "max_enumeration");
      }
      if (j.contains("reinterpretations"))
        for (const json& r : j["reinterpretations"]) {
          ReinterpretationRecord rec;
          rec.parent = r.value("parent", "");
          rec.step = r.value("step", 0);
          rec.source_catalog = r.value("source", "");
          rec.candidates = r.value("candidates", 0);
          rec.kept = r.value("kept", 0);
          rec.undecided_pairs = r.value("undecided_pairs", 0);
          rec.duplicates = r.value("duplicates", 0);
          rec.failures = r.value("failures", std::vector<std::string>{});
          cat.reinterpretations.push_back(std::move(rec));
        }
      cat.dims.resize(cat.max_dim);
      have_header = true;
      continue;
    }
    CatalogEntry e;
    const json& id = require(j, "id", at);
    if (!id.is_string()) throw ParseError("expected a string", at + "id");
    e.id = id.get<std::string>();
    if (j.contains("parent") && j["parent"].is_string()) e.parent = j["parent"].get<std::string>();
    e.algebra = algebra_from_json(require(j, "algebra", at), at + "algebra.").algebra;
    if (e.algebra.p() != cat.p) throw ParseError("field differs from the header", at + "algebra.p");
    if (e.algebra.dim() > cat.max_dim) throw ParseError("dimension above max_dim", at + "algebra.dim");
    e.type = type_from_json(require(j, "type", at), at + "type");
    e.step = j.value("step", 0);
    e.source = j.value("source", "");
    if (j.contains("origin")) e.origin = j["origin"].get<std::string>();
    try {
      if (j.contains("rep_index")) e.rep_index = std::stoull(j["rep_index"].get<std::string>());
      if (j.contains("orbit_size")) e.orbit_size = BigInt(j["orbit_size"].get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("expected a decimal string", at + "rep_index/orbit_size");
    }
    e.aut.dim = e.algebra.dim();
    e.aut.p = cat.p;
    const std::string order = j.value("aut_order", "unknown");
    if (order != "unknown") {
      try {
        e.aut.order = BigInt(order);
      } catch (const std::exception&) {
        throw ParseError("expected a decimal string", at + "aut_order");
      }
    }
    cat.dims[e.algebra.dim() - 1].push_back(std::move(e));
  }
  if (!have_header) throw ParseError("empty catalog", "line 1: format");
  return cat;
}

std::string emit_table(const Catalog& catalog, int dim) {
  std::ostringstream os;
  int total = 0;
  for (const auto& [t, c] : tabulate(catalog, dim)) {
    os << t.to_string() << "  " << c << '\n';
    total += c;
  }
  os << "total  " << total << '\n';
  return os.str();
}

std::string serialize_matrix(const Matrix& m) { return matrix_json(m).dump(); }

std::string serialize_aut(const AutGroup& g) {
  json gens = json::array();
  for (const Matrix& m : g.gens) gens.push_back(matrix_json(m));
  return json{{"p", g.p}, {"dim", g.dim}, {"order", g.order ? to_string(*g.order) : "unknown"}, {"generators", gens}}
      .dump();
}

std::string serialize_cover(const CoverData& cd) {
  json origins = json::array();
  for (const TailOrigin& t : cd.tail_origin) origins.push_back({t.i + 1, t.j + 1});
  Normalized s = star(cd);
  return json{{"dim", cd.n()},
              {"multiplicator_dim", cd.m()},
              {"nucleus_dim", cd.nucleus_dim()},
              {"tails", std::move(origins)},
              {"nucleus", matrix_json(cd.nucleus.basis())},
              {"cover", algebra_json(s.algebra)}}
      .dump();
}

}  // namespace nilgen
