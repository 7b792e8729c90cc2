#include "triplane/pipeline/io.hpp"

#include <fstream>
#include <sstream>

namespace triplane {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where, std::string("missing key '") + key + "'");
  return *it;
}

long long as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<long long>();
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected a list of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(static_cast<int>(as_int(j[i], where + "/" + std::to_string(i))));
  return out;
}

}  // namespace

json to_json(const Ring& r) {
  json j;
  j["prime"] = r.field().characteristic();
  j["variables"] = r.variables();
  j["weights"] = r.weights();
  j["order"] = to_string(r.order());
  if (r.order() == MonomialOrder::BlockElimination) j["blocks"] = r.blocks();
  return j;
}

RingPtr ring_from_json(const json& j, const std::string& where) {
  const long long p = as_int(field(j, "prime", where), where + "/prime");
  const json& vars = field(j, "variables", where);
  if (!vars.is_array()) throw ParseError(where + "/variables", "expected a list of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) throw ParseError(where + "/variables/" + std::to_string(i), "expected a name");
    names.push_back(vars[i].get<std::string>());
  }
  std::vector<int> weights;
  if (j.contains("weights")) weights = int_list(j["weights"], where + "/weights");
  MonomialOrder order = MonomialOrder::GRevLex;
  std::vector<int> blocks;
  if (j.contains("order")) {
    if (!j["order"].is_string()) throw ParseError(where + "/order", "expected a string");
    try {
      order = order_from_string(j["order"].get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where + "/order", e.what());
    }
  }
  if (j.contains("blocks")) blocks = int_list(j["blocks"], where + "/blocks");
  if (p < 0 || p > 0xffffffffLL) throw ParseError(where + "/prime", "out of range");
  try {
    return make_ring(static_cast<std::uint32_t>(p), names, order, weights, blocks);
  } catch (const std::exception& e) {
    throw ParseError(where, e.what());
  }
}

json to_json(const Polynomial& f) {
  json terms = json::array();
  const Ring& r = *f.ring();
  for (const Term& t : f.terms()) terms.push_back(json::array({r.exponents(t.m), r.field().lift(t.c)}));
  return terms;
}

Polynomial polynomial_from_json(const RingPtr& r, const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected a list of [exponents, coefficient] terms");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    const json& t = j[i];
    if (!t.is_array() || t.size() != 2) throw ParseError(w, "expected [exponents, coefficient]");
    const std::vector<int> e = int_list(t[0], w + "/0");
    if (static_cast<int>(e.size()) != r->nvars()) throw ParseError(w + "/0", "exponent vector has the wrong length");
    for (int x : e)
      if (x < 0 || x > 127) throw ParseError(w + "/0", "exponent out of range 0..127");
    const Coeff c = r->field().reduce(as_int(t[1], w + "/1"));
    if (c) terms.push_back({r->monomial(e), c});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

json to_json(const PolyMatrix& m) {
  json j;
  j["ring"] = to_json(*m.ring());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["row_degrees"] = m.row_degrees();
  j["col_degrees"] = m.col_degrees();
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(i, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

PolyMatrix matrix_from_json(const json& j, const std::string& where) {
  const RingPtr r = ring_from_json(field(j, "ring", where), where + "/ring");
  const json& entries = field(j, "entries", where);
  if (!entries.is_array()) throw ParseError(where + "/entries", "expected a list of rows");
  const int rows = static_cast<int>(entries.size());
  int cols = 0;
  if (j.contains("cols")) cols = static_cast<int>(as_int(j["cols"], where + "/cols"));
  else if (rows > 0 && entries[0].is_array()) cols = static_cast<int>(entries[0].size());
  if (j.contains("rows") && as_int(j["rows"], where + "/rows") != rows)
    throw ParseError(where + "/rows", "does not match the number of entry rows");
  PolyMatrix m(r, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string w = where + "/entries/" + std::to_string(i);
    if (!entries[i].is_array() || static_cast<int>(entries[i].size()) != cols) throw ParseError(w, "row has the wrong length");
    for (int c = 0; c < cols; ++c) m.at(i, c) = polynomial_from_json(r, entries[i][c], w + "/" + std::to_string(c));
  }
  if (j.contains("row_degrees")) {
    std::vector<int> d = int_list(j["row_degrees"], where + "/row_degrees");
    if (static_cast<int>(d.size()) != rows) throw ParseError(where + "/row_degrees", "wrong length");
    m.set_row_degrees(d);
  }
  if (j.contains("col_degrees")) {
    std::vector<int> d = int_list(j["col_degrees"], where + "/col_degrees");
    if (static_cast<int>(d.size()) != cols) throw ParseError(where + "/col_degrees", "wrong length");
    m.set_col_degrees(d);
  } else {
    m.infer_col_degrees();
  }
  return m;
}

json to_json(const Ideal& I) {
  json j;
  j["ring"] = to_json(*I.ring());
  json gens = json::array();
  for (const Polynomial& g : I.generators()) gens.push_back(to_json(g));
  j["generators"] = gens;
  return j;
}

Ideal ideal_from_json(const json& j, const std::string& where) {
  const RingPtr r = ring_from_json(field(j, "ring", where), where + "/ring");
  const json& gens = field(j, "generators", where);
  if (!gens.is_array()) throw ParseError(where + "/generators", "expected a list of polynomials");
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < gens.size(); ++i)
    g.push_back(polynomial_from_json(r, gens[i], where + "/generators/" + std::to_string(i)));
  return Ideal(r, g);
}

json to_json(const HilbertData& h) {
  json j;
  j["dim"] = h.krull_dim;
  j["degree"] = h.degree;
  j["genera"] = h.genera;
  json hp = json::array();
  for (const Rational& q : h.hilbert_polynomial) hp.push_back(q.den == 1 ? json(q.num) : json(std::to_string(q.num) + "/" + std::to_string(q.den)));
  j["hilbert_polynomial"] = hp;
  j["numerator"] = {{"low", h.numerator.low}, {"coefficients", h.numerator.c}};
  return j;
}

json betti_json(const FreeResolution& F) {
  int low = 0;
  const auto t = F.betti_table(low);
  json j;
  j["min_degree"] = low;
  j["ranks"] = json::array();
  for (int i = 0; i <= F.length(); ++i) j["ranks"].push_back(F.rank(i));
  j["table"] = t;
  return j;
}

json to_json(const LineInDualPlane& L) { return json::array({L.c[0], L.c[1], L.c[2]}); }

json to_json(const SteinerPresentation& P) {
  json j;
  json meta;
  meta["b"] = P.b;
  meta["kind"] = to_string(P.kind);
  meta["intended_alpha"] = P.intended_alpha;
  meta["seed"] = P.seed;
  meta["prime"] = P.ring()->field().characteristic();
  json cand = json::array();
  for (const LineInDualPlane& L : P.candidates) cand.push_back(to_json(L));
  meta["candidates"] = cand;
  j["metadata"] = meta;
  j["matrix"] = to_json(P.matrix);
  return j;
}

SteinerPresentation presentation_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("", "expected an object");
  if (!j.contains("matrix")) return SteinerPresentation::from_matrix(matrix_from_json(j, ""));
  const PolyMatrix M = matrix_from_json(j["matrix"], "/matrix");
  SteinerKind kind = SteinerKind::Given;
  const json meta = j.value("metadata", json::object());
  if (meta.contains("kind")) {
    try {
      kind = steiner_kind_from_string(meta["kind"].get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError("/metadata/kind", e.what());
    }
  }
  SteinerPresentation P;
  try {
    P = SteinerPresentation::from_matrix(M, kind);
  } catch (const std::exception& e) {
    throw ParseError("/matrix", e.what());
  }
  if (meta.contains("b") && as_int(meta["b"], "/metadata/b") != P.b)
    throw ParseError("/metadata/b", "does not match the matrix size");
  if (meta.contains("intended_alpha")) P.intended_alpha = static_cast<int>(as_int(meta["intended_alpha"], "/metadata/intended_alpha"));
  if (meta.contains("seed")) {
    if (!meta["seed"].is_number_unsigned() && !meta["seed"].is_number_integer())
      throw ParseError("/metadata/seed", "expected an integer");
    P.seed = meta["seed"].get<std::uint64_t>();
  }
  if (meta.contains("candidates")) {
    const json& c = meta["candidates"];
    if (!c.is_array()) throw ParseError("/metadata/candidates", "expected a list of lines");
    const PrimeField& k = P.ring()->field();
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::string w = "/metadata/candidates/" + std::to_string(i);
      const std::vector<int> v = int_list(c[i], w);
      if (v.size() != 3) throw ParseError(w, "a line needs three coefficients");
      try {
        P.candidates.push_back(LineInDualPlane::normalized(k, {k.reduce(v[0]), k.reduce(v[1]), k.reduce(v[2])}));
      } catch (const std::exception& e) {
        throw ParseError(w, e.what());
      }
    }
  }
  return P;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte), e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace triplane
