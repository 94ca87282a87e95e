#include "pfaffrep/serialize.hpp"

namespace pfaffrep {

namespace {

template <class C, class Encode>
Json matrix_json(const SkewMatrix<C>& m, Encode encode) {
  Json entries = Json::array();
  for (const auto& [key, form] : m.upper()) {
    entries.push_back({{"row", key.first},
                       {"col", key.second},
                       {"a", encode(form.a)},
                       {"b", encode(form.b)},
                       {"c", encode(form.c)}});
  }
  return {{"size", m.size()}, {"entries", std::move(entries)}};
}

template <class C, class Decode>
SkewMatrix<C> matrix_from(const Json& j, C zero, Decode decode) {
  SkewMatrix<C> m(j.at("size").get<int>(), zero);
  for (const auto& e : j.at("entries")) {
    const int row = e.at("row").get<int>();
    const int col = e.at("col").get<int>();
    if (row >= col) {
      throw Error(ErrorKind::InvalidArgument, "matrix entries must lie above the diagonal");
    }
    m.set(row, col, LinearForm<C>{decode(e.at("a")), decode(e.at("b")), decode(e.at("c"))});
  }
  return m;
}

Json symbol_list(const std::vector<SymbolId>& symbols) {
  Json out = Json::array();
  for (const auto& s : symbols) out.push_back(s.name());
  return out;
}

std::vector<SymbolId> symbols_from(const Json& j) {
  std::vector<SymbolId> out;
  for (const auto& s : j) out.push_back(SymbolId::parse(s.get<std::string>()));
  return out;
}

}  // namespace

Json to_json(const SymbolicCoefficient& c) {
  Json terms = Json::array();
  for (const auto& [key, v] : c.terms()) {
    Json term = Json::array({v.get_str()});
    for (const auto& s : key) term.push_back(s.name());
    terms.push_back(std::move(term));
  }
  return terms;
}

SymbolicCoefficient symbolic_from_json(const Json& j) {
  SymbolicCoefficient c;
  for (const auto& term : j) {
    if (!term.is_array() || term.empty()) {
      throw Error(ErrorKind::InvalidArgument, "symbolic term must be [coef, symbol...]");
    }
    SymbolicCoefficient::Key key;
    for (std::size_t i = 1; i < term.size(); ++i) key.push_back(SymbolId::parse(term[i].get<std::string>()));
    c.add_term(std::move(key), BigInt(term[0].get<std::string>()));
  }
  return c;
}

Json to_json(const SkewMatrix<RingValue>& m) {
  return matrix_json(m, [](const RingValue& v) { return v.to_string(); });
}

Json to_json(const SkewMatrix<SymbolicCoefficient>& m) {
  return matrix_json(m, [](const SymbolicCoefficient& c) { return to_json(c); });
}

SkewMatrix<RingValue> ring_matrix_from_json(const Json& j, const RingDescriptor& ring) {
  return matrix_from<RingValue>(j, from_integer(0, ring), [&](const Json& v) {
    return RingValue::parse(v.get<std::string>(), ring);
  });
}

SkewMatrix<SymbolicCoefficient> symbolic_matrix_from_json(const Json& j) {
  return matrix_from<SymbolicCoefficient>(j, SymbolicCoefficient{}, symbolic_from_json);
}

Json template_to_json(const PfaffianTemplate& t) {
  return {{"format_version", kFormatVersion},
          {"degree", t.degree},
          {"matrix", to_json(t.matrix)},
          {"unknowns", symbol_list(t.unknowns)},
          {"thetas", symbol_list(t.thetas)}};
}

PfaffianTemplate template_from_json(const Json& j) {
  PfaffianTemplate t;
  t.degree = j.at("degree").get<int>();
  t.matrix = symbolic_matrix_from_json(j.at("matrix"));
  t.unknowns = symbols_from(j.at("unknowns"));
  t.thetas = symbols_from(j.at("thetas"));
  return t;
}

Json to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) entries.push_back(Json::array({r, c, m(r, c).get_str()}));
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMatrix int_matrix_from_json(const Json& j) {
  IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    const auto r = e.at(0).get<std::size_t>();
    const auto c = e.at(1).get<std::size_t>();
    if (r >= m.rows() || c >= m.cols()) {
      throw Error(ErrorKind::InvalidArgument, "sparse matrix entry out of range");
    }
    m(r, c) = BigInt(e.at(2).get<std::string>());
  }
  return m;
}

Json to_json(const Certificate& c) {
  Json factors = Json::array();
  for (const auto& [value, count] : c.invariant_factors) {
    factors.push_back({{"value", value.get_str()}, {"multiplicity", count}});
  }
  Json out = {{"solvable_over_Z", c.solvable_over_z}, {"invariant_factors", std::move(factors)}};
  if (c.failure) {
    out["failure"] = {{"theta_column", c.failure->theta_column},
                      {"row", c.failure->row},
                      {"residue", c.failure->residue.get_str()},
                      {"pivot", c.failure->pivot.get_str()}};
  }
  return out;
}

namespace {

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.solvable_over_z = j.at("solvable_over_Z").get<bool>();
  for (const auto& f : j.at("invariant_factors")) {
    c.invariant_factors.emplace_back(BigInt(f.at("value").get<std::string>()),
                                     f.at("multiplicity").get<std::size_t>());
  }
  if (j.contains("failure")) {
    const Json& f = j.at("failure");
    c.failure = SolveFailure{f.at("theta_column").get<std::size_t>(), f.at("row").get<std::size_t>(),
                             BigInt(f.at("residue").get<std::string>()),
                             BigInt(f.at("pivot").get<std::string>())};
  }
  return c;
}

}  // namespace

Json solution_to_json(const ParametricSolution& sol) {
  return {{"format_version", kFormatVersion},
          {"degree", sol.degree},
          {"rank", sol.rank},
          {"free_count", sol.free_count()},
          {"particular", to_json(sol.particular)},
          {"nullspace", to_json(sol.nullspace)},
          {"certificate", to_json(sol.certificate)}};
}

ParametricSolution solution_from_json(const Json& j) {
  if (j.at("format_version").get<int>() != kFormatVersion) {
    throw Error(ErrorKind::InvalidArgument, "unsupported solution format_version");
  }
  ParametricSolution sol;
  sol.degree = j.at("degree").get<int>();
  sol.rank = j.at("rank").get<std::size_t>();
  sol.particular = int_matrix_from_json(j.at("particular"));
  sol.nullspace = int_matrix_from_json(j.at("nullspace"));
  sol.certificate = certificate_from_json(j.at("certificate"));
  if (sol.free_count() != j.at("free_count").get<std::size_t>()) {
    throw Error(ErrorKind::InvalidArgument, "free_count disagrees with the nullspace");
  }
  return sol;
}

Json solution_summary_json(const ParametricSolution& sol, const Counts& counts) {
  return {{"format_version", kFormatVersion},
          {"degree", sol.degree},
          {"matrix_size", counts.matrix_size},
          {"unknowns", counts.unknowns},
          {"equations", counts.equations},
          {"thetas", counts.thetas},
          {"rank", sol.rank},
          {"free_count", sol.free_count()},
          {"certificate", to_json(sol.certificate)}};
}

Json representation_to_json(const Representation& rep) {
  Json free = Json::array();
  for (const auto& v : rep.free_values) free.push_back(v.to_string());
  return {{"format_version", kFormatVersion},
          {"degree", rep.degree},
          {"ring", rep.ring.to_string()},
          {"matrix", to_json(rep.matrix)},
          {"free_values", std::move(free)},
          {"provenance", rep.provenance},
          {"pfaffian_check", rep.verified ? "passed" : "skipped"}};
}

Representation representation_from_json(const Json& j) {
  Representation rep;
  rep.ring = RingDescriptor::parse(j.at("ring").get<std::string>());
  rep.degree = j.at("degree").get<int>();
  rep.matrix = ring_matrix_from_json(j.at("matrix"), rep.ring);
  if (rep.matrix.size() != 2 * rep.degree) {
    throw Error(ErrorKind::InvalidArgument, "matrix size is not twice the degree");
  }
  if (j.contains("free_values")) {
    for (const auto& v : j.at("free_values")) {
      rep.free_values.push_back(RingValue::parse(v.get<std::string>(), rep.ring));
    }
  }
  rep.provenance = j.value("provenance", "");
  rep.verified = j.value("pfaffian_check", "") == "passed";
  return rep;
}

Json to_json(const SweepReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"degree", r.degree},
                    {"matrix_size", r.counts.matrix_size},
                    {"unknowns", r.counts.unknowns},
                    {"equations", r.counts.equations},
                    {"thetas", r.counts.thetas},
                    {"rank", r.rank},
                    {"free_count", r.free_count},
                    {"solvable_over_Z", r.solvable_over_z},
                    {"linearity_ok", r.linearity_ok},
                    {"pure_powers_ok", r.pure_powers_ok},
                    {"verify_samples_passed", r.samples_passed},
                    {"verify_samples_total", r.samples_total},
                    {"wall_time_s", r.wall_time_s},
                    {"failures", r.failures},
                    {"passed", r.passed()}});
  }
  return {{"format_version", kFormatVersion}, {"rows", std::move(rows)}, {"passed", report.passed()}};
}

}  // namespace pfaffrep
