#include "lsplacto/json_io.h"

#include "lsplacto/error.h"

#include <sstream>

namespace lsplacto {

Json weight_to_json(const RationalWeight &v) {
  Json out = Json::array();
  for (const auto &c : v.coords())
    out.push_back(to_string(c));
  return out;
}

Json weight_to_json(const Weight &w) {
  Json out = Json::array();
  for (auto c : w.coords)
    out.push_back(c);
  return out;
}

Json path_to_json(const Path &path) {
  Json out = Json::array();
  for (const auto &p : path.breakpoints())
    out.push_back(weight_to_json(p));
  return out;
}

Path path_from_json(const Json &j) {
  try {
    Polyline points;
    for (const auto &p : j) {
      std::vector<Rational> coords;
      for (const auto &c : p)
        coords.push_back(c.is_string() ? parse_rational(c.get<std::string>())
                                       : Rational(c.get<std::int64_t>()));
      points.emplace_back(std::move(coords));
    }
    if (points.empty() || !points.front().is_zero())
      throw Error(ErrorCode::InvalidData, "path must start at the origin");
    for (const auto &p : points)
      if (p.rank() != points.front().rank())
        throw Error(ErrorCode::InvalidData, "breakpoints of mixed rank");
    return Path::from_polyline(points);
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::InvalidData, std::string("path: ") + e.what());
  }
}

Json monomial_to_json(const Monomial &m) {
  Json factors = Json::array();
  for (const auto &f : m.factors())
    factors.push_back({{"shape", weight_to_json(f.shape)},
                       {"breakpoints", path_to_json(f.path)}});
  return Json{{"factors", std::move(factors)}};
}

Monomial monomial_from_json(const Json &j) {
  try {
    std::vector<Factor> factors;
    std::size_t rank = 0;
    for (const auto &f : j.at("factors")) {
      Weight shape{f.at("shape").get<std::vector<std::int64_t>>()};
      Path path = path_from_json(f.at("breakpoints"));
      if (path.rank() != shape.rank() || (rank && rank != shape.rank()))
        throw Error(ErrorCode::InvalidData, "factor rank mismatch");
      rank = shape.rank();
      factors.push_back({std::move(shape), std::move(path)});
    }
    return Monomial(rank, std::move(factors));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::InvalidData, std::string("monomial: ") + e.what());
  }
}

namespace {

Json shape_list(const Monomial &m) {
  Json shapes = Json::array();
  for (const auto &f : m.factors())
    shapes.push_back(weight_to_json(f.shape));
  return shapes;
}

} // namespace

Json crystal_to_json(const CrystalGraph &graph) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    const Monomial &m = graph.vertices[v];
    vertices.push_back({{"id", v},
                        {"shape", shape_list(m)},
                        {"breakpoints", path_to_json(m.concatenation())},
                        {"weight", weight_to_json(m.weight())}});
  }
  Json edges = Json::array();
  for (const auto &e : graph.edges)
    edges.push_back(Json::array({e.from, e.index, e.to}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string crystal_to_dot(const CrystalGraph &graph) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (std::size_t v = 0; v < graph.vertices.size(); ++v)
    out << "  v" << v << " [label=\"" << v << "\\n"
        << to_string(graph.vertices[v].weight()) << "\"];\n";
  for (const auto &e : graph.edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.index
        << "\"];\n";
  out << "}\n";
  return out.str();
}

Json generators_to_json(const GeneratorTable &table) {
  Json out = Json::array();
  for (const auto &g : table.entries())
    out.push_back({{"id", g.id},
                   {"shape", g.shape_index},
                   {"breakpoints", path_to_json(g.path)},
                   {"weight", weight_to_json(g.path.weight())}});
  return out;
}

namespace {

Json ids_json(const GeneratorTable &table, const Word &w) {
  Json out = Json::array();
  for (auto g : w)
    out.push_back(table[g].id);
  return out;
}

Json system_json(const RootSystem &rs) {
  return Json{{"type", std::string(to_string(rs.label()))},
              {"rank", rs.rank()}};
}

} // namespace

Json rules_to_json(const RootSystem &rs, const RewriteSystem &system) {
  const auto &table = system.table();
  Json rules = Json::array();
  for (const auto &r : system.rules())
    rules.push_back({{"lhs", Json::array({table[r.lhs[0]].id,
                                          table[r.lhs[1]].id})},
                     {"rhs", ids_json(table, r.rhs)},
                     {"lhs_shape", weight_to_json(r.lhs_shape)},
                     {"rhs_shape", weight_to_json(r.rhs_shape)}});
  return Json{{"system", system_json(rs)},
              {"generators", generators_to_json(table)},
              {"rules", std::move(rules)}};
}

Json audit_to_json(const RewriteSystem &system,
                   const TerminationReport &termination,
                   const ConfluenceReport &confluence) {
  const auto &table = system.table();
  Json term_failures = Json::array();
  for (const auto &f : termination.failures)
    term_failures.push_back(
        {{"lhs", Json::array({table[f.lhs[0]].id, table[f.lhs[1]].id})},
         {"lhs_shape", weight_to_json(f.lhs_shape)},
         {"rhs_shape", weight_to_json(f.rhs_shape)}});
  Json conf_failures = Json::array();
  for (const auto &f : confluence.failures)
    conf_failures.push_back(
        {{"triple", Json::array({table[f.triple[0]].id, table[f.triple[1]].id,
                                 table[f.triple[2]].id})},
         {"left", ids_json(table, f.left)},
         {"right", ids_json(table, f.right)}});
  return Json{
      {"system", system_json(system.root_system())},
      {"termination",
       {{"pass", termination.pass},
        {"rules_checked", termination.rules_checked},
        {"max_rhs_length", termination.max_rhs_length},
        {"failures", std::move(term_failures)}}},
      {"confluence",
       {{"pass", confluence.pass},
        {"triples_checked", confluence.triples_checked},
        {"failures", std::move(conf_failures)}}}};
}

Json oracle_to_json(const OracleReport &report) {
  Json mismatches = Json::array();
  for (const auto &m : report.mismatches)
    mismatches.push_back({{"first", to_string(m.first)},
                          {"second", to_string(m.second)},
                          {"knuth", m.knuth},
                          {"path_model", m.path_model}});
  return Json{{"n", report.n},
              {"max_len", report.max_len},
              {"words", report.words},
              {"classes_path_model", report.classes_path_model},
              {"classes_knuth", report.classes_knuth},
              {"row_reading", report.row_reading},
              {"mismatches", std::move(mismatches)}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace lsplacto
