#include "lsplacto/cli.h"

#include "lsplacto/error.h"
#include "lsplacto/json_io.h"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lsplacto {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

RootSystem load_system(const CommandRequest &req) {
  TypeLabel label = parse_type_label(req.type_label);
  if (const char *data = std::getenv("LSPLACTO_DATA"); data && *data)
    return build_root_system(label, req.rank, data);
  return build_root_system(label, req.rank);
}

Weight parse_shape(const RootSystem &rs, const std::string &text) {
  Weight shape;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size())
        throw UsageError("malformed shape '" + text + "'");
      shape.coords.push_back(v);
    } catch (const std::logic_error &) {
      throw UsageError("malformed shape '" + text + "'");
    }
  }
  if (shape.rank() != static_cast<std::size_t>(rs.rank()))
    throw UsageError("shape needs " + std::to_string(rs.rank()) +
                     " coordinates");
  if (!shape.is_dominant())
    throw Error(ErrorCode::NonDominantWeight, to_string(shape));
  return shape;
}

/// Writes the artifact to the output file when one is given (and a summary
/// line to `out`), otherwise straight to `out`.
void emit(const CommandRequest &req, const std::string &artifact,
          const std::string &summary, std::ostream &out) {
  if (!req.output) {
    out << artifact;
    return;
  }
  std::ofstream file(*req.output, std::ios::binary);
  if (!file)
    throw UsageError("cannot write " + *req.output);
  file << artifact;
  out << summary << " -> " << *req.output << "\n";
}

bool looks_like_box_word(const std::string &word) {
  return word.find_first_not_of("0123456789 ,") == std::string::npos;
}

Word read_word(const RootSystem &rs, const GeneratorTable &table,
               const std::string &text) {
  if (rs.label() == TypeLabel::A && looks_like_box_word(text)) {
    BoxWord boxes = parse_box_word(text);
    Word word;
    for (int x : boxes) {
      auto g = table.find(1, Path::straight(epsilon(rs, x)));
      if (!g)
        throw Error(ErrorCode::UnknownGenerator,
                    "box letter " + std::to_string(x));
      word.push_back(*g);
    }
    return word;
  }
  return parse_word(table, text);
}

std::string join(const std::vector<std::string> &items) {
  std::string out;
  for (const auto &s : items) {
    if (!out.empty())
      out += ' ';
    out += s;
  }
  return out;
}

int cmd_info(const CommandRequest &req, const RootSystem &rs,
             std::ostream &out) {
  Json dims = Json::array();
  for (int k = 1; k <= rs.rank(); ++k)
    dims.push_back(rs.weyl_dim(rs.fundamental_weight(k)));
  Json j{{"type", std::string(to_string(rs.label()))},
         {"rank", rs.rank()},
         {"cartan", rs.cartan_matrix()},
         {"symmetrizer", rs.symmetrizer()},
         {"positive_roots", rs.positive_coroots().size()},
         {"fundamental_dimensions", dims}};
  if (req.format == OutputFormat::Json) {
    emit(req, dump(j), "info", out);
    return kExitOk;
  }
  std::ostringstream text;
  text << rs.name() << ": rank " << rs.rank() << ", "
       << rs.positive_coroots().size() << " positive roots\n";
  text << "cartan " << j["cartan"].dump() << "\n";
  text << "fundamental dimensions " << dims.dump() << "\n";
  emit(req, text.str(), "info", out);
  return kExitOk;
}

int cmd_crystal(const CommandRequest &req, const RootSystem &rs,
                std::ostream &out) {
  if (!req.shape)
    throw UsageError("crystal needs --shape");
  Weight shape = parse_shape(rs, *req.shape);
  CrystalGraph graph = generate_crystal(rs, straight_monomial(rs, shape));
  std::string summary = "crystal " + rs.name() + " " + to_string(shape) +
                        ": " + std::to_string(graph.vertices.size()) +
                        " vertices, " + std::to_string(graph.edges.size()) +
                        " edges";
  switch (req.format) {
  case OutputFormat::Json:
    emit(req, dump(crystal_to_json(graph)), summary, out);
    break;
  case OutputFormat::Dot:
    emit(req, crystal_to_dot(graph), summary, out);
    break;
  case OutputFormat::Text: {
    std::ostringstream text;
    text << summary << "\n";
    for (std::size_t v = 0; v < graph.vertices.size(); ++v)
      text << v << " wt=" << to_string(graph.vertices[v].weight()) << "\n";
    emit(req, text.str(), summary, out);
    break;
  }
  }
  return kExitOk;
}

int cmd_generators(const CommandRequest &req, const RootSystem &rs,
                   std::ostream &out) {
  GeneratorTable table = build_generators(rs);
  std::string summary =
      "generators " + rs.name() + ": " + std::to_string(table.size());
  if (req.format == OutputFormat::Json) {
    emit(req, dump(generators_to_json(table)), summary, out);
    return kExitOk;
  }
  std::ostringstream text;
  text << summary << "\n";
  for (const auto &g : table.entries())
    text << g.id << " wt=" << to_string(g.path.weight()) << "\n";
  emit(req, text.str(), summary, out);
  return kExitOk;
}

int cmd_rules(const CommandRequest &req, const RootSystem &rs,
              std::ostream &out) {
  RewriteSystem system = build_rules(rs, req.threads);
  std::string summary = "rules " + rs.name() + ": " +
                        std::to_string(system.table().size()) +
                        " generators, " +
                        std::to_string(system.rules().size()) + " rules";
  if (req.format == OutputFormat::Json) {
    emit(req, dump(rules_to_json(rs, system)), summary, out);
    return kExitOk;
  }
  std::ostringstream text;
  text << summary << "\n";
  const auto &table = system.table();
  for (const auto &r : system.rules())
    text << table[r.lhs[0]].id << " " << table[r.lhs[1]].id << " -> "
         << (r.rhs.empty() ? std::string("()") : join(word_ids(table, r.rhs)))
         << "\n";
  emit(req, text.str(), summary, out);
  return kExitOk;
}

int cmd_normalize(const CommandRequest &req, const RootSystem &rs,
                  std::ostream &out) {
  if (!req.word)
    throw UsageError("normalize needs --word");
  RewriteSystem system = build_rules(rs, req.threads);
  Word word = read_word(rs, system.table(), *req.word);
  Word nf = normalize(system, word);
  auto ids = word_ids(system.table(), nf);
  if (req.format == OutputFormat::Json) {
    Json j{{"input", word_ids(system.table(), word)}, {"normal_form", ids}};
    emit(req, dump(j), "normalize", out);
  } else {
    emit(req, join(ids) + "\n", "normalize", out);
  }
  return kExitOk;
}

int cmd_check(const CommandRequest &req, const RootSystem &rs,
              std::ostream &out) {
  RewriteSystem system = build_rules(rs, req.threads);
  auto termination = audit_termination(rs, system);
  auto confluence = audit_local_confluence(rs, system, req.threads);
  bool pass = termination.pass && confluence.pass;
  std::ostringstream summary;
  summary << "check " << rs.name() << ": termination "
          << (termination.pass ? "PASS" : "FAIL") << " ("
          << termination.rules_checked << " rules), confluence "
          << (confluence.pass ? "PASS" : "FAIL") << " ("
          << confluence.triples_checked << " critical triples)";
  if (req.format == OutputFormat::Json)
    emit(req, dump(audit_to_json(system, termination, confluence)),
         summary.str(), out);
  else
    emit(req, summary.str() + "\n", summary.str(), out);
  return pass ? kExitOk : kExitFailure;
}

/// Dominant weights with coordinate sum at most max_sum, in graded
/// lexicographic order.
std::vector<Weight> small_dominant_weights(int rank, int max_sum) {
  std::vector<Weight> out;
  Weight w = Weight::zero(static_cast<std::size_t>(rank));
  auto rec = [&](auto &&self, int pos, int left) -> void {
    if (pos == rank) {
      out.push_back(w);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      w.coords[pos] = c;
      self(self, pos + 1, left - c);
    }
    w.coords[pos] = 0;
  };
  rec(rec, 0, max_sum);
  return out;
}

int cmd_verify_dims(const CommandRequest &req, const RootSystem &rs,
                    std::ostream &out) {
  Json rows = Json::array();
  bool pass = true;
  for (const auto &lambda : small_dominant_weights(rs.rank(), req.max_sum)) {
    auto graph = generate_crystal(rs, straight_monomial(rs, lambda));
    auto expected = rs.weyl_dim(lambda);
    bool ok = graph.vertices.size() == static_cast<std::size_t>(expected);
    pass = pass && ok;
    rows.push_back({{"shape", weight_to_json(lambda)},
                    {"crystal", graph.vertices.size()},
                    {"weyl_dim", expected},
                    {"pass", ok}});
  }
  std::string summary = "verify-dims " + rs.name() + ": " +
                        std::to_string(rows.size()) + " shapes, " +
                        (pass ? "PASS" : "FAIL");
  if (req.format == OutputFormat::Json) {
    emit(req, dump(Json{{"pass", pass}, {"shapes", rows}}), summary, out);
  } else {
    std::ostringstream text;
    for (const auto &r : rows)
      text << r["shape"].dump() << " crystal=" << r["crystal"].dump()
           << " weyl_dim=" << r["weyl_dim"].dump() << "\n";
    text << summary << "\n";
    emit(req, text.str(), summary, out);
  }
  return pass ? kExitOk : kExitFailure;
}

int cmd_oracle_compare(const CommandRequest &req, const RootSystem &rs,
                       std::ostream &out) {
  if (rs.label() != TypeLabel::A || rs.rank() > 3)
    throw UsageError("oracle-compare needs type A of rank at most 3");
  auto report = cross_check(rs.rank() + 1, req.max_len);
  std::string summary = "oracle-compare n=" + std::to_string(report.n) +
                        " max_len=" + std::to_string(report.max_len) + ": " +
                        std::to_string(report.words) + " words, " +
                        std::to_string(report.mismatches.size()) +
                        " mismatches";
  if (req.format == OutputFormat::Json)
    emit(req, dump(oracle_to_json(report)), summary, out);
  else
    emit(req, summary + "\n", summary, out);
  return report.mismatches.empty() ? kExitOk : kExitFailure;
}

} // namespace

int run_command(const CommandRequest &req, std::ostream &out,
                std::ostream &err) {
  try {
    if (req.format == OutputFormat::Dot && req.subcommand != "crystal")
      throw UsageError("--format dot is only available for crystal");
    RootSystem rs = load_system(req);
    if (req.subcommand == "info")
      return cmd_info(req, rs, out);
    if (req.subcommand == "crystal")
      return cmd_crystal(req, rs, out);
    if (req.subcommand == "generators")
      return cmd_generators(req, rs, out);
    if (req.subcommand == "rules")
      return cmd_rules(req, rs, out);
    if (req.subcommand == "normalize")
      return cmd_normalize(req, rs, out);
    if (req.subcommand == "check")
      return cmd_check(req, rs, out);
    if (req.subcommand == "verify-dims")
      return cmd_verify_dims(req, rs, out);
    if (req.subcommand == "oracle-compare")
      return cmd_oracle_compare(req, rs, out);
    throw UsageError("unknown subcommand '" + req.subcommand + "'");
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Littelmann paths, crystals and column presentations of "
               "plactic monoids"};
  app.require_subcommand(1);
  CommandRequest req;
  std::string format = "text";

  const std::pair<const char *, const char *> commands[] = {
      {"info", "Cartan data and fundamental dimensions"},
      {"crystal", "Crystal of the straight path to --shape"},
      {"generators", "L-S paths of fundamental shapes"},
      {"rules", "Column presentation rules"},
      {"normalize", "Normal form of --word"},
      {"check", "Termination and local-confluence audits"},
      {"verify-dims", "Crystal sizes against the Weyl dimension formula"},
      {"oracle-compare", "Type A path model against the Knuth relations"},
  };
  for (const auto &[name, help] : commands) {
    auto *sub = app.add_subcommand(name, help);
    sub->add_option("--type", req.type_label, "A, B, C, D or G2")->required();
    sub->add_option("--rank", req.rank, "Rank")->required();
    sub->add_option("--format", format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_option("--output", req.output, "Write the artifact here");
    sub->add_option("--threads", req.threads, "Worker threads for audits")
        ->check(CLI::Range(1, 256));
    std::string sub_name = name;
    if (sub_name == "crystal")
      sub->add_option("--shape", req.shape, "Comma-separated coordinates")
          ->required();
    if (sub_name == "normalize")
      sub->add_option("--word", req.word,
                      "Generator ids (\"w1.0 w2.1\") or box digits (\"231\")")
          ->required();
    if (sub_name == "verify-dims")
      sub->add_option("--max-sum", req.max_sum,
                      "Largest coordinate sum of the shapes");
    if (sub_name == "oracle-compare")
      sub->add_option("--max-len", req.max_len, "Longest box word");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    err << "usage: lsplacto <info|crystal|generators|rules|normalize|check|"
           "verify-dims|oracle-compare> --type T --rank N [options]\n";
    return kExitUsage;
  }
  req.subcommand = app.get_subcommands().front()->get_name();
  req.format = format == "json"  ? OutputFormat::Json
               : format == "dot" ? OutputFormat::Dot
                                 : OutputFormat::Text;
  return run_command(req, out, err);
}

} // namespace lsplacto
