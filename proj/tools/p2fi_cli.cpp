// p2fi: command-line front end for the graph, group, and census routines.
//
// Exit codes: 0 when every checked property holds, 2 when a structural
// assertion fails, 1 on usage or input errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "p2fi/aut_structure.hpp"
#include "p2fi/canon.hpp"
#include "p2fi/configuration.hpp"
#include "p2fi/goedgebeur.hpp"
#include "p2fi/graph6.hpp"
#include "p2fi/report.hpp"
#include "p2fi/survey.hpp"

namespace {

using namespace p2fi;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kAssertion = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<Graph> named_graph(const std::string& name) {
  if (name == "k33") return complete_bipartite(3, 3);
  if (name == "heawood") return heawood();
  if (name == "pappus") return pappus();
  if (name == "petersen") return petersen();
  if (name == "mk" || name == "moebius-kantor") return moebius_kantor_graph();
  if (name == "prism") return triangular_prism();
  if (name == "goedgebeur") return identify_goedgebeur().graph();
  return std::nullopt;
}

/// A graph source: a named graph, an LCF string, "-" for stdin, a file of
/// graph6 lines, or a literal graph6 string.
std::vector<Graph> read_graphs(const std::string& source) {
  if (auto g = named_graph(source)) return {*g};
  if (!source.empty() && source.front() == '[') return {parse_lcf(source)};
  std::vector<Graph> out;
  auto read_stream = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      out.push_back(graph6_decode(line));
    }
  };
  if (source == "-") {
    read_stream(std::cin);
  } else if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot open " + source);
    read_stream(in);
  } else {
    out.push_back(graph6_decode(source));
  }
  if (out.empty()) throw UsageError("no graphs in " + source);
  return out;
}

Graph read_one(const std::string& source) {
  auto gs = read_graphs(source);
  if (gs.size() != 1) throw UsageError(source + " holds " + std::to_string(gs.size()) + " graphs, expected one");
  return gs.front();
}

void write_json(const Json& j, const std::string& path) {
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

void print_docs(const std::vector<Json>& docs) {
  if (docs.size() == 1) {
    std::cout << docs.front().dump(2) << '\n';
  } else {
    std::cout << Json(docs).dump(2) << '\n';
  }
}

std::optional<Configuration> named_configuration(const std::string& name) {
  if (name == "fano") return fano();
  if (name == "mk" || name == "moebius-kantor") return moebius_kantor();
  if (name == "goedgebeur") return identify_goedgebeur().bridge.config;
  return std::nullopt;
}

/// The bridge join isomorphic to g, if any.
std::optional<BridgeGraph> matching_join(const Graph& g, unsigned threads) {
  const auto cert = canonical_form(g).certificate;
  for (const auto& s : scan_bridges(false, threads))
    if (s.certificate == cert) return bridge_join(s.spec);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo 2-factor isomorphic cubic graphs: constructions, groups, census"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for scans (0 = hardware)");

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a named graph or bridge join as graph6");
  std::vector<std::string> gen_args;
  std::string gen_labels;
  gen->add_option("what", gen_args, "goedgebeur | heawood | pappus | k33 | gp N K | bridge ALPHA BETA")->required();
  gen->add_option("--labels", gen_labels, "Write the vertex label table as JSON to this path ('-' for stdout)");

  // props / p2fi / aut
  auto* props = app.add_subcommand("props", "Graph invariants as JSON");
  std::string props_in;
  props->add_option("input", props_in, "graph6 file, graph6 string, LCF, or name")->required();

  auto* p2fi_cmd = app.add_subcommand("p2fi", "Perfect matchings and 2-factor parity");
  std::string p2fi_in;
  p2fi_cmd->add_option("input", p2fi_in)->required();

  auto* aut = app.add_subcommand("aut", "Automorphism group");
  std::string aut_in;
  bool aut_structure = false;
  aut->add_option("input", aut_in, "Defaults to the order-144 join with --structure");
  aut->add_flag("--structure", aut_structure, "Analyse a bridge join's group through its marked edges");

  auto* iso = app.add_subcommand("iso", "Test two graphs for isomorphism");
  std::string iso_a, iso_b;
  iso->add_option("file1", iso_a)->required();
  iso->add_option("file2", iso_b)->required();

  // config
  auto* config = app.add_subcommand("config", "Configurations: fano, mk, goedgebeur");
  std::string config_name;
  bool config_dual = false, config_self_dual = false, config_levi = false;
  config->add_option("name", config_name)->required();
  config->add_flag("--dual", config_dual, "Print the dual configuration");
  config->add_flag("--self-dual", config_self_dual, "Check self-duality");
  config->add_flag("--levi", config_levi, "Print the Levi graph as graph6");

  // survey / refute
  auto* survey = app.add_subcommand("survey", "Classify all 576 bridge joins");
  bool survey_p2fi = false;
  std::string survey_json;
  survey->add_flag("--p2fi", survey_p2fi, "Add 2-factor parity per class");
  survey->add_option("--json", survey_json, "Write the full report to this path ('-' for stdout)");

  auto* refute = app.add_subcommand("refute", "Check the order-144 join against the conjecture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      const auto& a = gen_args;
      Graph g;
      if (a[0] == "gp") {
        if (a.size() != 3) throw UsageError("gen gp needs N and K");
        g = generalized_petersen(std::stoi(a[1]), std::stoi(a[2]));
      } else if (a[0] == "bridge") {
        if (a.size() != 3) throw UsageError("gen bridge needs ALPHA and BETA");
        g = bridge_join({BridgeSpec::parse_perm(a[1]), BridgeSpec::parse_perm(a[2])}).graph();
      } else if (a.size() == 1) {
        auto named = named_graph(a[0]);
        if (!named) throw UsageError("unknown graph " + a[0]);
        g = *named;
      } else {
        throw UsageError("unexpected arguments after " + a[0]);
      }
      std::cout << graph6_encode(g) << '\n';
      if (!gen_labels.empty())
        write_json({{"schema", kSchemaVersion}, {"graph6", graph6_encode(g)}, {"labels", label_table_json(g)}},
                   gen_labels);
      return kOk;
    }

    if (props->parsed()) {
      std::vector<Json> docs;
      for (const auto& g : read_graphs(props_in)) docs.push_back(properties_json(g));
      print_docs(docs);
      return kOk;
    }

    if (p2fi_cmd->parsed()) {
      std::vector<Json> docs;
      for (const auto& g : read_graphs(p2fi_in)) docs.push_back(to_json(pseudo_2fi(g)));
      print_docs(docs);
      return kOk;
    }

    if (aut->parsed()) {
      if (aut_structure) {
        std::optional<BridgeGraph> bg;
        if (aut_in.empty()) {
          bg = identify_goedgebeur(scan_bridges(false, threads)).bridge;
        } else {
          bg = matching_join(read_one(aut_in), threads);
          if (!bg) {
            std::cerr << "p2fi: input is not isomorphic to any bridge join\n";
            return kAssertion;
          }
        }
        std::cout << to_json(analyze_automorphisms(*bg)).dump(2) << '\n';
        return kOk;
      }
      if (aut_in.empty()) throw UsageError("aut needs an input graph");
      std::vector<Json> docs;
      for (const auto& g : read_graphs(aut_in)) {
        auto group = automorphism_group(g);
        Json gens = Json::array();
        for (const auto& p : group.generators) gens.push_back(p.to_string());
        docs.push_back({{"schema", kSchemaVersion},
                        {"order", group.order()},
                        {"generators", gens},
                        {"base", group.base},
                        {"orbit_sizes", group.orbit_sizes}});
      }
      print_docs(docs);
      return kOk;
    }

    if (iso->parsed()) {
      const Graph a = read_one(iso_a), b = read_one(iso_b);
      auto mapping = isomorphism(a, b);
      Json j{{"schema", kSchemaVersion}, {"isomorphic", mapping.has_value()}};
      j["mapping"] = mapping ? Json(*mapping) : Json(nullptr);
      std::cout << j.dump(2) << '\n';
      return mapping ? kOk : kAssertion;
    }

    if (config->parsed()) {
      auto c = named_configuration(config_name);
      if (!c) throw UsageError("unknown configuration " + config_name);
      if (config_levi) {
        std::cout << graph6_encode(levi_graph(*c).graph) << '\n';
        return kOk;
      }
      Json j = configuration_json(config_dual ? dual(*c) : *c);
      j["symmetric_n3"] = c->is_symmetric_n3();
      j["aut_order"] = configuration_automorphisms(*c).order();
      j["levi_aut_order"] = automorphism_group(levi_graph(*c).graph).order();
      bool ok = true;
      if (config_self_dual) {
        ok = is_self_dual(*c);
        j["self_dual"] = ok;
      }
      std::cout << j.dump(2) << '\n';
      return ok ? kOk : kAssertion;
    }

    if (survey->parsed()) {
      auto s = run_survey({survey_p2fi, threads});
      std::cout << "class  aut  size  diagonal";
      if (survey_p2fi) std::cout << "  parity";
      std::cout << '\n';
      for (const auto& r : s.rows) {
        std::cout << std::setw(5) << r.class_id << std::setw(5) << r.aut_order << std::setw(6) << r.size
                  << std::setw(10) << r.diagonal_count;
        if (r.p2fi_status) std::cout << "  " << to_string(*r.p2fi_status);
        std::cout << '\n';
      }
      std::cout << "total " << s.total() << " in " << s.rows.size() << " classes\n";
      if (!survey_json.empty()) write_json(to_json(s), survey_json);
      return kOk;
    }

    if (refute->parsed()) {
      auto r = refutation_report(identify_goedgebeur(scan_bridges(false, threads)).graph());
      std::cout << to_json(r).dump(2) << '\n';
      return r.holds() ? kOk : kAssertion;
    }
  } catch (const UsageError& e) {
    std::cerr << "p2fi: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "p2fi: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "p2fi: bad number: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "p2fi: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "p2fi: " << e.what() << '\n';
    return kAssertion;
  }
  return kUsage;
}
