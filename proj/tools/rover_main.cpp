#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rover/canonical.hpp"
#include "rover/errors.hpp"
#include "rover/expr.hpp"
#include "rover/json_io.hpp"
#include "rover/poset.hpp"
#include "rover/topology.hpp"

namespace {

using rover::json;

int exit_code_for(rover::Errc c) {
  switch (c) {
    case rover::Errc::arity_mismatch:
      return 3;
    case rover::Errc::contraction_cap_exceeded:
    case rover::Errc::rank_gap_too_large:
    case rover::Errc::rank_too_large:
    case rover::Errc::size_cap_exceeded:
      return 4;
    case rover::Errc::not_an_expansion:
      return 1;
    default:
      return 2;  // parse errors and invalid inputs
  }
}

struct Options {
  uint64_t seed = 0;
  int cap_depth = 64;
  long long cap_simplices = 200000;
  std::string coeffs = "z";
  std::string out = "text";
};

rover::Coeffs coeffs_of(const std::string& s) {
  if (s == "z") return rover::Coeffs::Z;
  if (s == "gf2") return rover::Coeffs::GF2;
  if (s == "q") return rover::Coeffs::Q;
  rover::fail(rover::Errc::parse_error, "coeffs must be z, gf2 or q");
}

std::string element_text(const rover::GroupoidElement& g) {
  std::ostringstream os;
  os << "f1=[";
  for (int t = 0; t < g.f1.roots(); ++t) {
    if (t) os << " | ";
    for (int i = 0; i < g.f1.tree(t).leaf_count(); ++i) {
      if (i) os << ",";
      const std::string& a = g.f1.tree(t).leaf(i);
      os << (a.empty() ? "^" : a);
    }
  }
  os << "] alpha=(";
  for (int i = 0; i < g.alpha.size(); ++i) {
    if (i) os << " ";
    os << g.alpha(i) + 1;
  }
  os << ") labels=";
  for (rover::Klein k : g.labels) os << rover::klein_char(k);
  os << " f2=[";
  for (int t = 0; t < g.f2.roots(); ++t) {
    if (t) os << " | ";
    for (int i = 0; i < g.f2.tree(t).leaf_count(); ++i) {
      if (i) os << ",";
      const std::string& a = g.f2.tree(t).leaf(i);
      os << (a.empty() ? "^" : a);
    }
  }
  os << "]";
  return os.str();
}

json record_to_json(const rover::ContractionRecord& r) {
  json j;
  switch (r.kind) {
    case rover::ContractionKind::Pair: j["kind"] = "pair"; break;
    case rover::ContractionKind::PairSigma: j["kind"] = "pair_sigma"; break;
    case rover::ContractionKind::Triple: j["kind"] = "triple"; break;
  }
  json idx = json::array();
  for (int i : r.indices) idx.push_back(i + 1);
  j["indices"] = std::move(idx);
  std::string labels;
  for (rover::Klein k : r.labels) labels += rover::klein_char(k);
  j["labels"] = labels;
  json sup = json::array();
  for (int i : r.support) sup.push_back(i + 1);
  j["support"] = std::move(sup);
  j["vertex"] = rover::element_to_json(r.vertex.rep());
  return j;
}

std::string record_text(const rover::ContractionRecord& r) {
  std::ostringstream os;
  switch (r.kind) {
    case rover::ContractionKind::Pair: os << "pair"; break;
    case rover::ContractionKind::PairSigma: os << "pair_sigma"; break;
    case rover::ContractionKind::Triple: os << "triple"; break;
  }
  os << " (";
  for (size_t i = 0; i < r.indices.size(); ++i) {
    if (i) os << ",";
    os << r.indices[i] + 1;
  }
  os << ") labels=";
  for (rover::Klein k : r.labels) os << rover::klein_char(k);
  os << " rank=" << r.vertex.rank();
  return os.str();
}

rover::FlagGraph graph_from_json(const json& j) {
  rover::require(j.contains("n") && j.contains("edges"), rover::Errc::parse_error,
                 "graph JSON needs n and edges");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    rover::require(e.is_array() && e.size() == 2, rover::Errc::parse_error,
                   "edges must be [i,j] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return rover::FlagGraph(j.at("n").get<int>(), std::move(edges));
}

// Reads back the undirected DOT subset we emit: "nI;" declarations and "nA -- nB;" edges.
rover::FlagGraph graph_from_dot(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  long long prev = -1;
  bool dash = false;
  for (size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == 'n' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      int id = std::stoi(text.substr(i + 1, j - i - 1));
      n = std::max(n, id + 1);
      if (dash && prev >= 0) {
        edges.emplace_back(static_cast<int>(prev), id);
        prev = -1;
      } else {
        prev = id;
      }
      dash = false;
      i = j;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      dash = prev >= 0;
      i += 2;
    } else if (c == '[') {
      while (i < text.size() && text[i] != ']') ++i;
    } else {
      if (c == ';' || c == '\n') dash = false;
      ++i;
    }
  }
  rover::require(n > 0, rover::Errc::parse_error, "no nodes found in DOT input");
  return rover::FlagGraph(n, std::move(edges));
}

json betti_to_json(const rover::BettiProfile& p) {
  json j;
  j["coeffs"] = p.coeffs == rover::Coeffs::Z ? "z" : (p.coeffs == rover::Coeffs::GF2 ? "gf2" : "q");
  j["exact"] = p.exact;
  j["betti_minus1"] = p.betti_minus1;
  j["betti"] = p.betti;
  json tors = json::array();
  for (const auto& t : p.torsion) tors.push_back(t);
  j["torsion"] = std::move(tors);
  return j;
}

std::string betti_text(const rover::BettiProfile& p) {
  std::ostringstream os;
  os << "b~(-1)=" << p.betti_minus1;
  for (size_t d = 0; d < p.betti.size(); ++d) {
    os << " b~(" << d << ")=" << p.betti[d];
    if (d < p.torsion.size() && !p.torsion[d].empty()) {
      os << " torsion(";
      for (size_t i = 0; i < p.torsion[d].size(); ++i) {
        if (i) os << ",";
        os << p.torsion[d][i];
      }
      os << ")";
    }
  }
  if (!p.exact) os << " [rank fallback, torsion not computed]";
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"exact computations in the binary tree rearrangement group with nucleus decorations"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "random seed");
  app.add_option("--cap-depth", opt.cap_depth, "contraction depth cap");
  app.add_option("--cap-simplices", opt.cap_simplices, "simplex count cap");
  app.add_option("--coeffs", opt.coeffs, "homology coefficients: z, gf2, q")
      ->check(CLI::IsMember({"z", "gf2", "q"}));
  app.add_option("--out", opt.out, "output format: text, json, dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::string expr1, expr2, word, graph_file, ground_arg;
  int link_rank = 0, homology_dim = -1, max_dim = 2;
  int fuzz_seeds = 20, fuzz_extras = 12, fuzz_m = 2, fuzz_k = 1;
  std::string elem_action = "reduce", input_arg, contract_labels = "all";
  int iterate = 1;

  CLI::App* c_elem = app.add_subcommand("elem", "parse an expression and print the element");
  c_elem->add_option("expr", expr1, "group element expression")->required();
  c_elem->add_option("action", elem_action, "reduce, invert, eval or json")
      ->check(CLI::IsMember({"reduce", "invert", "eval", "json"}));
  c_elem->add_option("--input", input_arg, "evaluation input ROOT:BITS (1-based root)");
  c_elem->add_option("--iterate", iterate, "apply the element this many times under eval");

  CLI::App* c_eq = app.add_subcommand("eq", "compare two expressions");
  c_eq->add_option("expr1", expr1)->required();
  c_eq->add_option("expr2", expr2)->required();

  CLI::App* c_nf = app.add_subcommand("grig-nf", "tree normal form of a decoration word");
  c_nf->add_option("word", word, "word over s,b,c,d (or e)")->required();

  CLI::App* c_spl = app.add_subcommand("vertex-splittings", "splittings of the vertex of EXPR");
  c_spl->add_option("expr", expr1)->required();

  CLI::App* c_con =
      app.add_subcommand("vertex-contractions", "contractions of the vertex of EXPR");
  c_con->add_option("expr", expr1)->required();
  c_con->add_option("--contract-labels", contract_labels, "all or trivial")
      ->check(CLI::IsMember({"all", "trivial"}));

  CLI::App* c_link = app.add_subcommand("link", "descending link of the rank-N base vertex");
  c_link->add_option("rank", link_rank, "rank of the base vertex")->required();
  c_link->add_option("--ground", ground_arg, "check the k-ground criterion for this k");
  c_link->add_option("--homology", homology_dim, "reduced homology through this dimension");
  c_link->add_option("--contract-labels", contract_labels, "all or trivial")
      ->check(CLI::IsMember({"all", "trivial"}));

  CLI::App* c_hom = app.add_subcommand("homology", "homology of the flag complex of a graph");
  c_hom->add_option("--graph", graph_file, "graph JSON file, or - for stdin")->required();
  c_hom->add_option("--max-dim", max_dim, "top homology dimension");

  CLI::App* c_fuzz =
      app.add_subcommand("fuzz-grounded", "randomized check of the grounding criterion");
  c_fuzz->add_option("--seeds", fuzz_seeds, "number of seeded random complexes");
  c_fuzz->add_option("--extras", fuzz_extras, "vertices outside the ground");
  c_fuzz->add_option("--m", fuzz_m);
  c_fuzz->add_option("--k", fuzz_k);

  for (CLI::App* sc : {c_elem, c_eq, c_nf, c_spl, c_con, c_link, c_hom, c_fuzz})
    sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (*c_elem) {
    rover::GroupoidElement g = rover::parse_expression(expr1);
    if (elem_action == "eval") {
      auto colon = input_arg.find(':');
      rover::require(colon != std::string::npos, rover::Errc::parse_error,
                     "eval needs --input ROOT:BITS");
      rover::require(iterate >= 1, rover::Errc::parse_error, "--iterate must be positive");
      int root = std::stoi(input_arg.substr(0, colon)) - 1;
      std::string bits = input_arg.substr(colon + 1);
      rover::GrigWord tail;
      for (int t = 0; t < iterate; ++t) {
        rover::EvalResult r = rover::evaluate(g, root, bits);
        root = r.root;
        bits = std::move(r.bits);
        tail = rover::word_reduce(r.residual.concat(tail));
      }
      std::string residual = rover::word_is_identity(tail, opt.cap_depth) ? "e" : tail.letters;
      if (opt.out == "json") {
        json j;
        j["root"] = root + 1;
        j["bits"] = bits;
        j["residual"] = residual;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << root + 1 << ":" << bits << " residual=" << residual << "\n";
      }
      return 0;
    }
    if (elem_action == "invert") g = rover::invert(g);
    if (elem_action == "reduce") g = rover::reduce(g);
    if (opt.out == "text" && elem_action != "json") {
      std::cout << element_text(g) << "\n";
    } else {
      std::cout << rover::element_to_json(g).dump(2) << "\n";
    }
    return 0;
  }

  if (*c_eq) {
    rover::GroupoidElement a = rover::parse_expression(expr1);
    rover::GroupoidElement b = rover::parse_expression(expr2);
    bool eq = rover::equals(a, b);
    std::cout << (eq ? "equal" : "different") << "\n";
    return eq ? 0 : 1;
  }

  if (*c_nf) {
    rover::NucleusForm nf = rover::word_to_nucleus_form(rover::parse_grig_word(word),
                                                        opt.cap_depth);
    if (opt.out == "json") {
      json j;
      j["tree"] = rover::tree_to_json(nf.tree);
      json alpha = json::array();
      for (int i = 0; i < nf.alpha.size(); ++i) alpha.push_back(nf.alpha(i) + 1);
      j["alpha"] = std::move(alpha);
      std::string labels;
      for (rover::Klein k : nf.labels) labels += rover::klein_char(k);
      j["labels"] = labels;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "tree=[";
      for (int i = 0; i < nf.tree.leaf_count(); ++i) {
        if (i) std::cout << ",";
        const std::string& a = nf.tree.leaf(i);
        std::cout << (a.empty() ? "^" : a);
      }
      std::cout << "] alpha=(";
      for (int i = 0; i < nf.alpha.size(); ++i) {
        if (i) std::cout << " ";
        std::cout << nf.alpha(i) + 1;
      }
      std::cout << ") labels=";
      for (rover::Klein k : nf.labels) std::cout << rover::klein_char(k);
      std::cout << "\n";
    }
    return 0;
  }

  if (*c_spl) {
    rover::Vertex v(rover::parse_expression(expr1));
    auto singles = rover::splittings(v);
    auto doubles = rover::double_splittings(v);
    if (opt.out == "json") {
      json j;
      json js = json::array();
      for (const auto& s : singles) js.push_back(rover::element_to_json(s.rep()));
      j["splittings"] = std::move(js);
      json jd = json::array();
      for (const auto& d : doubles) jd.push_back(rover::element_to_json(d.rep()));
      j["double_splittings"] = std::move(jd);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << singles.size() << " splittings, " << doubles.size()
                << " double splittings\n";
      for (const auto& s : singles) std::cout << "  " << element_text(s.rep()) << "\n";
      for (const auto& d : doubles) std::cout << "  " << element_text(d.rep()) << "\n";
    }
    return 0;
  }

  if (*c_con) {
    rover::Vertex v(rover::parse_expression(expr1));
    auto records = rover::contractions(v, contract_labels == "all");
    if (opt.out == "json") {
      json j = json::array();
      for (const auto& r : records) j.push_back(record_to_json(r));
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << records.size() << " contractions\n";
      for (const auto& r : records) std::cout << "  " << record_text(r) << "\n";
    }
    return 0;
  }

  if (*c_link) {
    rover::Vertex v = rover::spine_vertex(link_rank);
    rover::DescendingLink link = rover::descending_link(v, contract_labels == "all");
    rover::FlagGraph graph = link.graph();
    if (opt.out == "dot") {
      std::vector<std::string> labels;
      labels.reserve(link.records.size());
      for (const auto& r : link.records) labels.push_back(record_text(r));
      std::cout << rover::graph_to_dot(graph, labels);
      return 0;
    }
    json j;
    j["rank"] = link_rank;
    j["vertices"] = static_cast<long long>(link.records.size());
    j["edges"] = static_cast<long long>(link.edges.size());
    bool grounded = false;
    int ground_dim = 0;
    if (!ground_arg.empty()) {
      int k = std::stoi(ground_arg);
      std::vector<int> where = rover::locate_ground(link, v, k);
      ground_dim = static_cast<int>(where.size()) - 1;  // 3k
      grounded = rover::is_k_ground(graph, where, 3);
      j["ground"] = grounded;
      j["ground_simplex_dim"] = ground_dim;
      j["miss_bound"] = 3;
    }
    if (homology_dim >= 0) {
      rover::SimplicialComplex complex =
          rover::flag_complex(graph, homology_dim + 1, opt.cap_simplices);
      rover::BettiProfile profile =
          rover::reduced_betti(complex, homology_dim, coeffs_of(opt.coeffs));
      j["homology"] = betti_to_json(profile);
      if (opt.out != "json") {
        std::cout << "link rank " << link_rank << ": " << link.records.size() << " vertices, "
                  << link.edges.size() << " edges\n";
        if (!ground_arg.empty())
          std::cout << "grounded: " << (grounded ? "true" : "false") << " (" << ground_dim
                    << ",3)\n";
        std::cout << betti_text(profile) << "\n";
        return 0;
      }
    }
    if (opt.out == "json") {
      json jr = json::array();
      for (const auto& r : link.records) jr.push_back(record_to_json(r));
      j["records"] = std::move(jr);
      json je = json::array();
      for (const auto& [a, b] : link.edges) je.push_back(json::array({a, b}));
      j["graph_edges"] = std::move(je);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "link rank " << link_rank << ": " << link.records.size() << " vertices, "
                << link.edges.size() << " edges\n";
      if (!ground_arg.empty())
        std::cout << "grounded: " << (grounded ? "true" : "false") << " (" << ground_dim
                  << ",3)\n";
    }
    return 0;
  }

  if (*c_hom) {
    std::string text;
    if (graph_file == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      std::ifstream in(graph_file);
      rover::require(in.good(), rover::Errc::parse_error, "cannot open graph file");
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    size_t first = text.find_first_not_of(" \t\r\n");
    rover::require(first != std::string::npos, rover::Errc::parse_error, "empty graph input");
    rover::FlagGraph g =
        text[first] == '{' ? graph_from_json(json::parse(text)) : graph_from_dot(text);
    if (opt.out == "dot") {
      std::cout << rover::graph_to_dot(g);
      return 0;
    }
    rover::SimplicialComplex complex = rover::flag_complex(g, max_dim + 1, opt.cap_simplices);
    rover::BettiProfile profile = rover::reduced_betti(complex, max_dim, coeffs_of(opt.coeffs));
    if (opt.out == "json") {
      std::cout << betti_to_json(profile).dump(2) << "\n";
    } else {
      std::cout << betti_text(profile) << "\n";
    }
    return 0;
  }

  if (*c_fuzz) {
    int consistent = 0;
    for (int t = 0; t < fuzz_seeds; ++t) {
      rover::FlagGraph g =
          rover::random_grounded_complex(opt.seed + static_cast<uint64_t>(t), fuzz_extras,
                                         fuzz_m, fuzz_k);
      rover::GroundedReport report =
          rover::grounded_connectivity_check(g, fuzz_m, fuzz_k, {}, opt.cap_simplices);
      if (!report.hypothesis_holds || report.conclusion_holds) ++consistent;
    }
    std::cout << consistent << "/" << fuzz_seeds << " consistent\n";
    return consistent == fuzz_seeds ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rover::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
