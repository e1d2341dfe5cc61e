// Command-line driver: graph generation, period-matrix computation,
// quasi-tree listings, and the exact verification suites.
//
// Exit codes: 0 = success / all checks passed, 1 = at least one check
// failed, 2 = input or usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpm/bundle.hpp"
#include "dpm/exactla.hpp"
#include "dpm/graphio.hpp"
#include "dpm/homology.hpp"
#include "dpm/period.hpp"
#include "dpm/quasitree.hpp"
#include "dpm/report.hpp"
#include "dpm/ribbon.hpp"

namespace {

using namespace dpm;

struct InputOptions {
  std::string file;
  std::string gen;
  std::string weights_csv;
  bool random = false;
  std::uint64_t seed = 1;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("file", in.file, "graph file (see docs/graph-format.md)");
  cmd->add_option("--gen", in.gen,
                  "built-in family: bouquet:G or grid:MxN");
  cmd->add_option("--weights", in.weights_csv,
                  "comma-separated rational weights, e.g. 2,3 or 1/2,5/3");
  cmd->add_flag("--random-weights", in.random,
                "random weights p/q with p, q in 1..10");
  cmd->add_option("--seed", in.seed, "seed for --random-weights");
}

std::vector<Rat> parse_weight_list(const std::string& csv) {
  std::vector<Rat> out;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) {
    Rat r;
    if (!rat_from_string(item, r) || !(r > 0))
      throw BadParams("bad weight '" + item + "'");
    out.push_back(r);
  }
  return out;
}

RibbonGraph generate(const std::string& spec, std::vector<Rat> weights) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw BadParams("generator spec must look like bouquet:2 or grid:2x3");
  const std::string family = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  try {
    if (family == "bouquet") return bouquet(std::stoi(args), std::move(weights));
    if (family == "grid") {
      const auto x = args.find('x');
      if (x == std::string::npos) throw BadParams("grid expects MxN");
      return torus_grid(std::stoi(args.substr(0, x)),
                        std::stoi(args.substr(x + 1)), std::move(weights));
    }
  } catch (const std::invalid_argument&) {
    throw BadParams("bad generator parameters in '" + spec + "'");
  } catch (const std::out_of_range&) {
    throw BadParams("bad generator parameters in '" + spec + "'");
  }
  throw BadParams("unknown family '" + family + "'");
}

RibbonGraph load_graph(const InputOptions& in) {
  if (in.file.empty() == in.gen.empty())
    throw BadParams("provide exactly one of: a graph file, or --gen");
  if (in.random && !in.weights_csv.empty())
    throw BadParams("--weights and --random-weights are exclusive");
  std::vector<Rat> weights;
  if (!in.weights_csv.empty()) weights = parse_weight_list(in.weights_csv);

  RibbonGraph g = !in.gen.empty() ? generate(in.gen, std::move(weights))
                                  : parse_graph_file(in.file);
  if (in.random)
    g = g.with_weights(random_weights(g.num_edges(), in.seed));
  else if (in.gen.empty() && !in.weights_csv.empty())
    g = g.with_weights(std::move(weights));
  return g;
}

void print_matrix(std::ostream& os, const std::string& label,
                  const RatMatrix& m) {
  os << label << " (" << m.rows() << "x" << m.cols() << ")\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << " ";
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << " " << rat_to_string(m(i, j));
    os << "\n";
  }
}

nlohmann::ordered_json matrix_json(const RatMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(rat_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string chain_to_string(const Chain1& c) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index e = 0; e < c.coeffs.size(); ++e) {
    if (c.coeffs(e) == 0) continue;
    if (!first) os << " ";
    first = false;
    os << (c.side == Side::dual ? "e*" : "e") << e << ":" << c.coeffs(e);
  }
  if (first) os << "0";
  return os.str();
}

int cmd_gen(const InputOptions& in, const std::string& out_path) {
  const RibbonGraph g = load_graph(in);
  const std::string text = serialize_graph(g);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw BadParams("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

int cmd_info(const InputOptions& in, bool json) {
  const RibbonGraph g = load_graph(in);
  const FaceSet fs = trace_faces(g);
  const int gen = genus(g);
  const HomologyFrame frame = symplectic_frame(g);
  if (json) {
    nlohmann::ordered_json j;
    j["name"] = g.name();
    j["vertices"] = g.num_vertices();
    j["edges"] = g.num_edges();
    j["faces"] = fs.num_faces();
    j["genus"] = gen;
    j["tree"] = frame.tc.T0;
    j["cotree"] = frame.tc.C0;
    j["leftover"] = frame.tc.R;
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& c : frame.basis) basis.push_back(chain_to_string(c));
    nlohmann::ordered_json dual_basis = nlohmann::ordered_json::array();
    for (const auto& c : frame.dual_basis)
      dual_basis.push_back(chain_to_string(c));
    j["basis"] = std::move(basis);
    j["dual_basis"] = std::move(dual_basis);
    j["M"] = matrix_json(to_rat(frame.M));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "name: " << g.name() << "\n"
            << "vertices: " << g.num_vertices() << "\nedges: " << g.num_edges()
            << "\nfaces: " << fs.num_faces() << "\ngenus: " << gen << "\n";
  std::cout << "tree-cotree: |T0|=" << frame.tc.T0.size()
            << " |R|=" << frame.tc.R.size() << " |C0|=" << frame.tc.C0.size()
            << "\n";
  for (size_t i = 0; i < frame.basis.size(); ++i)
    std::cout << "gamma_" << i + 1 << ": " << chain_to_string(frame.basis[i])
              << "\n";
  for (size_t i = 0; i < frame.dual_basis.size(); ++i)
    std::cout << "gamma^" << i + 1 << ": "
              << chain_to_string(frame.dual_basis[i]) << "\n";
  print_matrix(std::cout, "M^t", to_rat(IntMatrix(frame.M.transpose())));
  return 0;
}

int cmd_period(const InputOptions& in, bool json) {
  const RibbonGraph g = load_graph(in);
  const HomologyFrame frame = symplectic_frame(g);
  if (frame.genus < 1) throw BadParams("period requires genus >= 1");
  const PeriodData pd = omega_l(g, frame);
  const WpPotential wp = wp_potential(g, frame);
  const NormalizedPeriodBlocks blocks = normalized_period_blocks(pd);
  if (json) {
    nlohmann::ordered_json j;
    j["name"] = g.name();
    j["genus"] = frame.genus;
    j["tree_sum"] = rat_to_string(pd.tree_sum);
    j["OmegaL"] = matrix_json(pd.OmegaL);
    j["L"] = matrix_json(pd.L);
    j["wp_potential"] = rat_to_string(wp.product);
    j["wp_potential_log"] = wp.log_value;
    j["ImPi"] = matrix_json(blocks.ImPi);
    j["RePi"] = matrix_json(blocks.RePi);
    j["block_residual"] = matrix_json(blocks.residual);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "name: " << g.name() << "\ngenus: " << frame.genus
            << "\ntree_sum: " << rat_to_string(pd.tree_sum) << "\n";
  print_matrix(std::cout, "OmegaL", pd.OmegaL);
  print_matrix(std::cout, "L", pd.L);
  std::cout << "wp_potential: " << rat_to_string(wp.product)
            << "  (log ~ " << wp.log_value << ")\n";
  print_matrix(std::cout, "Im Pi", blocks.ImPi);
  print_matrix(std::cout, "Re Pi", blocks.RePi);
  print_matrix(std::cout, "block residual", blocks.residual);
  return 0;
}

int cmd_quasitrees(const InputOptions& in, int k, int max_edges, bool json) {
  const RibbonGraph g = load_graph(in);
  const HomologyFrame frame = symplectic_frame(g);
  const auto qts = enumerate_quasitrees(g, frame, k, max_edges);

  // All size-k label subsets, for the det table.
  std::vector<std::vector<int>> sets;
  {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(cur.size()) == k) {
        sets.push_back(cur);
        return;
      }
      for (int i = start; i <= 2 * frame.genus; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
  }

  auto set_str = [](const std::vector<int>& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
  };

  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& qt : qts) {
      nlohmann::ordered_json item;
      item["edges"] = qt.edges;
      item["inner_tree"] = qt.inner_tree;
      item["class_matrix"] = matrix_json(to_rat(qt.class_matrix));
      nlohmann::ordered_json dets;
      for (const auto& I : sets) {
        std::ostringstream v;
        v << t_det(qt, I);
        dets[set_str(I)] = v.str();
      }
      item["det_T_I"] = std::move(dets);
      arr.push_back(std::move(item));
    }
    nlohmann::ordered_json j;
    j["name"] = g.name();
    j["k"] = k;
    j["count"] = qts.size();
    j["quasitrees"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << g.name() << ": " << qts.size() << " quasi-trees of rank " << k
            << "\n";
  for (const auto& qt : qts) {
    std::cout << "edges {";
    for (size_t i = 0; i < qt.edges.size(); ++i)
      std::cout << (i ? "," : "") << qt.edges[i];
    std::cout << "}  class ";
    std::cout << matrix_to_string(qt.class_matrix);
    for (const auto& I : sets)
      std::cout << "  det" << set_str(I) << "=" << t_det(qt, I);
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const InputOptions& in, const std::vector<std::string>& suites,
               bool all, int max_edges, bool json) {
  const RibbonGraph g = load_graph(in);
  const FaceSet fs = trace_faces(g);
  const HomologyFrame frame = symplectic_frame(g);
  std::vector<std::string> wanted = suites;
  if (all || wanted.empty())
    wanted = {"theorem1",     "duality",      "det-corollary", "theorem3",
              "delta-matroid", "wp-identity", "covering-components"};
  std::vector<Report> reports;
  for (const auto& s : wanted) {
    if (s == "theorem1")
      reports.push_back(verify_theorem1(g, frame, max_edges));
    else if (s == "duality")
      reports.push_back(verify_duality_all(g, frame, max_edges));
    else if (s == "det-corollary")
      reports.push_back(verify_det_corollary(g, frame, max_edges));
    else if (s == "theorem3")
      reports.push_back(verify_theorem3(g, frame));
    else if (s == "delta-matroid")
      reports.push_back(delta_matroid_check(g, frame, max_edges));
    else if (s == "wp-identity")
      reports.push_back(verify_wp_identity(g, frame, max_edges));
    else if (s == "covering-components")
      reports.push_back(verify_covering_components(g, frame, max_edges));
    else
      throw BadParams("unknown suite '" + s + "'");
  }
  if (json)
    std::cout << to_json(reports, g.name(), g.num_vertices(), g.num_edges(),
                         fs.num_faces(), genus(g));
  else
    std::cout << to_text(reports);
  for (const auto& r : reports)
    if (!r.all_pass()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete period matrices of graphs on closed surfaces"};
  app.require_subcommand(1);

  InputOptions in_gen, in_info, in_period, in_qt, in_verify;
  std::string gen_out;
  bool info_json = false, period_json = false, qt_json = false,
       verify_json = false, verify_all = false;
  int qt_k = 1;
  int qt_max_edges = 16, verify_max_edges = 16;
  std::vector<std::string> verify_suites;

  CLI::App* gen = app.add_subcommand("gen", "emit a graph file");
  add_input_flags(gen, in_gen);
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");

  CLI::App* info = app.add_subcommand("info", "embedding and homology frame");
  add_input_flags(info, in_info);
  info->add_flag("--json", info_json, "machine-readable output");

  CLI::App* period =
      app.add_subcommand("period", "period matrix and derived data");
  add_input_flags(period, in_period);
  period->add_flag("--json", period_json, "machine-readable output");

  CLI::App* qt = app.add_subcommand("quasitrees", "list k-quasi-trees");
  add_input_flags(qt, in_qt);
  qt->add_option("--k", qt_k, "homology rank k")->required();
  qt->add_option("--max-edges", qt_max_edges, "enumeration guard");
  qt->add_flag("--json", qt_json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  add_input_flags(verify, in_verify);
  verify->add_flag("--all", verify_all, "run every suite");
  verify->add_option("--suite", verify_suites,
                     "suite name (repeatable): theorem1, duality, "
                     "det-corollary, theorem3, delta-matroid, wp-identity, "
                     "covering-components");
  verify->add_option("--max-edges", verify_max_edges, "enumeration guard");
  verify->add_flag("--json", verify_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(in_gen, gen_out);
    if (info->parsed()) return cmd_info(in_info, info_json);
    if (period->parsed()) return cmd_period(in_period, period_json);
    if (qt->parsed())
      return cmd_quasitrees(in_qt, qt_k, qt_max_edges, qt_json);
    if (verify->parsed())
      return cmd_verify(in_verify, verify_suites, verify_all,
                        verify_max_edges, verify_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
