// hamspan: generators, verifiers and Monte Carlo experiments around
// Hamilton-generated cycle spaces.
//
// Machine-readable output (JSON or CSV) goes to stdout; the resolved run
// configuration and any prose go to stderr.

#include <cstdlib>
#include <limits>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamspan/cycle_space.hpp"
#include "hamspan/experiments.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/hamilton.hpp"
#include "hamspan/rng.hpp"
#include "hamspan/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hamspan;

constexpr uint64_t kDefaultSeed = 0x68616d7370616eull;  // "hamspan"

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitUnknown = 3;

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("HAMSPAN_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // experiments module falls back to hardware concurrency
}

void print_config(const json& config) {
  std::cerr << config.dump() << std::endl;
}

json status_to_json(const HamStatus& s) {
  return json{{"kind", to_string(s.kind)},
              {"cycle_space_dim", s.cycle_space_dim},
              {"rank", s.rank},
              {"quotient", s.quotient},
              {"circuits_examined", s.circuits_examined},
              {"early_stopped", s.early_stopped},
              {"completed", s.completed}};
}

json matrix_to_json(const std::array<std::array<uint8_t, 7>, 14>& matrix) {
  json rows = json::array();
  for (const auto& row : matrix) {
    std::string bits;
    for (uint8_t b : row) bits += b ? '1' : '0';
    rows.push_back(bits);
  }
  return rows;
}

int cmd_verify_k43() {
  print_config(json{{"command", "verify-k43"}, {"rng", rng::kAlgorithm}});
  Prop4Report report = verify_proposition4();
  Graph g = gen_k_hat(4);
  json out{{"command", "verify-k43"},
           {"graph", {{"family", "khat"}, {"s", 4}, {"n", g.vertex_count()}, {"m", g.edge_count()}}},
           {"seven_circuits_valid", report.seven_circuits_valid},
           {"matrix", matrix_to_json(report.matrix)},
           {"matrix_matches_reference", report.matrix_matches_reference},
           {"rank", report.rank},
           {"total_hamilton_circuits", report.total_hamilton_circuits},
           {"quotient", report.quotient},
           {"full_span", report.full_span},
           {"all_ok", report.all_ok()}};
  std::cout << out.dump(2) << std::endl;
  return report.all_ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_conjecture(int s, long long cap) {
  print_config(json{{"command", "conjecture"}, {"s", s}, {"cap", cap}, {"rng", rng::kAlgorithm}});
  ConjectureResult result = test_conjecture5(s, cap);
  json out{{"command", "conjecture"},
           {"s", s},
           {"n", 2 * s},
           {"m", s * (s - 1) + 2},
           {"status", status_to_json(result.status)},
           {"total_circuits", result.total_circuits},
           {"wall_ms", result.wall_ms}};
  std::cout << out.dump(2) << std::endl;
  return result.status.kind == HamStatus::Kind::Unknown ? kExitUnknown : kExitOk;
}

int cmd_status(const std::string& input, long long cap) {
  print_config(json{{"command", "status"}, {"input", input}, {"cap", cap}});
  std::ifstream file(input);
  if (!file) {
    std::cerr << "cannot open " << input << '\n';
    return kExitBadArguments;
  }
  Graph g = read_graph_text(file);
  StructuralReport s = structural_predicates(g);
  HamStatus h = hamilton_generated_status(g, cap);
  json structural{{"min_degree", s.min_degree},
                  {"is_forest", s.is_forest},
                  {"is_circuit", s.is_circuit},
                  {"is_connected", s.is_connected},
                  {"is_bipartite", s.is_bipartite},
                  {"has_triangle", s.has_triangle},
                  {"degree2_vertices", s.degree2_vertices}};
  json out{{"command", "status"},
           {"n", g.vertex_count()},
           {"m", g.edge_count()},
           {"structural", structural},
           {"hamilton", status_to_json(h)}};
  std::cout << out.dump(2) << std::endl;
  return h.kind == HamStatus::Kind::Unknown ? kExitUnknown : kExitOk;
}

int cmd_gen(const std::string& family, int s, int n, double p, uint64_t seed,
            const std::string& output) {
  Graph g;
  json config{{"command", "gen"}, {"family", family}};
  if (family == "khat") {
    config["s"] = s;
    g = gen_k_hat(s);
  } else if (family == "csq") {
    config["n"] = n;
    g = gen_square_cycle(n);
  } else if (family == "gnp") {
    config["n"] = n;
    config["p"] = p;
    config["seed"] = seed;
    config["rng"] = rng::kAlgorithm;
    g = gen_gnp(n, p, seed);
  } else {
    std::cerr << "unknown family: " << family << '\n';
    return kExitBadArguments;
  }
  config["output"] = output.empty() ? "-" : output;
  print_config(config);
  if (output.empty()) {
    write_graph_text(g, std::cout);
  } else {
    std::ofstream file(output);
    if (!file) {
      std::cerr << "cannot open " << output << '\n';
      return kExitBadArguments;
    }
    write_graph_text(g, file);
  }
  return kExitOk;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

struct SweepArgs {
  std::string ns;
  std::string ps;
  std::string formula;
  double eps = std::numeric_limits<double>::quiet_NaN();
  std::string property = "hamilton_generated_full";
  long long trials = 100;
  uint64_t seed = kDefaultSeed;
  long long cap = kDefaultCircuitCap;
  int max_exact_n = 16;
  int threads = 0;
  std::string out_path;
};

int cmd_sweep(const SweepArgs& args) {
  int modes = int(!args.ps.empty()) + int(!args.formula.empty()) + int(!std::isnan(args.eps));
  if (modes != 1) {
    std::cerr << "exactly one of --p, --formula, --eps is required\n";
    return kExitBadArguments;
  }
  std::vector<TrialConfig> configs;
  std::vector<int> n_values = parse_int_list(args.ns);
  std::vector<PSpec> p_specs;
  if (!args.ps.empty()) {
    for (double p : parse_double_list(args.ps)) p_specs.push_back(PSpec::explicit_p(p));
  } else if (!args.formula.empty()) {
    auto comma = args.formula.find(',');
    if (comma == std::string::npos) {
      std::cerr << "--formula expects \"k,c\"\n";
      return kExitBadArguments;
    }
    int k = std::stoi(args.formula.substr(0, comma));
    double c = std::stod(args.formula.substr(comma + 1));
    p_specs.push_back(PSpec::log_formula(k, c));
  } else {
    p_specs.push_back(PSpec::power_law(args.eps));
  }
  for (int n : n_values) {
    for (const PSpec& spec : p_specs) {
      TrialConfig config;
      config.property = args.property;
      config.n = n;
      config.p_spec = spec;
      config.trials = args.trials;
      config.master_seed = args.seed;
      config.limits.cap = args.cap;
      config.limits.max_exact_n = args.max_exact_n;
      config.threads = resolve_threads(args.threads);
      configs.push_back(config);
    }
  }

  json config_json{{"command", "sweep"},
                   {"property", args.property},
                   {"n", args.ns},
                   {"trials", args.trials},
                   {"seed", args.seed},
                   {"rng", rng::kAlgorithm},
                   {"cap", args.cap},
                   {"max_exact_n", args.max_exact_n},
                   {"rows", configs.size()},
                   {"out", args.out_path.empty() ? "-" : args.out_path}};
  if (!args.ps.empty()) config_json["p"] = args.ps;
  if (!args.formula.empty()) config_json["formula"] = args.formula;
  if (!std::isnan(args.eps)) config_json["eps"] = args.eps;
  print_config(config_json);

  // Warn once about clamped formula probabilities.
  for (const auto& config : configs) {
    bool clamped = false;
    config.p_spec.resolve(config.n, &clamped);
    if (clamped)
      std::cerr << "warning: p formula left [0,1] at n=" << config.n << "; clamped\n";
  }

  if (args.out_path.empty()) {
    sweep(configs, std::cout);
  } else {
    std::ofstream file(args.out_path);
    if (!file) {
      std::cerr << "cannot open " << args.out_path << '\n';
      return kExitBadArguments;
    }
    sweep(configs, file);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton-generated cycle space toolkit"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify-k43", "reproduce the K^{4-hat,3} certificate");
  (void)verify;

  auto* conjecture = app.add_subcommand("conjecture", "exhaustive K^{s-hat,s-1} span check");
  int conj_s = 4;
  long long conj_cap = kDefaultCircuitCap;
  conjecture->add_option("--s", conj_s, "family parameter s >= 3")->required();
  conjecture->add_option("--cap", conj_cap, "circuit visit cap");

  auto* status = app.add_subcommand("status", "structural + Hamilton-span report for a graph file");
  std::string status_input;
  long long status_cap = kDefaultCircuitCap;
  status->add_option("--input", status_input, "graph file (\"n m\" + edge lines)")->required();
  status->add_option("--cap", status_cap, "circuit visit cap");

  auto* gen = app.add_subcommand("gen", "write a generated graph");
  std::string gen_family;
  int gen_s = 4, gen_n = 8;
  double gen_p = 0.5;
  uint64_t gen_seed = kDefaultSeed;
  std::string gen_output;
  gen->add_option("--family", gen_family, "khat | csq | gnp")->required();
  gen->add_option("--s", gen_s, "khat: family parameter");
  gen->add_option("--n", gen_n, "csq/gnp: vertex count");
  gen->add_option("--p", gen_p, "gnp: edge probability");
  gen->add_option("--seed", gen_seed, "gnp: sampler seed");
  gen->add_option("--output", gen_output, "output path (default stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo property estimation over G(n,p)");
  SweepArgs sweep_args;
  sweep_cmd->add_option("--n", sweep_args.ns, "vertex counts, comma separated")->required();
  sweep_cmd->add_option("--p", sweep_args.ps, "edge probabilities, comma separated");
  sweep_cmd->add_option("--formula", sweep_args.formula,
                        "\"k,c\" for p = (log n + k log log n + c)/n");
  sweep_cmd->add_option("--eps", sweep_args.eps, "p = n^(-1/2+eps)");
  sweep_cmd->add_option("--property", sweep_args.property, "predicate name");
  sweep_cmd->add_option("--trials", sweep_args.trials, "trials per row");
  sweep_cmd->add_option("--seed", sweep_args.seed, "master seed");
  sweep_cmd->add_option("--cap", sweep_args.cap, "circuit visit cap per trial");
  sweep_cmd->add_option("--max-exact-n", sweep_args.max_exact_n,
                        "size limit for exact Hamilton predicates");
  sweep_cmd->add_option("--threads", sweep_args.threads, "worker threads (env HAMSPAN_THREADS)");
  sweep_cmd->add_option("--out", sweep_args.out_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    if (verify->parsed()) return cmd_verify_k43();
    if (conjecture->parsed()) return cmd_conjecture(conj_s, conj_cap);
    if (status->parsed()) return cmd_status(status_input, status_cap);
    if (gen->parsed())
      return cmd_gen(gen_family, gen_s, gen_n, gen_p, gen_seed, gen_output);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
  } catch (const enumeration_limit& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return kExitUnknown;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArguments;
  }
  return kExitBadArguments;
}
