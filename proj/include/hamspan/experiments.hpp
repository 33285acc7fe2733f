#ifndef HAMSPAN_EXPERIMENTS_HPP
#define HAMSPAN_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamspan/graph.hpp"
#include "hamspan/hamilton.hpp"

namespace hamspan {

// Three-valued trial outcome; Unknown marks trials whose exact predicate
// exceeded its enumeration limits. Unknowns are reported separately and
// never folded into successes.
enum class Tri : uint8_t { False = 0, True = 1, Unknown = 2 };

struct PredicateLimits {
  int max_exact_n = 16;                 // exact Hamilton predicates refuse larger n
  long long cap = kDefaultCircuitCap;   // visit cap inside one trial
};

using Predicate = std::function<Tri(const Graph&, const PredicateLimits&)>;

// Registry names:
//   min_degree_ge:K          minimum degree >= K
//   min_degree_eq:K          minimum degree == K
//   exists_degree2           some vertex has degree exactly 2
//   degree2_deletions_bipartite   G-v bipartite for every degree-2 vertex v
//   contains_triangle
//   all_deletions_contain_triangle   G-v has a triangle for every v
//   hamiltonian
//   hamilton_generated_full
//   quotient_dim_le:D        Hamilton-span quotient dimension <= D
//   near_hamilton_span_full
//   hamilton_connected
Predicate lookup_predicate(const std::string& name);
std::vector<std::string> predicate_names();

// p(n) = (log n + k log log n + c) / n, natural logs, clamped into [0,1].
// n >= 3 (log log n must be positive).
double threshold_p(int n, int k, double c);
// p(n) = n^(-1/2 + eps).
double powerlaw_p(int n, double eps);
// Limit of P[min degree = k+1] at the threshold formula: exp(-exp(-c/k!)).
double limit_min_degree(int k, double c);

struct PSpec {
  enum class Kind { Explicit, LogFormula, PowerLaw };
  Kind kind = Kind::Explicit;
  double p = 0.0;     // Explicit
  int k = 0;          // LogFormula
  double c = 0.0;     // LogFormula
  double eps = 0.0;   // PowerLaw

  static PSpec explicit_p(double p);
  static PSpec log_formula(int k, double c);
  static PSpec power_law(double eps);
  // Resolved probability for a given n; clamped is set when the formula
  // left [0,1].
  double resolve(int n, bool* clamped = nullptr) const;
};

struct TrialConfig {
  std::string property;
  int n = 0;
  PSpec p_spec;
  long long trials = 0;
  uint64_t master_seed = 0;
  PredicateLimits limits;
  int threads = 0;  // 0 = hardware concurrency
};

struct SweepRecord {
  std::string property;
  int n = 0;
  double p = 0.0;
  long long trials = 0;
  long long successes = 0;
  long long unknown = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  uint64_t seed = 0;
  double wall_ms = 0.0;
  bool p_clamped = false;
};

struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};
// 95% Wilson score interval; well-behaved at p_hat near 0 or 1.
WilsonInterval wilson95(long long successes, long long trials);

// Runs `trials` independent G(n,p) samples with per-trial seeds derived
// from the master seed, evaluating the named predicate. Deterministic for
// a fixed config (wall_ms aside) regardless of thread count.
SweepRecord estimate(const TrialConfig& config);

// CSV schema: property,n,p,trials,successes,unknown,p_hat,ci_low,ci_high,
// seed,wall_ms. Floats use 6 significant digits. One record per config,
// emitted in input order, flushed per row.
std::string csv_header();
std::string csv_row(const SweepRecord& record);
void sweep(const std::vector<TrialConfig>& configs, std::ostream& out);

}  // namespace hamspan

#endif
