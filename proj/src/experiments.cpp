#include "hamspan/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hamspan/cycle_space.hpp"
#include "hamspan/rng.hpp"

namespace hamspan {

namespace {

Tri from_bool(bool b) { return b ? Tri::True : Tri::False; }

// G-v has a triangle for every v iff some triangle survives each single
// deletion. Any triangle T works as a certificate for all v outside T, so
// only T's own three corners need a dedicated re-check.
bool all_deletions_contain_triangle(const Graph& g) {
  if (!has_triangle(g)) return false;
  std::vector<int> corners;
  for (auto [u, v] : g.edges()) {
    for (int w : g.neighbors(u)) {
      if (w != v && g.has_edge(w, v)) {
        corners = {u, v, w};
        break;
      }
    }
    if (!corners.empty()) break;
  }
  for (int v : corners)
    if (!has_triangle(delete_vertex(g, v))) return false;
  return true;
}

bool degree2_deletions_bipartite(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 2 && !is_bipartite(delete_vertex(g, v))) return false;
  return true;
}

Tri hamiltonian_tri(const Graph& g, const PredicateLimits& limits) {
  if (g.vertex_count() < 3 || !is_connected(g)) return Tri::False;
  if (g.vertex_count() > limits.max_exact_n) return Tri::Unknown;
  bool found = false;
  auto result = enumerate_hamilton_circuits(
      g, [&](const EdgeVector&) { found = true; return false; }, limits.cap);
  if (found) return Tri::True;
  return result.completed ? Tri::False : Tri::Unknown;
}

Tri quotient_le_tri(const Graph& g, int bound, const PredicateLimits& limits) {
  if (g.vertex_count() > limits.max_exact_n && cycle_space_dim(g) > 0)
    return Tri::Unknown;
  HamStatus status = hamilton_generated_status(g, limits.cap);
  switch (status.kind) {
    case HamStatus::Kind::VacuousNoCycle:
      return from_bool(0 <= bound);
    case HamStatus::Kind::Unknown:
      // A saturated rank can still settle "quotient <= bound" early.
      return status.quotient <= bound ? Tri::True : Tri::Unknown;
    default:
      return from_bool(status.quotient <= bound);
  }
}

Tri near_span_tri(const Graph& g, const PredicateLimits& limits) {
  if (g.vertex_count() > limits.max_exact_n && cycle_space_dim(g) > 0)
    return Tri::Unknown;
  try {
    return from_bool(near_hamilton_span_full(g, limits.cap));
  } catch (const enumeration_limit&) {
    return Tri::Unknown;
  }
}

Tri hamilton_connected_tri(const Graph& g, const PredicateLimits& limits) {
  if (g.vertex_count() < 2) return Tri::False;
  if (g.vertex_count() > limits.max_exact_n) return Tri::Unknown;
  try {
    return from_bool(is_hamilton_connected(g));
  } catch (const enumeration_limit&) {
    return Tri::Unknown;
  }
}

struct NamedPredicate {
  const char* name;
  Predicate fn;
};

std::optional<int> parse_param(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string arg = name.substr(prefix.size());
  if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("predicate parameter must be a non-negative integer: " + name);
  return std::stoi(arg);
}

}  // namespace

Predicate lookup_predicate(const std::string& name) {
  if (auto k = parse_param(name, "min_degree_ge:"))
    return [k](const Graph& g, const PredicateLimits&) {
      return from_bool(min_degree(g) >= *k);
    };
  if (auto k = parse_param(name, "min_degree_eq:"))
    return [k](const Graph& g, const PredicateLimits&) {
      return from_bool(min_degree(g) == *k);
    };
  if (auto d = parse_param(name, "quotient_dim_le:"))
    return [d](const Graph& g, const PredicateLimits& limits) {
      return quotient_le_tri(g, *d, limits);
    };
  if (name == "exists_degree2")
    return [](const Graph& g, const PredicateLimits&) {
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) return Tri::True;
      return Tri::False;
    };
  if (name == "degree2_deletions_bipartite")
    return [](const Graph& g, const PredicateLimits&) {
      return from_bool(degree2_deletions_bipartite(g));
    };
  if (name == "contains_triangle")
    return [](const Graph& g, const PredicateLimits&) {
      return from_bool(has_triangle(g));
    };
  if (name == "all_deletions_contain_triangle")
    return [](const Graph& g, const PredicateLimits&) {
      return from_bool(all_deletions_contain_triangle(g));
    };
  if (name == "hamiltonian") return hamiltonian_tri;
  if (name == "hamilton_generated_full")
    return [](const Graph& g, const PredicateLimits& limits) {
      return quotient_le_tri(g, 0, limits);
    };
  if (name == "near_hamilton_span_full") return near_span_tri;
  if (name == "hamilton_connected") return hamilton_connected_tri;
  throw std::invalid_argument("unknown predicate: " + name);
}

std::vector<std::string> predicate_names() {
  return {"min_degree_ge:K",
          "min_degree_eq:K",
          "exists_degree2",
          "degree2_deletions_bipartite",
          "contains_triangle",
          "all_deletions_contain_triangle",
          "hamiltonian",
          "hamilton_generated_full",
          "quotient_dim_le:D",
          "near_hamilton_span_full",
          "hamilton_connected"};
}

double threshold_p(int n, int k, double c) {
  if (n < 3) throw std::invalid_argument("threshold_p requires n >= 3");
  if (k < 0) throw std::invalid_argument("threshold_p requires k >= 0");
  double p = (std::log(n) + k * std::log(std::log(n)) + c) / n;
  return std::clamp(p, 0.0, 1.0);
}

double powerlaw_p(int n, double eps) {
  if (n < 1) throw std::invalid_argument("powerlaw_p requires n >= 1");
  double p = std::pow(n, -0.5 + eps);
  return std::clamp(p, 0.0, 1.0);
}

double limit_min_degree(int k, double c) {
  if (k < 0) throw std::invalid_argument("limit_min_degree requires k >= 0");
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return std::exp(-std::exp(-c / factorial));
}

PSpec PSpec::explicit_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("explicit p outside [0,1]");
  PSpec s;
  s.kind = Kind::Explicit;
  s.p = p;
  return s;
}

PSpec PSpec::log_formula(int k, double c) {
  PSpec s;
  s.kind = Kind::LogFormula;
  s.k = k;
  s.c = c;
  return s;
}

PSpec PSpec::power_law(double eps) {
  PSpec s;
  s.kind = Kind::PowerLaw;
  s.eps = eps;
  return s;
}

double PSpec::resolve(int n, bool* clamped) const {
  double raw = 0.0;
  switch (kind) {
    case Kind::Explicit: raw = p; break;
    case Kind::LogFormula: {
      if (n < 3) throw std::invalid_argument("log formula requires n >= 3");
      raw = (std::log(n) + k * std::log(std::log(n)) + c) / n;
      break;
    }
    case Kind::PowerLaw: raw = std::pow(n, -0.5 + eps); break;
  }
  if (clamped) *clamped = raw < 0.0 || raw > 1.0;
  return std::clamp(raw, 0.0, 1.0);
}

WilsonInterval wilson95(long long successes, long long trials) {
  if (trials <= 0) throw std::invalid_argument("wilson95 requires trials >= 1");
  const double z = 1.959963984540054;
  const double nt = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = (phat + z2 / (2.0 * nt)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt)) / denom;
  return {center - half, center + half};
}

SweepRecord estimate(const TrialConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("estimate requires trials >= 1");
  if (config.n < 0) throw std::invalid_argument("estimate requires n >= 0");
  Predicate predicate = lookup_predicate(config.property);

  SweepRecord record;
  record.property = config.property;
  record.n = config.n;
  record.trials = config.trials;
  record.seed = config.master_seed;
  record.p = config.p_spec.resolve(config.n, &record.p_clamped);

  const auto start = std::chrono::steady_clock::now();
  unsigned threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                        : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(config.trials));

  std::atomic<long long> next{0};
  std::atomic<long long> successes{0};
  std::atomic<long long> unknown{0};
  auto worker = [&] {
    for (;;) {
      const long long i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= config.trials) return;
      Graph g = gen_gnp(config.n, record.p, rng::derive_seed(config.master_seed, i));
      switch (predicate(g, config.limits)) {
        case Tri::True: successes.fetch_add(1, std::memory_order_relaxed); break;
        case Tri::Unknown: unknown.fetch_add(1, std::memory_order_relaxed); break;
        case Tri::False: break;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  record.successes = successes.load();
  record.unknown = unknown.load();
  record.p_hat = static_cast<double>(record.successes) / static_cast<double>(record.trials);
  auto ci = wilson95(record.successes, record.trials);
  record.ci_low = ci.low;
  record.ci_high = ci.high;
  record.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start).count();
  return record;
}

std::string csv_header() {
  return "property,n,p,trials,successes,unknown,p_hat,ci_low,ci_high,seed,wall_ms";
}

std::string csv_row(const SweepRecord& r) {
  char buf[320];
  std::snprintf(buf, sizeof(buf), "%s,%d,%.6g,%lld,%lld,%lld,%.6g,%.6g,%.6g,%llu,%.6g",
                r.property.c_str(), r.n, r.p, r.trials, r.successes, r.unknown,
                r.p_hat, r.ci_low, r.ci_high,
                static_cast<unsigned long long>(r.seed), r.wall_ms);
  return buf;
}

void sweep(const std::vector<TrialConfig>& configs, std::ostream& out) {
  out << csv_header() << '\n';
  out.flush();
  for (const auto& config : configs) {
    out << csv_row(estimate(config)) << '\n';
    out.flush();
  }
}

}  // namespace hamspan
