// hybisect: hypergraph bisection, discrepancy, and spectral-certificate CLI.
//
// Exit codes: 0 success, 2 usage/input error, 3 guard violation (size limits
// on exhaustive routines), 4 numeric failure. Structured output is one record
// per line with stable field order; timings go to stderr so reports are
// byte-reproducible for a fixed configuration.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hybisect/bench.hpp"
#include "hybisect/checks.hpp"
#include "hybisect/cut.hpp"
#include "hybisect/disc.hpp"
#include "hybisect/generators.hpp"
#include "hybisect/geomprob.hpp"
#include "hybisect/io.hpp"
#include "hybisect/report.hpp"
#include "hybisect/spectral.hpp"

namespace {

using namespace hybisect;

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoi(tok));
  }
  return out;
}

Hypergraph load_uniform(const std::string& path) {
  if (ends_with(path, ".json")) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return hypergraph_from_json(j);
  }
  return read_hypergraph_file(path);
}

MixedHypergraph load_mixed(const std::string& path) {
  if (ends_with(path, ".json")) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return mixed_hypergraph_from_json(j);
  }
  return read_mixed_hypergraph_file(path);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// the strict pairwise-product bound needs a large enough maximum degree; warn
// when the instance is outside that regime
void warn_if_small_degree(int r_scale, long long max_deg, double alpha) {
  if (max_deg == 0) return;
  double scale = alpha / std::sqrt(2.0 * r_scale * static_cast<double>(max_deg));
  double worst = 2.0 * scale + (r_scale - 1) * static_cast<double>(max_deg) * scale * scale;
  if (worst >= alpha)
    std::cerr << "# warning: max degree " << max_deg
              << " is too small to certify the pairwise-product bound < alpha\n";
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// ---- gen ----------------------------------------------------------------

int run_gen(bool regular, int n, int r, int d, double p, std::uint64_t seed, int max_retries,
            const std::string& out_path) {
  Hypergraph h = regular ? gen_random_regular(n, r, d, seed, max_retries)
                         : gen_random_binomial(n, r, p, seed);
  if (ends_with(out_path, ".json")) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << hypergraph_to_json(h).dump(2) << "\n";
  } else {
    write_hypergraph_file(h, out_path);
  }
  Record rec("gen");
  rec.add("kind", regular ? "regular" : "binomial")
      .add("n", n)
      .add("r", r);
  if (regular)
    rec.add("d", d);
  else
    rec.add("p", p);
  rec.add("seed", seed).add("e", h.edge_count()).add("out", out_path);
  std::cout << rec.line() << "\n";
  return 0;
}

// ---- bisect ---------------------------------------------------------------

int run_bisect(const std::string& input, long long trials, double alpha, std::uint64_t seed,
               const std::string& mode_name, bool mixed, bool human) {
  BalanceMode mode = mode_name == "paper" ? BalanceMode::paper : BalanceMode::greedy;
  Timer timer;
  BisectResult res;
  int n = 0, rmax = 0;
  if (mixed) {
    MixedHypergraph h = load_mixed(input);
    n = h.n;
    rmax = h.max_r;
    warn_if_small_degree(h.max_r, max_degree(h), alpha);
    res = bisect_mixed(h, trials, alpha, seed, mode);
  } else {
    Hypergraph h = load_uniform(input);
    n = h.n;
    rmax = h.r;
    warn_if_small_degree(h.r, max_degree(h), alpha);
    res = bisect(h, trials, alpha, seed, mode);
  }
  const CutResult& cut = res.cut;
  if (human) {
    std::cout << "bisection of " << input << " (n=" << n << ", max edge size " << rmax << ")\n"
              << "  cross:            " << cut.cross << "\n"
              << "  baseline (exact): " << res.expectation_baseline << " ~ "
              << fmt_double(to_double(res.expectation_baseline)) << "\n"
              << "  asymptote:        " << fmt_double(to_double(res.asymptote)) << "\n"
              << "  advantage s(H):   " << fmt_double(to_double(cut.advantage)) << "\n"
              << "  objective:        " << cut.objective << " (pre-balance "
              << res.best_pre_objective << ", trial " << res.chosen_trial << ")\n"
              << "  |X| / |Y|:        " << cut.x_side.size() << " / " << cut.y_side.size()
              << "\n";
  } else {
    Record rec("bisect");
    rec.add("input", input)
        .add("n", n)
        .add("trials", trials)
        .add("alpha", alpha)
        .add("seed", seed)
        .add("mode", mode_name)
        .add("cross", cut.cross)
        .add("e_x", cut.e_x)
        .add("e_y", cut.e_y)
        .add("objective", cut.objective)
        .add("pre_objective", res.best_pre_objective)
        .add("trial", res.chosen_trial)
        .add("baseline", res.expectation_baseline)
        .add("baseline_f", to_double(res.expectation_baseline))
        .add("asymptote", res.asymptote)
        .add("advantage", cut.advantage)
        .add("advantage_f", to_double(cut.advantage))
        .add("x", cut.x_side)
        .add("y", cut.y_side);
    std::cout << rec.line() << "\n";
  }
  std::cerr << comment("bisect wall_ms=" + fmt_double(timer.ms())) << "\n";
  return 0;
}

// ---- disc -----------------------------------------------------------------

int run_disc(const std::string& input, bool exhaustive, bool reduction, long long trials,
             double alpha, std::uint64_t seed, double c_factor, bool human) {
  Hypergraph h = load_uniform(input);
  Timer timer;
  if (!exhaustive) warn_if_small_degree(h.r, max_degree(h), alpha);
  if (exhaustive) {
    DiscReport rep = disc_exact(h);
    if (human) {
      std::cout << "exhaustive discrepancy of " << input << "\n"
                << "  disc+: " << rep.disc_plus << " ~ " << fmt_double(to_double(rep.disc_plus))
                << "\n"
                << "  disc-: " << rep.disc_minus << " ~ "
                << fmt_double(to_double(rep.disc_minus)) << "\n"
                << "  disc:  " << rep.disc << "\n";
    } else {
      Record rec("disc");
      rec.add("input", input)
          .add("method", "exhaustive")
          .add("disc_plus", rep.disc_plus)
          .add("disc_minus", rep.disc_minus)
          .add("disc", rep.disc)
          .add("witness_plus", rep.witness)
          .add("witness_minus", rep.witness_minus);
      std::cout << rec.line() << "\n";
    }
  } else {
    DiscReport rep = reduction ? large_degree_reduction(h, c_factor, seed, trials, alpha)
                               : disc_plus_heuristic(h, trials, alpha, seed);
    if (human) {
      std::cout << (reduction ? "large-degree reduction" : "rounding heuristic") << " on "
                << input << "\n"
                << "  disc(witness): " << rep.value << " ~ " << fmt_double(to_double(rep.value))
                << "\n"
                << "  |witness|:     " << rep.witness.size() << "\n";
    } else {
      Record rec("disc");
      rec.add("input", input)
          .add("method", reduction ? "reduction" : "rounding")
          .add("trials", trials)
          .add("alpha", alpha)
          .add("seed", seed)
          .add("value", rep.value)
          .add("value_f", to_double(rep.value))
          .add("witness", rep.witness);
      std::cout << rec.line() << "\n";
    }
  }
  std::cerr << comment("disc wall_ms=" + fmt_double(timer.ms())) << "\n";
  return 0;
}

// ---- mu ---------------------------------------------------------------------

std::vector<std::vector<double>> read_gram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> vals;
  double v;
  while (in >> v) vals.push_back(v);
  std::size_t r = 0;
  while (r * r < vals.size()) ++r;
  if (r * r != vals.size() || r < 2)
    throw std::runtime_error(path + ": expected a square matrix (r >= 2)");
  std::vector<std::vector<double>> g(r, std::vector<double>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) g[i][j] = vals[i * r + j];
  for (std::size_t i = 0; i < r; ++i) {
    if (std::fabs(g[i][i] - 1.0) > 1e-6)
      throw std::runtime_error(path + ": diagonal must be 1 (unit vectors)");
    for (std::size_t j = 0; j < r; ++j)
      if (std::fabs(g[i][j] - g[j][i]) > 1e-9)
        throw std::runtime_error(path + ": matrix is not symmetric");
  }
  return g;
}

int run_mu(const std::string& gram_path, double angle, bool have_angle, long long trials,
           std::uint64_t seed, bool human) {
  VectorTuple tuple =
      have_angle
          ? tuple_from_gram({{1.0, std::cos(angle)}, {std::cos(angle), 1.0}})
          : tuple_from_gram(read_gram(gram_path));
  Timer timer;
  MuEstimate est = mu_estimate(tuple, trials, seed);
  VectorTuple red = reduce_to_r_dims(tuple);
  if (human) {
    std::cout << "mu estimate (r=" << red.r() << ", trials=" << trials << ", seed=" << seed
              << ")\n  mu_hat: " << fmt_double(est.mu) << "\n  se:     "
              << fmt_double(est.std_err) << "\n";
    if (have_angle)
      std::cout << "  exact:  " << fmt_double(mu_exact_r2(angle)) << "\n";
    std::cout << "  reduced rows:\n";
    for (const auto& row : red.vs) {
      std::cout << "   ";
      for (double x : row) std::cout << " " << fmt_double(x);
      std::cout << "\n";
    }
  } else {
    Record rec("mu");
    rec.add("r", red.r()).add("trials", trials).add("seed", seed).add("mu_hat", est.mu).add(
        "se", est.std_err);
    if (have_angle) rec.add("angle", angle).add("exact", mu_exact_r2(angle));
    for (int i = 0; i < red.r(); ++i) {
      std::string row;
      for (int j = 0; j < red.dim(); ++j) {
        if (j) row += ",";
        row += fmt_double(red.vs[i][j]);
      }
      rec.add("v" + std::to_string(i), row);
    }
    std::cout << rec.line() << "\n";
  }
  std::cerr << comment("mu wall_ms=" + fmt_double(timer.ms())) << "\n";
  return 0;
}

// ---- spectral ---------------------------------------------------------------

std::string sparse_vector_string(const std::vector<double>& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) continue;
    if (!out.empty()) out += ",";
    out += std::to_string(i) + ":" + fmt_double(x[i]);
  }
  return out.empty() ? "-" : out;
}

int run_spectral(const std::string& input, double p_opt, const std::string& kind,
                 int ascent_steps, int starts, std::uint64_t seed, long long trials,
                 double alpha, bool human) {
  Hypergraph h = load_uniform(input);
  double p = p_opt > 0 ? p_opt : static_cast<double>(h.r);
  Timer timer;

  auto candidates = default_candidate_sets(h, seed);
  DiscReport disc_rep = disc_plus_heuristic(h, trials, alpha, seed);
  if (!disc_rep.witness.empty()) candidates.push_back(disc_rep.witness);

  double bound = 0.0;
  if (!disc_rep.witness.empty()) {
    Rat err = char_vector_error_term(h, static_cast<long long>(disc_rep.witness.size()));
    bound = (h.r * to_double(disc_rep.value) - to_double(err)) /
            std::pow(static_cast<double>(h.n), h.r / p);
  }

  SpectralCertificate cert;
  if (kind == "mu") {
    cert = mu_certificate(h, p, candidates, "dense", seed);
  } else {
    cert = lambda2_certificate(h, p, candidates);
    // polish with projected ascent from the best candidate plus random starts
    SpectralCertificate best = cert;
    if (ascent_steps > 0 && h.edge_count() > 0) {
      auto asc = local_ascent(h, p, cert.witness[0], ascent_steps);
      if (asc.value > best.value) best = asc;
      for (int s = 0; s < starts; ++s) {
        Rng rng = Rng::stream(seed ^ 0xa5ce57ULL, static_cast<std::uint64_t>(s));
        std::vector<double> x(h.n);
        double nrm = 0;
        for (int v = 0; v < h.n; ++v) x[v] = rng.gaussian();
        for (int v = 0; v < h.n; ++v) nrm += std::pow(std::fabs(x[v]), p);
        nrm = std::pow(nrm, 1.0 / p);
        for (double& v : x) v /= nrm;
        auto a = local_ascent(h, p, x, ascent_steps);
        if (a.value > best.value) best = a;
      }
    }
    cert = best;
  }

  if (human) {
    std::cout << kind << " certificate for " << input << " (p=" << fmt_double(p) << ")\n"
              << "  value:            " << fmt_double(cert.value) << "\n"
              << "  disc-based bound: " << fmt_double(bound) << "\n"
              << "  witness:          " << sparse_vector_string(cert.witness[0]) << "\n";
  } else {
    Record rec("spectral");
    rec.add("input", input)
        .add("kind", kind)
        .add("p", p)
        .add("seed", seed)
        .add("value", cert.value)
        .add("disc_bound", bound)
        .add("witness", sparse_vector_string(cert.witness[0]));
    std::cout << rec.line() << "\n";
  }
  std::cerr << comment("spectral wall_ms=" + fmt_double(timer.ms())) << "\n";
  return 0;
}

// ---- oracle -----------------------------------------------------------------

int run_oracle(const std::string& what, const std::string& input, bool human) {
  Hypergraph h = load_uniform(input);
  if (what == "bw") {
    auto res = oracle_bw(h);
    if (human) {
      std::cout << "bw(" << input << ") = " << res.bw << "\n";
    } else {
      Record rec("oracle");
      rec.add("kind", "bw").add("input", input).add("bw", res.bw).add("witness", res.witness);
      std::cout << rec.line() << "\n";
    }
  } else {
    DiscReport rep = disc_exact(h);
    if (human) {
      std::cout << "disc+(" << input << ") = " << rep.disc_plus << ", disc- = " << rep.disc_minus
                << ", disc = " << rep.disc << "\n";
    } else {
      Record rec("oracle");
      rec.add("kind", "disc")
          .add("input", input)
          .add("disc_plus", rep.disc_plus)
          .add("disc_minus", rep.disc_minus)
          .add("disc", rep.disc)
          .add("witness_plus", rep.witness)
          .add("witness_minus", rep.witness_minus);
      std::cout << rec.line() << "\n";
    }
  }
  return 0;
}

// ---- check ------------------------------------------------------------------

int run_check(int n, int r, int count, std::uint64_t seed, bool all, bool split, bool shadow,
              bool poly, bool beta) {
  auto selected = [&](const std::string& name) {
    if (all || (!split && !shadow && !poly && !beta)) return true;
    if (split && (name == "split-bipartition-zero" || name == "union-decomposition")) return true;
    if (shadow && (name == "shadow-decomposition" || name == "shadow-ratios")) return true;
    if (poly && name == "poly-identity") return true;
    if (beta && name == "beta-identity") return true;
    return false;
  };
  bool all_ok = true;
  for (int i = 0; i < count; ++i) {
    double d_target = 2.0 + i;
    double p = std::min(1.0, d_target / to_double(Rat(binom_big(n - 1, r - 1))));
    Hypergraph h = gen_random_binomial(n, r, p, seed + static_cast<std::uint64_t>(i));
    auto suites = run_identity_suites(h, seed + 1000 + static_cast<std::uint64_t>(i));
    for (const auto& s : suites) {
      if (!selected(s.name)) continue;
      Record rec("check");
      rec.add("suite", s.name)
          .add("instance", i)
          .add("n", n)
          .add("r", r)
          .add("seed", seed)
          .add("ok", s.ok);
      std::cout << rec.line() << "\n";
      if (!s.ok) all_ok = false;
    }
  }
  if (!all_ok) throw numeric_error("identity suite failure");
  return 0;
}

// ---- bench ------------------------------------------------------------------

int run_bench(const std::string& n_list, const std::string& r_list, const std::string& d_list,
              int seeds, std::uint64_t seed0, long long trials, double alpha) {
  auto ns = parse_int_list(n_list);
  auto rs = parse_int_list(r_list);
  auto ds = parse_int_list(d_list);
  auto records = bench_sweep(ns, rs, ds, seeds, seed0, trials, alpha);
  for (const auto& rec : records) {
    Record line("bench");
    line.add("n", rec.n).add("r", rec.r).add("d", rec.d).add("seed", rec.seed);
    if (!rec.ok) {
      line.add("error", rec.error);
    } else {
      line.add("e", rec.e)
          .add("cross", rec.cross)
          .add("baseline_f", to_double(rec.baseline))
          .add("advantage_f", to_double(rec.advantage))
          .add("c_emp", rec.c_emp)
          .add("disc_plus_f", to_double(rec.disc_plus_est))
          .add("lambda2_cert", rec.lambda2_cert)
          .add("hypertree_ref", rec.hypertree_ref);
      if (rec.oracle_bw_value >= 0) line.add("oracle_bw", rec.oracle_bw_value);
    }
    std::cout << line.line() << "\n";
  }
  for (const auto& s : bench_summarize(records)) {
    Record line("bench-summary");
    line.add("n", s.n).add("r", s.r).add("cells", s.cells).add("c_min", s.c_min).add(
        "c_median", s.c_median);
    std::cout << line.line() << "\n";
  }
  for (const auto& rec : records)
    std::cerr << comment("bench cell n=" + std::to_string(rec.n) + " r=" + std::to_string(rec.r) +
                         " d=" + std::to_string(rec.d) + " seed=" + std::to_string(rec.seed) +
                         " wall_ms=" + fmt_double(rec.wall_ms))
              << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergraph bisection, discrepancy, and spectral certificates"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "records"}));

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random hypergraph");
  bool gen_regular = false, gen_binomial = false;
  int gen_n = 0, gen_r = 3, gen_d = 3, gen_retries = 2000;
  double gen_p = 0.1;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_flag("--regular", gen_regular, "d-regular (configuration model)");
  gen->add_flag("--binomial", gen_binomial, "independent edges with probability p");
  gen->add_option("-n", gen_n, "vertex count")->required();
  gen->add_option("-r", gen_r, "uniformity");
  gen->add_option("-d", gen_d, "degree (regular)");
  gen->add_option("-p", gen_p, "edge probability (binomial)");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--max-retries", gen_retries, "regular generator retries");
  gen->add_option("-o,--output", gen_out, "output path (.txt or .json)")->required();

  // bisect
  auto* bis = app.add_subcommand("bisect", "best-of-T hyperplane-rounded bisection");
  std::string bis_input, bis_mode = "greedy";
  long long bis_trials = 200;
  double bis_alpha = 0.05;
  std::uint64_t bis_seed = 1;
  bool bis_mixed = false;
  bis->add_option("-i,--input", bis_input)->required();
  bis->add_option("--trials", bis_trials);
  bis->add_option("--alpha", bis_alpha);
  bis->add_option("--seed", bis_seed);
  bis->add_option("--mode", bis_mode)->check(CLI::IsMember({"paper", "greedy"}));
  bis->add_flag("--mixed", bis_mixed, "input has mixed edge sizes");

  // disc
  auto* dsc = app.add_subcommand("disc", "discrepancy: exhaustive, heuristic, or reduction");
  std::string dsc_input;
  bool dsc_exhaustive = false, dsc_reduction = false;
  long long dsc_trials = 200;
  double dsc_alpha = 0.05, dsc_c = 8.0;
  std::uint64_t dsc_seed = 1;
  dsc->add_option("-i,--input", dsc_input)->required();
  dsc->add_flag("--exhaustive", dsc_exhaustive);
  dsc->add_flag("--reduction", dsc_reduction);
  dsc->add_option("--trials", dsc_trials);
  dsc->add_option("--alpha", dsc_alpha);
  dsc->add_option("--seed", dsc_seed);
  dsc->add_option("--C", dsc_c, "degree threshold factor for the reduction");

  // mu
  auto* mu = app.add_subcommand("mu", "half-space probability estimate");
  std::string mu_gram;
  double mu_angle = 0;
  long long mu_trials = 1000000;
  std::uint64_t mu_seed = 1;
  auto* gram_opt = mu->add_option("--gram", mu_gram, "Gram matrix file");
  auto* angle_opt = mu->add_option("--angle", mu_angle, "angle for the two-vector case");
  gram_opt->excludes(angle_opt);
  mu->add_option("--trials", mu_trials);
  mu->add_option("--seed", mu_seed);

  // spectral
  auto* spec = app.add_subcommand("spectral", "lambda2 / mu lower-bound certificates");
  std::string spec_input, spec_kind = "lambda2";
  double spec_p = 0;
  int spec_steps = 200, spec_starts = 4;
  long long spec_trials = 200;
  double spec_alpha = 0.05;
  std::uint64_t spec_seed = 1;
  spec->add_option("-i,--input", spec_input)->required();
  spec->add_option("--p", spec_p, "norm exponent (default: the uniformity)");
  spec->add_option("--kind", spec_kind)->check(CLI::IsMember({"lambda2", "mu"}));
  spec->add_option("--ascent-steps", spec_steps);
  spec->add_option("--starts", spec_starts);
  spec->add_option("--seed", spec_seed);
  spec->add_option("--trials", spec_trials, "rounding trials for the disc witness");
  spec->add_option("--alpha", spec_alpha);

  // oracle
  auto* orc = app.add_subcommand("oracle", "exhaustive oracles (bw, disc)");
  std::string orc_kind, orc_input;
  orc->add_option("kind", orc_kind, "bw or disc")
      ->required()
      ->check(CLI::IsMember({"bw", "disc"}));
  orc->add_option("-i,--input", orc_input)->required();

  // check
  auto* chk = app.add_subcommand("check", "exact identity suites on random instances");
  int chk_n = 12, chk_r = 3, chk_count = 3;
  std::uint64_t chk_seed = 3;
  bool chk_all = false, chk_split = false, chk_shadow = false, chk_poly = false,
       chk_beta = false;
  chk->add_option("-n", chk_n);
  chk->add_option("-r", chk_r);
  chk->add_option("--count", chk_count, "instances to test");
  chk->add_option("--seed", chk_seed);
  chk->add_flag("--all", chk_all);
  chk->add_flag("--split", chk_split);
  chk->add_flag("--shadow", chk_shadow);
  chk->add_flag("--poly", chk_poly);
  chk->add_flag("--beta", chk_beta);

  // bench
  auto* ben = app.add_subcommand("bench", "grid sweep with per-cell records");
  std::string ben_n = "60", ben_r = "3", ben_d = "4,16";
  int ben_seeds = 3;
  std::uint64_t ben_seed = 7;
  long long ben_trials = 200;
  double ben_alpha = 0.05;
  ben->add_option("--n-list", ben_n);
  ben->add_option("--r-list", ben_r);
  ben->add_option("--d-list", ben_d);
  ben->add_option("--seeds", ben_seeds, "number of consecutive seeds per cell");
  ben->add_option("--seed", ben_seed, "base seed");
  ben->add_option("--trials", ben_trials);
  ben->add_option("--alpha", ben_alpha);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  bool human = format == "human";
  try {
    if (gen->parsed()) {
      if (gen_regular == gen_binomial)
        throw std::invalid_argument("choose exactly one of --regular / --binomial");
      return run_gen(gen_regular, gen_n, gen_r, gen_d, gen_p, gen_seed, gen_retries, gen_out);
    }
    if (bis->parsed())
      return run_bisect(bis_input, bis_trials, bis_alpha, bis_seed, bis_mode, bis_mixed, human);
    if (dsc->parsed())
      return run_disc(dsc_input, dsc_exhaustive, dsc_reduction, dsc_trials, dsc_alpha, dsc_seed,
                      dsc_c, human);
    if (mu->parsed()) {
      if (gram_opt->count() == 0 && angle_opt->count() == 0)
        throw std::invalid_argument("provide --gram or --angle");
      return run_mu(mu_gram, mu_angle, angle_opt->count() > 0, mu_trials, mu_seed, human);
    }
    if (spec->parsed())
      return run_spectral(spec_input, spec_p, spec_kind, spec_steps, spec_starts, spec_seed,
                          spec_trials, spec_alpha, human);
    if (orc->parsed()) return run_oracle(orc_kind, orc_input, human);
    if (chk->parsed())
      return run_check(chk_n, chk_r, chk_count, chk_seed, chk_all, chk_split, chk_shadow,
                       chk_poly, chk_beta);
    if (ben->parsed())
      return run_bench(ben_n, ben_r, ben_d, ben_seeds, ben_seed, ben_trials, ben_alpha);
  } catch (const guard_error& e) {
    std::cerr << "guard violation: " << e.what() << "\n";
    return 3;
  } catch (const numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
