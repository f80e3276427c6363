// fmmc_lab: command-line driver for the matching-preservation and
// fastest-mixing experiments.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fmmc/conductance.hpp"
#include "fmmc/errors.hpp"
#include "fmmc/graph.hpp"
#include "fmmc/io.hpp"
#include "fmmc/pipeline.hpp"
#include "fmmc/serialize.hpp"
#include "fmmc/spectral.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitCap = 2;
constexpr int kExitNumerical = 3;

struct Options {
  std::string graph_file;
  std::string family;
  std::string star_union;
  std::string embedding;
  std::optional<double> q;
  std::optional<double> eps;
  double dim_multiplier = 1.0;
  std::optional<int> dim;
  std::string dist = "gaussian";
  std::optional<int> trials;
  int goodness_trials = 2000;
  std::uint64_t seed = 1;
  int max_iters = 5000;
  double step_scale = 1.0;
  std::string step_rule = "sqrt";
  int spectral_dims = 3;
  std::string out;
  std::string csv;
};

struct Instance {
  fmmc::Graph graph;
  std::optional<fmmc::Embedding> native_embedding;
};

std::pair<int, int> parse_pair(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw fmmc::InvalidInput(std::string(flag) + " expects a:b, got '" + text + "'");
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

Instance load_instance(const Options& o) {
  const int sources = !o.graph_file.empty() + !o.family.empty() + !o.star_union.empty();
  if (sources != 1)
    throw fmmc::InvalidInput("give exactly one of --graph, --family, --star-union");
  if (!o.graph_file.empty()) return {fmmc::read_graph_file(o.graph_file), std::nullopt};
  if (!o.family.empty()) {
    const auto colon = o.family.find(':');
    if (colon == std::string::npos)
      throw fmmc::InvalidInput("--family expects kind:size, got '" + o.family + "'");
    const auto kind = fmmc::parse_graph_family(o.family.substr(0, colon));
    return {fmmc::gen_family(kind, std::stoi(o.family.substr(colon + 1))), std::nullopt};
  }
  const auto [delta, k] = parse_pair(o.star_union, "--star-union");
  auto star = fmmc::gen_star_union(delta, k);
  return {std::move(star.graph), std::move(star.embedding)};
}

fmmc::Embedding load_embedding(const Options& o, const Instance& inst) {
  const int n = inst.graph.num_vertices();
  if (o.embedding.empty()) {
    return inst.native_embedding ? *inst.native_embedding : fmmc::basis_embedding(n);
  }
  if (o.embedding == "basis") return fmmc::basis_embedding(n);
  if (o.embedding == "spectral") return fmmc::spectral_embedding(inst.graph, o.spectral_dims);
  if (o.embedding == "gaussian") return fmmc::gaussian_embedding(n, n, o.seed);
  auto f = fmmc::read_embedding_file(o.embedding);
  if (f.num_points() != n)
    throw fmmc::InvalidInput("embedding file has " + std::to_string(f.num_points()) +
                             " rows for a graph on " + std::to_string(n) + " vertices");
  return f;
}

std::string embedding_label(const Options& o) {
  if (o.embedding.empty() || o.embedding == "basis") return "basis";
  if (o.embedding == "spectral" || o.embedding == "gaussian") return o.embedding;
  return "csv";
}

fmmc::FmmcOptions fmmc_options(const Options& o) {
  fmmc::FmmcOptions f;
  f.max_iterations = o.max_iters;
  f.seed = o.seed;
  f.steps.scale = o.step_scale;
  if (o.step_rule == "sqrt") {
    f.steps.rule = fmmc::StepRule::kInverseSqrt;
  } else if (o.step_rule == "inverse") {
    f.steps.rule = fmmc::StepRule::kInverse;
  } else {
    throw fmmc::InvalidInput("--step-rule must be sqrt or inverse");
  }
  return f;
}

fmmc::Theorem2Config theorem2_config(const Options& o) {
  fmmc::Theorem2Config c;
  c.eps = o.eps.value_or(0.01);
  c.dim_multiplier = o.dim_multiplier;
  c.law = fmmc::parse_projector_law(o.dist);
  c.trials = o.trials.value_or(100);
  c.seed = o.seed;
  c.goodness_trials = o.goodness_trials;
  c.forced_dim = o.dim;
  return c;
}

void emit(const Options& o, const nlohmann::json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out, std::ios::binary);
  if (!out) throw fmmc::InvalidInput("cannot write '" + o.out + "'");
  out << text;
}

void write_history(const Options& o, const std::vector<fmmc::FmmcHistoryEntry>& history) {
  if (o.csv.empty()) return;
  std::ofstream csv(o.csv, std::ios::binary);
  if (!csv) throw fmmc::InvalidInput("cannot write '" + o.csv + "'");
  fmmc::write_history_csv(csv, history);
}

void add_graph_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph", o.graph_file, "Graph file ('n m' header, then 'u v' lines)");
  cmd->add_option("--family", o.family, "Generated graph, kind:size (path, cycle, complete, hypercube)");
  cmd->add_option("--star-union", o.star_union, "Disjoint stars, delta:k");
  cmd->add_option("--out", o.out, "Write the JSON report here instead of stdout");
  cmd->add_option("--seed", o.seed, "Master seed");
}

void add_experiment_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--embedding", o.embedding, "csv path, or basis | spectral | gaussian");
  cmd->add_option("--spectral-dims", o.spectral_dims, "Dimensions of the spectral embedding");
  cmd->add_option("--eps", o.eps, "Distortion parameter in (0, 0.1)");
  cmd->add_option("--dim-multiplier", o.dim_multiplier, "Constant in front of the dimension formula");
  cmd->add_option("--dim", o.dim, "Force the projected dimension");
  cmd->add_option("--dist", o.dist, "Projector law: gaussian | rademacher");
  cmd->add_option("--trials", o.trials, "Monte-Carlo trials");
  cmd->add_option("--goodness-trials", o.goodness_trials, "Trials for the delta/rho estimate");
}

void add_fmmc_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-iters", o.max_iters, "Subgradient iteration budget");
  cmd->add_option("--step-scale", o.step_scale, "Step scale a");
  cmd->add_option("--step-rule", o.step_rule, "sqrt (a mu0/sqrt t) or inverse (a mu0/t)");
  cmd->add_option("--csv", o.csv, "Write the iteration history as CSV");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fmmc_lab: dimension reduction, fractional matchings and fastest mixing chains"};
  app.require_subcommand(1);
  Options o;

  auto* theorem1 = app.add_subcommand("theorem1", "Matching preservation under random projection");
  add_graph_flags(theorem1, o);
  add_experiment_flags(theorem1, o);
  theorem1->add_option("--q", o.q, "Weight exponent q >= 1");

  auto* theorem2 = app.add_subcommand("theorem2", "Ratio lambda(pi F)/lambda(F) under projection");
  add_graph_flags(theorem2, o);
  add_experiment_flags(theorem2, o);

  auto* fmmc_cmd = app.add_subcommand("fmmc", "Fastest mixing chain by projected subgradient");
  add_graph_flags(fmmc_cmd, o);
  add_fmmc_flags(fmmc_cmd, o);

  auto* conductance = app.add_subcommand("conductance", "Exact vertex conductance");
  add_graph_flags(conductance, o);

  auto* pipeline = app.add_subcommand("pipeline", "Conductance, FMMC, bound chain and lambda experiment");
  add_graph_flags(pipeline, o);
  add_experiment_flags(pipeline, o);
  add_fmmc_flags(pipeline, o);

  CLI11_PARSE(app, argc, argv);

  try {
    const Instance inst = load_instance(o);
    const fmmc::Graph& g = inst.graph;

    if (theorem1->parsed()) {
      fmmc::Theorem1Config c;
      c.q = o.q.value_or(2.0);
      c.eps = o.eps.value_or(0.09);
      c.dim_multiplier = o.dim_multiplier;
      c.law = fmmc::parse_projector_law(o.dist);
      c.trials = o.trials.value_or(200);
      c.seed = o.seed;
      c.goodness_trials = o.goodness_trials;
      c.forced_dim = o.dim;
      emit(o, fmmc::run_theorem1_experiment(g, load_embedding(o, inst), c));
    } else if (theorem2->parsed()) {
      emit(o, fmmc::run_theorem2_experiment(g, load_embedding(o, inst), theorem2_config(o)));
    } else if (fmmc_cmd->parsed()) {
      const auto r = fmmc::fmmc_solve(g, fmmc_options(o));
      write_history(o, r.history);
      emit(o, fmmc::fmmc_result_json(r));
    } else if (conductance->parsed()) {
      emit(o, fmmc::vertex_conductance_exact(g));
    } else if (pipeline->parsed()) {
      fmmc::PipelineConfig c;
      c.theorem2 = theorem2_config(o);
      c.fmmc = fmmc_options(o);
      c.embedding = load_embedding(o, inst);
      c.embedding_label = embedding_label(o);
      std::vector<fmmc::FmmcHistoryEntry> history;
      const auto report = fmmc::run_full_pipeline(g, c, &history);
      write_history(o, history);
      emit(o, report);
    }
  } catch (const fmmc::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const fmmc::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
