#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfps/cfps.hpp"
#include "cfps/checkpoint.hpp"
#include "cfps/cloud_io.hpp"
#include "cfps/curvature.hpp"
#include "cfps/error.hpp"
#include "cfps/fps.hpp"
#include "cfps/metrics.hpp"
#include "cfps/policy.hpp"
#include "cfps/reinforce.hpp"
#include "cfps/reward.hpp"
#include "cfps/synthetic.hpp"
#include "config_file.hpp"

namespace cfps::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

/// Bad invocation that CLI11 cannot detect on its own (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeedOption {
  std::uint64_t value = kDefaultSeed;
  CLI::Option* option = nullptr;

  void add_to(CLI::App* app) {
    option = app->add_option("--seed", value, "Global RNG seed (overrides $CFPS_SEED, default 42)");
  }

  std::uint64_t resolve() const {
    if (option && option->count() > 0) return value;
    if (const char* env = std::getenv(kSeedEnvVar); env && *env) {
      std::uint64_t parsed = 0;
      const std::string text(env);
      std::size_t used = 0;
      try {
        parsed = std::stoull(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || text.front() == '-')
        throw UsageError(std::string(kSeedEnvVar) + " must be a non-negative integer, got '" + text + "'");
      return parsed;
    }
    return kDefaultSeed;
  }
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw IoError("write to '" + path.string() + "' failed");
}

void write_sidecar(const std::string& artifact, const json& meta) {
  write_text(sidecar_path(artifact), meta.dump(2) + "\n");
}

void emit(std::ostream& out, const json& line) { out << line.dump() << '\n'; }

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  const auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (n % 2 == 1) return *mid;
  const double upper = *mid;
  const double lower = *std::max_element(v.begin(), mid);
  return 0.5 * (lower + upper);
}

PointCloud load_input(const std::string& path, bool normalize) {
  PointCloud cloud = load_cloud(path);
  return normalize ? normalize_to_unit_sphere(cloud) : cloud;
}

void save_output(const PointCloud& cloud, const std::string& path, const std::string& format) {
  const CloudFormat fmt = resolve_format(path, parse_cloud_format(format));
  save_cloud(fmt == CloudFormat::Xyz ? cloud.without_normals() : cloud, path, fmt);
}

// ---------------------------------------------------------------- synth

struct SynthConfig {
  std::string shape;
  std::size_t n = 2048;
  double radius = 1.0;
  double height = 2.0;
  double major = 2.0;
  double minor = 0.5;
  double side = 2.0;
  double jitter = 0.0;
  std::string out;
  std::string oracle;
  std::string format = "auto";
  SeedOption seed;
};

int cmd_synth(const SynthConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = cfg.seed.resolve();
  AnalyticCloud shape = [&] {
    if (cfg.shape == "sphere") return gen_sphere(cfg.radius, cfg.n, seed);
    if (cfg.shape == "cylinder") return gen_cylinder(cfg.radius, cfg.height, cfg.n, seed);
    if (cfg.shape == "torus") return gen_torus(cfg.major, cfg.minor, cfg.n, seed);
    return gen_plane(cfg.side, cfg.n, seed, cfg.jitter);
  }();

  save_output(shape.cloud, cfg.out, cfg.format);
  if (!cfg.oracle.empty()) {
    std::string text;
    for (double h : shape.h_true) text += format_double(h) + "\n";
    write_text(cfg.oracle, text);
  }

  json params = json::object();
  for (const auto& [k, v] : shape.params) params[k] = v;
  json config = {{"shape", cfg.shape}, {"n", cfg.n},         {"radius", cfg.radius}, {"height", cfg.height},
                 {"major", cfg.major}, {"minor", cfg.minor}, {"side", cfg.side},     {"jitter", cfg.jitter},
                 {"out", cfg.out},     {"oracle", cfg.oracle}, {"format", cfg.format}, {"seed", seed}};
  json meta = {{"command", "synth"}, {"shape", shape.shape}, {"n", shape.cloud.size()},
               {"shape_params", params}, {"config", config}};
  write_sidecar(cfg.out, meta);
  emit(out, meta);
  return kExitOk;
}

// ---------------------------------------------------------------- curvature

struct CurvatureConfig {
  std::string in;
  std::string out;
  std::size_t k_neighbors = kDefaultNeighbors;
  bool normalize = false;
};

int cmd_curvature(const CurvatureConfig& cfg, std::ostream& out) {
  const PointCloud cloud = load_input(cfg.in, cfg.normalize);
  const CurvatureField curv = estimate_curvature(cloud, cfg.k_neighbors);

  std::string dump;
  dump.reserve(cloud.size() * 96);
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const Vec3& p = cloud.position(i);
    dump += format_double(p.x()) + ' ' + format_double(p.y()) + ' ' + format_double(p.z()) + ' ' +
            format_double(curv.h_raw[i]) + ' ' + format_double(curv.h_norm[i]) + '\n';
  }
  write_text(cfg.out, dump);

  const auto [lo, hi] = std::minmax_element(curv.h_raw.begin(), curv.h_raw.end());
  const auto degenerate = std::count(curv.degenerate.begin(), curv.degenerate.end(), std::uint8_t{1});
  json config = {{"in", cfg.in}, {"out", cfg.out}, {"k_neighbors", cfg.k_neighbors}, {"normalize", cfg.normalize}};
  json meta = {{"command", "curvature"},
               {"k_used", curv.k_used},
               {"min_h", *lo},
               {"max_h", *hi},
               {"median_h", median_of(curv.h_raw)},
               {"n", cloud.size()},
               {"degenerate", degenerate},
               {"config", config}};
  write_sidecar(cfg.out, meta);
  emit(out, meta);
  return kExitOk;
}

// ---------------------------------------------------------------- sample

struct SampleConfig {
  std::string in;
  std::string out;
  std::string method = "cfps";
  std::size_t k = 0;
  double ratio = 0.0;
  CLI::Option* ratio_opt = nullptr;
  std::string policy;
  std::string combine = "additive";
  std::size_t k_neighbors = kDefaultNeighbors;
  std::size_t seed_index = 0;
  bool random_start = false;
  bool normalize = false;
  std::string format = "auto";
  SeedOption seed;
};

int cmd_sample(const SampleConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = cfg.seed.resolve();
  const bool have_ratio = cfg.ratio_opt->count() > 0;
  if (cfg.method == "cfps" && have_ratio == !cfg.policy.empty())
    throw UsageError("--method cfps needs exactly one of --ratio or --policy");
  const CombineMode mode = parse_combine_mode(cfg.combine);

  const PointCloud cloud = load_input(cfg.in, cfg.normalize);
  const std::size_t n = cloud.size();
  if (cfg.k < 1 || cfg.k > n)
    throw PreconditionError("--k must satisfy 1 <= k <= N (k=" + std::to_string(cfg.k) +
                            ", N=" + std::to_string(n) + ")");

  Rng rng(seed);
  std::size_t seed_index = cfg.seed_index;
  if (cfg.random_start) seed_index = static_cast<std::size_t>(rng() % n);
  if (seed_index >= n) throw PreconditionError("--seed-index out of range");

  const FpsRanking ranking = fps_full_ranking(cloud, seed_index);
  std::vector<std::size_t> indices;
  json result = {{"command", "sample"}, {"method", cfg.method}, {"k", cfg.k}, {"n", n}};

  if (cfg.method == "fps") {
    const SampleSelection sel = fps_select(ranking, cfg.k);
    indices.assign(sel.indices().begin(), sel.indices().end());
    result["g_used"] = 0.0;
    result["n_exchange"] = 0;
    result["swapped_out"] = 0;
    result["swapped_in"] = 0;
  } else {
    const CurvatureField curv = estimate_curvature(cloud, cfg.k_neighbors);
    double g = cfg.ratio;
    if (!have_ratio) {
      const PolicyCheckpoint ckpt = load_checkpoint(cfg.policy);
      g = sample_ratio(ckpt.policy, featurize_curvature(curv), rng);
    }
    const CfpsResult res = cfps_from_ranking(ranking, curv, cfg.k, g, mode);
    indices.assign(res.selection.indices().begin(), res.selection.indices().end());
    result["g_used"] = res.g_used;
    result["n_exchange"] = res.n_exchange;
    result["swapped_out"] = res.swapped_out.size();
    result["swapped_in"] = res.swapped_in.size();
    result["ratio_source"] = have_ratio ? "flag" : "policy";
    result["combine"] = to_string(mode);
  }
  result["seed"] = seed;
  result["seed_index"] = seed_index;

  save_output(gather(cloud, SampleSelection(indices, n)), cfg.out, cfg.format);

  json config = {{"in", cfg.in},
                 {"out", cfg.out},
                 {"method", cfg.method},
                 {"k", cfg.k},
                 {"ratio", have_ratio ? json(cfg.ratio) : json(nullptr)},
                 {"policy", cfg.policy},
                 {"combine", cfg.combine},
                 {"k_neighbors", cfg.k_neighbors},
                 {"seed_index", cfg.seed_index},
                 {"random_start", cfg.random_start},
                 {"normalize", cfg.normalize},
                 {"format", cfg.format},
                 {"seed", seed}};
  result["config"] = config;
  emit(out, result);
  result["indices"] = indices;
  write_sidecar(cfg.out, result);
  return kExitOk;
}

// ---------------------------------------------------------------- train

struct TrainConfig {
  std::string data_dir;
  std::size_t epochs = 1;
  std::size_t k = 256;
  double w = kDefaultRewardWeight;
  double lr = kDefaultPolicyLearningRate;
  double decay = kDefaultBaselineDecay;
  std::string combine = "additive";
  std::size_t k_neighbors = kDefaultNeighbors;
  bool normalize = false;
  std::string checkpoint_out;
  std::string init_checkpoint;
  std::string log;
  std::string synthetic_reward;
  std::size_t steps = 5000;
  SeedOption seed;
};

struct PreparedCloud {
  PointCloud cloud;
  CurvatureField curvature;
  CurvatureSummary summary;
  FpsRanking ranking;
};

std::vector<fs::path> list_clouds(const std::string& dir) {
  std::vector<fs::path> files;
  if (dir.empty()) return files;
  if (!fs::is_directory(dir)) throw IoError("data directory '" + dir + "' does not exist");
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".ply" || ext == ".xyz") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

double parse_peak(const std::string& spec) {
  const std::string prefix = "peak=";
  if (spec.rfind(prefix, 0) != 0) throw UsageError("--synthetic-reward expects peak=<value>");
  try {
    std::size_t used = 0;
    const std::string body = spec.substr(prefix.size());
    const double peak = std::stod(body, &used);
    if (used != body.size() || !(peak >= 0.0 && peak <= 1.0)) throw std::invalid_argument("range");
    return peak;
  } catch (const std::exception&) {
    throw UsageError("--synthetic-reward peak must be a number in [0, 1]");
  }
}

int cmd_train(const TrainConfig& cfg, std::ostream& out) {
  const std::uint64_t seed = cfg.seed.resolve();
  const bool bandit = !cfg.synthetic_reward.empty();
  const double peak = bandit ? parse_peak(cfg.synthetic_reward) : 0.0;
  const CombineMode mode = parse_combine_mode(cfg.combine);

  std::vector<PreparedCloud> clouds;
  for (const auto& path : list_clouds(cfg.data_dir)) {
    PointCloud cloud = load_input(path.string(), cfg.normalize);
    if (!bandit && cfg.k > cloud.size())
      throw PreconditionError("--k " + std::to_string(cfg.k) + " exceeds the " +
                              std::to_string(cloud.size()) + " points of '" + path.string() + "'");
    CurvatureField curv = estimate_curvature(cloud, cfg.k_neighbors);
    CurvatureSummary summary = featurize_curvature(curv);
    FpsRanking ranking = fps_full_ranking(cloud, 0);
    clouds.push_back({std::move(cloud), std::move(curv), summary, std::move(ranking)});
  }
  if (clouds.empty() && !bandit)
    throw IoError("no .ply/.xyz clouds found in '" + cfg.data_dir + "'");

  PolicyCheckpoint ckpt{BetaPolicy::random_init(seed), TrainState{}};
  if (!cfg.init_checkpoint.empty()) ckpt = load_checkpoint(cfg.init_checkpoint);
  ckpt.state.learning_rate = cfg.lr;
  ckpt.state.decay = cfg.decay;
  ckpt.state.rng_seed = seed;

  std::seed_seq seq{seed, std::uint64_t{0x5eed}};
  Rng rng(seq);

  std::ofstream log_file;
  if (!cfg.log.empty()) {
    log_file.open(cfg.log, std::ios::binary | std::ios::trunc);
    if (!log_file) throw IoError("cannot open log '" + cfg.log + "'");
  }
  std::ostream& log = cfg.log.empty() ? out : log_file;
  auto log_step = [&](const StepRecord& r) {
    emit(log, json{{"step", r.step},         {"alpha", r.alpha},       {"beta", r.beta},
                   {"g", r.g},               {"reward", r.reward},     {"baseline", r.baseline},
                   {"grad_norm", r.grad_norm}});
  };

  std::size_t steps = 0;
  CurvatureSummary probe;
  if (bandit) {
    probe = clouds.empty() ? featurize_curvature(std::vector<double>{0.0}) : clouds.front().summary;
    const auto reward = [peak](double g) { return quadratic_bandit_reward(g, peak); };
    for (std::size_t i = 0; i < cfg.steps; ++i, ++steps)
      log_step(policy_step(ckpt.policy, ckpt.state, probe, rng, reward));
  } else {
    probe = clouds.front().summary;
    const SamplingReward reward = make_surrogate_reward(cfg.w);
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
      for (const PreparedCloud& pc : clouds) {
        const auto reward_of_g = [&](double g) {
          return reward(pc.cloud, cfps_from_ranking(pc.ranking, pc.curvature, cfg.k, g, mode), pc.curvature);
        };
        log_step(policy_step(ckpt.policy, ckpt.state, pc.summary, rng, reward_of_g));
        ++steps;
      }
    }
  }
  if (!log_file.is_open()) log.flush();

  save_checkpoint(ckpt, cfg.checkpoint_out);
  const BetaParams final_params = ckpt.policy.forward(probe);

  json config = {{"data_dir", cfg.data_dir},
                 {"epochs", cfg.epochs},
                 {"k", cfg.k},
                 {"w", cfg.w},
                 {"lr", cfg.lr},
                 {"decay", cfg.decay},
                 {"combine", cfg.combine},
                 {"k_neighbors", cfg.k_neighbors},
                 {"normalize", cfg.normalize},
                 {"checkpoint_out", cfg.checkpoint_out},
                 {"init_checkpoint", cfg.init_checkpoint},
                 {"log", cfg.log},
                 {"synthetic_reward", cfg.synthetic_reward},
                 {"steps", cfg.steps},
                 {"seed", seed}};
  json meta = {{"command", "train"},
               {"mode", bandit ? "bandit" : "surrogate"},
               {"updates", steps},
               {"clouds", clouds.size()},
               {"final_alpha", final_params.alpha},
               {"final_beta", final_params.beta},
               {"final_mean", final_params.mean()},
               {"baseline", ckpt.state.baseline},
               {"checkpoint", cfg.checkpoint_out},
               {"config", config}};
  write_sidecar(cfg.checkpoint_out, meta);
  emit(out, meta);
  return kExitOk;
}

// ---------------------------------------------------------------- eval

struct EvalConfig {
  std::string pred;
  std::string gt;
  std::string method;
  double threshold = 0.0;
  CLI::Option* threshold_opt = nullptr;
  std::size_t k_neighbors = kDefaultNeighbors;
  bool no_retention = false;
};

int cmd_eval(const EvalConfig& cfg, std::ostream& out) {
  const PointCloud pred = load_cloud(cfg.pred);
  const PointCloud gt = load_cloud(cfg.gt);
  const double threshold = cfg.threshold_opt->count() > 0 ? cfg.threshold : default_f1_threshold(gt);
  if (!(threshold > 0.0)) throw PreconditionError("F1 threshold must be > 0");

  const double chamfer = chamfer_distance(pred, gt);
  const F1Result f1 = f1_score(pred, gt, threshold);

  json retention = nullptr;
  if (!cfg.no_retention && gt.size() >= std::max<std::size_t>(cfg.k_neighbors, 6)) {
    // Predicted points are matched to their nearest ground-truth point;
    // duplicates collapse so the selection stays a set.
    const CurvatureField curv = estimate_curvature(gt, cfg.k_neighbors);
    const NeighborIndex index = build_neighbor_index(gt);
    std::vector<bool> used(gt.size(), false);
    std::vector<std::size_t> sel;
    for (const Vec3& p : pred.positions()) {
      const std::size_t idx = index.nearest(p).index;
      if (!used[idx]) {
        used[idx] = true;
        sel.push_back(idx);
      }
    }
    retention = curvature_retention(curv, SampleSelection(std::move(sel), gt.size()));
  }

  json config = {{"pred", cfg.pred},
                 {"gt", cfg.gt},
                 {"method", cfg.method},
                 {"threshold", cfg.threshold_opt->count() > 0 ? json(cfg.threshold) : json(nullptr)},
                 {"k_neighbors", cfg.k_neighbors},
                 {"no_retention", cfg.no_retention}};
  emit(out, json{{"command", "eval"},
                 {"cloud", gt.id()},
                 {"method", cfg.method.empty() ? pred.id() : cfg.method},
                 {"chamfer", chamfer},
                 {"f1", f1.f1},
                 {"precision", f1.precision},
                 {"recall", f1.recall},
                 {"threshold", threshold},
                 {"curvature_retention", retention},
                 {"config", config}});
  return kExitOk;
}

}  // namespace

std::string sidecar_path(const std::string& artifact) { return artifact + ".meta.json"; }

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  try {
    args = expand_config(raw_args);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  CLI::App app{"Curvature-informed furthest point sampling"};
  app.name("cfps");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value file of defaults (flags override)");
  };

  SynthConfig synth;
  auto* s = app.add_subcommand("synth", "Generate an analytic test surface");
  s->add_option("--shape", synth.shape, "sphere|cylinder|torus|plane")
      ->required()
      ->check(CLI::IsMember({"sphere", "cylinder", "torus", "plane"}));
  s->add_option("--n", synth.n, "Point count")->capture_default_str();
  s->add_option("--radius", synth.radius, "Sphere/cylinder radius")->capture_default_str();
  s->add_option("--height", synth.height, "Cylinder height")->capture_default_str();
  s->add_option("--major", synth.major, "Torus major radius R")->capture_default_str();
  s->add_option("--minor", synth.minor, "Torus minor radius r")->capture_default_str();
  s->add_option("--side", synth.side, "Plane side length")->capture_default_str();
  s->add_option("--jitter", synth.jitter, "Plane in-plane jitter")->capture_default_str();
  s->add_option("--out", synth.out, "Output cloud (.ply or .xyz)")->required();
  s->add_option("--oracle", synth.oracle, "Write analytic |H| per point, one per line");
  s->add_option("--format", synth.format, "ply|xyz|auto")->check(CLI::IsMember({"ply", "xyz", "auto"}));
  synth.seed.add_to(s);
  add_config(s);

  CurvatureConfig curv;
  auto* c = app.add_subcommand("curvature", "Estimate per-point mean curvature");
  c->add_option("--in", curv.in, "Input cloud")->required();
  c->add_option("--out", curv.out, "Dump: x y z h_raw h_norm per line")->required();
  c->add_option("--k-neighbors", curv.k_neighbors, "Neighborhood size")->capture_default_str();
  c->add_flag("--normalize", curv.normalize, "Center and scale the input to the unit sphere");
  add_config(c);

  SampleConfig sample;
  auto* sm = app.add_subcommand("sample", "Downsample a cloud with FPS or CFPS");
  sm->add_option("--in", sample.in, "Input cloud")->required();
  sm->add_option("--out", sample.out, "Output cloud")->required();
  sm->add_option("--method", sample.method, "fps|cfps")->check(CLI::IsMember({"fps", "cfps"}))->capture_default_str();
  sm->add_option("--k", sample.k, "Target point count")->required();
  sample.ratio_opt = sm->add_option("--ratio", sample.ratio, "Fixed exchange ratio g in [0, 1]")
                         ->check(CLI::Range(0.0, 1.0));
  sm->add_option("--policy", sample.policy, "Policy checkpoint to draw g from");
  sm->add_option("--combine", sample.combine, "additive|multiplicative")
      ->check(CLI::IsMember({"additive", "multiplicative"}))
      ->capture_default_str();
  sm->add_option("--k-neighbors", sample.k_neighbors, "Curvature neighborhood size")->capture_default_str();
  sm->add_option("--seed-index", sample.seed_index, "First FPS point")->capture_default_str();
  sm->add_flag("--random-start", sample.random_start, "Derive the first FPS point from the seed");
  sm->add_flag("--normalize", sample.normalize, "Center and scale the input to the unit sphere");
  sm->add_option("--format", sample.format, "ply|xyz|auto")->check(CLI::IsMember({"ply", "xyz", "auto"}));
  sample.seed.add_to(sm);
  add_config(sm);

  TrainConfig train;
  auto* t = app.add_subcommand("train", "Train the exchange-ratio policy with REINFORCE");
  t->add_option("--data-dir", train.data_dir, "Directory of .ply/.xyz clouds");
  t->add_option("--epochs", train.epochs, "Passes over the data")->capture_default_str();
  t->add_option("--k", train.k, "Target point count")->capture_default_str();
  t->add_option("--w", train.w, "Curvature-retention weight in the surrogate reward")->capture_default_str();
  t->add_option("--lr", train.lr, "Policy learning rate")->capture_default_str();
  t->add_option("--decay", train.decay, "Baseline EMA decay")->capture_default_str();
  t->add_option("--combine", train.combine, "additive|multiplicative")
      ->check(CLI::IsMember({"additive", "multiplicative"}))
      ->capture_default_str();
  t->add_option("--k-neighbors", train.k_neighbors, "Curvature neighborhood size")->capture_default_str();
  t->add_flag("--normalize", train.normalize, "Center and scale inputs to the unit sphere");
  t->add_option("--checkpoint-out", train.checkpoint_out, "Where to write the policy")->required();
  t->add_option("--init-checkpoint", train.init_checkpoint, "Resume from this policy");
  t->add_option("--log", train.log, "JSON-lines training log (default: stdout)");
  t->add_option("--synthetic-reward", train.synthetic_reward, "Bandit mode: peak=<g*>, reward -(g-g*)^2");
  t->add_option("--steps", train.steps, "Bandit-mode step count")->capture_default_str();
  train.seed.add_to(t);
  add_config(t);

  EvalConfig eval;
  auto* e = app.add_subcommand("eval", "Compare a prediction against a reference cloud");
  e->add_option("--pred", eval.pred, "Predicted / downsampled cloud")->required();
  e->add_option("--gt", eval.gt, "Reference cloud")->required();
  e->add_option("--method", eval.method, "Label for the output record");
  eval.threshold_opt = e->add_option("--threshold", eval.threshold, "F1 distance threshold (default 1% bbox diagonal)");
  e->add_option("--k-neighbors", eval.k_neighbors, "Curvature neighborhood size")->capture_default_str();
  e->add_flag("--no-retention", eval.no_retention, "Skip curvature retention");
  add_config(e);

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (s->parsed()) return cmd_synth(synth, out);
    if (c->parsed()) return cmd_curvature(curv, out);
    if (sm->parsed()) return cmd_sample(sample, out);
    if (t->parsed()) return cmd_train(train, out);
    if (e->parsed()) return cmd_eval(eval, out);
  } catch (const UsageError& ue) {
    err << "usage error: " << ue.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace cfps::cli
