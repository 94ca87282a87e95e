// pfaffrep: template inspection, solving, building, verifying and sweeps.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pfaffrep/represent.hpp"
#include "pfaffrep/serialize.hpp"

namespace fs = std::filesystem;
using namespace pfaffrep;

namespace {

enum Exit { kOk = 0, kFalse = 1, kUsage = 2, kInternal = 3 };

struct Config {
  int degree = 0;
  int from = kMinDegree;
  int to = kMinDegree;
  int samples = 1;
  std::uint64_t seed = 1;
  std::string ring = "int";
  std::vector<std::string> rings{"int"};
  std::string poly;
  std::string poly_file;
  std::string matrix_file;
  std::string free = "zeros";
  std::string format = "json";
  std::string cache_dir;
  int degree_cap = kDefaultDegreeCap;
  bool allow_unverified = false;
  bool no_verify = false;
  int verbose = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string poly_text(const Config& cfg) {
  if (!cfg.poly_file.empty()) return read_file(cfg.poly_file);
  if (cfg.poly.empty()) throw Error(ErrorKind::InvalidArgument, "one of --poly or --poly-file is required");
  return cfg.poly;
}

std::optional<fs::path> cache_dir(const Config& cfg) {
  if (const char* env = std::getenv("PFAFFREP_CACHE"); env && *env) return fs::path(env);
  if (!cfg.cache_dir.empty()) return fs::path(cfg.cache_dir);
  return std::nullopt;
}

TemplateOptions template_options(const Config& cfg) { return {cfg.degree_cap, cfg.allow_unverified}; }

class Timer {
 public:
  Timer(const Config& cfg, std::string label) : cfg_(cfg), label_(std::move(label)) {}
  ~Timer() {
    if (cfg_.verbose == 0) return;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << label_ << ": " << s << " s\n";
  }

 private:
  const Config& cfg_;
  std::string label_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw Error(ErrorKind::InvalidArgument, "--format " + cfg.format + " is not available for this subcommand");
}

int cmd_template(const Config& cfg) {
  const PfaffianTemplate t = build_template(cfg.degree, template_options(cfg));
  std::cout << render(t, parse_render_format(cfg.format)) << "\n";
  return kOk;
}

int cmd_solve(const Config& cfg) {
  require_format(cfg, {"json", "text"});
  const PfaffianTemplate t = build_template(cfg.degree, template_options(cfg));
  LinearSystem sys;
  {
    Timer timer(cfg, "extract_system");
    sys = extract_system(t);
  }
  ParametricSolution sol;
  try {
    Timer timer(cfg, "solve");
    if (auto dir = cache_dir(cfg)) {
      bool recomputed = false;
      sol = load_or_solve(*dir, sys, &recomputed);
      if (cfg.verbose) std::cerr << (recomputed ? "solved and cached in " : "loaded from ") << dir->string() << "\n";
    } else {
      sol = solve_parametric(sys);
    }
  } catch (const NotSolvableOverZ& e) {
    Json out = {{"format_version", kFormatVersion}, {"degree", cfg.degree}, {"certificate", to_json(e.certificate())}};
    std::cout << out.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kFalse;
  }
  const Json summary = solution_summary_json(sol, counts(cfg.degree));
  if (cfg.format == "json") {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << "degree " << sol.degree << ": rank " << sol.rank << ", unknowns " << sol.unknown_count()
              << ", free parameters " << sol.free_count() << ", solvable over Z: "
              << (sol.certificate.solvable_over_z ? "yes" : "no") << "\n";
  }
  return kOk;
}

std::vector<RingValue> free_values(const Config& cfg, std::size_t count, const RingDescriptor& ring) {
  const std::string& policy = cfg.free;
  if (policy == "zeros") return std::vector<RingValue>(count, from_integer(0, ring));
  if (policy.rfind("random:", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      seed = std::stoull(policy.substr(7));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad seed in --free " + policy);
    }
    std::mt19937_64 rng(seed);
    return random_ring_values(count, ring, rng);
  }
  if (policy.rfind("file:", 0) == 0) {
    Json j;
    try {
      j = Json::parse(read_file(policy.substr(5)));
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::InvalidArgument, std::string("free-value file: ") + e.what());
    }
    if (j.is_object()) j = j.at("free_values");
    std::vector<RingValue> out;
    for (const auto& v : j) out.push_back(RingValue::parse(v.is_string() ? v.get<std::string>() : v.dump(), ring));
    return out;
  }
  throw Error(ErrorKind::InvalidArgument, "--free must be zeros, random:<seed> or file:<path>");
}

std::string matrix_text(const SkewMatrix<RingValue>& m) {
  std::ostringstream out;
  for (const auto& [key, form] : m.upper()) {
    out << "(" << key.first << "," << key.second << "): " << to_string(form.to_poly()) << "\n";
  }
  return out.str();
}

int cmd_build(const Config& cfg) {
  require_format(cfg, {"json", "text"});
  const RingDescriptor ring = RingDescriptor::parse(cfg.ring);
  const RingPoly f = parse_tripoly(poly_text(cfg), cfg.degree, ring);
  DegreeArtifacts art;
  {
    Timer timer(cfg, "prepare_degree");
    art = prepare_degree(cfg.degree, template_options(cfg), cache_dir(cfg));
  }
  const auto free = free_values(cfg, art.solution.free_count(), ring);
  Representation rep;
  try {
    Timer timer(cfg, "build");
    rep = build_representation(art, f, free, !cfg.no_verify);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::VerificationFailed) throw;
    std::cerr << e.what() << "\n";
    return kFalse;
  }
  if (cfg.format == "json") {
    std::cout << representation_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "degree " << rep.degree << " over " << rep.ring.to_string() << ", Pfaffian check "
              << (rep.verified ? "passed" : "skipped") << "\n"
              << matrix_text(rep.matrix);
  }
  return kOk;
}

int cmd_verify(const Config& cfg) {
  require_format(cfg, {"json", "text"});
  Json j;
  try {
    j = Json::parse(read_file(cfg.matrix_file));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "matrix file: " + std::string(e.what()));
  }
  // Accepts a full representation or a bare {size, entries} matrix.
  const bool full = j.contains("ring");
  const RingDescriptor ring = RingDescriptor::parse(full ? j.at("ring").get<std::string>() : cfg.ring);
  const SkewMatrix<RingValue> m = ring_matrix_from_json(full ? j.at("matrix") : j, ring);
  if (m.size() % 2 != 0) throw Error(ErrorKind::OddSize, "matrix size must be even");
  const RingPoly f = parse_tripoly(poly_text(cfg), m.size() / 2, ring);
  VerifyResult result;
  {
    Timer timer(cfg, "verify");
    result = verify_representation(m, f);
  }
  if (cfg.format == "json") {
    Json out = {{"verified", result.ok}};
    if (result.witness) out["witness"] = result.witness->to_string();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (result.ok ? "verified" : "NOT verified") << "\n";
  }
  if (!result.ok) {
    std::cerr << result.reason << "\n";
    return kFalse;
  }
  return kOk;
}

int cmd_sweep(const Config& cfg) {
  require_format(cfg, {"json", "text"});
  SweepOptions opts;
  opts.from = cfg.from;
  opts.to = cfg.to;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.rings.clear();
  for (const auto& r : cfg.rings) opts.rings.push_back(RingDescriptor::parse(r));
  opts.template_options = template_options(cfg);
  opts.cache_dir = cache_dir(cfg);
  const SweepReport report = sweep(opts);
  if (cfg.format == "json") {
    Json out = to_json(report);
    // Wall time varies run to run; keep stdout reproducible unless asked.
    if (cfg.verbose == 0) {
      for (auto& row : out["rows"]) row.erase("wall_time_s");
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << sweep_table(report);
  }
  for (const auto& row : report.rows) {
    for (const auto& f : row.failures) std::cerr << "degree " << row.degree << ": " << f << "\n";
  }
  return report.passed() ? kOk : kFalse;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedDegree:
    case ErrorKind::DegreeCapExceeded:
    case ErrorKind::SizeGuardExceeded:
    case ErrorKind::SyntaxError:
    case ErrorKind::NonHomogeneous:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::MismatchedRing:
    case ErrorKind::InvalidArgument:
    case ErrorKind::OddSize:
      return kUsage;
    case ErrorKind::VerificationFailed:
    case ErrorKind::NotSolvableOverZ:
      return kFalse;
    default:
      return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Linear Pfaffian representations of ternary forms"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json | text | latex")->check(CLI::IsMember({"json", "text", "latex"}));
    sub->add_option("--cache-dir", cfg.cache_dir, "solution cache directory (PFAFFREP_CACHE overrides)");
    sub->add_option("--degree-cap", cfg.degree_cap, "largest degree accepted without --allow-unverified");
    sub->add_flag("--allow-unverified", cfg.allow_unverified, "accept degrees above the cap");
    sub->add_flag("-v,--verbose", "timings and cache activity on stderr");
  };
  auto add_poly = [&](CLI::App* sub) {
    auto* inline_poly = sub->add_option("--poly", cfg.poly, "polynomial, e.g. \"x^5+2*y^5-z^5\"");
    auto* file_poly = sub->add_option("--poly-file", cfg.poly_file, "file holding the polynomial")->check(CLI::ExistingFile);
    inline_poly->excludes(file_poly);
    file_poly->excludes(inline_poly);
    sub->add_option("--ring", cfg.ring, "int | rat | mod:<n>");
  };

  auto* tmpl = app.add_subcommand("template", "emit the symbolic template");
  tmpl->add_option("--degree,-d", cfg.degree)->required();
  add_common(tmpl);

  auto* solve = app.add_subcommand("solve", "solve the coefficient system over Z");
  solve->add_option("--degree,-d", cfg.degree)->required();
  add_common(solve);

  auto* build = app.add_subcommand("build", "build a verified representation of a form");
  build->add_option("--degree,-d", cfg.degree)->required();
  build->add_option("--free", cfg.free, "zeros | random:<seed> | file:<path>");
  build->add_flag("--no-verify", cfg.no_verify, "skip the Pfaffian check (benchmarking only)");
  add_poly(build);
  add_common(build);

  auto* verify = app.add_subcommand("verify", "recompute Pf(M) and compare with a form");
  verify->add_option("--matrix", cfg.matrix_file, "representation or matrix JSON")->required()->check(CLI::ExistingFile);
  add_poly(verify);
  add_common(verify);

  auto* sw = app.add_subcommand("sweep", "build and verify random forms over a degree range");
  sw->add_option("--from", cfg.from)->required();
  sw->add_option("--to", cfg.to)->required();
  sw->add_option("--samples", cfg.samples)->check(CLI::NonNegativeNumber);
  sw->add_option("--rings", cfg.rings, "ring descriptors")->delimiter(',');
  sw->add_option("--seed", cfg.seed);
  add_common(sw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  for (auto* sub : app.get_subcommands()) cfg.verbose = static_cast<int>(sub->count("--verbose"));

  try {
    if (*tmpl) return cmd_template(cfg);
    if (*solve) return cmd_solve(cfg);
    if (*build) return cmd_build(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_sweep(cfg);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kInternal;
  }
}
