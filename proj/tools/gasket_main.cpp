// Command-line front end: stages, certificates, thickness scans, the sharp
// witness, sumsets, bound queries and SVG figure rendering.
//
// Exit codes: 0 success, 2 usage error, 3 resource limit, 4 internal
// invariant violation. Failures print a machine-readable JSON object on
// stderr. Artifacts are written atomically (temp file + rename).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gasket/errors.hpp"
#include "gasket/serialize.hpp"
#include "gasket/svg.hpp"

namespace {

using namespace gasket;

struct Options {
  int level = 4;
  int sample_level = 8;
  int query_level = 3;
  int n_terms = 2;
  int threads = 1;
  int dimension = 2;
  std::string point_spec = "v1";
  std::string radius_spec = "1";
  std::string radii_spec;
  bool radii_given = false;
  std::string thickness_spec = "sqrt3/6";
  std::string spacing_spec = "1/32";
  std::string disk_spec;
  std::string format = "json";
  std::string out_path;
  std::string subject = "stage";
  bool dry_run = false;
};

int level_cap_from_env() {
  const char* env = std::getenv("GASKET_LEVEL_CAP");
  if (!env) return kDefaultLevelCap;
  char* end = nullptr;
  long cap = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || cap < 0 || cap > 15)
    throw DomainError("GASKET_LEVEL_CAP must be an integer in 0..15");
  return static_cast<int>(cap);
}

void write_artifact(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(out_path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw DomainError("cannot open output file: " + out_path);
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!f) throw DomainError("write failed: " + out_path);
  }
  fs::rename(tmp, target);
}

WitnessedPoint witnessed_query(const Point& p, int level_cap) {
  for (int m = 0; m <= level_cap; ++m)
    for (const Word& w : locate_cells(p, m, level_cap))
      if (auto wit = witness_on_cell(w, p)) return {p, *wit};
  throw DomainError(
      "query point carries no membership witness up to the level cap; "
      "choose a point on a construction-cell side");
}

std::vector<Rat> parse_radii(const std::string& spec) {
  if (spec.empty()) throw DomainError("empty radii list");
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    out.push_back(io::parse_rat(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

geom::Disk parse_disk(const std::string& spec) {
  auto c1 = spec.find(',');
  auto c2 = spec.find(',', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw DomainError("disk must be 'cx,cy,radius'");
  geom::Disk d;
  d.cx = io::parse_rat(spec.substr(0, c1)).to_double();
  d.cy = io::parse_rat(spec.substr(c1 + 1, c2 - c1 - 1)).to_double();
  d.radius = io::parse_rat(spec.substr(c2 + 1)).to_double();
  if (d.radius <= 0) throw DomainError("disk radius must be positive");
  return d;
}

int run_stage(const Options& opt, int cap) {
  if (opt.format != "json" && opt.format != "svg")
    throw DomainError("stage supports --format json|svg");
  if (opt.format == "svg" && opt.level > svg::kRenderLevelCap)
    throw ResourceError("render cap is level " +
                        std::to_string(svg::kRenderLevelCap));
  if (opt.dry_run) {
    if (opt.level < 0 || opt.level > cap)
      throw ResourceError("level cap exceeded");
    return 0;
  }
  StageSet s = stage(opt.level, cap);
  write_artifact(opt.out_path, opt.format == "json"
                                   ? io::dump(io::to_json(s))
                                   : svg::render_stage(s));
  return 0;
}

int run_certificate(const Options& opt, int cap) {
  if (opt.format != "json" && opt.format != "svg")
    throw DomainError("certificate supports --format json|svg");
  Point x = io::parse_point(opt.point_spec);
  Rat r = io::parse_rat(opt.radius_spec);
  if (opt.dry_run) {
    if (r.sign() <= 0 || r > Rat(1))
      throw DomainError("radius must lie in (0, 1]");
    return 0;
  }
  auto cert = thickness::local_triangle(witnessed_query(x, cap), r);
  write_artifact(opt.out_path, opt.format == "json"
                                   ? io::dump(io::to_json(cert))
                                   : svg::render_certificate(cert));
  return 0;
}

int run_scan(const Options& opt, int cap) {
  if (opt.format != "json" && opt.format != "csv")
    throw DomainError("scan supports --format json|csv");
  auto radii = opt.radii_given ? parse_radii(opt.radii_spec)
                               : thickness::default_radii();
  if (opt.dry_run) {
    if (opt.sample_level > cap || opt.query_level > cap)
      throw ResourceError("level cap exceeded");
    if (radii.empty()) throw DomainError("empty radii list");
    return 0;
  }
  auto report = thickness::thickness_scan(opt.sample_level, opt.query_level,
                                          radii, opt.threads, cap);
  write_artifact(opt.out_path, opt.format == "json"
                                   ? io::dump(io::to_json(report))
                                   : io::scan_csv(report));
  return 0;
}

int run_witness(const Options& opt, int cap) {
  if (opt.format != "json") throw DomainError("witness supports --format json");
  if (opt.dry_run) {
    if (opt.sample_level > cap) throw ResourceError("level cap exceeded");
    return 0;
  }
  auto report = thickness::witness_report(opt.sample_level, cap);
  write_artifact(opt.out_path, io::dump(io::to_json(report)));
  return 0;
}

int run_sumset(const Options& opt, int cap) {
  if (opt.format != "json" && opt.format != "csv")
    throw DomainError("sumset supports --format json|csv");
  sumset::SumsetConfig cfg;
  cfg.n_terms = opt.n_terms;
  cfg.sample_level = opt.sample_level;
  cfg.coverage_spacing = io::parse_rat(opt.spacing_spec);
  if (opt.dry_run) {
    if (cfg.n_terms < 1) throw DomainError("n_terms must be >= 1");
    if (cfg.sample_level > cap) throw ResourceError("level cap exceeded");
    return 0;
  }
  auto pts = sumset::sumset_sample(cfg, cap);
  if (opt.format == "csv") {
    write_artifact(opt.out_path, io::points_csv(pts));
    return 0;
  }
  io::json j{{"n_terms", cfg.n_terms},
             {"sample_level", cfg.sample_level},
             {"count", pts.size()}};
  if (!opt.disk_spec.empty()) {
    auto disk = parse_disk(opt.disk_spec);
    j["coverage"] = io::to_json(
        sumset::interior_coverage_check(pts, disk, cfg.coverage_spacing));
    j["coverage_note"] =
        "covering-density evidence only; the exact interior proof for E+E "
        "is the segment-sum parallelogram";
  }
  write_artifact(opt.out_path, io::dump(j));
  return 0;
}

int run_bound(const Options& opt) {
  if (opt.format != "json") throw DomainError("bound supports --format json");
  sumset::BoundQuery q{opt.dimension, io::parse_thickness(opt.thickness_spec)};
  if (opt.dry_run) {
    if (q.dimension < 1 || !(q.thickness > 0) || q.thickness > 1)
      throw DomainError("bound requires d >= 1 and c in (0, 1]");
    return 0;
  }
  auto res = sumset::kominers_min_summands(q);
  write_artifact(opt.out_path, io::dump(io::to_json(q, res)));
  return 0;
}

int run_render(const Options& opt, int cap) {
  if (opt.subject == "stage") {
    Options o = opt;
    o.format = "svg";
    return run_stage(o, cap);
  }
  if (opt.subject == "certificate") {
    Options o = opt;
    o.format = "svg";
    return run_certificate(o, cap);
  }
  if (opt.subject == "parallelogram") {
    if (opt.dry_run) return 0;
    auto para = sumset::segment_sum({vertex1(), vertex2()},
                                    {vertex1(), vertex3()});
    write_artifact(opt.out_path, svg::render_parallelogram(para));
    return 0;
  }
  throw DomainError("render subject must be stage|certificate|parallelogram");
}

int fail(const std::string& kind, const std::string& message, int code) {
  io::json j{{"error", {{"kind", kind}, {"message", message}}}};
  std::cerr << j.dump() << "\n";
  return code;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact Sierpinski gasket thickness toolkit"};
  app.require_subcommand(1);

  Options opt;
  std::string chosen;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format");
    sub->add_option("--out", opt.out_path, "output path (default stdout)");
    sub->add_flag("--dry-run", opt.dry_run,
                  "validate the configuration without computing");
    sub->callback([&chosen, sub] { chosen = sub->get_name(); });
  };

  auto* stage_cmd = app.add_subcommand("stage", "enumerate one stage set");
  stage_cmd->add_option("--level", opt.level, "stage level m");
  add_common(stage_cmd);

  auto* cert_cmd =
      app.add_subcommand("certificate", "certificate triangle for (x, r)");
  cert_cmd->add_option("--x", opt.point_spec,
                       "query point: v1|v2|v3|m12|m13|m23 or 'u,w'");
  cert_cmd->add_option("--r", opt.radius_spec, "radius in (0,1], e.g. 1/5");
  add_common(cert_cmd);

  auto* scan_cmd =
      app.add_subcommand("scan", "brute-force thickness scan over a grid");
  scan_cmd->add_option("--sample-level", opt.sample_level, "sample level");
  scan_cmd->add_option("--query-level", opt.query_level, "query level");
  scan_cmd->add_option("--radii", opt.radii_spec,
                       "comma-separated radii (default k/32 grid)");
  scan_cmd->add_option("--threads", opt.threads, "worker threads");
  add_common(scan_cmd);

  auto* witness_cmd =
      app.add_subcommand("witness", "sharp upper-bound witness at (v1, 1)");
  witness_cmd->add_option("--sample-level", opt.sample_level, "sample level");
  add_common(witness_cmd);

  auto* sumset_cmd =
      app.add_subcommand("sumset", "n-fold sums of the witnessed sample");
  sumset_cmd->add_option("--n-terms", opt.n_terms, "number of summands");
  sumset_cmd->add_option("--sample-level", opt.sample_level, "sample level");
  sumset_cmd->add_option("--spacing", opt.spacing_spec, "coverage grid pitch");
  sumset_cmd->add_option("--disk", opt.disk_spec,
                         "coverage disk 'cx,cy,radius' (json format only)");
  add_common(sumset_cmd);

  auto* bound_cmd =
      app.add_subcommand("bound", "many-summand interior bound calculator");
  bound_cmd->add_option("--d", opt.dimension, "ambient dimension");
  bound_cmd->add_option("--c", opt.thickness_spec,
                        "thickness, e.g. sqrt3/6 or 1/4");
  add_common(bound_cmd);

  auto* render_cmd = app.add_subcommand("render", "SVG figure emitter");
  render_cmd->add_option("--subject", opt.subject,
                         "stage|certificate|parallelogram");
  render_cmd->add_option("--level", opt.level, "stage level (subject stage)");
  render_cmd->add_option("--x", opt.point_spec, "query point (certificate)");
  render_cmd->add_option("--r", opt.radius_spec, "radius (certificate)");
  add_common(render_cmd);

  try {
    app.parse(argc, argv);
    opt.radii_given = scan_cmd->count("--radii") > 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::ostringstream silent;
    app.exit(e, silent, silent);
    return fail("usage", e.what(), 2);
  }

  try {
    int cap = level_cap_from_env();
    if (chosen == "stage") return run_stage(opt, cap);
    if (chosen == "certificate") return run_certificate(opt, cap);
    if (chosen == "scan") return run_scan(opt, cap);
    if (chosen == "witness") return run_witness(opt, cap);
    if (chosen == "sumset") return run_sumset(opt, cap);
    if (chosen == "bound") return run_bound(opt);
    if (chosen == "render") return run_render(opt, cap);
    return fail("usage", "no subcommand selected", 2);
  } catch (const ResourceError& e) {
    return fail("resource", e.what(), 3);
  } catch (const InvariantError& e) {
    return fail("invariant", e.what(), 4);
  } catch (const DomainError& e) {
    return fail("usage", e.what(), 2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const std::exception& e) {
    try {
      return fail("internal", e.what(), 4);
    } catch (...) {
    }
  } catch (...) {
  }
  std::fputs("{\"error\":{\"kind\":\"internal\",\"message\":\"fatal\"}}\n",
             stderr);
  return 4;
}
