#include "spiralcert/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spiralcert/gaps.hpp"
#include "spiralcert/render.hpp"
#include "spiralcert/report_json.hpp"
#include "spiralcert/spiral.hpp"
#include "spiralcert/stats.hpp"

namespace spiralcert::cli {

namespace {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw OutputError("cannot open output path: " + path);
  file << content;
  if (!file) throw OutputError("failed writing output: " + path);
}

std::string num17(double v) {
  char buf[40];
  if (!std::isfinite(v)) return "null";
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double default_annulus_width(const RunConfig& config) {
  if (config.family == "sqrt") {
    double h = 1.0 / config.alpha;
    while (config.alpha * h > 1.0) h = std::nextafter(h, 0.0);
    return h;
  }
  return 1.0;
}

void check_format(const RunConfig& config, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (config.format == a) return;
  }
  throw CLI::ValidationError("--format", "format not supported by this subcommand");
}

void run_generate(const RunConfig& config) {
  PhaseFamily family = family_from(config);
  if (config.format == "csv") {
    std::string out = "n,x,y,radius,phase_frac\n";
    generate_chunked(family, config.n_max, [&](std::span<const SpiralPoint> chunk) {
      for (const SpiralPoint& p : chunk) {
        out += std::to_string(p.n);
        out += ',';
        out += num12(p.x);
        out += ',';
        out += num12(p.y);
        out += ',';
        out += num12(p.radius);
        out += ',';
        out += num12(p.phase_frac);
        out += '\n';
      }
    });
    write_output(config.out, out);
    return;
  }
  std::string out = "{\"schema_version\":1,\"type\":\"points\",\"points\":[";
  bool first = true;
  generate_chunked(family, config.n_max, [&](std::span<const SpiralPoint> chunk) {
    for (const SpiralPoint& p : chunk) {
      if (!first) out += ',';
      first = false;
      out += '[';
      out += std::to_string(p.n);
      out += ',';
      out += num17(p.x);
      out += ',';
      out += num17(p.y);
      out += ',';
      out += num17(p.radius);
      out += ',';
      out += num17(p.phase_frac);
      out += ']';
    }
  });
  out += "]}\n";
  write_output(config.out, out);
}

void run_window(const RunConfig& config) {
  write_output(config.out, to_json(window(config.radius, config.width)) + "\n");
}

void run_gaps(const RunConfig& config) {
  PhaseFamily family = family_from(config);
  write_output(config.out,
               to_json(window_gaps(family, config.radius, config.width)) + "\n");
}

void run_delone(const RunConfig& config) {
  PhaseFamily family = family_from(config);
  DeloneOptions options;
  options.covering_eps = config.eps;
  write_output(config.out, to_json(delone_verdict(family, config.r_max, options)) + "\n");
}

void run_density(const RunConfig& config) {
  PhaseFamily family = family_from(config);
  std::int64_t count = sector_count(family, config.sector);
  double ratio = density_ratio(family, config.sector);
  double width = config.sector.angle_hi - config.sector.angle_lo;
  double expected = width *
                    (config.sector.radius_hi - config.sector.radius_lo) *
                    (config.sector.radius_hi + config.sector.radius_lo);
  std::string out = "{\"schema_version\":1,\"type\":\"density\",\"sector\":{\"angle_lo\":";
  out += num17(config.sector.angle_lo);
  out += ",\"angle_hi\":" + num17(config.sector.angle_hi);
  out += ",\"radius_lo\":" + num17(config.sector.radius_lo);
  out += ",\"radius_hi\":" + num17(config.sector.radius_hi);
  out += "},\"count\":" + std::to_string(count);
  out += ",\"expected\":" + num17(expected);
  out += ",\"ratio\":" + num17(ratio) + "}\n";
  write_output(config.out, out);
}

void run_stats(const RunConfig& config) {
  PhaseFamily family = family_from(config);
  if (config.stat_kind == "hist") {
    GapHistogram hist = gap_histogram(family, config.n_max, config.bins);
    if (config.format == "csv") {
      std::string out = "bin_lo,bin_hi,count\n";
      for (std::size_t i = 0; i < hist.counts.size(); ++i) {
        out += i == 0 ? "-inf" : num12(hist.bin_edges[i - 1]);
        out += ',';
        out += i == hist.bin_edges.size() ? "inf" : num12(hist.bin_edges[i]);
        out += ',';
        out += std::to_string(hist.counts[i]);
        out += '\n';
      }
      write_output(config.out, out);
    } else {
      write_output(config.out, to_json(hist) + "\n");
    }
    return;
  }
  if (config.stat_kind == "pair") {
    PairCorrelationReport report =
        pair_correlation(config.n_max, config.s_values, config.include_squares);
    if (config.format == "csv") {
      std::string out = "s,r2,expected\n";
      for (std::size_t i = 0; i < report.s_values.size(); ++i) {
        out += num12(report.s_values[i]);
        out += ',';
        out += num12(report.statistics[i]);
        out += ',';
        out += num12(report.expected[i]);
        out += '\n';
      }
      write_output(config.out, out);
    } else {
      write_output(config.out, to_json(report) + "\n");
    }
    return;
  }
  throw CLI::ValidationError("--kind", "stats kind must be hist or pair");
}

void run_render(const RunConfig& config) {
  PhaseFamily family = family_from(config);
  std::vector<SpiralPoint> points = generate(family, config.n_max);
  RenderOptions options;
  options.marker_radius = config.marker;
  options.annuli = config.annuli;
  options.annulus_width = config.width > 0.0 ? config.width : default_annulus_width(config);
  write_output(config.out, render_spiral(points, options));
}

}  // namespace

PhaseFamily family_from(const RunConfig& config) {
  if (config.family == "sqrt") return PhaseFamily::sqrt_linear(config.alpha);
  if (config.family == "linear") return PhaseFamily::linear(config.alpha);
  if (config.family == "power") return PhaseFamily::power(config.alpha, config.beta);
  if (config.family == "custom") return PhaseFamily::custom(config.custom_values);
  throw std::invalid_argument("unknown family: " + config.family);
}

std::string serialize_alpha(double alpha, const std::string& alpha_spec) {
  if (alpha_spec == "sqrt_pi" || alpha_spec == "sqrt_golden") return alpha_spec;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", alpha);
  return buf;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("spiralcert");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

int run(int argc, const char* const* argv) {
  RunConfig config;
  CLI::App app{"spiral point sets: generation, gap certificates, statistics"};
  app.require_subcommand(1);
  // --h is a data flag, so help loses its short form
  app.set_help_flag("--help", "print help");
  app.option_defaults()->ignore_case(false);

  auto add_family = [&config](CLI::App* sub) {
    sub->set_help_flag("--help", "print help");
    sub->add_option("--family", config.family, "sqrt | linear | power | custom")
        ->check(CLI::IsMember({"sqrt", "linear", "power", "custom"}));
    sub->add_option("--alpha", config.alpha_spec,
                    "decimal literal, sqrt_pi or sqrt_golden");
    sub->add_option("--beta", config.beta, "exponent for the power family");
    sub->add_option("--custom-values", config.custom_values,
                    "comma-separated phase list for the custom family")
        ->delimiter(',');
  };

  CLI::App* generate = app.add_subcommand("generate", "emit points as CSV or JSON");
  add_family(generate);
  generate->add_option("--n-max", config.n_max, "number of points")->required();
  generate->add_option("--format", config.format, "csv | json");
  generate->add_option("--out", config.out, "output path (default stdout)");

  CLI::App* window_cmd = app.add_subcommand("window", "index window of one annulus");
  window_cmd->set_help_flag("--help", "print help");
  window_cmd->add_option("--r", config.radius, "inner radius")->required();
  window_cmd->add_option("--h", config.width, "width")->required();
  window_cmd->add_option("--format", config.format, "json");
  window_cmd->add_option("--out", config.out, "output path");

  CLI::App* gaps_cmd = app.add_subcommand("gaps", "circular gaps over one window");
  add_family(gaps_cmd);
  gaps_cmd->add_option("--r", config.radius, "inner radius")->required();
  gaps_cmd->add_option("--h", config.width, "width")->required();
  gaps_cmd->add_option("--format", config.format, "json");
  gaps_cmd->add_option("--out", config.out, "output path");

  CLI::App* delone = app.add_subcommand("delone", "gap certificate + plane empirics");
  add_family(delone);
  delone->add_option("--r-max", config.r_max, "largest certified inner radius");
  delone->add_option("--eps", config.eps, "covering-estimate sample spacing");
  delone->add_option("--format", config.format, "json");
  delone->add_option("--out", config.out, "output path");

  CLI::App* density = app.add_subcommand("density", "sector count against density 1/pi");
  add_family(density);
  density->add_option("--a", config.sector.angle_lo, "angular lower bound (turns)");
  density->add_option("--b", config.sector.angle_hi, "angular upper bound (turns)");
  density->add_option("--c", config.sector.radius_lo, "inner radius");
  density->add_option("--d", config.sector.radius_hi, "outer radius")->required();
  density->add_option("--format", config.format, "json");
  density->add_option("--out", config.out, "output path");

  CLI::App* stats = app.add_subcommand("stats", "gap histogram / pair correlation");
  add_family(stats);
  stats->add_option("--kind", config.stat_kind, "hist | pair")
      ->check(CLI::IsMember({"hist", "pair"}));
  stats->add_option("--n-max", config.n_max, "sample size")->required();
  stats->add_option("--s", config.s_values, "pair-correlation window half-widths")
      ->delimiter(',');
  stats->add_option("--bins", config.bins, "histogram bin edges")->delimiter(',');
  stats->add_flag("--include-squares", config.include_squares,
                  "keep perfect-square indices in the pair statistic");
  stats->add_option("--format", config.format, "csv | json");
  stats->add_option("--out", config.out, "output path");

  CLI::App* render = app.add_subcommand("render", "SVG scatter of the point set");
  add_family(render);
  render->add_option("--n-max", config.n_max, "number of points")->required();
  render->add_flag("--annuli", config.annuli, "overlay annuli of width h (default 1/alpha)");
  render->add_option("--h", config.width, "annulus width override")
      ->default_val(0.0);
  render->add_option("--marker", config.marker, "point marker radius");
  render->add_option("--format", config.format, "svg");
  render->add_option("--out", config.out, "output path");

  try {
    app.parse(argc, argv);
    config.alpha = resolve_alpha(config.alpha_spec);

    if (generate->parsed()) {
      config.subcommand = "generate";
      if (config.format.empty()) config.format = "csv";
      check_format(config, {"csv", "json"});
      run_generate(config);
    } else if (window_cmd->parsed()) {
      config.subcommand = "window";
      if (config.format.empty()) config.format = "json";
      check_format(config, {"json"});
      run_window(config);
    } else if (gaps_cmd->parsed()) {
      config.subcommand = "gaps";
      if (config.format.empty()) config.format = "json";
      check_format(config, {"json"});
      run_gaps(config);
    } else if (delone->parsed()) {
      config.subcommand = "delone";
      if (config.format.empty()) config.format = "json";
      check_format(config, {"json"});
      run_delone(config);
    } else if (density->parsed()) {
      config.subcommand = "density";
      if (config.format.empty()) config.format = "json";
      check_format(config, {"json"});
      run_density(config);
    } else if (stats->parsed()) {
      config.subcommand = "stats";
      if (config.format.empty()) config.format = "json";
      check_format(config, {"csv", "json"});
      if (config.s_values.empty()) config.s_values = {0.5, 1.0, 2.0};
      if (config.bins.empty()) {
        config.bins = {0.0, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0};
      }
      run_stats(config);
    } else if (render->parsed()) {
      config.subcommand = "render";
      if (config.format.empty()) config.format = "svg";
      check_format(config, {"svg"});
      run_render(config);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace spiralcert::cli
