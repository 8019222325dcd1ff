#include "sifca/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sifca/analysis.hpp"
#include "sifca/coding_cost.hpp"
#include "sifca/errors.hpp"
#include "sifca/io.hpp"
#include "sifca/validate.hpp"

namespace sifca {
namespace {

struct RangeFlags {
  std::optional<double> r_min, r_max, r_step;
  std::optional<double> angle_min, angle_max, angle_step;

  void attach(CLI::App* cmd) {
    cmd->add_option("--r-min", r_min, "smallest r");
    cmd->add_option("--r-max", r_max, "largest r");
    cmd->add_option("--r-step", r_step, "r spacing");
    cmd->add_option("--angle-min", angle_min, "smallest angle, degrees");
    cmd->add_option("--angle-max", angle_max, "largest angle, degrees");
    cmd->add_option("--angle-step", angle_step, "angle spacing, degrees");
  }

  SweepSpec spec(NodeClass c) const {
    SweepSpec s = SweepSpec::defaults(c);
    if (r_min) s.r.min = *r_min;
    if (r_max) s.r.max = *r_max;
    if (r_step) s.r.step = *r_step;
    if (angle_min) s.angle.min = *angle_min;
    if (angle_max) s.angle.max = *angle_max;
    if (angle_step) s.angle.step = *angle_step;
    return s;
  }
};

NodeClass parse_class(const std::string& s) { return s == "I" ? NodeClass::I : NodeClass::II; }

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& cmd, const std::string& format,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError(cmd + ": format '" + format + "' is not supported here");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw UsageError("failed writing '" + path + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cost advantage of network coding over Steiner routing in the (5+1) model",
               "sifca"};
  app.require_subcommand(1);

  std::string cls = "I";
  std::string format;
  std::string out_path;
  double r = 0.0;
  double angle = 0.0;
  double threshold = 1.0;
  unsigned threads = 0;
  std::string points_path;
  std::string plot_kind = "heatmap";
  double fault_case1 = 0.0;
  int grid_rows = 50;
  int grid_cols = 36;
  RangeFlags ranges;

  const auto add_class = [&](CLI::App* c) {
    c->add_option("--class", cls, "node class")->check(CLI::IsMember({"I", "II"}))->required();
  };
  const auto add_common = [&](CLI::App* c, const char* formats) {
    c->add_option("--format", format, formats);
    c->add_option("--out", out_path, "output file (default stdout)");
  };

  auto* ca = app.add_subcommand("ca", "evaluate one configuration");
  add_class(ca);
  ca->add_option("--r", r, "radius")->required();
  ca->add_option("--angle", angle, "theta (Class I) or alpha (Class II), degrees")->required();
  add_common(ca, "json (default) or csv");

  auto* sw = app.add_subcommand("sweep", "sweep a configuration grid");
  add_class(sw);
  ranges.attach(sw);
  add_common(sw, "csv (default) or json");
  sw->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* rg = app.add_subcommand("region", "extract the CA >= threshold region");
  add_class(rg);
  ranges.attach(rg);
  add_common(rg, "json (default) or svg");
  rg->add_option("--threshold", threshold, "CA threshold");
  rg->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* es = app.add_subcommand("esmt", "Steiner minimal tree of 2-6 points");
  es->add_option("points", points_path, "file with one 'x y' pair per line")->required();
  add_common(es, "json (default) or svg");

  auto* va = app.add_subcommand("validate", "closed forms against the oracle");
  va->add_option("--fault-case1", fault_case1, "offset added to L_I-1 (fault injection)");
  va->add_option("--rows", grid_rows, "grid rows in r");
  va->add_option("--cols", grid_cols, "grid columns in theta");
  va->add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* pl = app.add_subcommand("plot", "SVG heatmap or region plot");
  add_class(pl);
  ranges.attach(pl);
  add_common(pl, "svg (only)");
  pl->add_option("--kind", plot_kind, "heatmap or region")
      ->check(CLI::IsMember({"heatmap", "region"}));
  pl->add_option("--threshold", threshold, "CA threshold for region plots");
  pl->add_option("--threads", threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const NodeClass nc = parse_class(cls);
    SweepOptions sweep_options;
    sweep_options.threads = threads;

    if (*ca) {
      if (format.empty()) format = "json";
      require_format("ca", format, {"json", "csv"});
      const CASample s = nc == NodeClass::I ? sample_class_i(r, angle) : sample_class_ii(r, angle);
      const FeasibilityVerdict v = nc == NodeClass::I ? nc_feasible_class_i({r, deg(angle)})
                                                      : nc_feasible_class_ii({r, deg(angle)});
      if (format == "json") {
        emit(sample_json(nc, s, v), out_path, out);
      } else {
        CAField one;
        one.spec.node_class = nc;
        one.rows = one.cols = 1;
        one.samples = {s};
        std::ostringstream os;
        write_sweep_csv(os, one);
        emit(os.str(), out_path, out);
      }
      return s.feasible ? kExitOk : kExitInfeasible;
    }

    if (*sw) {
      if (format.empty()) format = "csv";
      require_format("sweep", format, {"csv", "json"});
      const CAField f = sweep(ranges.spec(nc), sweep_options);
      if (format == "csv") {
        std::ostringstream os;
        write_sweep_csv(os, f);
        emit(os.str(), out_path, out);
      } else {
        emit(field_json(f), out_path, out);
      }
      return kExitOk;
    }

    if (*rg || *pl) {
      if (format.empty()) format = *rg ? "json" : "svg";
      if (*rg) {
        require_format("region", format, {"json", "svg"});
      } else {
        require_format("plot", format, {"svg"});
      }
      const CAField f = sweep(ranges.spec(nc), sweep_options);
      if (*pl && plot_kind == "heatmap") {
        emit(heatmap_svg(f), out_path, out);
        return kExitOk;
      }
      const RegionSummary summary = extract_region(f, threshold);
      if (summary.empty) err << "note: no cell reaches CA >= " << format_sig(threshold) << '\n';
      emit(format == "json" ? region_json(summary) : region_svg(f, summary), out_path, out);
      return kExitOk;
    }

    if (*es) {
      if (format.empty()) format = "json";
      require_format("esmt", format, {"json", "svg"});
      std::ifstream in(points_path);
      if (!in) throw UsageError("cannot open '" + points_path + "'");
      const auto pts = parse_points(in);
      const SteinerTree t = esmt_oracle(pts);
      emit(format == "json" ? tree_json(t) : tree_svg(t), out_path, out);
      return kExitOk;
    }

    if (*va) {
      ValidateOptions vo;
      vo.closed_form.case1_offset = fault_case1;
      vo.rows = grid_rows;
      vo.cols = grid_cols;
      vo.threads = threads;
      const ValidateReport rep = run_validate(vo);
      print_validate(out, rep);
      return rep.pass() ? kExitOk : kExitInfeasible;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sifca
