#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sifca/analysis.hpp"
#include "sifca/coding_cost.hpp"
#include "sifca/errors.hpp"
#include "sifca/model.hpp"
#include "sifca/routing_cost.hpp"

namespace py = pybind11;
using namespace sifca;

namespace {

py::dict sample_dict(const CASample& s) {
  py::dict d;
  d["r"] = s.r;
  d["angle_deg"] = s.angle;
  d["nc_cost"] = s.nc_cost;
  d["route_cost"] = s.route_cost;
  d["feasible"] = s.feasible;
  d["ca"] = s.ca ? py::object(py::float_(*s.ca)) : py::object(py::none());
  return d;
}

std::vector<Point> to_points(const std::vector<std::pair<double, double>>& xy) {
  std::vector<Point> pts;
  for (const auto& [x, y] : xy) pts.push_back({x, y});
  return pts;
}

py::list point_list(const std::vector<Point>& pts) {
  py::list l;
  for (const auto& p : pts) l.append(py::make_tuple(p.x, p.y));
  return l;
}

NodeClass node_class(const std::string& s) {
  if (s == "I") return NodeClass::I;
  if (s == "II") return NodeClass::II;
  throw py::value_error("node class must be 'I' or 'II'");
}

}  // namespace

PYBIND11_MODULE(_sifca, m) {
  m.doc() = "Network coding versus Steiner routing cost in the (5+1) model";

  py::register_exception<Error>(m, "SifcaError", PyExc_ValueError);

  m.def("nc_cost_class_i", [](double r, double theta) { return nc_cost_class_i({r, deg(theta)}); },
        py::arg("r"), py::arg("theta"));
  m.def("nc_cost_class_ii", [](double r, double alpha) { return nc_cost_class_ii({r, deg(alpha)}); },
        py::arg("r"), py::arg("alpha"));
  m.def("cost_advantage", &cost_advantage, py::arg("nc"), py::arg("route"));

  m.def(
      "closed_form_class_i",
      [](double r, double theta) {
        const auto c = closed_form_class_i({r, deg(theta)});
        py::dict d;
        d["costs"] = std::vector<double>(c.costs.begin(), c.costs.end());
        d["minimum"] = c.minimum;
        d["argmin"] = c.argmin;
        d["case4"] = to_string(c.case4);
        d["case5"] = to_string(c.case5);
        return d;
      },
      py::arg("r"), py::arg("theta"));

  m.def(
      "esmt",
      [](const std::vector<std::pair<double, double>>& xy) {
        const auto t = esmt_oracle(to_points(xy));
        py::dict d;
        d["total_cost"] = t.total_cost;
        d["terminals"] = point_list(t.terminals);
        d["steiner_points"] = point_list(t.steiner_points);
        py::list edges;
        for (const auto& e : t.edges) edges.append(py::make_tuple(e.u, e.v, e.length));
        d["edges"] = edges;
        return d;
      },
      py::arg("points"));
  m.def("mst", [](const std::vector<std::pair<double, double>>& xy) { return mst(to_points(xy)); },
        py::arg("points"));
  m.def("full_topology_count", [](int k) { return enumerate_full_topologies(k).size(); },
        py::arg("k"));

  m.def("sample", [](const std::string& c, double r, double angle) {
    return sample_dict(node_class(c) == NodeClass::I ? sample_class_i(r, angle)
                                                     : sample_class_ii(r, angle));
  }, py::arg("node_class"), py::arg("r"), py::arg("angle"));

  m.def(
      "sweep",
      [](const std::string& c, std::pair<double, double> r_range, double r_step,
         std::pair<double, double> angle_range, double angle_step, unsigned threads) {
        SweepSpec spec{node_class(c),
                       {r_range.first, r_range.second, r_step},
                       {angle_range.first, angle_range.second, angle_step}};
        SweepOptions opts;
        opts.threads = threads;
        CAField f;
        {
          py::gil_scoped_release release;
          f = sweep(spec, opts);
        }
        py::list rows;
        for (const auto& s : f.samples) rows.append(sample_dict(s));
        return rows;
      },
      py::arg("node_class"), py::arg("r_range"), py::arg("r_step"), py::arg("angle_range"),
      py::arg("angle_step"), py::arg("threads") = 0);

  m.def(
      "region",
      [](const std::string& c, std::pair<double, double> r_range, double r_step,
         std::pair<double, double> angle_range, double angle_step, double threshold) {
        SweepSpec spec{node_class(c),
                       {r_range.first, r_range.second, r_step},
                       {angle_range.first, angle_range.second, angle_step}};
        RegionSummary s;
        {
          py::gil_scoped_release release;
          s = extract_region(sweep(spec), threshold);
        }
        py::dict d;
        d["empty"] = s.empty;
        if (s.max) {
          d["max_ca"] = s.max->ca;
          d["argmax"] = py::make_tuple(s.max->r, s.max->angle);
        }
        d["mean_boundary_radius"] = s.mean_boundary_radius;
        d["max_boundary_deviation"] = s.max_boundary_deviation;
        d["min_ca_distance"] =
            s.min_ca_distance ? py::object(py::float_(*s.min_ca_distance)) : py::object(py::none());
        py::list b;
        for (const auto& p : s.boundary) b.append(py::make_tuple(p.angle, p.r));
        d["boundary"] = b;
        return d;
      },
      py::arg("node_class"), py::arg("r_range"), py::arg("r_step"), py::arg("angle_range"),
      py::arg("angle_step"), py::arg("threshold") = 1.0);
}
