#include "champagne/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "champagne/graph_io.hpp"

namespace champagne {
namespace {

double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Point& a) { return std::sqrt(dot(a, a)); }

Point minus(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// a - <a, unit> unit
Point reject(const Point& a, const Point& unit) {
  const double c = dot(a, unit);
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - c * unit[i];
  return out;
}

Vec3 as_vec3(const Point& p) { return {p[0], p[1], p[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

void require_same_dimension(const DirectedLine& a, const DirectedLine& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("lines live in different dimensions");
}

void require_3d(const LineConfig& config) {
  if (config.dim != 3) throw std::invalid_argument("chirality is only defined in R^3");
}

// <x_a x x_b, y_a - y_b>
double triple(const DirectedLine& a, const DirectedLine& b) {
  return dot3(cross(as_vec3(a.dir), as_vec3(b.dir)), as_vec3(minus(a.base, b.base)));
}

}  // namespace

DirectedLine DirectedLine::make(Point base, Point dir) {
  if (base.size() != dir.size()) throw std::invalid_argument("base and direction sizes differ");
  if (base.size() < 2) throw std::invalid_argument("lines need dimension >= 2");
  const double len = norm(dir);
  if (!(len > 0.0) || !std::isfinite(len)) throw std::invalid_argument("direction must be a nonzero vector");
  for (double& c : dir) c /= len;
  return {std::move(base), std::move(dir)};
}

DirectedLine DirectedLine::reversed() const {
  DirectedLine out = *this;
  for (double& c : out.dir) c = -c;
  return out;
}

bool are_parallel(const DirectedLine& a, const DirectedLine& b) {
  require_same_dimension(a, b);
  return norm(reject(b.dir, a.dir)) < kParallelEpsilon;
}

double line_distance(const DirectedLine& a, const DirectedLine& b) {
  require_same_dimension(a, b);
  const Point offset = reject(minus(a.base, b.base), a.dir);
  const Point second = reject(b.dir, a.dir);
  const double len = norm(second);
  if (len < kParallelEpsilon) return norm(offset);
  Point unit = second;
  for (double& c : unit) c /= len;
  return norm(reject(offset, unit));
}

int chirality(const DirectedLine& a, const DirectedLine& b) {
  require_same_dimension(a, b);
  if (a.dimension() != 3) throw std::invalid_argument("chirality is only defined in R^3");
  if (are_parallel(a, b)) throw DegeneratePairError("chirality undefined: lines are parallel");
  const double s = triple(a, b);
  if (std::abs(s) < kChiralityEpsilon) throw DegeneratePairError("chirality undefined: lines intersect");
  return s > 0 ? 1 : -1;
}

ChiralityReport chirality_graph(const LineConfig& config) {
  const int n = static_cast<int>(config.lines.size());
  if (n > kMaxVertices) throw std::invalid_argument("at most 16 lines are supported");
  for (const auto& line : config.lines) {
    if (line.dimension() != config.dim) throw std::invalid_argument("line dimension differs from config");
  }

  ChiralityReport report;
  report.dim = config.dim;
  report.graph = Graph(n);
  report.chirality_defined = config.dim == 3;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = config.lines[i];
      const auto& b = config.lines[j];
      PairDiagnostic d{i, j, line_distance(a, b), are_parallel(a, b), false, std::nullopt};
      const double error = std::abs(d.distance - 1.0);
      report.max_distance_error = std::max(report.max_distance_error, error);
      if (error > config.tolerance) report.distances_ok = false;
      if (d.parallel) {
        report.has_parallel = true;
      } else if (report.chirality_defined) {
        const double s = triple(a, b);
        if (std::abs(s) < kChiralityEpsilon) {
          d.coplanar = true;
          report.has_coplanar = true;
        } else {
          d.chirality = s > 0 ? 1 : -1;
          if (s > 0) report.graph.add_edge(i, j);
        }
      }
      report.pairs.push_back(d);
    }
  }
  return report;
}

double TMatrix::gram_entry(int v, int w) const { return dot3(q[v], x[w]) + dot3(x[v], q[w]); }

TMatrix t_matrix(const LineConfig& config) {
  require_3d(config);
  const int n = static_cast<int>(config.lines.size());
  TMatrix t{FloatMatrix(n), {}, {}};
  for (const auto& line : config.lines) {
    const Vec3 x = as_vec3(line.dir);
    t.x.push_back(x);
    t.q.push_back(cross(as_vec3(line.base), x));
  }
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if (are_parallel(config.lines[v], config.lines[w])) {
        throw DegeneratePairError("T matrix undefined: lines " + std::to_string(v) + " and " +
                                  std::to_string(w) + " are parallel");
      }
      t.a.set(v, w, triple(config.lines[v], config.lines[w]));
    }
  }
  return t;
}

bool RealizationReport::passed() const noexcept {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyCheck& p) { return p.passed; });
}

RealizationReport check_realization(const LineConfig& config, double tol) {
  require_3d(config);
  const int n = static_cast<int>(config.lines.size());
  if (n < 2) throw std::invalid_argument("check_realization needs at least two lines");

  LineConfig checked = config;
  checked.tolerance = tol;
  RealizationReport report;
  report.chirality = chirality_graph(checked);
  if (!report.chirality.distances_ok) {
    throw InvalidConfigError("pairwise distances deviate from 1 by up to " +
                             std::to_string(report.chirality.max_distance_error));
  }
  for (const auto& d : report.chirality.pairs) {
    if (d.parallel || d.coplanar) {
      throw DegeneratePairError("lines " + std::to_string(d.i) + " and " + std::to_string(d.j) +
                                (d.parallel ? " are parallel" : " intersect"));
    }
  }
  report.t = t_matrix(config);
  const auto& a = report.t.a;

  // (1) zero exactly on the diagonal
  PropertyCheck zero{"zero exactly on the diagonal", true, 0.0, ""};
  double smallest = INFINITY;
  for (int v = 0; v < n; ++v) {
    if (a(v, v) != 0.0) zero.passed = false;
    for (int w = v + 1; w < n; ++w) smallest = std::min(smallest, std::abs(a(v, w)));
  }
  zero.margin = smallest;
  zero.passed = zero.passed && smallest > tol;
  zero.detail = "min off-diagonal |a_vw| = " + std::to_string(smallest);

  // (2) signs follow the chirality graph, magnitudes are |x_v x x_w|
  PropertyCheck signs{"positive exactly on chirality-graph edges", true, 0.0, ""};
  double worst = 0.0;
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      if ((a(v, w) > 0) != report.chirality.graph.adjacent(v, w)) signs.passed = false;
      const double magnitude = std::sqrt(dot3(cross(report.t.x[v], report.t.x[w]),
                                              cross(report.t.x[v], report.t.x[w])));
      worst = std::max(worst, std::abs(std::abs(a(v, w)) - magnitude));
    }
  }
  signs.margin = worst;
  signs.passed = signs.passed && worst <= tol;
  signs.detail = "max ||a_vw| - |x_v x x_w|| = " + std::to_string(worst);

  // (3) at most three negative eigenvalues
  report.t_signature = signature_float(a);
  PropertyCheck negatives{"at most 3 negative eigenvalues", report.t_signature.n_minus <= 3,
                          static_cast<double>(3 - report.t_signature.n_minus),
                          "signature of T = " + to_string(report.t_signature)};

  // (4) (|a_vw|) has signature (1, 0, n - 1)
  FloatMatrix absolute(n);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) absolute.set(v, w, std::abs(a(v, w)));
  }
  report.abs_signature = signature_float(absolute);
  const Signature want{1, 0, n - 1};
  PropertyCheck hyperbolic{"|T| has signature (1,0,n-1)", report.abs_signature == want, 0.0,
                           "signature of |T| = " + to_string(report.abs_signature)};

  report.properties = {zero, signs, negatives, hyperbolic};
  return report;
}

LineConfig lower_bound_config(int n) {
  if (n < 3) throw std::invalid_argument("lower_bound_config needs n >= 3");
  const int vertices = n - 1;
  const int simplex_dim = n - 2;

  // Unit simplex: each new vertex sits above the centroid of the previous
  // ones at height sqrt(1 - R^2), R^2 = (m - 1) / (2m) for m vertices.
  std::vector<Point> simplex(vertices, Point(simplex_dim, 0.0));
  for (int m = 1; m < vertices; ++m) {
    Point centroid(simplex_dim, 0.0);
    for (int i = 0; i < m; ++i) {
      for (int c = 0; c < simplex_dim; ++c) centroid[c] += simplex[i][c] / m;
    }
    const double circumradius_sq = static_cast<double>(m - 1) / (2.0 * m);
    centroid[m - 1] = std::sqrt(1.0 - circumradius_sq);
    simplex[m] = centroid;
  }

  LineConfig config;
  config.dim = n;
  config.tolerance = 1e-12;
  for (int i = 0; i < vertices; ++i) {
    const double theta = i * std::numbers::pi / vertices;
    const double dx = std::cos(theta);
    const double dy = std::sin(theta);
    for (double side : {0.5, -0.5}) {
      Point base = simplex[i];
      base.push_back(-dy * side);
      base.push_back(dx * side);
      Point dir(simplex_dim, 0.0);
      dir.push_back(dx);
      dir.push_back(dy);
      config.lines.push_back(DirectedLine::make(std::move(base), std::move(dir)));
    }
  }
  return config;
}

void to_json(nlohmann::json& j, const LineConfig& config) {
  auto lines = nlohmann::json::array();
  for (const auto& line : config.lines) lines.push_back({{"base", line.base}, {"dir", line.dir}});
  j = nlohmann::json{{"dim", config.dim}, {"tolerance", config.tolerance}, {"lines", std::move(lines)}};
}

void from_json(const nlohmann::json& j, LineConfig& config) {
  try {
    if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array()) {
      throw ParseError("line config needs a \"lines\" array");
    }
    LineConfig out;
    out.tolerance = j.value("tolerance", kDefaultDistanceTolerance);
    if (!(out.tolerance > 0.0)) throw ParseError("line config tolerance must be positive");
    out.dim = j.contains("dim") ? j["dim"].get<int>()
                                : (j["lines"].empty() ? 3 : static_cast<int>(j["lines"][0]["base"].size()));
    for (const auto& line : j["lines"]) {
      auto made = DirectedLine::make(line.at("base").get<Point>(), line.at("dir").get<Point>());
      if (made.dimension() != out.dim) throw ParseError("line dimension differs from \"dim\"");
      out.lines.push_back(std::move(made));
    }
    config = std::move(out);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("line config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("line config: ") + e.what());
  }
}

nlohmann::json to_json(const ChiralityReport& r) {
  auto pairs = nlohmann::json::array();
  for (const auto& d : r.pairs) {
    nlohmann::json p{{"i", d.i}, {"j", d.j}, {"distance", d.distance}, {"parallel", d.parallel},
                     {"coplanar", d.coplanar}};
    p["chirality"] = d.chirality ? nlohmann::json(*d.chirality) : nlohmann::json(nullptr);
    pairs.push_back(std::move(p));
  }
  nlohmann::json out{{"dim", r.dim},
                     {"lines", r.graph.order()},
                     {"chirality_defined", r.chirality_defined},
                     {"distances_ok", r.distances_ok},
                     {"max_distance_error", r.max_distance_error},
                     {"has_parallel", r.has_parallel},
                     {"has_coplanar", r.has_coplanar},
                     {"valid", r.valid()},
                     {"pairs", std::move(pairs)}};
  if (r.chirality_defined) {
    out["graph"] = r.graph;
  } else {
    out["graph"] = nullptr;
  }
  return out;
}

nlohmann::json to_json(const RealizationReport& r) {
  auto properties = nlohmann::json::array();
  for (const auto& p : r.properties) {
    properties.push_back({{"name", p.name}, {"passed", p.passed}, {"margin", p.margin}, {"detail", p.detail}});
  }
  const auto triple_json = [](const Signature& s) {
    return nlohmann::json::array({s.n_plus, s.n_zero, s.n_minus});
  };
  return {{"chirality", to_json(r.chirality)},
          {"t_matrix", matrix_to_json(r.t.a)},
          {"t_signature", triple_json(r.t_signature)},
          {"abs_t_signature", triple_json(r.abs_signature)},
          {"properties", std::move(properties)},
          {"passed", r.passed()}};
}

}  // namespace champagne
