#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "champagne/graph.hpp"
#include "champagne/signature.hpp"

namespace champagne {

using Point = std::vector<double>;
using Vec3 = std::array<double, 3>;

/// Directions closer than this (norm of the rejection of one unit direction
/// from the other) are parallel.
inline constexpr double kParallelEpsilon = 1e-12;
/// |<x x x', y - y'>| below this leaves the chirality undefined.
inline constexpr double kChiralityEpsilon = 1e-12;
inline constexpr double kDefaultDistanceTolerance = 1e-9;

class DegeneratePairError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The line R * dir + base, with |dir| = 1.
struct DirectedLine {
  Point base;
  Point dir;

  /// Normalizes dir. Throws std::invalid_argument on a zero direction,
  /// mismatched sizes or dimension < 2.
  static DirectedLine make(Point base, Point dir);

  int dimension() const noexcept { return static_cast<int>(base.size()); }
  DirectedLine reversed() const;
};

struct LineConfig {
  int dim = 3;
  double tolerance = kDefaultDistanceTolerance;
  std::vector<DirectedLine> lines;
};

bool are_parallel(const DirectedLine& a, const DirectedLine& b);

/// Distance between two lines of the same dimension. Non-parallel: the part
/// of y_a - y_b orthogonal to span{x_a, x_b}; parallel: point-to-line.
double line_distance(const DirectedLine& a, const DirectedLine& b);

/// Sign of <x_a x x_b, y_a - y_b>, symmetric in its arguments. Only
/// defined in R^3. Throws DegeneratePairError for parallel or intersecting
/// lines, std::invalid_argument outside R^3.
int chirality(const DirectedLine& a, const DirectedLine& b);

struct PairDiagnostic {
  int i = 0;
  int j = 0;
  double distance = 0.0;
  bool parallel = false;
  bool coplanar = false;  // intersecting, non-parallel
  std::optional<int> chirality;
};

struct ChiralityReport {
  int dim = 3;
  Graph graph;  // edge where chirality is +1
  std::vector<PairDiagnostic> pairs;
  bool chirality_defined = true;  // false outside R^3
  bool distances_ok = true;       // every pair within tolerance of 1
  double max_distance_error = 0.0;
  bool has_parallel = false;
  bool has_coplanar = false;

  bool valid() const noexcept {
    return chirality_defined && distances_ok && !has_parallel && !has_coplanar;
  }
};

/// Pairwise distances and chiralities. Problems are reported, not thrown.
/// Throws std::invalid_argument for more than 16 lines or mixed dimensions.
ChiralityReport chirality_graph(const LineConfig& config);

/// a_vw = <x_v x x_w, y_v - y_w>, together with the factors q_v = y_v x x_v
/// and x_v that give a_vw = <q_v, x_w> + <x_v, q_w>.
struct TMatrix {
  FloatMatrix a;
  std::vector<Vec3> q;
  std::vector<Vec3> x;

  /// <q_v, x_w> + <x_v, q_w>: the split form of signature (3, 3) on R^6.
  double gram_entry(int v, int w) const;
};

/// Throws DegeneratePairError on parallel pairs, std::invalid_argument outside R^3.
TMatrix t_matrix(const LineConfig& config);

struct PropertyCheck {
  std::string name;
  bool passed = false;
  double margin = 0.0;
  std::string detail;
};

struct RealizationReport {
  ChiralityReport chirality;
  TMatrix t;
  Signature t_signature;
  Signature abs_signature;
  std::vector<PropertyCheck> properties;  // the four realization properties, in order

  bool passed() const noexcept;
};

/// Checks the four properties a realization's T matrix must have:
/// (1) a_vw = 0 iff v = w, (2) a_vw > 0 iff vw is an edge of the chirality
/// graph, with |a_vw| = |x_v x x_w|, (3) at most 3 negative eigenvalues,
/// (4) (|a_vw|) has signature (1, 0, n - 1).
/// Throws InvalidConfigError when some distance is off by more than tol,
/// DegeneratePairError on parallel or intersecting pairs.
RealizationReport check_realization(const LineConfig& config, double tol = kDefaultDistanceTolerance);

/// 2n - 2 pairwise unit-distance lines in R^n: for each vertex v_i of a
/// unit (n-2)-simplex, two parallel planar lines at distance 1 with
/// direction angle (i - 1) pi / (n - 1), lifted to {v_i} x L.
/// Throws std::invalid_argument for n < 3.
LineConfig lower_bound_config(int n);

void to_json(nlohmann::json& j, const LineConfig& config);
/// Throws ParseError on malformed input.
void from_json(const nlohmann::json& j, LineConfig& config);

nlohmann::json to_json(const ChiralityReport& report);
nlohmann::json to_json(const RealizationReport& report);

}  // namespace champagne
