#include "champagne/signature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "champagne/catalog.hpp"
#include "champagne/graph_io.hpp"

namespace champagne {
namespace {

using Integer = mpz_class;
using IntMatrix = std::vector<std::vector<Integer>>;

// Common denominator L and the integer matrix L * m.
std::pair<Integer, IntMatrix> scale_to_integers(const ExactMatrix& m) {
  const int n = m.size();
  Integer lcm = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
  }
  IntMatrix b(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      b[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    }
  }
  return {lcm, std::move(b)};
}

// Berkowitz: coefficients of det(tI - B), highest degree first.
std::vector<Integer> berkowitz(const IntMatrix& b) {
  const int n = static_cast<int>(b.size());
  std::vector<Integer> poly{1};
  if (n == 0) return poly;
  poly.push_back(-b[0][0]);
  for (int r = 1; r < n; ++r) {
    // Leading (r+1)x(r+1) block [[M, C], [R, a]], M = b[0..r)[0..r).
    std::vector<Integer> toeplitz(r + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -b[r][r];
    std::vector<Integer> power(r);  // M^k C
    for (int i = 0; i < r; ++i) power[i] = b[i][r];
    for (int k = 0; k < r; ++k) {
      Integer dot = 0;
      for (int i = 0; i < r; ++i) dot += b[r][i] * power[i];
      toeplitz[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<Integer> next(r);
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) next[i] += b[i][j] * power[j];
        }
        power = std::move(next);
      }
    }
    std::vector<Integer> grown(r + 2);
    for (int i = 0; i < r + 2; ++i) {
      for (int j = 0; j <= std::min(i, r); ++j) grown[i] += toeplitz[i - j] * poly[j];
    }
    poly = std::move(grown);
  }
  return poly;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational entry_1based(const ExactMatrix& m, int i, int j) { return m(i - 1, j - 1); }

}  // namespace

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i; j < m.size(); ++j) out.set(i, j, m(i, j).get_d());
  }
  return out;
}

std::string to_string(const Signature& s) {
  return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_zero) + "," +
         std::to_string(s.n_minus) + ")";
}

std::vector<Rational> characteristic_polynomial(const ExactMatrix& m) {
  const int n = m.size();
  auto [lcm, b] = scale_to_integers(m);
  const auto descending = berkowitz(b);
  // det(tI - L A) = sum c_i L^(n-i) t^i.
  std::vector<Rational> c(n + 1);
  Integer scale = 1;
  for (int i = n; i >= 0; --i) {
    c[i] = Rational(descending[n - i], scale);
    c[i].canonicalize();
    scale *= lcm;
  }
  return c;
}

Signature signature_from_charpoly(const std::vector<Rational>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  int zero = 0;
  while (zero <= n && c[zero] == 0) ++zero;
  std::vector<int> positive;
  std::vector<int> negative;
  for (int i = n; i >= 0; --i) {
    const int s = sgn(c[i]);
    positive.push_back(s);
    negative.push_back((i % 2 == 0) ? s : -s);
  }
  return {sign_changes(positive), zero, sign_changes(negative)};
}

Signature signature_exact(const ExactMatrix& m) {
  return signature_from_charpoly(characteristic_polynomial(m));
}

Rational determinant_exact(const ExactMatrix& m) {
  const auto c = characteristic_polynomial(m);
  return (m.size() % 2 == 0) ? c[0] : Rational(-c[0]);
}

Rational determinant_bareiss(const ExactMatrix& m) {
  const int n = m.size();
  if (n == 0) return 1;
  auto [lcm, a] = scale_to_integers(m);
  int sign = 1;
  Integer previous = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;  // exact
      }
    }
    previous = a[k][k];
  }
  Integer denominator = 1;
  for (int i = 0; i < n; ++i) denominator *= lcm;
  Rational det(a[n - 1][n - 1] * sign, denominator);
  det.canonicalize();
  return det;
}

std::vector<double> jacobi_eigenvalues(const FloatMatrix& m, int max_sweeps) {
  const int n = m.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[i][j] = m(i, j);
      total += a[i][j] * a[i][j];
    }
  }
  const auto off_diagonal = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
    }
    return s;
  };

  const double threshold = total * 1e-30;
  int sweep = 0;
  while (off_diagonal() > threshold) {
    if (sweep++ == max_sweeps) {
      throw JacobiNoConvergence("Jacobi eigenvalue iteration did not converge in " +
                                std::to_string(max_sweeps) + " sweeps");
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = a[i][i];
  std::sort(values.begin(), values.end());
  return values;
}

Signature signature_float(const FloatMatrix& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("signature_float: tolerance must be positive");
  const int n = m.size();
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::abs(m(i, j)));
  }
  if (scale == 0.0) return {0, n, 0};
  FloatMatrix normalized(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) normalized.set(i, j, m(i, j) / scale);
  }
  Signature s;
  for (double lambda : jacobi_eigenvalues(normalized)) {
    if (lambda >= tol) {
      ++s.n_plus;
    } else if (lambda <= -tol) {
      ++s.n_minus;
    } else {
      ++s.n_zero;
    }
  }
  return s;
}

std::vector<double> cycle_eigenvalues(int n) {
  if (n < 3) throw std::invalid_argument("cycle_eigenvalues needs n >= 3");
  std::vector<double> values(n);
  for (int k = 0; k < n; ++k) values[k] = 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
  std::sort(values.begin(), values.end());
  return values;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

Rational sample_positive_entry(std::mt19937_64& rng) {
  constexpr long kDenominator = 1L << 16;
  constexpr long kLowest = 6554;                  // first multiple of 2^-16 above 0.1
  constexpr long kHighest = 10 * kDenominator - 1;  // last one below 10
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const double x = 0.1 + 9.9 * u;
  const long k = std::clamp(std::lround(x * kDenominator), kLowest, kHighest);
  Rational value(k, kDenominator);
  value.canonicalize();
  return value;
}

ExactMatrix pattern_sample(const Graph& pattern, std::mt19937_64& rng) {
  ExactMatrix m(pattern.order());
  for (auto [u, v] : pattern.edge_list()) m.set(u, v, sample_positive_entry(rng));
  return m;
}

ExactMatrix cycle_pattern_sample(int n, std::mt19937_64& rng) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("cycle pattern needs odd n >= 3");
  return pattern_sample(cycle_graph(n), rng);
}

ExactMatrix h7_pattern_sample(std::mt19937_64& rng) { return pattern_sample(catalog_graph("H7"), rng); }

bool matches_pattern(const ExactMatrix& m, const Graph& pattern) {
  if (m.size() != pattern.order()) return false;
  for (int i = 0; i < m.size(); ++i) {
    if (m(i, i) != 0) return false;
    for (int j = i + 1; j < m.size(); ++j) {
      if (pattern.adjacent(i, j) ? !(m(i, j) > 0) : (m(i, j) != 0)) return false;
    }
  }
  return true;
}

Rational cycle_determinant_formula(const ExactMatrix& m) {
  Rational product = 2;
  for (int i = 0; i < m.size(); ++i) product *= m(i, (i + 1) % m.size());
  return product;
}

Rational h7_determinant_formula(const ExactMatrix& m) {
  const auto a = [&](int i, int j) { return entry_1based(m, i, j); };
  const Rational inner = a(1, 2) * a(3, 6) * a(4, 7) * a(5, 7) + a(1, 3) * a(2, 5) * a(4, 7) * a(6, 7) +
                         a(1, 4) * a(2, 3) * a(5, 7) * a(6, 7);
  return Rational(-2) * a(1, 4) * a(2, 5) * a(3, 6) * inner;
}

std::string PatternKind::name() const {
  return family == Family::h7 ? "h7" : "cycle(" + std::to_string(n) + ")";
}

Graph PatternKind::pattern() const {
  return family == Family::h7 ? catalog_graph("H7") : cycle_graph(n);
}

Signature PatternKind::expected_signature() const {
  if (family == Family::h7) return {4, 0, 3};
  if (n % 4 == 1) return {(n + 1) / 2, 0, (n - 1) / 2};
  return {(n - 1) / 2, 0, (n + 1) / 2};
}

int PatternKind::expected_determinant_sign() const { return family == Family::h7 ? -1 : 1; }

namespace {

struct TrialOutcome {
  Signature signature;
  std::optional<std::string> failure;
  ExactMatrix matrix;
};

TrialOutcome run_trial(const PatternKind& kind, const Graph& pattern, const LemmaOptions& options,
                       int trial) {
  auto rng = trial_rng(options.seed, static_cast<std::uint64_t>(trial));
  ExactMatrix m = kind.family == PatternKind::Family::h7 ? h7_pattern_sample(rng)
                                                         : cycle_pattern_sample(kind.n, rng);
  if (options.corrupt) {
    const auto [u, v] = pattern.edge_list().front();
    m.set(u, v, 0);
  }

  TrialOutcome out{{}, std::nullopt, m};
  if (!matches_pattern(m, pattern)) {
    out.failure = "sample violates the sign pattern";
    return out;
  }
  const auto charpoly = characteristic_polynomial(m);
  out.signature = signature_from_charpoly(charpoly);
  const Rational det = (m.size() % 2 == 0) ? charpoly[0] : Rational(-charpoly[0]);
  const Rational formula =
      kind.family == PatternKind::Family::h7 ? h7_determinant_formula(m) : cycle_determinant_formula(m);

  if (out.signature != kind.expected_signature()) {
    out.failure = "exact signature " + to_string(out.signature) + ", expected " +
                  to_string(kind.expected_signature());
  } else if (det != formula) {
    out.failure = "determinant " + det.get_str() + " differs from closed form " + formula.get_str();
  } else if (sgn(det) != kind.expected_determinant_sign()) {
    out.failure = "determinant has the wrong sign";
  } else if (const auto fs = signature_float(to_float(m)); fs != out.signature) {
    out.failure = "floating signature " + to_string(fs) + " disagrees with exact";
  }
  return out;
}

}  // namespace

LemmaReport verify_pattern_lemma(const PatternKind& kind, const LemmaOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("verify_pattern_lemma needs trials >= 1");
  const Graph pattern = kind.pattern();
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(options.trials));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int t = next++; t < options.trials; t = next++) outcomes[t] = run_trial(kind, pattern, options, t);
  };
  const int jobs = std::clamp(options.jobs, 1, options.trials);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> threads;
    for (int i = 0; i < jobs; ++i) threads.emplace_back(work);
  }

  LemmaReport report{kind, options.trials, options.seed, kind.expected_signature(), {}, 0, std::nullopt};
  for (int t = 0; t < options.trials; ++t) {
    const auto& o = outcomes[t];
    if (o.failure) {
      ++report.failures;
      if (!report.first_failure) report.first_failure = TrialFailure{t, *o.failure, o.matrix};
    } else {
      ++report.signature_counts[to_string(o.signature)];
    }
  }
  return report;
}

std::vector<ReferenceSignature> reference_signatures() {
  std::vector<ReferenceSignature> out;
  const auto add = [&](std::string label, const Graph& g, Signature expected) {
    const auto exact = ExactMatrix::adjacency(g);
    out.push_back({std::move(label), to_float(exact), expected, signature_exact(exact)});
  };
  for (int n : {3, 5, 7, 9}) {
    add("adjacency(C" + std::to_string(n) + ")", cycle_graph(n), PatternKind::cycle(n).expected_signature());
  }
  add("adjacency(H7)", catalog_graph("H7"), {4, 0, 3});
  add("J-I on 5 vertices (|T| for K5)", Graph::complete(5), {1, 0, 4});
  add("S-T for K7-C5 (C5 plus two isolated vertices)", complement(catalog_graph("K7-C5")), {3, 2, 2});
  add("S-T for K8-H7 (H7 plus an isolated vertex)", complement(catalog_graph("K8-H7")), {4, 1, 3});
  return out;
}

nlohmann::json matrix_to_json(const ExactMatrix& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return {{"mode", "exact"}, {"rows", std::move(rows)}};
}

nlohmann::json matrix_to_json(const FloatMatrix& m) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"mode", "float"}, {"rows", std::move(rows)}};
}

std::variant<ExactMatrix, FloatMatrix> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw ParseError("matrix JSON needs a \"rows\" array");
  }
  const std::string mode = j.value("mode", "float");
  const auto& rows = j["rows"];
  try {
    if (mode == "exact") {
      std::vector<std::vector<Rational>> values;
      for (const auto& row : rows) {
        auto& out = values.emplace_back();
        for (const auto& cell : row) {
          Rational q;
          if (cell.is_string()) {
            if (q.set_str(cell.get<std::string>(), 10) != 0 || q.get_den() == 0) {
              throw ParseError("bad rational entry");
            }
          } else if (cell.is_number_integer()) {
            q = Rational(cell.get<long>());
          } else {
            throw ParseError("exact entries must be \"p/q\" strings or integers");
          }
          q.canonicalize();
          out.push_back(q);
        }
      }
      return ExactMatrix::from_rows(values);
    }
    if (mode == "float") {
      return FloatMatrix::from_rows(rows.get<std::vector<std::vector<double>>>());
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
  throw ParseError("matrix mode must be \"exact\" or \"float\"");
}

nlohmann::json to_json(const LemmaReport& r) {
  const auto triple = [](const Signature& s) { return nlohmann::json::array({s.n_plus, s.n_zero, s.n_minus}); };
  nlohmann::json out{{"pattern", r.kind.name()},
                     {"trials", r.trials},
                     {"seed", r.seed},
                     {"expected_signature", triple(r.expected)},
                     {"expected_determinant_sign", r.kind.expected_determinant_sign()},
                     {"signature_counts", r.signature_counts},
                     {"failures", r.failures},
                     {"passed", r.passed()},
                     {"evidence", "randomized sampling; supports but does not prove constancy of the signature"}};
  if (r.first_failure) {
    out["first_failure"] = {{"trial", r.first_failure->trial},
                            {"reason", r.first_failure->reason},
                            {"matrix", matrix_to_json(r.first_failure->matrix)}};
  }
  return out;
}

}  // namespace champagne
