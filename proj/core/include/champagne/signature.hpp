#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "champagne/graph.hpp"

namespace champagne {

using Rational = mpq_class;

/// Dense real symmetric matrix. Writes go through set(), which keeps both
/// triangles equal.
template <class T>
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T(0)) {}

  int size() const noexcept { return n_; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, const T& value) {
    a_[static_cast<std::size_t>(i) * n_ + j] = value;
    a_[static_cast<std::size_t>(j) * n_ + i] = value;
  }

  /// Throws std::invalid_argument unless rows form a symmetric square array.
  static SymMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    SymMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.n_) throw std::invalid_argument("matrix is not square");
      for (int j = 0; j < m.n_; ++j) {
        if (rows[i][j] != rows[j][i]) throw std::invalid_argument("matrix is not symmetric");
        m.a_[static_cast<std::size_t>(i) * m.n_ + j] = rows[i][j];
      }
    }
    return m;
  }

  static SymMatrix adjacency(const Graph& g) {
    SymMatrix m(g.order());
    for (auto [u, v] : g.edge_list()) m.set(u, v, T(1));
    return m;
  }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<T> a_;
};

using ExactMatrix = SymMatrix<Rational>;
using FloatMatrix = SymMatrix<double>;

FloatMatrix to_float(const ExactMatrix& m);

/// Inertia (n+, n0, n-).
struct Signature {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;

  int total() const noexcept { return n_plus + n_zero + n_minus; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

/// Coefficients c[0..n] of det(tI - A), c[n] = 1. The matrix is scaled to
/// integers by the lcm of its denominators and expanded with the
/// division-free Berkowitz recurrence.
std::vector<Rational> characteristic_polynomial(const ExactMatrix& m);

/// Sign pattern of a real-rooted polynomial read with Descartes' rule,
/// which is exact when every root is real.
Signature signature_from_charpoly(const std::vector<Rational>& coefficients);

Signature signature_exact(const ExactMatrix& m);
Rational determinant_exact(const ExactMatrix& m);
/// Fraction-free (Bareiss) elimination on the integer-scaled matrix.
Rational determinant_bareiss(const ExactMatrix& m);

class JacobiNoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kJacobiMaxSweeps = 100;

/// Eigenvalues by cyclic Jacobi rotations, ascending.
/// Throws JacobiNoConvergence after kJacobiMaxSweeps sweeps.
std::vector<double> jacobi_eigenvalues(const FloatMatrix& m, int max_sweeps = kJacobiMaxSweeps);

/// Eigenvalues of the matrix scaled to unit max-norm; those within tol of
/// zero count as zero. Throws std::invalid_argument if tol <= 0.
Signature signature_float(const FloatMatrix& m, double tol = 1e-9);

/// 2cos(2 pi k / n), k = 0..n-1, ascending.
std::vector<double> cycle_eigenvalues(int n);

// Random sign-pattern matrices.

/// Independent stream for one trial, so results do not depend on how
/// trials are spread over workers.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Uniform on (0.1, 10), rounded to a multiple of 2^-16.
Rational sample_positive_entry(std::mt19937_64& rng);

/// Positive random entries exactly on the edges of `pattern`, zero elsewhere.
ExactMatrix pattern_sample(const Graph& pattern, std::mt19937_64& rng);
/// Band i - j = +-1 (mod n). Throws std::invalid_argument unless n is odd and >= 3.
ExactMatrix cycle_pattern_sample(int n, std::mt19937_64& rng);
ExactMatrix h7_pattern_sample(std::mt19937_64& rng);

/// Zero diagonal, positive on pattern edges, zero on non-edges.
bool matches_pattern(const ExactMatrix& m, const Graph& pattern);

/// 2 * prod a_{i,i+1} with a_{n,n+1} = a_{n,1}.
Rational cycle_determinant_formula(const ExactMatrix& m);
/// -2 a14 a25 a36 (a12 a36 a47 a57 + a13 a25 a47 a67 + a14 a23 a57 a67), 1-based.
Rational h7_determinant_formula(const ExactMatrix& m);

struct PatternKind {
  enum class Family { cycle, h7 } family = Family::cycle;
  int n = 5;

  static PatternKind cycle(int n) { return {Family::cycle, n}; }
  static PatternKind h7() { return {Family::h7, 7}; }
  std::string name() const;
  Graph pattern() const;
  /// ((n+1)/2, 0, (n-1)/2) for n = 1 mod 4, ((n-1)/2, 0, (n+1)/2) for n = 3 mod 4; (4, 0, 3) for H7.
  Signature expected_signature() const;
  int expected_determinant_sign() const;
};

struct LemmaOptions {
  int trials = 1000;
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Zeroes a pattern slot in every sample; exercises the failure path.
  bool corrupt = false;
};

struct TrialFailure {
  int trial = 0;
  std::string reason;
  ExactMatrix matrix;
};

struct LemmaReport {
  PatternKind kind;
  int trials = 0;
  std::uint64_t seed = 0;
  Signature expected;
  std::map<std::string, int> signature_counts;  // by to_string(Signature)
  int failures = 0;
  std::optional<TrialFailure> first_failure;

  bool passed() const noexcept { return failures == 0; }
};

/// Samples `trials` matrices on the pattern and checks each one: the
/// pattern itself, the exact and floating signatures, the determinant
/// formula and its sign. Sampling is evidence for the lemma, not a proof.
LemmaReport verify_pattern_lemma(const PatternKind& kind, const LemmaOptions& options);

struct ReferenceSignature {
  std::string label;
  FloatMatrix matrix;
  Signature expected;
  Signature exact;
};

/// Signatures of the fixed matrices the non-realizability argument uses:
/// cycle adjacencies, H7, J - I on five vertices, and the S - T difference
/// matrices of K7-C5 and K8-H7 (adjacency of the removed graph).
std::vector<ReferenceSignature> reference_signatures();

nlohmann::json matrix_to_json(const ExactMatrix& m);
nlohmann::json matrix_to_json(const FloatMatrix& m);
/// {"mode": "exact"|"float", "rows": [[...], ...]}; exact entries are "p/q"
/// strings. Throws ParseError on malformed input.
std::variant<ExactMatrix, FloatMatrix> matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LemmaReport& report);

}  // namespace champagne
