#ifndef PERMSEP_VERIFICATION_HPP
#define PERMSEP_VERIFICATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permsep/criteria.hpp"
#include "permsep/matrix.hpp"
#include "permsep/states.hpp"

namespace permsep {

struct VerificationConfig {
  int parties = 2;
  int dim = 2;
  int samples = 1;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  double equality_threshold = 1e-10;
  double distinctness_threshold = 1e-6;
  /// Rank of random states; 0 picks the suite's default.
  int rank = 0;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Brute-force oracles over the full symmetric group.

inline constexpr int kBruteForceMaxParties = 4;

/// Every permutation of 2r slots in lexicographic order.
std::vector<Permutation> all_permutations(int parties);

/// Closure of {(2k,2l), (2k-1,2l-1), global transpose} under composition,
/// computed breadth-first. Sorted.
std::vector<Permutation> norm_preserving_closure(int parties);

/// Class index of each permutation of all_permutations(parties), numbering
/// classes by first appearance. Two permutations share a class iff one is
/// reached from the other by a norm-preserving post-map, possibly after the
/// global transpose. Refuses parties > kBruteForceMaxParties.
std::vector<int> brute_force_partition(int parties);

std::uint64_t brute_force_class_count(int parties);

struct ClassCensus {
  int parties = 0;
  std::uint64_t formula_count = 0;
  std::uint64_t enumerated_count = 0;
  std::optional<std::uint64_t> oracle_count;
  std::map<std::string, int> per_row_counts;  ///< label -> number of classes

  bool consistent() const {
    return formula_count == enumerated_count && (!oracle_count || *oracle_count == formula_count);
  }
};

ClassCensus census(int parties, bool with_oracle);

// ---------------------------------------------------------------------------
// Randomized suites.

/// Transpose-first partner of sigma: the global transpose applied before sigma.
Permutation rule5_partner(const Permutation &sigma);

struct Rule5Report {
  VerificationConfig config;
  double max_deviation = 0.0;
  std::string worst_class;  ///< roles string of the class with the largest deviation
  int worst_sample = -1;
  bool passed = true;
};

/// For every sample and canonical class, |‖Λσ(ρ)‖ - ‖Λ_partner(ρ)‖| must stay
/// below config.equality_threshold.
Rule5Report verify_rule5(const VerificationConfig &config);

struct DistinctnessSample {
  int sample = 0;
  double min_gap = 0.0;
  std::string closest_a;  ///< roles strings of the closest pair
  std::string closest_b;
  bool distinct = true;
};

struct DistinctnessReport {
  VerificationConfig config;
  int rank = 0;
  std::vector<DistinctnessSample> samples;
  bool all_distinct = true;
};

/// Rank used for distinctness states of dimension n: min(4, n/2).
int default_distinctness_rank(int n);

DistinctnessSample distinctness_on_state(const DensityMatrix &rho, std::span<const CriterionClass> classes,
                                         double threshold);

/// Gaps below the threshold are reported (all_distinct = false), not thrown.
DistinctnessReport verify_distinctness(const VerificationConfig &config);

struct NormPreservingReport {
  VerificationConfig config;
  double max_deviation = 0.0;  ///< max |‖Λν(ρ)‖ - 1|
  bool passed = true;
};

/// Uniform element of the norm-preserving group.
Permutation random_norm_preserving(int parties, Rng &rng);

/// Each sample draws a random norm-preserving ν and a random state.
NormPreservingReport verify_norm_preserving(const VerificationConfig &config);

struct SoundnessReport {
  VerificationConfig config;
  int terms = 0;
  double max_norm = 0.0;
  std::string worst_class;
  int violations = 0;
};

/// Random separable mixtures of `terms` product states; every class norm must
/// stay at or below 1 + config.tolerance.
SoundnessReport verify_soundness(const VerificationConfig &config, int terms);

// ---------------------------------------------------------------------------
// Noise sweep on two copies of the chess-board state.

struct BetaThreshold {
  CriterionClass criterion;
  double norm_at_zero = 0.0;
  double threshold = 0.0;
};

struct BetaSweepReport {
  int steps = 0;
  double tolerance = 0.0;
  int iterations = 0;
  std::vector<BetaThreshold> per_class;
  std::map<std::string, double> max_by_row;
};

/// For every 4-party class, the largest beta with
/// ‖Λσ((1-beta) ρc⊗ρc + beta I/81)‖ > 1 + tolerance, 0 if none. A grid of
/// `steps` intervals locates the crossing, then `iterations` bisection steps
/// refine it.
BetaSweepReport beta_sweep(int steps = 20, double tolerance = 1e-9, int iterations = 40);

// ---------------------------------------------------------------------------
// Single-state evaluation.

struct ClassEvaluation {
  CriterionClass criterion;
  double trace_norm = 0.0;
  bool violated = false;
};

struct EvaluationReport {
  int dim = 0;
  int parties = 0;
  std::string source;
  double tolerance = 0.0;
  std::vector<ClassEvaluation> records;
};

/// Evaluates `selection`, or every class when it is empty.
EvaluationReport evaluate_state(const DensityMatrix &rho, const std::string &source, double tolerance,
                                std::span<const CriterionClass> selection = {});

}  // namespace permsep

#endif
