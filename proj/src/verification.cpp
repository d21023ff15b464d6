#include "permsep/verification.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace permsep {

void VerificationConfig::validate() const {
  if (parties < 1) throw std::invalid_argument("parties must be >= 1");
  if (dim < 2) throw std::invalid_argument("dim must be >= 2");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(tolerance > 0.0) || !(equality_threshold > 0.0) || !(distinctness_threshold > 0.0)) {
    throw std::invalid_argument("tolerance and thresholds must be positive");
  }
  if (rank < 0) throw std::invalid_argument("rank must be >= 0");
}

namespace {

void require_brute_force_range(int parties) {
  if (parties < 1) throw std::invalid_argument("parties must be >= 1");
  if (parties > kBruteForceMaxParties) {
    throw std::invalid_argument("brute force over (2r)! permutations is refused for r = " + std::to_string(parties) +
                                "; the limit is r = " + std::to_string(kBruteForceMaxParties));
  }
}

// Position of a permutation in lexicographic order (Lehmer code).
std::size_t lex_rank(const std::vector<int> &w) {
  const std::size_t n = w.size();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += w[j] < w[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

}  // namespace

std::vector<Permutation> all_permutations(int parties) {
  require_brute_force_range(parties);
  std::vector<int> w(2 * parties);
  for (int k = 0; k < 2 * parties; ++k) w[k] = k + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Permutation> norm_preserving_closure(int parties) {
  if (parties < 1) throw std::invalid_argument("parties must be >= 1");
  std::vector<Permutation> generators{Permutation::global_transpose(parties)};
  for (int k = 1; k <= parties; ++k) {
    for (int l = k + 1; l <= parties; ++l) {
      const std::pair<int, int> evens{2 * k, 2 * l};
      const std::pair<int, int> odds{2 * k - 1, 2 * l - 1};
      generators.push_back(Permutation::from_transpositions(std::span(&evens, 1), parties));
      generators.push_back(Permutation::from_transpositions(std::span(&odds, 1), parties));
    }
  }
  std::set<Permutation> seen{Permutation::identity(parties)};
  std::deque<Permutation> frontier{Permutation::identity(parties)};
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop_front();
    for (const auto &g : generators) {
      auto next = compose(current, g);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> brute_force_partition(int parties) {
  require_brute_force_range(parties);
  const auto perms = all_permutations(parties);
  const auto group = norm_preserving_closure(parties);
  const auto tau = Permutation::global_transpose(parties);
  std::vector<int> cls(perms.size(), -1);
  int next_class = 0;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = next_class++;
    const auto transposed_first = compose(tau, perms[i]);
    for (const auto &nu : group) {
      cls[lex_rank(compose(perms[i], nu).images())] = id;
      cls[lex_rank(compose(transposed_first, nu).images())] = id;
    }
  }
  return cls;
}

std::uint64_t brute_force_class_count(int parties) {
  const auto cls = brute_force_partition(parties);
  return static_cast<std::uint64_t>(*std::max_element(cls.begin(), cls.end()) + 1);
}

ClassCensus census(int parties, bool with_oracle) {
  ClassCensus c;
  c.parties = parties;
  c.formula_count = count_classes(parties);
  const auto classes = enumerate_classes(parties);
  c.enumerated_count = classes.size();
  for (const auto &cls : classes) ++c.per_row_counts[cls.label];
  if (with_oracle) c.oracle_count = brute_force_class_count(parties);
  return c;
}

Permutation rule5_partner(const Permutation &sigma) {
  return compose(Permutation::global_transpose(sigma.parties()), sigma);
}

Rule5Report verify_rule5(const VerificationConfig &config) {
  config.validate();
  Rule5Report report;
  report.config = config;
  const auto classes = enumerate_classes(config.parties);
  Rng rng(config.seed);
  for (int s = 0; s < config.samples; ++s) {
    const auto rho = random_density(config.dim, config.parties, rng, config.rank);
    for (const auto &c : classes) {
      const auto sigma = to_permutation(c);
      const double a = trace_norm(apply_criterion(rho, sigma));
      const double b = trace_norm(apply_criterion(rho, rule5_partner(sigma)));
      const double dev = std::abs(a - b);
      if (dev > report.max_deviation || report.worst_sample < 0) {
        report.max_deviation = dev;
        report.worst_class = c.canonical.to_string();
        report.worst_sample = s;
      }
    }
  }
  report.passed = report.max_deviation < config.equality_threshold;
  return report;
}

int default_distinctness_rank(int n) { return std::max(1, std::min(4, n / 2)); }

DistinctnessSample distinctness_on_state(const DensityMatrix &rho, std::span<const CriterionClass> classes,
                                         double threshold) {
  std::vector<std::pair<double, std::string>> norms;
  norms.reserve(classes.size());
  for (const auto &c : classes) {
    norms.emplace_back(trace_norm(apply_criterion(rho, to_permutation(c))), c.canonical.to_string());
  }
  std::sort(norms.begin(), norms.end());
  DistinctnessSample out;
  out.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < norms.size(); ++i) {
    const double gap = norms[i].first - norms[i - 1].first;
    if (gap < out.min_gap) {
      out.min_gap = gap;
      out.closest_a = norms[i - 1].second;
      out.closest_b = norms[i].second;
    }
  }
  out.distinct = !(out.min_gap <= threshold);
  return out;
}

DistinctnessReport verify_distinctness(const VerificationConfig &config) {
  config.validate();
  DistinctnessReport report;
  report.config = config;
  const int n = hilbert_dimension(config.dim, config.parties);
  report.rank = config.rank > 0 ? config.rank : default_distinctness_rank(n);
  const auto classes = enumerate_classes(config.parties);
  Rng rng(config.seed);
  for (int s = 0; s < config.samples; ++s) {
    const auto rho = random_density(config.dim, config.parties, rng, report.rank);
    auto sample = distinctness_on_state(rho, classes, config.distinctness_threshold);
    sample.sample = s;
    report.all_distinct = report.all_distinct && sample.distinct;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

Permutation random_norm_preserving(int parties, Rng &rng) {
  std::vector<int> odds, evens;
  for (int k = 1; k <= parties; ++k) {
    odds.push_back(2 * k - 1);
    evens.push_back(2 * k);
  }
  std::shuffle(odds.begin(), odds.end(), rng);
  std::shuffle(evens.begin(), evens.end(), rng);
  std::vector<int> w(2 * parties);
  for (int k = 1; k <= parties; ++k) {
    w[2 * k - 2] = odds[k - 1];
    w[2 * k - 1] = evens[k - 1];
  }
  Permutation nu(std::move(w));
  if (std::bernoulli_distribution(0.5)(rng)) nu = compose(nu, Permutation::global_transpose(parties));
  return nu;
}

NormPreservingReport verify_norm_preserving(const VerificationConfig &config) {
  config.validate();
  NormPreservingReport report;
  report.config = config;
  Rng rng(config.seed);
  for (int s = 0; s < config.samples; ++s) {
    const auto nu = random_norm_preserving(config.parties, rng);
    const auto rho = random_density(config.dim, config.parties, rng, config.rank);
    report.max_deviation = std::max(report.max_deviation, std::abs(trace_norm(apply_criterion(rho, nu)) - 1.0));
  }
  report.passed = report.max_deviation < config.tolerance;
  return report;
}

SoundnessReport verify_soundness(const VerificationConfig &config, int terms) {
  config.validate();
  SoundnessReport report;
  report.config = config;
  report.terms = terms;
  const auto classes = enumerate_classes(config.parties);
  Rng rng(config.seed);
  for (int s = 0; s < config.samples; ++s) {
    const auto rho = random_separable(config.dim, config.parties, terms, rng);
    for (const auto &c : classes) {
      const double norm = trace_norm(apply_criterion(rho, to_permutation(c)));
      if (norm > report.max_norm) {
        report.max_norm = norm;
        report.worst_class = c.canonical.to_string();
      }
      if (norm > 1.0 + config.tolerance) ++report.violations;
    }
  }
  return report;
}

BetaSweepReport beta_sweep(int steps, double tolerance, int iterations) {
  if (steps < 10) throw std::invalid_argument("beta sweep needs at least 10 grid steps");
  if (!(tolerance > 0.0)) throw std::invalid_argument("beta sweep tolerance must be positive");
  if (iterations < 1) throw std::invalid_argument("beta sweep needs at least one bisection step");

  const auto rho_c = chessboard_state();
  const auto pair = tensor_product(rho_c, rho_c);
  const auto noise = maximally_mixed(pair.dim(), pair.parties());

  BetaSweepReport report;
  report.steps = steps;
  report.tolerance = tolerance;
  report.iterations = iterations;
  for (const auto &c : enumerate_classes(pair.parties())) {
    const auto sigma = to_permutation(c);
    // The map is linear, so the mixture can be formed after permuting.
    const ComplexMatrix signal = apply_criterion(pair, sigma);
    const ComplexMatrix flat = apply_criterion(noise, sigma);
    auto violated = [&](double beta) { return trace_norm((1.0 - beta) * signal + beta * flat) > 1.0 + tolerance; };

    BetaThreshold entry{c, trace_norm(signal), 0.0};
    int last = -1;
    for (int i = 0; i <= steps; ++i) {
      if (violated(static_cast<double>(i) / steps)) last = i;
    }
    if (last == steps) {
      entry.threshold = 1.0;
    } else if (last >= 0) {
      double lo = static_cast<double>(last) / steps;
      double hi = static_cast<double>(last + 1) / steps;
      for (int it = 0; it < iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        (violated(mid) ? lo : hi) = mid;
      }
      entry.threshold = lo;
    }
    auto [it, inserted] = report.max_by_row.emplace(c.label, entry.threshold);
    if (!inserted) it->second = std::max(it->second, entry.threshold);
    report.per_class.push_back(std::move(entry));
  }
  return report;
}

EvaluationReport evaluate_state(const DensityMatrix &rho, const std::string &source, double tolerance,
                                std::span<const CriterionClass> selection) {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
  EvaluationReport report{rho.dim(), rho.parties(), source, tolerance, {}};
  std::vector<CriterionClass> all;
  if (selection.empty()) {
    all = enumerate_classes(rho.parties());
    selection = all;
  }
  for (const auto &c : selection) {
    if (c.parties() != rho.parties()) {
      throw std::invalid_argument("class " + c.canonical.to_string() + " does not match a " +
                                  std::to_string(rho.parties()) + "-party state");
    }
    const double norm = trace_norm(apply_criterion(rho, to_permutation(c)));
    report.records.push_back({c, norm, norm > 1.0 + tolerance});
  }
  return report;
}

}  // namespace permsep
