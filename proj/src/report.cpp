#include "permsep/report.hpp"

#include <cstdio>
#include <sstream>

#include "permsep/state_io.hpp"

namespace permsep {

using nlohmann::json;

namespace {

std::string fmt(const char *pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

json config_json(const VerificationConfig &c) {
  return json{{"parties", c.parties},
              {"dim", c.dim},
              {"samples", c.samples},
              {"seed", c.seed},
              {"tolerance", c.tolerance},
              {"equality_threshold", c.equality_threshold},
              {"distinctness_threshold", c.distinctness_threshold}};
}

}  // namespace

std::string classes_table(std::span<const CriterionClass> classes) {
  std::ostringstream out;
  out << fmt("%4s  %-10s %-10s %-24s %s\n", "id", "roles", "label", "permutation", "arrows");
  for (const auto &c : classes) {
    const auto sigma = to_permutation(c);
    out << fmt("%4d  %-10s %-10s %-24s %s\n", c.class_id, c.canonical.to_string().c_str(), c.label.c_str(),
               sigma.cycle_string().c_str(), describe(c.canonical).c_str());
  }
  return out.str();
}

json classes_json(int parties, std::span<const CriterionClass> classes) {
  json list = json::array();
  for (const auto &c : classes) list.push_back(class_to_json(c));
  return json{{"parties", parties}, {"count", classes.size()}, {"classes", std::move(list)}};
}

std::string census_table(const ClassCensus &c) {
  std::ostringstream out;
  out << "parties:     " << c.parties << '\n';
  out << "formula:     " << c.formula_count << '\n';
  out << "enumerated:  " << c.enumerated_count << '\n';
  if (c.oracle_count) out << "brute force: " << *c.oracle_count << '\n';
  out << "rows:\n";
  for (const auto &[label, count] : c.per_row_counts) out << fmt("  %-14s %d\n", label.c_str(), count);
  out << (c.consistent() ? "consistent\n" : "MISMATCH\n");
  return out.str();
}

json census_json(const ClassCensus &c) {
  json j{{"parties", c.parties},
         {"formula_count", c.formula_count},
         {"enumerated_count", c.enumerated_count},
         {"rows", c.per_row_counts},
         {"consistent", c.consistent()}};
  if (c.oracle_count) j["oracle_count"] = *c.oracle_count;
  return j;
}

std::string evaluation_table(const EvaluationReport &r) {
  std::ostringstream out;
  out << "state: " << r.source << " (d=" << r.dim << ", r=" << r.parties << ", tol=" << fmt("%g", r.tolerance)
      << ")\n";
  out << fmt("%4s  %-10s %-10s %18s  %s\n", "id", "roles", "label", "trace norm", "violated");
  int violations = 0;
  for (const auto &rec : r.records) {
    out << fmt("%4d  %-10s %-10s %18.12f  %s\n", rec.criterion.class_id, rec.criterion.canonical.to_string().c_str(),
               rec.criterion.label.c_str(), rec.trace_norm, rec.violated ? "yes" : "no");
    violations += rec.violated;
  }
  out << violations << " of " << r.records.size() << " criteria violated\n";
  return out.str();
}

json evaluation_json(const EvaluationReport &r) {
  json records = json::array();
  for (const auto &rec : r.records) {
    records.push_back(json{{"id", rec.criterion.class_id},
                           {"roles", rec.criterion.canonical.to_string()},
                           {"label", rec.criterion.label},
                           {"trace_norm", rec.trace_norm},
                           {"violated", rec.violated}});
  }
  return json{{"source", r.source},
              {"d", r.dim},
              {"r", r.parties},
              {"tolerance", r.tolerance},
              {"records", std::move(records)}};
}

std::string rule5_table(const Rule5Report &r) {
  std::ostringstream out;
  out << fmt("rule5: r=%d d=%d samples=%d seed=%llu\n", r.config.parties, r.config.dim, r.config.samples,
             static_cast<unsigned long long>(r.config.seed));
  out << fmt("max deviation %.3e at class %s, sample %d (threshold %.1e)\n", r.max_deviation, r.worst_class.c_str(),
             r.worst_sample, r.config.equality_threshold);
  out << (r.passed ? "PASS\n" : "FAIL\n");
  return out.str();
}

json rule5_json(const Rule5Report &r) {
  return json{{"config", config_json(r.config)},
              {"max_deviation", r.max_deviation},
              {"worst_class", r.worst_class},
              {"worst_sample", r.worst_sample},
              {"passed", r.passed}};
}

std::string distinctness_table(const DistinctnessReport &r) {
  std::ostringstream out;
  out << fmt("distinctness: r=%d d=%d samples=%d seed=%llu rank=%d\n", r.config.parties, r.config.dim,
             r.config.samples, static_cast<unsigned long long>(r.config.seed), r.rank);
  for (const auto &s : r.samples) {
    out << fmt("  sample %d: min gap %.3e between %s and %s%s\n", s.sample, s.min_gap, s.closest_a.c_str(),
               s.closest_b.c_str(), s.distinct ? "" : "  [WARNING: below threshold]");
  }
  out << (r.all_distinct ? "all norms pairwise distinct\n" : "WARNING: some norms coincide within threshold\n");
  return out.str();
}

json distinctness_json(const DistinctnessReport &r) {
  json samples = json::array();
  for (const auto &s : r.samples) {
    samples.push_back(json{{"sample", s.sample},
                           {"min_gap", s.min_gap},
                           {"closest", json::array({s.closest_a, s.closest_b})},
                           {"distinct", s.distinct}});
  }
  return json{{"config", config_json(r.config)},
              {"rank", r.rank},
              {"samples", std::move(samples)},
              {"all_distinct", r.all_distinct}};
}

std::string beta_sweep_table(const BetaSweepReport &r) {
  std::ostringstream out;
  out << fmt("beta sweep on (1-b) rho_c x rho_c + b I/81: steps=%d iterations=%d tol=%g\n", r.steps, r.iterations,
             r.tolerance);
  out << fmt("%-10s %-10s %14s %16s\n", "roles", "label", "norm(b=0)", "threshold");
  for (const auto &e : r.per_class) {
    out << fmt("%-10s %-10s %14.10f %16.12f\n", e.criterion.canonical.to_string().c_str(), e.criterion.label.c_str(),
               e.norm_at_zero, e.threshold);
  }
  out << "max threshold by row:\n";
  for (const auto &[label, t] : r.max_by_row) out << fmt("  %-10s %.12f\n", label.c_str(), t);
  return out.str();
}

json beta_sweep_json(const BetaSweepReport &r) {
  json classes = json::array();
  for (const auto &e : r.per_class) {
    classes.push_back(json{{"roles", e.criterion.canonical.to_string()},
                           {"label", e.criterion.label},
                           {"norm_at_zero", e.norm_at_zero},
                           {"threshold", e.threshold}});
  }
  return json{{"steps", r.steps},
              {"iterations", r.iterations},
              {"tolerance", r.tolerance},
              {"classes", std::move(classes)},
              {"max_by_row", r.max_by_row}};
}

}  // namespace permsep
