#ifndef PERMSEP_REPORT_HPP
#define PERMSEP_REPORT_HPP

#include <span>
#include <string>

#include "json.hpp"
#include "permsep/verification.hpp"

namespace permsep {

// Human-readable tables and JSON documents with stable key names.

std::string classes_table(std::span<const CriterionClass> classes);
nlohmann::json classes_json(int parties, std::span<const CriterionClass> classes);

std::string census_table(const ClassCensus &census);
nlohmann::json census_json(const ClassCensus &census);

std::string evaluation_table(const EvaluationReport &report);
nlohmann::json evaluation_json(const EvaluationReport &report);

std::string rule5_table(const Rule5Report &report);
nlohmann::json rule5_json(const Rule5Report &report);

std::string distinctness_table(const DistinctnessReport &report);
nlohmann::json distinctness_json(const DistinctnessReport &report);

std::string beta_sweep_table(const BetaSweepReport &report);
nlohmann::json beta_sweep_json(const BetaSweepReport &report);

}  // namespace permsep

#endif
