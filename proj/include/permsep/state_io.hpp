#ifndef PERMSEP_STATE_IO_HPP
#define PERMSEP_STATE_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "permsep/criteria.hpp"
#include "permsep/matrix.hpp"

namespace permsep {

/// Malformed state document (missing keys, wrong types, ragged arrays).
class StateFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named states: "chessboard", "bell" (dim defaults to 2) and "mixed"
/// (maximally mixed; dim and parties required).
DensityMatrix builtin_state(std::string_view name, std::optional<int> dim = {}, std::optional<int> parties = {});

/// Accepts {"d", "r", "re", "im"} with row-major d^r x d^r arrays, or
/// {"builtin": name} with optional "d" / "r".
DensityMatrix parse_state(const nlohmann::json &doc);
DensityMatrix parse_state_text(std::string_view text);
DensityMatrix load_state_file(const std::string &path);

nlohmann::json state_to_json(const DensityMatrix &rho);

nlohmann::json permutation_to_json(const Permutation &sigma);
Permutation permutation_from_json(const nlohmann::json &doc);

/// {"id", "roles", "label", "permutation"}
nlohmann::json class_to_json(const CriterionClass &c);

}  // namespace permsep

#endif
