#include "permsep/state_io.hpp"

#include <fstream>
#include <sstream>

#include "permsep/states.hpp"

namespace permsep {

using nlohmann::json;

namespace {

int require_int(const json &doc, const char *key) {
  if (!doc.contains(key)) throw StateFormatError(std::string("state is missing key \"") + key + "\"");
  const auto &v = doc.at(key);
  if (!v.is_number_integer()) throw StateFormatError(std::string("state key \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::optional<int> optional_int(const json &doc, const char *key) {
  if (!doc.contains(key)) return std::nullopt;
  return require_int(doc, key);
}

void read_part(const json &doc, const char *key, int n, ComplexMatrix &m, bool imaginary) {
  if (!doc.contains(key)) throw StateFormatError(std::string("state is missing key \"") + key + "\"");
  const auto &rows = doc.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    throw StateFormatError(std::string("\"") + key + "\" must be an array of " + std::to_string(n) + " rows");
  }
  for (int i = 0; i < n; ++i) {
    const auto &row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw StateFormatError(std::string("\"") + key + "\" row " + std::to_string(i) + " must have " +
                             std::to_string(n) + " entries");
    }
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        throw StateFormatError(std::string("\"") + key + "\"[" + std::to_string(i) + "][" + std::to_string(j) +
                               "] is not a number");
      }
      const double x = row[j].get<double>();
      if (imaginary) m(i, j).imag(x);
      else m(i, j).real(x);
    }
  }
}

}  // namespace

DensityMatrix builtin_state(std::string_view name, std::optional<int> dim, std::optional<int> parties) {
  if (name == "chessboard") {
    if ((dim && *dim != 3) || (parties && *parties != 2)) {
      throw std::invalid_argument("the chessboard state has d = 3, r = 2");
    }
    return chessboard_state();
  }
  if (name == "bell") {
    if (parties && *parties != 2) throw std::invalid_argument("the bell state has r = 2");
    return bell_state(dim.value_or(2));
  }
  if (name == "mixed") {
    if (!dim || !parties) throw std::invalid_argument("builtin \"mixed\" needs both d and r");
    return maximally_mixed(*dim, *parties);
  }
  throw std::invalid_argument("unknown builtin state \"" + std::string(name) + "\" (chessboard, bell, mixed)");
}

DensityMatrix parse_state(const json &doc) {
  if (!doc.is_object()) throw StateFormatError("state document must be a JSON object");
  if (doc.contains("builtin")) {
    if (!doc.at("builtin").is_string()) throw StateFormatError("\"builtin\" must be a string");
    return builtin_state(doc.at("builtin").get<std::string>(), optional_int(doc, "d"), optional_int(doc, "r"));
  }
  const int d = require_int(doc, "d");
  const int r = require_int(doc, "r");
  if (d < 2) throw StateFormatError("\"d\" must be >= 2, got " + std::to_string(d));
  if (r < 1) throw StateFormatError("\"r\" must be >= 1, got " + std::to_string(r));
  const int n = hilbert_dimension(d, r);
  if (doc.contains("re") && doc.at("re").is_array() && static_cast<int>(doc.at("re").size()) != n) {
    throw InvariantError("dimension", "matrix has " + std::to_string(doc.at("re").size()) + " rows but d^r = " +
                                          std::to_string(n) + " for d = " + std::to_string(d) + ", r = " +
                                          std::to_string(r));
  }
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  read_part(doc, "re", n, m, false);
  read_part(doc, "im", n, m, true);
  return DensityMatrix(std::move(m), d, r);
}

DensityMatrix parse_state_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw StateFormatError(std::string("state is not valid JSON: ") + e.what());
  }
  return parse_state(doc);
}

DensityMatrix load_state_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

json state_to_json(const DensityMatrix &rho) {
  const int n = rho.size();
  json re = json::array(), im = json::array();
  for (int i = 0; i < n; ++i) {
    json re_row = json::array(), im_row = json::array();
    for (int j = 0; j < n; ++j) {
      re_row.push_back(rho.matrix()(i, j).real());
      im_row.push_back(rho.matrix()(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"d", rho.dim()}, {"r", rho.parties()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json permutation_to_json(const Permutation &sigma) { return json(sigma.images()); }

Permutation permutation_from_json(const json &doc) {
  if (!doc.is_array()) throw std::invalid_argument("permutation must be a JSON array of integers");
  std::vector<int> w;
  for (const auto &v : doc) {
    if (!v.is_number_integer()) throw std::invalid_argument("permutation entries must be integers");
    w.push_back(v.get<int>());
  }
  return Permutation(std::move(w));
}

json class_to_json(const CriterionClass &c) {
  return json{{"id", c.class_id},
              {"roles", c.canonical.to_string()},
              {"label", c.label},
              {"permutation", permutation_to_json(to_permutation(c))}};
}

}  // namespace permsep
