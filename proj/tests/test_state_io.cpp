#include "permsep/state_io.hpp"

#include "gtest/gtest.h"

#include "permsep/states.hpp"

using namespace permsep;
using nlohmann::json;

namespace {

std::string invariant_of(const std::string &text) {
  try {
    parse_state_text(text);
  } catch (const InvariantError &e) {
    return e.invariant();
  }
  return "none";
}

}  // namespace

TEST(state_io, builtins) {
  EXPECT_EQ(parse_state_text(R"({"builtin":"chessboard"})").matrix(), chessboard_state().matrix());
  EXPECT_EQ(parse_state_text(R"({"builtin":"bell","d":3})").size(), 9);
  const auto mixed = parse_state_text(R"({"builtin":"mixed","d":2,"r":3})");
  EXPECT_EQ(mixed.parties(), 3);
  EXPECT_THROW(parse_state_text(R"({"builtin":"mixed","d":2})"), std::invalid_argument);
  EXPECT_THROW(parse_state_text(R"({"builtin":"chessboard","d":2})"), std::invalid_argument);
  EXPECT_THROW(parse_state_text(R"({"builtin":"nope"})"), std::invalid_argument);
  EXPECT_THROW(parse_state_text(R"({"builtin":3})"), StateFormatError);
}

TEST(state_io, explicit_matrix) {
  const auto rho = parse_state_text(R"({"d":2,"r":1,"re":[[0.5,0],[0,0.5]],"im":[[0,0],[0,0]]})");
  EXPECT_EQ(rho.matrix(), ComplexMatrix::Identity(2, 2) * 0.5);
  const auto y = parse_state_text(R"({"d":2,"r":1,"re":[[0.5,0],[0,0.5]],"im":[[0,-0.5],[0.5,0]]})");
  EXPECT_EQ(y.matrix()(0, 1), Complex(0.0, -0.5));
}

TEST(state_io, malformed_documents) {
  EXPECT_THROW(parse_state_text("not json"), StateFormatError);
  EXPECT_THROW(parse_state_text("[1,2]"), StateFormatError);
  EXPECT_THROW(parse_state_text(R"({"r":1,"re":[],"im":[]})"), StateFormatError);
  EXPECT_THROW(parse_state_text(R"({"d":"2","r":1})"), StateFormatError);
  EXPECT_THROW(parse_state_text(R"({"d":2,"r":1,"re":[[0.5,0],[0,0.5]]})"), StateFormatError);
  // Ragged row.
  EXPECT_THROW(parse_state_text(R"({"d":2,"r":1,"re":[[0.5,0],[0]],"im":[[0,0],[0,0]]})"), StateFormatError);
  EXPECT_THROW(parse_state_text(R"({"d":2,"r":1,"re":[[0.5,"x"],[0,0.5]],"im":[[0,0],[0,0]]})"),
               StateFormatError);
  EXPECT_THROW(parse_state_text(R"({"d":1,"r":1,"re":[[1]],"im":[[0]]})"), StateFormatError);
}

TEST(state_io, errors_name_the_invariant) {
  EXPECT_EQ(invariant_of(R"({"d":3,"r":1,"re":[[0.5,0],[0,0.5]],"im":[[0,0],[0,0]]})"), "dimension");
  EXPECT_EQ(invariant_of(R"({"d":2,"r":1,"re":[[1,0],[0,1]],"im":[[0,0],[0,0]]})"), "trace");
  EXPECT_EQ(invariant_of(R"({"d":2,"r":1,"re":[[0.5,0.1],[0,0.5]],"im":[[0,0],[0,0]]})"), "hermitian");
  EXPECT_EQ(invariant_of(R"({"d":2,"r":1,"re":[[1.5,0],[0,-0.5]],"im":[[0,0],[0,0]]})"), "positive");
}

TEST(state_io, round_trip) {
  Rng rng(31);
  for (int r = 1; r <= 3; ++r) {
    const auto rho = random_density(2, r, rng);
    const auto back = parse_state_text(state_to_json(rho).dump());
    EXPECT_EQ(back.matrix(), rho.matrix());
    EXPECT_EQ(back.parties(), r);
  }
}

TEST(state_io, permutation_and_class_json) {
  const Permutation sigma({1, 3, 2, 4});
  EXPECT_EQ(permutation_from_json(permutation_to_json(sigma)), sigma);
  EXPECT_THROW(permutation_from_json(json{1, 1}), std::invalid_argument);
  EXPECT_THROW(permutation_from_json(json("x")), std::invalid_argument);
  const auto j = class_to_json(enumerate_classes(2)[2]);
  EXPECT_EQ(j.at("roles"), "HT");
  EXPECT_EQ(j.at("label"), "R");
  EXPECT_EQ(j.at("permutation"), json({1, 3, 2, 4}));
}
