#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "dnq/cli.hpp"

using namespace dnq;

namespace {
struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json verdict(const Json& doc, const std::string& name) {
  for (const auto& v : doc.at("verdicts")) {
    if (v.at("name") == name) return v;
  }
  return nullptr;
}
}  // namespace

TEST(CliGroup, RejectsSmallOrder) {
  const auto r = invoke({"group", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("n must be ≥ 2"), std::string::npos);
}

TEST(CliGroup, TwoIsAbelian) {
  const auto r = invoke({"group", "2", "--table"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  const auto& table = doc.at("payload").at("table");
  ASSERT_EQ(table.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(table[i][j], table[j][i]);
  EXPECT_TRUE(doc.at("payload").at("abelian").get<bool>());
}

TEST(CliGroup, ThreeHasFullTable) {
  const auto r = invoke({"group", "3", "--table"});
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc.at("payload").at("table").size(), 6u);
  for (const auto& row : doc.at("payload").at("table")) EXPECT_EQ(row.size(), 6u);
  EXPECT_TRUE(doc.at("all_pass").get<bool>());
  EXPECT_FALSE(doc.at("payload").at("abelian").get<bool>());
  EXPECT_EQ(doc.at("payload").at("table")[1][3], "M1");  // R1 M0
}

TEST(CliRep, CsvPermutation) {
  const auto r = invoke({"rep", "3", "V1", "R1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = parse_matrix_csv(r.out);
  EXPECT_EQ(m, rep_closed_form(Representation::v1, DihedralElement::rotation(1, 3)));
  EXPECT_NE(r.err.find("unitarity: PASS"), std::string::npos);
}

TEST(CliRep, OracleAgreement) {
  const auto r = invoke({"rep", "4", "V2", "M1", "--oracle"});
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(verdict(doc, "induce_rep_oracle").at("max_deviation").get<double>(), 0.0);
  EXPECT_EQ(matrix_from_json(doc.at("payload").at("matrix")),
            rep_closed_form(Representation::v2, DihedralElement::mirror(1, 4)));
}

TEST(CliRep, UsageErrors) {
  EXPECT_EQ(invoke({"rep", "4", "V1", "X9"}).code, 2);
  EXPECT_EQ(invoke({"rep", "4", "V3", "R1"}).code, 2);
  EXPECT_EQ(invoke({"rep", "4", "V1", "R4"}).code, 2);
  EXPECT_EQ(invoke({"rep", "4", "V1"}).code, 2);
  EXPECT_EQ(invoke({"rep", "4", "V1", "R1", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(CliVerify, TwoIncludesResolutionOfUnity) {
  const auto r = invoke({"verify", "2", "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("resolution_of_unity[V1]: PASS, 4*I"), std::string::npos);
  const auto doc = Json::parse(invoke({"verify", "2"}).out);
  EXPECT_LE(verdict(doc, "resolution_of_unity[V1]").at("max_deviation").get<double>(), 1e-10);
}

TEST(CliVerify, FivePassesForBoth) {
  const auto r = invoke({"verify", "5", "--rep", "both"});
  ASSERT_EQ(r.code, 0) << r.out;
  const auto doc = Json::parse(r.out);
  EXPECT_TRUE(doc.at("all_pass").get<bool>());
  EXPECT_FALSE(verdict(doc, "parity_exp[V2]").is_null());
}

TEST(CliVerify, SingleRepAndTolerance) {
  const auto doc = Json::parse(invoke({"verify", "4", "--rep", "V2", "--tol", "1e-9"}).out);
  EXPECT_TRUE(verdict(doc, "parity_exp[V1]").is_null());
  EXPECT_FALSE(verdict(doc, "parity_exp[V2]").is_null());
  EXPECT_EQ(doc.at("tolerance").get<double>(), 1e-9);
}

TEST(CliVerify, ImpossibleToleranceFails) {
  const auto r = invoke({"verify", "3", "--tol", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(Json::parse(r.out).at("all_pass").get<bool>());
}

TEST(CliCoherent, IdentityLabelGivesVacuum) {
  const auto r = invoke({"coherent", "3", "0", "0", "R0"});
  ASSERT_EQ(r.code, 0);
  const auto state = Json::parse(r.out).at("payload").at("state");
  const auto vac = vacuum(3, 0);
  for (int j = 0; j < 3; ++j) {
    EXPECT_EQ(complex_from_json(state.at(static_cast<std::size_t>(j))), vac.components[j]);
  }
}

TEST(CliCoherent, ProbabilityProfile) {
  const auto r = invoke({"coherent", "2", "0", "1", "M1", "--probabilities"});
  ASSERT_EQ(r.code, 0);
  const auto profile = Json::parse(r.out).at("payload").at("probabilities");
  const double a2 = 1.0 / (1.0 + std::exp(kPi));
  for (int j = 0; j < 2; ++j) {
    EXPECT_NEAR(profile.at(static_cast<std::size_t>(j)).get<double>(), a2 * std::exp(kPi * (1 - j) * (1 - j)),
                1e-12);
  }
}

TEST(CliCoherent, OverlapIsHermitian) {
  const auto r = invoke({"coherent", "3", "1", "2", "R1", "--overlaps-with", "3", "1", "0", "M0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  ASSERT_EQ(doc.at("payload").at("overlaps").size(), 1u);
  const Complex forward = complex_from_json(doc.at("payload").at("overlaps")[0].at("value"));

  const auto back = Json::parse(invoke({"coherent", "3", "1", "0", "M0", "--overlaps-with", "3", "1", "2", "R1"}).out);
  const Complex reverse = complex_from_json(back.at("payload").at("overlaps")[0].at("value"));
  EXPECT_LT(std::abs(forward - std::conj(reverse)), 1e-12);
}

TEST(CliCoherent, UsageErrors) {
  EXPECT_EQ(invoke({"coherent", "3", "3", "0", "R0"}).code, 2);
  EXPECT_EQ(invoke({"coherent", "3", "0", "5", "R0"}).code, 2);
  EXPECT_EQ(invoke({"coherent", "3", "0", "0", "M3"}).code, 2);
  EXPECT_EQ(invoke({"coherent", "3", "0", "0", "R0", "--overlaps-with", "4", "0", "0", "R0"}).code, 2);
}

TEST(CliCoherent, CsvState) {
  const auto r = invoke({"coherent", "4", "2", "1", "M3", "--rep", "V2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto m = parse_matrix_csv(r.out);
  const auto s = coherent_state({1, DihedralElement::mirror(3, 4), Representation::v2}, 2);
  ASSERT_EQ(m.rows(), 4);
  for (int j = 0; j < 4; ++j) EXPECT_EQ(m(j, 0), s.components[j]);
}

TEST(CliJson, DeterministicAndRoundTrips) {
  const auto first = invoke({"verify", "6"});
  const auto second = invoke({"verify", "6"});
  EXPECT_EQ(first.out, second.out);
  const auto doc = Json::parse(first.out);
  EXPECT_EQ(doc.dump(2) + "\n", first.out);
  EXPECT_EQ(Json::parse(doc.dump()), doc);
}

TEST(CliJson, HelpExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("coherent"), std::string::npos);
}

TEST(CsvFormat, RoundTripsRandomMatrices) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim(1, 7);
  std::normal_distribution<double> d(0.0, 1e3);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = {d(rng), d(rng) * 1e-9};
    EXPECT_EQ(parse_matrix_csv(dump_matrix_csv(m)), m);
    EXPECT_EQ(matrix_from_json(Json::parse(to_json(m).dump())), m);
  }
  EXPECT_THROW(parse_matrix_csv("1,2,3\n"), std::invalid_argument);
  EXPECT_THROW(parse_matrix_csv("1,2\n1,2,3,4\n"), std::invalid_argument);
  EXPECT_THROW(parse_matrix_csv("1,x\n"), std::invalid_argument);
}
