#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "symdeg/json_io.hpp"
#include "test_support.hpp"

namespace symdeg {
namespace {

using io::Json;

TEST(JsonIo, SymPolynomialShape) {
  SymPolynomial q = SymPolynomial::constant(3, Rational(2));
  q.add_term(Partition{1, 1}, Rational(-1, 2));
  const Json j = io::to_json(q);
  EXPECT_EQ(j["namespace"], "z");
  EXPECT_EQ(j["m"], 3);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["partition"], Json::array());
  EXPECT_EQ(j["terms"][0]["coeff"], "2");
  EXPECT_EQ(j["terms"][1]["coeff"], "-1/2");
}

TEST(JsonIo, RoundTripsAreExact) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const SymPolynomial q = testing::random_sym_polynomial(rng, 1 + trial % 4, 5, 5);
    EXPECT_EQ(io::sym_polynomial_from_json(io::to_json(q)), q);
    EXPECT_EQ(io::dump(io::to_json(io::sym_polynomial_from_json(Json::parse(io::dump(io::to_json(q)))))),
              io::dump(io::to_json(q)));

    const XPolynomial x = testing::random_x_polynomial(rng, 1 + trial % 3, 3, 4);
    EXPECT_EQ(io::x_polynomial_from_json(io::to_json(x)), x);
    const YPolynomial y = substitute(x);
    EXPECT_EQ(io::y_polynomial_from_json(io::to_json(y)), y);
    EXPECT_TRUE(std::holds_alternative<YPolynomial>(io::polynomial_from_json(io::to_json(y))));
  }
}

TEST(JsonIo, IntegerCoefficientsAccepted) {
  const Json j = Json::parse(R"({"namespace":"z","m":2,"terms":[{"partition":[1],"coeff":3}]})");
  EXPECT_EQ(io::sym_polynomial_from_json(j), SymPolynomial::basis(2, Partition{1}) * Rational(3));
}

TEST(JsonIo, MalformedDocuments) {
  for (const char* text : {
           R"({"namespace":"q","m":2,"terms":[]})",
           R"({"namespace":"z","terms":[]})",
           R"({"namespace":"z","m":2,"terms":[{"partition":[1],"coeff":"1/0"}]})",
           R"({"namespace":"z","m":2,"terms":[{"partition":[0],"coeff":"1"}]})",
           R"({"namespace":"z","m":2,"terms":[{"partition":[1,1,1],"coeff":"1"}]})",
           R"({"namespace":"y","n":2,"m":2,"terms":[{"factors":[[3,1]],"coeff":"1"}]})",
           R"({"namespace":"y","n":2,"m":2,"terms":[{"factors":[[1]],"coeff":"1"}]})",
           R"({"namespace":"x","n":2,"terms":[{"factors":[5],"coeff":"1"}]})",
           R"([1,2])",
       }) {
    EXPECT_THROW((void)io::polynomial_from_json(Json::parse(text)), std::invalid_argument) << text;
  }
}

TEST(JsonIo, PropertyFile) {
  const Json j = Json::parse(
      R"({"n":3,"name":"custom","classes":[{"partition":[3],"label":"Zero"},{"partition":[1,1,1],"label":"One"}]})");
  const PropertySpec p = io::property_from_json(j);
  EXPECT_EQ(p.name(), "custom");
  EXPECT_EQ(p.classify(FrequencyVector(3, Partition{2, 1})), Label::Undefined);
  EXPECT_EQ(p.classify(FrequencyVector(3, Partition{1, 1, 1})), Label::One);
  EXPECT_THROW((void)io::property_from_json(Json::parse(R"({"n":3,"classes":[{"partition":[2],"label":"One"}]})")),
               std::invalid_argument);
  EXPECT_THROW(
      (void)io::property_from_json(Json::parse(R"({"n":1,"classes":[{"partition":[1],"label":"Maybe"}]})")),
      std::invalid_argument);
}

TEST(JsonIo, CertificateFields) {
  const auto cert = approx_degree(PropertySpec::element_distinctness(), 2, 2, Rational(1, 3));
  const Json j = io::to_json(cert);
  EXPECT_EQ(j["degree"], 2);
  EXPECT_EQ(j["query_lower_bound"], 1);
  EXPECT_EQ(j["epsilon"], "1/3");
  ASSERT_EQ(j["eps_min"].size(), 3u);
  EXPECT_EQ(j["eps_min"][1]["eps_min"], "1/2");
  EXPECT_EQ(io::sym_polynomial_from_json(j["optimal"]), cert.optimal().optimum);
}

TEST(JsonIo, ReadFileErrors) {
  EXPECT_THROW((void)io::read_file("/nonexistent/symdeg.json"), std::invalid_argument);
}

}  // namespace
}  // namespace symdeg
