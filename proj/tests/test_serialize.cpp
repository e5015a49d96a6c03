#include <gtest/gtest.h>

#include "frobius/frobius.hpp"

using namespace frobius;

TEST(Serialize, NormalFormRoundTrip) {
  TermGenerator gen(14);
  for (int i = 0; i < 500; ++i) {
    const NormalForm nf = normalize(gen.next());
    ASSERT_EQ(normalFormFromJson(Json::parse(toJson(nf).dump())), nf);
  }
}

TEST(Serialize, NormalFormSchema) {
  const Json j = toJson(normalize(parse("mu")));
  EXPECT_EQ(j.dump(), R"({"closed":[],"inputOnly":[],"outputOnly":[],"mixed":[{"outs":1,"genus":0,"ins":2}],)"
                      R"("head":[0,1],"tail":[0]})");
}

TEST(Serialize, NormalFormRejectsInvalidInput) {
  Json j = toJson(normalize(parse("mu x mu")));
  j["tail"] = {1, 0};
  EXPECT_THROW(normalFormFromJson(j), Error);
  j = toJson(normalize(parse("mu")));
  j["head"] = {0, 0};
  EXPECT_THROW(normalFormFromJson(j), Error);
  j = toJson(normalize(parse("mu")));
  j.erase("mixed");
  EXPECT_THROW(normalFormFromJson(j), Error);
  j = toJson(normalize(parse("mu")));
  j["closed"] = {-1};
  EXPECT_THROW(normalFormFromJson(j), Error);
}

TEST(Serialize, SkeletonRoundTripAndSchema) {
  TermGenerator gen(15);
  for (int i = 0; i < 500; ++i) {
    const CobSkeleton s = cobSkeleton(gen.next());
    ASSERT_EQ(skeletonFromJson(Json::parse(toJson(s).dump())), s);
  }
  EXPECT_EQ(toJson(cobSkeleton(parse("eps . mu . delta . eta"))).dump(),
            R"({"nIn":0,"nOut":0,"components":[],"closed":[1]})");
  EXPECT_EQ(toJson(cobSkeleton(parse("mu"))).dump(),
            R"({"nIn":2,"nOut":1,"components":[{"in":[0,1],"out":[0],"genus":0}],"closed":[]})");
}

TEST(Serialize, Rationals) {
  EXPECT_EQ(parseRational("3/6"), Rational(1, 2));
  EXPECT_EQ(parseRational("-4"), Rational(-4));
  EXPECT_EQ(parseRational("+7/1"), Rational(7));
  EXPECT_EQ(entryToString(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(entryToString(Rational(5)), "5");
  EXPECT_EQ(entryToString(BigInt(pow(BigInt(3), 50))), "717897987691852588770249");
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "--1"}) EXPECT_THROW(parseRational(bad), Error) << bad;
}

TEST(Serialize, AlgebraRoundTripAndErrors) {
  const AlgebraData a = matrixAlgebra(2);
  const AlgebraData b = algebraFromJson(toJson(a));
  EXPECT_EQ(b.mul, a.mul);
  EXPECT_EQ(b.comul, a.comul);
  EXPECT_EQ(b.unit, a.unit);
  EXPECT_EQ(b.counit, a.counit);

  Json j = toJson(diagonalAlgebra());
  j["unit"] = {"1/2", 3};
  EXPECT_EQ(algebraFromJson(j).unit, RationalMatrix(2, 1, {Rational(1, 2), Rational(3)}));
  j["unit"] = {1};
  EXPECT_THROW(algebraFromJson(j), Error);
  j["unit"] = {1.5, 1};
  EXPECT_THROW(algebraFromJson(j), Error);
  EXPECT_THROW(loadAlgebra("/nonexistent/algebra.json"), Error);
}

TEST(Serialize, MatrixAndReport) {
  EXPECT_EQ(toJson(ExactMatrix(1, 2, {BigInt(1), BigInt(-3)})).dump(), R"({"rows":1,"cols":2,"entries":["1","-3"]})");
  const Json r = toJson(checkFrobenius(matrixAlgebra(2)));
  EXPECT_EQ(r["com"], false);
  EXPECT_EQ(r["symmetric"], true);
  EXPECT_EQ(r.size(), 8u);
}
