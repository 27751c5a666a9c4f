// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "paving/io.h"

#include <gtest/gtest.h>

namespace paving {
namespace {

TEST(MatroidJsonTest, RoundTripInLexOrder) {
  const Matroid m = Rank2FromParallelClasses({1, 2});
  const Json j = MatroidToJson(m);
  EXPECT_EQ(j.dump(), R"({"n":3,"bases":[[0,1],[0,2]]})");
  EXPECT_EQ(MatroidFromJson(j), m);
}

TEST(MatroidJsonTest, Validation) {
  auto code = [](const char* text) {
    try {
      MatroidFromJson(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  EXPECT_EQ(code(R"({"n":4,"bases":[[0,1],[2,3]]})"),
            ErrorCode::kExchangeAxiomViolated);
  EXPECT_EQ(code(R"({"n":4,"bases":[[1,0]]})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"n":2,"bases":[[0,5]]})"), ErrorCode::kElementOutOfRange);
  EXPECT_EQ(code(R"({"bases":[[0]]})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"n":2})"), ErrorCode::kParseError);
  EXPECT_EQ(code(R"({"n":2,"bases":[]})"), ErrorCode::kEmptyBases);
}

TEST(DesignJsonTest, RoundTrip) {
  const BlockDesign fano = FanoPlane();
  const BlockDesign back = DesignFromJson(DesignToJson(fano));
  EXPECT_EQ(back.n, 7);
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(back.blocks, fano.blocks);
}

TEST(TutteJsonTest, SortedTerms) {
  const Json j = TutteToJson(Tutte(Uniform(1, 2)));
  EXPECT_EQ(j.dump(), R"({"terms":[{"i":0,"j":1,"c":1},{"i":1,"j":0,"c":1}]})");
}

TEST(WitnessJsonTest, Shape) {
  const Multicomplex mc = Multicomplex::DownwardClosure(
      4, {Monomial({1, 1, 0, 0}), Monomial({0, 0, 1, 1})});
  EXPECT_EQ(WitnessToJson(mc).dump(),
            R"({"d":4,"maximal":[[1,1,0,0],[0,0,1,1]],"o_sequence":[1,4,2],"pure":true})");
}

TEST(HVectorReportTest, Uniform) {
  const Json j = HVectorReport(Uniform(2, 4));
  EXPECT_EQ(j.dump(),
            R"({"f":[1,4,6],"h":[1,2,3],"bounds":{"S":1,"hibi":true,"brown_colbourn":true}})");
}

TEST(BigIntJsonTest, LargeValuesBecomeStrings) {
  EXPECT_EQ(BigIntToJson(BigInt(5)).dump(), "5");
  EXPECT_EQ(BigIntToJson(Binomial(100, 50)).dump(),
            "\"100891344545564193334812497256\"");
  EXPECT_EQ(RationalToJson(Rational(15, 2)).dump(), "\"15/2\"");
}

}  // namespace
}  // namespace paving
