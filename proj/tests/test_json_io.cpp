#include <gtest/gtest.h>

#include "permcanon/json_io.hpp"

using namespace permcanon;

namespace {

const char* kTwoRiemannRequest = R"({
  "perm": [4,7,2,8,6,3,1,5,9,10], "n": 10, "SGSQ": 1, "base": [1,3,5,7],
  "GS": [2,1,3,4,5,6,7,8,10,9, 1,2,4,3,5,6,7,8,10,9,
         1,2,3,4,6,5,7,8,10,9, 1,2,3,4,5,6,8,7,10,9,
         3,4,1,2,5,6,7,8,9,10, 1,2,3,4,7,8,5,6,9,10,
         5,6,7,8,1,2,3,4,9,10],
  "frees": [1,2], "vds": [4], "dummies": [3,4,5,6], "mQ": [1],
  "vrs": [2], "repes": [7,8]
})";

}  // namespace

TEST(JsonIo, TwoRiemannRequest) {
  const auto out = run_canon_request(Json::parse(kTwoRiemannRequest));
  EXPECT_EQ(out.dump(), R"({"cperm":[1,3,4,5,2,7,6,8,9,10]})");
}

TEST(JsonIo, TwoRiemannRequestWithoutStrongFlag) {
  auto j = Json::parse(kTwoRiemannRequest);
  j["SGSQ"] = 0;
  j.erase("base");
  EXPECT_EQ(run_canon_request(j).dump(), R"({"cperm":[1,3,4,5,2,7,6,8,9,10]})");
}

TEST(JsonIo, ZeroResponse) {
  const auto j = Json::parse(R"({"perm": [1,2,3,4,5,6], "SGSQ": 0,
    "GS": [[2,1,3,4,6,5],[3,4,1,2,5,6]], "frees": [3,4], "dummies": [1,2], "mQ": [1]})");
  EXPECT_EQ(run_canon_request(j).dump(), R"({"zero":true})");
}

TEST(JsonIo, RequestErrors) {
  auto j = Json::parse(kTwoRiemannRequest);
  j["n"] = 11;
  EXPECT_THROW(canon_request_from_json(j), FormatError);
  j = Json::parse(kTwoRiemannRequest);
  j["vds"] = {6};
  EXPECT_THROW(canon_request_from_json(j), FormatError);
  j = Json::parse(kTwoRiemannRequest);
  j["perm"] = {4, 7, 2, 8, 6, 3, 1, 5, 9, 9};
  EXPECT_THROW(canon_request_from_json(j), FormatError);
  j = Json::parse(kTwoRiemannRequest);
  j["frees"] = {1, 3};
  EXPECT_THROW(canon_request_from_json(j), FormatError);
  j = Json::parse(kTwoRiemannRequest);
  j.erase("perm");
  EXPECT_THROW(canon_request_from_json(j), FormatError);
  EXPECT_THROW(canon_request_from_json(Json::array()), FormatError);
}

TEST(JsonIo, SgsRoundTrip) {
  const auto gs = generating_set_from_json(Json::parse(R"({"genset": [[2,1,3,4,6,5],[3,4,1,2,5,6]]})"));
  const auto sgs = schreier_sims({}, gs);
  const auto j = to_json(sgs);
  EXPECT_EQ(j["base"], Json::parse("[1,3]"));
  EXPECT_EQ(j["genset"].size(), 3u);
  const auto back = sgs_from_json(j);
  EXPECT_EQ(back.order(), 8);
  EXPECT_EQ(order_to_json(back.order()).dump(), R"({"order":"8"})");
}

TEST(JsonIo, FlatGeneratingSetNeedsN) {
  EXPECT_THROW(generating_set_from_json(Json::parse(R"({"GS": [2,1,4,3]})")), FormatError);
  EXPECT_EQ(generating_set_from_json(Json::parse(R"({"GS": [2,1,4,3], "n": 4})")).size(), 1u);
}

TEST(JsonIo, SignDegenerateSurvivesRoundTrip) {
  const auto gs = generating_set_from_json(Json::parse(R"({"genset": [[2,1,3,5,4],[2,1,3,4,5]]})"));
  const auto sgs = schreier_sims({}, gs);
  ASSERT_TRUE(sgs.sign_degenerate());
  EXPECT_TRUE(sgs_from_json(to_json(sgs)).sign_degenerate());
}
