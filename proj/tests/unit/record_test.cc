// Copyright 2026 The Spiraltile Authors.
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

#include "spiraltile/record.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "spiraltile/errors.h"

namespace spiraltile {
namespace {

using namespace spiraltile::testing;

TEST(RecordTest, RoundSignificant) {
  EXPECT_DOUBLE_EQ(RoundSignificant(0.945708593704123, 12), 0.945708593704);
  EXPECT_DOUBLE_EQ(RoundSignificant(331.18461538461, 4), 331.2);
  EXPECT_DOUBLE_EQ(RoundSignificant(0.0, 12), 0.0);
}

TEST(RecordTest, CanonicalKeysAndValues) {
  const SpiralSystem s = Quad(13, 1, 14.6, 0.484, kCo);
  const nlohmann::json j = SystemToJson(s);
  for (const char* key : {"n", "m", "phi_deg", "theta_deg", "kappa", "lambda",
                          "sigma_deg", "omega_deg", "sense", "family"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.size(), 10u);
  EXPECT_EQ(j["sense"], "co");
  EXPECT_EQ(j["family"], "quad");
  EXPECT_DOUBLE_EQ(j["theta_deg"].get<double>(), 28.8153846154);
}

TEST(RecordTest, RoundTripPrecisionIsLossless) {
  for (const SpiralSystem& s :
       {Quad(8, 13, 20, 0.78, kContra), Tri(kOmegaPhi, 5, 1, 21, kContra)}) {
    const SpiralSystem back =
        SystemFromJson(SystemToJson(s, NumberPrecision::kRoundTrip));
    EXPECT_NEAR(back.kappa, s.kappa, 1e-15);
    EXPECT_NEAR(back.lambda, s.lambda, 1e-15);
    EXPECT_NEAR(back.theta.radians(), s.theta.radians(), 1e-15);
    EXPECT_NEAR(back.sigma.radians(), s.sigma.radians(), 1e-15);
    EXPECT_EQ(back.sense, s.sense);
    EXPECT_EQ(back.family, s.family);
    EXPECT_TRUE(ValidateSystem(back).ok());
  }
}

TEST(RecordTest, CanonicalRecordStillValidates) {
  const SpiralSystem s = Tri(kOmegaPhi, 12, 2, 20, kCo);
  EXPECT_TRUE(ValidateSystem(SystemFromJson(SystemToJson(s))).ok());
}

TEST(RecordTest, RejectsUnknownAndMissingFields) {
  nlohmann::json j = SystemToJson(Quad(13, 1, 14.6, 0.484, kCo));
  nlohmann::json extra = j;
  extra["colour"] = "red";
  EXPECT_THROW(SystemFromJson(extra), Error);
  nlohmann::json missing = j;
  missing.erase("kappa");
  try {
    SystemFromJson(missing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("kappa"), std::string::npos);
  }
  nlohmann::json wrong = j;
  wrong["n"] = "thirteen";
  EXPECT_THROW(SystemFromJson(wrong), Error);
  EXPECT_THROW(SystemFromJson(nlohmann::json::array()), Error);
}

}  // namespace
}  // namespace spiraltile
