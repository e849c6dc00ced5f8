// Copyright 2026 The qintrinsic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qintrinsic/io.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "qintrinsic/errors.h"

using namespace qintrinsic;

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kData = QINTRINSIC_DATA_DIR;

}  // namespace

TEST(Io, fixtures_round_trip_byte_identical) {
  for (const char *name : {"sic2", "mub2", "vnx2", "trivial2", "zpvm", "sic3"}) {
    const std::string path = kData + "/" + name + ".json";
    Povm p = io::povm_from_json(io::read_json_file(path));
    EXPECT_EQ(io::dump(io::povm_to_json(p)), slurp(path)) << name;
  }
  io::StateInput k = io::state_from_json(io::read_json_file(kData + "/ket0.json"));
  ASSERT_TRUE(k.ket.has_value());
  EXPECT_EQ(io::dump(io::ket_to_json(*k.ket)), slurp(kData + "/ket0.json"));
  io::StateInput m = io::state_from_json(io::read_json_file(kData + "/mixed2.json"));
  EXPECT_FALSE(m.ket.has_value());
  EXPECT_EQ(io::dump(io::state_to_json(m.state)), slurp(kData + "/mixed2.json"));
}

TEST(Io, nested_rows_are_accepted) {
  io::Json j = io::Json::parse(R"({"dim": 2, "elements": [
      [[[1,0],[0,0]], [[0,0],[0,0]]],
      [[[0,0],[0,0]], [[0,0],[1,0]]]]})");
  Povm p = io::povm_from_json(j);
  EXPECT_EQ(p.size(), 2);
  EXPECT_EQ(p[1](1, 1), Complex(1.0));
}

TEST(Io, errors_name_the_offending_element) {
  io::Json j = io::Json::parse(R"({"dim": 2, "elements": [[[1,0],[0,0],[0,0],[0,0]], [[0,0],[0,0],[1]]]})");
  try {
    io::povm_from_json(j);
    FAIL() << "expected ParseError";
  } catch (const io::ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("elements[1]"), std::string::npos);
  }
  EXPECT_THROW(io::povm_from_json(io::Json::parse(R"({"elements": []})")), io::ParseError);
  EXPECT_THROW(io::state_from_json(io::Json::parse(R"({"dim": 2})")), io::ParseError);
  io::Json bad = io::Json::parse(R"({"dim": 1, "elements": [[[0.5,0]]]})");
  EXPECT_THROW(io::povm_from_json(bad), IncompleteSum);
}

TEST(Io, round12_is_stable) {
  EXPECT_EQ(io::round12(1.0 / 3.0), 0.333333333333);
  EXPECT_EQ(io::round12(io::round12(2.0 / 3.0)), io::round12(2.0 / 3.0));
  EXPECT_EQ(io::round12(-1e-20), -1e-20);
  EXPECT_EQ(io::round12(0.0), 0.0);
}
