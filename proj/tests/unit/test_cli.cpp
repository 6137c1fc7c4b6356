// Copyright 2026-present the sparse-iht authors
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


#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <sstream>

#include "cli/commands.hpp"
#include "sparse_iht/errors.hpp"
#include "sparse_iht/instance_io.hpp"
#include "sparse_iht/stationary.hpp"

namespace sparse_iht {
namespace {

namespace fs = std::filesystem;
using cli::RunSpec;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("sparse_iht_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        spec_.out = dir_;
        spec_.gamma = "0.06";
    }
    void TearDown() override { fs::remove_all(dir_); }

    int Run(int (*cmd)(const RunSpec&, std::ostream&)) {
        out_.str("");
        err_.str("");
        return cli::guarded([&] { return cmd(spec_, out_); }, err_);
    }

    fs::path dir_;
    RunSpec spec_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST_F(CliTest, StationaryMatchesLibrary) {
    ASSERT_EQ(Run(cli::cmd_stationary), cli::kOk) << err_.str();
    const auto points = enumerate_stationary(*builtin_fixture("paper4x4"), SparsityBudget(2, 4), 0.06);
    EXPECT_EQ(read_text_file(dir_ / "stationary.txt"), stationary_table_text(points));
    EXPECT_EQ(read_text_file(dir_ / "stationary.json"), stationary_to_json(points, 0.06));
    EXPECT_NE(out_.str().find("strictly HT-stable"), std::string::npos);
}

TEST_F(CliTest, RefusesToOverwrite) {
    ASSERT_EQ(Run(cli::cmd_stationary), cli::kOk);
    EXPECT_EQ(Run(cli::cmd_stationary), cli::kIo);
    EXPECT_NE(err_.str().find("--overwrite"), std::string::npos);
    spec_.overwrite = true;
    EXPECT_EQ(Run(cli::cmd_stationary), cli::kOk);
}

TEST_F(CliTest, ConstantsAutoGamma) {
    spec_.gamma = "auto";
    ASSERT_EQ(Run(cli::cmd_constants), cli::kOk);
    EXPECT_NE(out_.str().find("1/L_s: 0.478863"), std::string::npos);
    spec_.format = "json";
    ASSERT_EQ(Run(cli::cmd_constants), cli::kOk);
    EXPECT_NE(out_.str().find("\"inv_L_s\""), std::string::npos);
}

TEST_F(CliTest, RunFormatsSelectFiles) {
    spec_.format = "csv";
    spec_.max_iters = 50;
    ASSERT_EQ(Run(cli::cmd_run), cli::kOk) << err_.str();
    EXPECT_TRUE(fs::exists(dir_ / "trajectory.csv"));
    EXPECT_FALSE(fs::exists(dir_ / "trajectory.json"));
}

TEST_F(CliTest, RunFromStationaryPoint) {
    spec_.x0 = "stationary:3";
    ASSERT_EQ(Run(cli::cmd_run), cli::kOk) << err_.str();
    EXPECT_NE(out_.str().find("steps: 1\n"), std::string::npos);
    EXPECT_NE(out_.str().find("final_classification: strictly_stable"), std::string::npos);
}

TEST_F(CliTest, BadInputsMapToExitCodes) {
    spec_.x0 = "1,1,1,0";
    EXPECT_EQ(Run(cli::cmd_run), cli::kUsage);
    spec_.x0 = "1,2";
    EXPECT_EQ(Run(cli::cmd_run), cli::kUsage);
    spec_.x0 = "zero";
    spec_.gamma = "-1";
    EXPECT_EQ(Run(cli::cmd_run), cli::kUsage);
    spec_.gamma = "0.06";
    spec_.s = 4;
    EXPECT_EQ(Run(cli::cmd_stationary), cli::kUsage);
    spec_.s = 2;
    spec_.instance = "/no/such/file.json";
    EXPECT_EQ(Run(cli::cmd_stationary), cli::kIo);
}

TEST_F(CliTest, EscapeWritesReportRunsAndPlanes) {
    spec_.runs = 2;
    spec_.steps = 10;
    ASSERT_EQ(Run(cli::cmd_escape), cli::kOk) << err_.str();
    EXPECT_TRUE(fs::exists(dir_ / "escape_report.json"));
    EXPECT_TRUE(fs::exists(dir_ / "escape_runs.csv"));
    EXPECT_TRUE(fs::exists(dir_ / "planes" / "plane_x3_x4.csv"));
    EXPECT_EQ(Run(cli::cmd_escape), cli::kIo);
}

TEST_F(CliTest, CheckSuitePassesOnFixture) {
    ASSERT_EQ(Run(cli::cmd_check), cli::kOk) << out_.str();
    EXPECT_EQ(out_.str().find("FAIL"), std::string::npos);
}

TEST(CliConfig, ExplicitFlagsWin) {
    RunSpec spec;
    spec.runs = 7;
    cli::apply_config(spec, R"({"version": 1, "runs": 5, "steps": 9, "gamma": 0.06, "out": "x"})", {"runs"});
    EXPECT_EQ(spec.runs, 7u);
    EXPECT_EQ(spec.steps, 9u);
    EXPECT_EQ(spec.out, fs::path("x"));
    EXPECT_DOUBLE_EQ(std::stod(spec.gamma), 0.06);
}

TEST(CliConfig, RejectsUnknownKeysAndVersions) {
    RunSpec spec;
    EXPECT_THROW(cli::apply_config(spec, R"({"version": 1, "colour": 1})", {}), ConfigError);
    EXPECT_THROW(cli::apply_config(spec, R"({"runs": 1})", {}), ConfigError);
    EXPECT_THROW(cli::apply_config(spec, R"({"version": 2})", {}), ConfigError);
    EXPECT_THROW(cli::apply_config(spec, R"({"version": 1, "runs": "many"})", {}), ConfigError);
    EXPECT_THROW(cli::apply_config(spec, "{", {}), IoError);
}

}  // namespace
}  // namespace sparse_iht
