// Copyright 2026 The acgem Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / ("acgem_cli_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(const std::string &args) const {
        const std::string cmd = "cd '" + dir_.string() + "' && '" ACGEM_CLI_PATH "' " + args + " >stdout.txt 2>stderr.txt";
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    }

    std::string read(const std::string &name) const {
        std::ifstream f(dir_ / name, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    std::vector<std::string> csv_files() const {
        std::vector<std::string> out;
        for (const auto &e : fs::directory_iterator(dir_)) {
            if (e.path().extension() == ".csv" || e.path().extension() == ".tmp") out.push_back(e.path().filename());
        }
        return out;
    }

    /// Value of `column` in the first data row.
    static double field(const std::string &csv, const std::string &column) {
        std::istringstream in(csv);
        std::string line, header;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            if (header.empty()) {
                header = line;
                continue;
            }
            break;
        }
        auto split = [](const std::string &s) {
            std::vector<std::string> v;
            std::stringstream ss(s);
            std::string cell;
            while (std::getline(ss, cell, ',')) v.push_back(cell);
            return v;
        };
        const auto names = split(header);
        const auto cells = split(line);
        for (std::size_t i = 0; i < names.size() && i < cells.size(); ++i) {
            if (names[i] == column) return std::stod(cells[i]);
        }
        ADD_FAILURE() << "column " << column << " missing";
        return 0.0;
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, StarkScanIsDeterministic) {
    ASSERT_EQ(run("stark-scan --set scan.points=40 --out a.csv"), 0) << read("stderr.txt");
    ASSERT_EQ(run("stark-scan --set scan.points=40 --out b.csv"), 0);
    const auto a = read("a.csv");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, read("b.csv"));
    EXPECT_EQ(a.rfind("# acgem 0.1.0\n", 0), 0u);
    EXPECT_NE(a.find("scan.points = 40"), std::string::npos);
}

TEST_F(Cli, DefaultOutputName) {
    ASSERT_EQ(run("trap-report"), 0) << read("stderr.txt");
    const auto csv = read("trap-report.csv");
    EXPECT_NEAR(field(csv, "site_detuning_diff_hz"), 53.2, 1e-6);
}

TEST_F(Cli, UnknownCommandWritesNothing) {
    EXPECT_EQ(run("frobnicate"), 2);
    EXPECT_TRUE(csv_files().empty());
    EXPECT_EQ(run(""), 2);
}

TEST_F(Cli, ForbiddenPolarizationIsDomainError) {
    EXPECT_EQ(run("--set laser.q=0 stark-scan"), 3);
    EXPECT_TRUE(csv_files().empty());
    EXPECT_FALSE(read("stderr.txt").empty());
}

TEST_F(Cli, BadInputsExitTwo) {
    EXPECT_EQ(run("stark-scan --set laser.detuning=5parsecs"), 2);
    EXPECT_EQ(run("stark-scan --set laser.power=3Hz"), 2);
    EXPECT_EQ(run("stark-scan --set no.such=1"), 2);
    EXPECT_EQ(run("stark-scan --config missing.ini"), 2);
    EXPECT_EQ(run("stark-scan --out nodir/x.csv"), 2);
    EXPECT_TRUE(csv_files().empty());
}

TEST_F(Cli, ConfigFileLineNumberReported) {
    std::ofstream(dir_ / "bad.ini") << "[laser]\n# fine\npower = 2 K\n";
    EXPECT_EQ(run("--config bad.ini stark-scan"), 2);
    EXPECT_NE(read("stderr.txt").find("bad.ini:3"), std::string::npos);
}

TEST_F(Cli, SampleConfigReproducesThresholds) {
    ASSERT_EQ(run("--config '" ACGEM_SAMPLE_CONFIG "' efficiency-sweep --out s.csv"), 0) << read("stderr.txt");
    const auto thr = read("s_thresholds.csv");
    EXPECT_NE(thr.find("\n0,0.9,131."), std::string::npos) << thr;
    EXPECT_NE(thr.find("\n1,0.9,46."), std::string::npos) << thr;
}

TEST_F(Cli, GemSimSummary) {
    ASSERT_EQ(run("gem-sim --grid coarse --out gem.csv"), 0) << read("stderr.txt");
    const auto summary = read("gem_summary.csv");
    EXPECT_NEAR(field(summary, "efficiency"), 0.915, 0.02);
    EXPECT_NE(read("gem.csv").find("t_s,in_re"), std::string::npos);
}

TEST_F(Cli, EfficiencySweepWritesThresholds) {
    ASSERT_EQ(run("efficiency-sweep --out sweep.csv"), 0) << read("stderr.txt");
    EXPECT_NE(read("sweep.csv").find("eps_total"), std::string::npos);
    EXPECT_NE(read("sweep_thresholds.csv").find("multi_pulse,threshold,max_dbp"), std::string::npos);
}

TEST_F(Cli, PowerBudgetLinearProfile) {
    ASSERT_EQ(run("power-budget --set power.bandwidth=1MHz"), 0) << read("stderr.txt");
    EXPECT_NEAR(field(read("power-budget.csv"), "required_power_w"), 5.72, 0.1);
}

TEST_F(Cli, SwitchDemoAndOptimum) {
    ASSERT_EQ(run("switch-demo"), 0) << read("stderr.txt");
    ASSERT_EQ(run("optimal-detuning --set optimum.grid=60"), 0) << read("stderr.txt");
    EXPECT_NE(read("switch-demo.csv").find("after_flip_compensated_hz"), std::string::npos);
    EXPECT_FALSE(read("optimal-detuning.csv").empty());
}
