// Copyright 2026 The qcc Authors
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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "qcc/hamio.hpp"
#include "test_util.hpp"

namespace qcc {
namespace {

using testing::data_path;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      const auto pos = line.find(',', start);
      cells.push_back(line.substr(start, pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    rows.push_back(cells);
  }
  return rows;
}

std::size_t column(const std::vector<std::string>& header,
                   const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  EXPECT_NE(it, header.end()) << name;
  return static_cast<std::size_t>(it - header.begin());
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qcc_cli_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(Cli, FactorizeText) {
  const auto r = run({"factorize", "Z3 Y2 Z1 X0"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int factors = 0;
  while (std::getline(in, line)) {
    if (line.rfind("EXP(", 0) != 0) continue;
    ++factors;
    const auto word = line.substr(line.find(' ') + 1);
    EXPECT_LE(PauliWord::parse(word, 4).length(), 2) << line;
  }
  EXPECT_GT(factors, 1);
  EXPECT_NE(r.out.find("# Z3 Y2 Z1 X0:"), std::string::npos);
}

TEST(Cli, FactorizeLiHEntanglerSetTotal) {
  const auto r = run({"factorize", "--entanglers",
                      data_path("lih/lih7.ent").string(), "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["two_qubit_total"].get<int>(), 31);
  EXPECT_EQ(doc["words"].size(), 7u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"exact", "--ham", "/nonexistent.ham"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"factorize", "X0 Y0"}).code, 2);
  EXPECT_EQ(run({"factorize", "X0"}).code, 2);
  EXPECT_EQ(run({"rank", "--ham", data_path("h2/h2_R1.00.ham").string(),
                 "--pool", "3q"})
                .code,
            2);
  EXPECT_EQ(run({"exact"}).code, 2);
  EXPECT_EQ(run({"taper", "--ham", data_path("h2/h2_R1.00.ham").string(),
                 "--sector", "0:+1"})
                .code,
            2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, UnknownOptionIsInputError) {
  const auto r = run({"optimize", "--ham", data_path("h2/h2_R1.00.ham").string(),
                      "--gen", "X2 Y0", "--max-iter", "1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, RankTrivialZHasNoLowering) {
  const auto r = run({"rank", "--ham", data_path("trivial_z.ham").string(),
                      "--pool", "2q"});
  EXPECT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_GT(rows.size(), 1u);
  const auto de = column(rows[0], "delta_e");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!rows[i][de].empty()) EXPECT_GE(std::stod(rows[i][de]), -1e-9);
  }
}

TEST(Cli, RankH2TwoQubitPool) {
  const auto r = run({"rank", "--ham", data_path("h2/h2_R1.00.ham").string(),
                      "--pool", "2q", "--top", "20"});
  EXPECT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 55u);
  const auto de = column(rows[0], "delta_e");
  int lowering = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!rows[i][de].empty() && std::stod(rows[i][de]) < -1e-6) ++lowering;
  }
  EXPECT_EQ(lowering, 6);
}

TEST(Cli, RankJsonMatchesCsv) {
  const std::vector<std::string> base{
      "rank", "--ham", data_path("h2/h2_R1.00.ham").string(), "--pool", "2q"};
  auto csv_args = base, json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto csv = parse_csv(run(csv_args).out);
  const auto doc = nlohmann::json::parse(run(json_args).out);
  ASSERT_EQ(doc["scores"].size() + 1, csv.size());
  const auto d1 = column(csv[0], "d1"), d2 = column(csv[0], "d2"),
             de = column(csv[0], "delta_e");
  for (std::size_t i = 0; i < doc["scores"].size(); ++i) {
    const auto& s = doc["scores"][i];
    const auto& row = csv[i + 1];
    EXPECT_EQ(s["generator"].get<std::string>(), row[0]);
    EXPECT_EQ(format_number(s["d1"].get<double>()), row[d1]);
    if (!s["d2"].is_null()) {
      EXPECT_EQ(format_number(s["d2"].get<double>()), row[d2]);
    } else {
      EXPECT_TRUE(row[d2].empty());
    }
    if (!s["delta_e"].is_null()) {
      EXPECT_EQ(format_number(s["delta_e"].get<double>()), row[de]);
    }
  }
}

TEST(Cli, ExactSectorsMinimumEqualsFull) {
  const auto r = run({"exact", "--ham", data_path("lih/lih_R1.50.ham").string(),
                      "--sectors", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  const double full = doc["rows"][0]["ground_energy"].get<double>();
  EXPECT_EQ(doc["rows"].size(), 5u);
  EXPECT_NEAR(doc["min_sector_ground_energy"].get<double>(), full, 1e-10);
}

TEST(Cli, TaperWritesReducedFile) {
  const auto dir = temp_dir("taper");
  const auto out = dir / "lih_sector.ham";
  const auto r = run({"taper", "--ham", data_path("lih/lih_R1.50.ham").string(),
                      "--sector", "2:-1,5:+1", "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  const auto p = read_problem_file(out);
  EXPECT_EQ(p.n_qubits, 4);
  EXPECT_EQ(p.hamiltonian.size(), 100u);
  const auto list = run({"taper", "--ham", data_path("lih/lih_R1.50.ham").string()});
  EXPECT_NE(list.out.find("stationary qubits: 2 5"), std::string::npos);
}

TEST(Cli, OptimizeH2) {
  const auto r = run({"optimize", "--ham", data_path("h2/h2_R1.00.ham").string(),
                      "--gen", "X2 Y0", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["energy"].get<double>(), doc["exact_energy"].get<double>(),
              1e-6);
  EXPECT_EQ(doc["parameter_count"].get<int>(), 9);
}

TEST(Cli, ScanH2IsExactAndDeterministic) {
  const std::vector<std::string> args{
      "scan", "--dir", data_path("h2").string(), "--entanglers",
      data_path("h2/x2y0.ent").string(), "--jobs", "4"};
  const auto a = run(args);
  EXPECT_EQ(a.code, 0) << a.err;
  const auto rows = parse_csv(a.out);
  ASSERT_EQ(rows.size(), 22u);
  const auto ex = column(rows[0], "E_exact"), qc = column(rows[0], "E_QCC"),
             qm = column(rows[0], "E_QMF"), r = column(rows[0], "R");
  double prev_r = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double e_exact = std::stod(rows[i][ex]);
    const double e_qcc = std::stod(rows[i][qc]);
    EXPECT_NEAR(e_qcc, e_exact, 1e-6);
    EXPECT_LE(e_qcc, std::stod(rows[i][qm]) + 1e-9);
    EXPECT_GT(std::stod(rows[i][r]), prev_r);
    prev_r = std::stod(rows[i][r]);
  }
  auto serial = args;
  serial.back() = "1";
  EXPECT_EQ(run(serial).out, a.out);
}

TEST(Cli, ScanEmptyEntanglerFileGivesQmf) {
  const auto dir = temp_dir("empty");
  std::ofstream(dir / "none.ent") << "# no generators\n";
  const auto r = run({"scan", "--dir", data_path("h2").string(), "--entanglers",
                      (dir / "none.ent").string()});
  EXPECT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  const auto qc = column(rows[0], "E_QCC"), qm = column(rows[0], "E_QMF");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NEAR(std::stod(rows[i][qc]), std::stod(rows[i][qm]), 1e-12);
  }
}

TEST(Cli, ScanRecordsPerGeometryFailures) {
  const auto dir = temp_dir("partial");
  std::filesystem::copy_file(data_path("h2/h2_R1.00.ham"), dir / "good.ham");
  std::ofstream(dir / "bad.ham") << "nqubits 4\nterm nope Z0\n";
  const auto r = run({"scan", "--dir", dir.string(), "--gen", "X2 Y0"});
  EXPECT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_FALSE(rows[2].back().empty());
  std::filesystem::remove(dir / "good.ham");
  EXPECT_EQ(run({"scan", "--dir", dir.string(), "--gen", "X2 Y0"}).code, 2);
}

}  // namespace
}  // namespace qcc
