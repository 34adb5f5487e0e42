// Copyright 2026 The rotvlab Authors
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

// Command-line front end for the rotvlab shared library.  Talks to the
// library exclusively through its C interface.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotvlab.h"

namespace {

// 0 success, 2 bad usage/config/io, 3 synthesis failure, 4 divergence.
int exit_code_for(rotv_status status) {
  switch (status) {
    case ROTV_OK:
      return 0;
    case ROTV_ERR_SYNTHESIS:
      return 3;
    case ROTV_ERR_DIVERGED:
      return 4;
    default:
      return 2;
  }
}

int fail(rotv_status status) {
  std::fprintf(stderr, "rotvlab: error: %s\n", rotv_last_error());
  return exit_code_for(status);
}

// --config on the command line, then ROTVLAB_CONFIG, then built-in defaults.
rotv_status load_config(const std::string& cli_path, rotv_config** out) {
  std::string path = cli_path;
  if (path.empty()) {
    if (const char* env = std::getenv("ROTVLAB_CONFIG")) path = env;
  }
  if (path.empty()) return rotv_config_default(out);
  return rotv_config_open(path.c_str(), out);
}

void print_csv_rows(const double* data, int rows, int cols) {
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::printf(c == 0 ? "%.12g" : ",%.12g", data[r * cols + c]);
    }
    std::printf("\n");
  }
}

int cmd_simulate(const std::string& config_path, const std::string& scenario,
                 const std::string& controller, std::uint64_t seed,
                 const std::string& out_dir) {
  rotv_config* config = nullptr;
  rotv_status status = load_config(config_path, &config);
  if (status != ROTV_OK) return fail(status);

  char* report = nullptr;
  status = rotv_run_scenario(config, scenario.c_str(), controller.c_str(),
                             seed, out_dir.empty() ? nullptr : out_dir.c_str(),
                             &report);
  rotv_config_free(config);
  if (status != ROTV_OK) return fail(status);
  std::printf("%s", report);
  rotv_string_free(report);
  return 0;
}

int cmd_linearize(const std::string& config_path, double speed) {
  rotv_config* config = nullptr;
  rotv_status status = load_config(config_path, &config);
  if (status != ROTV_OK) return fail(status);

  double a[36], b[18];
  status = rotv_linearize(config, speed, a, b);
  rotv_config_free(config);
  if (status != ROTV_OK) return fail(status);

  std::printf("# linear model at %.6g m/s\n", speed);
  std::printf("# A (6x6); state z,zdot,phi,phidot,theta,thetadot\n");
  print_csv_rows(a, 6, 6);
  std::printf("# B (6x3); inputs u1,u2,u3\n");
  print_csv_rows(b, 6, 3);
  return 0;
}

int cmd_gains(const std::string& config_path,
              const std::vector<double>& speeds) {
  rotv_config* config = nullptr;
  rotv_status status = load_config(config_path, &config);
  if (status != ROTV_OK) return fail(status);

  rotv_schedule* schedule = nullptr;
  status = speeds.empty()
               ? rotv_schedule_build(config, &schedule)
               : rotv_schedule_build_speeds(config, speeds.data(),
                                            speeds.size(), &schedule);
  rotv_config_free(config);
  if (status != ROTV_OK) return fail(status);

  std::printf("# gain schedule: surge followed by the 3x6 gain, row-major\n");
  size_t n = 0;
  rotv_schedule_size(schedule, &n);
  for (size_t i = 0; i < n; ++i) {
    double surge = 0.0;
    double gain[18];
    rotv_schedule_entry(schedule, i, &surge, gain);
    std::printf("%.12g", surge);
    for (double g : gain) std::printf(",%.12g", g);
    std::printf("\n");
  }

  size_t warnings = 0;
  rotv_schedule_warning_count(schedule, &warnings);
  for (size_t i = 0; i < warnings; ++i) {
    char* text = nullptr;
    rotv_schedule_warning(schedule, i, &text);
    std::fprintf(stderr, "rotvlab: warning: %s\n", text);
    rotv_string_free(text);
  }
  rotv_schedule_free(schedule);
  // A schedule whose interpolated gains fail to stabilize the in-between
  // speeds is not fit for use; surface that as a synthesis failure.
  return warnings == 0 ? 0 : 3;
}

int cmd_compare(const std::string& config_path, const std::string& scenario,
                const std::vector<std::uint64_t>& seeds,
                const std::string& out_dir) {
  rotv_config* config = nullptr;
  rotv_status status = load_config(config_path, &config);
  if (status != ROTV_OK) return fail(status);

  char* table = nullptr;
  status = rotv_compare(config, scenario.c_str(), seeds.data(), seeds.size(),
                        out_dir.empty() ? nullptr : out_dir.c_str(), &table);
  rotv_config_free(config);
  if (status != ROTV_OK) return fail(status);
  std::printf("%s", table);
  rotv_string_free(table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rotvlab - remotely operated towed-vehicle simulation and control "
      "laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer("Reads the run configuration from --config, then the "
             "ROTVLAB_CONFIG environment variable, then built-in defaults.");

  std::string config_path;
  app.add_option("-c,--config", config_path, "Run configuration file");

  auto* simulate = app.add_subcommand(
      "simulate", "Run one controller over one preset course");
  std::string scenario = "nominal";
  std::string controller = "lqr";
  std::uint64_t seed = 0;
  std::string out_dir;
  simulate->add_option("-s,--scenario", scenario,
                       "nominal, disturbed, gainsched or tuning")
      ->capture_default_str();
  simulate->add_option("-k,--controller", controller, "lqr or pid")
      ->capture_default_str();
  simulate->add_option("--seed", seed, "Disturbance seed")
      ->capture_default_str();
  simulate->add_option("-o,--out", out_dir,
                       "Directory for the trajectory CSV and report");

  auto* linearize = app.add_subcommand(
      "linearize", "Print the linear model at a tow speed as CSV");
  double speed = 5.0;
  linearize->add_option("-u,--speed,--surge", speed, "Tow speed, m/s")
      ->capture_default_str();

  auto* gains = app.add_subcommand(
      "gains", "Build the speed-scheduled feedback gains and print as CSV");
  std::vector<double> gain_speeds;
  gains->add_option("--speeds", gain_speeds,
                    "Tow speeds, ascending (default: configured grid)")
      ->delimiter(',');

  auto* compare = app.add_subcommand(
      "compare", "Run both controllers head to head and print the table");
  std::string compare_scenario = "nominal";
  std::vector<std::uint64_t> seeds;
  std::uint64_t compare_seed = 0;
  std::string compare_out;
  compare->add_option("-s,--scenario", compare_scenario,
                      "nominal, disturbed, gainsched or tuning")
      ->capture_default_str();
  auto* seed_opt = compare->add_option("--seed", compare_seed,
                                       "Single disturbance seed")
                       ->capture_default_str();
  compare->add_option("--seeds", seeds,
                      "Several seeds; metrics are averaged over them")
      ->delimiter(',')
      ->excludes(seed_opt);
  compare->add_option("-o,--out", compare_out,
                      "Directory for the per-run trajectory CSVs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (simulate->parsed()) {
    return cmd_simulate(config_path, scenario, controller, seed, out_dir);
  }
  if (linearize->parsed()) {
    return cmd_linearize(config_path, speed);
  }
  if (gains->parsed()) {
    return cmd_gains(config_path, gain_speeds);
  }
  if (compare->parsed()) {
    if (seeds.empty()) seeds.push_back(compare_seed);
    return cmd_compare(config_path, compare_scenario, seeds, compare_out);
  }
  return 2;
}
