/*
 * Copyright 2026 The ESVC Foot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Command-line front end. Talks to the library only through the C API.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "esvc/esvc.h"

namespace {

struct Job {
  std::string config;
  std::string out_dir;
  esvc_status status = ESVC_OK;
  std::string message;
};

void run_job(Job& job, const std::string& command, bool has_seed, std::uint64_t seed) {
  esvc_config* cfg = nullptr;
  job.status = esvc_config_load(job.config.c_str(), &cfg);
  if (job.status == ESVC_OK) {
    job.status = esvc_run(cfg, command.c_str(), job.out_dir.c_str(), seed, has_seed);
  }
  if (job.status != ESVC_OK) job.message = esvc_last_error();
  esvc_config_free(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ESVC foot: design, arc-length sweeps, walking rollouts, profile export"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(esvc_version()));

  std::vector<std::string> configs;
  std::string out = "out";
  std::uint64_t seed = 0;
  int jobs = 1;
  const std::pair<const char*, const char*> commands[] = {
      {"design", "solve the fore/hind ellipses and write the report and profile"},
      {"sweep", "arc-length error sweep and summary table"},
      {"walk", "HLIP-controlled rolling-foot rollout"},
      {"profile", "profile polyline and roll transform dump"}};
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", configs, "INI config file (repeat for a batch)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory")->capture_default_str();
    sub->add_option("--seed", seed, "RNG seed, overrides walk.seed");
    sub->add_option("--jobs", jobs, "concurrent configs in batch mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const bool has_seed = app.get_subcommands().front()->count("--seed") > 0;

  std::vector<Job> batch(configs.size());
  std::set<std::string> stems;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    batch[i].config = configs[i];
    if (configs.size() == 1) {
      batch[i].out_dir = out;
      continue;
    }
    const std::string stem = std::filesystem::path(configs[i]).stem().string();
    if (!stems.insert(stem).second) {
      std::fprintf(stderr, "error: batch configs share the name '%s'\n", stem.c_str());
      return 1;
    }
    batch[i].out_dir = (std::filesystem::path(out) / stem).string();
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next++) < batch.size();) run_job(batch[i], command, has_seed, seed);
  };
  const std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), batch.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int rc = 0;
  for (const Job& job : batch) {
    if (job.status == ESVC_OK) {
      std::printf("%s: %s ok -> %s\n", job.config.c_str(), command.c_str(),
                  job.out_dir.c_str());
      continue;
    }
    std::fprintf(stderr, "%s: %s error (%s): %s\n", job.config.c_str(),
                 command.c_str(), esvc_status_name(job.status), job.message.c_str());
    if (rc == 0) rc = esvc_exit_code(job.status);
  }
  return rc;
}
