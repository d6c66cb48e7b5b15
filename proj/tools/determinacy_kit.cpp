#include "dkit/job.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dkit::JobResult run_file(const fs::path& p, const dkit::RunOptions& opts) {
  const auto text = read_file(p);
  if (!text) {
    dkit::JobResult r{dkit::exit_code::invalid, {}};
    r.report["error"] = {{"kind", "JobError"}, {"message", "cannot read " + p.string()}};
    return r;
  }
  return dkit::run_job_text(*text, opts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite determinacy of power series matrices"};
  std::string command, job_file, jobs_dir, method, output = "text";
  std::optional<int> jet_level;
  bool verify = false;
  app.add_option("command", command, "tangent-image | codim | predeterm | determ | orbit-equations | stabilizer | "
                                     "orbit-codim | separability (defaults to the job's command)");
  auto* job_opt = app.add_option("--job", job_file, "job file")->check(CLI::ExistingFile);
  auto* dir_opt = app.add_option("--jobs-dir", jobs_dir, "run every *.job and *.json file in a directory")
                      ->check(CLI::ExistingDirectory);
  job_opt->excludes(dir_opt);
  app.add_flag("--verify", verify, "rerun orbit-codim with the other method and check agreement");
  app.add_option("--jet-level", jet_level, "jet level k (at least the pre-determinacy bound)")
      ->check(CLI::Range(0, 1000));
  app.add_option("--orbit-method", method, "eliminate | stabilizer")
      ->check(CLI::IsMember({"eliminate", "stabilizer"}));
  app.add_option("--output", output, "text | structured")->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : dkit::exit_code::invalid;
  }
  if (job_file.empty() && jobs_dir.empty()) {
    std::cerr << "one of --job or --jobs-dir is required\n";
    return dkit::exit_code::invalid;
  }

  dkit::RunOptions opts;
  opts.verify = verify;
  opts.jet_level = jet_level;
  if (!method.empty())
    opts.orbit_method = method == "eliminate" ? dkit::OrbitMethod::Eliminate : dkit::OrbitMethod::Stabilizer;
  if (!command.empty()) {
    opts.command = dkit::command_from_name(command);
    if (!opts.command) {
      std::cerr << "unknown command '" << command << "'\n";
      return dkit::exit_code::invalid;
    }
  }
  const auto format = [&](const nlohmann::ordered_json& r) {
    return output == "structured" ? dkit::format_structured(r) : dkit::format_text(r);
  };

  if (!job_file.empty()) {
    const auto r = run_file(job_file, opts);
    std::cout << format(r.report);
    return r.exit_code;
  }

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(jobs_dir))
    if (entry.is_regular_file() && (entry.path().extension() == ".job" || entry.path().extension() == ".json"))
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<std::future<dkit::JobResult>> pending;
  for (const auto& f : files) pending.push_back(std::async(std::launch::async, run_file, f, opts));
  int worst = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto r = pending[i].get();
    if (output == "structured") {
      nlohmann::ordered_json wrapped;
      wrapped["file"] = files[i].filename().string();
      wrapped["exit_code"] = r.exit_code;
      wrapped["report"] = r.report;
      std::cout << dkit::format_structured(wrapped);
    } else {
      std::cout << "== " << files[i].filename().string() << " (exit " << r.exit_code << ")\n" << format(r.report);
    }
    worst = std::max(worst, r.exit_code);
  }
  return worst;
}
