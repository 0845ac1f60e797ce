#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "sepekr/clique.hpp"
#include "sepekr/report.hpp"

namespace sepekr::cli {

enum Exit : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResourceAbort = 3 };

struct RunConfig {
  std::string command;  // enumerate, max-family, classes, lemmas, weighted, graph, report
  int n = 0;
  int r = 0;
  int k = 1;
  Limits limits{};
  bool vertices_set = false;
  Format format = Format::text;
  std::string output;  // empty: stdout
  bool rotations_only = false;
  bool diagnostics = false;
  // lemmas
  std::string family_path;
  int samples = 200;
  // graph
  std::string graph_kind = "schrijver";
  std::string export_kind;  // "", dimacs, adjacency
  // report
  std::string grid = "default";
};

// Runs one command, writing results to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Applies SEPEKR_THREADS if set. Returns false on a malformed value.
bool apply_thread_env(std::ostream& err);

}  // namespace sepekr::cli
