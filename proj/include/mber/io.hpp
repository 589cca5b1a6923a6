#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "mber/dependence.hpp"
#include "mber/sampling.hpp"
#include "mber/table.hpp"

namespace mber {

// A binary data set: header row with column names, then one 0/1 cell per
// column per row.
struct Dataset {
  std::vector<std::string> columns;
  SampleMatrix data;
};

Dataset read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const Dataset& dataset);

// A model file is a JSON object with "n" and either a flat cell vector "p"
// (rank order) or a "layers" array of {"ones": k, "p": {"0101": value}}
// objects for the layered builder. Optional "columns" names the variables.
struct ModelSpec {
  std::vector<std::string> columns;
  ProbabilityTable table;
  DependenceParams params;
};

ModelSpec load_model(const std::filesystem::path& path);

}  // namespace mber
