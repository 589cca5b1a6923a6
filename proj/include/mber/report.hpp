#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mber/dependence.hpp"
#include "mber/inference.hpp"
#include "mber/table.hpp"

namespace mber {

// Fixed 4-decimal rendering used by every human-readable table.
std::string fixed4(double value);
// Same, with trailing zeros trimmed: interval endpoints read "[0.12, 0.28]".
std::string trimmed4(double value);

// Human-readable reports. Columns, when non-empty, add a legend mapping
// variable indices to data column names.
void print_legend(std::ostream& out, const std::vector<std::string>& columns);
void print_probabilities(std::ostream& out, const ProbabilityTable& table);
void print_params(std::ostream& out, const DependenceParams& params);
void print_measures(std::ostream& out, const DependenceMeasures& measures);
void print_inference(std::ostream& out, const InferenceReport& report);
void print_coverage(std::ostream& out, const CoverageReport& report);
void print_bounds(std::ostream& out, const FrechetBounds& bounds);

// Machine-readable twins: one JSON document, full double precision.
std::string machine_probabilities(const ProbabilityTable& table,
                                  const std::vector<std::string>& columns);
std::string machine_model(const ProbabilityTable& table, const DependenceParams& params,
                          const DependenceMeasures& measures,
                          const std::vector<std::string>& columns);
std::string machine_inference(const InferenceReport& report,
                              const std::vector<std::string>& columns);
std::string machine_coverage(const CoverageReport& report,
                             const std::vector<std::string>& columns);
std::string machine_bounds(const FrechetBounds& bounds);

}  // namespace mber
