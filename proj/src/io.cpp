#include "mber/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mber/construct.hpp"
#include "mber/errors.hpp"

namespace mber {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding blanks
    const auto first = field.find_first_not_of(" \t");
    const auto last = field.find_last_not_of(" \t");
    fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

}  // namespace

Dataset read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> columns;
  std::vector<std::uint32_t> rows;
  int n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_line(line);
    if (columns.empty()) {
      columns = fields;
      if (columns.size() < 1 || columns.size() > static_cast<std::size_t>(kMaxDim))
        throw IoError(path.string() + ": header must name between 1 and " +
                      std::to_string(kMaxDim) + " columns");
      n = static_cast<int>(columns.size());
      continue;
    }
    if (fields.size() != columns.size())
      throw IoError(path.string() + " line " + std::to_string(lineno) + ": expected " +
                    std::to_string(columns.size()) + " cells, got " +
                    std::to_string(fields.size()));
    std::uint32_t bits = 0;
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (fields[c] == "0")
        bits = bits << 1;
      else if (fields[c] == "1")
        bits = (bits << 1) | 1u;
      else
        throw IoError(path.string() + " line " + std::to_string(lineno) + ", column " +
                      std::to_string(c + 1) + ": cell '" + fields[c] + "' is not 0 or 1");
    }
    rows.push_back(bits);
  }
  if (columns.empty()) throw IoError(path.string() + ": empty file");
  if (rows.empty()) throw IoError(path.string() + ": no data rows");
  return Dataset{std::move(columns), SampleMatrix(n, std::move(rows))};
}

void write_csv(const std::filesystem::path& path, const Dataset& dataset) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  for (std::size_t c = 0; c < dataset.columns.size(); ++c) {
    if (c) out << ',';
    out << dataset.columns[c];
  }
  out << '\n';
  const int n = dataset.data.dim();
  for (std::size_t r = 0; r < dataset.data.rows(); ++r) {
    for (int v = 1; v <= n; ++v) {
      if (v > 1) out << ',';
      out << dataset.data.cell(r, v);
    }
    out << '\n';
  }
  if (!out) throw IoError("failed while writing " + path.string());
}

namespace {

std::vector<std::string> default_columns(int n) {
  std::vector<std::string> columns;
  for (int v = 1; v <= n; ++v) columns.push_back("x" + std::to_string(v));
  return columns;
}

}  // namespace

ModelSpec load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw IoError(path.string() + ": model must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ValidationError(path.string() + ": model needs an integer \"n\"");
  const int n = check_dim(doc["n"].get<int>());
  const bool has_cells = doc.contains("p");
  const bool has_layers = doc.contains("layers");
  if (has_cells == has_layers)
    throw ValidationError(path.string() + ": model needs exactly one of \"p\" or \"layers\"");

  std::vector<std::string> columns = default_columns(n);
  if (doc.contains("columns")) {
    if (!doc["columns"].is_array() || doc["columns"].size() != static_cast<std::size_t>(n))
      throw ValidationError(path.string() + ": \"columns\" must list one name per variable");
    columns = doc["columns"].get<std::vector<std::string>>();
  }

  if (has_cells) {
    if (!doc["p"].is_array())
      throw ValidationError(path.string() + ": \"p\" must be an array of cell probabilities");
    std::vector<double> cells;
    cells.reserve(doc["p"].size());
    for (const auto& v : doc["p"]) {
      if (!v.is_number()) throw ValidationError(path.string() + ": \"p\" entries must be numbers");
      cells.push_back(v.get<double>());
    }
    ProbabilityTable table(n, std::move(cells));
    DependenceParams params = DependenceParams::from_table(table);
    return ModelSpec{std::move(columns), std::move(table), std::move(params)};
  }

  if (!doc["layers"].is_array())
    throw ValidationError(path.string() + ": \"layers\" must be an array");
  std::vector<LayerCells> layers(static_cast<std::size_t>(n));
  std::size_t top = 0;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& layer : doc["layers"]) {
    if (!layer.is_object() || !layer.contains("ones") || !layer["ones"].is_number_integer() ||
        !layer.contains("p") || !layer["p"].is_object())
      throw ValidationError(path.string() +
                            ": each layer needs an integer \"ones\" and an object \"p\"");
    const int k = layer["ones"].get<int>();
    if (k < 0 || k >= n)
      throw ValidationError(path.string() + ": layer weight " + std::to_string(k) +
                            " out of range 0.." + std::to_string(n - 1));
    if (seen[static_cast<std::size_t>(k)])
      throw ValidationError(path.string() + ": layer weight " + std::to_string(k) +
                            " appears twice");
    seen[static_cast<std::size_t>(k)] = true;
    top = std::max(top, static_cast<std::size_t>(k) + 1);
    for (const auto& [key, value] : layer["p"].items()) {
      if (key.size() != static_cast<std::size_t>(n))
        throw ValidationError(path.string() + ": pattern \"" + key + "\" needs " +
                              std::to_string(n) + " binary digits");
      std::uint32_t bits = 0;
      for (char c : key) {
        if (c != '0' && c != '1')
          throw ValidationError(path.string() + ": pattern \"" + key + "\" has non-binary digits");
        bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
      }
      if (!value.is_number())
        throw ValidationError(path.string() + ": probability for pattern \"" + key +
                              "\" must be a number");
      layers[static_cast<std::size_t>(k)].emplace_back(bits, value.get<double>());
    }
  }
  layers.resize(top);
  LayeredBuild built = build_layered(n, layers);
  return ModelSpec{std::move(columns), std::move(built.table), std::move(built.params)};
}

}  // namespace mber
