#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "latscat/lattice.hpp"

namespace latscat {

/// {"offset": int, "values": [numbers]}. Throws InvalidArgument with line or
/// field context on malformed content.
Potential parse_potential(std::string_view text, std::string_view source = "<input>");
/// Throws IoError when the file cannot be read.
Potential load_potential(const std::filesystem::path& path);

nlohmann::json potential_to_json(const Potential& q);
void write_potential(const Potential& q, const std::filesystem::path& path);

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double x);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(const std::vector<double>& row);
  void add_row(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Creates parent directories. Throws IoError on failure.
void write_text(const std::filesystem::path& path, std::string_view text);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

std::string read_text(const std::filesystem::path& path);

}  // namespace latscat
