#include "latscat/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "latscat/error.hpp"

namespace latscat {

namespace {

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Potential parse_potential(std::string_view text, std::string_view source) {
  const std::string src(source);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw InvalidArgument(src + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed potential (" +
                          e.what() + ")");
  }
  if (!j.is_object()) throw InvalidArgument(src + ": expected an object with fields offset and values");
  if (!j.contains("offset")) throw InvalidArgument(src + ": missing field 'offset'");
  if (!j.contains("values")) throw InvalidArgument(src + ": missing field 'values'");
  const auto& off = j["offset"];
  if (!off.is_number_integer()) throw InvalidArgument(src + ": field 'offset' must be an integer");
  const auto& vals = j["values"];
  if (!vals.is_array()) throw InvalidArgument(src + ": field 'values' must be an array");
  std::vector<double> v;
  v.reserve(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const auto& x = vals[i];
    if (!x.is_number()) {
      throw InvalidArgument(src + ": field 'values[" + std::to_string(i) + "]' is not a number (got " +
                            std::string(x.type_name()) + ")");
    }
    const double d = x.get<double>();
    if (!std::isfinite(d)) throw InvalidArgument(src + ": field 'values[" + std::to_string(i) + "]' is not finite");
    v.push_back(d);
  }
  const long long o = off.get<long long>();
  if (o < -(1LL << 30) || o > (1LL << 30)) throw InvalidArgument(src + ": field 'offset' out of range");
  return Potential(static_cast<int>(o), std::move(v));
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return ss.str();
}

Potential load_potential(const std::filesystem::path& path) { return parse_potential(read_text(path), path.string()); }

nlohmann::json potential_to_json(const Potential& q) {
  nlohmann::json j;
  j["offset"] = q.offset();
  j["values"] = nlohmann::json::array();
  for (double x : q.values()) j["values"].push_back(x);
  return j;
}

void write_potential(const Potential& q, const std::filesystem::path& path) {
  write_text(path, potential_to_json(q).dump() + "\n");
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(const std::vector<double>& row) {
  std::vector<std::string> s;
  s.reserve(row.size());
  for (double x : row) s.push_back(format_double(x));
  add_row(std::move(s));
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw InvalidArgument("CsvTable: row width does not match the header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(r[i]);
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("cannot write " + path.string());
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace latscat
