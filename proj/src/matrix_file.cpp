#include "pcb/cli.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace pcb::cli {

namespace {

using nlohmann::json;

struct Position {
  std::size_t line = 1, column = 1;
};

Position position_at(std::string_view text, std::size_t byte) {
  Position pos;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// Shape errors have no parser offset; point at the key instead.
[[noreturn]] void fail_at_key(std::string_view text, std::string_view key, const std::string& msg) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  const auto at = text.find(quoted);
  const Position pos = position_at(text, at == std::string_view::npos ? 0 : at);
  throw ParseError(msg, pos.line, pos.column);
}

Integer entry_value(std::string_view text, const json& v, std::size_t i, std::size_t j) {
  const std::string where = "L[" + std::to_string(i) + "][" + std::to_string(j) + "]";
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                  : Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    Integer z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  fail_at_key(text, "L", where + " is not an integer");
}

}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

MatrixFile parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const Position pos = position_at(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), pos.line, pos.column);
  }
  if (!doc.is_object()) throw ParseError("top level must be an object", 1, 1);
  if (!doc.contains("n")) fail_at_key(text, "n", "missing key \"n\"");
  if (!doc.contains("L")) fail_at_key(text, "L", "missing key \"L\"");
  const json& n = doc["n"];
  if (!n.is_number_integer() || n.get<std::int64_t>() < 1) fail_at_key(text, "n", "\"n\" must be a positive integer");
  const json& rows = doc["L"];
  if (!rows.is_array() || rows.empty()) fail_at_key(text, "L", "\"L\" must be a non-empty array of rows");

  MatrixFile out;
  out.n = n.get<std::size_t>();
  if (rows.size() != out.n)
    fail_at_key(text, "L", "\"L\" has " + std::to_string(rows.size()) + " rows but n = " + std::to_string(out.n));
  const json& first = rows.front();
  if (!first.is_array() || first.empty()) fail_at_key(text, "L", "L[0] must be a non-empty array");
  const std::size_t cols = first.size();
  out.L = IntMatrix(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != cols)
      fail_at_key(text, "L", "row " + std::to_string(i) + " has a different length than row 0");
    for (std::size_t j = 0; j < cols; ++j) out.L(i, j) = entry_value(text, rows[i][j], i, j);
  }
  return out;
}

std::string serialize_matrix_file(const MatrixFile& file) {
  json doc;
  doc["n"] = file.n;
  doc["L"] = matrix_json(file.L);
  return doc.dump();
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

}  // namespace pcb::cli
