#pragma once

#include "pcb/decomp.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcb::cli {

inline constexpr const char* kToolName = "pcb";
inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitValidation = 3,
  kExitBadPrime = 4,
  kExitVerification = 5,
};

/// {"n": 4, "L": [[3,-1,-1,-1], ...]}
struct MatrixFile {
  std::size_t n = 0;
  IntMatrix L{1, 1};
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

/// Syntax and shape errors throw ParseError. The matrix itself is not
/// validated here; a rectangular L with rows != cols parses fine.
MatrixFile parse_matrix_file(std::string_view text);
std::string serialize_matrix_file(const MatrixFile& file);

std::string sha256_hex(std::string_view data);

struct FieldChoice {
  enum class Kind { Symbolic, Rationals, Prime };
  Kind kind = Kind::Symbolic;
  std::uint32_t prime = 0;

  /// "symbolic", "q" or "fp:<p>"; throws std::invalid_argument.
  static FieldChoice parse(const std::string& text);
  std::string name() const;
};

nlohmann::json integer_json(const Integer& z);
nlohmann::json vector_json(const IntVector& v);
nlohmann::json matrix_json(const IntMatrix& m);

nlohmann::json analyze_payload(const PcbMatrix& p);
nlohmann::json snf_payload(const PcbMatrix& p);
/// Throws BadPrime for fp:<p> with p ≢ 1 (mod d_{n-1}).
nlohmann::json decompose_payload(const PcbMatrix& p, const FieldChoice& field);

struct VerifyOutcome {
  nlohmann::json payload;
  bool ok = false;
};

VerifyOutcome verify_payload(const PcbMatrix& p, const FieldChoice& field, bool full);

std::string render_pretty(const nlohmann::json& envelope);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcb::cli
