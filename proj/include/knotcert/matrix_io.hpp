#pragma once

// Text matrix files: first nonblank line n, then n rows of n integers.
// Lines starting with '#' are comments.

#include "knotcert/seifert.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotcert {

class MatrixParseError : public std::invalid_argument {
 public:
  MatrixParseError(int line, const std::string& message)
      : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Raw integer grid; throws MatrixParseError.
IntMatrix parse_int_matrix(std::string_view text);

/// Parses and validates; throws MatrixParseError or InvalidSeifertMatrix.
SeifertMatrix parse_matrix_file(std::string_view text, std::string label = {});
SeifertMatrix load_matrix_file(const std::filesystem::path& path);

/// Canonical text: size line, then single-space separated rows.
std::string format_matrix_file(const IntMatrix& m);

/// Vector list: first nonblank line k, then k rows of integers of equal
/// length. Used for metabolizer bases.
std::vector<IntVector> parse_vector_list(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace knotcert
