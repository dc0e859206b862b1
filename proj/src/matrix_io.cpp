#include "knotcert/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace knotcert {

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

BigInt parse_integer(const std::string& word, int line) {
  std::size_t start = (word[0] == '-' || word[0] == '+') ? 1 : 0;
  if (start == word.size()) throw MatrixParseError(line, "expected an integer, got '" + word + "'");
  for (std::size_t i = start; i < word.size(); ++i)
    if (word[i] < '0' || word[i] > '9') throw MatrixParseError(line, "expected an integer, got '" + word + "'");
  return BigInt(word[0] == '+' ? word.substr(1) : word);
}

// Content lines (comments and blanks dropped) after a leading count line
// that must be followed by exactly that many rows.
std::vector<Line> counted_lines(std::string_view text, Eigen::Index* count) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') continue;
    lines.push_back({number, raw});
  }
  if (lines.empty()) throw MatrixParseError(number == 0 ? 1 : number, "missing size line");

  const auto size_words = split_words(lines.front().text);
  if (size_words.size() != 1) throw MatrixParseError(lines.front().number, "size line must hold one integer");
  const BigInt n_big = parse_integer(size_words.front(), lines.front().number);
  if (n_big < 0 || n_big > 10'000) throw MatrixParseError(lines.front().number, "size out of range");
  const auto n = n_big.convert_to<Eigen::Index>();
  if (static_cast<Eigen::Index>(lines.size()) - 1 < n)
    throw MatrixParseError(lines.back().number, "expected " + std::to_string(n) + " rows, found " +
                                                    std::to_string(lines.size() - 1));
  if (static_cast<Eigen::Index>(lines.size()) - 1 > n)
    throw MatrixParseError(lines[static_cast<std::size_t>(n) + 1].number, "unexpected extra row");
  *count = n;
  return lines;
}

}  // namespace

IntMatrix parse_int_matrix(std::string_view text) {
  Eigen::Index n = 0;
  const auto lines = counted_lines(text, &n);

  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Line& line = lines[static_cast<std::size_t>(i) + 1];
    const auto words = split_words(line.text);
    if (static_cast<Eigen::Index>(words.size()) != n)
      throw MatrixParseError(line.number, "expected " + std::to_string(n) + " entries, found " +
                                              std::to_string(words.size()));
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_integer(words[static_cast<std::size_t>(j)], line.number);
  }
  return m;
}

std::vector<IntVector> parse_vector_list(std::string_view text) {
  Eigen::Index k = 0;
  const auto lines = counted_lines(text, &k);
  std::vector<IntVector> out;
  for (Eigen::Index i = 0; i < k; ++i) {
    const Line& line = lines[static_cast<std::size_t>(i) + 1];
    const auto words = split_words(line.text);
    if (!out.empty() && static_cast<Eigen::Index>(words.size()) != out.front().size())
      throw MatrixParseError(line.number, "vectors have different lengths");
    IntVector v(static_cast<Eigen::Index>(words.size()));
    for (std::size_t j = 0; j < words.size(); ++j) v(static_cast<Eigen::Index>(j)) = parse_integer(words[j], line.number);
    out.push_back(std::move(v));
  }
  return out;
}

SeifertMatrix parse_matrix_file(std::string_view text, std::string label) {
  return SeifertMatrix::validate(parse_int_matrix(text), std::move(label));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SeifertMatrix load_matrix_file(const std::filesystem::path& path) {
  return parse_matrix_file(read_text_file(path), path.stem().string());
}

std::string format_matrix_file(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << "\n";
  }
  return out.str();
}

}  // namespace knotcert
