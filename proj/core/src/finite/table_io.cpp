#include "gyro/finite/table_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gyro/error.hpp"

namespace gyro::finite {

namespace {

constexpr int kMaxParsedOrder = 4096;

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) {
  throw Error(ErrorKind::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Token {
  std::size_t column;  // 1-based
  std::string_view text;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({start + 1, line.substr(start, i - start)});
  }
  return out;
}

int to_int(const Token& tok, std::size_t line) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail(line, tok.column, "expected an integer, found '" + std::string(tok.text) + "'");
  return value;
}

}  // namespace

CayleyTable parse_gyro(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }

  std::size_t i = 0;
  int n = 0;
  for (; i < lines.size(); ++i) {
    const auto toks = tokenize(lines[i]);
    if (toks.empty() || toks.front().text.front() == '#') continue;
    if (toks.size() != 1) fail(i + 1, toks[1].column, "header must be a single integer n");
    n = to_int(toks.front(), i + 1);
    if (n < 1 || n > kMaxParsedOrder)
      fail(i + 1, toks.front().column,
           "order must lie in 1.." + std::to_string(kMaxParsedOrder));
    ++i;
    break;
  }
  if (n == 0) fail(lines.size(), 1, "missing header line with the order n");

  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  int rows = 0;
  for (; i < lines.size() && rows < n; ++i) {
    const auto toks = tokenize(lines[i]);
    if (toks.empty()) continue;
    if (toks.front().text.front() == '#')
      fail(i + 1, toks.front().column, "comments are only allowed before the header");
    if (toks.size() != static_cast<std::size_t>(n))
      fail(i + 1, toks.size() > static_cast<std::size_t>(n) ? toks[n].column : lines[i].size() + 1,
           "row " + std::to_string(rows) + " has " + std::to_string(toks.size()) +
               " entries, expected " + std::to_string(n));
    for (const Token& tok : toks) {
      const int v = to_int(tok, i + 1);
      if (v < 0 || v >= n)
        fail(i + 1, tok.column,
             "entry " + std::to_string(v) + " is outside 0.." + std::to_string(n - 1));
      cells.push_back(v);
    }
    ++rows;
  }
  if (rows < n)
    fail(lines.size(), 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows));
  for (; i < lines.size(); ++i) {
    const auto toks = tokenize(lines[i]);
    if (!toks.empty()) fail(i + 1, toks.front().column, "unexpected content after the table");
  }
  return CayleyTable(n, std::move(cells));
}

CayleyTable read_gyro_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gyro(buf.str());
}

std::string format_gyro(const CayleyTable& t, std::string_view comment) {
  std::string out;
  std::size_t pos = 0;
  while (!comment.empty() && pos <= comment.size()) {
    std::size_t end = comment.find('\n', pos);
    if (end == std::string_view::npos) end = comment.size();
    out += "# ";
    out += comment.substr(pos, end - pos);
    out += '\n';
    pos = end + 1;
  }
  out += std::to_string(t.order()) + '\n';
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      if (b) out += ' ';
      out += std::to_string(t(a, b));
    }
    out += '\n';
  }
  return out;
}

void write_gyro_file(const std::filesystem::path& path, const CayleyTable& t,
                     std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path.string());
  out << format_gyro(t, comment);
}

}  // namespace gyro::finite
