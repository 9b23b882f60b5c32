#include "polyia/pia_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "polyia/errors.hpp"

namespace polyia {

namespace {

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw ParseError(std::string("PIA: bad ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

// Splits off the next LF-terminated line; rejects missing terminators.
std::string_view next_line(std::string_view& rest) {
  const auto pos = rest.find('\n');
  if (pos == std::string_view::npos) {
    throw ParseError("PIA: missing LF line terminator");
  }
  std::string_view line = rest.substr(0, pos);
  rest.remove_prefix(pos + 1);
  return line;
}

}  // namespace

std::string to_pia(const Polyiamond& p) {
  std::ostringstream out;
  out << p.size() << '\n';
  for (const Cell c : p.cells()) out << c.x << ' ' << c.y << '\n';
  return out.str();
}

Polyiamond parse_pia(std::string_view text) {
  std::string_view rest = text;
  const std::string_view header = next_line(rest);
  const int n = parse_int(header, "cell count");
  if (n < 1) throw ParseError("PIA: cell count must be >= 1");

  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::string_view line = next_line(rest);
    const auto space = line.find(' ');
    if (space == std::string_view::npos || line.find(' ', space + 1) != std::string_view::npos) {
      throw ParseError("PIA: cell line must be 'x y' with a single space");
    }
    const Cell c{parse_int(line.substr(0, space), "x coordinate"),
                 parse_int(line.substr(space + 1), "y coordinate")};
    if (!cells.empty() && !(cells.back() < c)) {
      throw ParseError("PIA: cells must be strictly increasing in lex order");
    }
    cells.push_back(c);
  }
  if (!rest.empty()) throw ParseError("PIA: trailing content after last cell line");

  Polyiamond p = from_cells(cells);
  if (p.cells() != cells) {
    throw ParseError("PIA: cells are not in the canonical translate");
  }
  return p;
}

Polyiamond read_pia_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pia(buf.str());
}

void write_pia_file(const std::string& path, const Polyiamond& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << to_pia(p);
}

}  // namespace polyia
