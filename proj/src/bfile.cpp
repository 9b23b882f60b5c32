#include "polyia/bfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "polyia/errors.hpp"

namespace polyia {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::map<unsigned, mpz_class> parse_bfile(std::string_view text) {
  std::map<unsigned, mpz_class> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    // trim
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
      line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    if (line.empty()) continue;

    std::size_t sp = line.find(' ');
    if (sp == std::string_view::npos)
      throw ParseError("b-file line " + std::to_string(line_no) + ": expected 'n value'");
    std::string_view key = line.substr(0, sp);
    std::string_view val = line.substr(sp + 1);
    while (!val.empty() && val.front() == ' ') val.remove_prefix(1);
    if (!all_digits(key) || !all_digits(val))
      throw ParseError("b-file line " + std::to_string(line_no) + ": malformed entry");

    unsigned n = 0;
    for (char c : key) {
      if (n > 400000000u) throw ParseError("b-file line " + std::to_string(line_no) + ": index too large");
      n = n * 10 + static_cast<unsigned>(c - '0');
    }
    mpz_class v(std::string(val), 10);
    if (!out.emplace(n, v).second)
      throw ParseError("b-file line " + std::to_string(line_no) + ": duplicate index");
  }
  return out;
}

std::map<unsigned, mpz_class> read_bfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open b-file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_bfile(ss.str());
}

}  // namespace polyia
