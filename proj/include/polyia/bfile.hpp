#pragma once

#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyia {

// OEIS b-file: one "n value" pair per line, '#' starts a comment. Values can
// exceed any machine word, hence mpz. Throws ParseError on anything else.
std::map<unsigned, mpz_class> parse_bfile(std::string_view text);
std::map<unsigned, mpz_class> read_bfile(const std::string& path);

}  // namespace polyia
