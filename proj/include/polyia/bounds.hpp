#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace polyia {

// T(75), 35 digits. Recomputing it is far out of enumeration range, so it
// ships as a literal (with a digit-for-digit test).
inline constexpr char kT75Digits[] = "15936363137225733301433441827683823";
mpz_class t75();

// Exact witness that r^n < (num/den)·count, with r = r_int/10^d. The two
// compared integers are kept as decimal text.
struct BoundCertificate {
  unsigned n = 0;
  mpz_class count;
  mpz_class factor_num;
  mpz_class factor_den;
  unsigned digits = 0;      // d
  mpz_class r_int;          // bound = r_int / 10^d
  std::string r_digits;     // bound as decimal text
  std::string lhs_digits;   // r_int^n · den
  std::string rhs_digits;   // num · count · 10^(d·n)
};

// True iff r_int^n · den < num · count · 10^(d·n) — all integers, strict.
// Zero n or den is an ArgumentError.
bool check_claim(const mpz_class& r_int, unsigned d, unsigned n, const mpz_class& count,
                 const mpz_class& factor_num, const mpz_class& factor_den);

// Largest r with d decimal places such that check_claim holds; exact
// doubling + binary search. Returned as decimal text ("2.8578").
std::string lower_bound_root(unsigned n, const mpz_class& count, const mpz_class& factor_num,
                             const mpz_class& factor_den, unsigned d);

// Same search, but keeps the witnessing inequality.
BoundCertificate lower_bound_certificate(unsigned n, const mpz_class& count,
                                         const mpz_class& factor_num,
                                         const mpz_class& factor_den, unsigned d);

// Line-oriented verification report: one line per inequality, prefixed
// PASS / FAIL / EXCEPTION(1,1), operands in decimal. ok ⇔ no FAIL line.
struct Report {
  std::vector<std::string> lines;
  bool ok = true;
};

// T(ℓ+m) ≥ T(ℓ)T(m) for all ordered pairs with ℓ+m ≤ n_max — except
// (1,1), which is reported as the known exception (3 < 4).
Report verify_supermultiplicativity(unsigned n_max);

// 3·T(ℓ+m) ≥ T(ℓ)T(m) for ℓ+m ≤ n_max, and 3·T(2n) ≥ 2·T(n)² for
// 2n ≤ n_max.
Report verify_proposition_bounds(unsigned n_max);

}  // namespace polyia
