// polyia — fixed polyiamonds: counting, concatenation maps, exact bound
// certificates, dual graphs, SVG figures.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <gmpxx.h>

#include "polyia/animal.hpp"
#include "polyia/bfile.hpp"
#include "polyia/bounds.hpp"
#include "polyia/concat.hpp"
#include "polyia/dual.hpp"
#include "polyia/enumerate.hpp"
#include "polyia/errors.hpp"
#include "polyia/pia_io.hpp"
#include "polyia/reference.hpp"
#include "polyia/svg.hpp"

namespace {

using namespace polyia;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

// ---------------------------------------------------------------- count

int run_count(unsigned n_max, bool classes, const std::string& ref_path) {
  const auto tallies = count_all(n_max);
  for (const ClassTally& t : tallies) {
    std::cout << t.n << '\t' << t.total;
    if (classes)
      std::cout << '\t' << t.head_R << '\t' << t.head_L << '\t' << t.tail_L << '\t' << t.tail_R;
    std::cout << '\n';
  }
  if (ref_path.empty()) return 0;

  const auto ref = read_bfile(ref_path);
  bool ok = true;
  for (const ClassTally& t : tallies) {
    auto it = ref.find(t.n);
    if (it == ref.end()) {
      std::cout << "MISMATCH n=" << t.n << " computed=" << t.total << " reference=missing\n";
      ok = false;
    } else if (it->second != t.total) {
      std::cout << "MISMATCH n=" << t.n << " computed=" << t.total << " reference=" << it->second
                << '\n';
      ok = false;
    }
  }
  if (ok) std::cout << "ref-check: all n=1.." << n_max << " match\n";
  return ok ? 0 : 1;
}

// ------------------------------------------------------- concat / decode

int run_concat(const std::string& a_path, const std::string& b_path,
               const std::string& out_path) {
  const Polyiamond a = read_pia_file(a_path);
  const Polyiamond b = read_pia_file(b_path);
  const ConcatResult r = concat_injective(a, b);
  if (out_path.empty())
    std::cout << to_pia(r.animal);
  else
    write_pia_file(out_path, r.animal);
  std::cout << "case=" << static_cast<int>(r.case_tag) << " n=" << r.animal.size() << '\n';
  return 0;
}

int run_decode(const std::string& c_path, unsigned ell, const std::string& out_a,
               const std::string& out_b) {
  const Polyiamond c = read_pia_file(c_path);
  const auto [a, b] = decode(c, ell);
  if (out_a.empty())
    std::cout << to_pia(a);
  else
    write_pia_file(out_a, a);
  if (out_b.empty())
    std::cout << to_pia(b);
  else
    write_pia_file(out_b, b);
  if (!out_a.empty() && !out_b.empty())
    std::cout << "case=" << static_cast<int>(classify_case(c, ell)) << " l=" << ell
              << " m=" << (c.size() - ell) << '\n';
  return 0;
}

// ---------------------------------------------------------------- bound

mpz_class parse_mpz(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ArgumentError(std::string(what) + ": expected an unsigned decimal number");
  return mpz_class(text, 10);
}

int run_bound(unsigned n, const std::string& count_text, bool builtin75,
              const std::string& factor_text, unsigned digits) {
  if (builtin75 == !count_text.empty())
    throw ArgumentError("bound: give exactly one of --count and --builtin-75");
  const mpz_class count = builtin75 ? t75() : parse_mpz(count_text, "--count");

  mpz_class num, den;
  if (const auto slash = factor_text.find('/'); slash == std::string::npos) {
    num = parse_mpz(factor_text, "--factor");
    den = 1;
  } else {
    num = parse_mpz(factor_text.substr(0, slash), "--factor numerator");
    den = parse_mpz(factor_text.substr(slash + 1), "--factor denominator");
  }

  const BoundCertificate cert = lower_bound_certificate(n, count, num, den, digits);
  std::cout << "bound=" << cert.r_digits << '\n'
            << "claim: " << cert.r_digits << "^" << n << " < (" << num << "/" << den << ") * "
            << count << '\n'
            << "lhs=" << cert.lhs_digits << '\n'
            << "rhs=" << cert.rhs_digits << '\n';
  return 0;
}

// ---------------------------------------------------------------- render

int run_render(const std::string& in_path, const std::string& out_path, bool dual) {
  const Polyiamond p = read_pia_file(in_path);
  write_text_file(out_path, render_svg(p, RenderOptions{dual}));
  return 0;
}

// ---------------------------------------------------------------- verify

bool line(bool pass, const std::string& text) {
  std::cout << (pass ? "PASS " : "FAIL ") << text << '\n';
  return pass;
}

bool suite_table(unsigned n_max, const std::string& ref_path) {
  // Built-in expectations stop at 14; a b-file can carry the check further.
  std::map<unsigned, mpz_class> ref;
  if (!ref_path.empty()) {
    ref = read_bfile(ref_path);
  } else {
    if (n_max > kKnownCounts.size())
      throw ArgumentError("table suite: built-in reference values stop at n=" +
                          std::to_string(kKnownCounts.size()) + "; pass --ref");
    for (unsigned n = 1; n <= n_max; ++n)
      ref.emplace(n, mpz_class(static_cast<unsigned long>(kKnownCounts[n - 1])));
  }
  const auto tallies = count_all(n_max);
  bool ok = true;
  for (const ClassTally& t : tallies) {
    const auto it = ref.find(t.n);
    const std::string stmt = "T(" + std::to_string(t.n) + ") = " + t.total.get_str();
    if (it == ref.end())
      ok &= line(false, stmt + " missing from reference");
    else
      ok &= line(t.total == it->second, stmt + " expected " + it->second.get_str());
  }
  return ok;
}

bool suite_identities(unsigned n_max) {
  const auto tallies = count_all(n_max);
  bool ok = true;
  for (unsigned n = 1; n <= n_max; ++n) {
    const ClassTally& t = tallies[n - 1];
    const std::string tag = " n=" + std::to_string(n);
    ok &= line(t.head_R + t.head_L == t.total, "head split sums to total" + tag);
    ok &= line(t.head_R == t.tail_L, "head_R = tail_L" + tag);
    ok &= line(t.head_L == t.tail_R, "head_L = tail_R" + tag);
    if (n >= 2)
      ok &= line(t.head_L == tallies[n - 2].head_R,
                 "head_L(n) = head_R(n-1)" + tag);
  }

  // Structural bijections run two sizes lower: add_L_on_top leaves the
  // enumerated range otherwise.
  const unsigned m_max = n_max >= 3 ? n_max - 2 : 1;
  for (unsigned n = 1; n <= m_max; ++n) {
    bool involution = true, strip_add = true, add_strip = true, grow_distinct = true;
    std::vector<Polyiamond> grown;
    for (const Polyiamond& p : enumerate_all(n)) {
      involution &= reflect(reflect(p)) == p;
      if (n >= 2 && classify(p).head == Orientation::L)
        strip_add &= add_L_on_top(strip_largest_L(p)) == p;
      if (classify(p).head == Orientation::R)
        add_strip &= strip_largest_L(add_L_on_top(p)) == p;
      grown.push_back(grow_below_smallest(p));
    }
    std::sort(grown.begin(), grown.end());
    grow_distinct = std::adjacent_find(grown.begin(), grown.end()) == grown.end();
    const std::string tag = " n=" + std::to_string(n) + " animals=" + std::to_string(grown.size());
    ok &= line(involution, "reflect is an involution" + tag);
    ok &= line(strip_add, "add_L_on_top(strip_largest_L) = id on head-L" + tag);
    ok &= line(add_strip, "strip_largest_L(add_L_on_top) = id on head-R" + tag);
    ok &= line(grow_distinct, "grow_below_smallest images distinct" + tag);
  }
  return ok;
}

bool suite_injection(unsigned n_max) {
  bool ok = true;
  std::vector<std::vector<Polyiamond>> pool(n_max + 1);
  for (unsigned s = 1; s + 2 <= n_max + 1 && s <= n_max; ++s) pool[s] = enumerate_all(s);

  for (unsigned l = 1; l + 2 <= n_max; ++l) {
    for (unsigned m = 2; l + m <= n_max; ++m) {
      bool tags = true, rows = true, roundtrip = true;
      std::vector<Polyiamond> images;
      images.reserve(pool[l].size() * pool[m].size());
      for (const Polyiamond& a : pool[l]) {
        for (const Polyiamond& b : pool[m]) {
          ConcatResult r = concat_injective(a, b);
          tags &= r.ell == l && r.animal.size() == l + m &&
                  classify_case(r.animal, l) == r.case_tag;
          const bool prefix = prefix_columns_property(r.animal, l);
          const bool tot = two_on_top(r.animal, l);
          const bool nth_r = orientation(r.animal.nth_cell(l)) == Orientation::R;
          switch (r.case_tag) {
            case ConcatCase::Case0: rows &= prefix && !tot; break;
            case ConcatCase::Case1: rows &= !prefix && nth_r; break;
            case ConcatCase::Case2: rows &= !prefix && !nth_r && tot; break;
            case ConcatCase::Case3: rows &= !prefix && !nth_r && !tot; break;
          }
          const auto [da, db] = decode(r.animal, l);
          roundtrip &= da == a && db == b;
          images.push_back(std::move(r.animal));
        }
      }
      std::sort(images.begin(), images.end());
      const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
      const std::string tag = " (l=" + std::to_string(l) + ",m=" + std::to_string(m) +
                              ") pairs=" + std::to_string(images.size());
      ok &= line(distinct, "images pairwise distinct" + tag);
      ok &= line(tags, "case tags match classify_case" + tag);
      ok &= line(rows, "table predicate rows hold" + tag);
      ok &= line(roundtrip, "decode returns the source pair" + tag);
    }
  }
  return ok;
}

bool suite_bounds(unsigned n_max) {
  bool ok = true;
  ok &= line(check_claim(28423, 4, 75, t75(), 2, 3),
             "certificate 2.8423^75 < (2/3)*T(75), exact integers");
  ok &= line(check_claim(28578, 4, 75, t75(), 1, 1),
             "certificate 2.8578^75 < T(75), exact integers");
  for (const Report& rep : {verify_supermultiplicativity(n_max), verify_proposition_bounds(n_max)}) {
    for (const std::string& l : rep.lines) std::cout << l << '\n';
    ok &= rep.ok;
  }
  return ok;
}

bool suite_dual(unsigned n_max) {
  bool ok = true;
  const Polyiamond canon_r = from_cells({Cell{0, 0}});
  const Polyiamond canon_l = from_cells({Cell{0, 1}});
  ok &= line(from_dual(to_dual(canon_r)) == canon_r && from_dual(to_dual(canon_l)) == canon_r,
             "n=1: both one-cell animals share one dual class");
  for (unsigned n = 2; n <= n_max; ++n) {
    bool round = true;
    std::uint64_t seen = 0;
    enumerate_stream(n, [&](const Polyiamond& p) {
      round &= from_dual(to_dual(p)) == p;
      ++seen;
    });
    ok &= line(round, "dual roundtrip n=" + std::to_string(n) + " animals=" +
                          std::to_string(seen));
  }

  // The three simple concatenations stay distinguishable (small operands).
  for (unsigned a = 1; a <= 5; ++a) {
    for (unsigned b = 1; b <= 5; ++b) {
      std::vector<Polyiamond> rl, side, stack;
      for (const Polyiamond& pa : enumerate_all(a)) {
        for (const Polyiamond& pb : enumerate_all(b)) {
          const auto ca = classify(pa);
          const auto cb = classify(pb);
          if (ca.head == Orientation::R && cb.tail == Orientation::L)
            rl.push_back(simple_concat_RL(pa, pb));
          if (ca.head == Orientation::L && cb.tail == Orientation::R) {
            side.push_back(simple_concat_LR_side(pa, pb));
            stack.push_back(simple_concat_LR_stack(pa, pb));
          }
        }
      }
      for (auto* v : {&rl, &side, &stack}) std::sort(v->begin(), v->end());
      auto disjoint = [](const std::vector<Polyiamond>& u, const std::vector<Polyiamond>& v) {
        std::vector<Polyiamond> both;
        std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(both));
        return both.empty();
      };
      ok &= line(disjoint(rl, side) && disjoint(rl, stack) && disjoint(side, stack),
                 "simple-concat families pairwise disjoint (a=" + std::to_string(a) +
                     ",b=" + std::to_string(b) + ") rl=" + std::to_string(rl.size()) +
                     " side=" + std::to_string(side.size()) +
                     " stack=" + std::to_string(stack.size()));
    }
  }
  return ok;
}

int run_verify(const std::string& suite, std::optional<unsigned> n_opt,
               const std::string& ref_path) {
  auto pick = [&](unsigned dflt) { return n_opt.value_or(dflt); };
  bool ok = true;
  auto run = [&](const std::string& name, bool pass) {
    std::cout << "== suite " << name << (pass ? ": OK" : ": FAILED") << '\n';
    ok &= pass;
  };
  if (suite == "table" || suite == "all") run("table", suite_table(pick(14), ref_path));
  if (suite == "identities" || suite == "all") run("identities", suite_identities(pick(12)));
  if (suite == "injection" || suite == "all") run("injection", suite_injection(pick(10)));
  if (suite == "bounds" || suite == "all") run("bounds", suite_bounds(pick(14)));
  if (suite == "dual" || suite == "all") run("dual", suite_dual(pick(8)));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed polyiamonds: enumeration, concatenation maps, exact growth bounds"};
  app.require_subcommand(1);

  // count
  auto* count_cmd = app.add_subcommand("count", "enumerate and print T(n) for n = 1..N");
  unsigned count_n = 0;
  bool count_classes = false;
  std::string count_ref;
  count_cmd->add_option("--max-n", count_n, "largest size to count")
      ->required()
      ->check(CLI::PositiveNumber);
  count_cmd->add_flag("--classes", count_classes,
                      "also print head_R, head_L, tail_L, tail_R columns");
  count_cmd->add_option("--ref", count_ref, "cross-check totals against an OEIS b-file");

  // concat
  auto* concat_cmd = app.add_subcommand("concat", "injective concatenation of two animals");
  std::string concat_a, concat_b, concat_out;
  concat_cmd->add_option("--a", concat_a, "first operand (PIA v1 file)")->required();
  concat_cmd->add_option("--b", concat_b, "second operand (PIA v1 file), at least 2 cells")
      ->required();
  concat_cmd->add_option("--out", concat_out, "write the result here instead of stdout");

  // decode
  auto* decode_cmd = app.add_subcommand("decode", "invert the concatenation on its image");
  std::string decode_c, decode_a, decode_b;
  unsigned decode_l = 0;
  decode_cmd->add_option("--c", decode_c, "concatenated animal (PIA v1 file)")->required();
  decode_cmd->add_option("--l", decode_l, "size of the first operand")
      ->required()
      ->check(CLI::PositiveNumber);
  decode_cmd->add_option("--out-a", decode_a, "write the first operand here");
  decode_cmd->add_option("--out-b", decode_b, "write the second operand here");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
  std::string verify_suite;
  std::optional<unsigned> verify_n;
  verify_cmd
      ->add_option("--suite", verify_suite,
                   "injection | identities | bounds | table | dual | all")
      ->required()
      ->check(CLI::IsMember({"injection", "identities", "bounds", "table", "dual", "all"}));
  verify_cmd->add_option(
      "--max-n", verify_n,
      "size ceiling (defaults: injection 10, identities 12, bounds 14, table 14, dual 8; "
      "identities run structural roundtrips two sizes lower)");
  std::string verify_ref;
  verify_cmd->add_option("--ref", verify_ref,
                         "table suite: check against this b-file instead of the built-ins");

  // bound
  auto* bound_cmd = app.add_subcommand("bound", "largest certified d-digit growth bound");
  unsigned bound_n = 0, bound_digits = 4;
  std::string bound_count, bound_factor = "1";
  bool bound_builtin = false;
  bound_cmd->add_option("--n", bound_n, "exponent (animal size)")
      ->required()
      ->check(CLI::PositiveNumber);
  bound_cmd->add_option("--count", bound_count, "exact count T(n), decimal");
  bound_cmd->add_flag("--builtin-75", bound_builtin, "use the embedded 35-digit T(75)");
  bound_cmd->add_option("--factor", bound_factor, "rational factor NUM/DEN (default 1)");
  bound_cmd->add_option("--digits", bound_digits, "decimal places of the bound");

  // render
  auto* render_cmd = app.add_subcommand("render", "write an SVG figure of an animal");
  std::string render_in, render_out;
  bool render_dual = false;
  render_cmd->add_option("--file", render_in, "animal to draw (PIA v1 file)")->required();
  render_cmd->add_option("--out", render_out, "SVG output path")->required();
  render_cmd->add_flag("--dual", render_dual, "overlay the dual graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_n, count_classes, count_ref);
    if (concat_cmd->parsed()) return run_concat(concat_a, concat_b, concat_out);
    if (decode_cmd->parsed()) return run_decode(decode_c, decode_l, decode_a, decode_b);
    if (verify_cmd->parsed()) return run_verify(verify_suite, verify_n, verify_ref);
    if (bound_cmd->parsed())
      return run_bound(bound_n, bound_count, bound_builtin, bound_factor, bound_digits);
    if (render_cmd->parsed()) return run_render(render_in, render_out, render_dual);
  } catch (const NotInImageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
