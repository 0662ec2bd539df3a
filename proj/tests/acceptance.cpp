// Acceptance run: one PASS/FAIL line per criterion, exit 0 only if all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mpbern/cli.hpp"
#include "mpbern/family.hpp"
#include "mpbern/identities.hpp"

using namespace mpbern;

namespace {

Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

struct Outcome {
  bool ok = true;
  std::int64_t cases = 0;
  std::string note;

  void require(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
  void absorb(const IdentityReport& r) {
    cases += r.cases;
    if (!r.passed() && ok) {
      ok = false;
      note = r.id + " (" + std::string(to_string(r.variant)) + "): " + std::to_string(r.failure_count) +
             " failures";
      if (!r.failures.empty()) {
        note += ", first at " + r.failures[0].inputs + ": " + r.failures[0].lhs + " vs " + r.failures[0].rhs;
      }
    }
  }
};

IdentityReport run(const std::string& id, Variant v, const Grid& g) { return run_identity({id, v, g, 42}); }

const std::vector<ParamSet> kParams{ParamSet::classical(), {q(1), q(1), q(1)}, {q(2, 3), q(1, 5), q(3, 7)}};

Outcome classical_reduction() {
  Outcome o;
  Grid g;
  g.n_max = 20;
  o.absorb(run("classical-reduction", Variant::corrected, g));
  const auto v = multi_poly_bernoulli(MultiIndex{1}, ParamSet::classical(), 0, 4);
  o.require(v == std::vector<Rational>{q(1), q(1, 2), q(1, 6), q(0), q(-1, 30)}, "spot values 1, 1/2, 1/6, 0, -1/30");
  return o;
}

Outcome negative_index() {
  Outcome o;
  Grid g;
  g.n_max = 10;
  o.absorb(run("arakawa-kaneko", Variant::corrected, g));
  o.absorb(run("arakawa-kaneko-symmetry", Variant::corrected, g));
  const auto k1 = reduced_multi_poly_bernoulli(MultiIndex{-1}, 0, 2);
  const auto k2 = reduced_multi_poly_bernoulli(MultiIndex{-2}, 0, 2);
  o.require(k1[1] == q(2) && k1[2] == q(4) && k2[2] == q(14), "spot values 2, 4, 14");
  return o;
}

Outcome explicit_formula() {
  Outcome o;
  Grid g;
  g.n_max = 10;
  g.depths = {1, 2, 3};
  g.entries = {-2, -1, 0, 1, 2};
  g.params = kParams;
  g.points = {q(0), q(1), q(-2, 3)};
  o.absorb(run("explicit-formula", Variant::corrected, g));
  return o;
}

Outcome imatomi() {
  Outcome o;
  Grid g;
  g.n_max = 10;
  g.depths = {1, 2, 3};
  g.entries = {-1, 0, 1, 2};
  o.absorb(run("imatomi-explicit", Variant::corrected, g));
  o.absorb(run("imatomi-recurrence", Variant::corrected, g));
  o.require(imatomi_numbers(MultiIndex{0, 0}, 2)[2] == q(3), "spot value B_2^{(0,0)} = 3");
  return o;
}

Outcome hurwitz() {
  Outcome o;
  Grid g;
  g.n_max = 10;
  g.depths = {1, 2, 3};
  g.entries = {-2, -1, 0, 1, 2};
  g.shift_offsets = {q(0), q(1, 2)};
  g.absolute_shifts = {q(5)};
  g.points = {q(0), q(1), q(1, 2)};
  o.absorb(run("hurwitz-whitney-explicit", Variant::corrected, g));
  o.absorb(run("hurwitz-stirling-explicit", Variant::corrected, g));
  o.absorb(run("hurwitz-type-explicit", Variant::corrected, g));
  g.entries = {1, 2};
  o.absorb(run("hurwitz-nonnegative", Variant::corrected, g));
  return o;
}

Outcome symmetrized() {
  Outcome o;
  Grid g;
  g.n_max = 6;
  g.m_max = 6;
  g.depths = {2, 3};
  g.params = {ParamSet::classical()};
  o.absorb(run("double-generating-function", Variant::corrected, g));

  Grid d;
  d.n_max = 8;
  o.absorb(run("duality-corrected", Variant::corrected, d));
  const auto printed = run("duality-as-printed", Variant::as_printed, d);
  Grid small = d;
  small.n_max = 1;
  small.points = {q(0), q(1)};
  const auto witness = run("duality-as-printed", Variant::as_printed, small);
  const bool recorded = std::any_of(witness.failures.begin(), witness.failures.end(),
                                    [](const Failure& f) { return f.inputs.rfind("n=1,m=0,", 0) == 0; });
  o.require(printed.failure_count > 0 && recorded, "as-printed duality counterexample at (n,m) = (1,0)");
  return o;
}

Outcome appell_addition() {
  Outcome o;
  Grid g;
  g.n_max = 8;
  g.depths = {1, 2};
  g.entries = {-1, 0, 1, 2};
  g.params = kParams;
  o.absorb(run("appell-derivative", Variant::corrected, g));
  o.absorb(run("addition-formula", Variant::corrected, g));
  return o;
}

Outcome whitney_kernels() {
  Outcome o;
  Grid g;
  g.n_max = 20;
  g.whitney = {{q(-1), q(0)}, {q(-1), q(3, 2)}, {q(1), q(0)}, {q(2), q(3)}, {q(1, 2), q(-1, 3)}, {q(0), q(1, 2)}};
  o.absorb(run("whitney-constructions", Variant::corrected, g));
  o.absorb(run("whitney-sign-reduction", Variant::corrected, g));
  return o;
}

Outcome determinism() {
  Outcome o;
  auto call = [](std::vector<std::string> args, std::string& out) {
    std::ostringstream os, es;
    const int code = run_cli(args, os, es);
    out = os.str();
    return code;
  };
  std::string a, b, scratch;
  const int ca = call({"verify", "all", "--seed", "42"}, a);
  const int cb = call({"verify", "all", "--seed", "42"}, b);
  o.require(ca == kExitOk && cb == kExitOk, "verify all exits 0");
  o.require(!a.empty() && a == b, "byte-identical JSON");
  o.require(call({"verify", "no-such-id"}, scratch) == kExitUsage, "unknown id exits 2");
  o.require(call({"verify", "duality-as-printed"}, scratch) == kExitOk, "as-printed failures exit 0");
  o.require(call({"table", "--family", "multi", "--k", "1", "--n-max", "3", "--x", "x"}, scratch) == kExitUsage,
            "invalid rational exits 2");
  IdentityReport bad{"synthetic", Variant::corrected, 1, 1, {}};
  o.require(!corrected_variants_pass({bad}), "a corrected failure maps to exit 1");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {1, "classical reduction, n <= 20", classical_reduction},
      {2, "negative-index closed form and symmetry, n, k <= 10", negative_index},
      {3, "explicit formula vs generating function, n <= 10, r <= 3", explicit_formula},
      {4, "denominator-power-one explicit formula and recurrence, n <= 10, r <= 3", imatomi},
      {5, "Hurwitz-Lerch explicit formulas and nonnegativity, n <= 10, r <= 3", hurwitz},
      {6, "symmetrized closed form (n, m <= 6) and duality (n, m <= 8)", symmetrized},
      {7, "derivative and addition formulas, n <= 8, r <= 2", appell_addition},
      {8, "r-Whitney constructions and sign reduction, n <= 20", whitney_kernels},
      {9, "determinism and exit codes", determinism},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " [" << o.cases
              << " cases, " << timing << "]";
    if (!o.ok) std::cout << " -- " << o.note;
    std::cout << '\n';
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
