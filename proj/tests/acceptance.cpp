// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reptqft/affc.hpp"
#include "reptqft/error.hpp"
#include "reptqft/finite_group.hpp"
#include "reptqft/tqft.hpp"
#include "support/test_support.hpp"

using namespace reptqft;
using testing::suite_groups;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const LaurentPoly q = LaurentPoly::q();

std::string label(std::size_t c) { return "c" + std::to_string(c); }

struct GroupCase {
  std::string name;
  FiniteGroup group;
  std::vector<ConjugationClosedSet> classes;
  TqftDatum full;
  TqftDatum reduced;
};

std::vector<GroupCase> group_cases() {
  std::vector<GroupCase> out;
  for (auto& [name, g] : suite_groups()) {
    std::vector<ConjugationClosedSet> classes;
    PunctureSubsets punctures;
    for (std::size_t c = 0; c < g.classes().count(); ++c) {
      classes.push_back(ConjugationClosedSet::conjugacy_class(g, c));
      punctures.emplace(label(c), classes.back());
    }
    TqftDatum full = to_tqft_datum(g, punctures);
    TqftDatum reduced = class_reduce(full, g);
    out.push_back({name, g, std::move(classes), std::move(full), std::move(reduced)});
  }
  return out;
}

/// Every (g, s) with g <= 2, s <= 2 and each puncture ranging over all classes.
std::vector<SurfaceSpec> specs(std::size_t class_count) {
  std::vector<SurfaceSpec> out;
  for (unsigned g = 0; g <= 2; ++g) {
    out.push_back({g, {}});
    for (std::size_t a = 0; a < class_count; ++a) {
      out.push_back({g, {label(a)}});
      for (std::size_t b = 0; b < class_count; ++b) out.push_back({g, {label(a), label(b)}});
    }
  }
  return out;
}

std::string describe(const std::string& group, const SurfaceSpec& s) {
  std::ostringstream os;
  os << group << " g=" << s.genus << " punctures=" << to_string(assemble_word(s));
  return os.str();
}

Outcome affc_closed_form() {
  Outcome o;
  const auto start = Clock::now();
  const auto d = affc::affc_datum();
  for (unsigned g = 1; g <= 6; ++g) {
    const auto e = epoly_rep_variety(d, {g, {}});
    if (e != affc::affc_closed_form(g)) o.fail("g=" + std::to_string(g) + " got " + e.to_string());
  }
  const double t = seconds_since(start);
  if (t >= 1.0) o.fail("runtime " + std::to_string(t) + " s");
  if (o.pass) o.detail = "g=1..6 exact, " + std::to_string(t) + " s";
  return o;
}

Outcome affc_recursions() {
  Outcome o;
  const auto d = affc::affc_datum();
  LaurentPoly prev = pow(q, 3) - pow(q, 2);
  for (unsigned g = 1; g <= 6; ++g) {
    const auto e = epoly_rep_variety(d, {g, {}});
    if (e != affc::xk_epoly(2 * g)) o.fail("X_k mismatch at g=" + std::to_string(g));
    if (g == 1) {
      if (e != prev) o.fail("base case g=1 got " + e.to_string());
    } else if (e != pow(q, 2 * g) * pow(q - 1, 2 * g - 2) * (q - 2) + pow(q, 2) * prev) {
      o.fail("genus recursion mismatch at g=" + std::to_string(g));
    }
    prev = e;
  }
  if (o.pass) o.detail = "X_{2g} and genus recursion, g=1..6";
  return o;
}

Outcome finite_oracle(const std::vector<GroupCase>& cases) {
  Outcome o;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  const auto start = Clock::now();
  for (const auto& c : cases) {
    for (const auto& s : specs(c.classes.size())) {
      std::vector<ConjugationClosedSet> lambdas;
      for (const auto& l : s.punctures) lambdas.push_back(c.classes[std::stoul(l.substr(1))]);
      std::uint64_t expected = 0;
      try {
        expected = brute_force_count(c.group, s.genus, lambdas);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        ++skipped;
        continue;
      }
      const auto got = epoly_rep_variety(c.full, s);
      ++checked;
      if (got != LaurentPoly(mpz_class(std::to_string(expected)))) {
        o.fail(describe(c.name, s) + ": engine " + got.to_string() + ", oracle " + std::to_string(expected));
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(checked) + " specs exact, " + std::to_string(skipped) + " over budget, " +
               std::to_string(seconds_since(start)) + " s";
  }
  if (skipped > 0) o.fail(std::to_string(skipped) + " specs exceeded the oracle budget");
  return o;
}

Outcome sphere(const std::vector<GroupCase>& cases) {
  Outcome o;
  const SurfaceSpec sphere{0, {}};
  auto check = [&](const std::string& what, const TqftDatum& d) {
    const auto e = epoly_rep_variety(d, sphere);
    if (e != LaurentPoly(1)) o.fail(what + " gave " + e.to_string());
  };
  const auto aff = affc::affc_datum();
  check("affc", aff);
  check("custom (affc round trip)", parse_datum(to_json(aff).dump()));
  check("custom (file)", load_datum(std::string(TEST_DATA_DIR) + "/affc_datum.json"));
  for (const auto& c : cases) {
    check(c.name + " full", c.full);
    check(c.name + " reduced", c.reduced);
    check(c.name + " custom", parse_datum(to_json(c.full).dump()));
  }
  if (o.pass) o.detail = "affc, custom, finite full and reduced";
  return o;
}

Outcome p_insertion(const std::vector<GroupCase>& cases) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& c : cases) {
    for (const auto& s : specs(c.classes.size())) {
      const auto word = assemble_word(s);
      const auto base = evaluate_normalized(c.full, word);
      for (std::size_t k = 1; k <= 2; ++k) {
        ++checked;
        if (evaluate_normalized(c.full, insert_identity_tubes(word, k)) != base) {
          o.fail(describe(c.name, s) + " with " + std::to_string(k) + " P tubes");
        }
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " insertions";
  return o;
}

Outcome class_reduction(const std::vector<GroupCase>& cases) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& c : cases) {
    for (const auto& s : specs(c.classes.size())) {
      ++checked;
      if (epoly_rep_variety(c.reduced, s) != epoly_rep_variety(c.full, s)) o.fail(describe(c.name, s));
    }
  }

  const GroupCase& a4 = cases.back();
  auto genus_run = [](const TqftDatum& d) {
    constexpr int kRepeats = 20;
    const auto start = Clock::now();
    for (int r = 0; r < kRepeats; ++r)
      for (unsigned g = 0; g <= 6; ++g) (void)epoly_rep_variety(d, {g, {}});
    return seconds_since(start);
  };
  const double full = genus_run(a4.full);
  const double reduced = genus_run(a4.reduced);
  const double speedup = full / reduced;
  if (speedup < 5.0) o.fail("A4 speedup " + std::to_string(speedup) + "x");
  if (o.pass) o.detail = std::to_string(checked) + " specs equal, A4 speedup " + std::to_string(speedup) + "x";
  return o;
}

std::vector<std::uint64_t> column_sums(const CountMatrix& m) {
  std::vector<std::uint64_t> sums(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) sums[c] += m(r, c);
  return sums;
}

Outcome matrix_laws(const std::vector<GroupCase>& cases) {
  Outcome o;
  for (const auto& c : cases) {
    const auto& g = c.group;
    const std::uint64_t n = g.order();
    auto check = [&](const std::string& what, const CountMatrix& m, std::uint64_t column_sum) {
      for (auto s : column_sums(m))
        if (s != column_sum) o.fail(c.name + " " + what + " column sum " + std::to_string(s));
      for (Element x = 0; x < n; ++x)
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b)
            if (m(a, b) != m(g.conjugate(x, a), g.conjugate(x, b))) {
              o.fail(c.name + " " + what + " not equivariant");
              return;
            }
    };
    check("L", genus_matrix(g), n * n * n);
    check("P", tube_matrix_P(g), n);
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
      check("L_" + label(k), puncture_matrix(g, c.classes[k]), n * c.classes[k].size());
    }
  }
  if (o.pass) o.detail = "L, P and L_lambda on all suite groups";
  return o;
}

Outcome ring_properties() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  constexpr int kChecks = 10'000;
  for (int i = 0; i < kChecks; ++i) {
    const auto a = testing::random_poly(rng);
    const auto b = testing::random_poly(rng);
    const auto c = testing::random_poly(rng);
    const auto d = testing::random_nonzero_poly(rng);
    const bool ok = (a + b) + c == a + (b + c) && a + b == b + a && a + LaurentPoly() == a && (a - a).is_zero() &&
                    (a * b) * c == a * (b * c) && a * b == b * a && a * LaurentPoly(1) == a &&
                    a * (b + c) == a * b + a * c && exact_div(a * d, d) == a;
    if (!ok) o.fail("a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() + " d=" + d.to_string());
  }
  if (o.pass) o.detail = std::to_string(kChecks) + " random checks";
  return o;
}

}  // namespace

int main() {
  const std::vector<GroupCase> cases = group_cases();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Aff(C) closed form", affc_closed_form},
      {"Aff(C) recursion oracles", affc_recursions},
      {"finite-group oracle equivalence", [&] { return finite_oracle(cases); }},
      {"sphere normalization", [&] { return sphere(cases); }},
      {"P-insertion invariance", [&] { return p_insertion(cases); }},
      {"class reduction soundness", [&] { return class_reduction(cases); }},
      {"structural matrix laws", [&] { return matrix_laws(cases); }},
      {"polynomial ring properties", ring_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %-34s %s  %s\n", i + 1, criteria[i].first.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
