#include "doctest.h"

#include <algorithm>
#include <map>
#include <string>

#include "reptqft/error.hpp"
#include "reptqft/finite_group.hpp"
#include "support/test_support.hpp"

using namespace reptqft;
using reptqft::testing::suite_groups;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::InvalidArgument;
}

const std::string kData = TEST_DATA_DIR;

FiniteGroup s3() { return suite_groups()[4].group; }

std::vector<ConjugationClosedSet> all_classes(const FiniteGroup& g) {
  std::vector<ConjugationClosedSet> out;
  for (std::size_t c = 0; c < g.classes().count(); ++c) out.push_back(ConjugationClosedSet::conjugacy_class(g, c));
  return out;
}

std::vector<std::uint64_t> column_sums(const CountMatrix& m) {
  std::vector<std::uint64_t> sums(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) sums[c] += m(r, c);
  return sums;
}

void check_equivariant(const FiniteGroup& g, const CountMatrix& m) {
  const auto n = static_cast<Element>(g.order());
  for (Element x = 0; x < n; ++x)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) REQUIRE(m(a, b) == m(g.conjugate(x, a), g.conjugate(x, b)));
}

}  // namespace

TEST_CASE("from_cayley_table") {
  const auto z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.is_abelian());

  CHECK(kind_of([] { FiniteGroup::from_cayley_table({{1, 0}, {0, 0}}); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { FiniteGroup::from_cayley_table({{0, 1}, {1}}); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { FiniteGroup::from_cayley_table({{0, 2}, {1, 0}}); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { FiniteGroup::from_cayley_table({}); }) == ErrorKind::NotAGroup);

  // A loop of order 5: identity and inverses exist, associativity fails.
  try {
    FiniteGroup::from_cayley_table(
        {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
    FAIL("expected NotAGroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroup);
    CHECK(std::string(e.what()).find("(1, 1, 2)") != std::string::npos);
  }

  const auto table = load_group(kData + "/s3_table.json");
  CHECK(table.order() == 6);
  CHECK(table.classes().count() == 3);
  CHECK(!table.is_abelian());
}

TEST_CASE("identity is relabeled to 0") {
  // Z3 with identity written as label 2.
  const auto g = FiniteGroup::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(g.input_label(2) == 0);
  CHECK(g.input_label(0) == 2);
  CHECK(g.input_label(1) == 1);
  for (Element x = 0; x < 3; ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, g.inverse(x)) == 0);
  }
  CHECK(kind_of([&] { (void)g.input_label(3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("from_permutation_generators") {
  const auto g = FiniteGroup::from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(g.order() == 6);
  CHECK(FiniteGroup::from_permutation_generators(4, {{0, 1, 2, 3}}).order() == 1);
  CHECK(FiniteGroup::from_permutation_generators(4, {}).order() == 1);
  const auto z2 = FiniteGroup::from_permutation_generators(2, {{1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.mul(1, 1) == 0);

  CHECK(kind_of([] { FiniteGroup::from_permutation_generators(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}, 10); }) ==
        ErrorKind::GroupTooLarge);
  CHECK(FiniteGroup::from_permutation_generators(4, {{1, 2, 3, 0}, {1, 0, 2, 3}}).order() == 24);
  CHECK(kind_of([] { FiniteGroup::from_permutation_generators(3, {{0, 0, 1}}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { FiniteGroup::from_permutation_generators(3, {{0, 1}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("group files") {
  CHECK(load_group(kData + "/z2.json").order() == 2);
  CHECK(load_group(kData + "/q8.json").order() == 8);
  CHECK(kind_of([] { load_group(kData + "/no_identity.json"); }) == ErrorKind::NotAGroup);
  CHECK(kind_of([] { load_group(kData + "/missing.json"); }) == ErrorKind::Io);
  CHECK(kind_of([] { parse_group(R"({"degree": 3})"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { parse_group(R"({"table": "x"})"); }) == ErrorKind::Parse);
}

TEST_CASE("conjugacy classes") {
  const std::map<std::string, std::vector<std::size_t>> expected_sizes{
      {"Z2", {1, 1}},          {"Z3", {1, 1, 1}},       {"Z4", {1, 1, 1, 1}},    {"Z2xZ2", {1, 1, 1, 1}},
      {"S3", {1, 2, 3}},       {"D4", {1, 1, 2, 2, 2}}, {"Q8", {1, 1, 2, 2, 2}}, {"A4", {1, 3, 4, 4}},
  };
  for (const auto& [name, g] : suite_groups()) {
    CAPTURE(name);
    const auto& cls = g.classes();
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (std::size_t c = 0; c < cls.count(); ++c) {
      sizes.push_back(cls.members[c].size());
      total += cls.members[c].size();
      CHECK(cls.members[c].size() * cls.centralizer_order[c] == g.order());
      for (auto x : cls.members[c]) CHECK(cls.class_of[x] == c);
    }
    CHECK(total == g.order());
    CHECK(cls.members[0] == std::vector<Element>{0});
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == expected_sizes.at(name));
  }
  CHECK(load_group(kData + "/trivial.json").classes().count() == 1);
}

TEST_CASE("conjugation-closed subsets") {
  const auto g = s3();
  CHECK(kind_of([&] { ConjugationClosedSet::validated(g, {1}); }) == ErrorKind::NotConjugationClosed);
  CHECK(kind_of([&] { ConjugationClosedSet::validated(g, {}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { ConjugationClosedSet::validated(g, {17}); }) == ErrorKind::InvalidArgument);
  const auto closed = ConjugationClosedSet::closure(g, {1});
  CHECK(closed.size() == g.classes().members[g.classes().class_of[1]].size());
  CHECK_NOTHROW(ConjugationClosedSet::validated(g, closed.elements()));
  CHECK(ConjugationClosedSet::closure(g, {0, 1, 1}).size() == closed.size() + 1);
}

TEST_CASE("genus matrix") {
  const auto z2 = suite_groups()[0].group;
  const auto m = genus_matrix(z2);
  CHECK(m(0, 0) == 8);
  CHECK(m(0, 1) == 0);
  CHECK(m(1, 0) == 0);
  CHECK(m(1, 1) == 8);
  CHECK(commutator_distribution(z2) == std::vector<std::uint64_t>{4, 0});

  const auto g = s3();
  CHECK(commutator_distribution(g)[0] == 18);
  CHECK(genus_matrix(g)(0, 0) == 108);

  for (const auto& [name, grp] : suite_groups()) {
    CAPTURE(name);
    const auto fast = genus_matrix(grp);
    const auto naive = testing::naive_genus_matrix(grp);
    const auto n = grp.order();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) REQUIRE(fast(a, b) == naive(a, b));
    for (auto s : column_sums(fast)) CHECK(s == n * n * n);
    check_equivariant(grp, fast);
  }
}

TEST_CASE("puncture and identity tube matrices") {
  for (const auto& [name, g] : suite_groups()) {
    CAPTURE(name);
    const auto n = g.order();
    const auto p = tube_matrix_P(g);
    for (std::size_t x = 0; x < n; ++x) CHECK(p(x, x) >= 1);
    for (auto s : column_sums(p)) CHECK(s == n);
    check_equivariant(g, p);
    if (g.is_abelian()) {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) CHECK(p(a, b) == (a == b ? n : 0));
    }

    // lambda = {1} gives the identity tube.
    const auto m1 = puncture_matrix(g, ConjugationClosedSet::conjugacy_class(g, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) CHECK(m1(a, b) == p(a, b));

    for (const auto& lambda : all_classes(g)) {
      const auto m = puncture_matrix(g, lambda);
      for (auto s : column_sums(m)) CHECK(s == n * lambda.size());
      check_equivariant(g, m);
    }
  }

  const auto g = s3();
  const auto transpositions = ConjugationClosedSet::closure(g, {1});
  REQUIRE(transpositions.size() == 3);
  CHECK(column_sums(puncture_matrix(g, transpositions))[0] == 18);
}

TEST_CASE("finite-group data") {
  const auto z2 = suite_groups()[0].group;
  CHECK(epoly_rep_variety(to_tqft_datum(z2), {1, {}}) == LaurentPoly(4));

  const auto g = s3();
  PunctureSubsets punctures;
  punctures.emplace("t", ConjugationClosedSet::closure(g, {1}));
  const auto d = to_tqft_datum(g, punctures);
  CHECK(d.rank() == 6);
  CHECK(d.e_G() == LaurentPoly(6));
  CHECK(epoly_rep_variety(d, {1, {}}) == LaurentPoly(18));
  CHECK(epoly_rep_variety(d, {0, {"t"}}) == LaurentPoly(0));
  CHECK(epoly_rep_variety(d, {0, {}}) == LaurentPoly(1));
  CHECK(epoly_rep_variety(d, {2, {}}) == LaurentPoly(486));
}

TEST_CASE("class reduction") {
  for (const auto& [name, g] : suite_groups()) {
    CAPTURE(name);
    PunctureSubsets punctures;
    for (std::size_t c = 0; c < g.classes().count(); ++c) {
      punctures.emplace("c" + std::to_string(c), ConjugationClosedSet::conjugacy_class(g, c));
    }
    const auto full = to_tqft_datum(g, punctures);
    const auto reduced = class_reduce(full, g);
    CHECK(reduced.rank() == g.classes().count());
    if (g.is_abelian()) CHECK(reduced.rank() == g.order());
    for (unsigned genus = 0; genus <= 2; ++genus) {
      CHECK(epoly_rep_variety(reduced, {genus, {}}) == epoly_rep_variety(full, {genus, {}}));
      for (const auto& [label, lambda] : punctures) {
        CHECK(epoly_rep_variety(reduced, {genus, {label}}) == epoly_rep_variety(full, {genus, {label}}));
      }
    }
  }
  CHECK(class_reduce(to_tqft_datum(s3()), s3()).rank() == 3);
  const auto z2 = suite_groups()[0].group;
  CHECK(kind_of([&] { class_reduce(to_tqft_datum(s3()), z2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("brute-force oracle") {
  const auto groups = suite_groups();
  const auto& z2 = groups[0].group;
  const auto g = s3();
  CHECK(brute_force_count(g, 0, {}) == 1);
  CHECK(brute_force_count(g, 1, {}) == 18);
  CHECK(brute_force_count(z2, 2, {}) == 16);
  // Frozen from tests/oracle/finite_counts.py.
  CHECK(brute_force_count(g, 2, {}) == 486);
  CHECK(brute_force_count(groups[5].group, 2, {}) == 2176);
  CHECK(brute_force_count(groups[6].group, 2, {}) == 2176);
  CHECK(brute_force_count(groups[7].group, 2, {}) == 5376);
  const auto& a4 = groups[7].group;
  std::size_t size_three = 0;
  for (std::size_t c = 0; c < a4.classes().count(); ++c)
    if (a4.classes().members[c].size() == 3) size_three = c;
  const auto double_transpositions = ConjugationClosedSet::conjugacy_class(a4, size_three);
  REQUIRE(double_transpositions.size() == 3);
  CHECK(brute_force_count(a4, 1, {double_transpositions}) == 96);
  CHECK(brute_force_count(g, 0, {ConjugationClosedSet::closure(g, {1})}) == 0);

  CHECK(kind_of([&] { brute_force_count(a4, 2, {}, 1000); }) == ErrorKind::BudgetExceeded);
  CHECK(kind_of([&] { brute_force_count(a4, 9, {}); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("engine matches oracle and results are nonnegative integers") {
  for (const auto& [name, g] : suite_groups()) {
    CAPTURE(name);
    const auto classes = all_classes(g);
    PunctureSubsets punctures;
    for (std::size_t c = 0; c < classes.size(); ++c) punctures.emplace("c" + std::to_string(c), classes[c]);
    const auto d = to_tqft_datum(g, punctures);
    for (unsigned genus = 0; genus <= 1; ++genus) {
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto e = epoly_rep_variety(d, {genus, {"c" + std::to_string(c)}});
        CHECK(e.is_constant());
        CHECK(e.constant_term() >= 0);
        CHECK(e == LaurentPoly(static_cast<long>(brute_force_count(g, genus, {classes[c]}))));
      }
    }
  }
}

TEST_CASE("puncture order does not change the closed-surface value") {
  for (const auto& [name, g] : suite_groups()) {
    CAPTURE(name);
    const auto classes = all_classes(g);
    PunctureSubsets punctures;
    for (std::size_t c = 0; c < classes.size(); ++c) punctures.emplace("c" + std::to_string(c), classes[c]);
    const auto d = class_reduce(to_tqft_datum(g, punctures), g);
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        const std::string la = "c" + std::to_string(a);
        const std::string lb = "c" + std::to_string(b);
        CHECK(epoly_rep_variety(d, {1, {la, lb}}) == epoly_rep_variety(d, {1, {lb, la}}));
      }
    }
  }
}
