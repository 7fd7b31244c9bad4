#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torsupp/zeta.hpp"

using namespace torsupp;
using namespace torsupp::testing;

namespace {

std::vector<Int> iv(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

LinForm lf(std::vector<long> coeffs, const char* cst) {
  LinForm f;
  f.coeffs = iv(coeffs);
  f.constant = rat_from_string(cst);
  return f;
}

HyperplaneMulti hyp(std::vector<long> coeffs, long cst, std::vector<long> mults) {
  return {make_form(iv(coeffs), Rat(cst)), iv(mults)};
}

MultiArrangement boolean2() {
  return make_arrangement(2, 2, {hyp({1, 0}, 0, {1, 0}), hyp({0, 1}, 0, {0, 1})});
}

MultiArrangement triangle() {
  return make_arrangement(
      2, 3, {hyp({1, 0}, 0, {1, 0, 0}), hyp({0, 1}, 0, {0, 1, 0}), hyp({1, 1}, 0, {0, 0, 1})});
}

MultiArrangement five_planes() {
  return make_arrangement(3, 5,
                          {hyp({1, 0, 0}, 0, {1, 0, 0, 0, 0}), hyp({0, 1, 0}, 0, {0, 1, 0, 0, 0}),
                           hyp({1, 1, 0}, 0, {0, 0, 1, 0, 0}), hyp({0, 0, 1}, 0, {0, 0, 0, 1, 0}),
                           hyp({1, 1, 1}, 0, {0, 0, 0, 0, 1})});
}

SPoly spoly(int nvars, std::vector<std::pair<std::vector<int>, const char*>> terms) {
  SPoly p = SPoly::zero(nvars);
  for (auto& [e, c] : terms) p.add_term(e, rat_from_string(c));
  return p;
}

}  // namespace

TEST_CASE("zeta_from_resolution fixed examples") {
  // normal crossing of two coordinate lines
  ResolutionData snc;
  snc.r = 2;
  snc.divisors = {{iv({1, 0}), Int(0)}, {iv({0, 1}), Int(0)}};
  snc.strata = {{{}, Int(0), Int(0)}, {{0}, Int(0), Int(0)}, {{1}, Int(0), Int(0)},
                {{0, 1}, Int(1), Int(1)}};
  auto z = zeta_from_resolution(snc, false);
  auto expected = srf_term(2, Rat(1), {lf({1, 0}, "1"), lf({0, 1}, "1")});
  CHECK(z == expected);
  CHECK(zeta_from_resolution(snc, true) == expected);

  // one divisor with chi = -1 and an empty stratum with chi = 2
  ResolutionData one;
  one.r = 1;
  one.divisors = {{iv({1}), Int(0)}};
  one.strata = {{{}, Int(2), std::nullopt}, {{0}, Int(-1), std::nullopt}};
  auto z2 = zeta_from_resolution(one, false);
  // 2 - 1/(s+1) = (2s+1)/(s+1)
  auto expected2 = srf_quotient(1, spoly(1, {{{1}, "2"}, {{0}, "1"}}), {{lf({1}, "1"), 1}});
  CHECK(z2 == expected2);

  ResolutionData empty;
  empty.r = 1;
  CHECK(zeta_from_resolution(empty, false).is_zero());
}

TEST_CASE("zeta_from_resolution is invariant under relabeling") {
  ResolutionData d;
  d.r = 2;
  d.divisors = {{iv({1, 0}), Int(0)}, {iv({0, 1}), Int(0)}, {iv({1, 1}), Int(1)}};
  d.strata = {{{}, Int(1), std::nullopt},
              {{0}, Int(-1), std::nullopt},
              {{1}, Int(2), std::nullopt},
              {{0, 2}, Int(1), std::nullopt},
              {{1, 2}, Int(1), std::nullopt},
              {{2}, Int(-1), std::nullopt}};
  ResolutionData relabeled;
  relabeled.r = 2;
  relabeled.divisors = {d.divisors[2], d.divisors[0], d.divisors[1]};  // 2,0,1
  auto remap = [](std::vector<int> ids) {
    for (int& i : ids) i = (i + 1) % 3;
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  for (auto s : d.strata) relabeled.strata.push_back({remap(s.divisor_ids), s.chi, s.chi0});
  std::swap(relabeled.strata[1], relabeled.strata[4]);  // shuffle stratum order too
  CHECK(zeta_from_resolution(d, false) == zeta_from_resolution(relabeled, false));
}

TEST_CASE("canonical_resolution_2d on the Boolean pair") {
  auto d = canonical_resolution_2d(boolean2());
  CHECK(d.divisors.size() == 2);  // no blowup at a double point
  auto z = zeta_from_resolution(d, false);
  auto expected = srf_term(2, Rat(1), {lf({1, 0}, "1"), lf({0, 1}, "1")});
  CHECK(z == expected);
  CHECK(zeta_from_resolution(d, true) == expected);  // local at 0 identical
}

TEST_CASE("canonical_resolution_2d on the triangle") {
  auto t = triangle();
  auto d = canonical_resolution_2d(t);
  REQUIRE(d.divisors.size() == 4);  // three lines and one exceptional divisor
  CHECK(d.divisors[3].a == iv({1, 1, 1}));
  CHECK(d.divisors[3].k == 1);

  // local zeta at the origin: (2-3)/A + sum over lines 1/(A (s_j+1))
  LinForm A = lf({1, 1, 1}, "2");
  auto expected = srf_term(3, Rat(-1), {A});
  expected = expected + srf_term(3, Rat(1), {A, lf({1, 0, 0}, "1")});
  expected = expected + srf_term(3, Rat(1), {A, lf({0, 1, 0}, "1")});
  expected = expected + srf_term(3, Rat(1), {A, lf({0, 0, 1}, "1")});
  CHECK(zeta_from_resolution(d, true) == expected);
}

TEST_CASE("canonical_resolution_2d for the single product xy") {
  auto xy = make_arrangement(2, 1, {hyp({1, 0}, 0, {1}), hyp({0, 1}, 0, {1})});
  auto z = zeta_from_resolution(canonical_resolution_2d(xy), false);
  auto expected = srf_quotient(1, SPoly::constant(1, Rat(1)), {{lf({1}, "1"), 2}});
  CHECK(z == expected);

  // cross-check: substituting s1 = s2 = v into the (x, y) zeta
  auto zb = zeta_from_resolution(canonical_resolution_2d(boolean2()), false);
  AffineAssignment diag{1, {iv({1}), iv({1})}, {Rat(0), Rat(0)}};
  CHECK(substitute_affine(zb, diag) == expected);
}

TEST_CASE("stratum sanity: chi sums to 1 + number of blowups") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_arrangement(rng, 2, 1 + int(rng() % 3), 6, trial % 2 == 0);
    auto d = canonical_resolution_2d(a);
    Int blowups = Int(int(d.divisors.size()) - int(a.hyperplanes.size()));
    CHECK(stratum_chi_sum(d) == Int(1) + blowups);
  }
}

TEST_CASE("polar_locus fixed examples") {
  // the non-principal pair's local zeta literal
  auto z = srf_quotient(2, spoly(2, {{{1, 1}, "2"}, {{0, 1}, "1"}, {{0, 0}, "1"}}),
                        {{lf({1, 0}, "1"), 1}, {lf({0, 1}, "1"), 1}, {lf({0, 2}, "1"), 1}});
  auto p = polar_locus(z);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == make_form(iv({0, 1}), rat_from_string("1/2")));  // 2s2+1 normalized
  CHECK(p[1] == make_form(iv({0, 1}), Rat(1)));
  CHECK(p[2] == make_form(iv({1, 0}), Rat(1)));

  // (s+1)/(s+1)^2 reduces to a single pole
  auto z2 = srf_quotient(1, spoly(1, {{{1}, "1"}, {{0}, "1"}}), {{lf({1}, "1"), 2}});
  auto p2 = polar_locus(z2);
  REQUIRE(p2.size() == 1);
  CHECK(z2.den[0].second == 1);

  auto z3 = srf_quotient(1, SPoly::constant(1, Rat(5)), {});
  CHECK(polar_locus(z3).empty());
}

TEST_CASE("polar_candidates fixed examples") {
  auto cands = polar_candidates(five_planes());
  REQUIRE(cands.size() == 8);
  PolarLocus expected;
  for (int j = 0; j < 5; ++j) {
    std::vector<long> e(5, 0);
    e[j] = 1;
    expected.push_back(make_form(iv(e), Rat(1)));
  }
  expected.push_back(make_form(iv({1, 1, 1, 0, 0}), Rat(2)));
  expected.push_back(make_form(iv({0, 0, 1, 1, 1}), Rat(2)));
  expected.push_back(make_form(iv({1, 1, 1, 1, 1}), Rat(3)));
  std::sort(expected.begin(), expected.end());
  CHECK(cands == expected);

  CHECK(polar_candidates(boolean2()).size() == 2);
  CHECK(polar_candidates(triangle()).size() == 4);
}

TEST_CASE("polar locus of the built-in zeta sits inside the candidate set") {
  std::mt19937 rng(5810);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_arrangement(rng, 2, 1 + int(rng() % 3), 6, true);
    auto d = canonical_resolution_2d(a);
    auto cands = polar_candidates(a);
    for (bool local : {false, true}) {
      if (local && !is_central(a)) continue;
      for (const auto& f : polar_locus(zeta_from_resolution(d, local)))
        CHECK(std::find(cands.begin(), cands.end(), f) != cands.end());
    }
  }
}

TEST_CASE("substitute_affine fixed examples") {
  auto zb = zeta_from_resolution(canonical_resolution_2d(boolean2()), false);

  AffineAssignment id{2, {iv({1, 0}), iv({0, 1})}, {Rat(0), Rat(0)}};
  CHECK(substitute_affine(zb, id) == zb);

  // s2 -> 1: the forms-zeta pattern gives (1/2) / (s1+1)
  AffineAssignment s2to1{1, {iv({1}), iv({0})}, {Rat(0), Rat(1)}};
  auto z = substitute_affine(zb, s2to1);
  auto expected = srf_quotient(1, SPoly::constant(1, rat_from_string("1/2")), {{lf({1}, "1"), 1}});
  CHECK(z == expected);

  // mapping a denominator form to zero is an error
  AffineAssignment bad{1, {iv({1}), iv({0})}, {Rat(0), Rat(-1)}};
  CHECK_THROWS(substitute_affine(zb, bad));
}

TEST_CASE("zeta commutes with non-degenerate specialization") {
  std::mt19937 rng(112358);
  for (int trial = 0; trial < 15; ++trial) {
    auto a = random_arrangement(rng, 2, 1 + int(rng() % 3), 5, trial % 2 == 0);
    int p = 1 + int(rng() % 2);
    IntMatrix m = random_nondegenerate_matrix(rng, p, a.r, 3);
    auto g = regroup(a, m);
    REQUIRE(!g.degenerate);
    AffineAssignment map;
    map.target_dim = p;
    map.cst.assign(a.r, Rat(0));
    map.lin.resize(a.r);
    for (int j = 0; j < a.r; ++j) {
      map.lin[j].resize(p);
      for (int k = 0; k < p; ++k) map.lin[j][k] = m.at(k, j);
    }
    auto lhs = substitute_affine(zeta_from_resolution(canonical_resolution_2d(a), false), map);
    auto rhs = zeta_from_resolution(canonical_resolution_2d(g.arrangement), false);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("zeta of the shared-factor pair, global and local") {
  // lines x, y, x-1 with multiplicity vectors (1,0), (1,1), (0,1)
  auto a = make_arrangement(2, 2, {hyp({1, 0}, 0, {1, 0}), hyp({0, 1}, 0, {1, 1}),
                                   hyp({1, 0}, -1, {0, 1})});
  auto d = canonical_resolution_2d(a);
  // two double points, no blowups: (1 - s1 s2)/((s1+1)(s2+1)(s1+s2+1))
  SPoly num = spoly(2, {{{0, 0}, "1"}, {{1, 1}, "-1"}});
  auto expected = srf_quotient(
      2, num, {{lf({1, 0}, "1"), 1}, {lf({0, 1}, "1"), 1}, {lf({1, 1}, "1"), 1}});
  auto z = zeta_from_resolution(d, false);
  CHECK(z == expected);
  // local at the origin: only the {x, y} double point lies over 0
  auto local = zeta_from_resolution(d, true);
  CHECK(local == srf_term(2, Rat(1), {lf({1, 0}, "1"), lf({1, 1}, "1")}));

  // true poles against the support and the shipped full ideal
  BSIdealDatum bf;
  bf.r = 2;
  bf.generators = {{{make_form(iv({1, 0}), Rat(1)), 1},
                    {make_form(iv({0, 1}), Rat(1)), 1},
                    {make_form(iv({1, 1}), Rat(1)), 1},
                    {make_form(iv({1, 1}), Rat(2)), 1}}};
  CHECK(check_monodromy_forms(a, polar_locus(z)).holds);
  CHECK(check_strong_monodromy(polar_locus(z), locus(bf)).holds);
  CHECK(check_strong_monodromy(polar_locus(local), locus(bf)).holds);
}

TEST_CASE("zeta is invariant under unimodular coordinate changes") {
  std::mt19937 rng(773311);
  for (int trial = 0; trial < 12; ++trial) {
    auto a = random_arrangement(rng, 2, 1 + int(rng() % 3), 5, trial % 2 == 0);
    auto t = random_unimodular_matrix(rng, 2);
    auto b = transform(a, t);
    CHECK(zeta_from_resolution(canonical_resolution_2d(a), false) ==
          zeta_from_resolution(canonical_resolution_2d(b), false));
  }
}

TEST_CASE("check_monodromy fixed examples") {
  CHECK(check_monodromy(triangle()).holds);
  CHECK(check_monodromy_candidates(five_planes()).holds);

  // corrupted support: delete the dense-edge component before checking
  auto t = triangle();
  CosetUnion corrupted = solve_character_constraints(3, {{iv({1, 0, 0}), QZ()}});
  corrupted = union_of(corrupted, solve_character_constraints(3, {{iv({0, 1, 0}), QZ()}}));
  corrupted = union_of(corrupted, solve_character_constraints(3, {{iv({0, 0, 1}), QZ()}}));
  auto res = check_forms_against_support(
      corrupted, 3, polar_locus(zeta_from_resolution(canonical_resolution_2d(t), false)));
  CHECK(!res.holds);
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == make_form(iv({1, 1, 1}), Rat(2)));
}

TEST_CASE("check_monodromy holds on random line arrangements") {
  std::mt19937 rng(8671);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_arrangement(rng, 2, 1 + int(rng() % 3), 6, trial % 2 == 0);
    CHECK(check_monodromy(a).holds);
  }
}

TEST_CASE("check_strong_monodromy fixed examples") {
  // non-principal pair: poles {s1+1, s2+1, 2s2+1} against B_F
  BSIdealDatum bf;
  bf.r = 2;
  bf.generators = {{{make_form(iv({1, 0}), Rat(1)), 1},
                    {make_form(iv({0, 1}), Rat(1)), 2},
                    {make_form(iv({0, 2}), Rat(1)), 1},
                    {make_form(iv({0, 4}), Rat(3)), 1},
                    {make_form(iv({0, 4}), Rat(5)), 1},
                    {make_form(iv({0, 2}), Rat(3)), 1}}};
  PolarLocus poles{make_form(iv({1, 0}), Rat(1)), make_form(iv({0, 1}), Rat(1)),
                   make_form(iv({0, 2}), Rat(1))};
  CHECK(check_strong_monodromy(poles, locus(bf)).holds);

  // a fabricated pole misses the locus
  PolarLocus bad{make_form(iv({1, 1}), Rat(7))};
  auto res = check_strong_monodromy(bad, locus(bf));
  CHECK(!res.holds);
  CHECK(res.witness.has_value());
}

TEST_CASE("check_thmsm_reduction fixed examples") {
  // the five-plane example against the union of its unit-ideal loci
  auto five = five_planes();
  std::vector<std::vector<std::pair<std::vector<long>, long>>> unit_data{
      {{{1, 0, 0, 0, 0}, 1}, {{1, 1, 1, 0, 0}, 2}, {{1, 1, 1, 1, 1}, 3}},
      {{{0, 1, 0, 0, 0}, 1}, {{1, 1, 1, 0, 0}, 2}, {{1, 1, 1, 1, 1}, 3}},
      {{{0, 0, 1, 0, 0}, 1}, {{1, 1, 1, 0, 0}, 2}, {{0, 0, 1, 1, 1}, 2}, {{1, 1, 1, 1, 1}, 3}},
      {{{0, 0, 0, 1, 0}, 1}, {{0, 0, 1, 1, 1}, 2}, {{1, 1, 1, 1, 1}, 3}},
      {{{0, 0, 0, 0, 1}, 1}, {{0, 0, 1, 1, 1}, 2}, {{1, 1, 1, 1, 1}, 3}}};
  AffineLocus all;
  all.dim = 5;
  for (auto& gen : unit_data) {
    BSIdealDatum b;
    b.r = 5;
    b.generators.emplace_back();
    for (auto& [c, k] : gen) b.generators[0].push_back({make_form(iv(c), Rat(k)), 1});
    all = union_of(all, locus(b));
  }
  auto res = check_thmsm_reduction(five, all);
  CHECK(res.holds);
  CHECK(res.dense_edges_checked == 8);

  // triangle against a fabricated ideal missing the dense-origin hyperplane
  BSIdealDatum missing;
  missing.r = 3;
  missing.generators = {{{make_form(iv({1, 0, 0}), Rat(1)), 1},
                         {make_form(iv({0, 1, 0}), Rat(1)), 1},
                         {make_form(iv({0, 0, 1}), Rat(1)), 1}}};
  auto res2 = check_thmsm_reduction(triangle(), locus(missing));
  CHECK(!res2.holds);
  REQUIRE(res2.witness.has_value());
  CHECK(*res2.witness == make_form(iv({1, 1, 1}), Rat(2)));

  // a single hyperplane: only {s+1} to check
  auto single = make_arrangement(1, 1, {hyp({1}, 0, {1})});
  BSIdealDatum classical;
  classical.r = 1;
  classical.generators = {{{make_form(iv({1}), Rat(1)), 1}}};
  CHECK(check_thmsm_reduction(single, locus(classical)).holds);
}
