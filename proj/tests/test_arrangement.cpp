#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "torsupp/arrangement.hpp"

using namespace torsupp;
using namespace torsupp::testing;

namespace {

std::vector<Int> iv(std::vector<long> v) { return std::vector<Int>(v.begin(), v.end()); }

HyperplaneMulti hyp(std::vector<long> coeffs, long cst, std::vector<long> mults) {
  return {make_form(iv(coeffs), Rat(cst)), iv(mults)};
}

// (x, y) in C^2
MultiArrangement boolean2() {
  return make_arrangement(2, 2, {hyp({1, 0}, 0, {1, 0}), hyp({0, 1}, 0, {0, 1})});
}

// (x, y, x+y) in C^2
MultiArrangement triangle() {
  return make_arrangement(
      2, 3, {hyp({1, 0}, 0, {1, 0, 0}), hyp({0, 1}, 0, {0, 1, 0}), hyp({1, 1}, 0, {0, 0, 1})});
}

TPoly tp(std::vector<long> v) { return TPoly(v.begin(), v.end()); }

}  // namespace

TEST_CASE("intersection_lattice fixed examples") {
  auto e1 = intersection_lattice(boolean2());
  REQUIRE(e1.size() == 3);
  CHECK(e1[0].through == std::vector<int>{0});
  CHECK(e1[1].through == std::vector<int>{1});
  CHECK(e1[2].through == std::vector<int>{0, 1});
  CHECK(e1[2].codim == 2);

  auto e2 = intersection_lattice(triangle());
  REQUIRE(e2.size() == 4);
  CHECK(e2[3].through == std::vector<int>{0, 1, 2});  // the origin sees all three

  // parallel hyperplanes x, x-1: no point edge
  auto par = make_arrangement(2, 2, {hyp({1, 0}, 0, {1, 0}), hyp({1, 0}, -1, {0, 1})});
  CHECK(intersection_lattice(par).size() == 2);
}

TEST_CASE("intersection_lattice is closed under pairwise intersection") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + int(rng() % 2);
    auto a = random_arrangement(rng, n, 2, 6, false);
    auto edges = intersection_lattice(a);
    for (size_t i = 0; i < edges.size(); ++i)
      for (size_t j = i + 1; j < edges.size(); ++j) {
        std::vector<int> gens = edges[i].through;
        gens.insert(gens.end(), edges[j].through.begin(), edges[j].through.end());
        auto g = detail::solve_forms(a, gens);
        if (!g) continue;
        auto through = detail::closed_through_set(a, *g);
        bool found = false;
        for (const auto& e : edges) found = found || e.through == through;
        CHECK(found);
      }
  }
}

TEST_CASE("total_splitting fixed examples") {
  auto b = boolean2();
  auto be = intersection_lattice(b);
  auto s = total_splitting(b, be[2]);  // origin
  REQUIRE(s.blocks.size() == 2);
  CHECK(s.degree_vectors[0] == iv({1, 0}));
  CHECK(s.degree_vectors[1] == iv({0, 1}));

  auto t = triangle();
  auto te = intersection_lattice(t);
  auto st = total_splitting(t, te[3]);  // origin: the circuit {x, y, x+y} joins all
  REQUIRE(st.blocks.size() == 1);
  CHECK(st.degree_vectors[0] == iv({1, 1, 1}));

  auto sh = total_splitting(t, te[0]);  // a hyperplane edge
  CHECK(sh.blocks.size() == 1);
}

TEST_CASE("is_dense fixed examples") {
  auto t = triangle();
  auto te = intersection_lattice(t);
  CHECK(is_dense(t, te[0]));  // hyperplane edges are dense
  CHECK(is_dense(t, te[3]));  // connected triple point

  auto b = boolean2();
  auto be = intersection_lattice(b);
  CHECK(!is_dense(b, be[2]));  // double point splits
}

TEST_CASE("char_poly and proj_euler_char fixed examples") {
  auto b = boolean2();
  auto be = intersection_lattice(b);
  CHECK(char_poly(b, be[2]) == tp({1, -2, 1}));  // (t-1)^2
  CHECK(proj_euler_char(b, be[2]) == 0);

  auto t = triangle();
  auto te = intersection_lattice(t);
  CHECK(char_poly(t, te[3]) == tp({2, -3, 1}));  // (t-1)(t-2)
  CHECK(proj_euler_char(t, te[3]) == -1);

  CHECK(char_poly(t, te[0]) == tp({-1, 1}));  // t-1 at a hyperplane edge
  CHECK(proj_euler_char(t, te[0]) == 1);
}

TEST_CASE("char_poly of the Boolean arrangement is (t-1)^n") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<HyperplaneMulti> hs;
    for (int i = 0; i < n; ++i) {
      std::vector<Int> c(n, Int(0));
      c[i] = 1;
      std::vector<Int> m(n, Int(0));
      m[i] = 1;
      hs.push_back({make_form(c, Rat(0)), m});
    }
    auto a = make_arrangement(n, n, hs);
    auto edges = intersection_lattice(a);
    const Edge& origin = edges.back();
    REQUIRE(origin.codim == n);
    TPoly expected{Int(1)};
    for (int i = 0; i < n; ++i) {
      TPoly next(expected.size() + 1, Int(0));
      for (size_t k = 0; k < expected.size(); ++k) {
        next[k] -= expected[k];
        next[k + 1] += expected[k];
      }
      expected = next;
    }
    CHECK(char_poly(a, origin) == expected);
  }
}

TEST_CASE("char_poly agrees with the Whitney subset oracle") {
  std::mt19937 rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + int(rng() % 3);
    auto a = random_arrangement(rng, n, 2, 6, trial % 2 == 0);
    for (const auto& e : intersection_lattice(a)) {
      TPoly mine = char_poly(a, e);
      while (mine.size() > 1 && mine.back() == 0) mine.pop_back();
      CHECK(mine == whitney_char_poly(a, e));
    }
  }
}

TEST_CASE("density matches nonvanishing projective Euler characteristic") {
  std::mt19937 rng(55555);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + int(rng() % 3);
    auto a = random_arrangement(rng, n, 1 + int(rng() % 3), 7, trial % 3 != 0);
    for (const auto& e : intersection_lattice(a)) {
      CHECK(is_dense(a, e) == (proj_euler_char(a, e) != 0));
    }
  }
}

TEST_CASE("splitting degree vectors sum to the restriction degrees") {
  std::mt19937 rng(8080);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_arrangement(rng, 2 + int(rng() % 2), 1 + int(rng() % 3), 6, false);
    for (const auto& e : intersection_lattice(a)) {
      auto s = total_splitting(a, e);
      std::vector<Int> sum(a.r, Int(0));
      size_t members = 0;
      for (size_t b = 0; b < s.blocks.size(); ++b) {
        members += s.blocks[b].size();
        for (int j = 0; j < a.r; ++j) sum[j] += s.degree_vectors[b][j];
      }
      CHECK(members == e.through.size());
      std::vector<Int> expected(a.r, Int(0));
      for (int h : e.through)
        for (int j = 0; j < a.r; ++j) expected[j] += a.hyperplanes[h].mults[j];
      CHECK(sum == expected);
    }
  }
}

TEST_CASE("chart_restriction fixed examples") {
  auto t = triangle();
  auto c = chart_restriction(t, 0);  // x = 1
  REQUIRE(c.n == 1);
  REQUIRE(c.hyperplanes.size() == 2);
  CHECK(c.hyperplanes[0].form == make_form(iv({1}), Rat(0)));  // y
  CHECK(c.hyperplanes[1].form == make_form(iv({1}), Rat(1)));  // 1 + y

  auto b = chart_restriction(boolean2(), 0);
  REQUIRE(b.hyperplanes.size() == 1);

  auto single = make_arrangement(1, 1, {hyp({1}, 0, {1})});
  CHECK(chart_restriction(single, 0).hyperplanes.empty());
}

TEST_CASE("product fixed examples") {
  auto x = make_arrangement(1, 2, {hyp({1}, 0, {1, 0})});
  auto y = make_arrangement(1, 2, {hyp({1}, 0, {0, 1})});
  auto p = product(x, y);
  CHECK(p.n == 2);
  REQUIRE(p.hyperplanes.size() == 2);
  CHECK(p.hyperplanes[0].form == make_form(iv({1, 0}), Rat(0)));
  CHECK(p.hyperplanes[1].form == make_form(iv({0, 1}), Rat(0)));

  auto t = triangle();
  auto z = make_arrangement(1, 3, {hyp({1}, 0, {1, 1, 1})});
  CHECK(product(t, z).hyperplanes.size() == 4);

  MultiArrangement empty;
  empty.n = 0;
  empty.r = 3;
  CHECK(product(empty, t).hyperplanes.size() == 3);
}

TEST_CASE("regroup fixed examples") {
  // (x, y) regrouped by the all-ones row is the single product xy
  auto b = boolean2();
  auto g = regroup(b, IntMatrix(1, 2, iv({1, 1})));
  CHECK(!g.degenerate);
  CHECK(g.arrangement.r == 1);
  REQUIRE(g.arrangement.hyperplanes.size() == 2);
  CHECK(g.arrangement.hyperplanes[0].mults == iv({1}));
  CHECK(g.arrangement.hyperplanes[1].mults == iv({1}));

  auto id = regroup(b, IntMatrix::identity(2));
  CHECK(!id.degenerate);
  CHECK(id.arrangement.hyperplanes.size() == 2);
  CHECK(id.arrangement.hyperplanes[0].mults == b.hyperplanes[0].mults);

  // dropping y is flagged degenerate
  auto drop = regroup(b, IntMatrix(1, 2, iv({1, 0})));
  CHECK(drop.degenerate);
  CHECK(drop.arrangement.hyperplanes.size() == 1);
}

TEST_CASE("restriction_to_edge produces the quotient arrangement") {
  auto t = triangle();
  auto te = intersection_lattice(t);
  // restriction to a hyperplane edge: one hyperplane in C^1
  auto rest = restriction_to_edge(t, te[0]);
  CHECK(rest.n == 1);
  CHECK(rest.hyperplanes.size() == 1);
  // restriction to the origin: the whole triple in C^2
  auto rest0 = restriction_to_edge(t, te[3]);
  CHECK(rest0.n == 2);
  CHECK(rest0.hyperplanes.size() == 3);
  auto e0 = intersection_lattice(rest0);
  CHECK(proj_euler_char(rest0, e0.back()) == -1);
}
