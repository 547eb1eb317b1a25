#include <doctest.h>

#include "gfe/ghost.hpp"

using namespace gfe;

namespace {
std::set<BigRat> t0_set(const std::vector<GhostSolution>& sols) {
  std::set<BigRat> out;
  for (auto& g : sols) out.insert(g.t0());
  return out;
}
std::set<BigRat> rats(std::initializer_list<std::pair<long, long>> fracs) {
  std::set<BigRat> out;
  for (auto& [n, d] : fracs) out.insert(make_rat(n, d));
  return out;
}
}  // namespace

TEST_CASE("catalog tuples satisfy their equations") {
  auto cat = example_catalog(5);
  REQUIRE(cat.size() == 4);
  CHECK(cat[0].t0() == make_rat(-1, 8));
  CHECK(cat[1].t0() == make_rat(9, 8));
  CHECK(cat[2].t0() == make_rat(1, 9));
  CHECK(cat[3].t0() == make_rat(8, 9));
  for (auto& g : cat) CHECK(g.verify());
}

TEST_CASE("search in the small box reproduces the published lists") {
  SearchBox box;
  box.a_bound = 100;
  box.c_bound = 100;
  box.exp_bound = 12;
  CHECK(t0_set(ghost_search(5, 3, box)) ==
        rats({{-32, 343}, {9, 8}, {-1, 8}, {25, 24}, {-1, 24}, {32, 5}, {3, 8}, {32, 27},
              {5, 8}, {1024, 1029}}));
  CHECK(t0_set(ghost_search(7, 5, box)) == rats({{7, 32}, {25, 32}}));
  CHECK(t0_set(ghost_search(11, 3, box)) == rats({{-3, 8}, {-1, 8}, {9, 8}, {11, 8}}));
  CHECK(t0_set(ghost_search(13, 3, box)) == rats({{-1, 8}, {9, 8}}));
  CHECK(ghost_search(13, 5, box).empty());
  CHECK(t0_set(ghost_search(7, 3, box)) ==
        rats({{-1, 8}, {1, 8}, {1, 64}, {7, 8}, {9, 8}, {63, 64}, {128, 125}}));
  CHECK(t0_set(ghost_search(11, 5, box)) == rats({{2048, 2673}}));
  CHECK(t0_set(ghost_search(11, 7, box)) == rats({{7, 128}, {121, 128}}));
}

TEST_CASE("serial and parallel searches agree") {
  SearchBox box;
  box.a_bound = 60;
  box.c_bound = 60;
  box.exp_bound = 10;
  auto a = ghost_search(5, 3, box);
  auto b = ghost_search_serial(5, 3, box);
  CHECK(t0_set(a) == t0_set(b));
}

TEST_CASE("monotone in the box") {
  SearchBox small;
  small.a_bound = 20;
  small.c_bound = 20;
  small.exp_bound = 6;
  SearchBox big;
  big.a_bound = 100;
  big.c_bound = 100;
  big.exp_bound = 12;
  auto s = t0_set(ghost_search(5, 3, small));
  auto b = t0_set(ghost_search(5, 3, big));
  for (auto& t : s) CHECK(b.count(t) == 1);
}

TEST_CASE("normalization and dedup invariants") {
  SearchBox box;
  box.a_bound = 100;
  box.c_bound = 100;
  box.exp_bound = 12;
  auto sols = ghost_search(5, 3, box);
  std::set<BigRat> seen;
  for (auto& g : sols) {
    CHECK(g.verify());
    CHECK(std::min({g.s, g.m, g.u}) == 0);
    CHECK(std::min({g.l, g.n, g.v}) == 0);
    CHECK(seen.insert(g.t0()).second);  // no duplicate specializations
  }
}

TEST_CASE("budget refusal") {
  SearchBox huge;
  huge.a_bound = BigInt("100000000");
  huge.c_bound = BigInt("100000000");
  huge.exp_bound = 30;
  CHECK_THROWS_AS(ghost_search(5, 3, huge), domain_error);
}

TEST_CASE("classification dispatch") {
  auto cat = example_catalog(5);
  auto c0 = classify_ghost(cat[0]);  // -1/8
  CHECK(c0.source == "catalan");
  bool q3 = false, r3 = false;
  for (auto& e : c0.profile.entries) {
    if (e.place == "q") q3 = e.values == std::set<int>{3};
    if (e.place == "3") r3 = e.values == std::set<int>{3};
  }
  CHECK(q3);
  CHECK(r3);

  // 25/24 has an exponent pattern outside the tables
  SearchBox box;
  box.a_bound = 100;
  box.c_bound = 100;
  box.exp_bound = 12;
  auto sols = ghost_search(5, 3, box);
  for (auto& g : sols) {
    if (g.t0() == make_rat(25, 24)) {
      auto cls = classify_ghost(g);
      CHECK(cls.source == "unclassified");
    }
    if (g.t0() == make_rat(9, 8)) {
      CHECK(classify_ghost(g).source == "catalan");
    }
  }
}

TEST_CASE("tsv export shape") {
  auto cat = example_catalog(7);
  std::string tsv = ghost_tsv(cat);
  CHECK(tsv.find("t0_num\tt0_den") == 0);
  CHECK(tsv.find("catalan") != std::string::npos);
}
