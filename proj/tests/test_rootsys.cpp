#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "parorbit/display.hpp"
#include "parorbit/rootsys.hpp"

using namespace parorbit;

TEST_CASE("positive root counts match the closed forms") {
  struct Row {
    Kind k;
    int rank;
    int count;
  };
  // |Phi+|: A_n n(n+1)/2, B_n/C_n n^2, D_n n(n-1), E6 36, E7 63.
  const Row rows[] = {{Kind::A, 1, 1},  {Kind::A, 4, 10}, {Kind::A, 8, 36},
                      {Kind::B, 2, 4},  {Kind::B, 5, 25}, {Kind::C, 3, 9},
                      {Kind::C, 8, 64}, {Kind::D, 3, 6},  {Kind::D, 6, 30},
                      {Kind::D, 8, 56}, {Kind::E, 6, 36}, {Kind::E, 7, 63}};
  for (const Row& r : rows) {
    RootSystem R = RootSystem::build(r.k, r.rank);
    INFO(R.name());
    CHECK(R.num_positive() == r.count);
  }
}

TEST_CASE("unsupported inputs are rejected") {
  CHECK_THROWS_AS(RootSystem::build(Kind::E, 8), ConfigError);
  CHECK_THROWS_AS(RootSystem::build(Kind::B, 1), ConfigError);
  CHECK_THROWS_AS(RootSystem::build(Kind::D, 2), ConfigError);
  CHECK_THROWS_AS(RootSystem::build(Kind::A, 9), ConfigError);
  CHECK_THROWS_AS(RootSystem::build(Kind::A, 0), ConfigError);
  CHECK_THROWS_AS(kind_from_char('G'), ConfigError);
}

TEST_CASE("highest roots") {
  auto highest = [](Kind k, int n) {
    RootSystem R = RootSystem::build(k, n);
    return R.root(R.num_positive() - 1);
  };
  CHECK(highest(Kind::A, 4) == RootVec{1, 1, 1, 1});
  CHECK(highest(Kind::B, 3) == RootVec{1, 2, 2});
  CHECK(highest(Kind::C, 3) == RootVec{2, 2, 1});
  CHECK(highest(Kind::D, 4) == RootVec{1, 2, 1, 1});
  CHECK(highest(Kind::E, 6) == RootVec{1, 2, 2, 3, 2, 1});
  CHECK(highest(Kind::E, 7) == RootVec{2, 2, 3, 4, 3, 2, 1});
}

TEST_CASE("symmetrizers give long roots norm 4 and short roots norm 2") {
  RootSystem B3 = RootSystem::build(Kind::B, 3);
  CHECK(B3.symmetrizer(0) == 2);
  CHECK(B3.symmetrizer(1) == 2);
  CHECK(B3.symmetrizer(2) == 1);
  RootSystem C3 = RootSystem::build(Kind::C, 3);
  CHECK(C3.symmetrizer(0) == 1);
  CHECK(C3.symmetrizer(1) == 1);
  CHECK(C3.symmetrizer(2) == 2);
  CHECK(C3.norm2(RootVec{2, 2, 1}) == 4);   // 2e1, long
  CHECK(C3.norm2(RootVec{1, 0, 0}) == 2);   // e1-e2, short
  RootSystem A2 = RootSystem::build(Kind::A, 2);
  for (int id = 0; id < A2.num_positive(); ++id) CHECK(A2.norm2(A2.root(id)) == 2);
}

TEST_CASE("coroot of a long C root is the expected coweight") {
  RootSystem C3 = RootSystem::build(Kind::C, 3);
  // (2e1)^vee = e1, whose pairings with (e1-e2, e2-e3, 2e3) are (1,0,0).
  CHECK(C3.coroot(RootVec{2, 2, 1}).c == std::vector<int>{1, 0, 0});
  // Short roots are self-dual up to the identification: (e1-e2)^vee pairs
  // (2,-1,0) with the simple roots, like the root itself.
  CHECK(C3.coroot(RootVec{1, 0, 0}).c == std::vector<int>{2, -1, 0});
}

TEST_CASE("reflections are involutions and preserve the root set") {
  std::mt19937 rng(20240817);
  for (Kind k : {Kind::B, Kind::D, Kind::E}) {
    int rank = k == Kind::E ? 6 : 4;
    RootSystem R = RootSystem::build(k, rank);
    std::uniform_int_distribution<int> pick_root(0, R.num_positive() - 1);
    std::uniform_int_distribution<int> pick_simple(0, rank - 1);
    for (int trial = 0; trial < 200; ++trial) {
      RootVec beta = R.root(pick_root(rng));
      int i = pick_simple(rng);
      RootVec img = R.reflect_root(i, beta);
      CHECK(R.is_root(img));
      CHECK(R.reflect_root(i, img) == beta);
    }
  }
}

TEST_CASE("root strings satisfy the pairing identity") {
  // For the a-string through b (b - pa, ..., b + qa all roots):
  // p - q = <b, a^vee>, and p + q <= 2 since no G2 factor is supported.
  RootSystem C4 = RootSystem::build(Kind::C, 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, C4.num_positive() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    RootVec a = C4.root(pick(rng)), b = C4.root(pick(rng));
    if (a == b) continue;
    auto walk = [&](int dir) {
      int k = 0;
      RootVec v = b;
      for (;;) {
        for (int j = 0; j < 4; ++j) v[j] += dir * a[j];
        if (!C4.is_root(v)) break;
        ++k;
      }
      return k;
    };
    int q = walk(+1), p = walk(-1);
    CHECK(p + q <= 2);
    CHECK(p - q == RootSystem::pairing(C4.coroot(a), b));
  }
}

TEST_CASE("epsilon displays match the classical coordinates") {
  RootSystem C3 = RootSystem::build(Kind::C, 3);
  CHECK(epsilon_string(C3, RootVec{1, 0, 0}) == "e1-e2");
  CHECK(epsilon_string(C3, RootVec{2, 2, 1}) == "2e1");
  RootSystem B3 = RootSystem::build(Kind::B, 3);
  CHECK(epsilon_string(B3, RootVec{1, 2, 2}) == "e1+e2");
  CHECK(epsilon_string(B3, RootVec{0, 0, 1}) == "e3");
  RootSystem D4 = RootSystem::build(Kind::D, 4);
  CHECK(epsilon_string(D4, RootVec{1, 2, 1, 1}) == "e1+e2");
  RootSystem E6 = RootSystem::build(Kind::E, 6);
  CHECK(epsilon_string(E6, E6.root(E6.num_positive() - 1)) ==
        "1/2(1,1,1,1,1,-1,-1,1)");
  RootSystem E7 = RootSystem::build(Kind::E, 7);
  CHECK(epsilon_string(E7, E7.root(E7.num_positive() - 1)) == "-e7+e8");
}
