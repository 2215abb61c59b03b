#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "parorbit/weyl.hpp"

using namespace parorbit;

TEST_CASE("dominant representative negates fundamental coweights correctly") {
  // -omega_1 is W-conjugate to omega_n in A_n, and to omega_{tau(l)} in
  // general, where tau is the diagram involution induced by -w0.
  RootSystem A3 = RootSystem::build(Kind::A, 3);
  CHECK(dominant_representative(A3, -A3.fundamental_coweight(0)).first ==
        A3.fundamental_coweight(2));

  RootSystem E6 = RootSystem::build(Kind::E, 6);
  CHECK(dominant_representative(E6, -E6.fundamental_coweight(0)).first ==
        E6.fundamental_coweight(5));

  RootSystem D5 = RootSystem::build(Kind::D, 5);
  CHECK(dominant_representative(D5, -D5.fundamental_coweight(4)).first ==
        D5.fundamental_coweight(3));
}

TEST_CASE("w0 negation table") {
  auto negates = [](Kind k, int rank, int node) {
    RootSystem R = RootSystem::build(k, rank);
    return w0_negates(R, R.fundamental_coweight(node - 1));
  };
  CHECK_FALSE(negates(Kind::A, 3, 1));
  CHECK(negates(Kind::A, 3, 2));
  CHECK(negates(Kind::B, 4, 1));
  CHECK(negates(Kind::C, 5, 5));
  CHECK(negates(Kind::D, 5, 1));  // vector node: true for every rank
  CHECK_FALSE(negates(Kind::D, 5, 4));
  CHECK_FALSE(negates(Kind::D, 5, 5));
  CHECK(negates(Kind::D, 6, 5));
  CHECK(negates(Kind::D, 6, 6));
  CHECK_FALSE(negates(Kind::E, 6, 1));
  CHECK_FALSE(negates(Kind::E, 6, 6));
  CHECK(negates(Kind::E, 7, 7));
}

TEST_CASE("orbit sizes of minuscule and vector coweights") {
  auto orbit_size = [](Kind k, int rank, int node) {
    RootSystem R = RootSystem::build(k, rank);
    return static_cast<int>(weyl_orbit(R, R.fundamental_coweight(node - 1)).size());
  };
  CHECK(orbit_size(Kind::A, 2, 1) == 3);
  CHECK(orbit_size(Kind::C, 2, 1) == 4);
  CHECK(orbit_size(Kind::B, 3, 1) == 6);
  CHECK(orbit_size(Kind::D, 4, 1) == 8);
  CHECK(orbit_size(Kind::E, 6, 1) == 27);
  CHECK(orbit_size(Kind::E, 7, 7) == 56);
  // Half-spin orbit of D8 has 2^7 = 128 elements.
  CHECK(orbit_size(Kind::D, 8, 8) == 128);
}

TEST_CASE("inversion length equals reduced word length for dominance words") {
  std::mt19937 rng(20240111);
  RootSystem R = RootSystem::build(Kind::D, 5);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Coweight x = Coweight::zero(5);
    for (auto& c : x.c) c = pick(rng);
    auto [rep, word] = dominant_representative(R, x);
    // The recorded word moves x to the dominant chamber; its inversion
    // length never exceeds the word size (equality iff reduced).
    CHECK(act(R, word, x) == rep);
    CHECK(inversion_length(R, word) <= word.size());
  }
}

TEST_CASE("longest elements have the expected lengths") {
  auto l0 = [](Kind k, int n) {
    RootSystem R = RootSystem::build(k, n);
    return longest_word(R, full_node_set(R)).size();
  };
  CHECK(l0(Kind::A, 3) == 6);
  CHECK(l0(Kind::B, 4) == 16);
  CHECK(l0(Kind::E, 6) == 36);
  CHECK(l0(Kind::E, 7) == 63);
}

TEST_CASE("double cosets for the E6 node 1 parabolic") {
  RootSystem R = RootSystem::build(Kind::E, 6);
  std::vector<int> J = {1, 2, 3, 4, 5};  // 0-based complement of node 1
  Coweight lam = R.fundamental_coweight(0);
  CHECK(double_coset_count(R, J, lam) == 3);
}

TEST_CASE("minimal coset representatives are two-sided minimal") {
  // l(s_j w) > l(w) and l(w s_j) > l(w) for every j in J characterizes the
  // minimal-length representative of W_J w W_J.
  struct Probe {
    Kind k;
    int rank, node;
  };
  for (Probe pr : {Probe{Kind::E, 6, 1}, Probe{Kind::E, 7, 7}, Probe{Kind::C, 4, 4}}) {
    RootSystem R = RootSystem::build(pr.k, pr.rank);
    std::vector<int> J;
    for (int j = 0; j < pr.rank; ++j)
      if (j != pr.node - 1) J.push_back(j);
    Coweight lam = R.fundamental_coweight(pr.node - 1);
    DoubleCosets dc = double_cosets(R, J, lam);
    for (const auto& block : dc.blocks) {
      std::vector<Coweight> elems;
      for (int idx : block) elems.push_back(dc.orbit[idx]);
      CosetRep rep = minimal_coset_rep(R, J, lam, elems);
      int len = inversion_length(R, rep.w);
      CHECK(len == rep.length);
      for (int j : J) {
        WeylWord left, right;
        left.letters.push_back(j);
        left.letters.insert(left.letters.end(), rep.w.letters.begin(),
                            rep.w.letters.end());
        right.letters = rep.w.letters;
        right.letters.push_back(j);
        CHECK(inversion_length(R, left) == len + 1);
        CHECK(inversion_length(R, right) == len + 1);
      }
    }
  }
}

TEST_CASE("E6 and E7 coset data matches the worked examples") {
  // E6, node 1: middle orbit has w = s1, K = {2,4,5,6} (1-based),
  // l(w') = 20 - 10 = 10, so the orbit dimension is 11.
  {
    RootSystem R = RootSystem::build(Kind::E, 6);
    std::vector<int> J = {1, 2, 3, 4, 5};
    Coweight lam = R.fundamental_coweight(0);
    DoubleCosets dc = double_cosets(R, J, lam);
    REQUIRE(dc.blocks.size() == 3);
    std::vector<CosetRep> reps;
    for (const auto& b : dc.blocks) {
      std::vector<Coweight> elems;
      for (int idx : b) elems.push_back(dc.orbit[idx]);
      reps.push_back(minimal_coset_rep(R, J, lam, elems));
    }
    std::sort(reps.begin(), reps.end(),
              [](const CosetRep& a, const CosetRep& b) { return a.dimension < b.dimension; });
    CHECK(reps[0].dimension == 0);
    CHECK(reps[1].w.letters == std::vector<int>{0});
    CHECK(reps[1].K == std::vector<int>{1, 3, 4, 5});  // nodes 2,4,5,6
    CHECK(reps[1].wprime_length == 10);
    CHECK(reps[1].dimension == 11);
    CHECK(reps[2].dimension == 16);
  }
  // E7, node 7: w1 = s7 s6 s5 s4 s2 s3 s4 s5 s6 s7 with K = {2,3,4,5,6} of
  // type D5, l(w') = 36 - 20 = 16, dimension 26; open orbit dimension 27.
  {
    RootSystem R = RootSystem::build(Kind::E, 7);
    std::vector<int> J = {0, 1, 2, 3, 4, 5};
    Coweight lam = R.fundamental_coweight(6);
    DoubleCosets dc = double_cosets(R, J, lam);
    REQUIRE(dc.blocks.size() == 4);
    std::vector<CosetRep> reps;
    for (const auto& b : dc.blocks) {
      std::vector<Coweight> elems;
      for (int idx : b) elems.push_back(dc.orbit[idx]);
      reps.push_back(minimal_coset_rep(R, J, lam, elems));
    }
    std::sort(reps.begin(), reps.end(),
              [](const CosetRep& a, const CosetRep& b) { return a.dimension < b.dimension; });
    CHECK(reps[1].w.letters == std::vector<int>{6});
    CHECK(reps[1].dimension == 17);
    CHECK(reps[2].w.letters == std::vector<int>{6, 5, 4, 3, 1, 2, 3, 4, 5, 6});
    CHECK(reps[2].K == std::vector<int>{1, 2, 3, 4, 5});  // nodes 2..6
    CHECK(reps[2].wprime_length == 16);
    CHECK(reps[2].dimension == 26);
    CHECK(reps[3].length == 27);
    CHECK(reps[3].wprime_length == 0);
    CHECK(reps[3].dimension == 27);
  }
}
