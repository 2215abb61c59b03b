#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "parorbit/analysis.hpp"
#include "parorbit/verify.hpp"

using namespace parorbit;

namespace {
// cycle of the object with the given label, as the set of orbit indexes
std::vector<int> cycle_of(const CaseAnalysis& A, const std::string& label) {
  for (size_t s = 0; s < A.simples.size(); ++s)
    if (A.simples[s].label() == label) {
      std::vector<int> out;
      for (int j = 0; j <= A.r(); ++j)
        if (A.cycles[s][j] != 0) out.push_back(j);
      return out;
    }
  FAIL("no object " << label);
  return {};
}
std::map<std::string, std::string> fourier_map(const CaseAnalysis& A) {
  std::map<std::string, std::string> m;
  for (size_t s = 0; s < A.simples.size(); ++s)
    m[A.simples[s].label()] = A.simples[A.fourier.image[s]].label();
  return m;
}
}  // namespace

TEST_CASE("simple object counts") {
  CHECK(analyze_case(Kind::C, 3, 3).simples.size() == 7u);   // 2n+1
  CHECK(analyze_case(Kind::C, 4, 4).simples.size() == 9u);
  CHECK(analyze_case(Kind::B, 3, 1).simples.size() == 4u);
  CHECK(analyze_case(Kind::D, 5, 1).simples.size() == 4u);
  CHECK(analyze_case(Kind::A, 5, 2).simples.size() == 3u);
  CHECK(analyze_case(Kind::D, 6, 6).simples.size() == 4u);
  CHECK(analyze_case(Kind::E, 6, 1).simples.size() == 3u);
  CHECK(analyze_case(Kind::E, 7, 7).simples.size() == 5u);
}

TEST_CASE("characteristic cycles for the spin cases") {
  CaseAnalysis B = analyze_case(Kind::B, 3, 1);  // odd-dimensional quadric
  CHECK(cycle_of(B, "(0)") == std::vector<int>{0});
  CHECK(cycle_of(B, "(1)") == std::vector<int>{0, 1});
  CHECK(cycle_of(B, "(2)") == std::vector<int>{2});
  CHECK(cycle_of(B, "(2)'") == std::vector<int>{1, 2});

  CaseAnalysis D = analyze_case(Kind::D, 5, 1);  // even-dimensional quadric
  CHECK(cycle_of(D, "(0)") == std::vector<int>{0});
  CHECK(cycle_of(D, "(1)") == std::vector<int>{1});
  CHECK(cycle_of(D, "(2)") == std::vector<int>{2});
  CHECK(cycle_of(D, "(2)'") == std::vector<int>{0, 1, 2});
}

TEST_CASE("characteristic cycles for symmetric matrices depend on parity") {
  CaseAnalysis C3 = analyze_case(Kind::C, 3, 3);
  CHECK(cycle_of(C3, "(0)") == std::vector<int>{0});
  CHECK(cycle_of(C3, "(1)") == std::vector<int>{1});
  CHECK(cycle_of(C3, "(1)'") == std::vector<int>{0, 1});
  CHECK(cycle_of(C3, "(2)") == std::vector<int>{1, 2});
  CHECK(cycle_of(C3, "(2)'") == std::vector<int>{2});
  CHECK(cycle_of(C3, "(3)") == std::vector<int>{3});
  CHECK(cycle_of(C3, "(3)'") == std::vector<int>{2, 3});

  CaseAnalysis C4 = analyze_case(Kind::C, 4, 4);
  CHECK(cycle_of(C4, "(1)") == std::vector<int>{0, 1});
  CHECK(cycle_of(C4, "(1)'") == std::vector<int>{1});
  CHECK(cycle_of(C4, "(4)") == std::vector<int>{4});
  CHECK(cycle_of(C4, "(4)'") == std::vector<int>{3, 4});
}

TEST_CASE("the E7 sign object covers every conormal") {
  CaseAnalysis A = analyze_case(Kind::E, 7, 7);
  for (int i = 0; i <= 3; ++i)
    CHECK(cycle_of(A, "(" + std::to_string(i) + ")") == std::vector<int>{i});
  CHECK(cycle_of(A, "(3)'") == std::vector<int>{0, 1, 2, 3});
  // This cycle is the corrected one; the note records the fix.
  REQUIRE_FALSE(A.cycle_notes.empty());
}

TEST_CASE("packets match the expected lists") {
  for (auto [k, rank, node] : {std::tuple{Kind::C, 3, 3}, {Kind::C, 4, 4},
                               {Kind::B, 4, 1}, {Kind::D, 5, 1}, {Kind::D, 6, 6},
                               {Kind::A, 4, 2}, {Kind::E, 6, 1}, {Kind::E, 7, 7}}) {
    CaseAnalysis A = analyze_case(k, rank, node);
    INFO(kind_char(k) << rank << " node " << node);
    auto want = expected_packets(A.family, rank, A.r());
    REQUIRE(want.size() == A.packets.size());
    for (int j = 0; j <= A.r(); ++j) {
      std::vector<std::string> got;
      for (int s : A.packets[j]) got.push_back(A.simples[s].label());
      CHECK(got == want[j]);
    }
  }
}

TEST_CASE("every object lies in the packet of its support") {
  for (auto [k, rank, node] : {std::tuple{Kind::C, 5, 5}, {Kind::D, 7, 1},
                               {Kind::E, 7, 7}}) {
    CaseAnalysis A = analyze_case(k, rank, node);
    for (size_t s = 0; s < A.simples.size(); ++s) {
      int supp = A.simples[s].orbit;
      bool found = false;
      for (int m : A.packets[supp]) found = found || m == static_cast<int>(s);
      CHECK(found);
    }
  }
}

TEST_CASE("Fourier transform fixed maps") {
  auto fm = fourier_map(analyze_case(Kind::C, 3, 3));
  CHECK(fm.at("(0)") == "(3)");
  CHECK(fm.at("(1)") == "(2)'");
  CHECK(fm.at("(1)'") == "(3)'");
  CHECK(fm.at("(2)") == "(2)");
  CHECK(fm.at("(2)'") == "(1)");
  CHECK(fm.at("(3)") == "(0)");
  CHECK(fm.at("(3)'") == "(1)'");

  auto fb = fourier_map(analyze_case(Kind::B, 3, 1));
  CHECK(fb.at("(0)") == "(2)");
  CHECK(fb.at("(1)") == "(2)'");

  auto fd = fourier_map(analyze_case(Kind::D, 5, 1));
  CHECK(fd.at("(1)") == "(1)");
  CHECK(fd.at("(2)'") == "(2)'");

  auto fe = fourier_map(analyze_case(Kind::E, 7, 7));
  CHECK(fe.at("(3)'") == "(3)'");
  CHECK(fe.at("(0)") == "(3)");
}

TEST_CASE("Fourier transform is an involution mapping (0) to the open orbit") {
  for (const CaseId& id : acceptance_grid()) {
    CaseAnalysis A = analyze_case(id.kind, id.rank, id.node);
    INFO(case_name(id));
    REQUIRE(A.fourier.unique);
    int n = static_cast<int>(A.simples.size());
    for (int s = 0; s < n; ++s) CHECK(A.fourier.image[A.fourier.image[s]] == s);
    int zero = -1, open_triv = -1;
    for (int s = 0; s < n; ++s) {
      if (A.simples[s].orbit == 0 && !A.simples[s].sgn) zero = s;
      if (A.simples[s].orbit == A.r() && !A.simples[s].sgn) open_triv = s;
    }
    CHECK(A.fourier.image[zero] == open_triv);
  }
}

TEST_CASE("quivers") {
  auto arrows = [](const CaseAnalysis& A) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [x, y] : A.quiver.arrows)
      out.emplace_back(A.simples[x].label(), A.simples[y].label());
    return out;
  };
  using V = std::vector<std::pair<std::string, std::string>>;

  CHECK(arrows(analyze_case(Kind::A, 3, 1)).empty());   // k != l: semisimple
  CHECK(arrows(analyze_case(Kind::A, 3, 2)) == V{{"(0)", "(1)"}, {"(1)", "(2)"}});
  CHECK(arrows(analyze_case(Kind::D, 5, 5)).empty());   // n odd: semisimple
  CHECK(arrows(analyze_case(Kind::D, 6, 6)) ==
        V{{"(0)", "(1)"}, {"(1)", "(2)"}, {"(2)", "(3)"}});
  CHECK(arrows(analyze_case(Kind::E, 6, 1)).empty());
  CHECK(arrows(analyze_case(Kind::B, 3, 1)) == V{{"(1)", "(2)"}, {"(0)", "(2)'"}});
  CHECK(arrows(analyze_case(Kind::D, 5, 1)) == V{{"(0)", "(1)"}, {"(1)", "(2)"}});
  CHECK(arrows(analyze_case(Kind::C, 3, 3)) ==
        V{{"(0)", "(2)"}, {"(2)", "(3)"}, {"(1)'", "(3)'"}});
  CHECK(arrows(analyze_case(Kind::E, 7, 7)) ==
        V{{"(0)", "(1)"}, {"(1)", "(2)"}, {"(2)", "(3)"}});
  CHECK(analyze_case(Kind::E, 7, 7).quiver.relation == "all 2-cycles are zero");
  CHECK(analyze_case(Kind::E, 6, 1).quiver.relation.empty());

  // The transform permutes each quiver's arrow set.
  for (auto [k, rank, node] : {std::tuple{Kind::C, 4, 4}, {Kind::B, 5, 1},
                               {Kind::D, 6, 6}, {Kind::E, 7, 7}}) {
    CaseAnalysis A = analyze_case(k, rank, node);
    CHECK(quiver_automorphism(A.quiver, A.fourier.image));
  }
}

TEST_CASE("cycle notes flag only the documented cases") {
  CHECK_FALSE(analyze_case(Kind::C, 4, 4).cycle_notes.empty());  // prime convention
  CHECK_FALSE(analyze_case(Kind::E, 7, 7).cycle_notes.empty());  // corrected table
  CHECK(analyze_case(Kind::A, 4, 2).cycle_notes.empty());
  CHECK(analyze_case(Kind::B, 4, 1).cycle_notes.empty());
  CHECK(analyze_case(Kind::E, 6, 6).cycle_notes.empty());
}
