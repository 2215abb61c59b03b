// Shared verification data: the survey grid of abelian-radical cases,
// closed-form expectations for each row, and the self-test suites used by
// both the command line tool and the test programs.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "parorbit/analysis.hpp"

namespace parorbit {

struct CaseId {
  Kind kind{};
  int rank = 0;
  int node = 0;
};

inline std::string case_name(const CaseId& id) {
  return std::string(1, kind_char(id.kind)) + std::to_string(id.rank) + " node " +
         std::to_string(id.node);
}

// The survey rows: every maximal parabolic with abelian nilradical in the
// supported types, one row per (type, rank, marked node).
inline std::vector<CaseId> survey_grid(int max_rank = 8) {
  std::vector<CaseId> g;
  for (int n = 1; n <= max_rank; ++n)
    for (int l = 1; l <= n; ++l) g.push_back({Kind::A, n, l});
  for (int n = 2; n <= max_rank; ++n) g.push_back({Kind::B, n, 1});
  for (int n = 2; n <= max_rank; ++n) g.push_back({Kind::C, n, n});
  for (int n = 4; n <= max_rank; ++n) {
    g.push_back({Kind::D, n, 1});
    g.push_back({Kind::D, n, n - 1});
    g.push_back({Kind::D, n, n});
  }
  if (max_rank >= 6) {
    g.push_back({Kind::E, 6, 1});
    g.push_back({Kind::E, 6, 6});
  }
  if (max_rank >= 7) g.push_back({Kind::E, 7, 7});
  return g;
}

// The subset exercised by the acceptance checks: A_{n-1} for 3 <= n <= 8
// (all nodes), B/C ranks 2..6, D ranks 4..8, E6 and E7.
inline std::vector<CaseId> acceptance_grid() {
  std::vector<CaseId> g;
  for (int n = 2; n <= 7; ++n)
    for (int l = 1; l <= n; ++l) g.push_back({Kind::A, n, l});
  for (int n = 2; n <= 6; ++n) g.push_back({Kind::B, n, 1});
  for (int n = 2; n <= 6; ++n) g.push_back({Kind::C, n, n});
  for (int n = 4; n <= 8; ++n) {
    g.push_back({Kind::D, n, 1});
    g.push_back({Kind::D, n, n - 1});
    g.push_back({Kind::D, n, n});
  }
  g.push_back({Kind::E, 6, 1});
  g.push_back({Kind::E, 6, 6});
  g.push_back({Kind::E, 7, 7});
  return g;
}

inline int expected_orbit_count(const CaseId& id) {
  switch (id.kind) {
    case Kind::A: return std::min(id.node, id.rank + 1 - id.node) + 1;
    case Kind::B: return 3;
    case Kind::C: return id.rank + 1;
    case Kind::D: return id.node == 1 ? 3 : id.rank / 2 + 1;
    case Kind::E: return id.rank == 6 ? 3 : 4;
  }
  return -1;
}

inline bool expected_w0_negates(const CaseId& id) {
  switch (id.kind) {
    case Kind::A: return 2 * id.node == id.rank + 1;
    case Kind::B: return true;
    case Kind::C: return true;
    case Kind::D: return id.node == 1 || id.rank % 2 == 0;
    case Kind::E: return id.rank == 7;
  }
  return false;
}

// Packet lists per orbit, written down independently of the cycle tables.
// Members are sorted the way the library orders simple objects: by orbit,
// trivial local system before sign.
inline std::vector<std::vector<std::string>> expected_packets(CaseFamily fam,
                                                              int rank, int r) {
  auto name = [](int i, bool primed) {
    return "(" + std::to_string(i) + ")" + (primed ? "'" : "");
  };
  std::vector<std::vector<std::string>> P(r + 1);
  switch (fam) {
    case CaseFamily::Tensor:
    case CaseFamily::Alt2:
    case CaseFamily::HalfSpin:
      for (int i = 0; i <= r; ++i) P[i] = {name(i, false)};
      break;
    case CaseFamily::Sym2:
      // Besides (i) and (i)', the packet of O_i picks up the rank-(i+1)
      // object whose cycle spills down to O_i; its prime depends on the
      // parity of rank - i.
      for (int i = 0; i <= r; ++i) {
        P[i].push_back(name(i, false));
        if (i >= 1) P[i].push_back(name(i, true));
        if (i < r) P[i].push_back(name(i + 1, (rank - i) % 2 != 0));
      }
      break;
    case CaseFamily::StdOdd:
      P[0] = {name(0, false), name(1, false)};
      P[1] = {name(1, false), name(2, true)};
      P[2] = {name(2, false), name(2, true)};
      break;
    case CaseFamily::StdEven:
      for (int i = 0; i <= 2; ++i) P[i] = {name(i, false), name(2, true)};
      break;
    case CaseFamily::E7Fund:
      for (int i = 0; i <= 3; ++i) P[i] = {name(i, false), name(3, true)};
      break;
  }
  return P;
}

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

namespace detail {

inline int expected_positive_count(Kind k, int n) {
  switch (k) {
    case Kind::A: return n * (n + 1) / 2;
    case Kind::B:
    case Kind::C: return n * n;
    case Kind::D: return n * (n - 1);
    case Kind::E: return n == 6 ? 36 : 63;
  }
  return -1;
}

inline std::vector<std::pair<Kind, int>> supported_systems(int max_rank = 8) {
  std::vector<std::pair<Kind, int>> v;
  for (int n = 1; n <= max_rank; ++n) v.emplace_back(Kind::A, n);
  for (int n = 2; n <= max_rank; ++n) v.emplace_back(Kind::B, n);
  for (int n = 2; n <= max_rank; ++n) v.emplace_back(Kind::C, n);
  for (int n = 3; n <= max_rank; ++n) v.emplace_back(Kind::D, n);
  if (max_rank >= 6) v.emplace_back(Kind::E, 6);
  if (max_rank >= 7) v.emplace_back(Kind::E, 7);
  return v;
}

}  // namespace detail

inline SuiteResult check_root_systems(int max_rank = 8) {
  SuiteResult res{"root systems", true, ""};
  for (auto [k, n] : detail::supported_systems(max_rank)) {
    RootSystem R = RootSystem::build(k, n);
    int want = detail::expected_positive_count(k, n);
    if (R.num_positive() != want) {
      res.pass = false;
      res.detail = std::string(1, kind_char(k)) + std::to_string(n) + ": " +
                   std::to_string(R.num_positive()) + " positive roots, expected " +
                   std::to_string(want);
      return res;
    }
    // Simple reflections permute the positive roots other than their own.
    for (int i = 0; i < n; ++i) {
      RootVec alpha(n, 0);
      alpha[i] = 1;
      for (int id = 0; id < R.num_positive(); ++id) {
        RootVec img = R.reflect_root(i, R.root(id));
        bool neg = std::all_of(img.begin(), img.end(), [](int c) { return c <= 0; });
        if (neg && R.root(id) != alpha) {
          res.pass = false;
          res.detail = "reflection sent an unexpected root negative";
          return res;
        }
      }
    }
  }
  res.detail = std::to_string(detail::supported_systems(max_rank).size()) +
               " systems checked";
  return res;
}

inline SuiteResult check_structure_constants(int max_rank = 8) {
  SuiteResult res{"structure constants", true, ""};
  int systems = 0;
  for (auto [k, n] : detail::supported_systems(max_rank)) {
    RootSystem R = RootSystem::build(k, n);
    ChevalleyBasis cb = ChevalleyBasis::build(R);  // validates |N| = p+1 throughout
    long bad = jacobi_violation_count(R, cb);
    ++systems;
    if (bad != 0) {
      res.pass = false;
      res.detail = std::string(1, kind_char(k)) + std::to_string(n) + ": " +
                   std::to_string(bad) + " Jacobi violations";
      return res;
    }
  }
  res.detail = "Jacobi identity exhaustive over " + std::to_string(systems) +
               " systems, zero violations";
  return res;
}

inline SuiteResult check_case_grid(int max_rank = 8) {
  SuiteResult res{"case grid", true, ""};
  int cases = 0;
  for (const CaseId& id : survey_grid(max_rank)) {
    CaseAnalysis A = analyze_case(id.kind, id.rank, id.node);
    ++cases;
    auto fail = [&](const std::string& what) {
      res.pass = false;
      res.detail = case_name(id) + ": " + what;
    };
    if (static_cast<int>(A.orbits.size()) != expected_orbit_count(id)) {
      fail("orbit count " + std::to_string(A.orbits.size()) + ", expected " +
           std::to_string(expected_orbit_count(id)));
      return res;
    }
    if (A.unitarity.w0_negates_lambda != expected_w0_negates(id)) {
      fail("w0 test disagrees with the survey table");
      return res;
    }
    auto want = expected_packets(A.family, id.rank, A.r());
    for (int j = 0; j <= A.r(); ++j) {
      std::vector<std::string> got;
      for (int s : A.packets[j]) got.push_back(A.simples[s].label());
      if (got != want[j]) {
        fail("packet of orbit " + std::to_string(j) + " differs");
        return res;
      }
    }
    for (size_t i = 1; i < A.orbits.size(); ++i)
      if (A.orbits[i].dim <= A.orbits[i - 1].dim) {
        fail("orbit dimensions not strictly increasing");
        return res;
      }
  }
  res.detail = std::to_string(cases) + " cases analysed";
  return res;
}

inline SuiteResult check_mutation_detector() {
  SuiteResult res{"mutation detector", true, ""};
  RootSystem R = RootSystem::build(Kind::C, 3);
  ChevalleyBasis cb = ChevalleyBasis::build(R);
  if (jacobi_violation_count(R, cb) != 0) {
    res.pass = false;
    res.detail = "clean basis already violates Jacobi";
    return res;
  }
  auto& table = cb.mutable_table();
  for (auto& [key, val] : table) {
    if (val != 0) {
      val = -val;
      break;
    }
  }
  if (jacobi_violation_count(R, cb) == 0) {
    res.pass = false;
    res.detail = "sign flip in the constant table went unnoticed";
    return res;
  }
  res.detail = "sign flip caught by the Jacobi scan";
  return res;
}

inline std::vector<SuiteResult> run_selftest(int max_rank = 8) {
  return {check_root_systems(max_rank), check_structure_constants(max_rank),
          check_case_grid(max_rank), check_mutation_detector()};
}

}  // namespace parorbit
