// Maximal parabolic data attached to one marked Dynkin node: the grading of
// the positive roots by their coefficient at that node, the abelian-radical
// test, the Levi label, and the decomposition of the level-1 piece as a
// module.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parorbit/rootsys.hpp"
#include "parorbit/weyl.hpp"

namespace parorbit {

// Connected component of a sub-diagram, classified by series and rank.
struct DiagramComponent {
  char series = 'A';
  int rank = 0;
  std::vector<int> nodes;  // 0-based indexes into the ambient diagram
};

inline std::vector<DiagramComponent> classify_subdiagram(const RootSystem& R,
                                                         const std::vector<int>& J) {
  std::vector<DiagramComponent> out;
  std::set<int> left(J.begin(), J.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t q = 0; q < comp.size(); ++q)
      for (auto it = left.begin(); it != left.end();)
        if (R.cartan(comp[q], *it) != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
    std::sort(comp.begin(), comp.end());

    DiagramComponent c;
    c.nodes = comp;
    c.rank = static_cast<int>(comp.size());
    auto deg = [&](int i) {
      int d = 0;
      for (int j : comp)
        if (j != i && R.cartan(i, j) != 0) ++d;
      return d;
    };
    bool doubled = false;
    for (int i : comp)
      for (int j : comp)
        if (i != j && R.cartan(i, j) * R.cartan(j, i) == 2) doubled = true;
    if (doubled) {
      // One short simple root means B, one long means C.
      int shorts = 0;
      int min_sym = R.symmetrizer(comp[0]);
      for (int i : comp) min_sym = std::min(min_sym, R.symmetrizer(i));
      for (int i : comp)
        if (R.symmetrizer(i) == min_sym) ++shorts;
      c.series = (shorts == 1) ? 'B' : 'C';
    } else {
      int branch = -1;
      for (int i : comp)
        if (deg(i) >= 3) branch = i;
      if (branch < 0) {
        // Degenerate tails keep the ambient series, so the small Levi
        // factors read Spin(3), Sp(2), Spin(6) rather than GL(2), GL(4).
        c.series = 'A';
        bool tail = comp.back() == R.rank() - 1;
        if (c.rank == 1 && tail && (R.kind() == Kind::B || R.kind() == Kind::C))
          c.series = R.kind() == Kind::B ? 'B' : 'C';
        if (c.rank == 3 && tail && R.kind() == Kind::D &&
            comp[1] == R.rank() - 2)
          c.series = 'D';
      } else {
        // Sorted branch lengths distinguish D from E.
        std::vector<int> lens;
        for (int j : comp) {
          if (j == branch || R.cartan(branch, j) == 0) continue;
          int len = 0, prev = branch, cur = j;
          for (;;) {
            ++len;
            int next = -1;
            for (int k : comp)
              if (k != prev && k != cur && R.cartan(cur, k) != 0) next = k;
            if (next < 0) break;
            prev = cur;
            cur = next;
          }
          lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        c.series = (lens.size() == 3 && lens[0] == 1 && lens[1] == 1) ? 'D' : 'E';
      }
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const DiagramComponent& a, const DiagramComponent& b) {
    return a.nodes < b.nodes;
  });
  return out;
}

struct ParabolicDatum {
  Kind kind{};
  int rank = 0;
  int node = 0;  // 1-based marked node
  Coweight lambda;
  std::vector<int> J;              // complementary simple nodes, 0-based
  std::vector<int> level;          // per positive root id
  std::vector<int> level_one;      // ids of weight vectors spanning the radical
  bool abelian = false;
  std::optional<int> witness;      // a level >= 2 root when not abelian
  std::string levi_label;
};

inline std::string levi_label_for(const RootSystem& R, int node,
                                  const std::vector<int>& J) {
  auto comps = classify_subdiagram(R, J);
  if (R.kind() == Kind::A) {
    // Two GL blocks of sizes node and n+1-node; an empty side is GL(1).
    int n = R.rank() + 1;
    return "GL(" + std::to_string(node) + ")xGL(" + std::to_string(n - node) + ")";
  }
  std::string out;
  bool has_gl = false;
  for (const auto& c : comps) {
    std::string piece;
    switch (c.series) {
      case 'A': piece = "GL(" + std::to_string(c.rank + 1) + ")"; has_gl = true; break;
      case 'B': piece = "Spin(" + std::to_string(2 * c.rank + 1) + ")"; break;
      case 'C': piece = "Sp(" + std::to_string(2 * c.rank) + ")"; break;
      case 'D': piece = "Spin(" + std::to_string(2 * c.rank) + ")"; break;
      case 'E': piece = "E" + std::to_string(c.rank); break;
    }
    if (!out.empty()) out += "x";
    out += piece;
  }
  if (comps.empty()) return "GL(1)";
  if (!has_gl) {
    // Central torus shown explicitly; E-type Levi conventionally lists it last.
    if (comps.front().series == 'E') return out + "xGL(1)";
    return "GL(1)x" + out;
  }
  return out;
}

inline ParabolicDatum parabolic_from_node(const RootSystem& R, int node) {
  if (node < 1 || node > R.rank())
    throw ConfigError("node " + std::to_string(node) + " out of range for " + R.name());
  ParabolicDatum P;
  P.kind = R.kind();
  P.rank = R.rank();
  P.node = node;
  P.lambda = R.fundamental_coweight(node - 1);
  for (int j = 0; j < R.rank(); ++j)
    if (j != node - 1) P.J.push_back(j);
  P.level.resize(R.num_positive());
  for (int id = 0; id < R.num_positive(); ++id) {
    int lv = R.root(id)[node - 1];
    check_consistent(lv == R.pairing(P.lambda, id), "level != pairing");
    P.level[id] = lv;
    if (lv == 1) P.level_one.push_back(id);
    if (lv >= 2 && !P.witness) P.witness = id;
  }
  P.abelian = !P.witness.has_value();
  P.levi_label = levi_label_for(R, node, P.J);
  return P;
}

inline void require_abelian(const RootSystem& R, const ParabolicDatum& P) {
  if (P.abelian) return;
  throw NonAbelianError("node " + std::to_string(P.node) + " of " + R.name() +
                            " has a non-abelian radical; witness root of level >= 2: " +
                            R.root_string(R.root(*P.witness)),
                        R.root_string(R.root(*P.witness)));
}

// Decomposition of the level-1 piece into irreducible summands, grouped by
// the shape of the weight over the non-Levi node; with one marked node the
// shape is constant, so there is exactly one summand.
struct ModuleSummand {
  int highest_root = -1;  // id of the coefficientwise-maximal weight
  int dimension = 0;
};

inline std::vector<ModuleSummand> module_decomposition(const RootSystem& R,
                                                       const ParabolicDatum& P) {
  std::vector<ModuleSummand> out;
  if (P.level_one.empty()) return out;
  ModuleSummand s;
  s.dimension = static_cast<int>(P.level_one.size());
  for (int id : P.level_one) {
    bool top = true;
    for (int other : P.level_one) {
      if (other == id) continue;
      bool geq = true;
      for (int k = 0; k < R.rank(); ++k)
        if (R.root(id)[k] < R.root(other)[k]) { geq = false; break; }
      if (!geq) { top = false; break; }
    }
    if (top) {
      check_consistent(s.highest_root < 0, "summand has two maximal weights");
      s.highest_root = id;
    }
  }
  check_consistent(s.highest_root >= 0, "summand has no maximal weight");
  out.push_back(s);
  return out;
}

}  // namespace parorbit
