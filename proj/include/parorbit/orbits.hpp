// Orbit classification on the abelian radical: the canonical chain of
// strongly orthogonal weights, orbit representatives and dimensions (computed
// two independent ways), component groups of the isotropy, and the labels of
// the ambient nilpotent orbits through the weighted Dynkin vector of the
// partial coroot sums.
#pragma once

#include <string>
#include <vector>

#include "parorbit/chevalley.hpp"
#include "parorbit/parabolic.hpp"
#include "parorbit/rootsys.hpp"
#include "parorbit/weyl.hpp"

namespace parorbit {

// Case families for the table-driven parts (isotropy component groups,
// orbit label schemes, sheaf-theoretic fixtures).
enum class CaseFamily {
  Tensor,     // type A, any node: hom of two GL standard modules
  Sym2,       // type C, node n: symmetric matrices
  StdOdd,     // type B, node 1: odd quadric module
  StdEven,    // type D, node 1: even quadric module
  Alt2,       // type D, node n-1 or n: alternating matrices
  HalfSpin,   // E6, node 1 or 6
  E7Fund,     // E7, node 7
};

inline CaseFamily case_family(const ParabolicDatum& P) {
  switch (P.kind) {
    case Kind::A: return CaseFamily::Tensor;
    case Kind::C:
      if (P.node == P.rank) return CaseFamily::Sym2;
      break;
    case Kind::B:
      if (P.node == 1) return CaseFamily::StdOdd;
      break;
    case Kind::D:
      if (P.node == 1) return CaseFamily::StdEven;
      if (P.node == P.rank || P.node == P.rank - 1) return CaseFamily::Alt2;
      break;
    case Kind::E:
      if (P.rank == 6 && (P.node == 1 || P.node == 6)) return CaseFamily::HalfSpin;
      if (P.rank == 7 && P.node == 7) return CaseFamily::E7Fund;
      break;
  }
  throw ConsistencyError("no case family for abelian node " + std::to_string(P.node));
}

// Greedy chain: start from the highest root and repeatedly take the unique
// coefficientwise-maximal level-1 root orthogonal to everything chosen.
inline std::vector<int> canonical_string(const RootSystem& R, const ParabolicDatum& P) {
  require_abelian(R, P);
  std::vector<int> chain;
  std::vector<int> pool = P.level_one;
  while (!pool.empty()) {
    int best = -1;
    for (int cand : pool) {
      bool top = true;
      for (int other : pool) {
        if (other == cand) continue;
        for (int k = 0; k < R.rank(); ++k)
          if (R.root(other)[k] > R.root(cand)[k]) { top = false; break; }
        if (!top) break;
      }
      if (top) {
        check_consistent(best < 0, "canonical string: maximal root not unique");
        best = cand;
      }
    }
    check_consistent(best >= 0, "canonical string: no maximal root");
    if (chain.empty())
      check_consistent(best == R.highest_root(), "chain must start at highest root");
    chain.push_back(best);
    std::vector<int> next;
    for (int id : pool)
      if (R.form(R.root(id), R.root(best)) == 0) next.push_back(id);
    pool = std::move(next);
  }
  for (size_t i = 0; i < chain.size(); ++i)
    for (size_t j = i + 1; j < chain.size(); ++j)
      check_consistent(strongly_orthogonal(R, R.root(chain[i]), R.root(chain[j])),
                       "canonical string not strongly orthogonal");
  return chain;
}

enum class ComponentGroup { Trivial, Z2 };

inline std::string component_group_name(ComponentGroup g) {
  return g == ComponentGroup::Trivial ? "trivial" : "Z/2";
}

// Isotropy component groups per case; these are cited case tables, with the
// computable parts corroborated in orbit_table below.
inline ComponentGroup component_group(CaseFamily fam, int i, int r) {
  switch (fam) {
    case CaseFamily::Tensor:
    case CaseFamily::Alt2:
    case CaseFamily::HalfSpin:
      return ComponentGroup::Trivial;
    case CaseFamily::Sym2:
      return i >= 1 ? ComponentGroup::Z2 : ComponentGroup::Trivial;
    case CaseFamily::StdOdd:
    case CaseFamily::StdEven:
      return i == 2 ? ComponentGroup::Z2 : ComponentGroup::Trivial;
    case CaseFamily::E7Fund:
      return i == r ? ComponentGroup::Z2 : ComponentGroup::Trivial;
  }
  return ComponentGroup::Trivial;
}

// Partition rendered like (3,2^2,1^4); exponent 1 is left implicit.
inline std::string partition_string(const std::vector<std::pair<int, int>>& parts) {
  std::string s = "(";
  bool first = true;
  for (auto [part, mult] : parts) {
    if (mult <= 0) continue;
    if (!first) s += ",";
    first = false;
    s += std::to_string(part);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s + ")";
}

inline std::string g_orbit_label(CaseFamily fam, const ParabolicDatum& P, int i) {
  int n = P.rank;
  switch (fam) {
    case CaseFamily::Tensor:
      return partition_string({{2, i}, {1, n + 1 - 2 * i}});
    case CaseFamily::Sym2:
      return partition_string({{2, i}, {1, 2 * (n - i)}});
    case CaseFamily::StdOdd: {
      int m = 2 * n - 1;
      if (i == 0) return partition_string({{1, m + 2}});
      if (i == 1) return partition_string({{2, 2}, {1, m - 2}});
      return partition_string({{3, 1}, {1, m - 1}});
    }
    case CaseFamily::StdEven: {
      int m = 2 * n - 2;
      if (i == 0) return partition_string({{1, m + 2}});
      if (i == 1) return partition_string({{2, 2}, {1, m - 2}});
      return partition_string({{3, 1}, {1, m - 1}});
    }
    case CaseFamily::Alt2:
      return partition_string({{2, 2 * i}, {1, 2 * n - 4 * i}});
    case CaseFamily::HalfSpin: {
      static const char* names[] = {"1", "A1", "2A1"};
      return names[i];
    }
    case CaseFamily::E7Fund: {
      static const char* names[] = {"1", "A1", "2A1", "(3A1)''"};
      return names[i];
    }
  }
  return "?";
}

struct OrbitDatum {
  int index = 0;
  std::vector<int> rep_roots;        // prefix of the canonical string
  int dim_tangent = 0;               // rank of the Levi action at the representative
  int dim_coset = 0;                 // l(w) + l(w') for the matching double coset
  int dim = 0;
  int dual_index = 0;                // Piasetskii dual: r - i
  ComponentGroup component = ComponentGroup::Trivial;
  std::string g_label;
  Coweight weighted_dynkin;          // dominant representative of the coroot sum
  CosetRep coset;                    // minimal double-coset representative data
};

inline std::vector<OrbitDatum> orbit_table(const RootSystem& R, const ChevalleyBasis& cb,
                                           const ParabolicDatum& P,
                                           const std::vector<int>& chain) {
  CaseFamily fam = case_family(P);
  int r = static_cast<int>(chain.size());
  int node0 = P.node - 1;

  // Double cosets of the Weyl stabilizer pair, matched to orbits by dimension.
  DoubleCosets dc = double_cosets(R, P.J, P.lambda);
  std::vector<CosetRep> reps;
  for (const auto& block : dc.blocks) {
    std::vector<Coweight> elems;
    for (int idx : block) elems.push_back(dc.orbit[idx]);
    reps.push_back(minimal_coset_rep(R, P.J, P.lambda, elems));
  }
  std::sort(reps.begin(), reps.end(),
            [](const CosetRep& a, const CosetRep& b) { return a.dimension < b.dimension; });
  check_consistent(static_cast<int>(reps.size()) == r + 1,
                   "double coset count != chain length + 1");
  for (int i = 0; i + 1 <= r; ++i)
    check_consistent(reps[i].dimension < reps[i + 1].dimension,
                     "double coset dimensions not strictly increasing");

  std::vector<OrbitDatum> table;
  for (int i = 0; i <= r; ++i) {
    OrbitDatum o;
    o.index = i;
    o.rep_roots.assign(chain.begin(), chain.begin() + i);

    AlgebraElement x = AlgebraElement::zero(R.rank());
    for (int id : o.rep_roots) x.roots[sroot(id, +1)] = 1;
    o.dim_tangent = orbit_dimension_tangent(R, cb, x, node0);

    o.coset = reps[i];
    o.dim_coset = reps[i].dimension;
    check_consistent(o.dim_tangent == o.dim_coset,
                     "orbit dimension mismatch between tangent and coset methods");
    o.dim = o.dim_tangent;

    o.dual_index = r - i;
    o.component = component_group(fam, i, r);
    o.g_label = g_orbit_label(fam, P, i);

    Coweight h = Coweight::zero(R.rank());
    for (int id : o.rep_roots) h += R.coroot(id);
    o.weighted_dynkin = dominant_representative(R, h).first;

    table.push_back(std::move(o));
  }

  check_consistent(table.back().dim == static_cast<int>(P.level_one.size()),
                   "open orbit must fill the module");

  // Corroborating connectedness checks on the cited component groups:
  // the zero orbit is a point, and the minimal orbit is the highest-weight
  // orbit of a module over a Levi with a one-dimensional central torus, so
  // both isotropy groups are connected whenever that Levi has no GL block
  // mixing with the scaling action.
  check_consistent(table[0].component == ComponentGroup::Trivial,
                   "zero orbit isotropy must be connected");
  if (fam == CaseFamily::StdOdd || fam == CaseFamily::StdEven ||
      fam == CaseFamily::HalfSpin || fam == CaseFamily::E7Fund) {
    if (r >= 1)
      check_consistent(table[1].component == ComponentGroup::Trivial,
                       "highest-weight orbit isotropy must be connected");
  }
  // Open orbit in codimension >= 2: complement small, isotropy connected.
  if (static_cast<int>(P.level_one.size()) - table[r - 1 >= 0 ? r - 1 : 0].dim >= 2 && r >= 1)
    check_consistent(table[r].component == ComponentGroup::Trivial,
                     "open orbit isotropy must be connected in codim >= 2");

  // Labels must separate orbits, and so must the weighted Dynkin vectors.
  for (int i = 0; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) {
      check_consistent(table[i].g_label != table[j].g_label, "orbit labels collide");
      check_consistent(!(table[i].weighted_dynkin == table[j].weighted_dynkin),
                       "weighted Dynkin vectors collide");
    }
  return table;
}

// A case is regular when the complement of the open orbit has codimension 1.
inline bool regular_prehomogeneous(const std::vector<OrbitDatum>& orbits, int dim_v) {
  int r = static_cast<int>(orbits.size()) - 1;
  if (r == 0) return dim_v == 0;
  return dim_v - orbits[r - 1].dim == 1;
}

}  // namespace parorbit
