// One-call analysis of a marked Dynkin node: builds the root system and
// structure constants, classifies the orbits on the abelian radical, runs
// the unitarity criterion, and assembles the sheaf-theoretic fixtures.
// Throws NonAbelianError when the node does not qualify.
#pragma once

#include <vector>

#include "parorbit/arthur.hpp"
#include "parorbit/chevalley.hpp"
#include "parorbit/microlocal.hpp"
#include "parorbit/orbits.hpp"
#include "parorbit/parabolic.hpp"
#include "parorbit/rootsys.hpp"
#include "parorbit/weyl.hpp"

namespace parorbit {

struct CaseAnalysis {
  RootSystem R;
  ChevalleyBasis basis;
  ParabolicDatum P;
  CaseFamily family{};
  std::vector<int> chain;
  std::vector<OrbitDatum> orbits;
  bool regular = false;
  UnitarityReport unitarity;
  std::vector<SimpleObject> simples;
  std::vector<std::vector<int>> cycles;
  std::vector<std::string> cycle_notes;
  std::vector<std::vector<int>> packets;
  FourierData fourier;
  Quiver quiver;

  int r() const { return static_cast<int>(chain.size()); }
  int dim_v() const { return static_cast<int>(P.level_one.size()); }
};

inline CaseAnalysis analyze_case(Kind kind, int rank, int node,
                                 TieBreak tie = TieBreak::Lex) {
  CaseAnalysis A;
  A.R = RootSystem::build(kind, rank);
  A.basis = ChevalleyBasis::build(A.R, tie);
  A.P = parabolic_from_node(A.R, node);
  require_abelian(A.R, A.P);
  A.family = case_family(A.P);
  A.chain = canonical_string(A.R, A.P);
  A.orbits = orbit_table(A.R, A.basis, A.P, A.chain);
  A.regular = regular_prehomogeneous(A.orbits, A.dim_v());
  A.unitarity = unitarity_report(A.R, A.basis, A.P, A.chain);

  // Regularity of the module and the reflection-group test must agree:
  // the open-orbit h equals 2 lambda exactly when the complement of the
  // open orbit is a hypersurface.
  check_consistent(A.regular == A.unitarity.w0_negates_lambda,
                   "regularity and the w0 test disagree");
  if (A.unitarity.w0_negates_lambda) {
    Coweight two_lambda = 2 * A.P.lambda;
    check_consistent(A.orbits.back().weighted_dynkin == two_lambda,
                     "open-orbit h must have weight diagram 2*lambda");
  }

  int r = A.r();
  A.simples = simple_objects(A.family, r);
  for (const auto& s : A.simples) {
    auto cc = characteristic_cycle(A.family, rank, r, s);
    check_consistent(cc[s.orbit] == 1, "cycle must contain the object's own conormal");
    for (int mult : cc)
      check_consistent(mult == 0 || mult == 1, "cycles must be multiplicity-free");
    A.cycles.push_back(std::move(cc));
  }
  A.cycle_notes = characteristic_cycle_notes(A.family);
  A.packets = derive_packets(A.cycles, r);
  for (int j = 0; j <= r; ++j)
    check_consistent(!A.packets[j].empty(), "every orbit carries a packet");
  A.fourier = fourier_involution(A.simples, A.cycles, r);
  A.quiver = case_quiver(A.family, A.P, A.simples, r);
  check_consistent(quiver_automorphism(A.quiver, A.fourier.image),
                   "transform must act on the case quiver");
  return A;
}

}  // namespace parorbit
