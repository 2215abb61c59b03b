// Commuting pairs of sl2 triples attached to complementary segments of the
// canonical chain, the h-sum criterion against 2*lambda, and the resulting
// spherical-unitarity verdict for the family attached to the marked node.
#pragma once

#include <string>
#include <vector>

#include "parorbit/chevalley.hpp"
#include "parorbit/orbits.hpp"
#include "parorbit/parabolic.hpp"

namespace parorbit {

struct ArthurCertificate {
  int orbit = 0;                 // i: triple built on the first i chain roots
  LieTriple triple;              // for the orbit closure
  LieTriple dual_triple;         // for the dual orbit, on the remaining roots
  bool sl2_ok = false;           // both triples satisfy the sl2 relations
  bool commuting = false;        // all nine cross brackets vanish
  bool h_sum_is_2lambda = false; // h + h' == 2 lambda
  bool valid = false;
};

inline ArthurCertificate arthur_pair_check(const RootSystem& R, const ChevalleyBasis& cb,
                                           const ParabolicDatum& P,
                                           const std::vector<int>& chain, int i) {
  int r = static_cast<int>(chain.size());
  check_consistent(i >= 0 && i <= r, "orbit index out of range");
  ArthurCertificate c;
  c.orbit = i;
  c.triple = adapted_triple(R, {chain.begin(), chain.begin() + i});
  c.dual_triple = adapted_triple(R, {chain.begin() + i, chain.end()});
  c.sl2_ok = sl2_relations_hold(R, cb, c.triple) &&
             sl2_relations_hold(R, cb, c.dual_triple);

  c.commuting = true;
  const AlgebraElement parts[3] = {c.triple.e, AlgebraElement::from_cartan(c.triple.h),
                                   c.triple.f};
  const AlgebraElement duals[3] = {c.dual_triple.e,
                                   AlgebraElement::from_cartan(c.dual_triple.h),
                                   c.dual_triple.f};
  for (const auto& a : parts)
    for (const auto& b : duals)
      if (!bracket(R, cb, a, b).is_zero()) c.commuting = false;

  c.h_sum_is_2lambda = (c.triple.h + c.dual_triple.h) == 2 * P.lambda;
  c.valid = c.sl2_ok && c.commuting && c.h_sum_is_2lambda;
  return c;
}

enum class Verdict { AllUnitary, NoHermitian };

inline std::string verdict_name(Verdict v) {
  return v == Verdict::AllUnitary ? "all-unitary" : "no-hermitian-representations";
}

struct UnitarityReport {
  bool w0_negates_lambda = false;
  Verdict verdict = Verdict::NoHermitian;
  std::vector<ArthurCertificate> certificates;
  std::vector<std::string> notes;  // split-group families behind the verdict
};

// The distinguished-family notes quote Langlands data for the two cases whose
// dual group has a non-central longest element yet still satisfies the h-sum
// criterion; everywhere else centrality or its failure decides directly.
inline std::vector<std::string> residual_family_notes(const ParabolicDatum& P) {
  std::vector<std::string> notes;
  int n = P.rank;
  if (P.kind == Kind::A && 2 * P.node == n + 1) {
    int half = P.node;
    notes.push_back(
        "orbit k <-> Langlands quotient of Ind_{GL(1)^{" + std::to_string(half) +
        "-k} x GL(2)^k x GL(1)^{" + std::to_string(half) +
        "-k}}^{GL(" + std::to_string(2 * half) +
        ",F)}(St (x) |det|^nu), nu = ((1/2)^{" + std::to_string(half) +
        "-k}, 0^{2k}, (-1/2)^{" + std::to_string(half) + "-k})");
  }
  if (P.kind == Kind::D && P.node == 1 && n % 2 == 1) {
    notes.push_back(
        "middle orbit <-> Langlands quotient of Ind_{GL(2) x GL(1)^{" +
        std::to_string(n - 2) + "}}^{PSO(" + std::to_string(2 * n) +
        ",F)}(St (x) |det|^nu), nu = (1/2, 1/2, 0^{" + std::to_string(n - 2) + "})");
  }
  return notes;
}

inline UnitarityReport unitarity_report(const RootSystem& R, const ChevalleyBasis& cb,
                                        const ParabolicDatum& P,
                                        const std::vector<int>& chain) {
  UnitarityReport rep;
  rep.w0_negates_lambda = w0_negates(R, P.lambda);
  int r = static_cast<int>(chain.size());
  for (int i = 0; i <= r; ++i)
    rep.certificates.push_back(arthur_pair_check(R, cb, P, chain, i));

  // The pair criterion must agree with the reflection-group test uniformly:
  // the h-sum is independent of the split point.
  for (const auto& c : rep.certificates)
    check_consistent(c.valid == rep.w0_negates_lambda,
                     "certificate validity disagrees with w0 test");

  rep.verdict = rep.w0_negates_lambda ? Verdict::AllUnitary : Verdict::NoHermitian;
  if (rep.verdict == Verdict::AllUnitary) rep.notes = residual_family_notes(P);
  return rep;
}

}  // namespace parorbit
