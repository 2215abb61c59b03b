// Serializable case report: a frozen, versioned view of one analysis.  The
// JSON layout is documented in docs/schema.md; field names here are part of
// that contract.  Serialization is deterministic (ordered fields, sorted
// provenance map) and round-trips losslessly.
#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "parorbit/analysis.hpp"
#include "parorbit/display.hpp"

namespace parorbit {

using json = nlohmann::ordered_json;

// Like NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE but templated over the json type,
// so the same structs serialize to ordered_json (insertion-ordered keys).
#define PARORBIT_JSON_TYPE(Type, ...)                                           \
  template <typename BasicJsonType>                                             \
  void to_json(BasicJsonType& nlohmann_json_j, const Type& nlohmann_json_t) {   \
    NLOHMANN_JSON_EXPAND(NLOHMANN_JSON_PASTE(NLOHMANN_JSON_TO, __VA_ARGS__))    \
  }                                                                             \
  template <typename BasicJsonType>                                             \
  void from_json(const BasicJsonType& nlohmann_json_j, Type& nlohmann_json_t) { \
    NLOHMANN_JSON_EXPAND(NLOHMANN_JSON_PASTE(NLOHMANN_JSON_FROM, __VA_ARGS__))  \
  }

struct RootDisplay {
  std::vector<int> simple;
  std::string epsilon;
  friend bool operator==(const RootDisplay&, const RootDisplay&) = default;
};
PARORBIT_JSON_TYPE(RootDisplay, simple, epsilon)

struct ReportInput {
  std::string type;
  int rank = 0;
  int node = 0;
  friend bool operator==(const ReportInput&, const ReportInput&) = default;
};
PARORBIT_JSON_TYPE(ReportInput, type, rank, node)

struct ReportLevi {
  std::string label;
  std::vector<int> nodes;  // 1-based
  friend bool operator==(const ReportLevi&, const ReportLevi&) = default;
};
PARORBIT_JSON_TYPE(ReportLevi, label, nodes)

struct ReportSummand {
  int dim = 0;
  RootDisplay highest_weight;
  friend bool operator==(const ReportSummand&, const ReportSummand&) = default;
};
PARORBIT_JSON_TYPE(ReportSummand, dim, highest_weight)

struct ReportSpace {
  int dim = 0;
  bool abelian = false;
  std::vector<ReportSummand> summands;
  friend bool operator==(const ReportSpace&, const ReportSpace&) = default;
};
PARORBIT_JSON_TYPE(ReportSpace, dim, abelian, summands)

struct ReportCounts {
  int orbits = 0;
  int double_cosets = 0;
  int chain_length = 0;
  friend bool operator==(const ReportCounts&, const ReportCounts&) = default;
};
PARORBIT_JSON_TYPE(ReportCounts, orbits, double_cosets, chain_length)

struct ReportCoset {
  std::vector<int> word;  // 1-based simple reflection letters
  int length = 0;
  std::vector<int> K;     // 1-based nodes of J cap w(J)
  int wprime_length = 0;
  friend bool operator==(const ReportCoset&, const ReportCoset&) = default;
};
PARORBIT_JSON_TYPE(ReportCoset, word, length, K, wprime_length)

struct ReportOrbit {
  int index = 0;
  int dim = 0;
  int dim_tangent = 0;
  int dim_coset = 0;
  int dual = 0;
  std::string component_group;
  std::string ambient_label;
  std::vector<int> weighted_dynkin;
  ReportCoset coset;
  friend bool operator==(const ReportOrbit&, const ReportOrbit&) = default;
};
PARORBIT_JSON_TYPE(ReportOrbit, index, dim, dim_tangent, dim_coset,
                                   dual, component_group, ambient_label,
                                   weighted_dynkin, coset)

struct ReportCertificate {
  int orbit = 0;
  bool valid = false;
  bool sl2 = false;
  bool commuting = false;
  bool h_sum_is_2lambda = false;
  std::vector<int> h;
  std::vector<int> h_dual;
  friend bool operator==(const ReportCertificate&, const ReportCertificate&) = default;
};
PARORBIT_JSON_TYPE(ReportCertificate, orbit, valid, sl2, commuting,
                                   h_sum_is_2lambda, h, h_dual)

struct ReportArthur {
  bool w0_negates_lambda = false;
  std::string verdict;
  std::vector<ReportCertificate> certificates;
  std::vector<std::string> notes;
  friend bool operator==(const ReportArthur&, const ReportArthur&) = default;
};
PARORBIT_JSON_TYPE(ReportArthur, w0_negates_lambda, verdict,
                                   certificates, notes)

struct ReportObject {
  std::string label;
  int orbit = 0;
  std::string local_system;  // "triv" or "sgn"
  friend bool operator==(const ReportObject&, const ReportObject&) = default;
};
PARORBIT_JSON_TYPE(ReportObject, label, orbit, local_system)

struct ReportCycle {
  std::string object;
  std::vector<int> conormals;  // orbit indexes carrying the cycle
  friend bool operator==(const ReportCycle&, const ReportCycle&) = default;
};
PARORBIT_JSON_TYPE(ReportCycle, object, conormals)

struct ReportPacket {
  int orbit = 0;
  std::vector<std::string> members;
  friend bool operator==(const ReportPacket&, const ReportPacket&) = default;
};
PARORBIT_JSON_TYPE(ReportPacket, orbit, members)

struct ReportFourier {
  std::vector<std::vector<std::string>> map;  // [from, to] pairs
  std::vector<std::string> fixed;
  std::vector<std::string> notes;
  friend bool operator==(const ReportFourier&, const ReportFourier&) = default;
};
PARORBIT_JSON_TYPE(ReportFourier, map, fixed, notes)

struct ReportQuiver {
  std::vector<std::vector<std::string>> arrows;
  std::vector<std::string> isolated;
  std::string relation;
  friend bool operator==(const ReportQuiver&, const ReportQuiver&) = default;
};
PARORBIT_JSON_TYPE(ReportQuiver, arrows, isolated, relation)

struct CaseReport {
  std::string schema;
  int schema_version = 0;
  ReportInput input;
  ReportLevi levi;
  ReportSpace space;
  std::vector<RootDisplay> chain;
  ReportCounts counts;
  bool regular = false;
  std::vector<ReportOrbit> orbits;
  ReportArthur arthur;
  std::vector<ReportObject> objects;
  std::vector<ReportCycle> cycles;
  std::vector<std::string> cycle_notes;
  std::vector<ReportPacket> packets;
  ReportFourier fourier;
  ReportQuiver quiver;
  std::map<std::string, std::string> provenance;
  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};
PARORBIT_JSON_TYPE(CaseReport, schema, schema_version, input, levi,
                                   space, chain, counts, regular, orbits, arthur,
                                   objects, cycles, cycle_notes, packets, fourier,
                                   quiver, provenance)

inline constexpr const char* kReportSchema = "parorbit/case-report";
inline constexpr int kReportSchemaVersion = 1;

inline CaseReport build_report(const CaseAnalysis& A) {
  CaseReport rep;
  rep.schema = kReportSchema;
  rep.schema_version = kReportSchemaVersion;
  rep.input = {std::string(1, kind_char(A.P.kind)), A.P.rank, A.P.node};

  rep.levi.label = A.P.levi_label;
  for (int j : A.P.J) rep.levi.nodes.push_back(j + 1);

  auto display = [&](const RootVec& v) {
    return RootDisplay{v, epsilon_string(A.R, v)};
  };

  rep.space.dim = A.dim_v();
  rep.space.abelian = A.P.abelian;
  for (const auto& s : module_decomposition(A.R, A.P))
    rep.space.summands.push_back({s.dimension, display(A.R.root(s.highest_root))});

  for (int id : A.chain) rep.chain.push_back(display(A.R.root(id)));

  rep.counts = {static_cast<int>(A.orbits.size()), static_cast<int>(A.orbits.size()),
                A.r()};
  rep.regular = A.regular;

  for (const auto& o : A.orbits) {
    ReportOrbit ro;
    ro.index = o.index;
    ro.dim = o.dim;
    ro.dim_tangent = o.dim_tangent;
    ro.dim_coset = o.dim_coset;
    ro.dual = o.dual_index;
    ro.component_group = component_group_name(o.component);
    ro.ambient_label = o.g_label;
    ro.weighted_dynkin = o.weighted_dynkin.c;
    for (int l : o.coset.w.letters) ro.coset.word.push_back(l + 1);
    ro.coset.length = o.coset.length;
    for (int k : o.coset.K) ro.coset.K.push_back(k + 1);
    ro.coset.wprime_length = o.coset.wprime_length;
    rep.orbits.push_back(std::move(ro));
  }

  rep.arthur.w0_negates_lambda = A.unitarity.w0_negates_lambda;
  rep.arthur.verdict = verdict_name(A.unitarity.verdict);
  for (const auto& c : A.unitarity.certificates) {
    ReportCertificate rc;
    rc.orbit = c.orbit;
    rc.valid = c.valid;
    rc.sl2 = c.sl2_ok;
    rc.commuting = c.commuting;
    rc.h_sum_is_2lambda = c.h_sum_is_2lambda;
    rc.h = c.triple.h.c;
    rc.h_dual = c.dual_triple.h.c;
    rep.arthur.certificates.push_back(std::move(rc));
  }
  rep.arthur.notes = A.unitarity.notes;

  for (size_t s = 0; s < A.simples.size(); ++s) {
    const auto& obj = A.simples[s];
    rep.objects.push_back({obj.label(), obj.orbit, obj.sgn ? "sgn" : "triv"});
    ReportCycle cyc;
    cyc.object = obj.label();
    for (int j = 0; j <= A.r(); ++j)
      if (A.cycles[s][j] != 0) cyc.conormals.push_back(j);
    rep.cycles.push_back(std::move(cyc));
  }
  rep.cycle_notes = A.cycle_notes;

  for (int j = 0; j <= A.r(); ++j) {
    ReportPacket p;
    p.orbit = j;
    for (int s : A.packets[j]) p.members.push_back(A.simples[s].label());
    rep.packets.push_back(std::move(p));
  }

  for (size_t s = 0; s < A.simples.size(); ++s)
    rep.fourier.map.push_back(
        {A.simples[s].label(), A.simples[A.fourier.image[s]].label()});
  for (int s : A.fourier.fixed_points) rep.fourier.fixed.push_back(A.simples[s].label());
  rep.fourier.notes = A.fourier.notes;

  for (auto [x, y] : A.quiver.arrows)
    rep.quiver.arrows.push_back({A.simples[x].label(), A.simples[y].label()});
  for (int s : A.quiver.isolated) rep.quiver.isolated.push_back(A.simples[s].label());
  rep.quiver.relation = A.quiver.relation;

  rep.provenance = {
      {"ambient_labels", "fixture:case-table"},
      {"arthur", "computed:bracket-evaluation"},
      {"chain", "computed:greedy-orthogonal"},
      {"component_groups", "fixture:case-table+connectedness-checks"},
      {"cycles", "fixture:case-formulas"},
      {"fourier", "derived:cycle-duality"},
      {"levi_label", "computed:subdiagram"},
      {"orbit_dims", "computed:two-methods"},
      {"packets", "derived:from-cycles"},
      {"quiver", "fixture:case-table"},
      {"space", "computed:root-grading"},
      {"verdict", "computed:reflection-test"},
      {"weighted_dynkin", "computed:coroot-sums"},
  };
  return rep;
}

inline std::string report_json_string(const CaseReport& rep) {
  json j = rep;
  return j.dump(2) + "\n";
}

inline CaseReport report_from_json_string(const std::string& text) {
  return json::parse(text).get<CaseReport>();
}

// Compact human-readable rendering; `epsilon` switches root display between
// simple-root coefficients and orthogonal coordinates.
inline std::string render_text(const CaseReport& rep, bool epsilon) {
  auto root_str = [&](const RootDisplay& d) {
    if (epsilon) return d.epsilon;
    std::string s = "(";
    for (size_t i = 0; i < d.simple.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(d.simple[i]);
    }
    return s + ")";
  };
  auto vec_str = [](const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "]";
  };
  std::string out;
  out += "case " + rep.input.type + std::to_string(rep.input.rank) + ", node " +
         std::to_string(rep.input.node) + "\n";
  out += "levi " + rep.levi.label + "; module dim " + std::to_string(rep.space.dim) +
         (rep.space.abelian ? ", abelian radical" : "") + "\n";
  out += "chain:";
  for (const auto& g : rep.chain) out += " " + root_str(g);
  out += "\n";
  out += "orbits " + std::to_string(rep.counts.orbits) + " (chain length " +
         std::to_string(rep.counts.chain_length) + ", double cosets " +
         std::to_string(rep.counts.double_cosets) + ")\n";
  out += "  i   dim  dual  pi0      ambient        h-diagram\n";
  for (const auto& o : rep.orbits) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-3d %-4d %-5d %-8s %-14s %s\n", o.index,
                  o.dim, o.dual, o.component_group.c_str(), o.ambient_label.c_str(),
                  vec_str(o.weighted_dynkin).c_str());
    out += line;
  }
  out += std::string("w0 negates lambda: ") +
         (rep.arthur.w0_negates_lambda ? "yes" : "no") + "; verdict " +
         rep.arthur.verdict + "\n";
  int valid = 0;
  for (const auto& c : rep.arthur.certificates) valid += c.valid ? 1 : 0;
  out += "pair certificates valid: " + std::to_string(valid) + "/" +
         std::to_string(rep.arthur.certificates.size()) + "\n";
  for (const auto& n : rep.arthur.notes) out += "note: " + n + "\n";
  out += "objects:";
  for (const auto& o : rep.objects) out += " " + o.label;
  out += "\ncycles:";
  for (const auto& c : rep.cycles) {
    out += " " + c.object + ":{";
    for (size_t i = 0; i < c.conormals.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(c.conormals[i]);
    }
    out += "}";
  }
  out += "\npackets:";
  for (const auto& p : rep.packets) {
    out += " O" + std::to_string(p.orbit) + ":{";
    for (size_t i = 0; i < p.members.size(); ++i) {
      if (i) out += ",";
      out += p.members[i];
    }
    out += "}";
  }
  out += "\ntransform:";
  for (const auto& m : rep.fourier.map) out += " " + m[0] + "->" + m[1];
  out += "\nquiver:";
  if (rep.quiver.arrows.empty()) {
    out += " semisimple (no arrows)";
  } else {
    for (const auto& e : rep.quiver.arrows) out += " " + e[0] + "<->" + e[1];
    if (!rep.quiver.isolated.empty()) {
      out += "; isolated:";
      for (const auto& v : rep.quiver.isolated) out += " " + v;
    }
    out += "; " + rep.quiver.relation;
  }
  out += "\n";
  return out;
}

}  // namespace parorbit
