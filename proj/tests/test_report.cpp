#include <catch2/catch_amalgamated.hpp>

#include "parorbit/report.hpp"

using namespace parorbit;

TEST_CASE("report carries schema tag and input echo") {
  CaseReport rep = build_report(analyze_case(Kind::C, 4, 4));
  CHECK(rep.schema == "parorbit/case-report");
  CHECK(rep.schema_version == 1);
  CHECK(rep.input.type == "C");
  CHECK(rep.input.rank == 4);
  CHECK(rep.input.node == 4);
  CHECK(rep.levi.label == "GL(4)");
  CHECK(rep.levi.nodes == std::vector<int>{1, 2, 3});
  CHECK(rep.space.dim == 10);
  CHECK(rep.space.abelian);
  REQUIRE(rep.space.summands.size() == 1u);
  CHECK(rep.space.summands[0].dim == 10);
  CHECK(rep.orbits.size() == 5u);
  CHECK(rep.objects.size() == 9u);
  CHECK(rep.counts.orbits == 5);
  CHECK(rep.counts.double_cosets == 5);
  CHECK(rep.counts.chain_length == 4);
}

TEST_CASE("serialization round-trips losslessly and deterministically") {
  for (auto [k, rank, node] : {std::tuple{Kind::C, 3, 3}, {Kind::B, 4, 1},
                               {Kind::A, 5, 2}, {Kind::D, 6, 6}, {Kind::E, 7, 7}}) {
    CaseReport rep = build_report(analyze_case(k, rank, node));
    std::string text = report_json_string(rep);
    CHECK(text == report_json_string(rep));
    CaseReport back = report_from_json_string(text);
    CHECK(back == rep);
    CHECK(report_json_string(back) == text);
  }
}

TEST_CASE("coset data is reported with 1-based letters and nodes") {
  CaseReport rep = build_report(analyze_case(Kind::E, 6, 1));
  REQUIRE(rep.orbits.size() == 3u);
  const ReportOrbit& o1 = rep.orbits[1];
  CHECK(o1.coset.word == std::vector<int>{1});
  CHECK(o1.coset.length == 1);
  CHECK(o1.coset.K == std::vector<int>{2, 4, 5, 6});
  CHECK(o1.coset.wprime_length == 10);
  CHECK(o1.dim == 11);
  CHECK(o1.dim_tangent == o1.dim_coset);
  CHECK(rep.orbits[0].coset.word.empty());
  CHECK(rep.orbits[2].dim == 16);
}

TEST_CASE("arthur block in the report") {
  CaseReport c = build_report(analyze_case(Kind::C, 3, 3));
  CHECK(c.arthur.w0_negates_lambda);
  CHECK(c.arthur.verdict == "all-unitary");
  REQUIRE(c.arthur.certificates.size() == 4u);
  CHECK(c.arthur.certificates[2].h == std::vector<int>{0, 1, 0});
  CHECK(c.arthur.certificates[2].h_dual == std::vector<int>{0, -1, 2});
  for (const auto& cert : c.arthur.certificates) CHECK(cert.valid);

  CaseReport e = build_report(analyze_case(Kind::E, 6, 1));
  CHECK_FALSE(e.arthur.w0_negates_lambda);
  CHECK(e.arthur.verdict == "no-hermitian-representations");
}

TEST_CASE("text rendering honors the coordinate switch") {
  CaseReport rep = build_report(analyze_case(Kind::C, 3, 3));
  std::string simple = render_text(rep, false);
  std::string eps = render_text(rep, true);
  CHECK(simple.find("(2,2,1)") != std::string::npos);
  CHECK(simple.find("2e1") == std::string::npos);
  CHECK(eps.find("2e1") != std::string::npos);
  CHECK(eps.find("2e3") != std::string::npos);
  // shared skeleton
  for (const std::string& s : {simple, eps}) {
    CHECK(s.find("GL(3)") != std::string::npos);
    CHECK(s.find("all-unitary") != std::string::npos);
    CHECK(s.find("(3)'") != std::string::npos);
  }
}

TEST_CASE("provenance map uses the fixed vocabulary") {
  CaseReport rep = build_report(analyze_case(Kind::D, 5, 1));
  for (const char* key : {"orbit_dims", "weighted_dynkin", "cycles", "packets",
                          "fourier", "arthur", "quiver", "ambient_labels"})
    REQUIRE(rep.provenance.count(key) == 1u);
  for (const auto& [key, value] : rep.provenance) {
    bool tagged = value.rfind("computed:", 0) == 0 ||
                  value.rfind("fixture:", 0) == 0 ||
                  value.rfind("derived:", 0) == 0;
    INFO(key << " -> " << value);
    CHECK(tagged);
  }
  CHECK(rep.provenance.at("packets") == "derived:from-cycles");
}

TEST_CASE("json text exposes the documented top-level keys") {
  std::string text = report_json_string(build_report(analyze_case(Kind::A, 3, 2)));
  json j = json::parse(text);
  for (const char* key : {"schema", "schema_version", "input", "levi", "space",
                          "chain", "counts", "regular", "orbits", "arthur",
                          "objects", "cycles", "cycle_notes", "packets",
                          "fourier", "quiver", "provenance"})
    CHECK(j.contains(key));
  CHECK(j["schema"] == "parorbit/case-report");
  CHECK(j.size() == 17u);
}
