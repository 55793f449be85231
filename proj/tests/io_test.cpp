#include <gtest/gtest.h>

#include "antimagic/errors.hpp"
#include "antimagic/io.hpp"

using namespace antimagic;

TEST(Io, GraphRoundTrip) {
  for (const Graph& g : {friendship_corona(3, 2), fan_corona(4, 1), corona(path(3), complete(3)), cycle(5)}) {
    const Graph back = graph_from_json(graph_to_json(g));
    EXPECT_TRUE(back == g);
    EXPECT_EQ(back.content_hash(), g.content_hash());
    EXPECT_EQ(back.family(), g.family());
  }
}

TEST(Io, CertificateRoundTrip) {
  const auto r = construct_odd(5);
  const Certificate back = certificate_from_json(certificate_to_json(r.certificate));
  EXPECT_EQ(back.graph_hash, r.certificate.graph_hash);
  EXPECT_EQ(back.labeling, r.certificate.labeling);
  EXPECT_EQ(back.weights, r.certificate.weights);
  EXPECT_EQ(back.color_count, r.certificate.color_count);
  EXPECT_EQ(back.verdict, r.certificate.verdict);
  EXPECT_TRUE(verify_certificate(back, r.graph));
}

TEST(Io, CertificateIsAlsoALabeling) {
  const auto r = construct_odd(3);
  const auto doc = labeling_from_json(certificate_to_json(r.certificate));
  EXPECT_EQ(doc.labeling, r.certificate.labeling);
  const auto again = labeling_from_json(labeling_to_json(doc.graph_hash, doc.labeling));
  EXPECT_EQ(again.labeling, doc.labeling);
}

TEST(Io, SearchOutcomeRoundTrip) {
  const Graph g = friendship_corona(2, 1);
  const SearchOutcome o = exact_chi_la(g);
  const SearchOutcome back = search_outcome_from_json(search_outcome_to_json(o));
  EXPECT_EQ(back.status, o.status);
  EXPECT_EQ(back.colors, o.colors);
  EXPECT_EQ(back.nodes_explored, o.nodes_explored);
  ASSERT_TRUE(back.certificate);
  EXPECT_EQ(back.certificate->labeling, o.certificate->labeling);
}

TEST(Io, ViolationVerdictSurvives) {
  const Graph g = path(2);
  const Certificate c = make_certificate(g, EdgeLabeling({1}));
  const Certificate back = certificate_from_json(certificate_to_json(c));
  EXPECT_EQ(back.verdict.violation, std::optional<EdgeId>(0));
}

TEST(Io, ParseErrorsNameTheLocation) {
  EXPECT_THROW(graph_from_json("not json"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"kind":"graph","p":1,"edges":[]})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"schema_version":"2.0","kind":"graph","p":1,"edges":[]})"),
               ParseError);
  std::string text = graph_to_json(path(3));
  const auto pos = text.find("\"edges\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 7, "\"edgez\"");
  try {
    graph_from_json(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("edges"), std::string::npos) << e.what();
  }
  EXPECT_THROW(labeling_from_json(R"({"schema_version":"1.0","kind":"labeling","graph_hash":"x","labels":[1,"a"]})"),
               ParseError);
}

TEST(Io, SweepCsv) {
  const std::string csv = sweep_to_csv(sweep_lemma21(2, 1));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "name,n,m,r,lhs,rhs,holds");
  EXPECT_NE(csv.find("l21_hub_weight,2,1,"), std::string::npos);
  EXPECT_NE(sweep_to_json(sweep_lemma22(3, 1)).find("l22_case2_bound"), std::string::npos);
}

TEST(Io, DotCarriesNamesAndLabels) {
  const auto r = construct_odd(3);
  const std::string dot = to_dot(r.graph, &r.certificate.labeling);
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  EXPECT_NE(dot.find("u^1_1"), std::string::npos);
  EXPECT_NE(dot.find("64"), std::string::npos);
  EXPECT_NE(to_dot(r.graph).find("--"), std::string::npos);
}

TEST(Io, ReportsSerialize) {
  const std::string cr = construction_report_to_json(construct_even(6));
  EXPECT_NE(cr.find("\"closed_forms\""), std::string::npos);
  EXPECT_NE(cr.find("\"caption_colors\""), std::string::npos);
  const std::string br = bound_report_to_json(bound_report(GraphFamily::FriendshipCorona, 3, 1));
  EXPECT_NE(br.find("\"exact\""), std::string::npos);
}
