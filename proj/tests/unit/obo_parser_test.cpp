#include <gtest/gtest.h>

#include <cctype>
#include <random>

#include "ontoq/obo_parser.hpp"
#include "test_support.hpp"

namespace ontoq {
namespace {

TEST(ParseOboDocument, SingleTerm) {
  const auto doc = parse_obo_document("t.obo", "[Term]\nid: ZFA:0000001\nname: eye\n");
  ASSERT_EQ(doc.terms.size(), 1u);
  EXPECT_EQ(doc.terms[0].id, "ZFA:0000001");
  EXPECT_EQ(doc.terms[0].name, "eye");
  EXPECT_TRUE(doc.edges.empty());
  EXPECT_EQ(doc.ontology_key, "t");
}

TEST(ParseOboDocument, SynonymAndRelationship) {
  const auto doc = parse_obo_document("t.obo",
                                      "[Term]\n"
                                      "id: ZFA:0000003\n"
                                      "name: retinal pigmented epithelium\n"
                                      "synonym: \"RPE\" EXACT []\n"
                                      "relationship: part_of ZFA:0000002\n");
  ASSERT_EQ(doc.terms.size(), 1u);
  ASSERT_EQ(doc.terms[0].synonyms.size(), 1u);
  EXPECT_EQ(doc.terms[0].synonyms[0], (Synonym{"RPE", SynonymScope::exact}));
  ASSERT_EQ(doc.edges.size(), 1u);
  EXPECT_EQ(doc.edges[0].relation, Relation::part_of);
  EXPECT_EQ(doc.edges[0].child_id, "ZFA:0000003");
  EXPECT_EQ(doc.edges[0].parent_id, "ZFA:0000002");
}

TEST(ParseOboDocument, MissingIdReportsStanzaLine) {
  try {
    parse_obo_document("t.obo", "[Term]\nname: eye\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.file(), "t.obo");
    EXPECT_NE(e.message().find("id"), std::string::npos);
  }
}

TEST(ParseOboDocument, FixtureFiles) {
  const auto ao = parse_obo_document("mini-ao.obo", testing::read_file(testing::fixture_path("mini-ao.obo")));
  EXPECT_EQ(ao.ontology_key, "zfa-mini");
  EXPECT_EQ(ao.format_version, "1.2");
  EXPECT_EQ(ao.terms.size(), 5u);
  EXPECT_EQ(ao.edges.size(), 3u);
  const auto go = parse_obo_document("mini-go.obo", testing::read_file(testing::fixture_path("mini-go.obo")));
  EXPECT_EQ(go.ontology_key, "go-mini");
  EXPECT_EQ(go.terms.size(), 4u);
  EXPECT_EQ(go.edges.size(), 3u);
  for (const auto& e : go.edges) EXPECT_EQ(e.relation, Relation::is_a);
}

TEST(ParseOboDocument, CommentsCrlfAndIgnoredContent) {
  const std::string text =
      "format-version: 1.2\r\n"
      "ontology: demo ! trailing comment\r\n"
      "saved-by: someone\r\n"
      "\r\n"
      "[Typedef]\r\n"
      "id: part_of\r\n"
      "name: part of\r\n"
      "\r\n"
      "[Term]\r\n"
      "id: GO:0000001   \r\n"
      "name: development ! the root\r\n"
      "comment: ignored tag\r\n"
      "synonym: \"dev ! not a comment\" RELATED []\r\n"
      "xref: Wikipedia:Development\r\n"
      "relationship: adjacent_to GO:0000002 ! other label\r\n"
      "[Term]\r\n"
      "id: GO:0000002\r\n"
      "name: escaped \\! bang\r\n"
      "def: \"A definition.\" [GOC:x]\r\n";
  const auto doc = parse_obo_document("demo.obo", text);
  EXPECT_EQ(doc.ontology_key, "demo");
  ASSERT_EQ(doc.terms.size(), 2u);
  EXPECT_EQ(doc.terms[0].id, "GO:0000001");
  EXPECT_EQ(doc.terms[0].name, "development");
  ASSERT_EQ(doc.terms[0].synonyms.size(), 1u);
  EXPECT_EQ(doc.terms[0].synonyms[0].text, "dev ! not a comment");
  EXPECT_EQ(doc.terms[0].synonyms[0].scope, SynonymScope::related);
  EXPECT_EQ(doc.terms[1].name, "escaped ! bang");
  EXPECT_EQ(doc.terms[1].definition, "A definition.");
  ASSERT_EQ(doc.edges.size(), 1u);
  EXPECT_EQ(doc.edges[0].relation, Relation::other);
  EXPECT_EQ(doc.edges[0].label, "adjacent_to");
}

TEST(ParseOboDocument, ObsoleteTermMayLackName) {
  const auto doc = parse_obo_document("t.obo", "[Term]\nid: GO:1\nis_obsolete: true\n");
  ASSERT_EQ(doc.terms.size(), 1u);
  EXPECT_TRUE(doc.terms[0].obsolete);
}

struct BadLine {
  std::string text;
  std::size_t line;
  std::string needle;
};

class ParseErrorLines : public ::testing::TestWithParam<BadLine> {};

TEST_P(ParseErrorLines, ReportsOffendingLine) {
  try {
    parse_obo_document("bad.obo", GetParam().text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
    EXPECT_NE(e.message().find(GetParam().needle), std::string::npos) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Grammar, ParseErrorLines,
    ::testing::Values(
        BadLine{"[Term]\nid: A:1\nname: a\n\n[Term]\nid: A:1\nname: b\n", 6, "duplicate id"},
        BadLine{"[Term]\nid: A:1\nname: a\nsynonym: RPE EXACT []\n", 4, "synonym"},
        BadLine{"[Term]\nid: A:1\nname: a\nsynonym: \"RPE\" SOMETIMES []\n", 4, "synonym"},
        BadLine{"[Term]\nid: A:1\nname: a\nsynonym: \"RPE\" EXACT\n", 4, "synonym"},
        BadLine{"[Term]\nid: A:1\nname: a\nsynonym: \"RPE EXACT []\n", 4, "synonym"},
        BadLine{"[Term]\nid: A:1\nname: a\nrelationship: part_of\n", 4, "relationship"},
        BadLine{"[Term]\nid: A:1\nname: a\nis_a: A:1\n", 4, "self-loop"},
        BadLine{"[Term]\nid: A:1\nname: a\nrelationship: part_of A:1 ! loop\n", 4, "self-loop"},
        BadLine{"[Term]\nid: not an id\nname: a\n", 2, "invalid term id"},
        BadLine{"[Term]\nid: A:1\nid: A:2\nname: a\n", 3, "more than one id"},
        BadLine{"[Term]\nid: A:1\n", 1, "no name"},
        BadLine{"[Term]\nid: A:1\nname: a\nis_obsolete: maybe\n", 4, "is_obsolete"}),
    [](const ::testing::TestParamInfo<BadLine>& info) {
      std::string name = std::to_string(info.index) + "_";
      for (char c : info.param.needle) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
      return name;
    });

// Error locality: corrupting any single relationship line of a valid
// document is reported at exactly that line.
TEST(ParseOboDocument, InjectedMalformedLineIsLocated) {
  std::mt19937_64 rng(11);
  testing::RandomDagOptions options;
  options.nodes = 40;
  const auto doc = testing::random_dag(rng, options);
  const std::string text = to_canonical_obo(doc);
  const auto lines = [&] {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
      const auto end = text.find('\n', pos);
      out.push_back(text.substr(pos, end - pos));
      pos = end + 1;
    }
    return out;
  }();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string replacement;
    if (lines[i].rfind("relationship:", 0) == 0) {
      replacement = "relationship: part_of";
    } else if (lines[i].rfind("synonym:", 0) == 0) {
      replacement = "synonym: \"broken";
    } else {
      continue;
    }
    std::string corrupted;
    for (std::size_t j = 0; j < lines.size(); ++j) corrupted += (j == i ? replacement : lines[j]) + "\n";
    try {
      parse_obo_document("x.obo", corrupted);
      ADD_FAILURE() << "line " << i + 1 << " accepted";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), i + 1);
    }
    ++checked;
  }
  EXPECT_GT(checked, 5u);
}

TEST(ResolveReferences, StrictReportsEachDanglingEdge) {
  const auto doc = parse_obo_document(
      "t.obo", "[Term]\nid: ZFA:0000001\nname: eye\nrelationship: part_of ZFA:9999999\n");
  try {
    resolve_references(doc, ResolveMode::strict);
    FAIL() << "expected ParseErrors";
  } catch (const ParseErrors& e) {
    ASSERT_EQ(e.diagnostics().size(), 1u);
    EXPECT_EQ(e.diagnostics()[0].line, 4u);
    EXPECT_NE(e.diagnostics()[0].message.find("ZFA:9999999"), std::string::npos);
  }
}

TEST(ResolveReferences, LenientCreatesStub) {
  const auto doc = parse_obo_document(
      "t.obo", "[Term]\nid: ZFA:0000001\nname: eye\nrelationship: part_of ZFA:9999999\n");
  const auto resolved = resolve_references(doc, ResolveMode::lenient);
  ASSERT_EQ(resolved.terms.size(), 2u);
  const auto& stub = resolved.terms[1];
  EXPECT_EQ(stub.id, "ZFA:9999999");
  EXPECT_EQ(stub.name, "ZFA:9999999");
  EXPECT_FALSE(stub.obsolete);
  EXPECT_TRUE(stub.synthetic);
  EXPECT_EQ(resolved.warnings.size(), 1u);
}

TEST(ResolveReferences, ClosedDocumentUnchanged) {
  const auto doc = parse_obo_document("mini-ao.obo", testing::read_file(testing::fixture_path("mini-ao.obo")));
  EXPECT_EQ(resolve_references(doc, ResolveMode::strict), doc);
  EXPECT_EQ(resolve_references(doc, ResolveMode::lenient), doc);
}

TEST(ParseOboDocument, DeterministicAndOrderPreserving) {
  const std::string text = testing::read_file(testing::fixture_path("mini-ao.obo"));
  const auto a = parse_obo_document("a.obo", text);
  const auto b = parse_obo_document("a.obo", text);
  EXPECT_EQ(a, b);
  std::vector<std::string> ids;
  for (const auto& t : a.terms) ids.push_back(t.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"ZFA:0000001", "ZFA:0000002", "ZFA:0000003",
                                           "ZFA:0000010", "ZFA:0000011"}));
  std::vector<std::size_t> lines;
  for (const auto& e : a.edges) lines.push_back(e.line);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
}

TEST(CanonicalObo, RoundTripsFixtures) {
  for (const char* name : {"mini-ao.obo", "mini-go.obo"}) {
    const auto doc = parse_obo_document(name, testing::read_file(testing::fixture_path(name)));
    EXPECT_EQ(parse_obo_document(name, to_canonical_obo(doc)), doc) << name;
  }
}

TEST(CanonicalObo, RoundTripsRandomDocumentsWithAwkwardText) {
  std::mt19937_64 rng(3);
  for (int seed = 0; seed < 20; ++seed) {
    testing::RandomDagOptions options;
    options.nodes = 30;
    auto doc = testing::random_dag(rng, options);
    doc.terms[0].name = "name with ! bang and \"quotes\" and \\ slash ";
    doc.terms[1].definition = "def with \"quotes\" ! and [brackets]";
    doc.terms[2].synonyms.push_back({"syn ! \"odd\"", SynonymScope::narrow});
    const auto reparsed = parse_obo_document(doc.source_name, to_canonical_obo(doc));
    EXPECT_EQ(reparsed, doc);
  }
}

}  // namespace
}  // namespace ontoq
