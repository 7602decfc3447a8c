#include <gtest/gtest.h>

#include <random>

#include "ontoq/lexical_index.hpp"
#include "test_support.hpp"

namespace ontoq {
namespace {

class FixtureLexicon : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { corpus_ = new Corpus(testing::fixture_corpus()); }
  static void TearDownTestSuite() { delete corpus_; }
  static const LexicalIndex& lex() { return corpus_->lexical(); }
  static Corpus* corpus_;
};
Corpus* FixtureLexicon::corpus_ = nullptr;

std::vector<std::pair<std::string, int>> ids_and_tiers(const std::vector<AutocompleteMatch>& matches) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& m : matches) out.emplace_back(m.term, m.tier);
  return out;
}

TEST_F(FixtureLexicon, EntryCount) {
  EXPECT_EQ(lex().entries().size(), 10u);
  const auto names = std::count_if(lex().entries().begin(), lex().entries().end(),
                                   [](const LexicalEntry& e) { return e.kind == MatchKind::name; });
  EXPECT_EQ(names, 9);
}

TEST_F(FixtureLexicon, Ret) {
  EXPECT_EQ(ids_and_tiers(lex().autocomplete("ret", 10)),
            (std::vector<std::pair<std::string, int>>{
                {"ZFA:0000002", 2}, {"GO:0000003", 2}, {"ZFA:0000003", 2}, {"GO:0000004", 3}}));
}

TEST_F(FixtureLexicon, Eye) {
  const auto matches = lex().autocomplete("eye", 10);
  ASSERT_EQ(matches.size(), 2u);
  EXPECT_EQ(matches[0].display_name, "eye");
  EXPECT_EQ(matches[0].tier, 1);
  EXPECT_EQ(matches[1].display_name, "eye development");
  EXPECT_EQ(matches[1].tier, 2);
}

TEST_F(FixtureLexicon, SynonymMatch) {
  const auto matches = lex().autocomplete("RPE", 10);
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].term, "ZFA:0000003");
  EXPECT_EQ(matches[0].tier, 4);
  EXPECT_EQ(matches[0].matched_kind, MatchKind::synonym);
  EXPECT_EQ(matches[0].matched_text, "RPE");
  EXPECT_EQ(matches[0].display_name, "retinal pigmented epithelium");
}

TEST_F(FixtureLexicon, NoMatchAndCaseFolding) {
  EXPECT_TRUE(lex().autocomplete("zzzz", 10).empty());
  EXPECT_EQ(lex().autocomplete("  ReT ", 10), lex().autocomplete("ret", 10));
  EXPECT_EQ(lex().autocomplete("rpe", 10).size(), 1u);
}

TEST_F(FixtureLexicon, LimitAndOntologyFilter) {
  EXPECT_EQ(lex().autocomplete("ret", 1).size(), 1u);
  const auto go = lex().autocomplete("ret", 10, "go-mini");
  EXPECT_EQ(ids_and_tiers(go), (std::vector<std::pair<std::string, int>>{{"GO:0000003", 2}, {"GO:0000004", 3}}));
  EXPECT_TRUE(lex().autocomplete("ret", 10, "nope").empty());
}

TEST_F(FixtureLexicon, MultiWordQuery) {
  const auto matches = lex().autocomplete("retina dev", 10);
  ASSERT_EQ(matches.size(), 1u);
  EXPECT_EQ(matches[0].term, "GO:0000003");
}

TEST_F(FixtureLexicon, Errors) {
  EXPECT_THROW(lex().autocomplete("   ", 10), EmptyQueryError);
  EXPECT_THROW(lex().autocomplete("", 10), EmptyQueryError);
  EXPECT_THROW(lex().autocomplete("ret", 0), std::invalid_argument);
}

TEST(LexicalIndex, EmptyIndex) {
  const auto index = OntologyIndex::build({});
  const auto lex = LexicalIndex::build(index);
  EXPECT_TRUE(lex.entries().empty());
  EXPECT_TRUE(lex.autocomplete("a", 5).empty());
}

TEST(LexicalIndex, ObsoleteTerms) {
  const std::vector<ParsedOntology> docs{parse_obo_document(
      "o.obo", "[Term]\nid: A:1\nname: old thing\nsynonym: \"relic\" BROAD []\nis_obsolete: true\n"
               "[Term]\nid: A:2\nname: new thing\n")};
  const auto index = OntologyIndex::build(docs);
  const auto hidden = LexicalIndex::build(index);
  EXPECT_EQ(hidden.entries().size(), 1u);
  EXPECT_TRUE(hidden.autocomplete("old", 5).empty());
  const auto shown = LexicalIndex::build(index, true);
  EXPECT_EQ(shown.entries().size(), 3u);
  ASSERT_EQ(shown.autocomplete("old", 5).size(), 1u);
  EXPECT_EQ(shown.autocomplete("old", 5)[0].term, "A:1");
}

std::string random_query(std::mt19937_64& rng, const std::vector<testing::OracleTerm>& terms) {
  const auto& t = terms[rng() % terms.size()];
  std::string source = t.name;
  if (!t.synonyms.empty() && rng() % 3 == 0) source = t.synonyms[rng() % t.synonyms.size()];
  if (source.empty()) source = "x";
  std::size_t start = 0;
  if (rng() % 2) {
    const auto space = source.find(' ', rng() % source.size());
    if (space != std::string::npos) start = space + 1;
  }
  if (start >= source.size()) start = 0;
  const std::size_t len = 1 + rng() % (source.size() - start);
  std::string q = source.substr(start, len);
  if (rng() % 4 == 0) q[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(q[0])));
  if (rng() % 10 == 0) q = " " + q + " ";
  if (rng() % 20 == 0) q = "qqq";
  return q;
}

TEST(LexicalIndexProperties, MatchesLinearScan) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 5; ++round) {
    testing::RandomDagOptions options;
    options.nodes = 300;
    const std::vector<ParsedOntology> docs{testing::random_dag(rng, options)};
    const auto index = OntologyIndex::build(docs);
    const auto lex = LexicalIndex::build(index);
    const auto terms = testing::oracle_terms(docs);
    for (int i = 0; i < 100; ++i) {
      const auto q = random_query(rng, terms);
      const std::size_t limit = 1 + rng() % 30;
      ASSERT_EQ(lex.autocomplete(q, limit), testing::linear_scan_autocomplete(terms, q, limit, std::nullopt))
          << "query '" << q << "' limit " << limit;
    }
  }
}

TEST(LexicalIndexProperties, PrefixMonotonicity) {
  std::mt19937_64 rng(23);
  testing::RandomDagOptions options;
  options.nodes = 300;
  const std::vector<ParsedOntology> docs{testing::random_dag(rng, options)};
  const auto index = OntologyIndex::build(docs);
  const auto lex = LexicalIndex::build(index);
  const auto terms = testing::oracle_terms(docs);
  for (int i = 0; i < 50; ++i) {
    const auto q = random_query(rng, terms);
    for (const auto& m : lex.autocomplete(q, 100000)) {
      if (m.tier > 3) continue;
      for (std::size_t n = 1; n < q.size(); ++n) {
        const auto prefix = q.substr(0, n);
        if (prefix.find_first_not_of(' ') == std::string::npos) continue;
        const auto shorter = lex.autocomplete(prefix, 100000);
        EXPECT_TRUE(std::any_of(shorter.begin(), shorter.end(),
                                [&](const AutocompleteMatch& s) { return s.term == m.term; }))
            << m.term << " lost for prefix '" << prefix << "' of '" << q << "'";
      }
    }
  }
}

TEST(LexicalIndexProperties, SynonymReachability) {
  std::mt19937_64 rng(29);
  testing::RandomDagOptions options;
  options.nodes = 200;
  const std::vector<ParsedOntology> docs{testing::random_dag(rng, options)};
  const auto index = OntologyIndex::build(docs);
  const auto lex = LexicalIndex::build(index);
  const auto terms = testing::oracle_terms(docs);
  auto fold = [](std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  };
  std::size_t checked = 0;
  for (const auto& t : terms) {
    for (const auto& s : t.synonyms) {
      const auto key = fold(s);
      // The tier scheme ranks any name-side hit (tiers 1-3) above a synonym,
      // so "no other name equals s" is widened to "no other name matches s".
      const bool shadowed = std::any_of(terms.begin(), terms.end(), [&](const testing::OracleTerm& o) {
        if (o.id == t.id) return false;
        const auto name = fold(o.name);
        if (name.rfind(key, 0) == 0) return true;
        for (std::size_t p = name.find(' '); p != std::string::npos; p = name.find(' ', p + 1)) {
          if (name.compare(p + 1, key.size(), key) == 0) return true;
        }
        return false;
      });
      // Another term whose synonym equals s also competes at tier 4.
      const bool tied = std::any_of(terms.begin(), terms.end(), [&](const testing::OracleTerm& o) {
        return o.id != t.id && std::any_of(o.synonyms.begin(), o.synonyms.end(),
                                           [&](const std::string& x) { return fold(x).rfind(key, 0) == 0; });
      });
      if (shadowed || tied || fold(t.name).rfind(key, 0) == 0) continue;
      const auto got = lex.autocomplete(s, 1);
      ASSERT_EQ(got.size(), 1u);
      EXPECT_EQ(got[0].term, t.id) << s;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}

}  // namespace
}  // namespace ontoq
