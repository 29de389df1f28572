// Copyright 2026 The TIE-ML Tools Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tieml/tieml_io.h"

#include "doctest.h"
#include "test_support.h"

namespace tieml {
namespace {

ParseError ParseFailure(std::string_view input, ParseOptions options = {}) {
  try {
    Parse(input, options);
  } catch (const ParseError &e) {
    return e;
  }
  FAIL("expected a parse error for: " << input);
  return ParseError(ParseErrorKind::kMalformedXml, 0, 0, "");
}

TEST_CASE("event ids across sentences") {
  Corpus corpus = testing::ParseFixture("event_ids.tieml");
  REQUIRE(corpus.documents.size() == 1);
  const Document &doc = corpus.documents[0];
  REQUIRE(doc.sentences.size() == 2);
  CHECK(doc.sentences[0].clauses().size() == 2);
  CHECK(doc.sentences[1].clauses().size() == 1);
  std::vector<std::uint32_t> ids;
  for (const Clause *c : doc.Clauses()) ids.push_back(c->event_id->value());
  CHECK(ids == std::vector<std::uint32_t>{1, 2, 3});
}

TEST_CASE("reference anchor") {
  Corpus corpus = testing::ParseFixture("reference_anchor.tieml");
  const Clause &c = corpus.documents[0].sentences[0].clauses()[0];
  CHECK(c.reference == "264 BC");
  CHECK(c.text == "The First Punic War broke out on the island of Sicily in 264 BC.");
  CHECK_FALSE(c.event_id.has_value());
}

TEST_CASE("comments are dropped from clause text") {
  Corpus corpus = testing::ParseFixture("german_future.tieml");
  const Clause &c = corpus.documents[0].sentences[0].clauses()[0];
  CHECK(c.text == "Morgen werde ich ein Buch lesen");
  CHECK(c.tense->closed() == Tense::kFuture);
  CHECK(c.reference == "morgen");
  CHECK(*c.triple() == ReichenbachTriple(1, 1, 0));
}

TEST_CASE("aspect booleans and opaque tense codes") {
  Corpus aspect = testing::ParseFixture("aspect_flags.tieml");
  const Clause &c = aspect.documents[0].sentences[0].clauses()[0];
  CHECK(c.perfect == true);
  CHECK(c.progressive == true);
  CHECK(c.tense->raw() == "PAST");
  CHECK(c.text == "The patient had been experiencing stomach pain");

  Corpus hebrew = testing::ParseFixture("hebrew_opaque_tense.tieml");
  const Clause &h = hebrew.documents[0].sentences[0].clauses()[0];
  CHECK(h.tense->raw() == "sp");
  CHECK(h.text == "נתן נפגש עם רביקה");
  CHECK(Serialize(hebrew).find("tense=\"sp\"") != std::string::npos);
}

TEST_CASE("booleans are case insensitive") {
  Corpus c = Parse(R"(<s><c perfect="true" progressive="False">x</c></s>)").corpus;
  const Clause &clause = c.documents[0].sentences[0].clauses()[0];
  CHECK(clause.perfect == true);
  CHECK(clause.progressive == false);
}

TEST_CASE("range and value errors") {
  ParseError e = ParseFailure(R"(<s><c E="3" R="0" S="0">x</c></s>)");
  CHECK(e.kind() == ParseErrorKind::kBadAttributeValue);
  CHECK(e.line() == 1);
  CHECK(e.column() == 7);

  CHECK(ParseFailure(R"(<s><c eventid="0">x</c></s>)").kind() == ParseErrorKind::kBadAttributeValue);
  CHECK(ParseFailure(R"(<s><c eventid="one">x</c></s>)").kind() == ParseErrorKind::kBadAttributeValue);
  CHECK(ParseFailure(R"(<s><c timeslot="1.5">x</c></s>)").kind() == ParseErrorKind::kBadAttributeValue);
  CHECK(ParseFailure(R"(<s><c timeslot=" 1">x</c></s>)").kind() == ParseErrorKind::kBadAttributeValue);
  CHECK(ParseFailure(R"(<s><c perfect="yes">x</c></s>)").kind() == ParseErrorKind::kBadAttributeValue);
  CHECK(ParseFailure(R"(<s><c S="-3">x</c></s>)").kind() == ParseErrorKind::kBadAttributeValue);
}

TEST_CASE("structure violations") {
  CHECK(ParseFailure("<c>x</c>").kind() == ParseErrorKind::kStructureViolation);
  CHECK(ParseFailure("<tieml><c>x</c></tieml>").kind() == ParseErrorKind::kStructureViolation);
  CHECK(ParseFailure("<s></s>").kind() == ParseErrorKind::kStructureViolation);
  CHECK(ParseFailure("<s><c>a<c>b</c></c></s>").kind() == ParseErrorKind::kStructureViolation);
  CHECK(ParseFailure("<s><x/></s>").kind() == ParseErrorKind::kStructureViolation);
  CHECK(ParseFailure("<tieml><doc><s><c>x</c></s></doc><s><c>y</c></s></tieml>").kind() ==
        ParseErrorKind::kStructureViolation);
  CHECK(ParseFailure("<doc><s><c>x</c></s></doc>").kind() == ParseErrorKind::kStructureViolation);
}

TEST_CASE("malformed xml") {
  CHECK(ParseFailure("<s><c>x</s>").kind() == ParseErrorKind::kMalformedXml);
  CHECK(ParseFailure("<s><c>x</c>").kind() == ParseErrorKind::kMalformedXml);
  CHECK(ParseFailure("<s><c eventid=\"1\" eventid=\"2\">x</c></s>").kind() == ParseErrorKind::kMalformedXml);
  CHECK(ParseFailure("<s><c>&bogus;</c></s>").kind() == ParseErrorKind::kMalformedXml);
  CHECK(ParseFailure("stray <s><c>x</c></s>").kind() == ParseErrorKind::kMalformedXml);
  CHECK(ParseFailure("<tieml></tieml><s><c>x</c></s>").kind() == ParseErrorKind::kMalformedXml);
  CHECK(ParseFailure("<s><c>\xff</c></s>").kind() == ParseErrorKind::kMalformedXml);

  ParseError e = ParseFailure("<s>\n  <c>x</c>\n</t>");
  CHECK(e.line() == 3);
  CHECK(e.column() == 1);
}

TEST_CASE("unknown attributes") {
  const char *input = R"(<s><c eventid="1" mood="IRR">x</c></s>)";
  ParseError e = ParseFailure(input);
  CHECK(e.kind() == ParseErrorKind::kUnknownAttribute);
  CHECK(e.column() == 19);

  ParseResult lenient = Parse(input, {.lenient = true});
  REQUIRE(lenient.warnings.size() == 1);
  CHECK(lenient.warnings[0].kind == ParseErrorKind::kUnknownAttribute);
  CHECK(lenient.corpus.documents[0].sentences[0].clauses()[0].event_id == EventId(1));
}

TEST_CASE("root layouts") {
  Corpus bare = Parse("<s><c>a</c></s>\n<s><c>b</c></s>").corpus;
  Corpus rooted = Parse("<?xml version=\"1.0\"?>\n<tieml><s><c>a</c></s><s><c>b</c></s></tieml>").corpus;
  CHECK(bare == rooted);
  CHECK(bare.documents.size() == 1);

  Corpus docs = Parse(R"(<tieml><doc id="x"><s><c>a</c></s></doc><doc id="y"/></tieml>)").corpus;
  REQUIRE(docs.documents.size() == 2);
  CHECK(docs.documents[0].id == "x");
  CHECK(docs.documents[1].sentences.empty());

  CHECK(Parse("").corpus.documents.empty());
  CHECK(Parse("<tieml/>").corpus.documents.empty());
}

TEST_CASE("whitespace normalization and raw mode") {
  const char *input = "<s><c>\n  two\n   lines  <!-- c --> here\t</c></s>";
  CHECK(Parse(input).corpus.documents[0].sentences[0].clauses()[0].text == "two lines here");
  CHECK(Parse(input, {.raw_text = true}).corpus.documents[0].sentences[0].clauses()[0].text ==
        "\n  two\n   lines   here\t");
  // Character references are never collapsed.
  CHECK(Parse("<s><c>&#32;a&#10;b</c></s>").corpus.documents[0].sentences[0].clauses()[0].text == " a\nb");
}

TEST_CASE("serialize") {
  CHECK(Serialize(Corpus{}) == "<tieml>\n</tieml>\n");

  Corpus simple_past = testing::ParseFixture("simple_past.tieml");
  std::string xml = Serialize(simple_past);
  CHECK(xml ==
        "<tieml>\n<s>\n  <c E=\"-1\" R=\"-1\" S=\"0\">Danny watched the movie.</c>\n</s>\n</tieml>\n");
  CHECK(Parse(xml).corpus == simple_past);

  Clause c;
  c.event_id = EventId(4);
  c.time_slot = TimeSlot(2);
  c.tense = TenseLabel("FUT");
  c.perfect = false;
  c.progressive = true;
  c.set_triple(ReichenbachTriple(1, 1, 0));
  c.reference = "a \"b\" & <c>";
  c.text = "x";
  Corpus one{{Document{"", {Sentence({c})}}}};
  CHECK(Serialize(one).find(
            R"(<c eventid="4" timeslot="2" tense="FUT" perfect="FALSE" progressive="TRUE" E="1" R="1" S="0" reference="a &quot;b&quot; &amp; &lt;c&gt;">x</c>)") !=
        std::string::npos);
}

TEST_CASE("annotated fixtures round trip") {
  for (const std::string &name : testing::AnnotatedFixtures()) {
    CAPTURE(name);
    Corpus corpus = testing::ParseFixture(name);
    CHECK(Parse(Serialize(corpus)).corpus == corpus);
  }
}

TEST_CASE("parse inverts serialize on random corpora") {
  testing::CorpusGenerator generator(20261018, {.max_documents = 4, .max_sentences = 4});
  for (int i = 0; i < 300; ++i) {
    Corpus corpus = generator.Next();
    std::string xml = Serialize(corpus);
    CAPTURE(xml);
    CHECK(Parse(xml).corpus == corpus);
  }
}

}  // namespace
}  // namespace tieml
