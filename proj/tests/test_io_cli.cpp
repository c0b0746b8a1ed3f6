#include <gtest/gtest.h>

#include <filesystem>

#include "nuore/nuore.hpp"

using namespace nuore;

#ifndef SAMPLES_DIR
#define SAMPLES_DIR "samples"
#endif

TEST(ElementParsing, RoundTripsAcrossBackends) {
  auto z6 = make_zmod(6);
  EXPECT_EQ(parse_element(z6, z6->element_str(el_zmod(z6, 4))), el_zmod(z6, 4));

  auto q = make_rationals();
  Element half = el_rat(q, Rat(-7, 2));
  EXPECT_EQ(parse_element(q, q->element_str(half)), half);

  auto m = make_minf_q();
  Element a = m->add(el_unit(m, 1, 2), m->zmul(-3, el_unit(m, 4, 4)));
  EXPECT_EQ(parse_element(m, m->element_str(a)), a);

  auto mat = make_matrix(q, 2);
  Element b = el_matrix(mat, {el_rat(q, Rat(1, 3)), q->zero(), el_rat(q, Rat(2)),
                              el_rat(q, Rat(-1))});
  EXPECT_EQ(parse_element(mat, mat->element_str(b)), b);

  auto p = make_poly(q, "y");
  Element c = el_poly(p, {el_rat(q, Rat(0)), el_rat(q, Rat(5, 4))});
  EXPECT_EQ(parse_element(p, p->element_str(c)), c);

  auto u = unitalize(z6);
  Element d = el_pair(u, el_zmod(z6, 3), -2);
  EXPECT_EQ(parse_element(u, u->element_str(d)), d);
}

TEST(ElementParsing, RejectsMalformedInput) {
  auto z6 = make_zmod(6);
  EXPECT_THROW(parse_element(z6, "abc"), ParseError);
  auto r = make_finite_table({2, 2}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}});
  EXPECT_THROW(parse_element(r, "1"), ParseError);  // wrong coordinate count
  auto m = make_minf_q();
  EXPECT_THROW(parse_element(m, "E 1"), ParseError);
}

TEST(DescriptionFiles, EverySampleParsesAndValidates) {
  namespace fs = std::filesystem;
  std::size_t count = 0;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(SAMPLES_DIR))
    if (entry.path().extension() == ".ring") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    SCOPED_TRACE(path.string());
    ParsedContext pc = parse_description_file(path.string());
    ASSERT_TRUE(pc.ring);
    // every sample must define a valid Ore context
    OrePtr ctx = make_ore_context(pc.ring, pc.sigma, pc.delta);
    EXPECT_TRUE(ctx->differential);
    ++count;
  }
  EXPECT_GE(count, 6u);
}

TEST(DescriptionFiles, ErrorsCarryLineNumbers) {
  try {
    parse_description_text("ring zmod n=6\nmap delta table 1->x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  try {
    parse_description_text(
        "ring finite orders=2\n"
        "mul g1 g1 = 0\n"
        "mul g2 g1 = 0\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(DescriptionFiles, IncompleteTablesAreRejected) {
  EXPECT_THROW(parse_description_text("ring finite orders=2,2\n"
                                      "mul g1 g1 = 1,0\n"),
               ParseError);
  EXPECT_THROW(parse_description_text("ring zmod n=4\nmap delta table\n"),
               ParseError);
  EXPECT_THROW(parse_description_text("map delta zero\n"), ParseError);
  EXPECT_THROW(parse_description_text(""), ParseError);
}

TEST(DescriptionFiles, MapsMustActOnTheDeclaredRing) {
  // the twist/derivation lines always attach to the most recent ring, and a
  // mismatched earlier declaration is rejected at the end
  const char* text =
      "ring zmod n=4 name=a\n"
      "map delta zero\n"
      "ring zmod n=6\n";
  EXPECT_THROW(parse_description_text(text), ParseError);
}

TEST(FuzzReport, IsDeterministicAndCleanOnTheCorpus) {
  FuzzOptions o;
  o.seed = 3;
  o.samples = 40;
  o.bound = 3;
  o.corpus = "tp3k3";
  FuzzReport a = run_fuzz(o);
  FuzzReport b = run_fuzz(o);
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.text, b.text);
  o.seed = 4;
  FuzzReport c = run_fuzz(o);
  EXPECT_TRUE(c.ok);
}

TEST(FuzzReport, UnknownCorpusEntryIsAnInputError) {
  FuzzOptions o;
  o.corpus = "nope";
  EXPECT_THROW(run_fuzz(o), Error);
}
