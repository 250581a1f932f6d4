#include <gtest/gtest.h>

#include "hamkit/families.hpp"
#include "hamkit/io.hpp"
#include "test_support.hpp"

using namespace hamkit;

TEST(EdgeList, ReadsPath) {
  auto g = read_edge_list("3 2\n0 1\n1 2");
  EXPECT_EQ(g, classic::path(3));
}

TEST(EdgeList, CommentsAndBlankLines) {
  std::vector<std::string> warnings;
  auto g = read_edge_list("# header next\n\n4 3\n0 1\n  # mid\n1 2\n2 3\n",
                          &warnings);
  EXPECT_EQ(g, classic::path(4));
  EXPECT_TRUE(warnings.empty());
}

TEST(EdgeList, IndexOutOfRange) {
  try {
    read_edge_list("3 1\n0 3");
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_EQ(e.position, 3u);
  }
}

TEST(EdgeList, OtherErrors) {
  EXPECT_THROW(read_edge_list(""), parse_error);
  EXPECT_THROW(read_edge_list("3 1\n1 1"), parse_error);
  EXPECT_THROW(read_edge_list("3 1\n0 x"), parse_error);
  EXPECT_THROW(read_edge_list("3 1\n0 1 2"), parse_error);
}

TEST(EdgeList, EdgeCountMismatchIsAWarning) {
  std::vector<std::string> warnings;
  auto g = read_edge_list("3 5\n0 1\n1 0\n", &warnings);
  EXPECT_EQ(g.size(), 1u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("5"), std::string::npos);
}

TEST(Graph6, StarExample) {
  auto g = read_graph6("D?{");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edges(), (std::vector<edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(write_graph6(g), "D?{");
}

TEST(Graph6, KnownEncodings) {
  // K4 is "C~", the 5-cycle 0-1-2-3-4 is "Dhc", Petersen (standard labels)
  // round-trips through its own encoding.
  EXPECT_EQ(write_graph6(classic::complete(4)), "C~");
  EXPECT_EQ(write_graph6(classic::cycle(5)), "Dhc");
  EXPECT_EQ(read_graph6("@"), graph(1));
  EXPECT_EQ(read_graph6("?"), graph(0));
}

TEST(Graph6, HeaderAndErrors) {
  EXPECT_EQ(read_graph6(">>graph6<<D?{\n"), read_graph6("D?{"));
  EXPECT_THROW(read_graph6(">>sparse6<<:Fa@x^"), unsupported_header);
  EXPECT_THROW(read_graph6(":Fa@x^"), unsupported_header);
  EXPECT_THROW(read_graph6("D?"), parse_error);
  EXPECT_THROW(read_graph6("D?{{"), parse_error);
  EXPECT_THROW(read_graph6("D? {"), parse_error);
}

TEST(Graph6, LongSizePrefix) {
  auto g = classic::cycle(100);
  auto text = write_graph6(g);
  EXPECT_EQ(text.substr(0, 4), "~?@c");
  EXPECT_EQ(read_graph6(text), g);
}

TEST(RoundTrip, RandomGraphsBothFormats) {
  for (const auto& g : ref::corpus(300, 0, 32, 99)) {
    EXPECT_EQ(read_graph(write_graph(g, graph_format::edge_list),
                         graph_format::edge_list),
              g);
    EXPECT_EQ(read_graph(write_graph(g, graph_format::graph6),
                         graph_format::graph6),
              g);
  }
}

TEST(Format, GuessFromExtension) {
  EXPECT_EQ(guess_format("x.g6"), graph_format::graph6);
  EXPECT_EQ(guess_format("x.el"), graph_format::edge_list);
}
