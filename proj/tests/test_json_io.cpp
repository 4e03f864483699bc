#include <gtest/gtest.h>

#include "crystalpoly/json_io.hpp"
#include "helpers.hpp"

using namespace crystalpoly;
using namespace crystalpoly::io;

TEST(JsonIo, CartanRoundTrip) {
  CartanData c({{2, -1}, {-3, 2}}, {"a", "b"});
  auto j = cartan_to_json(c);
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(cartan_from_json(j), c);
  EXPECT_THROW(cartan_from_json(json{{"rank", 3}, {"matrix", {{2}}}}),
               std::invalid_argument);
  EXPECT_THROW(cartan_from_json(json{{"matrix", "no"}}), std::invalid_argument);
  EXPECT_THROW(cartan_from_json(json{{"matrix", {{2, 1}, {-1, 2}}}}),
               std::invalid_argument);
}

TEST(JsonIo, ZVectorRoundTrip) {
  ZVector x{{1, 2}, {5, -1}};
  auto j = zvector_to_json(x, Weight{{1, 0}});
  EXPECT_EQ(j["coords"]["5"], -1);
  auto [y, mode] = zvector_from_json(j);
  EXPECT_EQ(y, x);
  ASSERT_TRUE(mode);
  EXPECT_EQ(mode->coeffs, (std::vector<Int>{1, 0}));
  auto [z, m2] = zvector_from_json(zvector_to_json(x, std::nullopt));
  EXPECT_FALSE(m2);
  EXPECT_THROW(zvector_from_json(json{{"coords", {{"1", 1}}}, {"mode", "bogus"}}),
               std::invalid_argument);
}

TEST(JsonIo, TensorRoundTrip) {
  auto t = make_tensor({1, 2}, {3, -4}, Weight{{2, 0}});
  auto j = tensor_to_json(t);
  EXPECT_EQ(j.size(), 3u);
  EXPECT_EQ(tensor_from_json(j), t);
  EXPECT_THROW(tensor_from_json(json::parse(R"([["r",[1]],[1,2]])")),
               std::invalid_argument);
  EXPECT_THROW(tensor_from_json(json::parse(R"([["q",[1]]])")),
               std::invalid_argument);
}

TEST(JsonIo, GraphEncodings) {
  ZCrystal c(testutil::rank2(1, 1), Sequence({1, 2}, 2), Weight{{1, 0}});
  auto g = c.bfs(3);
  auto j = graph_to_json(g, [&](const ZVector& x) { return zvector_to_json(x, c.lambda()); });
  EXPECT_EQ(j["nodes"].size(), 3u);
  EXPECT_EQ(j["edges"].size(), 2u);
  EXPECT_EQ(j["root"], 0);
  EXPECT_EQ(j["edges"][0], json::parse("[0,1,1]"));
  auto dot = graph_to_dot(g, [](const ZVector& x) { return x.str(); });
  EXPECT_NE(dot.find("digraph crystal {"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n1 [label=\"1\"]"), std::string::npos);
  EXPECT_NE(dot.find("n1 -> n2 [label=\"2\"]"), std::string::npos);
}

TEST(JsonIo, DotEscapesQuotes) {
  CrystalGraph<int> g;
  g.insert(0, 0);
  auto dot = graph_to_dot(g, [](int) { return std::string("a\"b"); });
  EXPECT_NE(dot.find("a\\\"b"), std::string::npos);
}

TEST(JsonIo, FormSetRoundTrip) {
  auto fs = rank2_system(2, 2, Weight{{1, 1}}, 4);
  auto j = formset_to_json(fs);
  EXPECT_EQ(j.size(), fs.size());
  for (std::size_t n = 1; n < j.size(); ++n) EXPECT_LT(j[n - 1].dump(), j[n].dump());
  auto back = formset_from_json(j, 4);
  EXPECT_EQ(back.size(), fs.size());
  for (const auto& [f, d] : fs.forms) EXPECT_TRUE(back.contains(f));
  LinearForm half(Rational(1, 2));
  half.set(3, Rational(-2, 3));
  EXPECT_EQ(form_to_json(half), json::parse(R"({"const":"1/2","coeffs":{"3":"-2/3"}})"));
  EXPECT_EQ(form_from_json(form_to_json(half)), half);
}

TEST(JsonIo, BraidDescriptor) {
  BraidDescriptor d{1, 2, {4, 5, 6}};
  auto back = braid_descriptor_from_json(braid_descriptor_to_json(d));
  EXPECT_EQ(back.window, d.window);
  EXPECT_EQ(back.j, 2);
}

TEST(JsonIo, MissingFile) {
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), std::invalid_argument);
}
