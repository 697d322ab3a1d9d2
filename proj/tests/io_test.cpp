#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace cumteam;
using gen::Rng;

namespace {

std::string error_of(const std::string& text) {
  try {
    model_from_json_text(text);
  } catch (const ModelError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ModelJson, Parses) {
  const auto m = model_from_json_text(R"({
    "vars": ["p", "q"],
    "states": { "a": [ [ {"p": 1, "q": 0}, {"p": true, "q": false} ], [] ], "b": [] },
    "order": [ ["a", "b"] ]
  })");
  EXPECT_EQ(m.domain().size(), 2u);
  ASSERT_EQ(m.state_count(), 2u);
  EXPECT_EQ(m.id(0), "a");
  EXPECT_EQ(m.id(1), "b");
  ASSERT_EQ(m.label(0).size(), 2u);
  EXPECT_TRUE(m.label(0)[0].empty());  // labels are sorted
  EXPECT_EQ(m.label(0)[1].size(), 1u);  // duplicate valuations collapse
  EXPECT_EQ(m.label(0)[1], Team::parse(m.domain(), "10"));
  EXPECT_TRUE(m.label(1).empty());
  EXPECT_TRUE(m.related(0, 1));
  EXPECT_FALSE(m.related(1, 0));
}

TEST(ModelJson, OrderIsOptional) {
  const auto m = model_from_json_text(R"({"vars": ["p"], "states": {"s": [[{"p": 0}]]}})");
  EXPECT_TRUE(m.rel().empty());
}

TEST(ModelJson, Rejections) {
  EXPECT_NE(error_of("{"), "");
  EXPECT_NE(error_of("[]"), "");
  EXPECT_NE(error_of(R"({"vars": ["p"], "states": {}, "extra": 1})").find("extra"), std::string::npos);
  EXPECT_NE(error_of(R"({"vars": ["p"]})"), "");
  EXPECT_NE(error_of(R"({"vars": ["p", "p"], "states": {}})"), "");
  EXPECT_NE(error_of(R"({"vars": ["P"], "states": {}})"), "");
  EXPECT_NE(error_of(R"({"vars": ["p"], "states": {"a": [[{"p": 1, "q": 0}]]}})").find("'q'"), std::string::npos);
  EXPECT_NE(error_of(R"({"vars": ["p", "q"], "states": {"a": [[{"p": 1}]]}})").find("misses"), std::string::npos);
  EXPECT_NE(error_of(R"({"vars": ["p"], "states": {"a": [[{"p": 2}]]}})").find("0 or 1"), std::string::npos);
  EXPECT_NE(error_of(R"({"vars": ["p"], "states": {"a": [[{"p": "1"}]]}})"), "");
  EXPECT_NE(error_of(R"({"vars": ["p"], "states": {"a": [{"p": 1}]}})"), "");
  EXPECT_NE(error_of(R"({"vars": ["p"], "states": {"a": []}, "order": [["a", "z"]]})"), "");
  EXPECT_NE(error_of(R"({"vars": ["p"], "states": {"a": []}, "order": [["a"]]})"), "");
}

TEST(ModelJson, RoundTrip) {
  Rng rng(71);
  for (int i = 0; i < 200; ++i) {
    const auto m = gen::random_model(rng, {.max_vars = 3});
    const auto back = model_from_json_text(model_to_json_text(m));
    ASSERT_EQ(back.state_count(), m.state_count());
    for (StateIndex s = 0; s < m.state_count(); ++s) {
      ASSERT_EQ(back.id(s), m.id(s));
      ASSERT_EQ(back.label(s), m.label(s));
    }
    ASSERT_EQ(back.rel(), m.rel());
    ASSERT_EQ(model_to_json_text(back), model_to_json_text(m));
  }
}

TEST(ModelJson, SamplesLoad) {
  for (const char* name : {"example1", "trivial", "chain", "strict_order", "cycle"})
    EXPECT_NO_THROW(load_model(std::string(CUMTEAM_TEST_DATA) + "/" + name + ".json")) << name;
  EXPECT_THROW(load_model(std::string(CUMTEAM_TEST_DATA) + "/missing.json"), std::runtime_error);
}

TEST(Universe, CommentsAndBlankLines) {
  const auto u = parse_universe("# header\n\np\n  q & r   # trailing\n\t\ndep(p;q)\n");
  ASSERT_EQ(u.size(), 3u);
  EXPECT_EQ(render(u[1]), "q & r");
  EXPECT_TRUE(parse_universe("").empty());
}

TEST(Universe, BadLineNamesTheLine) {
  try {
    parse_universe("p\n\n~(q)\n");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}
