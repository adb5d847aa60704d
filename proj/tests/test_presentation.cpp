#include <algorithm>
#include <map>

#include "doctest.h"
#include "support.hpp"

#include "starmon/errors.hpp"
#include "starmon/graph_endo.hpp"
#include "starmon/presentation.hpp"

using namespace starmon;

namespace {

  bool has_relation(Presentation const& p, std::string_view lhs, std::string_view rhs) {
    Relation const r{p.parse_word(lhs), p.parse_word(rhs)};
    Relation const s{r.rhs, r.lhs};
    auto const&    rs = p.relations();
    return std::find(rs.begin(), rs.end(), r) != rs.end()
           || std::find(rs.begin(), rs.end(), s) != rs.end();
  }

  // Word evaluation through the pointwise oracle.
  test::Images eval(std::map<std::string, test::Images> const& a, Presentation const& p,
                    Word const& w, std::size_t degree) {
    test::Images out(degree);
    for (Point i = 0; i < degree; ++i) {
      out[i] = i;
    }
    for (auto const& name : p.letter_names(w)) {
      out = test::apply_then(out, a.at(name));
    }
    return out;
  }

  std::size_t failures(std::map<std::string, test::Images> const& a, Presentation const& p,
                       std::size_t degree) {
    std::size_t bad = 0;
    for (auto const& r : p.relations()) {
      bad += eval(a, p, r.lhs, degree) != eval(a, p, r.rhs, degree);
    }
    return bad;
  }

  // The leaf-side maps of the star on n + 1 vertices; they fix vertex 0 and
  // act on the remaining n points like the base generators.
  std::map<std::string, test::Images> base_maps(std::size_t n, bool partial) {
    std::map<std::string, test::Images> a{{"a", test::images_of(star_a0(n + 1))},
                                          {"b", test::images_of(star_b0(n + 1))},
                                          {"e", test::images_of(star_e0(n + 1))}};
    if (partial) {
      a["c"] = test::images_of(star_c0(n + 1));
    }
    return a;
  }

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_THROWS_AS(Presentation({"a", "a"}), InvalidArgument);
  CHECK_THROWS_AS(Presentation({"1"}), InvalidArgument);
  CHECK_THROWS_AS(Presentation({""}), InvalidArgument);
  CHECK_THROWS_AS(Presentation({"a b"}), InvalidArgument);
  CHECK_THROWS_AS(Presentation({"x^"}), InvalidArgument);
  Presentation const p({"a0", "b_1"});
  CHECK(p.letter("b_1") == 1);
  CHECK_THROWS_AS(p.letter("c"), InvalidArgument);
  CHECK(Presentation(std::vector<std::string>{}).letter_count() == 0);
}

TEST_CASE("word parser") {
  Presentation const p({"a", "b", "e", "z0"});
  CHECK(p.parse_word("a b^2 e") == Word{0, 1, 1, 2});
  CHECK(p.parse_word("(a b)^2") == Word{0, 1, 0, 1});
  CHECK(p.parse_word("((a)^2 b)^2") == Word{0, 0, 1, 0, 0, 1});
  CHECK(p.parse_word("  z0 ^ 3 ") == Word{3, 3, 3});
  CHECK(p.parse_word("1").empty());
  CHECK(p.parse_word("").empty());
  CHECK(p.parse_word("a 1 b") == Word{0, 1});
  CHECK(p.parse_word("a^0").empty());
  CHECK(p.parse_word("(a b)^0 e") == Word{2});
  CHECK_THROWS_AS(p.parse_word("ab"), InvalidArgument);
  CHECK_THROWS_AS(p.parse_word("(a b"), InvalidArgument);
  CHECK_THROWS_AS(p.parse_word("a b)"), InvalidArgument);
  CHECK_THROWS_AS(p.parse_word("a^"), InvalidArgument);
  CHECK_THROWS_AS(p.parse_word("a^99999999999999999999999"), InvalidArgument);
  CHECK_THROWS_AS(p.parse_word("a + b"), InvalidArgument);
  CHECK(p.to_string(Word{}) == "1");
  CHECK(p.to_string(Word{3, 0}) == "z0 a");
  CHECK(p.parse_word(p.to_string(Word{3, 0, 2})) == Word{3, 0, 2});
}

TEST_CASE("relations: duplicates, chains, removal") {
  Presentation p({"a", "b"});
  CHECK(p.add_relation("a^2", "1"));
  CHECK_FALSE(p.add_relation("a a", "1"));
  CHECK(p.add_relation("1", "a^2"));  // orientation matters for exact duplicates
  CHECK_THROWS_AS(p.add_relation(Word{2}, Word{}), InvalidArgument);
  p.add_chain({"a", "b", "a b"});
  CHECK(p.relations().size() == 4);
  CHECK(p.relations()[3] == Relation{{1}, {0, 1}});
  auto const q = p.without_relation(0);
  CHECK(q.relations().size() == 3);
  CHECK(q.relations()[0] == Relation{{}, {0, 0}});
  CHECK_THROWS_AS(p.without_relation(4), InvalidArgument);
}

TEST_CASE("relabeling keeps relations") {
  auto const p = sym_presentation(4);
  auto const q = p.relabeled({{"a", "x"}, {"b", "y"}});
  CHECK(q.alphabet() == std::vector<std::string>{"x", "y"});
  CHECK(q.relations() == p.relations());
  CHECK_FALSE(q == p);
  CHECK(q.relabeled({{"x", "a"}, {"y", "b"}}) == p);
  CHECK_THROWS_AS(p.relabeled({{"a", "b"}}), InvalidArgument);
}

TEST_CASE("JSON round trip") {
  for (auto const& p : {sym_presentation(3), full_transf_presentation(4),
                        partial_transf_presentation(4), end_star_presentation(5),
                        swend_star_presentation(3), wend_star_presentation(4),
                        Presentation(std::vector<std::string>{"a"})}) {
    auto const text = to_json(p);
    auto const back = presentation_from_json(text);
    CHECK(back == p);
    CHECK(to_json(back) == text);
  }
  Presentation p({"x", "y"});
  p.add_relation("x y", "1");
  CHECK(to_json(p)
        == "{\n  \"alphabet\": [\n    \"x\",\n    \"y\"\n  ],\n  \"relations\": [\n    [\n"
           "      [\n        \"x\",\n        \"y\"\n      ],\n      []\n    ]\n  ]\n}\n");
}

TEST_CASE("JSON errors") {
  CHECK_THROWS_AS(presentation_from_json("not json"), InvalidArgument);
  CHECK_THROWS_AS(presentation_from_json("{}"), InvalidArgument);
  CHECK_THROWS_AS(presentation_from_json(R"({"alphabet":["a"],"relations":[[["b"],[]]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(presentation_from_json(R"({"alphabet":["a"],"relations":[[["a"]]]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(
      presentation_from_json(R"({"alphabet":["a"],"relations":[[["a"],[]],[["a"],[]]]})"),
      InvalidArgument);
  CHECK_THROWS_AS(presentation_from_json(R"({"alphabet":["a","a"],"relations":[]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(presentation_from_json(R"({"alphabet":"a","relations":[]})"), InvalidArgument);
}

TEST_CASE("symmetric group presentation") {
  CHECK_THROWS_AS(sym_presentation(2), InvalidArgument);
  auto const p3 = sym_presentation(3);
  CHECK(p3.relations().size() == 4);
  CHECK(has_relation(p3, "a^2", "1"));
  CHECK(has_relation(p3, "b^3", "1"));
  CHECK(has_relation(p3, "(b a)^2", "1"));
  CHECK(has_relation(p3, "(a b^2 a b)^3", "1"));
  auto const p6 = sym_presentation(6);
  CHECK(p6.relations().size() == 4 + 3);
  CHECK(has_relation(p6, "(a b^4 a b^2)^2", "1"));
  CHECK(has_relation(p6, "(a b^2 a b^4)^2", "1"));
}

TEST_CASE("full transformation presentation") {
  auto const t4 = full_transf_presentation(4);
  CHECK(t4.alphabet() == std::vector<std::string>{"a", "b", "e"});
  CHECK(has_relation(t4, "(e b a b^3)^2", "e"));
  CHECK(has_relation(t4, "a e", "b^2 a b^2 e b^2 a b^2"));
  CHECK(has_relation(t4, "(e b a b^2 a b)^2", "(b a b^2 a b e)^2"));
  auto const t3 = full_transf_presentation(3);
  CHECK(has_relation(t3, "a e", "b a b^2 a b e b^2 a b a b^2"));
  CHECK(has_relation(t3, "e b^2 a b e", "(e b^2 a b)^2"));
}

TEST_CASE("partial transformation presentation") {
  auto const pt4 = partial_transf_presentation(4);
  CHECK(pt4.alphabet() == std::vector<std::string>{"a", "b", "c", "e"});
  CHECK(has_relation(pt4, "(c a)^2", "c a c"));
  CHECK(has_relation(pt4, "c a c", "(a c)^2"));
  CHECK(has_relation(pt4, "c", "c^2"));
  CHECK(has_relation(pt4, "e c", "c a c"));
  CHECK(has_relation(pt4, "c e", "c a"));
  CHECK(has_relation(pt4, "e a c", "e a"));
}

TEST_CASE("star presentations") {
  CHECK_THROWS_AS(end_star_presentation(2), InvalidArgument);
  CHECK_THROWS_AS(swend_star_presentation(2), InvalidArgument);
  CHECK_THROWS_AS(wend_star_presentation(1), InvalidArgument);

  auto const e3 = end_star_presentation(3);
  CHECK(e3.alphabet() == std::vector<std::string>{"a0", "z"});
  CHECK(e3.relations().size() == 3);

  auto const e5 = end_star_presentation(5);
  CHECK(e5.alphabet() == std::vector<std::string>{"a0", "b0", "e0", "z"});
  CHECK(has_relation(e5, "z^2", "e0 b0 e0 b0 e0"));
  CHECK(has_relation(e5, "a0 z", "b0 z"));
  CHECK(has_relation(e5, "e0 z", "z"));
  CHECK(has_relation(e5, "(e0 b0 a0 b0^3)^2", "e0"));  // from T(4)

  auto const e4 = end_star_presentation(4);
  auto const s4 = swend_star_presentation(4);
  CHECK(s4.relations().size() == e4.relations().size() + 8);
  CHECK(has_relation(s4, "z0 e0", "z0"));
  CHECK(has_relation(s4, "z z0", "z0^2"));
  auto const s3 = swend_star_presentation(3);
  CHECK(s3.relations().size() == end_star_presentation(3).relations().size() + 5);

  auto const w4 = wend_star_presentation(4);
  CHECK(w4.alphabet() == std::vector<std::string>{"a0", "b0", "e0", "c0", "z"});
  CHECK(has_relation(w4, "z^2 c0", "z c0"));
  CHECK(has_relation(w4, "(c0 a0)^2", "c0 a0 c0"));
  CHECK(has_relation(w4, "z^2", "e0 b0 e0"));
  auto const w3 = wend_star_presentation(3);
  CHECK(has_relation(w3, "z^2 c0", "z c0"));
  CHECK(has_relation(w3, "c0 z^2", "c0 a0"));
}

TEST_CASE("base presentations hold for the zero-fixing maps") {
  for (std::size_t n = 3; n <= 7; ++n) {
    CAPTURE(n);
    auto const a = base_maps(n, true);
    CHECK(failures(a, sym_presentation(n), n + 1) == 0);
    CHECK(failures(a, full_transf_presentation(n), n + 1) == 0);
    CHECK(failures(a, partial_transf_presentation(n), n + 1) == 0);
  }
}

TEST_CASE("star presentations hold for the standard generators") {
  for (std::size_t n = 3; n <= 8; ++n) {
    CAPTURE(n);
    for (auto c : {EndoClass::End, EndoClass::StrongWeakEnd, EndoClass::WeakEnd}) {
      std::map<std::string, test::Images> a;
      for (auto const& g : standard_generators(n, c)) {
        a[g.name] = test::images_of(g.value);
      }
      Presentation const p = c == EndoClass::End           ? end_star_presentation(n)
                             : c == EndoClass::WeakEnd     ? wend_star_presentation(n)
                                                           : swend_star_presentation(n);
      CHECK(failures(a, p, n) == 0);
      std::vector<std::string> names;
      for (auto const& [k, v] : a) {
        names.push_back(k);
      }
      auto alpha = p.alphabet();
      std::sort(alpha.begin(), alpha.end());
      CHECK(alpha == names);
    }
  }
}

TEST_CASE("a swapped assignment breaks relations") {
  std::map<std::string, test::Images> a;
  for (auto const& g : standard_generators(5, EndoClass::StrongWeakEnd)) {
    a[g.name] = test::images_of(g.value);
  }
  std::swap(a["z"], a["z0"]);
  CHECK(failures(a, swend_star_presentation(5), 5) > 0);
}
