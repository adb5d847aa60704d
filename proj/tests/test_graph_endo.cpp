#include <algorithm>

#include "doctest.h"
#include "support.hpp"

#include "starmon/errors.hpp"
#include "starmon/graph_endo.hpp"

using namespace starmon;
using test::Kind;

namespace {

  Kind kind_of(EndoClass c) {
    switch (c) {
      case EndoClass::End:
        return Kind::End;
      case EndoClass::WeakEnd:
        return Kind::Weak;
      case EndoClass::StrongEnd:
        return Kind::Strong;
      case EndoClass::StrongWeakEnd:
        return Kind::StrongWeak;
      case EndoClass::Aut:
        return Kind::Aut;
    }
    return Kind::End;
  }

}  // namespace

TEST_CASE("star_graph") {
  using Edges = std::vector<std::pair<Point, Point>>;
  CHECK(star_graph(4).edges() == Edges{{0, 1}, {0, 2}, {0, 3}});
  CHECK(star_graph(1).edges().empty());
  CHECK(star_graph(2).edges() == Edges{{0, 1}});
  CHECK(star_graph(5).vertex_count() == 5);
  CHECK_THROWS_AS(star_graph(0), InvalidArgument);
  auto g = star_graph(4);
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 0));
}

TEST_CASE("SimpleGraph invariants") {
  CHECK_THROWS_AS(SimpleGraph(0, {}), InvalidArgument);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), InvalidArgument);
  SimpleGraph path(3, {{2, 1}, {1, 0}});
  CHECK(path.edges() == std::vector<std::pair<Point, Point>>{{0, 1}, {1, 2}});
}

TEST_CASE("classify") {
  auto const s4 = star_graph(4);
  CHECK(classify(Transformation{0, 1, 1, 3}, s4).contains(EndoClass::End));

  auto const constant = classify(Transformation{0, 0, 0, 0}, s4);
  CHECK(constant.contains(EndoClass::WeakEnd));
  CHECK(constant.contains(EndoClass::StrongWeakEnd));
  CHECK_FALSE(constant.contains(EndoClass::End));

  for (std::size_t n = 1; n <= 6; ++n) {
    auto const all = classify(Transformation::identity(n), star_graph(n));
    for (auto c : all_endo_classes) {
      CHECK(all.contains(c));
    }
  }
  CHECK_THROWS_AS(classify(Transformation::identity(3), s4), InvalidArgument);

  // a path 0 - 1 - 2: folding both ends together is an endomorphism but
  // not strong (the non-edge {0, 2} is not preserved, it collapses)
  SimpleGraph path(3, {{0, 1}, {1, 2}});
  auto fold = classify(Transformation{0, 1, 0}, path);
  CHECK(fold.contains(EndoClass::End));
  CHECK(fold.contains(EndoClass::StrongEnd));
  CHECK_FALSE(fold.contains(EndoClass::Aut));
  auto shift = classify(Transformation{1, 2, 2}, path);
  CHECK_FALSE(shift.contains(EndoClass::End));
  CHECK(shift.contains(EndoClass::WeakEnd));
}

TEST_CASE("classify agrees with the literal definitions on star graphs") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const g = star_graph(n);
    for (auto const& img : test::all_maps(n)) {
      auto const set = classify(Transformation(img), g);
      for (auto c : all_endo_classes) {
        REQUIRE(set.contains(c) == test::star_member(img, kind_of(c)));
      }
    }
  }
}

TEST_CASE("inclusion lattice") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const g = star_graph(n);
    for (auto const& img : test::all_maps(n)) {
      auto const s = classify(Transformation(img), g);
      auto implies = [&](EndoClass a, EndoClass b) { return !s.contains(a) || s.contains(b); };
      REQUIRE(implies(EndoClass::Aut, EndoClass::StrongEnd));
      REQUIRE(implies(EndoClass::StrongEnd, EndoClass::End));
      REQUIRE(implies(EndoClass::End, EndoClass::WeakEnd));
      REQUIRE(implies(EndoClass::StrongEnd, EndoClass::StrongWeakEnd));
      REQUIRE(implies(EndoClass::StrongWeakEnd, EndoClass::WeakEnd));
    }
  }
  // also on a non-star graph
  SimpleGraph cycle(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  for (auto const& img : test::all_maps(4)) {
    auto const s = classify(Transformation(img), cycle);
    REQUIRE((!s.contains(EndoClass::Aut) || s.contains(EndoClass::StrongEnd)));
    REQUIRE((!s.contains(EndoClass::End) || s.contains(EndoClass::WeakEnd)));
    REQUIRE((!s.contains(EndoClass::StrongWeakEnd) || s.contains(EndoClass::WeakEnd)));
  }
}

TEST_CASE("bijective weak endomorphisms are automorphisms") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const g = star_graph(n);
    for (auto const& img : test::all_maps(n)) {
      Transformation f(img);
      if (is_permutation(f) && is_in_class(f.images(), g, EndoClass::WeakEnd)) {
        REQUIRE(is_in_class(f.images(), g, EndoClass::Aut));
      }
    }
  }
}

TEST_CASE("enumerate_class sizes") {
  CHECK(enumerate_class(4, EndoClass::End).size() == 30);
  CHECK(enumerate_class(4, EndoClass::WeakEnd).size() == 88);
  CHECK(enumerate_class(3, EndoClass::Aut).size() == 2);
  // brute-force oracle, independent of SimpleGraph
  CHECK(test::star_count(4, Kind::End) == 30);
  CHECK(test::star_count(4, Kind::Weak) == 88);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto c : all_endo_classes) {
      CHECK(enumerate_class(n, c).size() == test::star_count(n, kind_of(c)));
    }
  }
}

TEST_CASE("enumerate_class small degrees match the explicit lists") {
  auto as_strings = [](TransformationMonoid const& m) {
    std::vector<std::string> out;
    for (auto const& f : m.elements()) {
      out.push_back(to_string(f));
    }
    return out;
  };
  using V = std::vector<std::string>;
  for (auto c : all_endo_classes) {
    CHECK(as_strings(enumerate_class(1, c)) == V{"0"});
  }
  CHECK(as_strings(enumerate_class(2, EndoClass::Aut)) == V{"0,1", "1,0"});
  CHECK(as_strings(enumerate_class(2, EndoClass::End)) == V{"0,1", "1,0"});
  CHECK(as_strings(enumerate_class(2, EndoClass::StrongWeakEnd)) == V{"0,0", "0,1", "1,0", "1,1"});
  CHECK(as_strings(enumerate_class(2, EndoClass::WeakEnd)) == V{"0,0", "0,1", "1,0", "1,1"});
}

TEST_CASE("enumerate_class output is canonical and schedule independent") {
  for (auto c : all_endo_classes) {
    auto const one = enumerate_class(6, c, {.max_degree = 8, .threads = 1});
    auto const many = enumerate_class(6, c, {.max_degree = 8, .threads = 4});
    CHECK(one.elements() == many.elements());
    CHECK(std::is_sorted(one.elements().begin(), one.elements().end()));
  }
}

TEST_CASE("enumerate_class budget and errors") {
  CHECK_THROWS_AS(enumerate_class(0, EndoClass::End), InvalidArgument);
  CHECK_THROWS_AS(enumerate_class(9, EndoClass::End), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_class(5, EndoClass::End, {.max_degree = 4}), BudgetExceeded);
}

TEST_CASE("enumerated classes are monoids") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto c : all_endo_classes) {
      auto const m = enumerate_class(n, c);
      CHECK(m.index_of(Transformation::identity(n)).has_value());
      CHECK(is_closed(m));
    }
  }
}

TEST_CASE("sEnd equals End on star graphs") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(enumerate_class(n, EndoClass::StrongEnd).elements()
          == enumerate_class(n, EndoClass::End).elements());
  }
}

TEST_CASE("cardinality_formula") {
  CHECK(cardinality_formula(5, EndoClass::End) == 260);
  CHECK(cardinality_formula(4, EndoClass::StrongWeakEnd) == 34);
  CHECK(cardinality_formula(3, EndoClass::WeakEnd) == 17);
  CHECK(cardinality_formula(1, EndoClass::End) == 1);
  CHECK(cardinality_formula(6, EndoClass::Aut) == 120);
  CHECK(cardinality_formula(20, EndoClass::End).str() == "1978419655660313589123998");
  CHECK_THROWS_AS(cardinality_formula(1, EndoClass::StrongWeakEnd), InvalidArgument);
  CHECK_THROWS_AS(cardinality_formula(2, EndoClass::Aut), InvalidArgument);
  for (std::size_t n = 3; n <= 7; ++n) {
    for (auto c : all_endo_classes) {
      CHECK(cardinality_formula(n, c) == enumerate_class(n, c).size());
    }
  }
}

TEST_CASE("closed-form descriptions match the predicates in both directions") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const g = star_graph(n);
    for (auto const& img : test::all_maps(n)) {
      Transformation f(img);
      for (auto c : all_endo_classes) {
        REQUIRE(star_description_contains(f, c) == is_in_class(f.images(), g, c));
      }
    }
  }
}

TEST_CASE("standard generators") {
  auto const g4 = standard_generators(4, EndoClass::End);
  REQUIRE(g4.size() == 4);
  CHECK(g4[0].name == "a0");
  CHECK(g4[0].value == Transformation{0, 2, 1, 3});
  CHECK(g4[1].name == "b0");
  CHECK(g4[1].value == Transformation{0, 2, 3, 1});
  CHECK(g4[2].name == "e0");
  CHECK(g4[2].value == Transformation{0, 1, 1, 3});
  CHECK(g4[3].name == "z");
  CHECK(g4[3].value == Transformation{1, 0, 0, 0});

  auto const g3 = standard_generators(3, EndoClass::End);
  REQUIRE(g3.size() == 2);
  CHECK(g3[0].value == Transformation{0, 2, 1});
  CHECK(g3[1].value == Transformation{1, 0, 0});

  auto const w4 = standard_generators(4, EndoClass::WeakEnd);
  CHECK(std::any_of(w4.begin(), w4.end(), [](auto const& g) {
    return g.name == "c0" && g.value == Transformation{0, 0, 2, 3};
  }));
  CHECK(standard_generators(3, EndoClass::StrongWeakEnd).size() == 3);
  CHECK(standard_generators(5, EndoClass::StrongWeakEnd).size() == 5);

  CHECK_THROWS_AS(standard_generators(2, EndoClass::End), InvalidArgument);
  CHECK_THROWS_AS(standard_generators(4, EndoClass::Aut), InvalidArgument);
  CHECK_THROWS_AS(standard_generators(4, EndoClass::StrongEnd), InvalidArgument);

  CHECK(star_b0(5) == Transformation{0, 2, 3, 4, 1});
  CHECK(star_b0(3) == star_a0(3));
}

TEST_CASE("z, z0 and c0 sit where expected in the lattice") {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto const g  = star_graph(n);
    auto const z  = classify(star_z(n), g);
    auto const z0 = classify(star_z0(n), g);
    auto const c0 = classify(star_c0(n), g);
    CHECK(z.contains(EndoClass::End));
    CHECK(z0.contains(EndoClass::StrongWeakEnd));
    CHECK_FALSE(z0.contains(EndoClass::End));
    CHECK(c0.contains(EndoClass::WeakEnd));
    CHECK_FALSE(c0.contains(EndoClass::StrongWeakEnd));
  }
}

TEST_CASE("regularity") {
  auto const end4 = enumerate_class(4, EndoClass::End);
  CHECK(is_regular_element(Transformation{1, 0, 0, 0}, end4));
  CHECK(is_regular_element(Transformation::identity(4), end4));
  CHECK(is_regular_monoid(enumerate_class(4, EndoClass::WeakEnd)));
  CHECK_THROWS_AS(is_regular_element(Transformation{0, 0, 0, 0}, end4), InvalidArgument);

  // a non-regular monoid: {id, f, f^2 = 0-map} generated by a nilpotent-ish f
  auto const m = TransformationMonoid::from_elements(
      3, {Transformation::identity(3), Transformation{0, 0, 1}, Transformation{0, 0, 0}});
  CHECK(is_closed(m));
  CHECK_FALSE(is_regular_element(Transformation{0, 0, 1}, m));
  CHECK_FALSE(is_regular_monoid(m));
}

TEST_CASE("class names") {
  for (auto c : all_endo_classes) {
    CHECK(parse_endo_class(name(c)) == c);
  }
  CHECK_FALSE(parse_endo_class("END").has_value());
}
