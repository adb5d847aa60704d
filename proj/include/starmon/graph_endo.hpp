#pragma once

// Simple graphs, the five endomorphism-type predicates and star-graph specific
// machinery: brute-force enumeration of each endomorphism monoid, closed-form
// cardinalities and descriptions, standard generators and regularity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "starmon/monoid.hpp"
#include "starmon/transformation.hpp"

namespace starmon {

  class SimpleGraph {
   public:
    // Throws InvalidArgument for vertex_count 0, loops, duplicate edges or
    // endpoints out of range. Edges are stored as (min, max), sorted.
    SimpleGraph(std::size_t vertex_count, std::vector<std::pair<Point, Point>> edges);

    std::size_t vertex_count() const noexcept {
      return _n;
    }
    std::vector<std::pair<Point, Point>> const& edges() const noexcept {
      return _edges;
    }
    bool has_edge(Point u, Point v) const noexcept {
      return _adjacent[static_cast<std::size_t>(u) * _n + v];
    }

   private:
    std::size_t                          _n;
    std::vector<std::pair<Point, Point>> _edges;
    std::vector<bool>                    _adjacent;
  };

  // Vertex 0 is the centre, joined to each of 1, ..., n - 1.
  SimpleGraph star_graph(std::size_t n);

  enum class EndoClass : std::uint8_t {
    End,
    WeakEnd,
    StrongEnd,
    StrongWeakEnd,
    Aut,
  };

  inline constexpr EndoClass all_endo_classes[] = {EndoClass::End,
                                                   EndoClass::WeakEnd,
                                                   EndoClass::StrongEnd,
                                                   EndoClass::StrongWeakEnd,
                                                   EndoClass::Aut};

  // CLI spelling: end, wend, send, swend, aut.
  std::string_view          name(EndoClass c) noexcept;
  std::optional<EndoClass>  parse_endo_class(std::string_view text) noexcept;

  class EndoClassSet {
   public:
    constexpr EndoClassSet() = default;
    constexpr EndoClassSet(std::initializer_list<EndoClass> cs) {
      for (auto c : cs) {
        insert(c);
      }
    }
    constexpr void insert(EndoClass c) noexcept {
      _bits |= bit(c);
    }
    constexpr bool contains(EndoClass c) const noexcept {
      return (_bits & bit(c)) != 0;
    }
    // Subset test.
    constexpr bool within(EndoClassSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    friend constexpr bool operator==(EndoClassSet, EndoClassSet) = default;

   private:
    static constexpr std::uint8_t bit(EndoClass c) noexcept {
      return static_cast<std::uint8_t>(1U << static_cast<unsigned>(c));
    }
    std::uint8_t _bits = 0;
  };

  // Each definition is checked literally over all ordered vertex pairs.
  // Throws InvalidArgument on degree mismatch.
  EndoClassSet classify(Transformation const& f, SimpleGraph const& g);
  bool         is_in_class(std::span<Point const> images, SimpleGraph const& g, EndoClass c);

  struct EnumerateOptions {
    std::size_t max_degree = 8;
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
  };

  // All n^n maps filtered by the class predicate on the star graph S_n,
  // returned in lexicographic order. Throws BudgetExceeded for n above
  // max_degree and InvalidArgument for n == 0.
  TransformationMonoid enumerate_class(std::size_t n, EndoClass c,
                                       EnumerateOptions const& options = {});

  // Closed-form cardinalities: End and sEnd for n >= 1, swEnd for n >= 2,
  // wEnd for n >= 1, Aut for n >= 3. Throws InvalidArgument otherwise.
  boost::multiprecision::cpp_int cardinality_formula(std::size_t n, EndoClass c);
  bool                           has_cardinality_formula(std::size_t n, EndoClass c) noexcept;

  // Membership in the closed-form set descriptions of the star graph
  // monoids (degree = number of vertices):
  //   End = sEnd : maps fixing 0 with {1..n-1} mapped into {1..n-1}, plus the
  //                maps 0 -> i, everything else -> 0 (i != 0);
  //   swEnd      : End plus the constant maps;
  //   wEnd       : 0f != 0 implies im f is contained in {0, 0f};
  //   Aut        : permutations fixing 0.
  bool star_description_contains(Transformation const& f, EndoClass c);

  // Generators of degree n: a0, b0, e0, c0 need n >= 3, z needs n >= 2.
  Transformation star_a0(std::size_t n);
  Transformation star_b0(std::size_t n);
  Transformation star_e0(std::size_t n);
  Transformation star_c0(std::size_t n);
  Transformation star_z(std::size_t n);
  Transformation star_z0(std::size_t n);

  // n >= 4: End {a0,b0,e0,z}, swEnd {a0,b0,e0,z,z0}, wEnd {a0,b0,e0,c0,z};
  // n == 3: End {a0,z}, swEnd {a0,z,z0}, wEnd {a0,c0,z}.
  // Throws InvalidArgument for any other (n, c).
  std::vector<NamedTransformation> standard_generators(std::size_t n, EndoClass c);
  Assignment                       standard_assignment(std::size_t n, EndoClass c);

  // Brute force over m for some b with f b f = f. Throws InvalidArgument if
  // f is not in m.
  bool is_regular_element(Transformation const& f, TransformationMonoid const& m);
  bool is_regular_monoid(TransformationMonoid const& m);

}  // namespace starmon
