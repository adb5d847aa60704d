#pragma once

// Concrete transformation monoids: Froidure-Pin style closure of a generating
// list, membership and witness words, generating-set checks and exact rank by
// exhaustive subset search.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "starmon/transformation.hpp"

namespace starmon {

  struct NamedTransformation {
    std::string    name;
    Transformation value;
  };

  // Letters of a witness word are indices into generator_names().
  using GeneratorWord = std::vector<std::uint32_t>;

  class TransformationMonoid {
   public:
    // Wrap an already-closed element set (no generator data). Elements are
    // sorted into canonical order; duplicates, mixed degrees and a missing
    // identity are rejected. Closure is not re-checked here, see is_closed.
    static TransformationMonoid from_elements(std::size_t                 degree,
                                              std::vector<Transformation> elements);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<Transformation> const& elements() const noexcept {
      return _elements;
    }
    Transformation const& at(std::size_t i) const {
      return _elements.at(i);
    }

    std::optional<std::size_t> index_of(Transformation const& f) const;
    std::size_t                identity_index() const noexcept {
      return _identity_index;
    }

    // Generator data; empty when built with from_elements.
    bool has_generators() const noexcept {
      return !_generators.empty();
    }
    std::vector<std::string> const& generator_names() const noexcept {
      return _generator_names;
    }
    std::vector<Transformation> const& generators() const noexcept {
      return _generators;
    }
    GeneratorWord const& witness_word(std::size_t i) const {
      return _words.at(i);
    }
    // Index of elements()[i] * generators()[g].
    std::size_t right_cayley(std::size_t i, std::size_t g) const {
      return _right.at(i * _generators.size() + g);
    }

   private:
    friend struct MonoidBuilder;
    TransformationMonoid() = default;

    std::size_t                                    _degree = 0;
    std::vector<Transformation>                    _elements;
    std::unordered_map<Transformation, std::size_t> _index;
    std::size_t                                    _identity_index = 0;
    std::vector<std::string>                       _generator_names;
    std::vector<Transformation>                    _generators;
    std::vector<GeneratorWord>                     _words;
    std::vector<std::size_t>                       _right;
  };

  struct GenerateOptions {
    std::size_t max_elements = 1'000'000;
  };

  // Breadth-first closure. Element 0 is the identity (empty witness word);
  // the remaining elements appear in shortlex order of their witness words,
  // letters ordered as in the generator list. Throws InvalidArgument for an
  // empty list or mixed degrees and BudgetExceeded past max_elements.
  TransformationMonoid generate(std::span<NamedTransformation const> generators,
                                GenerateOptions const& options = {});

  // Unnamed generators get the names g0, g1, ...
  TransformationMonoid generate(std::span<Transformation const> generators,
                                GenerateOptions const&          options = {});

  bool contains(TransformationMonoid const& m, Transformation const& f);

  // The stored shortlex witness as generator names, if f is in m and m was
  // built from generators.
  std::optional<std::vector<std::string>> word_for(TransformationMonoid const& m,
                                                   Transformation const&       f);

  // True iff the submonoid generated by xs has exactly the elements of target.
  bool is_generating_set(TransformationMonoid const&     target,
                         std::span<Transformation const> xs);

  // Every pairwise product lies in m (quadratic; meant for tests and small m).
  bool is_closed(TransformationMonoid const& m);

  // Full multiplication table: table[i * size + j] = index of at(i) * at(j).
  std::vector<std::uint32_t> multiplication_table(TransformationMonoid const& m);

  struct RankOptions {
    std::size_t                                max_subset_size = 5;
    std::optional<std::vector<Transformation>> candidate_pool;
    std::chrono::milliseconds                  time_budget = std::chrono::minutes(10);
  };

  struct RankResult {
    // Set iff a generating subset was found and every smaller size was
    // searched exhaustively.
    std::optional<std::size_t>  rank;
    std::vector<Transformation> generating_subset;
    // Largest size for which the search finished without finding a
    // generating subset.
    std::optional<std::size_t>  exhausted_up_to;
    std::size_t                 subsets_checked = 0;
    bool                        time_budget_hit = false;
  };

  // Smallest k <= max_subset_size such that some k-subset of the pool
  // generates target. Subsets whose permutations do not generate the group of
  // units of target are skipped: products of non-permutations are never
  // permutations, so such subsets cannot generate.
  RankResult rank_exact(TransformationMonoid const& target,
                        RankOptions const&          options = {});

  // Letter name -> transformation.
  using Assignment = std::map<std::string, Transformation>;

  // Left-to-right product of the assigned letters; the empty word evaluates
  // to the identity of the given degree. Throws InvalidArgument for a letter
  // with no assignment.
  Transformation evaluate(Assignment const&               assignment,
                          std::span<std::string const>    word,
                          std::size_t                     degree);

  bool check_relation(Assignment const&            assignment,
                      std::span<std::string const> lhs,
                      std::span<std::string const> rhs);

  // "degree n size m" then "index: images : witness" per element. Witness
  // letters are space separated; "-" marks a monoid without generator data.
  std::string dump(TransformationMonoid const& m);

}  // namespace starmon
