#pragma once

// Enumeration of the finitely presented monoid X*/~R by Todd-Coxeter
// (Hasse-Leech-Trotter strategy: relations are traced, defining new classes
// as needed, from every class in order; coincidences are collapsed with a
// union-find forwarding table).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "starmon/presentation.hpp"

namespace starmon {

  class CongruenceTable {
   public:
    static constexpr std::uint32_t undefined = UINT32_MAX;

    CongruenceTable(std::size_t letters, std::vector<std::uint32_t> right_mult,
                    std::vector<Word> representatives);

    std::size_t size() const noexcept {
      return _representatives.size();
    }
    std::size_t letter_count() const noexcept {
      return _letters;
    }
    // Class of (representative of c) * x.
    std::uint32_t at(std::size_t c, Letter x) const {
      return _right[c * _letters + x];
    }
    std::uint32_t trace(std::uint32_t c, Word const& w) const;
    // Class 0 is the class of the empty word; representatives are
    // shortlex-minimal.
    Word const& representative(std::size_t c) const {
      return _representatives.at(c);
    }
    std::vector<Word> const& representatives() const noexcept {
      return _representatives;
    }

   private:
    std::size_t                _letters;
    std::vector<std::uint32_t> _right;
    std::vector<Word>          _representatives;
  };

  struct QuotientOptions {
    // Live classes allowed while enumerating; the working set is compacted
    // and a lookahead pass is run before giving up.
    std::size_t max_cosets = 1'000'000;
  };

  struct QuotientResult {
    // Present iff the enumeration completed with at most `bound` classes.
    std::optional<CongruenceTable> table;
    // True iff the enumeration ran to completion (classes is then exact).
    bool completed = false;
    // Exact size when completed, otherwise live classes when the budget hit.
    std::size_t classes = 0;

    bool exceeded() const noexcept {
      return !table.has_value();
    }
  };

  // exceeded() means either the completed quotient has more than `bound`
  // classes, or the working budget ran out first. The latter says nothing
  // about finiteness.
  QuotientResult enumerate_quotient(Presentation const& p, std::size_t bound,
                                    QuotientOptions const& options = {});

  // Every relation traced from every class lands in a single class, and
  // every representative traced from class 0 returns its own class.
  bool is_valid_quotient(CongruenceTable const& t, Presentation const& p);

}  // namespace starmon
