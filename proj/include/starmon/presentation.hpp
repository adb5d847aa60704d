#pragma once

// Monoid presentations <X | R> as data, the builders for the presentations of
// Sym, T and PT and of the star graph monoids, and the structured text format
// they are exchanged in.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace starmon {

  using Letter = std::uint32_t;
  // The empty word is the identity.
  using Word = std::vector<Letter>;

  struct Relation {
    Word lhs;
    Word rhs;
    friend bool operator==(Relation const&, Relation const&) = default;
  };

  class Presentation {
   public:
    // Letter names must be nonempty, distinct and consist of letters, digits
    // and underscores only.
    explicit Presentation(std::vector<std::string> alphabet);

    std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }
    std::size_t letter_count() const noexcept {
      return _alphabet.size();
    }

    Letter letter(std::string_view name) const;

    // Word expressions: space separated letter names, parenthesised groups
    // and nonnegative exponents, e.g. "a b^2 (e b a)^3". "1" and "" denote
    // the empty word.
    Word parse_word(std::string_view text) const;

    std::vector<std::string> letter_names(Word const& w) const;
    std::string              to_string(Word const& w) const;

    // Returns false (and adds nothing) if the relation is already present.
    bool add_relation(Word lhs, Word rhs);
    bool add_relation(std::string_view lhs, std::string_view rhs);

    // u1 = u2 = ... = uk becomes (u1, u2), (u2, u3), ..., (u(k-1), uk).
    void add_chain(std::vector<std::string_view> const& words);

    // Same letter indices, new names. Names missing from the map are kept.
    Presentation relabeled(std::map<std::string, std::string> const& names) const;
    Presentation without_relation(std::size_t index) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    void check_word(Word const& w) const;

    std::vector<std::string> _alphabet;
    std::vector<Relation>    _relations;
  };

  // {"alphabet": [...], "relations": [[lhs, rhs], ...]} with each word a list
  // of letter names. dump -> load -> dump is byte-identical.
  std::string  to_json(Presentation const& p);
  Presentation presentation_from_json(std::string_view text);

  // Moore's presentation of Sym(n) on a = (1 2), b = (1 2 ... n); n >= 3.
  Presentation sym_presentation(std::size_t n);
  // Full transformation monoid T(n) on a, b, e with e = [1 -> 1, 2 -> 1];
  // separate relation lists for n == 3 and n >= 4.
  Presentation full_transf_presentation(std::size_t n);
  // Partial transformation monoid PT(n) on a, b, c, e with c the partial
  // identity undefined at 1; separate relation lists for n == 3 and n >= 4.
  Presentation partial_transf_presentation(std::size_t n);

  // Star graph monoids on the standard generator names; n >= 3. For n >= 4 the
  // embedded T / PT presentation is the one for n - 1 points.
  Presentation end_star_presentation(std::size_t n);
  Presentation swend_star_presentation(std::size_t n);
  Presentation wend_star_presentation(std::size_t n);

}  // namespace starmon
