#pragma once

// Independent check on Todd-Coxeter. Words live in a trie whose nodes are
// merged with a union-find; merges propagate along common edges. Classes are
// visited in creation order: each gets all its edges, then every relation is
// traced from it (growing the trie where a path is missing) and the two ends
// are merged. The count is only reported after a separate certificate pass:
// every live class has all its edges and no relation traced from any class
// separates two classes. Every merge follows from the relations and the
// certificate shows the table respects them, so the count is exact. No
// compaction, lookahead or renumbering is shared with the main engine.

#include <cstddef>
#include <optional>

#include "starmon/presentation.hpp"

namespace starmon {

  struct WordClosureOptions {
    std::size_t max_words = 4'000'000;
  };

  // Size of X*/~R, or nullopt if more than max_words words were needed.
  std::optional<std::size_t> naive_quotient_size(Presentation const&       p,
                                                 WordClosureOptions const& options = {});

}  // namespace starmon
