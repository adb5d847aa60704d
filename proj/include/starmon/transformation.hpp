#pragma once

// Full transformations of {0, ..., n - 1}.
//
// Composition is LEFT-TO-RIGHT: compose(f, g) applies f first and then g,
// i.e. compose(f, g)[i] == g[f[i]]. This matches writing maps on the right of
// their arguments (i(fg) = (if)g), which is the convention every relation in
// the presentation builders is written in.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starmon {

  using Point = std::uint32_t;

  class Transformation {
   public:
    // Throws InvalidArgument if images is empty or an entry is out of range.
    explicit Transformation(std::vector<Point> images);
    Transformation(std::initializer_list<Point> images)
        : Transformation(std::vector<Point>(images)) {}

    static Transformation identity(std::size_t degree);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    std::span<Point const> images() const noexcept {
      return _images;
    }

    Point operator[](std::size_t i) const {
      return _images[i];
    }

    // Lexicographic on the image sequence; this is the canonical order used
    // for all enumeration output.
    friend auto operator<=>(Transformation const&, Transformation const&)
        = default;
    friend bool operator==(Transformation const&, Transformation const&)
        = default;

   private:
    std::vector<Point> _images;
  };

  // Apply f first, then g. Throws InvalidArgument on degree mismatch.
  Transformation compose(Transformation const& f, Transformation const& g);

  // k-fold left-to-right product; power(f, 0) is the identity.
  Transformation power(Transformation const& f, std::size_t k);

  // Sorted, duplicate-free list of image points.
  std::vector<Point> image(Transformation const& f);

  // Blocks are the preimages of the image points, each block sorted, blocks
  // ordered by their least element.
  std::vector<std::vector<Point>> kernel(Transformation const& f);

  bool is_permutation(Transformation const& f);
  bool is_idempotent(Transformation const& f);

  // "0,2,1,3" <-> Transformation. The degree is the number of entries.
  std::string     to_string(Transformation const& f);
  Transformation  parse_transformation(std::string_view text);

  std::size_t hash_value(Transformation const& f) noexcept;

}  // namespace starmon

template <>
struct std::hash<starmon::Transformation> {
  std::size_t operator()(starmon::Transformation const& f) const noexcept {
    return starmon::hash_value(f);
  }
};
