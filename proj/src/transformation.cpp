#include "starmon/transformation.hpp"

#include <algorithm>
#include <charconv>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "starmon/errors.hpp"

namespace starmon {

  Transformation::Transformation(std::vector<Point> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw InvalidArgument("invalid degree: a transformation needs degree >= 1");
    }
    auto const n = _images.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (_images[i] >= n) {
        throw InvalidArgument(fmt::format(
            "image {} of point {} is out of range for degree {}",
            _images[i], i, n));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    if (degree == 0) {
      throw InvalidArgument("invalid degree: identity needs degree >= 1");
    }
    std::vector<Point> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<Point>(i);
    }
    return Transformation(std::move(images));
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw InvalidArgument(fmt::format(
          "cannot compose transformations of degrees {} and {}",
          f.degree(), g.degree()));
    }
    std::vector<Point> out(f.degree());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = g[f[i]];
    }
    return Transformation(std::move(out));
  }

  Transformation power(Transformation const& f, std::size_t k) {
    auto result = Transformation::identity(f.degree());
    auto base   = f;
    // Square-and-multiply is valid since powers of f commute.
    while (k > 0) {
      if (k & 1U) {
        result = compose(result, base);
      }
      k >>= 1U;
      if (k > 0) {
        base = compose(base, base);
      }
    }
    return result;
  }

  std::vector<Point> image(Transformation const& f) {
    std::vector<Point> out(f.images().begin(), f.images().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<std::vector<Point>> kernel(Transformation const& f) {
    auto const n = f.degree();
    // block_of[y] = index of the block collecting the preimage of y
    std::vector<std::size_t>        block_of(n, n);
    std::vector<std::vector<Point>> blocks;
    for (std::size_t i = 0; i < n; ++i) {
      auto& b = block_of[f[i]];
      if (b == n) {
        b = blocks.size();
        blocks.emplace_back();
      }
      blocks[b].push_back(static_cast<Point>(i));
    }
    return blocks;
  }

  bool is_permutation(Transformation const& f) {
    std::vector<bool> seen(f.degree(), false);
    for (auto y : f.images()) {
      if (seen[y]) {
        return false;
      }
      seen[y] = true;
    }
    return true;
  }

  bool is_idempotent(Transformation const& f) {
    for (auto y : f.images()) {
      if (f[y] != y) {
        return false;
      }
    }
    return true;
  }

  std::string to_string(Transformation const& f) {
    return fmt::format("{}", fmt::join(f.images(), ","));
  }

  Transformation parse_transformation(std::string_view text) {
    std::vector<Point> images;
    std::size_t        pos = 0;
    while (true) {
      auto comma = text.find(',', pos);
      auto field = text.substr(pos, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - pos);
      while (!field.empty() && field.front() == ' ') {
        field.remove_prefix(1);
      }
      while (!field.empty() && field.back() == ' ') {
        field.remove_suffix(1);
      }
      Point value = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw InvalidArgument(fmt::format("malformed transformation '{}'", text));
      }
      images.push_back(value);
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
    }
    return Transformation(std::move(images));
  }

  std::size_t hash_value(Transformation const& f) noexcept {
    std::size_t h = f.degree();
    for (auto y : f.images()) {
      h ^= y + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    }
    return h;
  }

}  // namespace starmon
