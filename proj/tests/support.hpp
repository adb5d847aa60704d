#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to
// check.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "starmon/transformation.hpp"

namespace starmon::test {

  using Images = std::vector<Point>;

  // i(fg) = (if)g, evaluated one point at a time.
  inline Images apply_then(Images const& f, Images const& g) {
    Images out;
    for (auto x : f) {
      out.push_back(g.at(x));
    }
    return out;
  }

  inline Images images_of(Transformation const& f) {
    return Images(f.images().begin(), f.images().end());
  }

  inline Transformation random_transformation(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<Point> d(0, static_cast<Point>(n - 1));
    Images                               img(n);
    for (auto& y : img) {
      y = d(rng);
    }
    return Transformation(img);
  }

  // Every map of degree n, generated recursively.
  inline void all_maps(std::size_t n, Images& prefix, std::vector<Images>& out) {
    if (prefix.size() == n) {
      out.push_back(prefix);
      return;
    }
    for (Point y = 0; y < n; ++y) {
      prefix.push_back(y);
      all_maps(n, prefix, out);
      prefix.pop_back();
    }
  }

  inline std::vector<Images> all_maps(std::size_t n) {
    std::vector<Images> out;
    Images              prefix;
    all_maps(n, prefix, out);
    return out;
  }

  // Star graph edge test written out directly: {u, v} is an edge iff exactly
  // one endpoint is the centre.
  inline bool star_edge(Point u, Point v) {
    return u != v && (u == 0 || v == 0);
  }

  enum class Kind { End, Weak, Strong, StrongWeak, Aut };

  inline bool star_member(Images const& f, Kind k) {
    auto const n = f.size();
    if (k == Kind::Aut && std::set<Point>(f.begin(), f.end()).size() != n) {
      return false;
    }
    for (Point u = 0; u < n; ++u) {
      for (Point v = 0; v < n; ++v) {
        bool e  = star_edge(u, v);
        bool ie = star_edge(f[u], f[v]);
        bool ok = true;
        switch (k) {
          case Kind::End:
            ok = !e || ie;
            break;
          case Kind::Weak:
            ok = !(e && f[u] != f[v]) || ie;
            break;
          case Kind::Strong:
          case Kind::Aut:
            ok = e == ie;
            break;
          case Kind::StrongWeak:
            ok = (e && f[u] != f[v]) == ie;
            break;
        }
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  }

  inline std::size_t star_count(std::size_t n, Kind k) {
    std::size_t count = 0;
    for (auto const& f : all_maps(n)) {
      count += star_member(f, k) ? 1 : 0;
    }
    return count;
  }

}  // namespace starmon::test
