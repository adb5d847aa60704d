#include "starmon/graph_endo.hpp"

#include <algorithm>
#include <thread>

#include <fmt/format.h>

#include "starmon/errors.hpp"

namespace starmon {

  SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<std::pair<Point, Point>> edges)
      : _n(vertex_count), _adjacent(vertex_count * vertex_count, false) {
    if (_n == 0) {
      throw InvalidArgument("a graph needs at least one vertex");
    }
    for (auto [u, v] : edges) {
      if (u >= _n || v >= _n) {
        throw InvalidArgument(fmt::format("edge {{{}, {}}} has an endpoint out of range", u, v));
      }
      if (u == v) {
        throw InvalidArgument(fmt::format("loop at vertex {}", u));
      }
      if (u > v) {
        std::swap(u, v);
      }
      if (_adjacent[u * _n + v]) {
        throw InvalidArgument(fmt::format("duplicate edge {{{}, {}}}", u, v));
      }
      _adjacent[u * _n + v] = true;
      _adjacent[v * _n + u] = true;
      _edges.emplace_back(u, v);
    }
    std::sort(_edges.begin(), _edges.end());
  }

  SimpleGraph star_graph(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("invalid degree: star graph needs n >= 1");
    }
    std::vector<std::pair<Point, Point>> edges;
    for (Point i = 1; i < n; ++i) {
      edges.emplace_back(0, i);
    }
    return SimpleGraph(n, std::move(edges));
  }

  std::string_view name(EndoClass c) noexcept {
    switch (c) {
      case EndoClass::End:
        return "end";
      case EndoClass::WeakEnd:
        return "wend";
      case EndoClass::StrongEnd:
        return "send";
      case EndoClass::StrongWeakEnd:
        return "swend";
      case EndoClass::Aut:
        return "aut";
    }
    return "?";
  }

  std::optional<EndoClass> parse_endo_class(std::string_view text) noexcept {
    for (auto c : all_endo_classes) {
      if (name(c) == text) {
        return c;
      }
    }
    return std::nullopt;
  }

  namespace {

    bool bijective(std::span<Point const> images) {
      std::vector<bool> seen(images.size(), false);
      for (auto y : images) {
        if (seen[y]) {
          return false;
        }
        seen[y] = true;
      }
      return true;
    }

  }  // namespace

  bool is_in_class(std::span<Point const> images, SimpleGraph const& g, EndoClass c) {
    auto const n = g.vertex_count();
    if (c == EndoClass::Aut && !bijective(images)) {
      return false;
    }
    // u == v never matters: {u, u} is not an edge and neither is its image.
    for (Point u = 0; u < n; ++u) {
      for (Point v = u + 1; v < n; ++v) {
        bool const edge       = g.has_edge(u, v);
        bool const image_edge = g.has_edge(images[u], images[v]);
        bool const collapsed  = images[u] == images[v];
        switch (c) {
          case EndoClass::End:
            if (edge && !image_edge) {
              return false;
            }
            break;
          case EndoClass::WeakEnd:
            if (edge && !collapsed && !image_edge) {
              return false;
            }
            break;
          case EndoClass::StrongEnd:
          case EndoClass::Aut:
            if (edge != image_edge) {
              return false;
            }
            break;
          case EndoClass::StrongWeakEnd:
            if ((edge && !collapsed) != image_edge) {
              return false;
            }
            break;
        }
      }
    }
    return true;
  }

  EndoClassSet classify(Transformation const& f, SimpleGraph const& g) {
    if (f.degree() != g.vertex_count()) {
      throw InvalidArgument(fmt::format("transformation of degree {} on a graph with {} vertices",
                                        f.degree(), g.vertex_count()));
    }
    EndoClassSet out;
    for (auto c : all_endo_classes) {
      if (is_in_class(f.images(), g, c)) {
        out.insert(c);
      }
    }
    return out;
  }

  namespace {

    // All maps of degree n whose first image is `lead`, in lexicographic
    // order, that lie in class c.
    std::vector<Transformation> scan_block(std::size_t n, Point lead, SimpleGraph const& g,
                                           EndoClass c) {
      std::vector<Transformation> out;
      std::vector<Point>          images(n, 0);
      images[0] = lead;
      while (true) {
        if (is_in_class(images, g, c)) {
          out.emplace_back(images);
        }
        // odometer over positions 1..n-1, last position fastest
        std::size_t i = n;
        while (i > 1) {
          --i;
          if (++images[i] < n) {
            break;
          }
          images[i] = 0;
          if (i == 1) {
            return out;
          }
        }
        if (n == 1) {
          return out;
        }
      }
    }

  }  // namespace

  TransformationMonoid enumerate_class(std::size_t n, EndoClass c,
                                       EnumerateOptions const& options) {
    if (n == 0) {
      throw InvalidArgument("invalid degree: enumeration needs n >= 1");
    }
    if (n > options.max_degree) {
      throw BudgetExceeded(fmt::format(
          "degree {} exceeds the enumeration budget (max degree {})", n, options.max_degree));
    }
    auto const g = star_graph(n);

    std::vector<std::vector<Transformation>> blocks(n);
    unsigned threads = options.threads == 0 ? std::thread::hardware_concurrency()
                                            : options.threads;
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n));
    if (threads == 1) {
      for (Point lead = 0; lead < n; ++lead) {
        blocks[lead] = scan_block(n, lead, g, c);
      }
    } else {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          for (Point lead = t; lead < n; lead += threads) {
            blocks[lead] = scan_block(n, lead, g, c);
          }
        });
      }
    }
    // Blocks are keyed by the leading image, so concatenation is already in
    // lexicographic order regardless of scheduling.
    std::vector<Transformation> elements;
    for (auto& b : blocks) {
      std::move(b.begin(), b.end(), std::back_inserter(elements));
    }
    return TransformationMonoid::from_elements(n, std::move(elements));
  }

  bool has_cardinality_formula(std::size_t n, EndoClass c) noexcept {
    switch (c) {
      case EndoClass::End:
      case EndoClass::StrongEnd:
      case EndoClass::WeakEnd:
        return n >= 1;
      case EndoClass::StrongWeakEnd:
        return n >= 2;
      case EndoClass::Aut:
        return n >= 3;
    }
    return false;
  }

  boost::multiprecision::cpp_int cardinality_formula(std::size_t n, EndoClass c) {
    using boost::multiprecision::cpp_int;
    if (!has_cardinality_formula(n, c)) {
      throw InvalidArgument(fmt::format("no cardinality formula for class {} at n = {}",
                                        name(c), n));
    }
    auto ipow = [](std::size_t base, std::size_t exp) {
      cpp_int r = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        r *= base;
      }
      return r;
    };
    switch (c) {
      case EndoClass::End:
      case EndoClass::StrongEnd:
        return ipow(n - 1, n - 1) + (n - 1);
      case EndoClass::StrongWeakEnd:
        return ipow(n - 1, n - 1) + (2 * n - 1);
      case EndoClass::WeakEnd:
        return ipow(n, n - 1) + cpp_int(n - 1) * ipow(2, n - 1);
      case EndoClass::Aut: {
        cpp_int r = 1;
        for (std::size_t i = 2; i < n; ++i) {
          r *= i;
        }
        return r;
      }
    }
    return 0;
  }

  bool star_description_contains(Transformation const& f, EndoClass c) {
    auto const n        = f.degree();
    auto const img      = f.images();
    bool const fixes_0  = img[0] == 0;
    bool const leaves_stay_leaves
        = std::all_of(img.begin() + 1, img.end(), [](Point y) { return y != 0; });
    bool const spike = !fixes_0 && std::all_of(img.begin() + 1, img.end(),
                                               [](Point y) { return y == 0; });
    bool const constant
        = std::all_of(img.begin(), img.end(), [&](Point y) { return y == img[0]; });
    bool const in_end = (fixes_0 && leaves_stay_leaves) || spike;
    switch (c) {
      case EndoClass::End:
      case EndoClass::StrongEnd:
        return in_end;
      case EndoClass::StrongWeakEnd:
        return in_end || constant;
      case EndoClass::WeakEnd:
        return fixes_0 || std::all_of(img.begin(), img.end(), [&](Point y) {
                 return y == 0 || y == img[0];
               });
      case EndoClass::Aut:
        // n <= 2: the single edge may be flipped.
        if (n <= 2) {
          return is_permutation(f);
        }
        return fixes_0 && is_permutation(f);
    }
    return false;
  }

  namespace {

    void require_at_least(std::size_t n, std::size_t min, char const* what) {
      if (n < min) {
        throw InvalidArgument(fmt::format("{} needs degree >= {}, got {}", what, min, n));
      }
    }

    Transformation from_fn(std::size_t n, auto&& fn) {
      std::vector<Point> images(n);
      for (std::size_t i = 0; i < n; ++i) {
        images[i] = static_cast<Point>(fn(static_cast<Point>(i)));
      }
      return Transformation(std::move(images));
    }

  }  // namespace

  Transformation star_a0(std::size_t n) {
    require_at_least(n, 3, "a0");
    return from_fn(n, [](Point i) -> Point { return i == 1 ? 2 : i == 2 ? 1 : i; });
  }

  Transformation star_b0(std::size_t n) {
    require_at_least(n, 3, "b0");
    auto const last = static_cast<Point>(n - 1);
    return from_fn(n, [last](Point i) -> Point { return i == 0 ? 0 : i == last ? 1 : i + 1; });
  }

  Transformation star_e0(std::size_t n) {
    require_at_least(n, 3, "e0");
    return from_fn(n, [](Point i) -> Point { return i == 2 ? 1 : i; });
  }

  Transformation star_c0(std::size_t n) {
    require_at_least(n, 3, "c0");
    return from_fn(n, [](Point i) -> Point { return i == 1 ? 0 : i; });
  }

  Transformation star_z(std::size_t n) {
    require_at_least(n, 2, "z");
    return from_fn(n, [](Point i) -> Point { return i == 0 ? 1 : 0; });
  }

  Transformation star_z0(std::size_t n) {
    require_at_least(n, 1, "z0");
    return from_fn(n, [](Point) -> Point { return 0; });
  }

  std::vector<NamedTransformation> standard_generators(std::size_t n, EndoClass c) {
    if (n < 3) {
      throw InvalidArgument(fmt::format("standard generators need n >= 3, got {}", n));
    }
    std::vector<NamedTransformation> out{{"a0", star_a0(n)}};
    bool const small = n == 3;
    switch (c) {
      case EndoClass::End:
        if (!small) {
          out.push_back({"b0", star_b0(n)});
          out.push_back({"e0", star_e0(n)});
        }
        out.push_back({"z", star_z(n)});
        break;
      case EndoClass::StrongWeakEnd:
        if (!small) {
          out.push_back({"b0", star_b0(n)});
          out.push_back({"e0", star_e0(n)});
        }
        out.push_back({"z", star_z(n)});
        out.push_back({"z0", star_z0(n)});
        break;
      case EndoClass::WeakEnd:
        if (!small) {
          out.push_back({"b0", star_b0(n)});
          out.push_back({"e0", star_e0(n)});
        }
        out.push_back({"c0", star_c0(n)});
        out.push_back({"z", star_z(n)});
        break;
      default:
        throw InvalidArgument(fmt::format("no standard generators for class {}", name(c)));
    }
    return out;
  }

  Assignment standard_assignment(std::size_t n, EndoClass c) {
    Assignment out;
    for (auto& [letter, f] : standard_generators(n, c)) {
      out.emplace(letter, f);
    }
    return out;
  }

  bool is_regular_element(Transformation const& f, TransformationMonoid const& m) {
    if (!contains(m, f)) {
      throw InvalidArgument(fmt::format("{} is not an element of the monoid", to_string(f)));
    }
    return std::any_of(m.elements().begin(), m.elements().end(), [&](auto const& b) {
      return compose(compose(f, b), f) == f;
    });
  }

  bool is_regular_monoid(TransformationMonoid const& m) {
    return std::all_of(m.elements().begin(), m.elements().end(),
                       [&](auto const& f) { return is_regular_element(f, m); });
  }

}  // namespace starmon
