// Builders for the concrete presentations. Chained equalities u = v = w are
// expanded into adjacent pairs; "= 1" chains of the symmetric group are
// written one relation per power.

#include <fmt/format.h>

#include "starmon/errors.hpp"
#include "starmon/presentation.hpp"

namespace starmon {

  namespace {

    void require_n(std::size_t n, std::size_t min, char const* what) {
      if (n < min) {
        throw InvalidArgument(fmt::format("{} presentation needs n >= {}, got {}", what, min, n));
      }
    }

    // Copy every relation of src into dst, matching letters by name.
    void import_relations(Presentation& dst, Presentation const& src) {
      for (auto const& r : src.relations()) {
        Word sides[2];
        Word const* from[2] = {&r.lhs, &r.rhs};
        for (std::size_t s = 0; s < 2; ++s) {
          for (auto const& name : src.letter_names(*from[s])) {
            sides[s].push_back(dst.letter(name));
          }
        }
        dst.add_relation(std::move(sides[0]), std::move(sides[1]));
      }
    }

    void add_sym_relations(Presentation& p, std::size_t n) {
      p.add_relation("a^2", "1");
      p.add_relation(fmt::format("b^{}", n), "1");
      p.add_relation(fmt::format("(b a)^{}", n - 1), "1");
      p.add_relation(fmt::format("(a b^{} a b)^3", n - 1), "1");
      for (std::size_t j = 2; j + 2 <= n; ++j) {
        p.add_relation(fmt::format("(a b^{} a b^{})^2", n - j, j), "1");
      }
    }

    // Relations involving e, shared by T(n) and PT(n).
    void add_e_relations(Presentation& p, std::size_t n) {
      auto const m1 = n - 1;
      if (n == 3) {
        p.add_chain({"a e", "b a b^2 a b e b^2 a b a b^2", "(e b a b^2)^2", "e"});
        p.add_chain({"(b^2 a b e)^2", "e b^2 a b e", "(e b^2 a b)^2"});
        return;
      }
      auto const m2 = n - 2;
      auto const w1 = fmt::format("b^{} a b^2 e b^{} a b^2", m2, m2);
      auto const w2 = fmt::format("b a b^{} a b e b^{} a b a b^{}", m1, m1, m1);
      auto const w3 = fmt::format("(e b a b^{})^2", m1);
      p.add_chain({"a e", w1, w2, w3, "e"});
      auto const v1 = fmt::format("(b^{} a b e)^2", m1);
      auto const v2 = fmt::format("e b^{} a b e", m1);
      auto const v3 = fmt::format("(e b^{} a b)^2", m1);
      p.add_chain({v1, v2, v3});
      p.add_relation(fmt::format("(e b a b^{} a b)^2", m2), fmt::format("(b a b^{} a b e)^2", m2));
    }

    void add_star_z_relations(Presentation& p, std::size_t n) {
      p.add_chain({"a0 z", "b0 z", "e0 z", "z"});
      p.add_relation("z^2", fmt::format("(e0 b0)^{} e0", n - 3));
    }

  }  // namespace

  Presentation sym_presentation(std::size_t n) {
    require_n(n, 3, "symmetric group");
    Presentation p({"a", "b"});
    add_sym_relations(p, n);
    return p;
  }

  Presentation full_transf_presentation(std::size_t n) {
    require_n(n, 3, "full transformation monoid");
    Presentation p({"a", "b", "e"});
    add_sym_relations(p, n);
    add_e_relations(p, n);
    return p;
  }

  Presentation partial_transf_presentation(std::size_t n) {
    require_n(n, 3, "partial transformation monoid");
    Presentation p({"a", "b", "c", "e"});
    add_sym_relations(p, n);
    auto const m1 = n - 1;
    auto const u1 = fmt::format("b^{} a b c b^{} a b", m1, m1);
    auto const u2 = fmt::format("b a c a b^{}", m1);
    p.add_chain({u1, u2, "c", "c^2"});
    p.add_chain({"(c a)^2", "c a c", "(a c)^2"});
    add_e_relations(p, n);
    p.add_relation("e c", "c a c");
    p.add_relation("c e", "c a");
    p.add_relation("e a c", "e a");
    auto const t = fmt::format("a b^{} a b a", m1);
    p.add_relation(fmt::format("e {} c", t), fmt::format("{} c {} e {}", t, t, t));
    return p;
  }

  Presentation end_star_presentation(std::size_t n) {
    require_n(n, 3, "End S_n");
    if (n == 3) {
      Presentation p({"a0", "z"});
      p.add_relation("a0^2", "1");
      p.add_relation("a0 z", "z");
      p.add_relation("z^3", "z");
      return p;
    }
    Presentation p({"a0", "b0", "e0", "z"});
    import_relations(p, full_transf_presentation(n - 1).relabeled(
                            {{"a", "a0"}, {"b", "b0"}, {"e", "e0"}}));
    add_star_z_relations(p, n);
    return p;
  }

  Presentation swend_star_presentation(std::size_t n) {
    require_n(n, 3, "swEnd S_n");
    if (n == 3) {
      Presentation p({"a0", "z", "z0"});
      import_relations(p, end_star_presentation(3));
      p.add_chain({"a0 z0", "z z0", "z0^2", "z0 a0", "z0 z^2", "z0"});
      return p;
    }
    Presentation p({"a0", "b0", "e0", "z", "z0"});
    import_relations(p, end_star_presentation(n));
    p.add_chain({"a0 z0", "b0 z0", "e0 z0", "z z0", "z0^2", "z0 a0", "z0 b0", "z0 e0", "z0"});
    return p;
  }

  Presentation wend_star_presentation(std::size_t n) {
    require_n(n, 3, "wEnd S_n");
    if (n == 3) {
      Presentation p({"a0", "c0", "z"});
      import_relations(p, end_star_presentation(3));
      p.add_relation("c0^2", "c0");
      p.add_chain({"(c0 a0)^2", "(a0 c0)^2", "c0 a0 c0"});
      p.add_relation("z^2 c0", "c0 a0 c0");
      p.add_relation("c0 z^2", "c0 a0");
      p.add_relation("z^2 a0 c0", "z^2 a0");
      p.add_relation("z^2 c0", "z c0");
      return p;
    }
    Presentation p({"a0", "b0", "e0", "c0", "z"});
    import_relations(p, partial_transf_presentation(n - 1).relabeled(
                            {{"a", "a0"}, {"b", "b0"}, {"c", "c0"}, {"e", "e0"}}));
    add_star_z_relations(p, n);
    p.add_relation("z^2 c0", "z c0");
    return p;
  }

}  // namespace starmon
