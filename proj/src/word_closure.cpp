#include "starmon/word_closure.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace starmon {

  namespace {

    constexpr std::uint32_t none = UINT32_MAX;

    class WordClosure {
     public:
      explicit WordClosure(Presentation const& p) : _p(p), _k(p.letter_count()) {
        add_word();  // the empty word
      }

      std::optional<std::size_t> run(std::size_t max_words) {
        _max_words = max_words;
        while (true) {
          for (std::uint32_t w = 0; w < _uf.size(); ++w) {
            if (!close_class(w)) {
              return std::nullopt;
            }
          }
          // The certificate: every live class has all its edges and no
          // relation traced from any class separates two classes.
          if (!sweep() && complete()) {
            std::size_t classes = 0;
            for (std::uint32_t w = 0; w < _uf.size(); ++w) {
              classes += _uf[w] == w ? 1 : 0;
            }
            return classes;
          }
        }
      }

     private:
      std::uint32_t add_word() {
        auto id = static_cast<std::uint32_t>(_uf.size());
        _uf.push_back(id);
        _edge.resize(_edge.size() + _k, none);
        return id;
      }

      std::uint32_t root(std::uint32_t w) {
        while (_uf[w] != w) {
          _uf[w] = _uf[_uf[w]];
          w      = _uf[w];
        }
        return w;
      }

      // Give w all its edges, then trace every relation from w, creating the
      // missing words on the way, and merge the two ends. False when the
      // word budget runs out.
      bool close_class(std::uint32_t w) {
        if (_uf[w] != w) {
          return true;
        }
        for (Letter x = 0; x < _k; ++x) {
          if (_edge[w * _k + x] == none) {
            if (_uf.size() >= _max_words) {
              return false;
            }
            auto child        = add_word();
            _edge[w * _k + x] = child;
          }
        }
        for (auto const& r : _p.relations()) {
          if (_uf[w] != w) {
            return true;
          }
          auto s = extend(w, r.lhs);
          auto t = extend(w, r.rhs);
          if (s == none || t == none) {
            return false;
          }
          unite(s, t);
        }
        return true;
      }

      std::uint32_t extend(std::uint32_t w, Word const& u) {
        for (auto x : u) {
          w = root(w);
          if (_edge[w * _k + x] == none) {
            if (_uf.size() >= _max_words) {
              return none;
            }
            auto child        = add_word();
            _edge[w * _k + x] = child;
          }
          w = _edge[w * _k + x];
        }
        return root(w);
      }

      bool complete() const {
        for (std::uint32_t w = 0; w < _uf.size(); ++w) {
          if (_uf[w] != w) {
            continue;
          }
          for (Letter x = 0; x < _k; ++x) {
            if (_edge[w * _k + x] == none) {
              return false;
            }
          }
        }
        return true;
      }

      std::uint32_t trace(std::uint32_t w, Word const& u) {
        for (auto x : u) {
          auto next = _edge[root(w) * _k + x];
          if (next == none) {
            return none;
          }
          w = next;
        }
        return root(w);
      }

      // Returns true if anything was merged.
      bool unite(std::uint32_t a, std::uint32_t b) {
        bool changed = false;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> todo{{a, b}};
        while (!todo.empty()) {
          auto [x, y] = todo.back();
          todo.pop_back();
          x = root(x);
          y = root(y);
          if (x == y) {
            continue;
          }
          if (y < x) {
            std::swap(x, y);
          }
          _uf[y]  = x;
          changed = true;
          for (Letter l = 0; l < _k; ++l) {
            auto ey = _edge[y * _k + l];
            if (ey == none) {
              continue;
            }
            auto& ex = _edge[x * _k + l];
            if (ex == none) {
              ex = ey;
            } else {
              todo.emplace_back(ex, ey);
            }
          }
        }
        return changed;
      }

      // Repeat full passes over (class, relation) until nothing merges;
      // true if anything merged.
      bool sweep() {
        bool any     = false;
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::uint32_t w = 0; w < _uf.size(); ++w) {
            for (auto const& r : _p.relations()) {
              if (_uf[w] != w) {
                break;
              }
              auto s = trace(w, r.lhs);
              if (s == none) {
                continue;
              }
              auto t = trace(w, r.rhs);
              if (t != none && unite(s, t)) {
                changed = true;
                any     = true;
              }
            }
          }
        }
        return any;
      }

      Presentation const&        _p;
      std::size_t                _k;
      std::vector<std::uint32_t> _uf;
      std::vector<std::uint32_t> _edge;
      std::size_t                _max_words = 0;
    };

  }  // namespace

  std::optional<std::size_t> naive_quotient_size(Presentation const&       p,
                                                 WordClosureOptions const& options) {
    return WordClosure(p).run(options.max_words);
  }

}  // namespace starmon
