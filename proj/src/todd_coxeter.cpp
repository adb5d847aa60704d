#include "starmon/todd_coxeter.hpp"

#include <algorithm>
#include <utility>

#include "starmon/errors.hpp"

namespace starmon {

  CongruenceTable::CongruenceTable(std::size_t letters, std::vector<std::uint32_t> right_mult,
                                   std::vector<Word> representatives)
      : _letters(letters),
        _right(std::move(right_mult)),
        _representatives(std::move(representatives)) {
    if (_right.size() != _letters * _representatives.size()) {
      throw InvalidArgument("congruence table has the wrong shape");
    }
  }

  std::uint32_t CongruenceTable::trace(std::uint32_t c, Word const& w) const {
    for (auto x : w) {
      c = at(c, x);
    }
    return c;
  }

  namespace {

    constexpr std::uint32_t undef = CongruenceTable::undefined;

    class CosetEnumerator {
     public:
      explicit CosetEnumerator(Presentation const& p)
          : _p(p), _letters(p.letter_count()) {}

      // Returns false if the live-class budget was exhausted.
      bool run(std::size_t max_cosets) {
        new_coset();
        for (std::size_t q = 0; q < _parent.size(); ++q) {
          if (!alive(q)) {
            continue;
          }
          for (auto const& r : _p.relations()) {
            auto s = trace_define(static_cast<std::uint32_t>(q), r.lhs);
            auto t = trace_define(static_cast<std::uint32_t>(q), r.rhs);
            merge(s, t);
            if (!alive(q)) {
              break;
            }
          }
          if (!alive(q)) {
            continue;
          }
          for (Letter x = 0; x < _letters; ++x) {
            if (_table[q * _letters + x] == undef) {
              auto c                     = new_coset();
              _table[q * _letters + x]   = c;
            }
          }
          if (_parent.size() > max_cosets) {
            lookahead();
            q = compact(q + 1) - 1;
            if (_live > max_cosets / 2) {
              return false;
            }
          }
        }
        return true;
      }

      std::size_t live() const noexcept {
        return _live;
      }

      // Renumber the live classes in shortlex order of their least words.
      CongruenceTable finish() {
        auto const                 root = find(0);
        std::vector<std::uint32_t> order{root};
        std::vector<std::uint32_t> new_id(_parent.size(), undef);
        std::vector<Word>          reps{Word{}};
        new_id[root] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
          auto const c = order[head];
          for (Letter x = 0; x < _letters; ++x) {
            auto d = find(_table[c * _letters + x]);
            if (new_id[d] == undef) {
              new_id[d] = static_cast<std::uint32_t>(order.size());
              order.push_back(d);
              auto w = reps[head];
              w.push_back(x);
              reps.push_back(std::move(w));
            }
          }
        }
        std::vector<std::uint32_t> right(order.size() * _letters);
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (Letter x = 0; x < _letters; ++x) {
            right[i * _letters + x] = new_id[find(_table[order[i] * _letters + x])];
          }
        }
        return CongruenceTable(_letters, std::move(right), std::move(reps));
      }

     private:
      bool alive(std::size_t c) const {
        return _parent[c] == c;
      }

      std::uint32_t new_coset() {
        auto const c = static_cast<std::uint32_t>(_parent.size());
        _parent.push_back(c);
        _table.resize(_table.size() + _letters, undef);
        ++_live;
        return c;
      }

      std::uint32_t find(std::uint32_t c) {
        auto root = c;
        while (_parent[root] != root) {
          root = _parent[root];
        }
        while (_parent[c] != root) {
          auto next  = _parent[c];
          _parent[c] = root;
          c          = next;
        }
        return root;
      }

      std::uint32_t trace_define(std::uint32_t c, Word const& w) {
        for (auto x : w) {
          auto next = _table[c * _letters + x];
          if (next == undef) {
            next                     = new_coset();
            _table[c * _letters + x] = next;
            c                        = next;
          } else {
            c = find(next);
          }
        }
        return c;
      }

      std::uint32_t trace_only(std::uint32_t c, Word const& w) {
        for (auto x : w) {
          auto next = _table[c * _letters + x];
          if (next == undef) {
            return undef;
          }
          c = find(next);
        }
        return c;
      }

      // Identify a and b and everything that follows from it. The smaller
      // index survives so processed classes stay processed.
      void merge(std::uint32_t a, std::uint32_t b) {
        _pending.emplace_back(a, b);
        while (!_pending.empty()) {
          auto [x, y] = _pending.back();
          _pending.pop_back();
          x = find(x);
          y = find(y);
          if (x == y) {
            continue;
          }
          if (x > y) {
            std::swap(x, y);
          }
          _parent[y] = x;
          --_live;
          for (Letter l = 0; l < _letters; ++l) {
            auto ty = _table[y * _letters + l];
            if (ty == undef) {
              continue;
            }
            auto& tx = _table[x * _letters + l];
            if (tx == undef) {
              tx = ty;
            } else {
              _pending.emplace_back(tx, ty);
            }
          }
        }
      }

      // Trace every relation from every live class without defining.
      void lookahead() {
        for (std::uint32_t c = 0; c < _parent.size(); ++c) {
          for (auto const& r : _p.relations()) {
            if (!alive(c)) {
              break;
            }
            auto s = trace_only(c, r.lhs);
            auto t = trace_only(c, r.rhs);
            if (s != undef && t != undef) {
              merge(s, t);
            }
          }
        }
      }

      // Drop dead classes, keeping relative order. Returns the new index of
      // the first live class with old index >= next.
      std::size_t compact(std::size_t next) {
        auto const                 old_size = _parent.size();
        std::vector<std::uint32_t> new_id(old_size, undef);
        std::uint32_t              count = 0;
        std::size_t                next_new = undef;
        for (std::uint32_t c = 0; c < old_size; ++c) {
          if (c == next) {
            next_new = count;
          }
          if (alive(c)) {
            new_id[c] = count++;
          }
        }
        if (next_new == undef) {
          next_new = count;
        }
        std::vector<std::uint32_t> table(static_cast<std::size_t>(count) * _letters, undef);
        for (std::uint32_t c = 0; c < old_size; ++c) {
          if (!alive(c)) {
            continue;
          }
          for (Letter x = 0; x < _letters; ++x) {
            auto d = _table[c * _letters + x];
            if (d != undef) {
              table[new_id[c] * _letters + x] = new_id[find(d)];
            }
          }
        }
        _table = std::move(table);
        _parent.resize(count);
        for (std::uint32_t c = 0; c < count; ++c) {
          _parent[c] = c;
        }
        return next_new;
      }

      Presentation const&                                  _p;
      std::size_t                                          _letters;
      std::vector<std::uint32_t>                           _table;
      std::vector<std::uint32_t>                           _parent;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> _pending;
      std::size_t                                          _live = 0;
    };

  }  // namespace

  QuotientResult enumerate_quotient(Presentation const& p, std::size_t bound,
                                    QuotientOptions const& options) {
    if (bound == 0) {
      throw InvalidArgument("quotient bound must be at least 1");
    }
    CosetEnumerator e(p);
    QuotientResult  result;
    if (!e.run(options.max_cosets)) {
      result.classes = e.live();
      return result;
    }
    auto table       = e.finish();
    result.completed = true;
    result.classes   = table.size();
    if (table.size() <= bound) {
      result.table.emplace(std::move(table));
    }
    return result;
  }

  bool is_valid_quotient(CongruenceTable const& t, Presentation const& p) {
    if (t.letter_count() != p.letter_count()) {
      return false;
    }
    for (std::uint32_t c = 0; c < t.size(); ++c) {
      for (Letter x = 0; x < t.letter_count(); ++x) {
        if (t.at(c, x) >= t.size()) {
          return false;
        }
      }
      for (auto const& r : p.relations()) {
        if (t.trace(c, r.lhs) != t.trace(c, r.rhs)) {
          return false;
        }
      }
      if (t.trace(0, t.representative(c)) != c) {
        return false;
      }
    }
    return true;
  }

}  // namespace starmon
