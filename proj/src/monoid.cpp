#include "starmon/monoid.hpp"

#include <algorithm>
#include <deque>

#include <fmt/format.h>

#include "starmon/errors.hpp"

namespace starmon {

  struct MonoidBuilder {
    static TransformationMonoid make() {
      return TransformationMonoid();
    }
    static TransformationMonoid& self(TransformationMonoid& m) {
      return m;
    }
    static std::size_t add(TransformationMonoid& m, Transformation f) {
      auto const idx = m._elements.size();
      m._index.emplace(f, idx);
      m._elements.push_back(std::move(f));
      return idx;
    }
    static auto& index(TransformationMonoid& m) {
      return m._index;
    }
    static void set_degree(TransformationMonoid& m, std::size_t n) {
      m._degree = n;
    }
    static void set_identity(TransformationMonoid& m, std::size_t i) {
      m._identity_index = i;
    }
    static void set_generators(TransformationMonoid&       m,
                               std::vector<std::string>    names,
                               std::vector<Transformation> gens) {
      m._generator_names = std::move(names);
      m._generators      = std::move(gens);
    }
    static auto& words(TransformationMonoid& m) {
      return m._words;
    }
    static auto& right(TransformationMonoid& m) {
      return m._right;
    }
  };

  TransformationMonoid
  TransformationMonoid::from_elements(std::size_t                 degree,
                                      std::vector<Transformation> elements) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
      throw InvalidArgument("duplicate elements in monoid element list");
    }
    auto m = MonoidBuilder::make();
    MonoidBuilder::set_degree(m, degree);
    auto const id = Transformation::identity(degree);
    for (auto& f : elements) {
      if (f.degree() != degree) {
        throw InvalidArgument(fmt::format(
            "element {} does not have degree {}", to_string(f), degree));
      }
      MonoidBuilder::add(m, std::move(f));
    }
    auto it = m._index.find(id);
    if (it == m._index.end()) {
      throw InvalidArgument("element list does not contain the identity");
    }
    m._identity_index = it->second;
    return m;
  }

  std::optional<std::size_t>
  TransformationMonoid::index_of(Transformation const& f) const {
    auto it = _index.find(f);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  TransformationMonoid generate(std::span<NamedTransformation const> generators,
                                GenerateOptions const&               options) {
    if (generators.empty()) {
      throw InvalidArgument("generate needs at least one generator");
    }
    auto const n = generators.front().value.degree();
    std::vector<std::string>    names;
    std::vector<Transformation> gens;
    for (auto const& g : generators) {
      if (g.value.degree() != n) {
        throw InvalidArgument(fmt::format(
            "generator {} has degree {}, expected {}", g.name,
            g.value.degree(), n));
      }
      names.push_back(g.name);
      gens.push_back(g.value);
    }

    auto m = MonoidBuilder::make();
    MonoidBuilder::set_degree(m, n);
    auto& words = MonoidBuilder::words(m);
    auto& right = MonoidBuilder::right(m);
    auto& index = MonoidBuilder::index(m);

    MonoidBuilder::add(m, Transformation::identity(n));
    words.emplace_back();
    MonoidBuilder::set_identity(m, 0);

    auto const k = gens.size();
    // Elements are appended in BFS order, so processing them by index visits
    // words in shortlex order.
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        auto product = compose(m.at(i), gens[g]);
        auto it      = index.find(product);
        std::size_t j;
        if (it != index.end()) {
          j = it->second;
        } else {
          if (m.size() >= options.max_elements) {
            throw BudgetExceeded(fmt::format(
                "monoid exceeds the element budget of {}", options.max_elements));
          }
          auto w = words[i];
          w.push_back(static_cast<std::uint32_t>(g));
          j = MonoidBuilder::add(m, std::move(product));
          words.push_back(std::move(w));
        }
        right.push_back(j);
      }
    }
    MonoidBuilder::set_generators(m, std::move(names), std::move(gens));
    return m;
  }

  TransformationMonoid generate(std::span<Transformation const> generators,
                                GenerateOptions const&          options) {
    std::vector<NamedTransformation> named;
    named.reserve(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      named.push_back({fmt::format("g{}", i), generators[i]});
    }
    return generate(std::span<NamedTransformation const>(named), options);
  }

  bool contains(TransformationMonoid const& m, Transformation const& f) {
    return f.degree() == m.degree() && m.index_of(f).has_value();
  }

  std::optional<std::vector<std::string>> word_for(TransformationMonoid const& m,
                                                   Transformation const&       f) {
    auto i = m.index_of(f);
    if (!i || !m.has_generators()) {
      return std::nullopt;
    }
    std::vector<std::string> out;
    for (auto letter : m.witness_word(*i)) {
      out.push_back(m.generator_names()[letter]);
    }
    return out;
  }

  bool is_generating_set(TransformationMonoid const&     target,
                         std::span<Transformation const> xs) {
    for (auto const& x : xs) {
      if (x.degree() != target.degree()) {
        throw InvalidArgument("generating set candidate has the wrong degree");
      }
      if (!contains(target, x)) {
        return false;
      }
    }
    if (xs.empty()) {
      return target.size() == 1;
    }
    GenerateOptions opts;
    opts.max_elements = target.size();
    try {
      auto sub = generate(xs, opts);
      return sub.size() == target.size();
    } catch (BudgetExceeded const&) {
      return false;
    }
  }

  bool is_closed(TransformationMonoid const& m) {
    for (auto const& f : m.elements()) {
      for (auto const& g : m.elements()) {
        if (!m.index_of(compose(f, g))) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::uint32_t> multiplication_table(TransformationMonoid const& m) {
    auto const                 size = m.size();
    std::vector<std::uint32_t> table(size * size);
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        auto k = m.index_of(compose(m.at(i), m.at(j)));
        if (!k) {
          throw InvalidArgument("monoid element set is not closed under composition");
        }
        table[i * size + j] = static_cast<std::uint32_t>(*k);
      }
    }
    return table;
  }

  namespace {

    constexpr std::size_t max_rank_table_size = 20'000;

    // Calls fn on each k-subset of {0, ..., n - 1} in lexicographic order
    // until fn returns false. Returns false iff stopped early.
    template <typename Fn>
    bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
      if (k > n) {
        return true;
      }
      std::vector<std::size_t> c(k);
      for (std::size_t i = 0; i < k; ++i) {
        c[i] = i;
      }
      while (true) {
        if (!fn(std::span<std::size_t const>(c))) {
          return false;
        }
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + (i - 1)) {
          --i;
        }
        if (i == 0) {
          return true;
        }
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          c[j] = c[j - 1] + 1;
        }
      }
    }

    class TableClosure {
     public:
      TableClosure(std::vector<std::uint32_t> const& table,
                   std::size_t                       size,
                   std::size_t                       identity)
          : _table(table), _size(size), _identity(identity), _seen(size, 0) {}

      // Size of the submonoid generated by the given element indices.
      std::size_t operator()(std::span<std::uint32_t const> gens) {
        ++_stamp;
        _queue.clear();
        _queue.push_back(static_cast<std::uint32_t>(_identity));
        _seen[_identity] = _stamp;
        for (std::size_t head = 0; head < _queue.size(); ++head) {
          auto const row = static_cast<std::size_t>(_queue[head]) * _size;
          for (auto g : gens) {
            auto p = _table[row + g];
            if (_seen[p] != _stamp) {
              _seen[p] = _stamp;
              _queue.push_back(p);
            }
          }
        }
        return _queue.size();
      }

     private:
      std::vector<std::uint32_t> const& _table;
      std::size_t                       _size;
      std::size_t                       _identity;
      std::vector<std::uint32_t>        _seen;
      std::vector<std::uint32_t>        _queue;
      std::uint32_t                     _stamp = 0;
    };

  }  // namespace

  RankResult rank_exact(TransformationMonoid const& target,
                        RankOptions const&          options) {
    RankResult result;
    auto const size = target.size();
    if (size > max_rank_table_size) {
      throw BudgetExceeded(fmt::format(
          "rank search supports monoids of at most {} elements", max_rank_table_size));
    }
    auto const table    = multiplication_table(target);
    auto const identity = target.identity_index();

    std::vector<std::uint32_t> pool;
    if (options.candidate_pool) {
      for (auto const& f : *options.candidate_pool) {
        auto i = target.index_of(f);
        if (!i || f.degree() != target.degree()) {
          throw InvalidArgument(fmt::format(
              "candidate {} is not an element of the target monoid", to_string(f)));
        }
        pool.push_back(static_cast<std::uint32_t>(*i));
      }
    } else {
      for (std::size_t i = 0; i < size; ++i) {
        pool.push_back(static_cast<std::uint32_t>(i));
      }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::erase(pool, static_cast<std::uint32_t>(identity));

    std::size_t unit_group_size = 0;
    for (auto const& f : target.elements()) {
      unit_group_size += is_permutation(f) ? 1 : 0;
    }
    std::vector<std::uint32_t> units, non_units;
    for (auto i : pool) {
      (is_permutation(target.at(i)) ? units : non_units).push_back(i);
    }

    TableClosure closure(table, size, identity);
    auto const   start = std::chrono::steady_clock::now();
    auto         out_of_time = [&] {
      return std::chrono::steady_clock::now() - start > options.time_budget;
    };

    std::vector<std::uint32_t> chosen;
    for (std::size_t k = 0; k <= options.max_subset_size; ++k) {
      bool found = false;
      bool timed_out = false;
      for (std::size_t j = 0; j <= std::min(k, units.size()) && !found && !timed_out; ++j) {
        if (k - j > non_units.size()) {
          continue;
        }
        for_each_combination(units.size(), j, [&](std::span<std::size_t const> uc) {
          chosen.clear();
          for (auto u : uc) {
            chosen.push_back(units[u]);
          }
          if (closure(chosen) != unit_group_size) {
            return true;
          }
          auto const j_size = chosen.size();
          for_each_combination(non_units.size(), k - j, [&](std::span<std::size_t const> nc) {
            chosen.resize(j_size);
            for (auto v : nc) {
              chosen.push_back(non_units[v]);
            }
            ++result.subsets_checked;
            if ((result.subsets_checked & 0x3FFU) == 0 && out_of_time()) {
              timed_out = true;
              return false;
            }
            if (closure(chosen) == size) {
              found = true;
              return false;
            }
            return true;
          });
          return !found && !timed_out;
        });
      }
      if (found) {
        result.rank = k;
        for (auto i : chosen) {
          result.generating_subset.push_back(target.at(i));
        }
        return result;
      }
      if (timed_out) {
        result.time_budget_hit = true;
        return result;
      }
      result.exhausted_up_to = k;
    }
    return result;
  }

  Transformation evaluate(Assignment const&            assignment,
                          std::span<std::string const> word,
                          std::size_t                  degree) {
    auto result = Transformation::identity(degree);
    for (auto const& letter : word) {
      auto it = assignment.find(letter);
      if (it == assignment.end()) {
        throw InvalidArgument(fmt::format("letter '{}' has no assigned transformation", letter));
      }
      result = compose(result, it->second);
    }
    return result;
  }

  bool check_relation(Assignment const&            assignment,
                      std::span<std::string const> lhs,
                      std::span<std::string const> rhs) {
    for (auto const& w : {lhs, rhs}) {
      for (auto const& letter : w) {
        if (!assignment.contains(letter)) {
          throw InvalidArgument(fmt::format("letter '{}' has no assigned transformation", letter));
        }
      }
    }
    if (assignment.empty()) {
      return true;  // both words are empty
    }
    auto const n = assignment.begin()->second.degree();
    for (auto const& [name, f] : assignment) {
      if (f.degree() != n) {
        throw InvalidArgument(fmt::format("letter '{}' is assigned a map of degree {}, expected {}",
                                          name, f.degree(), n));
      }
    }
    return evaluate(assignment, lhs, n) == evaluate(assignment, rhs, n);
  }

  std::string dump(TransformationMonoid const& m) {
    std::string out = fmt::format("degree {} size {}\n", m.degree(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::string word;
      if (!m.has_generators()) {
        word = "-";
      } else {
        for (auto letter : m.witness_word(i)) {
          if (!word.empty()) {
            word += ' ';
          }
          word += m.generator_names()[letter];
        }
      }
      out += fmt::format("{}: {} :{}{}\n", i, to_string(m.at(i)),
                         word.empty() ? "" : " ", word);
    }
    return out;
  }

}  // namespace starmon
