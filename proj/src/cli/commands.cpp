#include "starmon/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "starmon/errors.hpp"
#include "starmon/graph_endo.hpp"
#include "starmon/monoid.hpp"
#include "starmon/presentation.hpp"
#include "starmon/verify.hpp"

namespace starmon::cli {

  namespace {

    using json  = nlohmann::ordered_json;
    using Clock = std::chrono::steady_clock;

    struct Settings {
      std::size_t n            = 0;
      std::string klass;
      std::string base;
      std::string range;
      std::size_t max_k        = 5;
      std::size_t budget_degree   = 8;
      std::size_t budget_classes  = 1'000'000;
      std::size_t budget_elements = 1'000'000;
      double      budget_rank_seconds = 600;
      bool        as_json      = false;
      std::string output;
    };

    class UsageError : public Error {
     public:
      using Error::Error;
    };

    // Everything except timings_ms is a pure function of the command line.
    struct RunReport {
      std::string command;
      json        parameters = json::object();
      json        results    = json::object();
      json        timings_ms = json::object();

      json to_json() const {
        json out;
        out["command"]    = command;
        out["parameters"] = parameters;
        out["results"]    = results;
        out["timings_ms"] = timings_ms;
        out["version"]    = version;
        return out;
      }
    };

    std::string scalar(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_array()) {
        std::string s;
        for (auto const& x : v) {
          s += (s.empty() ? "" : "; ") + scalar(x);
        }
        return s;
      }
      return v.dump();
    }

    void print(RunReport const& report, Settings const& s, std::ostream& out) {
      if (s.as_json) {
        out << report.to_json().dump(2) << '\n';
        return;
      }
      out << "command: " << report.command << '\n';
      for (auto const& [k, v] : report.parameters.items()) {
        out << k << ": " << scalar(v) << '\n';
      }
      for (auto const& [k, v] : report.results.items()) {
        if (k == "rows") {
          continue;
        }
        out << k << ": " << scalar(v) << '\n';
      }
      for (auto const& [k, v] : report.timings_ms.items()) {
        out << "time_ms." << k << ": " << v.dump() << '\n';
      }
      out << "version: " << version << '\n';
    }

    double elapsed_ms(Clock::time_point since) {
      return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
    }

    EndoClass require_class(Settings const& s, std::initializer_list<EndoClass> allowed) {
      auto c = parse_endo_class(s.klass);
      if (!c || std::find(allowed.begin(), allowed.end(), *c) == allowed.end()) {
        std::string names;
        for (auto a : allowed) {
          names += (names.empty() ? "" : ", ") + std::string(name(a));
        }
        throw UsageError(fmt::format("--class must be one of {}, got '{}'", names, s.klass));
      }
      return *c;
    }

    void write_file(std::string const& path, std::string const& text) {
      std::ofstream f(path, std::ios::binary);
      if (!f) {
        throw UsageError(fmt::format("cannot open '{}' for writing", path));
      }
      f << text;
    }

    EnumerateOptions enumerate_options(Settings const& s) {
      EnumerateOptions o;
      o.max_degree = s.budget_degree;
      return o;
    }

    std::string formula_string(std::size_t n, EndoClass c) {
      return has_cardinality_formula(n, c) ? cardinality_formula(n, c).str() : std::string();
    }

    int cmd_enumerate(Settings const& s, RunReport& report) {
      auto const c = require_class(s, {EndoClass::End, EndoClass::StrongEnd,
                                       EndoClass::StrongWeakEnd, EndoClass::WeakEnd,
                                       EndoClass::Aut});
      if (s.n == 0) {
        throw UsageError("--n must be at least 1");
      }
      report.parameters["n"]             = s.n;
      report.parameters["class"]         = name(c);
      report.parameters["budget_degree"] = s.budget_degree;
      auto const t0 = Clock::now();
      auto const m  = enumerate_class(s.n, c, enumerate_options(s));
      report.timings_ms["enumerate"] = elapsed_ms(t0);
      report.results["size"]         = m.size();
      if (has_cardinality_formula(s.n, c)) {
        auto f                          = formula_string(s.n, c);
        report.results["formula"]       = f;
        report.results["formula_match"] = f == std::to_string(m.size());
      }
      if (!s.output.empty()) {
        write_file(s.output, dump(m));
        report.results["dump"] = s.output;
      }
      return success;
    }

    Presentation star_presentation(std::size_t n, EndoClass c) {
      switch (c) {
        case EndoClass::End:
          return end_star_presentation(n);
        case EndoClass::StrongWeakEnd:
          return swend_star_presentation(n);
        default:
          return wend_star_presentation(n);
      }
    }

    int cmd_verify(Settings const& s, RunReport& report) {
      auto const c
          = require_class(s, {EndoClass::End, EndoClass::StrongWeakEnd, EndoClass::WeakEnd});
      if (s.n < 3) {
        throw UsageError(fmt::format("presentations are defined for n >= 3, got {}", s.n));
      }
      report.parameters["n"]              = s.n;
      report.parameters["class"]          = name(c);
      report.parameters["budget_classes"] = s.budget_classes;
      auto const t0 = Clock::now();
      auto const p  = star_presentation(s.n, c);
      auto const m  = enumerate_class(s.n, c, enumerate_options(s));
      report.timings_ms["enumerate"] = elapsed_ms(t0);
      auto const t1 = Clock::now();
      QuotientOptions qo;
      qo.max_cosets = s.budget_classes;
      auto const r = verify_presentation(p, m, standard_assignment(s.n, c), qo,
                                         fmt::format("{}_star_presentation({})", name(c), s.n),
                                         fmt::format("{} S_{}", name(c), s.n));
      report.timings_ms["verify"] = elapsed_ms(t1);

      report.results["presentation"]        = r.presentation_id;
      report.results["target"]              = r.target_id;
      report.results["generators"]          = p.alphabet();
      report.results["relations"]           = p.relations().size();
      report.results["relations_satisfied"] = r.relations_satisfied;
      json failing = json::array();
      for (auto i : r.failing_relations) {
        auto const& rel = p.relations()[i];
        failing.push_back(p.to_string(rel.lhs) + " = " + p.to_string(rel.rhs));
      }
      report.results["failing_relations"] = failing;
      if (r.quotient_size) {
        report.results["quotient_size"] = *r.quotient_size;
      } else if (r.quotient_classes_reached) {
        report.results["quotient_classes_reached"] = *r.quotient_classes_reached;
      }
      report.results["target_size"] = r.target_size;
      report.results["verdict"]     = name(r.verdict);
      report.results["argument"]    = r.argument;
      switch (r.verdict) {
        case Verdict::Verified:
          return success;
        case Verdict::InconclusiveBudget:
          return budget;
        default:
          return refuted;
      }
    }

    std::pair<std::size_t, std::size_t> parse_range(std::string const& text) {
      auto dots = text.find("..");
      auto num  = [&](std::string_view v) {
        std::size_t x = 0;
        auto [p, ec]  = std::from_chars(v.data(), v.data() + v.size(), x);
        if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
          throw UsageError(fmt::format("malformed --range '{}', expected A..B", text));
        }
        return x;
      };
      std::string_view sv(text);
      auto lo = num(dots == std::string::npos ? sv : sv.substr(0, dots));
      auto hi = dots == std::string::npos ? lo : num(sv.substr(dots + 2));
      if (lo == 0 || hi < lo) {
        throw UsageError(fmt::format("--range '{}' must satisfy 1 <= A <= B", text));
      }
      return {lo, hi};
    }

    int cmd_census(Settings const& s, RunReport& report, std::ostream& out) {
      auto const [lo, hi] = parse_range(s.range);
      report.parameters["range"]         = fmt::format("{}..{}", lo, hi);
      report.parameters["budget_degree"] = s.budget_degree;
      EndoClass const classes[] = {EndoClass::End, EndoClass::StrongWeakEnd, EndoClass::WeakEnd,
                                   EndoClass::Aut};
      json rows    = json::array();
      bool all_ok  = true;
      auto const t0 = Clock::now();
      for (auto n = lo; n <= hi; ++n) {
        for (auto c : classes) {
          auto const m = enumerate_class(n, c, enumerate_options(s));
          json row;
          row["n"]          = n;
          row["class"]      = name(c);
          row["formula"]    = formula_string(n, c);
          row["enumerated"] = m.size();
          if (has_cardinality_formula(n, c)) {
            bool ok      = row["formula"] == std::to_string(m.size());
            row["match"] = ok;
            all_ok       = all_ok && ok;
          } else {
            row["match"] = "n/a";
          }
          rows.push_back(row);
        }
      }
      report.timings_ms["census"] = elapsed_ms(t0);
      report.results["rows"]      = rows;
      report.results["all_match"] = all_ok;
      if (!s.as_json) {
        out << "n,class,formula,enumerated,match\n";
        for (auto const& row : rows) {
          out << scalar(row["n"]) << ',' << scalar(row["class"]) << ',' << scalar(row["formula"])
              << ',' << scalar(row["enumerated"]) << ',' << scalar(row["match"]) << '\n';
        }
      }
      return all_ok ? success : refuted;
    }

    int cmd_rank(Settings const& s, RunReport& report) {
      auto const c = require_class(s, {EndoClass::End, EndoClass::StrongEnd,
                                       EndoClass::StrongWeakEnd, EndoClass::WeakEnd,
                                       EndoClass::Aut});
      if (s.n == 0) {
        throw UsageError("--n must be at least 1");
      }
      report.parameters["n"]                   = s.n;
      report.parameters["class"]               = name(c);
      report.parameters["max_k"]               = s.max_k;
      report.parameters["budget_rank_seconds"] = s.budget_rank_seconds;
      auto const m = enumerate_class(s.n, c, enumerate_options(s));
      RankOptions ro;
      ro.max_subset_size = s.max_k;
      ro.time_budget     = std::chrono::milliseconds(
          static_cast<std::int64_t>(s.budget_rank_seconds * 1000.0));
      auto const t0 = Clock::now();
      auto const r  = rank_exact(m, ro);
      report.timings_ms["rank"] = elapsed_ms(t0);
      report.results["monoid_size"] = m.size();
      if (r.rank) {
        report.results["rank"] = *r.rank;
        json subset            = json::array();
        for (auto const& f : r.generating_subset) {
          subset.push_back(to_string(f));
        }
        report.results["generating_subset"] = subset;
      } else {
        report.results["rank"] = "unknown";
      }
      if (r.exhausted_up_to) {
        report.results["no_generating_subset_up_to"] = *r.exhausted_up_to;
      }
      report.results["time_budget_hit"] = r.time_budget_hit;
      if (!r.time_budget_hit) {
        report.results["subsets_checked"] = r.subsets_checked;
      }
      return r.rank ? success : budget;
    }

    int cmd_dump_presentation(Settings const& s, RunReport& report, std::ostream& out) {
      if (s.klass.empty() == s.base.empty()) {
        throw UsageError("give exactly one of --class or --base");
      }
      if (s.n < 3) {
        throw UsageError(fmt::format("presentations are defined for n >= 3, got {}", s.n));
      }
      std::optional<Presentation> p;
      std::string                 id;
      if (!s.klass.empty()) {
        auto c = require_class(s, {EndoClass::End, EndoClass::StrongWeakEnd, EndoClass::WeakEnd});
        p.emplace(star_presentation(s.n, c));
        id = fmt::format("{}_star_presentation({})", name(c), s.n);
      } else if (s.base == "sym") {
        p.emplace(sym_presentation(s.n));
        id = fmt::format("sym_presentation({})", s.n);
      } else if (s.base == "transf") {
        p.emplace(full_transf_presentation(s.n));
        id = fmt::format("full_transf_presentation({})", s.n);
      } else if (s.base == "ptransf") {
        p.emplace(partial_transf_presentation(s.n));
        id = fmt::format("partial_transf_presentation({})", s.n);
      } else {
        throw UsageError(fmt::format("--base must be sym, transf or ptransf, got '{}'", s.base));
      }
      auto const text = to_json(*p);
      if (s.output.empty()) {
        out << text;
        return -1;  // the presentation itself is the output
      }
      write_file(s.output, text);
      report.parameters["n"]           = s.n;
      report.results["presentation"]   = id;
      report.results["letters"]        = p->alphabet();
      report.results["relations"]      = p->relations().size();
      report.results["output"]         = s.output;
      return success;
    }

    int cmd_check_generators(Settings const& s, RunReport& report) {
      auto const c
          = require_class(s, {EndoClass::End, EndoClass::StrongWeakEnd, EndoClass::WeakEnd});
      if (s.n < 3) {
        throw UsageError(fmt::format("standard generators are defined for n >= 3, got {}", s.n));
      }
      report.parameters["n"]     = s.n;
      report.parameters["class"] = name(c);
      auto const t0   = Clock::now();
      auto const m    = enumerate_class(s.n, c, enumerate_options(s));
      auto const gens = standard_generators(s.n, c);
      GenerateOptions go;
      go.max_elements = s.budget_elements;
      auto const sub  = generate(gens, go);
      report.timings_ms["check"] = elapsed_ms(t0);
      json listed = json::array();
      std::vector<Transformation> values;
      for (auto const& g : gens) {
        listed.push_back(g.name + "=" + to_string(g.value));
        values.push_back(g.value);
      }
      bool const ok = is_generating_set(m, values);
      report.results["generators"]     = listed;
      report.results["generated_size"] = sub.size();
      report.results["target_size"]    = m.size();
      report.results["generates"]      = ok;
      return ok ? success : refuted;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Endomorphism monoids of star graphs: enumeration, ranks and presentations",
                 "starmon"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
      sub->add_flag("--json", s.as_json, "Structured output");
      sub->add_option("--budget-degree", s.budget_degree, "Largest n for the n^n map scan");
    };
    auto* enumerate = app.add_subcommand("enumerate", "Brute-force one endomorphism monoid");
    enumerate->add_option("--n", s.n, "Number of vertices")->required();
    enumerate->add_option("--class", s.klass, "end, send, swend, wend or aut")->required();
    enumerate->add_option("--output", s.output, "Write the monoid dump here");
    add_common(enumerate);

    auto* verify = app.add_subcommand("verify", "Verify a star graph presentation");
    verify->add_option("--n", s.n, "Number of vertices")->required();
    verify->add_option("--class", s.klass, "end, swend or wend")->required();
    verify->add_option("--budget-classes", s.budget_classes, "Live class cap for enumeration");
    add_common(verify);

    auto* census = app.add_subcommand("census", "Closed-form sizes against brute force");
    census->add_option("--range", s.range, "A..B")->required();
    add_common(census);

    auto* rank = app.add_subcommand("rank", "Exact rank by exhaustive subset search");
    rank->add_option("--n", s.n, "Number of vertices")->required();
    rank->add_option("--class", s.klass, "end, send, swend, wend or aut")->required();
    rank->add_option("--max-k", s.max_k, "Largest subset size searched");
    rank->add_option("--budget-rank-seconds", s.budget_rank_seconds, "Wall-clock budget");
    add_common(rank);

    auto* dump_p = app.add_subcommand("dump-presentation", "Write a presentation as JSON");
    dump_p->add_option("--n", s.n, "Number of vertices (or points, with --base)")->required();
    dump_p->add_option("--class", s.klass, "end, swend or wend");
    dump_p->add_option("--base", s.base, "sym, transf or ptransf");
    dump_p->add_option("--output", s.output, "Write the presentation here");
    add_common(dump_p);

    auto* check = app.add_subcommand("check-generators", "Do the standard generators generate?");
    check->add_option("--n", s.n, "Number of vertices")->required();
    check->add_option("--class", s.klass, "end, swend or wend")->required();
    check->add_option("--budget-elements", s.budget_elements, "Element cap for generation");
    add_common(check);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }

    RunReport report;
    report.command = "starmon";
    for (auto const& a : args) {
      report.command += ' ' + a;
    }
    std::ostringstream body;
    int                code = success;
    try {
      if (enumerate->parsed()) {
        code = cmd_enumerate(s, report);
      } else if (verify->parsed()) {
        code = cmd_verify(s, report);
      } else if (census->parsed()) {
        code = cmd_census(s, report, body);
      } else if (rank->parsed()) {
        code = cmd_rank(s, report);
      } else if (dump_p->parsed()) {
        code = cmd_dump_presentation(s, report, out);
        if (code < 0) {
          return success;
        }
      } else {
        code = cmd_check_generators(s, report);
      }
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (BudgetExceeded const& e) {
      err << "budget exceeded: " << e.what() << '\n';
      return budget;
    } catch (InvalidArgument const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return refuted;
    }
    out << body.str();
    print(report, s, out);
    return code;
  }

}  // namespace starmon::cli
