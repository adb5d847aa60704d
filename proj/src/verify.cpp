#include "starmon/verify.hpp"

#include <fmt/format.h>

#include "starmon/errors.hpp"

namespace starmon {

  RelationCheck satisfies_relations(Assignment const& assignment, Presentation const& p) {
    for (auto const& letter : p.alphabet()) {
      if (!assignment.contains(letter)) {
        throw InvalidArgument(fmt::format("letter '{}' has no assigned transformation", letter));
      }
    }
    RelationCheck out;
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      auto const& r = p.relations()[i];
      if (!check_relation(assignment, p.letter_names(r.lhs), p.letter_names(r.rhs))) {
        out.satisfied = false;
        out.failing.push_back(i);
      }
    }
    return out;
  }

  std::string_view name(Verdict v) noexcept {
    switch (v) {
      case Verdict::Verified:
        return "verified";
      case Verdict::RefutedRelations:
        return "refuted-relations";
      case Verdict::RefutedSize:
        return "refuted-size";
      case Verdict::InconclusiveBudget:
        return "inconclusive-budget";
    }
    return "?";
  }

  VerificationReport verify_presentation(Presentation const&         p,
                                         TransformationMonoid const& m,
                                         Assignment const&           assignment,
                                         QuotientOptions const&      options,
                                         std::string                 presentation_id,
                                         std::string                 target_id) {
    if (assignment.size() != p.letter_count()) {
      throw InvalidArgument("assignment letters differ from the presentation alphabet");
    }
    std::vector<Transformation> gens;
    for (auto const& letter : p.alphabet()) {
      auto it = assignment.find(letter);
      if (it == assignment.end()) {
        throw InvalidArgument(fmt::format("letter '{}' has no assigned transformation", letter));
      }
      gens.push_back(it->second);
    }
    if (!is_generating_set(m, gens)) {
      throw InvalidArgument("the assigned transformations do not generate the target monoid");
    }

    VerificationReport report;
    report.presentation_id = std::move(presentation_id);
    report.target_id       = std::move(target_id);
    report.target_size     = m.size();

    auto check                 = satisfies_relations(assignment, p);
    report.relations_satisfied = check.satisfied;
    report.failing_relations   = std::move(check.failing);
    if (!report.relations_satisfied) {
      report.verdict  = Verdict::RefutedRelations;
      report.argument = fmt::format("{} relation(s) fail under the assignment",
                                    report.failing_relations.size());
      return report;
    }

    auto quotient = enumerate_quotient(p, m.size(), options);
    if (quotient.completed) {
      report.quotient_size = quotient.classes;
    } else {
      report.quotient_classes_reached = quotient.classes;
    }
    if (quotient.table) {
      // With a surjection onto M the quotient cannot be smaller; landing here
      // means a bug in the enumerator, not a property of the presentation.
      if (quotient.classes < m.size()) {
        throw Error(fmt::format("quotient of size {} cannot map onto a monoid of size {}",
                                quotient.classes, m.size()));
      }
      report.verdict  = Verdict::Verified;
      report.argument = fmt::format(
          "relations hold, so X*/~R maps onto the target; |X*/~R| = {} = |M|, hence isomorphic",
          quotient.classes);
    } else if (quotient.completed) {
      report.verdict  = Verdict::RefutedSize;
      report.argument = fmt::format("|X*/~R| = {} exceeds |M| = {}", quotient.classes, m.size());
    } else {
      report.verdict  = Verdict::InconclusiveBudget;
      report.argument = fmt::format("enumeration stopped at {} live classes (budget {})",
                                    quotient.classes, options.max_cosets);
    }
    return report;
  }

}  // namespace starmon
