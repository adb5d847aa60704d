#pragma once

// Checking a presentation against a concrete transformation monoid.
//
// If the assigned generators satisfy every relation of <X | R>, the map
// X*/~R -> M is a well-defined surjective homomorphism, so |X*/~R| >= |M|;
// a completed enumeration of exactly |M| classes then makes it a bijection.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starmon/monoid.hpp"
#include "starmon/presentation.hpp"
#include "starmon/todd_coxeter.hpp"

namespace starmon {

  struct RelationCheck {
    bool                     satisfied = true;
    std::vector<std::size_t> failing;  // indices into relations()
  };

  // Throws InvalidArgument if some alphabet letter has no assignment.
  RelationCheck satisfies_relations(Assignment const& assignment, Presentation const& p);

  enum class Verdict {
    Verified,
    RefutedRelations,
    RefutedSize,
    InconclusiveBudget,
  };

  std::string_view name(Verdict v) noexcept;

  struct VerificationReport {
    std::string                presentation_id;
    std::string                target_id;
    bool                       relations_satisfied = false;
    std::vector<std::size_t>   failing_relations;
    // Set when the quotient enumeration completed.
    std::optional<std::size_t> quotient_size;
    // Live classes when the enumeration budget ran out.
    std::optional<std::size_t> quotient_classes_reached;
    std::size_t                target_size = 0;
    Verdict                    verdict     = Verdict::InconclusiveBudget;
    std::string                argument;
  };

  // Throws InvalidArgument if the assignment keys differ from the alphabet
  // or the assigned maps do not generate m, and Error if a completed quotient
  // comes out smaller than m despite the relations holding.
  VerificationReport verify_presentation(Presentation const&         p,
                                         TransformationMonoid const& m,
                                         Assignment const&           assignment,
                                         QuotientOptions const&      options         = {},
                                         std::string                 presentation_id = "",
                                         std::string                 target_id       = "");

}  // namespace starmon
