#pragma once

// Gricean projection with one knowledge operator K over a classical
// propositional body. K phi holds of a belief model W iff phi is true at
// every world of W; notK phi iff phi is false at some world of W.

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coordsem/boolean.hpp"
#include "coordsem/formula.hpp"

namespace coordsem {

enum class Polarity { knows, not_knows };
enum class Provenance { assertion, clausal, scalar_weak, scalar_strong };
enum class ProjectionMode { gazdar_default, soames_conditional };

std::string_view to_string(Polarity p);
std::string_view to_string(Provenance p);
std::string_view to_string(ProjectionMode m);

inline constexpr std::size_t max_epistemic_atoms = 4;

struct EpistemicConstraint {
  Polarity polarity = Polarity::knows;
  Formula body;
  Provenance provenance = Provenance::assertion;
  /// Subformula path of the asserted clause or generating `or` node
  /// ('0' left, '1' right, empty for the root).
  std::string source;

  /// "K(A or B)", "notK(not A)"
  std::string to_string() const;

  friend bool operator==(const EpistemicConstraint& a, const EpistemicConstraint& b);
};

class InconsistentAssertion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Nonempty set of worlds the speaker holds possible.
using BeliefModel = std::vector<Assignment>;

/// K(f); for a top-level conjunction the conjuncts come first, left to right.
std::vector<EpistemicConstraint> assertions(const Formula& f);

/// Ignorance about each disjunct of each `or`: notK psi and notK not psi.
/// Duplicates from the same `or` node collapse.
std::vector<EpistemicConstraint> potential_clausal(const Formula& f);

/// Per `or` node with disjuncts psi, chi: the weak notK(psi and chi), and
/// the strong K not(psi and chi) in gazdar mode or, in soames mode, only
/// for nodes whose coeff_id is listed in `opinionated`.
std::vector<EpistemicConstraint> potential_scalar(const Formula& f, ProjectionMode mode,
                                                  const std::set<int>& opinionated = {});

struct Consistency {
  bool consistent = false;
  /// Least witness: fewest worlds, then lexicographic on world row indices.
  std::optional<BeliefModel> witness;
};

Consistency consistent(std::span<const EpistemicConstraint> constraints);

/// Decision only; same answer as `consistent(...).consistent`.
bool is_consistent(std::span<const EpistemicConstraint> constraints);

struct Suppression {
  EpistemicConstraint constraint;
  /// A minimal subset of the then-accepted constraints that, together with
  /// the candidate, is unsatisfiable. Earlier (higher-priority) constraints
  /// are preferred.
  std::vector<EpistemicConstraint> clashes_with;
};

struct ImplicatureReport {
  ProjectionMode mode = ProjectionMode::gazdar_default;
  std::vector<EpistemicConstraint> accepted;
  std::vector<Suppression> suppressed;
};

/// Candidates in priority order. Each inner vector is accepted or
/// suppressed as a whole; the ignorance pair about one disjunct is one unit.
std::vector<std::vector<EpistemicConstraint>> projection_units(
    const Formula& f, ProjectionMode mode, const std::set<int>& opinionated = {});

/// Assertions are accepted unconditionally; every unit is then added in
/// order iff the union stays consistent. Throws InconsistentAssertion when
/// the assertions themselves are unsatisfiable.
ImplicatureReport project_units(const std::vector<EpistemicConstraint>& asserted,
                                const std::vector<std::vector<EpistemicConstraint>>& units,
                                ProjectionMode mode);

ImplicatureReport project(const Formula& f, ProjectionMode mode,
                          const std::set<int>& opinionated = {});

}  // namespace coordsem
