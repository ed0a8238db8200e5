#include "coordsem/implicature.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace coordsem {

std::string_view to_string(Polarity p) {
  return p == Polarity::knows ? "K" : "notK";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::assertion: return "assertion";
    case Provenance::clausal: return "clausal";
    case Provenance::scalar_weak: return "scalar_weak";
    case Provenance::scalar_strong: return "scalar_strong";
  }
  return "?";
}

std::string_view to_string(ProjectionMode m) {
  return m == ProjectionMode::gazdar_default ? "gazdar_default" : "soames_conditional";
}

std::string EpistemicConstraint::to_string() const {
  return std::string(coordsem::to_string(polarity)) + "(" + unparse(body) + ")";
}

bool operator==(const EpistemicConstraint& a, const EpistemicConstraint& b) {
  return a.polarity == b.polarity && a.provenance == b.provenance &&
         a.source == b.source && unparse(a.body) == unparse(b.body);
}

namespace {

void check_atom_limit(const Formula& f) {
  const std::size_t n = atoms(f).size();
  if (n > max_epistemic_atoms) {
    throw TooManyAtoms("epistemic reasoning is limited to " +
                       std::to_string(max_epistemic_atoms) + " atoms, got " +
                       std::to_string(n));
  }
}

struct OrNode {
  std::string path;
  Formula left;
  Formula right;
  int coeff_id;
};

std::vector<OrNode> or_nodes(const Formula& f) {
  std::vector<OrNode> out;
  for_each_subformula(f, [&](const Formula& g, const std::string& path) {
    if (g.kind() == NodeKind::disjunction) {
      out.push_back({path, g.left(), g.right(), g.coeff_id()});
    }
  });
  return out;
}

EpistemicConstraint knows(Formula body, Provenance prov, std::string source) {
  return {Polarity::knows, std::move(body), prov, std::move(source)};
}

EpistemicConstraint not_knows(Formula body, Provenance prov, std::string source) {
  return {Polarity::not_knows, std::move(body), prov, std::move(source)};
}

// Ignorance pairs per disjunct, in or-node then disjunct order, with
// repeats from one node dropped.
std::vector<std::vector<EpistemicConstraint>> clausal_units(const Formula& f) {
  check_atom_limit(f);
  std::vector<std::vector<EpistemicConstraint>> units;
  for (const auto& node : or_nodes(f)) {
    std::vector<std::string> seen;
    for (const Formula& disjunct : {node.left, node.right}) {
      const std::string key = unparse(disjunct);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      units.push_back({not_knows(disjunct, Provenance::clausal, node.path),
                       not_knows(Formula::negation(disjunct), Provenance::clausal,
                                 node.path)});
    }
  }
  return units;
}

// Row-index sets of worlds over `names`.
struct WorldSpace {
  std::vector<std::string> names;
  std::vector<Assignment> worlds;
};

WorldSpace world_space(std::span<const EpistemicConstraint> constraints) {
  std::set<std::string> names;
  for (const auto& c : constraints) {
    for (auto& n : atom_names(c.body)) names.insert(n);
  }
  if (names.size() > max_epistemic_atoms) {
    throw TooManyAtoms("epistemic reasoning is limited to " +
                       std::to_string(max_epistemic_atoms) + " atoms, got " +
                       std::to_string(names.size()));
  }
  WorldSpace space{{names.begin(), names.end()}, {}};
  const std::uint64_t rows = row_count(space.names.size());
  for (std::uint64_t row = 0; row < rows; ++row) {
    space.worlds.push_back(assignment_at(space.names, row));
  }
  return space;
}

// Worlds compatible with every K constraint, and for each notK constraint
// the set of those worlds that falsify its body.
struct Reduced {
  std::vector<std::size_t> allowed;
  std::vector<std::vector<bool>> falsifies;  // [notK index][allowed position]
};

Reduced reduce(std::span<const EpistemicConstraint> constraints, const WorldSpace& space) {
  Reduced r;
  for (std::size_t w = 0; w < space.worlds.size(); ++w) {
    bool ok = std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) {
      return c.polarity != Polarity::knows || eval(c.body, space.worlds[w]);
    });
    if (ok) r.allowed.push_back(w);
  }
  for (const auto& c : constraints) {
    if (c.polarity != Polarity::not_knows) continue;
    std::vector<bool> row;
    for (std::size_t w : r.allowed) row.push_back(!eval(c.body, space.worlds[w]));
    r.falsifies.push_back(std::move(row));
  }
  return r;
}

bool satisfiable(const Reduced& r) {
  if (r.allowed.empty()) return false;
  return std::all_of(r.falsifies.begin(), r.falsifies.end(), [](const auto& row) {
    return std::find(row.begin(), row.end(), true) != row.end();
  });
}

}  // namespace

std::vector<EpistemicConstraint> assertions(const Formula& f) {
  check_atom_limit(f);
  std::vector<EpistemicConstraint> out;
  if (f.kind() == NodeKind::conjunction) {
    out.push_back(knows(f.left(), Provenance::assertion, "0"));
    out.push_back(knows(f.right(), Provenance::assertion, "1"));
  }
  out.push_back(knows(f, Provenance::assertion, ""));
  return out;
}

std::vector<EpistemicConstraint> potential_clausal(const Formula& f) {
  std::vector<EpistemicConstraint> out;
  for (auto& unit : clausal_units(f)) {
    for (auto& c : unit) out.push_back(std::move(c));
  }
  return out;
}

std::vector<EpistemicConstraint> potential_scalar(const Formula& f, ProjectionMode mode,
                                                  const std::set<int>& opinionated) {
  check_atom_limit(f);
  std::vector<EpistemicConstraint> out;
  for (const auto& node : or_nodes(f)) {
    Formula both = Formula::conjunction(node.left, node.right);
    out.push_back(not_knows(both, Provenance::scalar_weak, node.path));
    if (mode == ProjectionMode::gazdar_default || opinionated.count(node.coeff_id)) {
      out.push_back(knows(Formula::negation(both), Provenance::scalar_strong, node.path));
    }
  }
  return out;
}

bool is_consistent(std::span<const EpistemicConstraint> constraints) {
  const WorldSpace space = world_space(constraints);
  return satisfiable(reduce(constraints, space));
}

Consistency consistent(std::span<const EpistemicConstraint> constraints) {
  const WorldSpace space = world_space(constraints);
  const Reduced r = reduce(constraints, space);
  if (!satisfiable(r)) return {};

  // Smallest subsets first; std::prev_permutation over a k-of-n mask walks
  // the k-combinations in lexicographic order.
  const std::size_t n = r.allowed.size();
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      bool covers = std::all_of(r.falsifies.begin(), r.falsifies.end(), [&](const auto& row) {
        for (std::size_t i = 0; i < n; ++i) {
          if (mask[i] && row[i]) return true;
        }
        return false;
      });
      if (covers) {
        BeliefModel model;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask[i]) model.push_back(space.worlds[r.allowed[i]]);
        }
        return {true, std::move(model)};
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  throw std::logic_error("satisfiable constraint set without witness");
}

std::vector<std::vector<EpistemicConstraint>> projection_units(
    const Formula& f, ProjectionMode mode, const std::set<int>& opinionated) {
  auto units = clausal_units(f);
  const auto scalar = potential_scalar(f, mode, opinionated);
  for (Provenance tier : {Provenance::scalar_weak, Provenance::scalar_strong}) {
    for (const auto& c : scalar) {
      if (c.provenance == tier) units.push_back({c});
    }
  }
  return units;
}

ImplicatureReport project_units(const std::vector<EpistemicConstraint>& asserted,
                                const std::vector<std::vector<EpistemicConstraint>>& units,
                                ProjectionMode mode) {
  ImplicatureReport report;
  report.mode = mode;
  report.accepted = asserted;
  if (!is_consistent(report.accepted)) {
    throw InconsistentAssertion("asserted content is unsatisfiable");
  }
  for (const auto& unit : units) {
    std::vector<EpistemicConstraint> trial = report.accepted;
    trial.insert(trial.end(), unit.begin(), unit.end());
    if (is_consistent(trial)) {
      report.accepted = std::move(trial);
      continue;
    }
    // Shrink the accepted set to a minimal clash, dropping later entries first.
    std::vector<bool> keep(report.accepted.size(), true);
    for (std::size_t i = report.accepted.size(); i-- > 0;) {
      keep[i] = false;
      std::vector<EpistemicConstraint> probe;
      for (std::size_t j = 0; j < report.accepted.size(); ++j) {
        if (keep[j]) probe.push_back(report.accepted[j]);
      }
      probe.insert(probe.end(), unit.begin(), unit.end());
      if (is_consistent(probe)) keep[i] = true;
    }
    std::vector<EpistemicConstraint> partners;
    for (std::size_t j = 0; j < report.accepted.size(); ++j) {
      if (keep[j]) partners.push_back(report.accepted[j]);
    }
    for (const auto& c : unit) report.suppressed.push_back({c, partners});
  }
  return report;
}

ImplicatureReport project(const Formula& f, ProjectionMode mode,
                          const std::set<int>& opinionated) {
  return project_units(assertions(f), projection_units(f, mode, opinionated), mode);
}

}  // namespace coordsem
