#include "coordsem/probability.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace coordsem {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::no_counterexample ? "no_counterexample" : "counterexample";
}

RationalDist::RationalDist(std::vector<std::string> atoms, std::vector<Rational> masses)
    : atoms_(std::move(atoms)), masses_(std::move(masses)) {
  if (!std::is_sorted(atoms_.begin(), atoms_.end()) ||
      std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end()) {
    throw std::invalid_argument("distribution atoms must be sorted and distinct");
  }
  if (masses_.size() != row_count(atoms_.size())) {
    throw std::invalid_argument("distribution needs one mass per truth-table row");
  }
  Rational total = 0;
  for (const auto& m : masses_) {
    if (m < 0) throw std::invalid_argument("negative probability mass");
    total += m;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("masses sum to " + coordsem::to_string(total) + ", not 1");
  }
}

RationalDist RationalDist::uniform(std::vector<std::string> atoms) {
  const auto rows = static_cast<std::int64_t>(row_count(atoms.size()));
  std::vector<Rational> masses(static_cast<std::size_t>(rows), Rational(1, rows));
  return RationalDist(std::move(atoms), std::move(masses));
}

RationalDist RationalDist::from_table(
    std::vector<std::string> atoms, const std::vector<std::pair<Assignment, Rational>>& table) {
  std::vector<Rational> masses(row_count(atoms.size()), Rational(0));
  for (const auto& [world, mass] : table) {
    std::uint64_t row = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      auto it = world.find(atoms[i]);
      if (it == world.end()) throw MissingAtom("table row lacks atom " + atoms[i]);
      if (it->second) row |= std::uint64_t{1} << i;
    }
    masses[row] += mass;
  }
  return RationalDist(std::move(atoms), std::move(masses));
}

Assignment RationalDist::world(std::size_t row) const { return assignment_at(atoms_, row); }

std::string RationalDist::to_string() const {
  std::string out;
  for (std::size_t row = 0; row < masses_.size(); ++row) {
    if (masses_[row] == Rational(0)) continue;
    if (!out.empty()) out += "; ";
    out += coordsem::to_string(world(row)) + "=" + coordsem::to_string(masses_[row]);
  }
  return out;
}

Rational prob(const RationalDist& d, const Formula& f) {
  for (const auto& name : atom_names(f)) {
    if (!std::binary_search(d.atoms().begin(), d.atoms().end(), name)) {
      throw MissingAtom("distribution has no atom '" + name + "'");
    }
  }
  Rational total = 0;
  for (std::size_t row = 0; row < d.masses().size(); ++row) {
    if (d.masses()[row] != Rational(0) && eval(f, d.world(row))) total += d.masses()[row];
  }
  return total;
}

Rational cond_prob(const RationalDist& d, const Formula& f, const Formula& g) {
  const Rational pg = prob(d, g);
  if (pg == Rational(0)) {
    throw ZeroProbability("conditioning on zero-probability event " + unparse(g));
  }
  return prob(d, Formula::conjunction(f, g)) / pg;
}

std::uint64_t grid_size(std::size_t atom_count, int denominator) {
  // C(n + k, k) with n = denominator, k = cells - 1, built incrementally so
  // every intermediate value is an exact binomial coefficient.
  const std::uint64_t k = row_count(atom_count) - 1;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (static_cast<std::uint64_t>(denominator) + i) / i;
  }
  return c;
}

namespace {

void check_grid_limits(std::size_t atom_count, int denominator) {
  if (atom_count > max_grid_atoms) {
    throw std::out_of_range("grids are limited to " + std::to_string(max_grid_atoms) +
                            " atoms");
  }
  if (denominator < 1 || denominator > max_grid_denominator) {
    throw std::out_of_range("grid denominator must lie in [1, " +
                            std::to_string(max_grid_denominator) + "]");
  }
}

}  // namespace

void for_each_grid_point(std::span<const std::string> atoms, int denominator,
                         const std::function<bool(const RationalDist&)>& visit) {
  check_grid_limits(atoms.size(), denominator);
  std::vector<std::string> names(atoms.begin(), atoms.end());
  std::sort(names.begin(), names.end());
  const std::size_t cells = row_count(names.size());
  std::vector<int> counts(cells, 0);
  bool stop = false;

  std::function<void(std::size_t, int)> fill = [&](std::size_t cell, int left) {
    if (stop) return;
    if (cell + 1 == cells) {
      counts[cell] = left;
      std::vector<Rational> masses;
      masses.reserve(cells);
      for (int k : counts) masses.emplace_back(k, denominator);
      if (!visit(RationalDist(names, std::move(masses)))) stop = true;
      return;
    }
    for (int k = 0; k <= left && !stop; ++k) {
      counts[cell] = k;
      fill(cell + 1, left - k);
    }
  };
  fill(0, denominator);
}

std::vector<RationalDist> grid(std::span<const std::string> atoms, int denominator) {
  std::vector<RationalDist> out;
  for_each_grid_point(atoms, denominator, [&](const RationalDist& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

namespace {

const Formula& atom_a() {
  static const Formula f = Formula::atom("A");
  return f;
}
const Formula& atom_b() {
  static const Formula f = Formula::atom("B");
  return f;
}
const Formula& atom_c() {
  static const Formula f = Formula::atom("C");
  return f;
}
const Formula& atom_h() {
  static const Formula f = Formula::atom("H");
  return f;
}

// Walks the grid, stopping at the first point where `violates` holds.
// `premises` filters the points that count toward premises_met.
SearchResult search(std::span<const std::string> atoms, int denominator,
                    const std::function<bool(const RationalDist&)>& premises,
                    const std::function<bool(const RationalDist&)>& violates) {
  SearchResult result;
  for_each_grid_point(atoms, denominator, [&](const RationalDist& d) {
    ++result.checked;
    if (!premises(d)) return true;
    ++result.premises_met;
    if (violates(d)) {
      result.status = SearchStatus::counterexample;
      result.witness = d;
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace

SearchResult check_frege_theorem(int denominator, FregePremises premises) {
  static const std::vector<std::string> atoms{"A", "C"};
  // A > C is material implication, i.e. not (A and not C).
  const Formula implication =
      Formula::negation(Formula::conjunction(atom_a(), Formula::negation(atom_c())));
  auto holds = [=](const RationalDist& d) {
    if (prob(d, implication) != Rational(1)) return false;
    const Rational pa = prob(d, atom_a());
    const Rational pc = prob(d, atom_c());
    switch (premises) {
      case FregePremises::standard: return 0 < pa && pa < 1 && 0 < pc && pc < 1;
      case FregePremises::weakened: return pa != Rational(0) && pc != Rational(1);
      case FregePremises::unbounded: return pa != Rational(0);
    }
    return false;
  };
  auto violates = [](const RationalDist& d) {
    return cond_prob(d, atom_c(), atom_a()) <= prob(d, atom_c());
  };
  return search(atoms, denominator, holds, violates);
}

SearchResult check_disjunction_corollary(int denominator) {
  static const std::vector<std::string> atoms{"A", "B"};
  const Formula either = Formula::disjunction(atom_a(), atom_b());
  const Formula both = Formula::conjunction(atom_a(), atom_b());
  auto holds = [=](const RationalDist& d) {
    const Rational pa = prob(d, atom_a());
    const Rational pb = prob(d, atom_b());
    return prob(d, either) == Rational(1) && 0 < pa && pa < 1 && 0 < pb && pb < 1;
  };
  auto violates = [=](const RationalDist& d) {
    const Rational b_given_a = cond_prob(d, atom_b(), atom_a());
    const Rational a_given_b = cond_prob(d, atom_a(), atom_b());
    if (b_given_a >= prob(d, atom_b())) return true;
    if (a_given_b >= prob(d, atom_a())) return true;
    return prob(d, both) == Rational(0) && (b_given_a != Rational(0) || a_given_b != Rational(0));
  };
  return search(atoms, denominator, holds, violates);
}

bool check_explosion_irrelevance(const RationalDist& d, const Formula& b,
                                 const std::string& contradiction_atom) {
  const Formula a = Formula::atom(contradiction_atom);
  const Formula contradiction = Formula::conjunction(a, Formula::negation(a));
  const bool atom_known = std::binary_search(d.atoms().begin(), d.atoms().end(),
                                             contradiction_atom);
  // Without the atom in the distribution, evaluate it at an arbitrary fixed
  // value: the contradiction is false either way.
  auto event_prob = [&](const Formula& f) {
    Rational total = 0;
    for (std::size_t row = 0; row < d.masses().size(); ++row) {
      Assignment w = d.world(row);
      if (!atom_known) w.emplace(contradiction_atom, false);
      if (eval(f, w)) total += d.masses()[row];
    }
    return total;
  };
  for (const auto& name : atom_names(b)) {
    if (name != contradiction_atom &&
        !std::binary_search(d.atoms().begin(), d.atoms().end(), name)) {
      throw MissingAtom("distribution has no atom '" + name + "'");
    }
  }
  const Rational joint = event_prob(Formula::conjunction(contradiction, b));
  const Rational product = event_prob(contradiction) * event_prob(b);
  return joint == product;
}

int Likelihoods::sign() const {
  if (given_h > given_not_h) return 1;
  if (given_h < given_not_h) return -1;
  return 0;
}

bool Likelihoods::infinite() const { return given_h == Rational(0) || given_not_h == Rational(0); }

std::string Likelihoods::to_string() const {
  if (given_not_h == Rational(0)) return "+inf";
  if (given_h == Rational(0)) return "-inf";
  return "ratio " + coordsem::to_string(given_h / given_not_h);
}

std::strong_ordering operator<=>(const Likelihoods& a, const Likelihoods& b) {
  // a.h / a.nh  vs  b.h / b.nh, with x/0 read as +inf for x > 0. No pair
  // is (0, 0), so the cross products order infinities correctly too.
  const Rational lhs = a.given_h * b.given_not_h;
  const Rational rhs = b.given_h * a.given_not_h;
  if (lhs < rhs) return std::strong_ordering::less;
  if (rhs < lhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Likelihoods llr(const RationalDist& d, const Formula& e, const Formula& h) {
  const Rational ph = prob(d, h);
  if (ph == Rational(0) || ph == Rational(1)) {
    throw ZeroProbability("relevance needs 0 < P(" + unparse(h) + ") < 1");
  }
  if (prob(d, e) == Rational(0)) {
    throw ZeroProbability("relevance of zero-probability evidence " + unparse(e));
  }
  return {cond_prob(d, e, h), cond_prob(d, e, Formula::negation(h))};
}

bool conditionally_independent(const RationalDist& d, const Formula& a, const Formula& b,
                               const Formula& h) {
  // P(ab|c) = P(a|c) P(b|c), cleared of denominators.
  auto given = [&](const Formula& c) {
    return prob(d, Formula::conjunction(Formula::conjunction(a, b), c)) * prob(d, c) ==
           prob(d, Formula::conjunction(a, c)) * prob(d, Formula::conjunction(b, c));
  };
  return given(h) && given(Formula::negation(h));
}

SearchResult check_relevance_ordering(int denominator) {
  if (denominator < 1 || denominator > max_ordering_denominator) {
    throw std::out_of_range("relevance ordering search denominator must lie in [1, " +
                            std::to_string(max_ordering_denominator) + "]");
  }
  static const std::vector<std::string> atoms{"A", "B", "H"};
  const Formula either = Formula::disjunction(atom_a(), atom_b());
  const Formula both = Formula::conjunction(atom_a(), atom_b());

  auto holds = [&](const RationalDist& d) {
    const Rational ph = prob(d, atom_h());
    if (ph == Rational(0) || ph == Rational(1)) return false;
    if (!conditionally_independent(d, atom_a(), atom_b(), atom_h())) return false;
    if (prob(d, atom_a()) == Rational(0) || prob(d, atom_b()) == Rational(0)) return false;
    if (llr(d, atom_a(), atom_h()).sign() <= 0) return false;
    if (llr(d, atom_b(), atom_h()).sign() <= 0) return false;
    return cond_prob(d, atom_h(), both) < 1;
  };

  SearchResult result;
  auto violates = [&](const RationalDist& d) {
    const Likelihoods a = llr(d, atom_a(), atom_h());
    const Likelihoods b = llr(d, atom_b(), atom_h());
    const Likelihoods top = std::max(a, b);
    const Likelihoods low = llr(d, either, atom_h());
    const Likelihoods high = llr(d, both, atom_h());
    if (low > top || top > high) return true;
    if (low == top || top == high) {
      ++result.equality_cases;
    } else {
      ++result.strict_cases;
    }
    return false;
  };
  SearchResult walk = search(atoms, denominator, holds, violates);
  walk.equality_cases = result.equality_cases;
  walk.strict_cases = result.strict_cases;
  return walk;
}

}  // namespace coordsem
