#pragma once

// Exact-rational probability over truth assignments, and exhaustive grid
// searches for counterexamples to the relevance theorems.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "coordsem/boolean.hpp"
#include "coordsem/formula.hpp"

namespace coordsem {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

class ZeroProbability : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Masses indexed by truth-table row over `atoms` (first atom varies
/// fastest, as in `assignment_at`).
class RationalDist {
 public:
  /// Throws std::invalid_argument on a negative mass, a size mismatch or
  /// a total different from 1.
  RationalDist(std::vector<std::string> atoms, std::vector<Rational> masses);

  static RationalDist uniform(std::vector<std::string> atoms);
  /// Assignments given as {atom: value} maps; unlisted rows get mass 0.
  static RationalDist from_table(std::vector<std::string> atoms,
                                 const std::vector<std::pair<Assignment, Rational>>& table);

  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::vector<Rational>& masses() const { return masses_; }
  Assignment world(std::size_t row) const;

  /// Rows with nonzero mass as "{A:1, C:0}=1/2" joined by "; ".
  std::string to_string() const;

  friend bool operator==(const RationalDist&, const RationalDist&) = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<Rational> masses_;
};

Rational prob(const RationalDist& d, const Formula& f);

/// P(f | g); throws ZeroProbability when P(g) = 0.
Rational cond_prob(const RationalDist& d, const Formula& f, const Formula& g);

inline constexpr std::size_t max_grid_atoms = 3;
inline constexpr int max_grid_denominator = 12;

/// C(denominator + 2^n - 1, 2^n - 1).
std::uint64_t grid_size(std::size_t atom_count, int denominator);

/// Streams every distribution whose masses are multiples of
/// 1/denominator, in lexicographic order of the numerator vector. The
/// visitor returns false to stop early.
void for_each_grid_point(std::span<const std::string> atoms, int denominator,
                         const std::function<bool(const RationalDist&)>& visit);

std::vector<RationalDist> grid(std::span<const std::string> atoms, int denominator);

enum class SearchStatus { no_counterexample, counterexample };

std::string_view to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::no_counterexample;
  std::optional<RationalDist> witness;
  /// Grid points visited (all of them unless a witness stopped the walk).
  std::uint64_t checked = 0;
  /// Grid points satisfying the search's premises.
  std::uint64_t premises_met = 0;
  /// Relevance ordering only: boundary cases where a weak inequality holds
  /// with equality, and cases where both hold strictly.
  std::uint64_t equality_cases = 0;
  std::uint64_t strict_cases = 0;

  bool found() const { return status == SearchStatus::counterexample; }
};

/// Premise sets for the conditional-assertibility theorem over {A, C}.
enum class FregePremises {
  standard,   // P(A > C) = 1, 0 < P(A) < 1, 0 < P(C) < 1
  weakened,   // P(A > C) = 1, P(A) != 0, P(C) != 1
  unbounded,  // P(A > C) = 1, P(A) != 0 (the bounds dropped)
};

/// Looks for a distribution meeting the premises with P(C|A) <= P(C).
SearchResult check_frege_theorem(int denominator,
                                 FregePremises premises = FregePremises::standard);

/// Over {A, B}: P(A or B) = 1 and 0 < P(A), P(B) < 1 must give
/// P(B|A) < P(B) and P(A|B) < P(A); when additionally P(AB) = 0 it must
/// give P(B|A) = 0. Any failure is a counterexample.
SearchResult check_disjunction_corollary(int denominator);

/// P((A and not A) and b) = P(A and not A) * P(b). `contradiction_atom`
/// may be absent from the distribution.
bool check_explosion_irrelevance(const RationalDist& d, const Formula& b,
                                 const std::string& contradiction_atom = "A");

/// Likelihood pair (P(e|h), P(e|not h)). Ordered by the likelihood ratio
/// via cross-multiplication, so no logarithm is ever taken; a zero on one
/// side is +inf or -inf relevance.
struct Likelihoods {
  Rational given_h;
  Rational given_not_h;

  /// -1, 0 or +1.
  int sign() const;
  bool infinite() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Likelihoods& a, const Likelihoods& b);
  friend bool operator==(const Likelihoods& a, const Likelihoods& b) {
    return (a <=> b) == 0;
  }
};

/// Throws ZeroProbability when P(h) is 0 or 1 or when P(e) = 0.
Likelihoods llr(const RationalDist& d, const Formula& e, const Formula& h);

/// P(a and b | c) = P(a | c) P(b | c) for c = h and c = not h. A
/// conditioning event of probability zero makes its side hold vacuously.
bool conditionally_independent(const RationalDist& d, const Formula& a, const Formula& b,
                               const Formula& h);

inline constexpr int max_ordering_denominator = 8;

/// Over {A, B, H}, among distributions where A and B are independent given
/// H and given not H, each positively relevant to H, and P(H | A and B) < 1:
/// requires llr(A or B) <= max(llr A, llr B) <= llr(A and B).
SearchResult check_relevance_ordering(int denominator);

}  // namespace coordsem
