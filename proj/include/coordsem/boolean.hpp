#pragma once

// Classical truth-table semantics and law checking.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coordsem/formula.hpp"
#include "coordsem/law.hpp"

namespace coordsem {

using Assignment = std::map<std::string, bool>;

inline constexpr std::size_t max_truth_table_atoms = 12;

class MissingAtom : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TooManyAtoms : public std::length_error {
 public:
  using std::length_error::length_error;
};

class DualityUndefined : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool eval(const Formula& f, const Assignment& v);

/// Row `index` of the truth table over `atoms`: atoms[i] takes bit i, so
/// rows are enumerated with the first atom varying fastest. "Least
/// witness" throughout means the lowest such row index.
Assignment assignment_at(std::span<const std::string> atoms, std::uint64_t index);

/// Number of rows; throws TooManyAtoms above max_truth_table_atoms.
std::uint64_t row_count(std::size_t atom_count);

std::string to_string(const Assignment& v);

enum class Validity { valid, invalid };

std::string_view to_string(Validity v);

struct Counterexample {
  std::map<std::string, std::string> binding;  // metavariable -> atom
  Assignment assignment;
};

struct LawVerdict {
  Validity status = Validity::valid;
  std::optional<Counterexample> counterexample;

  bool valid() const { return status == Validity::valid; }
};

/// Reciprocal entailment over the union of both atom sets.
LawVerdict equivalent(const Formula& f, const Formula& g);

/// Binds the schema's metavariables (in name order) to fresh atoms A, B,
/// C, ... and checks the instance by truth table.
LawVerdict check_law(const LawSchema& schema);

/// meet and join interchanged on both sides. Throws DualityUndefined when
/// the connective map reads either operation as exclusive disjunction.
LawSchema dual(const LawSchema& schema);

/// Right-nested xor chain over n distinct atoms is true exactly on the
/// assignments with an odd number of true atoms. 1 <= n <= 12.
bool xor_parity(int n);

}  // namespace coordsem
