#pragma once

// Multilinear ("prospect") semantics: a sentence denotes a formal vector
// over its atoms, `and` is vector addition and each `or` occurrence is a
// binary choice a*X + (1-a)*Y with its own coefficient a in {0, 1}.

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coordsem/formula.hpp"

namespace coordsem {

/// Formal nonnegative integer vector over atom names. Zero coefficients
/// are never stored.
class Prospect {
 public:
  Prospect() = default;
  Prospect(std::initializer_list<std::pair<const std::string, unsigned>> coefficients);

  static Prospect unit(const std::string& atom);

  unsigned coefficient(const std::string& atom) const;
  const std::map<std::string, unsigned>& coefficients() const { return coefficients_; }
  bool is_null() const { return coefficients_.empty(); }
  unsigned max_coefficient() const;

  Prospect operator+(const Prospect& other) const;

  friend auto operator<=>(const Prospect&, const Prospect&) = default;
  friend bool operator==(const Prospect&, const Prospect&) = default;

  /// "{A:1, B:1}"
  std::string to_string() const;

 private:
  std::map<std::string, unsigned> coefficients_;
};

/// coeff_id -> a; true selects the left disjunct.
using CoefficientAssignment = std::map<int, bool>;

using OptionSet = std::set<Prospect>;

std::string to_string(const OptionSet& options);

class UnsupportedConnective : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t max_option_disjunctions = 20;

Prospect denote_one(const Formula& f, const CoefficientAssignment& c);

/// Image of `denote_one` over all 2^k coefficient assignments.
OptionSet denote_options(const Formula& f);

struct OptionComparison {
  bool equal = true;
  /// Symmetric-difference element with the largest single coefficient,
  /// ties broken by prospect order. Empty when `equal`.
  std::optional<Prospect> witness;
};

OptionComparison option_equivalent(const Formula& f, const Formula& g);

enum class Category { acceptable, odd_hobson, weird_double_image };

std::string_view to_string(Category c);

struct DoubleImage {
  Prospect option;
  std::string atom;
  unsigned coefficient = 0;

  friend bool operator==(const DoubleImage&, const DoubleImage&) = default;
};

struct Judgment {
  Category category = Category::acceptable;
  OptionSet options;
  std::vector<DoubleImage> double_images;
  /// coeff_ids of `or` nodes whose branches denote the same option set.
  std::vector<int> hobson_nodes;
};

/// A stative atom with coefficient >= 2 in any option is a double image
/// (weird); otherwise an `or` with identical branch option sets is a
/// Hobson's choice (odd); otherwise acceptable.
Judgment judge(const Formula& f);

}  // namespace coordsem
