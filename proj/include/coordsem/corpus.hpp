#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coordsem/formula.hpp"

namespace coordsem {

class UnknownLabel : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Labelled schematic sentences over the clause atoms A, B and C.
///
/// Prosodic grouping of the original sentences is rendered as explicit
/// brackets; coordination-reduced variants (3x, 4x) are stored as their
/// sentential expansions. A Corpus is a value, so callers may override an
/// entry (e.g. to run the reproduction report against a tampered corpus).
class Corpus {
 public:
  /// The built-in inventory: 1a 1b 2a 2b 2b' 3a 3b 4a 4b 5a 5b 5c 5c' 6a 6b 6c.
  static const Corpus& standard();

  const Formula& lookup(const std::string& label) const;
  bool contains(const std::string& label) const;
  std::vector<std::string> labels() const;

  void set(const std::string& label, Formula f);

 private:
  std::map<std::string, Formula> entries_;
  std::vector<std::string> order_;
};

/// Shorthand for `Corpus::standard().lookup(label)`.
const Formula& corpus_lookup(const std::string& label);

}  // namespace coordsem
