#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so failures
// reproduce.

#include <random>
#include <string>
#include <vector>

#include "coordsem/formula.hpp"

namespace coordsem::testing {

struct FormulaShape {
  std::vector<std::string> atoms{"A", "B", "C"};
  int max_depth = 4;
  bool negation = false;
  bool exclusive = false;
};

class FormulaGenerator {
 public:
  explicit FormulaGenerator(unsigned seed, FormulaShape shape = {})
      : rng_(seed), shape_(std::move(shape)) {}

  Formula next() { return build(shape_.max_depth); }

 private:
  Formula build(int depth) {
    std::uniform_int_distribution<int> pick(0, 5);
    int choice = depth == 0 ? 0 : pick(rng_);
    if (choice == 4 && !shape_.negation) choice = 1;
    if (choice == 5 && !shape_.exclusive) choice = 2;
    switch (choice) {
      case 0: {
        std::uniform_int_distribution<std::size_t> atom(0, shape_.atoms.size() - 1);
        return Formula::atom(shape_.atoms[atom(rng_)]);
      }
      case 1:
        return Formula::conjunction(build(depth - 1), build(depth - 1));
      case 2:
      case 3:
        return Formula::disjunction(build(depth - 1), build(depth - 1));
      case 4:
        return Formula::negation(build(depth - 1));
      default:
        return Formula::exclusive(build(depth - 1), build(depth - 1));
    }
  }

  std::mt19937 rng_;
  FormulaShape shape_;
};

}  // namespace coordsem::testing
