#include "coordsem/boolean.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace coordsem {

bool eval(const Formula& f, const Assignment& v) {
  switch (f.kind()) {
    case NodeKind::atom: {
      auto it = v.find(f.atom().name);
      if (it == v.end()) {
        throw MissingAtom("assignment has no value for '" + f.atom().name + "'");
      }
      return it->second;
    }
    case NodeKind::negation:
      return !eval(f.child(), v);
    case NodeKind::conjunction:
      return eval(f.left(), v) && eval(f.right(), v);
    case NodeKind::disjunction:
      return eval(f.left(), v) || eval(f.right(), v);
    case NodeKind::exclusive:
      return eval(f.left(), v) != eval(f.right(), v);
  }
  throw std::logic_error("unreachable");
}

std::uint64_t row_count(std::size_t atom_count) {
  if (atom_count > max_truth_table_atoms) {
    throw TooManyAtoms("truth tables are limited to " +
                       std::to_string(max_truth_table_atoms) + " atoms, got " +
                       std::to_string(atom_count));
  }
  return std::uint64_t{1} << atom_count;
}

Assignment assignment_at(std::span<const std::string> atoms, std::uint64_t index) {
  Assignment v;
  for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = (index >> i) & 1U;
  return v;
}

std::string to_string(const Assignment& v) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto& [name, value] : v) {
    if (!first) out << ", ";
    first = false;
    out << name << ':' << (value ? 1 : 0);
  }
  out << '}';
  return out.str();
}

std::string_view to_string(Validity v) {
  return v == Validity::valid ? "valid" : "invalid";
}

LawVerdict equivalent(const Formula& f, const Formula& g) {
  std::set<std::string> names;
  for (auto& n : atom_names(f)) names.insert(n);
  for (auto& n : atom_names(g)) names.insert(n);
  std::vector<std::string> atoms(names.begin(), names.end());
  const std::uint64_t rows = row_count(atoms.size());
  for (std::uint64_t row = 0; row < rows; ++row) {
    Assignment v = assignment_at(atoms, row);
    if (eval(f, v) != eval(g, v)) {
      return {Validity::invalid, Counterexample{{}, std::move(v)}};
    }
  }
  return {};
}

LawVerdict check_law(const LawSchema& schema) {
  Binding binding;
  std::map<std::string, std::string> names;
  char next = 'A';
  for (const auto& meta : schema.metavariables()) {
    std::string atom(1, next++);
    binding.emplace(meta, Formula::atom(atom));
    names.emplace(meta, atom);
  }
  auto [lhs, rhs] = instantiate(schema, binding);
  LawVerdict verdict = equivalent(lhs, rhs);
  if (verdict.counterexample) verdict.counterexample->binding = std::move(names);
  return verdict;
}

LawSchema dual(const LawSchema& schema) {
  const ConnectiveMap& map = schema.connectives();
  if (map.meet == Connective::exclusive || map.join == Connective::exclusive) {
    throw DualityUndefined("duality is undefined for law " + schema.name() +
                           " read with exclusive disjunction");
  }
  LawSchema swapped("dual(" + schema.name() + ")", schema.lhs().swapped(),
                    schema.rhs().swapped(), map);
  for (const auto& known : laws::inventory(map)) {
    if (known == swapped) return swapped.with_name(known.name());
  }
  return swapped;
}

bool xor_parity(int n) {
  if (n < 1 || n > static_cast<int>(max_truth_table_atoms)) {
    throw std::out_of_range("xor_parity: n must lie in [1, 12]");
  }
  std::vector<std::string> atoms;
  for (int i = 1; i <= n; ++i) atoms.push_back("P" + std::to_string(i));
  Formula chain = Formula::atom(atoms.back());
  for (int i = n - 2; i >= 0; --i) chain = Formula::exclusive(Formula::atom(atoms[i]), chain);
  const std::uint64_t rows = row_count(atoms.size());
  for (std::uint64_t row = 0; row < rows; ++row) {
    bool odd = std::popcount(row) % 2 == 1;
    if (eval(chain, assignment_at(atoms, row)) != odd) return false;
  }
  return true;
}

}  // namespace coordsem
