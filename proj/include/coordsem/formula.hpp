#pragma once

// Object language shared by every semantics: aspect-annotated atoms,
// classical connectives and the per-`or` coefficient identifiers used by
// the prospect semantics.

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace coordsem {

enum class Aspect { stative, iterable };

std::string_view to_string(Aspect aspect);

struct Atom {
  std::string name;
  Aspect aspect = Aspect::stative;

  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class NodeKind { atom, negation, conjunction, disjunction, exclusive };

/// Raised for malformed formula text. `position()` is the 0-based byte
/// offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when one atom name carries two different aspects in one formula.
class AspectConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable formula tree with shared structure.
///
/// Every formula built through the factories below has its `or` nodes
/// numbered 0..k-1 in textual (in-order) position. Subtrees returned by
/// `left()`/`right()`/`child()` keep the identifiers they carry inside the
/// enclosing formula, so they are distinct but need not start at 0.
class Formula {
 public:
  static Formula atom(std::string name, Aspect aspect = Aspect::stative);
  static Formula negation(const Formula& child);
  static Formula conjunction(const Formula& left, const Formula& right);
  static Formula disjunction(const Formula& left, const Formula& right);
  static Formula exclusive(const Formula& left, const Formula& right);

  NodeKind kind() const;
  const Atom& atom() const;
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;
  int coeff_id() const;

  bool is_binary() const;

  /// Structural equality, coefficient identifiers included.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  static Formula finalize(const Formula& raw);
  static Formula make_binary(NodeKind kind, const Formula& left, const Formula& right);

  std::shared_ptr<const Node> node_;
};

/// Distinct atoms of `f`, sorted by name.
std::vector<Atom> atoms(const Formula& f);
std::vector<std::string> atom_names(const Formula& f);

/// Number of `or` nodes (the number of free coefficients).
std::size_t disjunction_count(const Formula& f);

/// Coefficient identifiers of all `or` nodes, ascending.
std::vector<int> coeff_ids(const Formula& f);

std::size_t node_count(const Formula& f);

bool contains(const Formula& f, NodeKind kind);

/// Grammar: `not` > `and` > `or`/`xor`; binary connectives associate to
/// the right. Atoms may be written `name:stative` or `name:iterable`.
Formula parse(std::string_view text);

/// Canonical text: lowercase connective words, minimal parentheses,
/// iterable atoms annotated at every occurrence.
std::string unparse(const Formula& f);

/// Token count of the canonical unparse, parentheses excluded.
std::size_t length_metric(const Formula& f);

/// Pre-order walk. Paths use '0' for left (or the negated child) and '1'
/// for right; the root has the empty path.
void for_each_subformula(
    const Formula& f,
    const std::function<void(const Formula&, const std::string&)>& visit);

/// Swaps the children of the binary node reached by `path` ("" is the
/// root, '0' descends left, '1' descends right).
Formula swap_children_at(const Formula& f, std::string_view path);

}  // namespace coordsem
