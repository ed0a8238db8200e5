#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coordsem/formula.hpp"

namespace coordsem {

enum class Connective { conjunction, disjunction, exclusive };

std::string_view to_string(Connective c);

/// Concrete readings for the two lattice operations of a law template.
struct ConnectiveMap {
  Connective meet = Connective::conjunction;
  Connective join = Connective::disjunction;

  friend bool operator==(const ConnectiveMap&, const ConnectiveMap&) = default;
};

/// Law template over metavariables with abstract `meet`/`join`.
class Template {
 public:
  enum class Kind { meta, meet, join };

  static Template meta(std::string name);
  static Template meet(Template left, Template right);
  static Template join(Template left, Template right);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const Template& left() const { return node_->children.at(0); }
  const Template& right() const { return node_->children.at(1); }

  std::set<std::string> metavariables() const;
  /// Same tree with meet and join interchanged.
  Template swapped() const;
  std::string to_string() const;

  friend bool operator==(const Template& a, const Template& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Template> children;
  };
  explicit Template(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class UnboundMetavariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An equation between two templates plus the connective reading.
class LawSchema {
 public:
  /// Throws std::invalid_argument unless one side's metavariables are a
  /// subset of the other's.
  LawSchema(std::string name, Template lhs, Template rhs, ConnectiveMap connectives = {});

  const std::string& name() const { return name_; }
  const Template& lhs() const { return lhs_; }
  const Template& rhs() const { return rhs_; }
  const ConnectiveMap& connectives() const { return connectives_; }
  /// Union over both sides.
  std::set<std::string> metavariables() const;

  LawSchema with_connectives(ConnectiveMap connectives) const;
  LawSchema with_name(std::string name) const;

  /// Compares templates and connective reading; the name is a label only.
  friend bool operator==(const LawSchema& a, const LawSchema& b) {
    return a.lhs_ == b.lhs_ && a.rhs_ == b.rhs_ && a.connectives_ == b.connectives_;
  }

 private:
  std::string name_;
  Template lhs_;
  Template rhs_;
  ConnectiveMap connectives_;
};

namespace laws {

LawSchema dis1();
LawSchema dis2();
LawSchema abs1();
LawSchema abs2();
LawSchema ide1();
LawSchema ide2();

/// Dis.1, Dis.2, Abs.1, Abs.2, Ide.1, Ide.2 in that order, read with `map`.
std::vector<LawSchema> inventory(ConnectiveMap map = {});

/// join read as exclusive disjunction.
inline constexpr ConnectiveMap exclusive_join{Connective::conjunction, Connective::exclusive};

}  // namespace laws

using Binding = std::map<std::string, Formula>;

/// Substitutes `binding` into both sides and applies the connective map.
/// Each result formula is renumbered left to right.
std::pair<Formula, Formula> instantiate(const LawSchema& schema, const Binding& binding);

}  // namespace coordsem
