#include "coordsem/law.hpp"

#include <algorithm>

namespace coordsem {

std::string_view to_string(Connective c) {
  switch (c) {
    case Connective::conjunction: return "and";
    case Connective::disjunction: return "or";
    case Connective::exclusive: return "xor";
  }
  return "?";
}

Template Template::meta(std::string name) {
  return Template(std::make_shared<Node>(Node{Kind::meta, std::move(name), {}}));
}

Template Template::meet(Template left, Template right) {
  return Template(std::make_shared<Node>(
      Node{Kind::meet, {}, {std::move(left), std::move(right)}}));
}

Template Template::join(Template left, Template right) {
  return Template(std::make_shared<Node>(
      Node{Kind::join, {}, {std::move(left), std::move(right)}}));
}

std::set<std::string> Template::metavariables() const {
  if (kind() == Kind::meta) return {name()};
  auto out = left().metavariables();
  out.merge(right().metavariables());
  return out;
}

Template Template::swapped() const {
  switch (kind()) {
    case Kind::meta: return *this;
    case Kind::meet: return join(left().swapped(), right().swapped());
    case Kind::join: return meet(left().swapped(), right().swapped());
  }
  return *this;
}

std::string Template::to_string() const {
  if (kind() == Kind::meta) return name();
  auto side = [](const Template& t) {
    return t.kind() == Kind::meta ? t.to_string() : "(" + t.to_string() + ")";
  };
  return side(left()) + (kind() == Kind::meet ? " meet " : " join ") + side(right());
}

bool operator==(const Template& a, const Template& b) {
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Template::Kind::meta) return a.name() == b.name();
  return a.left() == b.left() && a.right() == b.right();
}

LawSchema::LawSchema(std::string name, Template lhs, Template rhs,
                     ConnectiveMap connectives)
    : name_(std::move(name)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)),
      connectives_(connectives) {
  // Absorption drops a variable on one side, so only nesting is required.
  const auto l = lhs_.metavariables();
  const auto r = rhs_.metavariables();
  if (!std::includes(l.begin(), l.end(), r.begin(), r.end()) &&
      !std::includes(r.begin(), r.end(), l.begin(), l.end())) {
    throw std::invalid_argument("law " + name_ +
                                ": neither side's metavariables contain the other's");
  }
}

std::set<std::string> LawSchema::metavariables() const {
  auto out = lhs_.metavariables();
  out.merge(rhs_.metavariables());
  return out;
}

LawSchema LawSchema::with_connectives(ConnectiveMap connectives) const {
  return LawSchema(name_, lhs_, rhs_, connectives);
}

LawSchema LawSchema::with_name(std::string name) const {
  return LawSchema(std::move(name), lhs_, rhs_, connectives_);
}

namespace laws {
namespace {

const Template X = Template::meta("X");
const Template Y = Template::meta("Y");
const Template Z = Template::meta("Z");

}  // namespace

LawSchema dis1() {
  using T = Template;
  return {"Dis.1", T::meet(X, T::join(Y, Z)), T::join(T::meet(X, Y), T::meet(X, Z))};
}

LawSchema dis2() {
  using T = Template;
  return {"Dis.2", T::join(X, T::meet(Y, Z)), T::meet(T::join(X, Y), T::join(X, Z))};
}

LawSchema abs1() { return {"Abs.1", Template::join(X, Template::meet(X, Y)), X}; }
LawSchema abs2() { return {"Abs.2", Template::meet(X, Template::join(X, Y)), X}; }
LawSchema ide1() { return {"Ide.1", Template::join(X, X), X}; }
LawSchema ide2() { return {"Ide.2", Template::meet(X, X), X}; }

std::vector<LawSchema> inventory(ConnectiveMap map) {
  std::vector<LawSchema> out;
  for (const auto& law : {dis1(), dis2(), abs1(), abs2(), ide1(), ide2()}) {
    out.push_back(law.with_connectives(map));
  }
  return out;
}

}  // namespace laws

namespace {

Formula combine(Connective c, const Formula& l, const Formula& r) {
  switch (c) {
    case Connective::conjunction: return Formula::conjunction(l, r);
    case Connective::disjunction: return Formula::disjunction(l, r);
    case Connective::exclusive: return Formula::exclusive(l, r);
  }
  throw std::logic_error("unreachable");
}

Formula substitute(const Template& t, const Binding& binding, const ConnectiveMap& map) {
  switch (t.kind()) {
    case Template::Kind::meta: {
      auto it = binding.find(t.name());
      if (it == binding.end()) {
        throw UnboundMetavariable("metavariable " + t.name() + " is unbound");
      }
      return it->second;
    }
    case Template::Kind::meet:
      return combine(map.meet, substitute(t.left(), binding, map),
                     substitute(t.right(), binding, map));
    case Template::Kind::join:
      return combine(map.join, substitute(t.left(), binding, map),
                     substitute(t.right(), binding, map));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::pair<Formula, Formula> instantiate(const LawSchema& schema, const Binding& binding) {
  return {substitute(schema.lhs(), binding, schema.connectives()),
          substitute(schema.rhs(), binding, schema.connectives())};
}

}  // namespace coordsem
