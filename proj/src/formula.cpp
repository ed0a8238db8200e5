#include "coordsem/formula.hpp"

#include <cctype>
#include <map>
#include <set>

namespace coordsem {

struct Formula::Node {
  NodeKind kind;
  Atom atom;
  std::vector<Formula> children;
  int coeff = -1;
};

std::string_view to_string(Aspect aspect) {
  return aspect == Aspect::stative ? "stative" : "iterable";
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool is_keyword(std::string_view word) {
  return word == "and" || word == "or" || word == "xor" || word == "not";
}

}  // namespace

Formula Formula::atom(std::string name, Aspect aspect) {
  if (!valid_name(name) || is_keyword(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::atom;
  node->atom = Atom{std::move(name), aspect};
  return Formula(std::move(node));
}

Formula Formula::negation(const Formula& child) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::negation;
  node->children = {child};
  return finalize(Formula(std::move(node)));
}

Formula Formula::make_binary(NodeKind kind, const Formula& left, const Formula& right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children = {left, right};
  return finalize(Formula(std::move(node)));
}

Formula Formula::conjunction(const Formula& left, const Formula& right) {
  return make_binary(NodeKind::conjunction, left, right);
}

Formula Formula::disjunction(const Formula& left, const Formula& right) {
  return make_binary(NodeKind::disjunction, left, right);
}

Formula Formula::exclusive(const Formula& left, const Formula& right) {
  return make_binary(NodeKind::exclusive, left, right);
}

// Rebuilds the tree with in-order coefficient numbering and a single aspect
// per atom name.
Formula Formula::finalize(const Formula& raw) {
  std::map<std::string, Aspect> aspects;
  int next = 0;
  std::function<Formula(const Formula&)> rebuild = [&](const Formula& f) -> Formula {
    const Node& n = *f.node_;
    if (n.kind == NodeKind::atom) {
      auto [it, inserted] = aspects.emplace(n.atom.name, n.atom.aspect);
      if (!inserted && it->second != n.atom.aspect) {
        throw AspectConflict("atom '" + n.atom.name +
                             "' is used both as stative and as iterable");
      }
      return f;
    }
    auto copy = std::make_shared<Node>();
    copy->kind = n.kind;
    copy->children.push_back(rebuild(n.children[0]));
    if (n.kind == NodeKind::disjunction) copy->coeff = next++;
    if (n.children.size() > 1) copy->children.push_back(rebuild(n.children[1]));
    return Formula(std::move(copy));
  };
  return rebuild(raw);
}

NodeKind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const {
  if (node_->kind != NodeKind::atom) throw std::logic_error("not an atom");
  return node_->atom;
}

const Formula& Formula::child() const {
  if (node_->kind != NodeKind::negation) throw std::logic_error("not a negation");
  return left();
}

const Formula& Formula::left() const {
  if (node_->kind == NodeKind::atom) throw std::logic_error("atom has no children");
  return node_->children[0];
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("not a binary node");
  return node_->children[1];
}

int Formula::coeff_id() const {
  if (node_->kind != NodeKind::disjunction) throw std::logic_error("not a disjunction");
  return node_->coeff;
}

bool Formula::is_binary() const {
  return node_->kind == NodeKind::conjunction ||
         node_->kind == NodeKind::disjunction ||
         node_->kind == NodeKind::exclusive;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case NodeKind::atom:
      return a.atom() == b.atom();
    case NodeKind::negation:
      return a.child() == b.child();
    case NodeKind::disjunction:
      if (a.coeff_id() != b.coeff_id()) return false;
      [[fallthrough]];
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

void for_each_subformula(
    const Formula& f,
    const std::function<void(const Formula&, const std::string&)>& visit) {
  std::string path;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    visit(g, path);
    if (g.kind() == NodeKind::atom) return;
    path.push_back('0');
    walk(g.left());
    path.pop_back();
    if (g.is_binary()) {
      path.push_back('1');
      walk(g.right());
      path.pop_back();
    }
  };
  walk(f);
}

std::vector<Atom> atoms(const Formula& f) {
  std::map<std::string, Aspect> found;
  for_each_subformula(f, [&](const Formula& g, const std::string&) {
    if (g.kind() == NodeKind::atom) found.emplace(g.atom().name, g.atom().aspect);
  });
  std::vector<Atom> out;
  out.reserve(found.size());
  for (auto& [name, aspect] : found) out.push_back(Atom{name, aspect});
  return out;
}

std::vector<std::string> atom_names(const Formula& f) {
  std::vector<std::string> out;
  for (auto& a : atoms(f)) out.push_back(a.name);
  return out;
}

std::size_t disjunction_count(const Formula& f) { return coeff_ids(f).size(); }

std::vector<int> coeff_ids(const Formula& f) {
  std::set<int> ids;
  for_each_subformula(f, [&](const Formula& g, const std::string&) {
    if (g.kind() == NodeKind::disjunction) ids.insert(g.coeff_id());
  });
  return {ids.begin(), ids.end()};
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 0;
  for_each_subformula(f, [&](const Formula&, const std::string&) { ++n; });
  return n;
}

bool contains(const Formula& f, NodeKind kind) {
  bool hit = false;
  for_each_subformula(f, [&](const Formula& g, const std::string&) {
    hit = hit || g.kind() == kind;
  });
  return hit;
}

// ---------------------------------------------------------------------------
// Lexing and parsing

namespace {

enum class Tok { ident, kw_and, kw_or, kw_xor, kw_not, lparen, rparen, end };

struct Token {
  Tok type;
  std::string text;
  std::size_t pos;
  bool annotated = false;
  Aspect aspect = Aspect::stative;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_at = [&](std::size_t start) {
    std::size_t j = start;
    while (j < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
      ++j;
    }
    return j;
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Tok::lparen, "(", i});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Tok::rparen, ")", i});
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    std::size_t end = ident_at(i);
    std::string word(src.substr(i, end - i));
    Token tok{Tok::ident, word, i};
    if (word == "and") tok.type = Tok::kw_and;
    else if (word == "or") tok.type = Tok::kw_or;
    else if (word == "xor") tok.type = Tok::kw_xor;
    else if (word == "not") tok.type = Tok::kw_not;
    if (tok.type == Tok::ident && end < src.size() && src[end] == ':') {
      std::size_t aspect_start = end + 1;
      std::size_t aspect_end = ident_at(aspect_start);
      std::string_view aspect = src.substr(aspect_start, aspect_end - aspect_start);
      if (aspect == "stative") tok.aspect = Aspect::stative;
      else if (aspect == "iterable") tok.aspect = Aspect::iterable;
      else throw ParseError("unknown aspect '" + std::string(aspect) + "'", aspect_start);
      tok.annotated = true;
      end = aspect_end;
    }
    out.push_back(std::move(tok));
    i = end;
  }
  out.push_back({Tok::end, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  Formula run() {
    Formula f = disjunctive();
    if (peek().type != Tok::end) {
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
    return f;
  }

  // Aspect annotations as written; bare atoms impose nothing.
  const std::map<std::string, Aspect>& annotations() const { return annotations_; }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  Formula disjunctive() {
    Formula left = conjunctive();
    Tok t = peek().type;
    if (t == Tok::kw_or || t == Tok::kw_xor) {
      next();
      Formula right = disjunctive();
      return t == Tok::kw_or ? Formula::disjunction(left, right)
                             : Formula::exclusive(left, right);
    }
    return left;
  }

  Formula conjunctive() {
    Formula left = unary();
    if (peek().type == Tok::kw_and) {
      next();
      return Formula::conjunction(left, conjunctive());
    }
    return left;
  }

  Formula unary() {
    if (peek().type == Tok::kw_not) {
      next();
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    const Token& tok = next();
    switch (tok.type) {
      case Tok::ident: {
        if (tok.annotated) {
          auto [it, inserted] = annotations_.emplace(tok.text, tok.aspect);
          if (!inserted && it->second != tok.aspect) {
            throw ParseError("conflicting aspect annotations for '" + tok.text + "'",
                             tok.pos);
          }
        }
        return Formula::atom(tok.text, Aspect::stative);
      }
      case Tok::lparen: {
        Formula inner = disjunctive();
        if (peek().type != Tok::rparen) {
          throw ParseError("expected ')'", peek().pos);
        }
        next();
        return inner;
      }
      case Tok::end:
        throw ParseError("unexpected end of input", tok.pos);
      default:
        throw ParseError("unexpected '" + tok.text + "'", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::map<std::string, Aspect> annotations_;
};

Formula apply_aspects(const Formula& f, const std::map<std::string, Aspect>& aspects) {
  switch (f.kind()) {
    case NodeKind::atom: {
      auto it = aspects.find(f.atom().name);
      return it == aspects.end() ? f : Formula::atom(f.atom().name, it->second);
    }
    case NodeKind::negation:
      return Formula::negation(apply_aspects(f.child(), aspects));
    case NodeKind::conjunction:
      return Formula::conjunction(apply_aspects(f.left(), aspects),
                                  apply_aspects(f.right(), aspects));
    case NodeKind::disjunction:
      return Formula::disjunction(apply_aspects(f.left(), aspects),
                                  apply_aspects(f.right(), aspects));
    case NodeKind::exclusive:
      return Formula::exclusive(apply_aspects(f.left(), aspects),
                                apply_aspects(f.right(), aspects));
  }
  throw std::logic_error("unreachable");
}

int precedence(NodeKind kind) {
  switch (kind) {
    case NodeKind::disjunction:
    case NodeKind::exclusive:
      return 1;
    case NodeKind::conjunction:
      return 2;
    case NodeKind::negation:
      return 3;
    case NodeKind::atom:
      return 4;
  }
  return 0;
}

std::string_view connective_word(NodeKind kind) {
  switch (kind) {
    case NodeKind::conjunction: return "and";
    case NodeKind::disjunction: return "or";
    case NodeKind::exclusive: return "xor";
    case NodeKind::negation: return "not";
    default: return "";
  }
}

void unparse_into(const Formula& f, std::string& out) {
  auto wrapped = [&](const Formula& g, bool parens) {
    if (parens) out.push_back('(');
    unparse_into(g, out);
    if (parens) out.push_back(')');
  };
  switch (f.kind()) {
    case NodeKind::atom:
      out += f.atom().name;
      if (f.atom().aspect == Aspect::iterable) out += ":iterable";
      return;
    case NodeKind::negation:
      out += "not ";
      wrapped(f.child(), precedence(f.child().kind()) < precedence(NodeKind::negation));
      return;
    default: {
      int p = precedence(f.kind());
      // Right associative: an equal-precedence left operand needs brackets.
      wrapped(f.left(), precedence(f.left().kind()) <= p);
      out.push_back(' ');
      out += connective_word(f.kind());
      out.push_back(' ');
      wrapped(f.right(), precedence(f.right().kind()) < p);
    }
  }
}

}  // namespace

Formula parse(std::string_view text) {
  Parser parser(text);
  Formula raw = parser.run();
  if (parser.annotations().empty()) return raw;
  return apply_aspects(raw, parser.annotations());
}

std::string unparse(const Formula& f) {
  std::string out;
  unparse_into(f, out);
  return out;
}

std::size_t length_metric(const Formula& f) {
  std::size_t count = 0;
  for (const Token& tok : lex(unparse(f))) {
    if (tok.type != Tok::lparen && tok.type != Tok::rparen && tok.type != Tok::end) {
      ++count;
    }
  }
  return count;
}

Formula swap_children_at(const Formula& f, std::string_view path) {
  if (path.empty()) {
    switch (f.kind()) {
      case NodeKind::conjunction: return Formula::conjunction(f.right(), f.left());
      case NodeKind::disjunction: return Formula::disjunction(f.right(), f.left());
      case NodeKind::exclusive: return Formula::exclusive(f.right(), f.left());
      default: throw std::invalid_argument("path does not reach a binary node");
    }
  }
  if (f.kind() == NodeKind::atom) {
    throw std::invalid_argument("path descends below an atom");
  }
  std::string_view rest = path.substr(1);
  if (f.kind() == NodeKind::negation) {
    if (path[0] != '0') throw std::invalid_argument("negation has only child 0");
    return Formula::negation(swap_children_at(f.child(), rest));
  }
  Formula l = path[0] == '0' ? swap_children_at(f.left(), rest) : f.left();
  Formula r = path[0] == '1' ? swap_children_at(f.right(), rest) : f.right();
  switch (f.kind()) {
    case NodeKind::conjunction: return Formula::conjunction(l, r);
    case NodeKind::disjunction: return Formula::disjunction(l, r);
    default: return Formula::exclusive(l, r);
  }
}

}  // namespace coordsem
