#include "coordsem/prospect.hpp"

#include <algorithm>
#include <sstream>

namespace coordsem {

Prospect::Prospect(
    std::initializer_list<std::pair<const std::string, unsigned>> coefficients) {
  for (auto& [atom, k] : coefficients) {
    if (k != 0) coefficients_[atom] += k;
  }
}

Prospect Prospect::unit(const std::string& atom) { return Prospect{{atom, 1U}}; }

unsigned Prospect::coefficient(const std::string& atom) const {
  auto it = coefficients_.find(atom);
  return it == coefficients_.end() ? 0U : it->second;
}

unsigned Prospect::max_coefficient() const {
  unsigned best = 0;
  for (auto& [atom, k] : coefficients_) best = std::max(best, k);
  return best;
}

Prospect Prospect::operator+(const Prospect& other) const {
  Prospect sum = *this;
  for (auto& [atom, k] : other.coefficients_) sum.coefficients_[atom] += k;
  return sum;
}

std::string Prospect::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto& [atom, k] : coefficients_) {
    if (!first) out << ", ";
    first = false;
    out << atom << ':' << k;
  }
  out << '}';
  return out.str();
}

std::string to_string(const OptionSet& options) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : options) {
    if (!first) out += ", ";
    first = false;
    out += p.to_string();
  }
  return out + "}";
}

std::string_view to_string(Category c) {
  switch (c) {
    case Category::acceptable: return "acceptable";
    case Category::odd_hobson: return "odd_hobson";
    case Category::weird_double_image: return "weird_double_image";
  }
  return "?";
}

namespace {

void require_denotable(const Formula& f) {
  if (contains(f, NodeKind::negation)) {
    throw UnsupportedConnective("negation has no prospect denotation: " + unparse(f));
  }
  if (contains(f, NodeKind::exclusive)) {
    throw UnsupportedConnective("xor has no prospect denotation: " + unparse(f));
  }
}

Prospect denote_checked(const Formula& f, const CoefficientAssignment& c) {
  switch (f.kind()) {
    case NodeKind::atom:
      return Prospect::unit(f.atom().name);
    case NodeKind::conjunction:
      return denote_checked(f.left(), c) + denote_checked(f.right(), c);
    case NodeKind::disjunction: {
      auto it = c.find(f.coeff_id());
      if (it == c.end()) {
        throw std::invalid_argument("no coefficient for or-node " +
                                    std::to_string(f.coeff_id()));
      }
      return it->second ? denote_checked(f.left(), c) : denote_checked(f.right(), c);
    }
    default:
      throw UnsupportedConnective("unsupported connective");
  }
}

}  // namespace

Prospect denote_one(const Formula& f, const CoefficientAssignment& c) {
  require_denotable(f);
  return denote_checked(f, c);
}

OptionSet denote_options(const Formula& f) {
  require_denotable(f);
  const std::vector<int> ids = coeff_ids(f);
  if (ids.size() > max_option_disjunctions) {
    throw std::length_error("option enumeration is limited to " +
                            std::to_string(max_option_disjunctions) + " or-nodes");
  }
  OptionSet out;
  const std::uint64_t total = std::uint64_t{1} << ids.size();
  CoefficientAssignment c;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::size_t i = 0; i < ids.size(); ++i) c[ids[i]] = (bits >> i) & 1U;
    out.insert(denote_checked(f, c));
  }
  return out;
}

OptionComparison option_equivalent(const Formula& f, const Formula& g) {
  const OptionSet a = denote_options(f);
  const OptionSet b = denote_options(g);
  if (a == b) return {};
  std::vector<Prospect> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  auto best = std::min_element(diff.begin(), diff.end(),
                               [](const Prospect& x, const Prospect& y) {
                                 if (x.max_coefficient() != y.max_coefficient()) {
                                   return x.max_coefficient() > y.max_coefficient();
                                 }
                                 return x < y;
                               });
  return {false, *best};
}

Judgment judge(const Formula& f) {
  Judgment j;
  j.options = denote_options(f);

  std::map<std::string, Aspect> aspect;
  for (auto& a : atoms(f)) aspect.emplace(a.name, a.aspect);
  for (const auto& option : j.options) {
    for (auto& [atom, k] : option.coefficients()) {
      if (k >= 2 && aspect.at(atom) == Aspect::stative) {
        j.double_images.push_back({option, atom, k});
      }
    }
  }

  for_each_subformula(f, [&](const Formula& g, const std::string&) {
    if (g.kind() == NodeKind::disjunction &&
        denote_options(g.left()) == denote_options(g.right())) {
      j.hobson_nodes.push_back(g.coeff_id());
    }
  });
  std::sort(j.hobson_nodes.begin(), j.hobson_nodes.end());

  if (!j.double_images.empty()) {
    j.category = Category::weird_double_image;
  } else if (!j.hobson_nodes.empty()) {
    j.category = Category::odd_hobson;
  }
  return j;
}

}  // namespace coordsem
