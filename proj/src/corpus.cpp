#include "coordsem/corpus.hpp"

#include <algorithm>

namespace coordsem {

const Corpus& Corpus::standard() {
  static const Corpus corpus = [] {
    Corpus c;
    const std::pair<const char*, const char*> table[] = {
        {"1a", "A and (B or C)"},
        {"1b", "(A and B) or (A and C)"},
        {"2a", "A or (B and C)"},
        {"2b", "(A or B) and (A or C)"},
        {"2b'", "(A or B) and (C or A)"},
        {"3a", "A or (B and C)"},
        {"3b", "(A or B) and (A or C)"},
        {"4a", "A or (B and C)"},
        {"4b", "(A or B) and (A or C)"},
        {"5a", "A or (A and B)"},
        {"5b", "A"},
        {"5c", "A and (A or B)"},
        {"5c'", "A and (B or A)"},
        {"6a", "A or A"},
        {"6b", "A"},
        {"6c", "A and A"},
    };
    for (auto [label, text] : table) c.set(label, parse(text));
    return c;
  }();
  return corpus;
}

const Formula& Corpus::lookup(const std::string& label) const {
  auto it = entries_.find(label);
  if (it == entries_.end()) throw UnknownLabel("unknown corpus label '" + label + "'");
  return it->second;
}

bool Corpus::contains(const std::string& label) const {
  return entries_.count(label) != 0;
}

std::vector<std::string> Corpus::labels() const { return order_; }

void Corpus::set(const std::string& label, Formula f) {
  auto it = entries_.find(label);
  if (it != entries_.end()) {
    it->second = std::move(f);
    return;
  }
  entries_.emplace(label, std::move(f));
  order_.push_back(label);
}

const Formula& corpus_lookup(const std::string& label) {
  return Corpus::standard().lookup(label);
}

}  // namespace coordsem
