#include "coordsem/report.hpp"

#include <algorithm>

#include "coordsem/boolean.hpp"
#include "coordsem/probability.hpp"
#include "coordsem/prospect.hpp"

namespace coordsem::report {

using coordsem::to_string;

std::string_view to_string(Status s) { return s == Status::match ? "match" : "mismatch"; }

Json to_json(const ReportRecord& r) {
  Json j;
  j["claim"] = r.claim;
  j["criterion"] = r.criterion;
  j["status"] = to_string(r.status);
  j["inputs"] = r.inputs;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  if (!r.detail.is_null()) j["detail"] = r.detail;
  return j;
}

NamedFormula resolve(const Corpus& corpus, const std::string& text) {
  if (corpus.contains(text)) return {text, corpus.lookup(text)};
  return {text, parse(text)};
}

namespace {

Json options_json(const OptionSet& options) {
  Json out = Json::array();
  for (const auto& p : options) out.push_back(p.to_string());
  return out;
}

Json verdict_json(const LawVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.counterexample) {
    Json binding;
    for (const auto& [meta, atom] : v.counterexample->binding) binding[meta] = atom;
    j["binding"] = binding;
    j["counterexample"] = to_string(v.counterexample->assignment);
  }
  return j;
}

Json connectives_json(ConnectiveMap map) {
  return {{"meet", to_string(map.meet)}, {"join", to_string(map.join)}};
}

Json constraint_json(const EpistemicConstraint& c) {
  return {{"constraint", c.to_string()},
          {"provenance", to_string(c.provenance)},
          {"source", c.source}};
}

Json model_json(const BeliefModel& model) {
  Json out = Json::array();
  for (const auto& world : model) out.push_back(to_string(world));
  return out;
}

Json search_json(const SearchResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["checked"] = r.checked;
  j["premises_met"] = r.premises_met;
  if (r.witness) j["witness"] = r.witness->to_string();
  return j;
}

Json judgment_json(const NamedFormula& f) {
  const Judgment j = judge(f.formula);
  Json out;
  out["name"] = f.name;
  out["formula"] = unparse(f.formula);
  out["options"] = options_json(j.options);
  out["category"] = to_string(j.category);
  Json images = Json::array();
  for (const auto& d : j.double_images) {
    images.push_back(
        {{"option", d.option.to_string()}, {"atom", d.atom}, {"coefficient", d.coefficient}});
  }
  out["double_images"] = images;
  out["hobson_nodes"] = j.hobson_nodes;
  return out;
}

// Option semantics is defined for and/or only; other formulas get null.
Json option_comparison_json(const Formula& f, const Formula& g) {
  Json out;
  try {
    const OptionComparison c = option_equivalent(f, g);
    out["option_equivalent"] = c.equal;
    if (c.witness) out["option_witness"] = c.witness->to_string();
  } catch (const UnsupportedConnective&) {
    out["option_equivalent"] = nullptr;
  }
  return out;
}

Json pair_json(const NamedFormula& f, const NamedFormula& g) {
  Json out;
  out["left"] = f.name;
  out["right"] = g.name;
  const LawVerdict b = equivalent(f.formula, g.formula);
  out["boolean_equivalent"] = b.valid();
  if (b.counterexample) out["boolean_witness"] = to_string(b.counterexample->assignment);
  out.update(option_comparison_json(f.formula, g.formula));
  return out;
}

// Every truth function of A and B, as a disjunction of its minterms.
std::vector<Formula> two_atom_truth_functions() {
  const Formula a = Formula::atom("A");
  const Formula b = Formula::atom("B");
  const std::vector<Formula> minterms{
      Formula::conjunction(Formula::negation(a), Formula::negation(b)),
      Formula::conjunction(a, Formula::negation(b)),
      Formula::conjunction(Formula::negation(a), b),
      Formula::conjunction(a, b),
  };
  std::vector<Formula> out;
  for (unsigned table = 0; table < 16; ++table) {
    std::optional<Formula> f;
    for (unsigned row = 0; row < 4; ++row) {
      if (!(table >> row & 1U)) continue;
      f = f ? Formula::disjunction(*f, minterms[row]) : minterms[row];
    }
    out.push_back(f ? *f : Formula::conjunction(a, Formula::negation(a)));
  }
  return out;
}

Json explosion_sweep(int denominator) {
  const std::vector<std::string> atoms{"A", "B"};
  const auto bs = two_atom_truth_functions();
  std::uint64_t checked = 0;
  bool holds = true;
  for_each_grid_point(atoms, denominator, [&](const RationalDist& d) {
    for (const auto& b : bs) {
      ++checked;
      if (!check_explosion_irrelevance(d, b)) holds = false;
    }
    return true;
  });
  return {{"holds", holds}, {"checked", checked}};
}

class Recorder {
 public:
  void add(std::string claim, int criterion, Json inputs, Json expected, Json computed,
           Json detail = nullptr) {
    ReportRecord r{std::move(claim), criterion,   std::move(inputs), std::move(expected),
                   std::move(computed), Status::mismatch, std::move(detail)};
    r.status = r.expected == r.computed ? Status::match : Status::mismatch;
    records_.push_back(std::move(r));
  }
  std::vector<ReportRecord> take() { return std::move(records_); }

 private:
  std::vector<ReportRecord> records_;
};

void law_claims(Recorder& rec) {
  for (const auto& law : laws::inventory()) {
    const LawVerdict v = check_law(law);
    rec.add("laws.classical." + law.name(), 1,
            {{"law", law.name()}, {"connectives", connectives_json(law.connectives())}}, "valid",
            to_string(v.status), verdict_json(v));
  }
  const std::map<std::string, std::string> xor_expected{
      {"Dis.1", "valid"},   {"Dis.2", "invalid"}, {"Abs.1", "invalid"},
      {"Abs.2", "invalid"}, {"Ide.1", "invalid"}, {"Ide.2", "valid"},
  };
  for (const auto& law : laws::inventory(laws::exclusive_join)) {
    const LawVerdict v = check_law(law);
    // An invalid verdict only counts when it carries a usable witness.
    std::string computed{to_string(v.status)};
    if (!v.valid() && !v.counterexample) computed = "invalid without witness";
    rec.add("laws.xor." + law.name(), 2,
            {{"law", law.name()}, {"connectives", connectives_json(law.connectives())}},
            xor_expected.at(law.name()), computed, verdict_json(v));
  }
  for (int n = 1; n <= 12; ++n) {
    rec.add("xor.parity." + std::to_string(n), 3, {{"disjuncts", n}}, true, xor_parity(n));
  }
}

void option_claims(Recorder& rec, const Corpus& corpus) {
  const Prospect a1{{"A", 1}}, a2{{"A", 2}};
  const Prospect ab{{"A", 1}, {"B", 1}}, ac{{"A", 1}, {"C", 1}}, bc{{"B", 1}, {"C", 1}};
  const std::vector<std::pair<std::string, OptionSet>> expected{
      {"1a", {ab, ac}}, {"1b", {ab, ac}}, {"2a", {a1, bc}},   {"2b", {a2, ab, ac, bc}},
      {"5a", {a1, ab}}, {"5c", {a2, ab}}, {"6a", {a1}},       {"6c", {a2}},
  };
  for (const auto& [label, options] : expected) {
    const Formula& f = corpus.lookup(label);
    rec.add("appendix.options." + label, 4, {{"label", label}, {"formula", unparse(f)}},
            options_json(options), options_json(denote_options(f)));
  }
}

void judgment_claims(Recorder& rec, const Corpus& corpus) {
  const std::vector<std::pair<std::string, Category>> expected{
      {"1a", Category::acceptable},         {"1b", Category::acceptable},
      {"2a", Category::acceptable},         {"5a", Category::acceptable},
      {"5b", Category::acceptable},         {"6b", Category::acceptable},
      {"6a", Category::odd_hobson},         {"2b", Category::weird_double_image},
      {"2b'", Category::weird_double_image}, {"5c", Category::weird_double_image},
      {"5c'", Category::weird_double_image}, {"6c", Category::weird_double_image},
  };
  for (const auto& [label, category] : expected) {
    const Json j = judgment_json({label, corpus.lookup(label)});
    rec.add("judgment." + label, 5, {{"label", label}, {"formula", j["formula"]}},
            to_string(category), j["category"],
            {{"options", j["options"]}, {"double_images", j["double_images"]},
             {"hobson_nodes", j["hobson_nodes"]}});
  }
  const Formula iterable = parse("A:iterable and A:iterable");
  const Json j = judgment_json({"6c:iterable", iterable});
  rec.add("judgment.6c.iterable", 5, {{"formula", unparse(iterable)}},
          to_string(Category::acceptable), j["category"], {{"options", j["options"]}});
}

void divergence_claims(Recorder& rec, const Corpus& corpus) {
  // (6a, 6b) share the option set {A:1}; the pair differs only in judgment.
  const std::vector<std::tuple<std::string, std::string, bool>> pairs{
      {"1a", "1b", true}, {"2a", "2b", false}, {"5a", "5b", false},
      {"5a", "5c", false}, {"6a", "6b", true}, {"6c", "6b", false},
  };
  for (const auto& [l, r, options_agree] : pairs) {
    const Json p = pair_json({l, corpus.lookup(l)}, {r, corpus.lookup(r)});
    const std::string jl{to_string(judge(corpus.lookup(l)).category)};
    const std::string jr{to_string(judge(corpus.lookup(r)).category)};
    Json detail = Json::object();
    for (const char* key : {"boolean_witness", "option_witness"}) {
      if (p.contains(key)) detail[key] = p[key];
    }
    detail["judgments"] = {jl, jr};
    Json expected{{"boolean_equivalent", true}, {"option_equivalent", options_agree}};
    Json computed{{"boolean_equivalent", p["boolean_equivalent"]},
                  {"option_equivalent", p["option_equivalent"]}};
    if (l == "6a") {
      expected["same_judgment"] = false;
      computed["same_judgment"] = jl == jr;
    }
    rec.add("divergence." + l + "-" + r, 6, {{"left", l}, {"right", r}}, expected, computed,
            detail);
  }
}

Json suppression_detail(const ImplicatureReport& r) {
  Json out = Json::array();
  for (const auto& s : r.suppressed) {
    Json clashes = Json::array();
    for (const auto& c : s.clashes_with) clashes.push_back(c.to_string());
    out.push_back({{"constraint", s.constraint.to_string()}, {"clashes_with", clashes}});
  }
  return out;
}

void implicature_claims(Recorder& rec, const Corpus& corpus) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> suppressions{
      {"6a", {"notK(A)", "notK(not A)"}},
      {"5c", {"notK(A)", "notK(not A)"}},
      {"5a", {"notK(A)"}},
  };
  for (const auto& [label, targets] : suppressions) {
    const Formula& f = corpus.lookup(label);
    const ImplicatureReport r = project(f, ProjectionMode::gazdar_default);
    // A target counts when it was suppressed against at least one assertion.
    Json found = Json::array();
    for (const auto& target : targets) {
      for (const auto& s : r.suppressed) {
        if (s.constraint.to_string() != target) continue;
        const bool asserted_clash =
            std::any_of(s.clashes_with.begin(), s.clashes_with.end(),
                        [](const auto& c) { return c.provenance == Provenance::assertion; });
        if (asserted_clash) found.push_back(target);
      }
    }
    rec.add("implicature.suppression." + label, 7,
            {{"label", label}, {"formula", unparse(f)}, {"mode", "gazdar"}},
            {{"suppressed_against_assertion", targets}, {"accepted_consistent", true}},
            {{"suppressed_against_assertion", found},
             {"accepted_consistent", is_consistent(r.accepted)}},
            {{"suppressed", suppression_detail(r)}});
  }

  const Formula& dis = corpus.lookup("2b");
  const ImplicatureReport r = project(dis, ProjectionMode::gazdar_default);
  auto count = [&](Provenance p) {
    return std::count_if(r.accepted.begin(), r.accepted.end(),
                         [&](const auto& c) { return c.provenance == p; });
  };
  Json accepted = Json::array();
  for (const auto& c : r.accepted) accepted.push_back(c.to_string());
  rec.add("implicature.consistency.2b", 7,
          {{"label", "2b"}, {"formula", unparse(dis)}, {"mode", "gazdar"}},
          {{"assertion", 3},
           {"clausal", 8},
           {"scalar_weak", 2},
           {"scalar_strong", 2},
           {"suppressed", 0},
           {"accepted_consistent", true}},
          {{"assertion", count(Provenance::assertion)},
           {"clausal", count(Provenance::clausal)},
           {"scalar_weak", count(Provenance::scalar_weak)},
           {"scalar_strong", count(Provenance::scalar_strong)},
           {"suppressed", r.suppressed.size()},
           {"accepted_consistent", is_consistent(r.accepted)}},
          {{"accepted", accepted}});
}

std::string relation(std::size_t left, std::size_t right) {
  return left == right ? "=" : left > right ? ">" : "<";
}

void brevity_claims(Recorder& rec, const Corpus& corpus) {
  for (const auto& [l, r, expected] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"2b", "1b", "="}, {"5a", "5b", ">"}}) {
    const std::size_t ll = length_metric(corpus.lookup(l));
    const std::size_t rl = length_metric(corpus.lookup(r));
    rec.add("brevity." + l + "-" + r, 8, {{"left", l}, {"right", r}}, expected, relation(ll, rl),
            {{"left_length", ll}, {"right_length", rl}});
  }
  const auto [lhs, rhs] = instantiate(
      laws::dis1(),
      {{"X", Formula::atom("A")}, {"Y", Formula::atom("B")}, {"Z", Formula::atom("C")}});
  const std::size_t ll = length_metric(lhs);
  const std::size_t rl = length_metric(rhs);
  rec.add("brevity.dis1-instance", 8, {{"lhs", unparse(lhs)}, {"rhs", unparse(rhs)}}, ">",
          relation(rl, ll), {{"rhs_length", rl}, {"lhs_length", ll}});
}

void probability_claims(Recorder& rec) {
  for (int d : {2, 4, 6, 12}) {
    const SearchResult r = check_frege_theorem(d);
    rec.add("probability.frege.d" + std::to_string(d), 9,
            {{"denominator", d}, {"premises", "standard"}}, "no_counterexample",
            to_string(r.status), search_json(r));
  }
  const SearchResult dropped = check_frege_theorem(2, FregePremises::unbounded);
  rec.add("probability.frege.bounds-dropped", 9, {{"denominator", 2}, {"premises", "unbounded"}},
          "counterexample", to_string(dropped.status), search_json(dropped));

  const Formula a = Formula::atom("A");
  const Formula c = Formula::atom("C");
  const RationalDist certain_c({"A", "C"}, {0, 0, Rational(1, 2), Rational(1, 2)});
  rec.add("probability.frege.bounds-dropped.example", 9, {{"distribution", certain_c.to_string()}},
          {{"P(C|A)", "1"}, {"P(C)", "1"}},
          {{"P(C|A)", to_string(cond_prob(certain_c, c, a))}, {"P(C)", to_string(prob(certain_c, c))}});

  for (int d : {2, 4, 6, 12}) {
    const SearchResult r = check_disjunction_corollary(d);
    rec.add("probability.corollary.d" + std::to_string(d), 9, {{"denominator", d}},
            "no_counterexample", to_string(r.status), search_json(r));
  }
  const Formula b = Formula::atom("B");
  const RationalDist exclusive({"A", "B"}, {0, Rational(1, 2), Rational(1, 2), 0});
  rec.add("probability.corollary.extreme", 9, {{"distribution", exclusive.to_string()}},
          {{"P(B|A)", "0"}, {"P(B)", "1/2"}},
          {{"P(B|A)", to_string(cond_prob(exclusive, b, a))}, {"P(B)", to_string(prob(exclusive, b))}});

  const Json sweep = explosion_sweep(4);
  rec.add("probability.explosion.d4", 9,
          {{"atoms", {"A", "B"}}, {"denominator", 4}, {"b", "all 16 truth functions of A, B"}},
          true, sweep["holds"], {{"checked", sweep["checked"]}});

  const SearchResult ordering = check_relevance_ordering(4);
  Json detail = search_json(ordering);
  detail["equality_cases"] = ordering.equality_cases;
  detail["strict_cases"] = ordering.strict_cases;
  rec.add("probability.relevance-ordering.d4", 9, {{"atoms", {"A", "B", "H"}}, {"denominator", 4}},
          "no_counterexample", to_string(ordering.status), detail);
}

std::vector<ReportRecord> claims(const Corpus& corpus) {
  Recorder rec;
  law_claims(rec);
  option_claims(rec, corpus);
  judgment_claims(rec, corpus);
  divergence_claims(rec, corpus);
  implicature_claims(rec, corpus);
  brevity_claims(rec, corpus);
  probability_claims(rec);
  return rec.take();
}

std::string records_bytes(const std::vector<ReportRecord>& records) {
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  return arr.dump();
}

}  // namespace

Json cmd_laws(ConnectiveMap map) {
  Json out;
  out["command"] = "laws";
  out["connectives"] = connectives_json(map);
  Json rows = Json::array();
  for (const auto& law : laws::inventory(map)) {
    Json row;
    row["law"] = law.name();
    row["lhs"] = law.lhs().to_string();
    row["rhs"] = law.rhs().to_string();
    row.update(verdict_json(check_law(law)));
    rows.push_back(row);
  }
  out["laws"] = rows;
  return out;
}

Json cmd_denote(const NamedFormula& f) {
  const OptionSet options = denote_options(f.formula);
  return {{"command", "denote"},
          {"name", f.name},
          {"formula", unparse(f.formula)},
          {"disjunctions", disjunction_count(f.formula)},
          {"option_count", options.size()},
          {"options", options_json(options)}};
}

Json cmd_judge(const std::vector<NamedFormula>& items) {
  Json out;
  out["command"] = "judge";
  Json formulas = Json::array();
  for (const auto& f : items) formulas.push_back(judgment_json(f));
  out["formulas"] = formulas;
  Json pairs = Json::array();
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) pairs.push_back(pair_json(items[i], items[j]));
  }
  out["pairs"] = pairs;
  return out;
}

Json cmd_equiv(const NamedFormula& f, const NamedFormula& g) {
  Json out{{"command", "equiv"}};
  out.update(pair_json(f, g));
  return out;
}

Json cmd_implicatures(const NamedFormula& f, ProjectionMode mode, const std::set<int>& opinionated) {
  const ImplicatureReport r = project(f.formula, mode, opinionated);
  Json out;
  out["command"] = "implicatures";
  out["name"] = f.name;
  out["formula"] = unparse(f.formula);
  out["mode"] = to_string(mode);
  out["opinionated"] = opinionated;
  Json accepted = Json::array();
  for (const auto& c : r.accepted) accepted.push_back(constraint_json(c));
  out["accepted"] = accepted;
  Json suppressed = Json::array();
  for (const auto& s : r.suppressed) {
    Json row = constraint_json(s.constraint);
    Json clashes = Json::array();
    for (const auto& c : s.clashes_with) clashes.push_back(c.to_string());
    row["clashes_with"] = clashes;
    suppressed.push_back(row);
  }
  out["suppressed"] = suppressed;
  const Consistency c = consistent(r.accepted);
  out["belief_model"] = c.witness ? model_json(*c.witness) : Json(nullptr);
  return out;
}

Json cmd_prob(int denominator) {
  Json out;
  out["command"] = "prob";
  out["denominator"] = denominator;
  Json searches = Json::array();
  auto add = [&](const std::string& name, Json j) {
    Json row{{"search", name}};
    row.update(j);
    searches.push_back(row);
  };
  add("frege.standard", search_json(check_frege_theorem(denominator)));
  add("frege.weakened", search_json(check_frege_theorem(denominator, FregePremises::weakened)));
  add("frege.unbounded", search_json(check_frege_theorem(denominator, FregePremises::unbounded)));
  add("disjunction_corollary", search_json(check_disjunction_corollary(denominator)));
  add("explosion_irrelevance", explosion_sweep(denominator));
  if (denominator <= max_ordering_denominator) {
    const SearchResult r = check_relevance_ordering(denominator);
    Json j = search_json(r);
    j["equality_cases"] = r.equality_cases;
    j["strict_cases"] = r.strict_cases;
    add("relevance_ordering", j);
  } else {
    add("relevance_ordering",
        {{"status", "skipped"},
         {"reason", "denominator above " + std::to_string(max_ordering_denominator)}});
  }
  out["searches"] = searches;
  return out;
}

std::vector<ReportRecord> reproduce(const Corpus& corpus) {
  std::vector<ReportRecord> records = claims(corpus);
  // Determinism: an independent second pass must serialize identically.
  const bool identical = records_bytes(records) == records_bytes(claims(corpus));
  Recorder rec;
  rec.add("determinism.reproduce", 10, {{"passes", 2}}, "identical",
          identical ? "identical" : "differs");
  for (auto& r : rec.take()) records.push_back(std::move(r));
  return records;
}

bool all_match(const std::vector<ReportRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const ReportRecord& r) { return r.status == Status::match; });
}

Json reproduce_document(const std::vector<ReportRecord>& records) {
  std::map<int, std::pair<int, int>> per_criterion;  // criterion -> (match, mismatch)
  for (const auto& r : records) {
    auto& [ok, bad] = per_criterion[r.criterion];
    (r.status == Status::match ? ok : bad) += 1;
  }
  const auto matched = std::count_if(records.begin(), records.end(),
                                     [](const auto& r) { return r.status == Status::match; });
  Json out;
  out["command"] = "reproduce";
  out["summary"] = {{"records", records.size()},
                    {"match", matched},
                    {"mismatch", static_cast<std::ptrdiff_t>(records.size()) - matched}};
  Json criteria = Json::array();
  for (const auto& [criterion, counts] : per_criterion) {
    criteria.push_back({{"criterion", criterion},
                        {"status", counts.second == 0 ? "match" : "mismatch"},
                        {"records", counts.first + counts.second}});
  }
  out["criteria"] = criteria;
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(to_json(r));
  out["records"] = arr;
  return out;
}

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>().empty() ? "\"\"" : j.get<std::string>();
  if (j.is_null()) return "n/a";
  return j.dump();
}

bool is_flat_array(const Json& j) {
  return j.is_array() &&
         std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
}

std::string flat_array_text(const Json& j) {
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += scalar_text(j[i]);
  }
  return out + "]";
}

std::vector<std::string> text_lines(const Json& j);

void append_entry(std::vector<std::string>& out, const std::string& head, const Json& value) {
  if (!value.is_structured()) {
    out.push_back(head + " " + scalar_text(value));
  } else if (is_flat_array(value)) {
    out.push_back(head + " " + flat_array_text(value));
  } else if (value.empty()) {
    out.push_back(head + (value.is_array() ? " []" : " {}"));
  } else {
    out.push_back(head);
    for (const auto& line : text_lines(value)) out.push_back("  " + line);
  }
}

std::vector<std::string> text_lines(const Json& j) {
  std::vector<std::string> out;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) append_entry(out, key + ":", value);
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() && !item.empty()) {
        auto inner = text_lines(item);
        for (std::size_t i = 0; i < inner.size(); ++i) {
          out.push_back((i == 0 ? "- " : "  ") + inner[i]);
        }
      } else {
        append_entry(out, "-", item);
      }
    }
  } else {
    out.push_back(scalar_text(j));
  }
  return out;
}

}  // namespace

std::string render_text(const Json& doc) {
  std::string out;
  for (const auto& line : text_lines(doc)) out += line + "\n";
  return out;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace coordsem::report
