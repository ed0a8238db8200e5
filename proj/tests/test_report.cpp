#include <doctest.h>

#include <set>

#include "coordsem/report.hpp"

using namespace coordsem;
using namespace coordsem::report;

namespace {

const ReportRecord* find(const std::vector<ReportRecord>& records, const std::string& claim) {
  for (const auto& r : records) {
    if (r.claim == claim) return &r;
  }
  return nullptr;
}

// Scalar leaves in document order, spelled the way the text renderer
// spells them.
void leaves(const Json& j, std::vector<std::string>& out) {
  if (j.is_structured()) {
    for (const auto& [key, value] : j.items()) {
      if (j.is_object()) out.push_back(key);
      leaves(value, out);
    }
  } else if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else if (!j.is_null()) {
    out.push_back(j.dump());
  }
}

}  // namespace

TEST_CASE("reproduce on the standard corpus") {
  const auto records = reproduce(Corpus::standard());
  CHECK(all_match(records));
  std::set<int> criteria;
  std::set<std::string> claims;
  for (const auto& r : records) {
    criteria.insert(r.criterion);
    claims.insert(r.claim);
    CHECK_MESSAGE(r.status == Status::match, r.claim);
    CHECK((r.status == Status::match) == (r.expected == r.computed));
  }
  CHECK(criteria == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(claims.size() == records.size());

  const Json doc = reproduce_document(records);
  CHECK(doc["criteria"].size() == 10);
  CHECK(doc["summary"]["mismatch"] == 0);
}

TEST_CASE("tampering with the corpus is caught") {
  Corpus tampered = Corpus::standard();
  tampered.set("2b", corpus_lookup("1b"));
  const auto records = reproduce(tampered);
  CHECK_FALSE(all_match(records));
  const ReportRecord* r = find(records, "appendix.options.2b");
  REQUIRE(r != nullptr);
  CHECK(r->status == Status::mismatch);
  CHECK(find(records, "appendix.options.1b")->status == Status::match);
}

TEST_CASE("renderings are deterministic and carry the same data") {
  const Json doc = reproduce_document(reproduce(Corpus::standard()));
  const Json again = reproduce_document(reproduce(Corpus::standard()));
  CHECK(render_json(doc) == render_json(again));
  CHECK(render_text(doc) == render_text(again));
  CHECK(Json::parse(render_json(doc)) == doc);

  for (const Json& d : {doc, cmd_laws(laws::exclusive_join),
                        cmd_implicatures(resolve(Corpus::standard(), "5c"),
                                         ProjectionMode::gazdar_default),
                        cmd_prob(4)}) {
    const std::string text = render_text(d);
    std::vector<std::string> expected;
    leaves(d, expected);
    std::size_t at = 0;
    for (const auto& leaf : expected) {
      const std::size_t hit = text.find(leaf, at);
      REQUIRE_MESSAGE(hit != std::string::npos, leaf);
      at = hit + leaf.size();
    }
  }
}

TEST_CASE("text rendering layout") {
  const Json doc{{"a", 1}, {"b", Json::array({"x", "y"})}, {"c", {{"d", ""}}},
                 {"e", Json::array({Json{{"f", true}, {"g", nullptr}}})}};
  CHECK(render_text(doc) == "a: 1\nb: [x, y]\nc:\n  d: \"\"\ne:\n  - f: true\n    g: n/a\n");
}

TEST_CASE("judge command") {
  const Corpus& c = Corpus::standard();
  const Json j = cmd_judge({resolve(c, "5a"), resolve(c, "5b"), resolve(c, "A or A")});
  REQUIRE(j["formulas"].size() == 3);
  CHECK(j["formulas"][2]["category"] == "odd_hobson");
  REQUIRE(j["pairs"].size() == 3);
  const Json& p = j["pairs"][0];
  CHECK(p["boolean_equivalent"] == true);
  CHECK(p["option_equivalent"] == false);
  CHECK(p["option_witness"] == "{A:1, B:1}");
}

TEST_CASE("equiv command tolerates formulas outside the option fragment") {
  const Json j = cmd_equiv(resolve(Corpus::standard(), "not not A"),
                           resolve(Corpus::standard(), "A"));
  CHECK(j["boolean_equivalent"] == true);
  CHECK(j["option_equivalent"].is_null());
}

TEST_CASE("resolve") {
  CHECK(resolve(Corpus::standard(), "2b").name == "2b");
  CHECK(unparse(resolve(Corpus::standard(), "2b").formula) == "(A or B) and (A or C)");
  CHECK(unparse(resolve(Corpus::standard(), "B or A").formula) == "B or A");
  CHECK_THROWS_AS(resolve(Corpus::standard(), "2z"), ParseError);
}

TEST_CASE("prob command skips the ordering search above its limit") {
  const Json j = cmd_prob(9);
  CHECK(j["searches"].back()["status"] == "skipped");
  CHECK(cmd_prob(4)["searches"][2]["status"] == "counterexample");
}
