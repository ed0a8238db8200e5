#include <doctest.h>

#include "coordsem/corpus.hpp"
#include "coordsem/prospect.hpp"
#include "generators.hpp"

using namespace coordsem;

namespace {

// Oracle: option sets computed compositionally, never enumerating global
// coefficient assignments. and = pairwise sums, or = union.
OptionSet compositional_options(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::atom:
      return {Prospect::unit(f.atom().name)};
    case NodeKind::conjunction: {
      OptionSet out;
      for (const auto& l : compositional_options(f.left())) {
        for (const auto& r : compositional_options(f.right())) out.insert(l + r);
      }
      return out;
    }
    case NodeKind::disjunction: {
      OptionSet out = compositional_options(f.left());
      out.merge(compositional_options(f.right()));
      return out;
    }
    default:
      throw std::logic_error("oracle covers and/or only");
  }
}

OptionSet options(const char* label) { return denote_options(corpus_lookup(label)); }

}  // namespace

TEST_CASE("denote_one") {
  CHECK(denote_one(parse("A and A"), {}) == Prospect{{"A", 2}});
  CHECK(denote_one(parse("A and (A or B)"), {{0, true}}) == Prospect{{"A", 2}});
  CHECK(denote_one(parse("A and (A or B)"), {{0, false}}) == (Prospect{{"A", 1}, {"B", 1}}));
  CHECK_THROWS_AS(denote_one(parse("not A"), {}), UnsupportedConnective);
  CHECK_THROWS_AS(denote_one(parse("A xor B"), {{0, true}}), UnsupportedConnective);
  CHECK_THROWS_AS(denote_one(parse("A or B"), {}), std::invalid_argument);
}

TEST_CASE("denote_options on the corpus") {
  CHECK(options("5c") == OptionSet{Prospect{{"A", 2}}, Prospect{{"A", 1}, {"B", 1}}});
  CHECK(options("6a") == OptionSet{Prospect{{"A", 1}}});
  CHECK(options("2b") == OptionSet{Prospect{{"A", 2}}, Prospect{{"A", 1}, {"C", 1}},
                                   Prospect{{"A", 1}, {"B", 1}}, Prospect{{"B", 1}, {"C", 1}}});
  CHECK(options("1a") == OptionSet{Prospect{{"A", 1}, {"B", 1}}, Prospect{{"A", 1}, {"C", 1}}});
  CHECK(options("1b") == options("1a"));
  CHECK(options("2a") == OptionSet{Prospect{{"A", 1}}, Prospect{{"B", 1}, {"C", 1}}});
  CHECK(options("5a") == OptionSet{Prospect{{"A", 1}}, Prospect{{"A", 1}, {"B", 1}}});
  CHECK(options("6c") == OptionSet{Prospect{{"A", 2}}});
  CHECK(to_string(options("5c")) == "{{A:1, B:1}, {A:2}}");
}

TEST_CASE("option_equivalent") {
  OptionComparison same = option_equivalent(corpus_lookup("1a"), corpus_lookup("1b"));
  CHECK(same.equal);
  CHECK_FALSE(same.witness);

  OptionComparison dis = option_equivalent(corpus_lookup("2a"), corpus_lookup("2b"));
  CHECK_FALSE(dis.equal);
  REQUIRE(dis.witness);
  CHECK(*dis.witness == Prospect{{"A", 2}});

  OptionComparison abs = option_equivalent(corpus_lookup("5a"), corpus_lookup("5b"));
  CHECK_FALSE(abs.equal);
  REQUIRE(abs.witness);
  CHECK(*abs.witness == (Prospect{{"A", 1}, {"B", 1}}));
}

TEST_CASE("judge: corpus judgment table") {
  for (const char* label : {"1a", "1b", "2a", "5a", "5b", "6b"}) {
    CHECK_MESSAGE(judge(corpus_lookup(label)).category == Category::acceptable, label);
  }
  CHECK(judge(corpus_lookup("6a")).category == Category::odd_hobson);
  for (const char* label : {"2b", "2b'", "5c", "5c'", "6c"}) {
    CHECK_MESSAGE(judge(corpus_lookup(label)).category == Category::weird_double_image,
                  label);
  }
}

TEST_CASE("judge: diagnostics") {
  Judgment j = judge(corpus_lookup("2b"));
  REQUIRE(j.double_images.size() == 1);
  CHECK(j.double_images[0] == DoubleImage{Prospect{{"A", 2}}, "A", 2});
  CHECK(j.hobson_nodes.empty());

  Judgment hobson = judge(corpus_lookup("6a"));
  CHECK(hobson.hobson_nodes == std::vector<int>{0});
  CHECK(hobson.double_images.empty());

  Judgment talks = judge(parse("(talks:iterable) and (talks:iterable)"));
  CHECK(talks.category == Category::acceptable);
  CHECK(talks.options == OptionSet{Prospect{{"talks", 2}}});

  // Both defects: the double image wins.
  Judgment both = judge(parse("(A or A) and A"));
  CHECK(both.category == Category::weird_double_image);
  CHECK(both.hobson_nodes == std::vector<int>{0});

  // Hobson detection is semantic, not syntactic.
  Judgment semantic = judge(parse("(A and B) or (B and A)"));
  CHECK(semantic.category == Category::odd_hobson);
  Judgment nested = judge(parse("A or (A or A)"));
  CHECK(nested.category == Category::odd_hobson);
  CHECK(nested.hobson_nodes == std::vector<int>{0, 1});

  CHECK_THROWS_AS(judge(parse("A or not B")), UnsupportedConnective);
}

TEST_CASE("property: enumeration agrees with the compositional oracle") {
  for (const auto& label : Corpus::standard().labels()) {
    CHECK_MESSAGE(denote_options(corpus_lookup(label)) ==
                      compositional_options(corpus_lookup(label)),
                  label);
  }
  testing::FormulaGenerator gen(17, {{"A", "B", "C"}, 4});
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.next();
    CHECK_MESSAGE(denote_options(f) == compositional_options(f), unparse(f));
  }
}

TEST_CASE("property: algebraic laws of the option semantics") {
  const Formula a = Formula::atom("A");
  const Formula b = Formula::atom("B");
  const Formula c = Formula::atom("C");

  // Not idempotent for and; idempotent for or.
  CHECK(denote_options(Formula::conjunction(a, a)) != denote_options(a));
  CHECK(denote_options(Formula::disjunction(a, a)) == denote_options(a));

  CHECK(denote_options(parse("(A and B) and C")) == denote_options(parse("A and (B and C)")));

  std::vector<Formula> pool{a, b, c, parse("A or B"), parse("B and C"), parse("A and (A or C)")};
  for (const auto& x : pool) {
    for (const auto& y : pool) {
      for (const auto& z : pool) {
        CHECK(option_equivalent(
                  Formula::conjunction(x, Formula::disjunction(y, z)),
                  Formula::disjunction(Formula::conjunction(x, y), Formula::conjunction(x, z)))
                  .equal);
      }
    }
  }
}

TEST_CASE("property: commutation at any node preserves options") {
  testing::FormulaGenerator gen(23, {{"A", "B", "C"}, 4});
  for (int i = 0; i < 150; ++i) {
    Formula f = gen.next();
    const OptionSet base = denote_options(f);
    for_each_subformula(f, [&](const Formula& g, const std::string& path) {
      if (g.is_binary()) CHECK(denote_options(swap_children_at(f, path)) == base);
    });
  }
}

TEST_CASE("property: size bounds and or-free formulas") {
  testing::FormulaGenerator gen(29, {{"A", "B"}, 4});
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.next();
    const OptionSet opts = denote_options(f);
    CHECK(!opts.empty());
    CHECK(opts.size() <= (std::size_t{1} << disjunction_count(f)));
    for (const auto& p : opts) CHECK_FALSE(p.is_null());
  }
  // Or-free: one option, coefficients = occurrence counts.
  const OptionSet single = denote_options(parse("A and B and (A and C) and A"));
  CHECK(single == OptionSet{Prospect{{"A", 3}, {"B", 1}, {"C", 1}}});
  // Collisions shrink the set below 2^k.
  CHECK(denote_options(corpus_lookup("2b")).size() == 4);
  CHECK(denote_options(parse("(A or A) and (B or B)")).size() == 1);
}
