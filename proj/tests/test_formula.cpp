#include <doctest.h>

#include <numeric>

#include "coordsem/corpus.hpp"
#include "coordsem/formula.hpp"
#include "coordsem/law.hpp"
#include "generators.hpp"

using namespace coordsem;

namespace {

Formula atom(const char* name) { return Formula::atom(name); }

}  // namespace

TEST_CASE("parse: grouping and coefficient ids") {
  Formula f = parse("A and (B or C)");
  REQUIRE(f.kind() == NodeKind::conjunction);
  CHECK(f.left() == atom("A"));
  REQUIRE(f.right().kind() == NodeKind::disjunction);
  CHECK(f.right().coeff_id() == 0);
  CHECK(f == Formula::conjunction(atom("A"), Formula::disjunction(atom("B"), atom("C"))));

  Formula twice = parse("A or A");
  REQUIRE(twice.kind() == NodeKind::disjunction);
  CHECK(twice.left() == atom("A"));
  CHECK(twice.right() == atom("A"));
  CHECK(twice.coeff_id() == 0);

  Formula dis = parse("(A or B) and (A or C)");
  CHECK(dis.left().coeff_id() == 0);
  CHECK(dis.right().coeff_id() == 1);
  CHECK(unparse(dis.left()) == "A or B");
  CHECK(unparse(dis.right()) == "A or C");
}

TEST_CASE("parse: precedence and right association") {
  CHECK(parse("A or B and C") == parse("A or (B and C)"));
  CHECK(parse("A and B and C") == parse("A and (B and C)"));
  CHECK(parse("A or B or C") == parse("A or (B or C)"));
  CHECK(parse("not A and B") == parse("(not A) and B"));
  CHECK(parse("A xor B xor C") == parse("A xor (B xor C)"));
  CHECK(parse("A and B xor C") == parse("(A and B) xor C"));

  // The outer `or` is textually first, so it takes id 0.
  Formula chain = parse("A or B or C");
  CHECK(chain.coeff_id() == 0);
  CHECK(chain.right().coeff_id() == 1);
  Formula nested = parse("(A or B) or C");
  CHECK(nested.left().coeff_id() == 0);
  CHECK(nested.coeff_id() == 1);
}

TEST_CASE("parse: aspects") {
  Formula f = parse("talks:iterable and talks");
  for (const Atom& a : atoms(f)) CHECK(a.aspect == Aspect::iterable);
  CHECK(unparse(f) == "talks:iterable and talks:iterable");
  CHECK(atoms(parse("A:stative or B"))[0].aspect == Aspect::stative);
  CHECK_THROWS_AS(parse("A:stative and A:iterable"), ParseError);
  CHECK_THROWS_AS(Formula::conjunction(Formula::atom("A", Aspect::iterable), atom("A")),
                  AspectConflict);
}

TEST_CASE("parse: syntax errors carry positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("expected a parse error for ", text);
    return 0;
  };
  CHECK(position_of("A and") == 5);
  CHECK(position_of("A and )") == 6);
  CHECK(position_of("(A or B") == 7);
  CHECK(position_of("A & B") == 2);
  CHECK(position_of("A B") == 2);
  CHECK(position_of("") == 0);
  CHECK(position_of("A:modal") == 2);
  CHECK(position_of("and") == 0);
}

TEST_CASE("unparse: minimal parentheses") {
  CHECK(unparse(parse("((A))")) == "A");
  CHECK(unparse(parse("(A and B) or (A and C)")) == "A and B or A and C");
  CHECK(unparse(parse("(A or B) and (A or C)")) == "(A or B) and (A or C)");
  CHECK(unparse(parse("(A and B) and C")) == "(A and B) and C");
  CHECK(unparse(parse("A and (B and C)")) == "A and B and C");
  CHECK(unparse(parse("not (A or B)")) == "not (A or B)");
  CHECK(unparse(parse("not not A")) == "not not A");
  CHECK(unparse(parse("(A xor B) or C")) == "(A xor B) or C");
}

TEST_CASE("property: parse . unparse is the identity on parsed formulas") {
  for (const auto& label : Corpus::standard().labels()) {
    const Formula& f = corpus_lookup(label);
    CHECK_MESSAGE(parse(unparse(f)) == f, label);
  }
  testing::FormulaGenerator gen(7, {{"A", "B", "C", "D"}, 5, true, true});
  for (int i = 0; i < 500; ++i) {
    Formula f = gen.next();
    Formula g = parse(unparse(f));
    REQUIRE_MESSAGE(g == f, unparse(f));
    CHECK(parse(unparse(g)) == g);
  }
}

TEST_CASE("property: coefficient ids are exactly 0..k-1") {
  testing::FormulaGenerator gen(11, {{"A", "B"}, 5, true, true});
  for (int i = 0; i < 300; ++i) {
    Formula f = parse(unparse(gen.next()));
    std::vector<int> expected(disjunction_count(f));
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(coeff_ids(f) == expected);
  }
}

TEST_CASE("corpus") {
  CHECK(corpus_lookup("1b") == parse("(A and B) or (A and C)"));
  CHECK(corpus_lookup("5a") == parse("A or (A and B)"));
  CHECK(corpus_lookup("6c") == parse("A and A"));
  CHECK(corpus_lookup("2a") == parse("A or (B and C)"));
  CHECK(corpus_lookup("5c'") == parse("A and (B or A)"));
  CHECK(Corpus::standard().labels().size() == 16);
  CHECK_THROWS_AS(corpus_lookup("7a"), UnknownLabel);

  // Primed variants differ from their originals by one or-node swap.
  CHECK(swap_children_at(corpus_lookup("2b"), "1") == corpus_lookup("2b'"));
  CHECK(swap_children_at(corpus_lookup("5c"), "1") == corpus_lookup("5c'"));
  CHECK_FALSE(corpus_lookup("2b") == corpus_lookup("2b'"));

  Corpus tampered = Corpus::standard();
  tampered.set("2b", corpus_lookup("1b"));
  CHECK(tampered.lookup("2b") == corpus_lookup("1b"));
  CHECK(corpus_lookup("2b") == parse("(A or B) and (A or C)"));
}

TEST_CASE("length metric") {
  CHECK(length_metric(atom("A")) == 1);
  CHECK(length_metric(corpus_lookup("2b")) == 7);
  CHECK(length_metric(corpus_lookup("2b")) == length_metric(corpus_lookup("1b")));
  CHECK(length_metric(parse("not (A or B)")) == 4);
  CHECK(length_metric(parse("talks:iterable and talks")) == 3);

  testing::FormulaGenerator gen(3, {{"A", "B", "C"}, 4, true, true});
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.next();
    CHECK(length_metric(f) == node_count(f));
  }
}

TEST_CASE("instantiate") {
  const Binding abc{{"X", atom("A")}, {"Y", atom("B")}, {"Z", atom("C")}};

  auto [lhs, rhs] = instantiate(laws::dis2(), abc);
  CHECK(lhs == parse("A or (B and C)"));
  CHECK(rhs == parse("(A or B) and (A or C)"));

  auto [l1, r1] = instantiate(laws::dis1(), {{"X", atom("A")}, {"Y", atom("B")}, {"Z", atom("A")}});
  CHECK(l1 == corpus_lookup("5c'"));
  CHECK(r1 == parse("(A and B) or (A and A)"));

  auto [l2, r2] = instantiate(laws::ide2(), {{"X", atom("A")}});
  CHECK(l2 == parse("A and A"));
  CHECK(r2 == atom("A"));

  auto [lx, rx] = instantiate(laws::dis2().with_connectives(laws::exclusive_join), abc);
  CHECK(unparse(lx) == "A xor B and C");
  CHECK(unparse(rx) == "(A xor B) and (A xor C)");

  CHECK_THROWS_AS(instantiate(laws::dis1(), {{"X", atom("A")}, {"Y", atom("B")}}),
                  UnboundMetavariable);
}

TEST_CASE("instantiate renumbers disjunctions left to right") {
  auto [lhs, rhs] = instantiate(
      laws::dis2(), {{"X", parse("A or B")}, {"Y", atom("C")}, {"Z", parse("C or A")}});
  CHECK(coeff_ids(lhs) == std::vector<int>{0, 1, 2});
  CHECK(lhs == parse("(A or B) or (C and (C or A))"));
  CHECK(coeff_ids(rhs) == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("law schemas reject unrelated metavariable sets") {
  CHECK_THROWS_AS(LawSchema("bad", Template::meta("X"), Template::meta("Y")),
                  std::invalid_argument);
  CHECK(laws::abs1().metavariables() == std::set<std::string>{"X", "Y"});
  CHECK(laws::dis1().metavariables() == std::set<std::string>{"X", "Y", "Z"});
}
