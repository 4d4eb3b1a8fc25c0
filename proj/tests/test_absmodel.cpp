#include <map>
#include <sstream>

#include "doctest.h"
#include "relalg/absmodel.hpp"

using namespace relalg;

namespace {

std::string fixture(const std::string& name) { return std::string(RELALG_FIXTURES) + "/" + name; }

// Chain ⊥ < a < 𝕀 < ⊤, all elements self-converse. Only the products of a and
// ⊤ are given; the rest follow from the unit and zero laws.
std::string chain_model(const std::string& aa, const std::string& at, const std::string& ta, const std::string& tt) {
  std::map<std::pair<std::string, std::string>, std::string> prod = {
      {{"a", "a"}, aa}, {{"a", "top"}, at}, {{"top", "a"}, ta}, {{"top", "top"}, tt}};
  const std::vector<std::string> el = {"bottom", "a", "id", "top"};
  std::ostringstream out;
  out << R"({"elements": ["bottom", "a", "id", "top"], "leq": [)";
  for (std::size_t i = 0; i < 4; ++i) {
    out << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < 4; ++j) out << (j ? ", " : "") << (i <= j ? "true" : "false");
    out << "]";
  }
  out << R"(], "compose": [)";
  for (std::size_t i = 0; i < 4; ++i) {
    out << (i ? ", " : "") << "[";
    for (std::size_t j = 0; j < 4; ++j) {
      std::string v;
      if (el[i] == "bottom" || el[j] == "bottom") {
        v = "bottom";
      } else if (el[i] == "id") {
        v = el[j];
      } else if (el[j] == "id") {
        v = el[i];
      } else {
        v = prod.at({el[i], el[j]});
      }
      out << (j ? ", " : "") << '"' << v << '"';
    }
    out << "]";
  }
  out << R"(], "converse": ["bottom", "a", "id", "top"], "identity": "id", "top": "top", "bottom": "bottom"})";
  return out.str();
}

ModelErrorKind error_kind(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ModelError& e) {
    return e.kind();
  }
  FAIL("model was accepted");
  return ModelErrorKind::Shape;
}

}  // namespace

TEST_SUITE("absmodel") {

TEST_CASE("bundled models load with their expected element counts") {
  const std::map<std::string, std::size_t> sizes = {{"one_element", 1},        {"two_element", 2},
                                                    {"three_element", 3},      {"three_element_id_top", 3},
                                                    {"four_element_point", 4}, {"desharnais13", 13}};
  const auto models = bundled_models();
  CHECK(models.size() == sizes.size());
  for (const auto& b : models) {
    REQUIRE(sizes.count(b.name));
    CHECK(b.model.size() == sizes.at(b.name));
  }
  const auto& one = bundled_model("one_element").model;
  CHECK(one.identity == one.top);
  CHECK(one.bottom == one.top);
  CHECK_THROWS_AS(bundled_model("missing"), std::out_of_range);
}

TEST_CASE("bundled fixtures on disk equal the embedded copies") {
  for (const auto& b : bundled_models()) {
    const auto m = load_model(fixture(b.name + ".json"));
    CHECK(m.elements == b.model.elements);
    CHECK(m.compose == b.model.compose);
    CHECK(m.converse == b.model.converse);
  }
}

TEST_CASE("axiom reports match expectations and counterexamples reproduce") {
  for (const auto& b : bundled_models()) {
    const auto rep = check_axioms(b.model);
    for (Axiom a : kAllAxioms) {
      const auto& r = rep.get(a);
      CAPTURE(b.name);
      CAPTURE(axiom_name(a));
      if (const auto want = b.expected.get(a)) CHECK(r.holds == *want);
      CHECK(r.holds == r.counterexample.empty());
      if (!r.holds) CHECK(reproduces(b.model, a, r.counterexample));
    }
    CHECK(rep.dedekind.holds);
  }
}

TEST_CASE("named independence results") {
  const auto three = check_axioms(bundled_model("three_element").model);
  CHECK(three.cone.holds);
  CHECK(three.extensional.holds);
  CHECK_FALSE(three.choice.holds);
  CHECK(three.choice.counterexample == std::vector<std::string>{"top"});
  CHECK_FALSE(three.all_or_nothing.holds);
  CHECK(three.universal_choice.holds);

  const auto four = check_axioms(bundled_model("four_element_point").model);
  CHECK(four.all_or_nothing.holds);
  CHECK_FALSE(four.choice.holds);
  CHECK_FALSE(four.cone.holds);
  CHECK_FALSE(four.extensional.holds);

  const auto d13 = check_axioms(bundled_model("desharnais13").model);
  CHECK(d13.cone.holds);
  CHECK(d13.all_or_nothing.holds);
  CHECK_FALSE(d13.choice.holds);
  CHECK(d13.choice.counterexample == std::vector<std::string>{"E"});

  for (const char* name : {"one_element", "two_element"}) {
    const auto rep = check_axioms(bundled_model(name).model);
    CHECK(rep.cone.holds);
    CHECK(rep.choice.holds);
    CHECK(rep.all_or_nothing.holds);
    CHECK(rep.extensional.holds);
  }
}

TEST_CASE("reproduces rejects tuples that do not violate") {
  const auto& m = bundled_model("three_element").model;
  CHECK_FALSE(reproduces(m, Axiom::Choice, {"id"}));
  CHECK_FALSE(reproduces(m, Axiom::Choice, {"nope"}));
  CHECK_FALSE(reproduces(m, Axiom::Cone, {"top"}));
}

TEST_CASE("points of the bundled models") {
  const auto& d13 = bundled_model("desharnais13").model;
  const auto pts = model_points(d13);
  REQUIRE(pts.size() == 1);
  CHECK(d13.name(pts[0]) == "a");
  CHECK(model_points(bundled_model("three_element").model) == std::vector<std::size_t>{1});
  CHECK(model_points(bundled_model("one_element").model).empty());
}

TEST_CASE("each structural failure has its own diagnostic") {
  CHECK_NOTHROW(parse_model(chain_model("a", "a", "a", "top")));
  CHECK(error_kind(chain_model("top", "a", "a", "a")) == ModelErrorKind::Monoid);
  CHECK(error_kind(chain_model("a", "a", "a", "a")) == ModelErrorKind::Distributivity);
  CHECK(error_kind("{\"elements\": []}") == ModelErrorKind::Shape);
  CHECK(error_kind("not json") == ModelErrorKind::Shape);

  auto lattice = chain_model("a", "a", "a", "top");
  const std::string row = "[false, true, true, true]";
  const auto at = lattice.find(row);
  REQUIRE(at != std::string::npos);
  lattice.replace(at, row.size(), "[true, true, true, true]");  // a ≤ ⊥ as well: not antisymmetric
  CHECK(error_kind(lattice) == ModelErrorKind::Lattice);
}

TEST_CASE("associativity failure names the triple") {
  try {
    parse_model(chain_model("top", "a", "a", "a"));
    FAIL("accepted");
  } catch (const ModelError& e) {
    CHECK(std::string(e.what()).find("associative") != std::string::npos);
    CHECK(e.tuple().size() == 3);
  }
}

TEST_CASE("corrupted fixture fails in the converse category only") {
  try {
    load_model(fixture("corrupted_model.json"));
    FAIL("accepted");
  } catch (const ModelError& e) {
    CHECK(e.kind() == ModelErrorKind::Converse);
    CHECK(e.tuple() == std::vector<std::string>{"id", "top"});
  }
}

TEST_CASE("model json round-trips") {
  for (const auto& b : bundled_models()) {
    const auto again = parse_model(model_to_json(b.model));
    CHECK(again.elements == b.model.elements);
    CHECK(again.leq == b.model.leq);
    CHECK(again.compose == b.model.compose);
    CHECK(again.converse == b.model.converse);
    CHECK(again.identity == b.model.identity);
  }
}

TEST_CASE("product models fail the cone rule but are valid algebras") {
  const auto& two = bundled_model("two_element").model;
  const auto& three = bundled_model("three_element").model;
  for (const auto* other : {&two, &three}) {
    const auto p = product(two, *other);
    CHECK(p.size() == two.size() * other->size());
    const auto rep = check_axioms(p);
    CHECK_FALSE(rep.cone.holds);
    CHECK(reproduces(p, Axiom::Cone, rep.cone.counterexample));
    CHECK(rep.dedekind.holds);
  }
}

TEST_CASE("join and meet are derived from the order") {
  const auto& d13 = bundled_model("desharnais13").model;
  for (std::size_t x = 0; x < d13.size(); ++x) {
    for (std::size_t y = 0; y < d13.size(); ++y) {
      const auto j = d13.join(x, y), m = d13.meet(x, y);
      CHECK(d13.le(x, j));
      CHECK(d13.le(y, j));
      CHECK(d13.le(m, x));
      CHECK(d13.le(m, y));
    }
  }
  CHECK(d13.join(d13.index_of("a.top"), d13.index_of("id")) == d13.index_of("a.top|id"));
}

}  // TEST_SUITE
