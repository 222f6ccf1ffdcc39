#include <string>
#include <vector>

#include "doctest.h"
#include "gjgf/errors.hpp"
#include "gjgf/problem_json.hpp"

using namespace gjgf;

namespace {

errc parse_code(const std::string& text, bool auto_reduce = false) {
  try {
    parse_problem_json(text, auto_reduce);
    return errc::bad_number;  // sentinel: nothing was thrown
  } catch (const Error& e) {
    return e.code();
  }
}

std::string parse_message(const std::string& text) {
  try {
    parse_problem_json(text);
    return {};
  } catch (const Error& e) {
    return e.what();
  }
}

}  // namespace

TEST_SUITE_BEGIN("problem_json");

TEST_CASE("minimal document parses to the expected problem") {
  Problem p = parse_problem_json(
      R"({"alphabet":["a","b"],
          "forbidden":[["a","b","b"],["b","a"]],
          "variant":"single"})");
  CHECK(p.alphabet.symbols() == std::vector<std::string>{"a", "b"});
  REQUIRE(p.forbidden.size() == 2);
  CHECK(p.forbidden.words()[0] == Word({0, 1, 1}));
  CHECK(p.forbidden.words()[1] == Word({1, 0}));
  CHECK(p.variant == Variant::Single);
  CHECK(p.mark == MarkPolicy::NegativeOne);
  CHECK(p.bindings.empty());
}

TEST_CASE("weights accept fractions and decimals in every group") {
  Problem p = parse_problem_json(
      R"({"alphabet":["a","b"],
          "forbidden":[],
          "variant":"double_if",
          "mark":"s",
          "weights":{
            "single":{"a":"0.75"},
            "pair":{"a,b":"1/3"},
            "final":{"b":"1/2"}}})");
  CHECK(p.mark == MarkPolicy::SMinusOne);
  CHECK(p.bindings.at(VariableName::single(0)) == Rational(3, 4));
  CHECK(p.bindings.at(VariableName::pair(0, 1)) == Rational(1, 3));
  CHECK(p.bindings.at(VariableName::final_letter(1)) == Rational(1, 2));
  // non-probability variants take arbitrary rational weights
  Problem q = parse_problem_json(
      R"({"alphabet":["a"],
          "variant":"triple",
          "weights":{"single":{"a":"3"},"triple":{"a,a,a":"-5/2"}}})");
  CHECK(q.bindings.at(VariableName::single(0)) == Rational(3));
  CHECK(q.bindings.at(VariableName::triple(0, 0, 0)) == Rational(-5, 2));
}

TEST_CASE("schema violations name the offending path") {
  CHECK(parse_code(R"(not json)") == errc::schema_error);
  CHECK(parse_code(R"([1,2])") == errc::schema_error);
  CHECK(parse_code(R"({"variant":"basic"})") == errc::schema_error);
  CHECK(parse_code(R"({"alphabet":["a"]})") == errc::schema_error);
  CHECK(parse_code(R"({"alphabet":["a"],"variant":"fancy"})") ==
        errc::schema_error);
  CHECK(parse_code(R"({"alphabet":["a"],"variant":"basic","mark":"minus"})") ==
        errc::schema_error);
  CHECK(parse_code(R"({"alphabet":["a"],"variant":"basic","extras":1})") ==
        errc::schema_error);
  CHECK(parse_code(R"({"alphabet":["a"],"variant":"basic","forbidden":1})") ==
        errc::schema_error);
  CHECK(parse_code(
            R"({"alphabet":["a"],"variant":"single",
                "weights":{"colour":{"a":"1"}}})") == errc::schema_error);
  CHECK(parse_code(
            R"({"alphabet":["a"],"variant":"double",
                "weights":{"pair":{"a":"1"}}})") == errc::schema_error);
  CHECK(parse_code(
            R"({"alphabet":["a"],"variant":"single",
                "weights":{"single":{"z":"1"}}})") == errc::schema_error);
  CHECK(parse_code(
            R"({"alphabet":["a"],"variant":"single",
                "weights":{"single":{"a":"one"}}})") == errc::schema_error);
  CHECK(parse_message(R"({"alphabet":["a"],"variant":"fancy"})")
            .find("variant") != std::string::npos);
  CHECK(parse_message(
            R"({"alphabet":["a"],"variant":"single",
                "weights":{"single":{"z":"1"}}})")
            .find("weights.single[\"z\"]") != std::string::npos);
}

TEST_CASE("word-level validation surfaces its own codes") {
  CHECK(parse_code(
            R"({"alphabet":["a"],"forbidden":[["a"]],"variant":"basic"})") ==
        errc::one_letter_forbidden_word);
  CHECK(parse_code(
            R"({"alphabet":["a","b"],
                "forbidden":[["a","b"],["a","b","b"]],
                "variant":"basic"})") == errc::not_reduced);
  Problem p = parse_problem_json(
      R"({"alphabet":["a","b"],
          "forbidden":[["a","b"],["a","b","b"]],
          "variant":"basic"})",
      true);
  REQUIRE(p.forbidden.size() == 1);
  CHECK(p.forbidden.words()[0] == Word({0, 1}));
  CHECK(parse_code(
            R"({"alphabet":["a"],"variant":"single",
                "weights":{"pair":{"a,a":"1"}}})") == errc::invalid_binding);
  CHECK(parse_code(
            R"({"alphabet":["a"],"variant":"prob_double",
                "weights":{"single":{"a":"7/5"}}})") == errc::invalid_binding);
}

TEST_CASE("render and parse invert each other") {
  Problem p = parse_problem_json(
      R"({"alphabet":["a","b","c"],
          "forbidden":[["c","a","b"],["b","b"]],
          "variant":"triple",
          "mark":"s",
          "weights":{
            "single":{"b":"2/7"},
            "pair":{"a,b":"1","c,c":"0"},
            "triple":{"a,b,c":"5"}}})");
  std::string rendered = render_problem_json(p);
  Problem q = parse_problem_json(rendered);
  CHECK(q.alphabet.symbols() == p.alphabet.symbols());
  CHECK(q.forbidden.words() == p.forbidden.words());
  CHECK(q.variant == p.variant);
  CHECK(q.mark == p.mark);
  CHECK(q.bindings == p.bindings);
  CHECK(render_problem_json(q) == rendered);
}

TEST_CASE("bare forbidden lists parse over a given alphabet") {
  Alphabet ab({"a", "b"});
  ForbiddenSet f = parse_forbidden_json(R"([["a","b"],["b","b"]])", ab);
  REQUIRE(f.size() == 2);
  CHECK(f.words()[0] == Word({0, 1}));
  CHECK_THROWS_AS(parse_forbidden_json(R"({"a":1})", ab), Error);
  CHECK_THROWS_AS(parse_forbidden_json(R"([["q"]])", ab), Error);
  ForbiddenSet reduced =
      parse_forbidden_json(R"([["a","b","a"],["a","b"]])", ab, true);
  REQUIRE(reduced.size() == 1);
  CHECK(reduced.words()[0] == Word({0, 1}));
}

TEST_CASE("result documents are byte deterministic") {
  std::vector<std::string> symbols{"a", "b"};
  Polynomial t = Polynomial::variable(VariableName::t());
  Polynomial xa = Polynomial::variable(VariableName::single(0));
  Polynomial xb = Polynomial::variable(VariableName::single(1));
  RationalFunction f(Polynomial::one() - t.pow(3) * xa * xb.pow(2),
                     Polynomial::one() + t * xa);
  std::string expected =
      "{\n"
      "  \"numerator\": \"-1*t^3*x_a*x_b^2 + 1\",\n"
      "  \"denominator\": \"1*t*x_a + 1\"\n"
      "}\n";
  CHECK(format_output(f, nullptr, symbols) == expected);
  CHECK(format_output(f, nullptr, symbols) == format_output(f, nullptr, symbols));
}

TEST_CASE("series and decimal renderings attach to the document") {
  std::vector<std::string> symbols{"a", "b"};
  Polynomial xa = Polynomial::variable(VariableName::single(0));
  Polynomial xb = Polynomial::variable(VariableName::single(1));
  SeriesPrefix series;
  series.coefficients = {Polynomial::one(), xa + xb,
                         Polynomial::constant(Rational(131, 400))};
  RationalFunction f = RationalFunction::from_polynomial(Polynomial::one());

  std::string plain = format_output(f, &series, symbols);
  CHECK(plain.find("\"series\": [") != std::string::npos);
  CHECK(plain.find("\"1*x_a + 1*x_b\"") != std::string::npos);
  CHECK(plain.find("series_decimal") == std::string::npos);

  std::string decimal = format_output(f, &series, symbols, 5);
  CHECK(decimal.find("\"series_decimal\": [") != std::string::npos);
  CHECK(decimal.find("\"0.32750\"") != std::string::npos);
  // non-constant coefficients keep their exact form in both arrays
  CHECK(decimal.rfind("\"1*x_a + 1*x_b\"") !=
        decimal.find("\"1*x_a + 1*x_b\""));
}

TEST_SUITE_END();
