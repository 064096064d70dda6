#include <doctest.h>

#include "oracles.hpp"
#include "qsphere/format.hpp"
#include "qsphere/relations.hpp"

using namespace qsphere;
using G = Generator;

namespace {

NCPolynomial rhs_of(const ReductionSystem& s, const char* lhs) {
  const Rule* r = s.rule_for(parse_word(lhs, s.n()));
  REQUIRE(r != nullptr);
  return r->rhs;
}

}  // namespace

TEST_SUITE("relations") {
  TEST_CASE("n = 1 has seven rules") {
    CHECK(oracle::descending_pairs(1) == 6);
    CHECK(ReductionSystem(1).rules().size() == oracle::descending_pairs(1) + 1);
  }

  TEST_CASE("rule count is 2n(4n-1) + 1") {
    for (unsigned n = 1; n <= 8; ++n) {
      CHECK(oracle::descending_pairs(n) == 2ull * n * (4 * n - 1));
      CHECK(ReductionSystem(n).rules().size() == 2ull * n * (4 * n - 1) + 1);
    }
  }

  TEST_CASE("n < 1 is rejected") { CHECK_THROWS_AS(ReductionSystem(0), std::invalid_argument); }

  TEST_CASE("x_i x_j -> q^-1 x_j x_i") {
    const ReductionSystem s(2);
    CHECK(rhs_of(s, "x1 x2") == NCPolynomial(q_power(-1), parse_word("x2 x1", 2)));
  }

  TEST_CASE("y_i x_i at i = 3 carries the (q^2-1) q^(i-k) tail") {
    const ReductionSystem s(3);
    const LaurentPoly q2m1 = q_power(2) - LaurentPoly(1);
    NCPolynomial expected(q_power(2), parse_word("x3 y3", 3));
    expected.add_term(parse_word("x1 y1", 3), q2m1 * q_power(2));
    expected.add_term(parse_word("x2 y2", 3), q2m1 * q_power(1));
    CHECK(rhs_of(s, "y3 x3") == expected);
    CHECK(s.classify(parse_word("y3 x3", 3)) == PairType{PairType::Tag::T3, 3});
  }

  TEST_CASE("sphere rule") {
    const ReductionSystem s1(1);
    NCPolynomial expected = NCPolynomial::constant(LaurentPoly(1));
    expected.add_term(parse_word("y1* y1", 1), LaurentPoly(-1));
    CHECK(rhs_of(s1, "x1* x1") == expected);

    const ReductionSystem s3(3);
    NCPolynomial sphere3 = NCPolynomial::constant(LaurentPoly(1));
    for (const char* w : {"x1* x1", "x2* x2", "y1* y1", "y2* y2", "y3* y3"}) {
      sphere3.add_term(parse_word(w, 3), LaurentPoly(-1));
    }
    CHECK(rhs_of(s3, "x3* x3") == sphere3);
    // x_i* x_i for i < n is not a lhs.
    CHECK(s3.rule_for(parse_word("x2* x2", 3)) == nullptr);
  }

  TEST_CASE("self-adjoint relations and their coefficients") {
    const ReductionSystem s(3);
    const LaurentPoly one_minus_q2 = LaurentPoly(1) - q_power(2);
    // y_2 y_2* -> y_2* y_2 + (1-q^2)(q^4 x2* x2 + sum_k xk* xk + y3* y3)
    NCPolynomial expected(parse_word("y2* y2", 3));
    expected.add_term(parse_word("x1* x1", 3), one_minus_q2);
    expected.add_term(parse_word("x2* x2", 3), one_minus_q2 * (q_power(4) + LaurentPoly(1)));
    expected.add_term(parse_word("x3* x3", 3), one_minus_q2);
    expected.add_term(parse_word("y3* y3", 3), one_minus_q2);
    CHECK(rhs_of(s, "y2 y2*") == expected);

    NCPolynomial x3x3s(parse_word("x3* x3", 3));
    x3x3s.add_term(parse_word("x1* x1", 3), one_minus_q2);
    x3x3s.add_term(parse_word("x2* x2", 3), one_minus_q2);
    CHECK(rhs_of(s, "x3 x3*") == x3x3s);

    // y_1 y_3* -> q y3* y1 - (q^2-1) q^(2n+2-1-3) x1* x3
    NCPolynomial y1y3s(q_power(1), parse_word("y3* y1", 3));
    y1y3s.add_term(parse_word("x1* x3", 3), -((q_power(2) - LaurentPoly(1)) * q_power(4)));
    CHECK(rhs_of(s, "y1 y3*") == y1y3s);
  }

  TEST_CASE("adjoint orientations used by the worked example") {
    const ReductionSystem s(3);
    CHECK(rhs_of(s, "y3 x1*") == NCPolynomial(q_power(1), parse_word("x1* y3", 3)));
    CHECK(rhs_of(s, "y2 x1*") == NCPolynomial(q_power(1), parse_word("x1* y2", 3)));
    // y_j x_i* for i > j: q x_i* y_j + (q^2-1) q^(i-j) x_j* y_i
    NCPolynomial expected(q_power(1), parse_word("x3* y1", 3));
    expected.add_term(parse_word("x1* y3", 3), (q_power(2) - LaurentPoly(1)) * q_power(2));
    CHECK(rhs_of(s, "y1 x3*") == expected);
  }

  TEST_CASE("rule_for") {
    const ReductionSystem s2(2);
    CHECK(s2.rule_for(parse_word("x1* y1", 2)) == nullptr);
    CHECK(s2.rule_for(parse_word("x2* x2", 2))->type == PairType{PairType::Tag::T2Sphere});
    const ReductionSystem s3(3);
    const Rule* r = s3.rule_for(parse_word("y2 x1*", 3));
    REQUIRE(r);
    CHECK(r->rhs == NCPolynomial(q_power(1), parse_word("x1* y2", 3)));
    CHECK_THROWS_AS(s3.rule_for(parse_word("y2", 3)), std::invalid_argument);
    CHECK_THROWS_AS(s3.rule_for(Word{G::y(4), G::x(1)}), std::invalid_argument);
  }

  TEST_CASE("classify") {
    using Tag = PairType::Tag;
    CHECK(ReductionSystem(1).classify(parse_word("y1 x1", 1)) == PairType{Tag::T3, 1});
    CHECK(ReductionSystem(2).classify(parse_word("x2* x2", 2)) == PairType{Tag::T2Sphere});
    const ReductionSystem s(3);
    CHECK(s.classify(parse_word("y3 x1*", 3)) == PairType{Tag::T1});
    CHECK(s.classify(parse_word("x2* y2*", 3)) == PairType{Tag::T3, 2});
    CHECK(s.classify(parse_word("x1* y3*", 3)) == PairType{Tag::T4});
    CHECK(s.classify(parse_word("y1 y3", 3)) == PairType{Tag::T5});
    CHECK(s.classify(parse_word("y3* y1*", 3)) == PairType{Tag::T5});
    CHECK(s.classify(parse_word("x1 x2", 3)) == PairType{Tag::T6});
    CHECK(s.classify(parse_word("x2* x1*", 3)) == PairType{Tag::T6});
    CHECK_THROWS_AS(s.classify(parse_word("x1 y1", 3)), std::invalid_argument);
    CHECK(PairType{Tag::T3, 2}.to_string() == "T3(2)");
  }

  TEST_CASE("star-closure, compatibility and lhs coverage") {
    for (unsigned n = 1; n <= 6; ++n) {
      const ReductionSystem s(n);
      const Word sphere{G::xs(n), G::x(n)};
      for (const auto& rule : s.rules()) {
        CAPTURE(rule.lhs.to_string());
        const Rule* adjoint = s.rule_for(rule.lhs.star());
        REQUIRE(adjoint);
        CHECK(adjoint->rhs == rule.rhs.star());
        for (const auto& [m, c] : rule.rhs.terms()) CHECK(less_than(m, rule.lhs, n));
        CHECK(rule.rhs.terms().count(Word()) == (rule.lhs == sphere ? 1u : 0u));
      }
      for (auto a : alphabet(n)) {
        for (auto b : alphabet(n)) {
          bool expected = list_position(a, n) > list_position(b, n) || Word{a, b} == sphere;
          CHECK((s.rule_for(a, b) != nullptr) == expected);
        }
      }
    }
  }

  TEST_CASE("rules are ordered by lhs list positions") {
    const ReductionSystem s(3);
    for (std::size_t k = 1; k < s.rules().size(); ++k) {
      const auto& prev = s.rules()[k - 1].lhs;
      const auto& cur = s.rules()[k].lhs;
      CHECK(std::pair(list_position(prev[0], 3), list_position(prev[1], 3)) <
            std::pair(list_position(cur[0], 3), list_position(cur[1], 3)));
    }
  }

  TEST_CASE("rendering") {
    const ReductionSystem s(1);
    CHECK(rule_text(*s.rule_for(parse_word("x1* x1", 1))) == "x1* x1 -> 1 - y1* y1");
    CHECK(rule_text(*s.rule_for(parse_word("y1 y1*", 1))) == "y1 y1* -> y1* y1 + (-q^4 + 1)·x1* x1");
    auto j = rules_json(ReductionSystem(2));
    CHECK(j["n"] == 2);
    CHECK(j["count"] == 29);
    CHECK(j["rules"].size() == 29);
    CHECK(to_json(*ReductionSystem(2).rule_for(parse_word("y2 x2", 2))).dump() ==
          R"j({"lhs":["y2","x2"],"rhs":[{"coeff":[[2,1]],"monomial":["x2","y2"]},)j"
          R"j({"coeff":[[3,1],[1,-1]],"monomial":["x1","y1"]}],"type":"T3(2)"})j");
  }
}
