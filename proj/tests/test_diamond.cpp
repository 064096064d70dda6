#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "qsphere/diamond.hpp"
#include "qsphere/format.hpp"

using namespace qsphere;

TEST_SUITE("diamond") {
  TEST_CASE("closed-form count") {
    const std::uint64_t table[] = {8, 64, 232, 576, 1160, 2048, 3304, 4992};
    for (unsigned n = 1; n <= 8; ++n) {
      CHECK(ambiguity_count(n) == table[n - 1]);
      CHECK(ambiguity_count(n) == oracle::binomial(4 * n, 3) + 4 * n);
    }
  }

  TEST_CASE("n = 1 enumeration matches brute force") {
    const ReductionSystem s(1);
    const auto found = enumerate_ambiguities(s);
    const auto expected = oracle::ambiguity_words(1);
    REQUIRE(found.size() == 8);
    REQUIRE(expected.size() == 8);
    for (std::size_t k = 0; k < found.size(); ++k) CHECK(oracle::names(found[k].word()) == expected[k]);
    std::vector<std::string> rendered;
    for (const auto& a : found) rendered.push_back(a.word().to_string());
    for (const char* w : {"x1 x1* y1*", "y1 x1* y1*", "y1 x1 y1*", "y1 x1 x1*", "x1 x1* x1", "y1 x1* x1",
                          "x1* x1 y1*", "x1* x1 x1*"}) {
      CHECK(std::find(rendered.begin(), rendered.end(), w) != rendered.end());
    }
  }

  TEST_CASE("enumeration agrees with brute force and is ordered, n = 1..5") {
    for (unsigned n = 1; n <= 5; ++n) {
      const ReductionSystem s(n);
      const auto found = enumerate_ambiguities(s);
      const auto expected = oracle::ambiguity_words(n);
      REQUIRE(found.size() == expected.size());
      for (std::size_t k = 0; k < found.size(); ++k) {
        CHECK(oracle::names(found[k].word()) == expected[k]);
        CHECK(found[k].sigma->lhs == Word{found[k].a, found[k].b});
        CHECK(found[k].tau->lhs == Word{found[k].b, found[k].c});
      }
    }
  }

  TEST_CASE("resolving y1 x1 x1* at n = 1") {
    const ReductionSystem s(1);
    const auto all = enumerate_ambiguities(s);
    auto it = std::find_if(all.begin(), all.end(), [](const Ambiguity& a) { return a.word().to_string() == "y1 x1 x1*"; });
    REQUIRE(it != all.end());
    const auto r = check_ambiguity(*it, s);
    // Hand computation: both branches end at q^4 y1 - q^4 y1* y1 y1.
    NCPolynomial expected(q_power(4), parse_word("y1", 1));
    expected.add_term(parse_word("y1* y1 y1", 1), -q_power(4));
    CHECK(r.resolvable);
    CHECK(r.left_nf == expected);
    CHECK(r.right_nf == expected);
    CHECK(r.steps_left > 0);
    CHECK(r.steps_right > 0);
  }

  TEST_CASE("branches contain only basis monomials") {
    const ReductionSystem s(2);
    for (const auto& amb : enumerate_ambiguities(s)) {
      const auto r = check_ambiguity(amb, s);
      for (const auto& [w, c] : r.left_nf.terms()) CHECK(is_basis_monomial(w, 2));
      for (const auto& [w, c] : r.right_nf.terms()) CHECK(is_basis_monomial(w, 2));
    }
  }

  TEST_CASE("check_all at n = 1 and n = 2") {
    for (unsigned n = 1; n <= 2; ++n) {
      const auto report = check_all(ReductionSystem(n));
      CHECK(report.n == n);
      CHECK(report.total == ambiguity_count(n));
      CHECK(report.checked == report.total);
      CHECK(report.resolved == report.total);
      CHECK(report.unresolved.empty());
      CHECK_FALSE(report.error);
      CHECK(report.all_resolved());
    }
  }

  TEST_CASE("star duality of verdicts") {
    for (unsigned n = 2; n <= 3; ++n) {
      const ReductionSystem s(n);
      const auto all = enumerate_ambiguities(s);
      std::map<Word, bool> verdicts;
      for (const auto& amb : all) verdicts[amb.word()] = check_ambiguity(amb, s).resolvable;
      for (const auto& amb : all) {
        auto dual = verdicts.find(amb.word().star());
        REQUIRE(dual != verdicts.end());
        CHECK(dual->second == verdicts[amb.word()]);
      }
    }
  }

  TEST_CASE("report does not depend on the number of jobs") {
    const ReductionSystem s(3);
    const auto one = report_json(check_all(s, {1}), false);
    const auto four = report_json(check_all(s, {4}), false);
    CHECK(one == four);
    CHECK_FALSE(one.contains("elapsed_ms"));
    CHECK(report_json(check_all(s, {2})).contains("elapsed_ms"));
  }

  TEST_CASE("step limit aborts with a partial report") {
    const ReductionSystem s(2);
    CheckOptions options;
    options.jobs = 2;
    options.reduction.max_steps = 1;
    const auto report = check_all(s, options);
    REQUIRE(report.error);
    CHECK(report.error->find("step limit") != std::string::npos);
    CHECK(report.checked < report.total);
    CHECK_FALSE(report.all_resolved());
    const auto j = report_json(report);
    CHECK(j.contains("error"));
    CHECK(j["checked"] == report.checked);
  }

  TEST_CASE("progress reaches the total") {
    CheckOptions options;
    std::uint64_t calls = 0;
    std::uint64_t last = 0;
    options.progress = [&](std::uint64_t done, std::uint64_t total) {
      ++calls;
      last = done;
      CHECK(total == 64);
    };
    check_all(ReductionSystem(2), options);
    CHECK(calls == 64);
    CHECK(last == 64);
  }

  TEST_CASE("jobs must be positive") {
    CHECK_THROWS_AS(check_all(ReductionSystem(1), {0}), std::invalid_argument);
  }

  TEST_CASE("report rendering") {
    const auto report = check_all(ReductionSystem(4));
    const auto j = report_json(report);
    CHECK(j["n"] == 4);
    CHECK(j["ambiguities"] == 576);
    CHECK(j["resolved"] == 576);
    CHECK(j["unresolved"].empty());
    CHECK(j["elapsed_ms"].is_number_integer());
    CHECK(report_text(report).rfind("n=4 ambiguities=576 resolved=576 unresolved=0 elapsed_ms=", 0) == 0);
  }
}
