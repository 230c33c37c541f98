#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hrs/axioms.hpp"
#include "hrs/io.hpp"
#include "hrs/rules.hpp"

using namespace hrs;

namespace {

const Problem kExample1{{1, 2, 3, 4}, {21, 1, 10, 10}, {1, 1, 5, 5}};

Rule geo(double l) {
    return [l](const Problem& p) { return geometric(p, l); };
}
const Rule kSerial = [](const Problem& p) { return serial(p); };

}  // namespace

TEST_CASE("needs lower bound check") {
    ProblemGenerator gen({DomainClass::Z, 1, 8, 10.0}, 1);
    for (int t = 0; t < 200; ++t)
        CHECK(check_needs_lower_bound(geo(0.4), gen.next()).verdict == Verdict::Pass);

    const Problem star{{1, 2}, {0, 2}, {1, 0}};
    Trial fail = check_needs_lower_bound(geo(0.5), star);
    REQUIRE(fail.verdict == Verdict::Fail);
    CHECK(fail.counterexample->base_alloc.payoffs[0] == doctest::Approx(0.5));

    const Problem tight{{1, 2}, {2, 3}, {2, 3}};
    CHECK(check_needs_lower_bound(kSerial, tight).verdict == Verdict::Pass);
}

TEST_CASE("weak needs lower bound is vacuous off Z") {
    const Problem star{{1, 2}, {0, 2}, {1, 0}};
    CHECK(check_weak_needs_lower_bound(geo(0.5), star).verdict == Verdict::Skipped);
    ProblemGenerator gen({DomainClass::Z, 1, 6, 10.0}, 2);
    for (int t = 0; t < 200; ++t) {
        CHECK(check_weak_needs_lower_bound(geo(0.8), gen.next()).verdict == Verdict::Pass);
        CHECK(check_weak_needs_lower_bound(kSerial, gen.next()).verdict == Verdict::Pass);
    }
}

TEST_CASE("lowest rank consistency") {
    for (double l : {0.0, 0.3, 0.5, 1.0})
        CHECK(check_lowest_rank_consistency(geo(l), kExample1, DomainClass::Z).verdict ==
              Verdict::Pass);
    CHECK(check_lowest_rank_consistency(kSerial, kExample1, DomainClass::Z).verdict ==
          Verdict::Pass);
    CHECK(check_lowest_rank_consistency(geo(1.0), kExample1, DomainClass::Z).verdict ==
          Verdict::Pass);
    const Problem one{{1}, {3}, {1}};
    CHECK(check_lowest_rank_consistency(kSerial, one, DomainClass::Z).verdict ==
          Verdict::Skipped);
}

TEST_CASE("highest rank independence") {
    CHECK(check_highest_rank_independence(geo(0.4), kExample1, 100, 7,
                                          DomainClass::Z).verdict == Verdict::Pass);
    const Problem flat{{1, 2, 3}, {3, 3, 3}, {0, 0, 0}};
    CHECK(check_highest_rank_independence(kSerial, flat, 9, 0,
                                          DomainClass::Z).verdict == Verdict::Pass);
    CHECK(check_highest_rank_independence(proportional_test_double(), kExample1, 100, 7,
                                          DomainClass::Z).verdict == Verdict::Fail);
    // replacement with a need above its revenue leaves a Z audit's domain
    CHECK(check_highest_rank_independence(geo(0.4), kExample1, 1, 5,
                                          DomainClass::Z).verdict == Verdict::Skipped);
}

TEST_CASE("superior independence") {
    ProblemGenerator gen({DomainClass::Z, 2, 8, 10.0}, 3);
    for (int t = 0; t < 200; ++t) {
        Problem p = gen.next();
        const std::size_t cut = 1 + static_cast<std::size_t>(t) % (p.size() - 1);
        std::vector<double> br(p.size() - cut), bz(p.size() - cut);
        for (std::size_t i = 0; i < br.size(); ++i) {
            bz[i] = gen.uniform(0, 10);
            br[i] = bz[i] + gen.uniform(0, 10);
        }
        CHECK(check_superior_independence(kSerial, p, cut, br, bz,
                                          DomainClass::Z).verdict == Verdict::Pass);
    }
    const Problem chain{{1, 2, 3}, {1, 0, 0}, {0, 0, 0}};
    CHECK(check_superior_independence(geo(0.5), chain, 1, {4, 4}, {0, 0},
                                      DomainClass::Z).verdict == Verdict::Pass);
}

TEST_CASE("highest rank splitting neutrality") {
    CHECK(check_highest_rank_splitting_neutrality(geo(0.7), kExample1, 0.6, 0.6,
                                                  DomainClass::Z).verdict == Verdict::Pass);
    CHECK(check_highest_rank_splitting_neutrality(geo(1.0), kExample1, 0.3, 0.9,
                                                  DomainClass::Z).verdict == Verdict::Skipped);
    CHECK(check_highest_rank_splitting_neutrality(geo(1.0), kExample1, 0.5, 0.5,
                                                  DomainClass::Z).verdict == Verdict::Pass);

    // serial drops this axiom: agent 1 gets 1/2 before the split, 1/3 after
    const Problem two{{1, 2}, {1, 0}, {0, 0}};
    Trial fail = check_highest_rank_splitting_neutrality(kSerial, two, 0.5, 0.5,
                                                         DomainClass::Z);
    REQUIRE(fail.verdict == Verdict::Fail);
    CHECK(fail.counterexample->base_alloc.payoffs[0] == doctest::Approx(0.5));
    CHECK(fail.counterexample->perturbed_alloc->payoffs[0] == doctest::Approx(1.0 / 3));
}

TEST_CASE("bilateral linearity") {
    ProblemGenerator gen({DomainClass::Z, 2, 2, 10.0}, 4);
    for (int t = 0; t < 200; ++t) {
        Problem a = gen.next();
        Problem b = gen.next();
        CHECK(check_bilateral_linearity(geo(0.6), a, b, 1.0, 1.0).verdict == Verdict::Pass);
        CHECK(check_bilateral_linearity(kSerial, a, b, 0.7, 1.8).verdict == Verdict::Pass);
    }
    Problem a{{1, 2}, {2, 1}, {1, 0}};
    CHECK_THROWS_AS(check_bilateral_linearity(kSerial, a, a, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("equal treatment of equals") {
    Problem dup{{1, 2, 3}, {2, 2, 0}, {1, 1, 0}};
    CHECK(check_equal_treatment_of_equals(geo(1.0), dup, 0, 1).verdict == Verdict::Pass);
    CHECK(check_equal_treatment_of_equals(geo(0.0), dup, 0, 1).verdict == Verdict::Pass);

    Problem flat{{1, 2, 3}, {2, 2, 2}, {0, 0, 0}};
    Trial fail = check_equal_treatment_of_equals(geo(0.5), flat, 0, 1);
    REQUIRE(fail.verdict == Verdict::Fail);
    CHECK(fail.counterexample->base_alloc.payoffs[0] == doctest::Approx(1.0));
    CHECK(fail.counterexample->base_alloc.payoffs[1] == doctest::Approx(1.5));

    CHECK_THROWS_AS(check_equal_treatment_of_equals(kSerial, dup, 0, 2),
                    std::invalid_argument);
}

TEST_CASE("hierarchical order preservation") {
    ProblemGenerator gen({DomainClass::Z, 2, 8, 10.0}, 5);
    for (int t = 0; t < 200; ++t)
        CHECK(check_hierarchical_order_preservation(geo(0.0), gen.next()).verdict ==
              Verdict::Pass);
    const Problem skew{{1, 2}, {5, 1}, {0, 0}};
    CHECK(check_hierarchical_order_preservation(geo(1.0), skew).verdict == Verdict::Fail);
    const Problem two{{1, 2}, {1, 0}, {0, 0}};
    CHECK(check_hierarchical_order_preservation(kSerial, two).verdict == Verdict::Pass);
}

TEST_CASE("canonical bilateral fairness, including the lambda variant") {
    CHECK(check_canonical_bilateral_fairness(geo(0.5), 8, 2, 0.5).verdict == Verdict::Pass);
    CHECK(check_canonical_bilateral_fairness(geo(0.3), 8, 2, 0.3).verdict == Verdict::Pass);
    CHECK(check_canonical_bilateral_fairness(geo(0.3), 8, 2, 0.5).verdict == Verdict::Fail);
    // zero surplus forces (z1, 0) for any rule with balance + needs lower bound
    CHECK(check_canonical_bilateral_fairness(kSerial, 3, 3, 0.5).verdict == Verdict::Pass);
    CHECK_THROWS_AS(check_canonical_bilateral_fairness(kSerial, 1, 2, 0.5),
                    std::invalid_argument);
}

TEST_CASE("canonical symmetric fairness") {
    const Problem chain{{1, 2, 3}, {1, 0, 0}, {0, 0, 0}};
    CHECK(check_canonical_symmetric_fairness(kSerial, chain).verdict == Verdict::Pass);
    Trial fail = check_canonical_symmetric_fairness(geo(0.5), chain);
    REQUIRE(fail.verdict == Verdict::Fail);
    CHECK(fail.counterexample->base_alloc.payoffs[0] == doctest::Approx(0.5));
    CHECK_THROWS_AS(check_canonical_symmetric_fairness(kSerial, kExample1),
                    std::invalid_argument);
}

TEST_CASE("decomposability") {
    CHECK(check_decomposability(geo(0.4), kExample1).verdict == Verdict::Pass);
    CHECK(check_decomposability(kSerial, kExample1).verdict == Verdict::Pass);
    CHECK(check_decomposability(proportional_test_double(), kExample1).verdict ==
          Verdict::Fail);
    const Problem star{{1, 2}, {0, 2}, {1, 0}};
    CHECK(check_decomposability(kSerial, star).verdict == Verdict::Skipped);
}

TEST_CASE("balance and anonymity checks with negative controls") {
    CHECK(check_balance(kSerial, kExample1).verdict == Verdict::Pass);
    CHECK(check_balance(geo(0.9), kExample1).verdict == Verdict::Pass);
    CHECK(check_anonymity(kSerial, kExample1, {2, 5, 6, 9}).verdict == Verdict::Pass);
    // relabeling {1,2} -> {2,4} flips the parity pattern
    const Problem two{{1, 2}, {3, 1}, {0, 0}};
    CHECK(check_anonymity(id_parity_test_double(), two, {2, 4}).verdict == Verdict::Fail);
    CHECK_THROWS_AS(check_anonymity(kSerial, two, {3, 2}), std::invalid_argument);
}

TEST_CASE("generator determinism and domain coverage") {
    GeneratorConfig cfg{DomainClass::Z, 2, 6, 10.0};
    ProblemGenerator a(cfg, 42), b(cfg, 42);
    for (int t = 0; t < 100; ++t) {
        Problem pa = a.next(), pb = b.next();
        CHECK(pa.revenues == pb.revenues);
        CHECK(pa.needs == pb.needs);
        CHECK(within_domain(classify(pa), DomainClass::Z));
    }

    ProblemGenerator zz({DomainClass::ZZero, 1, 6, 10.0}, 9);
    for (int t = 0; t < 100; ++t) CHECK(classify(zz.next()) == DomainClass::ZZero);

    ProblemGenerator star({DomainClass::ZStar, 2, 6, 10.0}, 9);
    bool saw_shortfall = false;
    for (int t = 0; t < 1000; ++t) {
        Problem p = star.next();
        CHECK(within_domain(classify(p), DomainClass::ZStar));
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.revenues[i] < p.needs[i]) saw_shortfall = true;
    }
    CHECK(saw_shortfall);

    CHECK_THROWS_AS(ProblemGenerator({DomainClass::Z, 0, 4, 10.0}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(ProblemGenerator({DomainClass::Invalid, 1, 4, 10.0}, 1),
                    std::invalid_argument);
}

TEST_CASE("audit engine: clean runs, falsification, accounting, determinism") {
    const std::vector<AxiomSpec> theorem1 = {
        {AxiomId::NeedsLowerBound},
        {AxiomId::LowestRankConsistency},
        {AxiomId::HighestRankIndependence},
        {AxiomId::HighestRankSplittingNeutrality},
        {AxiomId::BilateralLinearity},
    };
    AuditConfig cfg;
    cfg.domain = DomainClass::Z;
    cfg.trials = 2000;
    cfg.seed = 314;
    AuditReport clean = audit(geo(0.7), "geometric(0.7)", theorem1, cfg);
    CHECK(clean.all_clean());
    for (const AxiomResult& r : clean.axioms) {
        CHECK(r.attempted == cfg.trials);
        CHECK(r.failed == 0);
        CHECK(r.verdict.find("no counterexample found") == 0);
        CHECK(r.skipped + r.failed <= r.attempted);  // skips never count as outcomes
    }

    cfg.trials = 1000;
    AuditReport split = audit(kSerial, "serial",
                              {{AxiomId::HighestRankSplittingNeutrality}}, cfg);
    REQUIRE(!split.all_clean());
    CHECK(split.axioms[0].first_counterexample.has_value());
    CHECK(split.axioms[0].first_failure_index >= 0);

    cfg.domain = DomainClass::ZStar;
    AuditReport star = audit(geo(0.5), "geometric(0.5)", {{AxiomId::NeedsLowerBound}}, cfg);
    CHECK(!star.all_clean());
    // the reported counterexample must contain an agent with z_i > r_i
    const Problem& ce = star.axioms[0].first_counterexample->base;
    bool has_shortfall = false;
    for (std::size_t i = 0; i < ce.size(); ++i)
        if (ce.needs[i] > ce.revenues[i]) has_shortfall = true;
    CHECK(has_shortfall);

    cfg.domain = DomainClass::Z;
    AuditReport r1 = audit(kSerial, "serial", all_axioms(), cfg);
    AuditReport r2 = audit(kSerial, "serial", all_axioms(), cfg);
    CHECK(to_json(r1) == to_json(r2));
}
