#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hrs/core.hpp"
#include "hrs/rules.hpp"

namespace hrs {

enum class AxiomId {
    Balance,
    Anonymity,
    NeedsLowerBound,
    WeakNeedsLowerBound,
    LowestRankConsistency,
    HighestRankIndependence,
    HighestRankSplittingNeutrality,
    BilateralLinearity,
    EqualTreatmentOfEquals,
    HierarchicalOrderPreservation,
    CanonicalBilateralFairness,
    SuperiorIndependence,
    CanonicalSymmetricFairness,
    Decomposability,
};

struct AxiomSpec {
    AxiomId id;
    double lambda = 0.5;  // only CanonicalBilateralFairness reads this
};

const char* to_string(AxiomId id);
std::optional<AxiomId> axiom_from_string(const std::string& s);
std::vector<AxiomSpec> all_axioms();

enum class Verdict { Pass, Fail, Skipped };

struct Counterexample {
    Problem base;
    Allocation base_alloc;
    std::optional<Problem> perturbed;
    std::optional<Allocation> perturbed_alloc;
    std::string note;
};

struct Trial {
    Verdict verdict = Verdict::Pass;
    std::string descriptor;  // which perturbation was applied, with parameters
    std::optional<Counterexample> counterexample;  // present iff Fail
};

// --- axiom predicates -------------------------------------------------
//
// Relational checks take the sampled perturbation parameters explicitly so
// tests can replay specific instances; the audit engine draws them from
// its seeded stream. `audit_domain` decides when a constructed companion
// problem falls outside the domain under audit, in which case the trial is
// Skipped, never Failed.

Trial check_balance(const Rule& rule, const Problem& p, Tolerance tol = {});

Trial check_anonymity(const Rule& rule, const Problem& p,
                      const std::vector<int>& relabeled_ids, Tolerance tol = {});

Trial check_needs_lower_bound(const Rule& rule, const Problem& p,
                              Tolerance tol = {});

Trial check_weak_needs_lower_bound(const Rule& rule, const Problem& p,
                                   Tolerance tol = {});

Trial check_lowest_rank_consistency(const Rule& rule, const Problem& p,
                                    DomainClass audit_domain, Tolerance tol = {});

Trial check_highest_rank_independence(const Rule& rule, const Problem& p,
                                      double new_top_revenue,
                                      double new_top_need,
                                      DomainClass audit_domain,
                                      Tolerance tol = {});

/// Replaces agents at canonical positions [cut, n) by the given block.
Trial check_superior_independence(const Rule& rule, const Problem& p,
                                  std::size_t cut,
                                  const std::vector<double>& block_revenues,
                                  const std::vector<double>& block_needs,
                                  DomainClass audit_domain, Tolerance tol = {});

/// Splits the top agent into (share*r_m, share*z_m kept) plus a new agent
/// above him carrying the remainder.
Trial check_highest_rank_splitting_neutrality(const Rule& rule, const Problem& p,
                                              double revenue_share,
                                              double need_share,
                                              DomainClass audit_domain,
                                              Tolerance tol = {});

Trial check_bilateral_linearity(const Rule& rule, const Problem& a,
                                const Problem& b, double alpha, double beta,
                                Tolerance tol = {});

/// Precondition: (r_i, z_i) == (r_j, z_j).
Trial check_equal_treatment_of_equals(const Rule& rule, const Problem& p,
                                      std::size_t i, std::size_t j,
                                      Tolerance tol = {});

Trial check_hierarchical_order_preservation(const Rule& rule, const Problem& p,
                                            Tolerance tol = {});

Trial check_canonical_bilateral_fairness(const Rule& rule, double r1, double z1,
                                         double lambda, Tolerance tol = {});

/// Precondition: r_k = z_k = 0 for every k > 1.
Trial check_canonical_symmetric_fairness(const Rule& rule, const Problem& p,
                                         Tolerance tol = {});

Trial check_decomposability(const Rule& rule, const Problem& p,
                            Tolerance tol = {});

// --- problem generation -----------------------------------------------

struct GeneratorConfig {
    DomainClass domain = DomainClass::Z;
    int min_agents = 2;
    int max_agents = 8;
    double magnitude = 10.0;
};

/// Seeded stream of problems in the requested domain. Z draws needs and
/// surpluses independently; Zstar draws revenues and needs independently
/// and rescales needs when they collectively exceed revenues, so r_i < z_i
/// stays likely while the aggregate constraint holds.
class ProblemGenerator {
public:
    ProblemGenerator(GeneratorConfig config, std::uint64_t seed);

    Problem next();

    /// Audit perturbations draw from the same stream as the problems so a
    /// report is reproducible end to end from its seed.
    std::mt19937_64& engine() { return engine_; }

    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);

private:
    GeneratorConfig config_;
    std::mt19937_64 engine_;
};

// --- audit engine -----------------------------------------------------

struct AuditConfig {
    DomainClass domain = DomainClass::Z;
    long trials = 1000;
    std::uint64_t seed = 0;
    Tolerance tol = {};
    int min_agents = 2;
    int max_agents = 8;
    double magnitude = 10.0;
};

struct AxiomResult {
    AxiomSpec axiom;
    long attempted = 0;
    long skipped = 0;
    long failed = 0;
    long first_failure_index = -1;  // trial index of the reported counterexample
    std::optional<Counterexample> first_counterexample;
    std::string verdict;  // "no counterexample found in N trials" or "falsified"

    bool clean() const { return failed == 0; }
};

struct AuditReport {
    std::string rule;
    DomainClass domain = DomainClass::Z;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    long trials = 0;
    std::vector<AxiomResult> axioms;

    bool all_clean() const;
};

/// Runs every requested axiom against `trials` generated problems with
/// axiom-appropriate sampled perturbations. Deterministic for a fixed seed.
AuditReport audit(const Rule& rule, const std::string& rule_label,
                  const std::vector<AxiomSpec>& axioms, const AuditConfig& config);

// --- negative controls ------------------------------------------------

/// Pays each agent in proportion to his revenue plus need; violates the
/// independence and decomposability axioms.
Rule proportional_test_double();

/// Splits total revenue equally among even-id agents (all agents when no
/// id is even); violates anonymity.
Rule id_parity_test_double();

}  // namespace hrs
