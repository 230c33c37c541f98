#include "hrs/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hrs {

namespace {

Trial skipped(std::string why) {
    Trial t;
    t.verdict = Verdict::Skipped;
    t.descriptor = std::move(why);
    return t;
}

Trial passed(std::string what) {
    Trial t;
    t.verdict = Verdict::Pass;
    t.descriptor = std::move(what);
    return t;
}

Trial failed(std::string what, Counterexample ce) {
    Trial t;
    t.verdict = Verdict::Fail;
    t.descriptor = std::move(what);
    t.counterexample = std::move(ce);
    return t;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

const char* to_string(AxiomId id) {
    switch (id) {
        case AxiomId::Balance: return "balance";
        case AxiomId::Anonymity: return "anonymity";
        case AxiomId::NeedsLowerBound: return "needs-lower-bound";
        case AxiomId::WeakNeedsLowerBound: return "weak-needs-lower-bound";
        case AxiomId::LowestRankConsistency: return "lowest-rank-consistency";
        case AxiomId::HighestRankIndependence: return "highest-rank-independence";
        case AxiomId::HighestRankSplittingNeutrality:
            return "highest-rank-splitting-neutrality";
        case AxiomId::BilateralLinearity: return "bilateral-linearity";
        case AxiomId::EqualTreatmentOfEquals: return "equal-treatment-of-equals";
        case AxiomId::HierarchicalOrderPreservation:
            return "hierarchical-order-preservation";
        case AxiomId::CanonicalBilateralFairness:
            return "canonical-bilateral-fairness";
        case AxiomId::SuperiorIndependence: return "superior-independence";
        case AxiomId::CanonicalSymmetricFairness:
            return "canonical-symmetric-fairness";
        case AxiomId::Decomposability: return "decomposability";
    }
    return "?";
}

std::optional<AxiomId> axiom_from_string(const std::string& s) {
    for (const AxiomSpec& a : all_axioms()) {
        if (s == to_string(a.id)) return a.id;
    }
    return std::nullopt;
}

std::vector<AxiomSpec> all_axioms() {
    return {
        {AxiomId::Balance},
        {AxiomId::Anonymity},
        {AxiomId::NeedsLowerBound},
        {AxiomId::WeakNeedsLowerBound},
        {AxiomId::LowestRankConsistency},
        {AxiomId::HighestRankIndependence},
        {AxiomId::HighestRankSplittingNeutrality},
        {AxiomId::BilateralLinearity},
        {AxiomId::EqualTreatmentOfEquals},
        {AxiomId::HierarchicalOrderPreservation},
        {AxiomId::CanonicalBilateralFairness, 0.5},
        {AxiomId::SuperiorIndependence},
        {AxiomId::CanonicalSymmetricFairness},
        {AxiomId::Decomposability},
    };
}

// --- predicates -------------------------------------------------------

Trial check_balance(const Rule& rule, const Problem& p, Tolerance tol) {
    Allocation x = rule(p);
    const double gap = std::abs(x.total() - p.total_revenue());
    if (gap <= tol.abs_tol) return passed("balance");
    return failed("balance",
                  {p, x, std::nullopt, std::nullopt,
                   "payoff total off by " + fmt(gap)});
}

Trial check_anonymity(const Rule& rule, const Problem& p,
                      const std::vector<int>& relabeled_ids, Tolerance tol) {
    if (relabeled_ids.size() != p.size())
        throw std::invalid_argument("check_anonymity: relabeling length mismatch");
    Problem q{relabeled_ids, p.revenues, p.needs};
    if (structural_error(q))
        throw std::invalid_argument("check_anonymity: relabeling not strictly increasing");
    Allocation x = rule(p);
    Allocation y = rule(q);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (std::abs(x.payoffs[i] - y.payoffs[i]) > tol.abs_tol)
            return failed("anonymity under relabeling",
                          {p, x, q, y,
                           "payoff of rank " + std::to_string(i + 1) +
                               " changed under relabeling"});
    }
    return passed("anonymity under relabeling");
}

Trial check_needs_lower_bound(const Rule& rule, const Problem& p, Tolerance tol) {
    Allocation x = rule(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (x.payoffs[i] < p.needs[i] - tol.abs_tol)
            return failed("needs lower bound",
                          {p, x, std::nullopt, std::nullopt,
                           "agent " + std::to_string(p.agents[i]) + " paid " +
                               fmt(x.payoffs[i]) + " below need " +
                               fmt(p.needs[i])});
    }
    return passed("needs lower bound");
}

Trial check_weak_needs_lower_bound(const Rule& rule, const Problem& p,
                                   Tolerance tol) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.revenues[i] < p.needs[i])
            return skipped("r >= z fails componentwise; condition vacuous");
    }
    return check_needs_lower_bound(rule, p, tol);
}

Trial check_lowest_rank_consistency(const Rule& rule, const Problem& p,
                                    DomainClass audit_domain, Tolerance tol) {
    if (p.size() < 2) return skipped("single agent; no reduced problem");
    Allocation x = rule(p);
    Problem reduced;
    reduced.agents.assign(p.agents.begin() + 1, p.agents.end());
    reduced.revenues.assign(p.revenues.begin() + 1, p.revenues.end());
    reduced.needs.assign(p.needs.begin() + 1, p.needs.end());
    reduced.revenues[0] += p.revenues[0] - x.payoffs[0];
    if (structural_error(reduced))
        return skipped("reduced problem structurally invalid");
    if (!within_domain(classify(reduced), audit_domain))
        return skipped("reduced problem leaves the audit domain");
    Allocation y = rule(reduced);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (std::abs(y.payoffs[i] - x.payoffs[i + 1]) > tol.abs_tol)
            return failed("lowest rank consistency",
                          {p, x, reduced, y,
                           "reduced-problem payoff of agent " +
                               std::to_string(reduced.agents[i]) + " differs"});
    }
    return passed("lowest rank consistency");
}

Trial check_highest_rank_independence(const Rule& rule, const Problem& p,
                                      double new_top_revenue,
                                      double new_top_need,
                                      DomainClass audit_domain, Tolerance tol) {
    if (p.size() < 2) return skipped("single agent; nothing below the top");
    Problem q = p;
    q.revenues.back() = new_top_revenue;
    q.needs.back() = new_top_need;
    if (structural_error(q) || !within_domain(classify(q), audit_domain))
        return skipped("replacement top leaves the audit domain");
    Allocation x = rule(p);
    Allocation y = rule(q);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (std::abs(x.payoffs[i] - y.payoffs[i]) > tol.abs_tol)
            return failed("highest rank independence",
                          {p, x, q, y,
                           "payoff of agent " + std::to_string(p.agents[i]) +
                               " moved when the top changed to (" +
                               fmt(new_top_revenue) + "," + fmt(new_top_need) + ")"});
    }
    return passed("highest rank independence");
}

Trial check_superior_independence(const Rule& rule, const Problem& p,
                                  std::size_t cut,
                                  const std::vector<double>& block_revenues,
                                  const std::vector<double>& block_needs,
                                  DomainClass audit_domain, Tolerance tol) {
    const std::size_t n = p.size();
    if (cut == 0 || cut >= n)
        throw std::invalid_argument("check_superior_independence: cut out of range");
    if (block_revenues.size() != n - cut || block_needs.size() != n - cut)
        throw std::invalid_argument("check_superior_independence: block length mismatch");
    Problem q = p;
    std::copy(block_revenues.begin(), block_revenues.end(),
              q.revenues.begin() + static_cast<std::ptrdiff_t>(cut));
    std::copy(block_needs.begin(), block_needs.end(),
              q.needs.begin() + static_cast<std::ptrdiff_t>(cut));
    if (structural_error(q) || !within_domain(classify(q), audit_domain))
        return skipped("replacement block leaves the audit domain");
    Allocation x = rule(p);
    Allocation y = rule(q);
    for (std::size_t i = 0; i < cut; ++i) {
        if (std::abs(x.payoffs[i] - y.payoffs[i]) > tol.abs_tol)
            return failed("superior independence",
                          {p, x, q, y,
                           "payoff of agent " + std::to_string(p.agents[i]) +
                               " moved when the top block changed"});
    }
    return passed("superior independence (cut at rank " + std::to_string(cut + 1) + ")");
}

Trial check_highest_rank_splitting_neutrality(const Rule& rule, const Problem& p,
                                              double revenue_share,
                                              double need_share,
                                              DomainClass audit_domain,
                                              Tolerance tol) {
    const std::size_t n = p.size();
    Problem q = p;
    q.agents.push_back(p.agents.back() + 1);
    q.revenues.back() = revenue_share * p.revenues[n - 1];
    q.revenues.push_back((1.0 - revenue_share) * p.revenues[n - 1]);
    q.needs.back() = need_share * p.needs[n - 1];
    q.needs.push_back((1.0 - need_share) * p.needs[n - 1]);
    if (structural_error(q) || !within_domain(classify(q), audit_domain))
        return skipped("split top leaves the audit domain");
    Allocation x = rule(p);
    Allocation y = rule(q);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(x.payoffs[i] - y.payoffs[i]) > tol.abs_tol)
            return failed("highest rank splitting neutrality",
                          {p, x, q, y,
                           "payoff of agent " + std::to_string(p.agents[i]) +
                               " moved when the top split off a follower"});
    }
    return passed("highest rank splitting neutrality");
}

Trial check_bilateral_linearity(const Rule& rule, const Problem& a,
                                const Problem& b, double alpha, double beta,
                                Tolerance tol) {
    if (a.size() != 2 || b.size() != 2 || a.agents != b.agents)
        throw std::invalid_argument(
            "check_bilateral_linearity: two problems over the same two agents required");
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::invalid_argument("check_bilateral_linearity: alpha, beta must be > 0");
    Problem comb = a;
    for (std::size_t i = 0; i < 2; ++i) {
        comb.revenues[i] = alpha * a.revenues[i] + beta * b.revenues[i];
        comb.needs[i] = alpha * a.needs[i] + beta * b.needs[i];
    }
    if (classify(comb) == DomainClass::Invalid)
        return skipped("combined problem leaves the domain");
    Allocation xa = rule(a);
    Allocation xb = rule(b);
    Allocation xc = rule(comb);
    for (std::size_t i = 0; i < 2; ++i) {
        const double expected = alpha * xa.payoffs[i] + beta * xb.payoffs[i];
        if (std::abs(xc.payoffs[i] - expected) > tol.abs_tol)
            return failed("bilateral linearity",
                          {a, xa, comb, xc,
                           "combination with alpha=" + fmt(alpha) +
                               ", beta=" + fmt(beta) + " is not linear at rank " +
                               std::to_string(i + 1)});
    }
    return passed("bilateral linearity");
}

Trial check_equal_treatment_of_equals(const Rule& rule, const Problem& p,
                                      std::size_t i, std::size_t j,
                                      Tolerance tol) {
    if (i >= p.size() || j >= p.size() || i == j)
        throw std::invalid_argument("check_equal_treatment_of_equals: bad pair");
    if (p.revenues[i] != p.revenues[j] || p.needs[i] != p.needs[j])
        throw std::invalid_argument(
            "check_equal_treatment_of_equals: agents are not equals");
    Allocation x = rule(p);
    if (std::abs(x.payoffs[i] - x.payoffs[j]) > tol.abs_tol)
        return failed("equal treatment of equals",
                      {p, x, std::nullopt, std::nullopt,
                       "equal agents " + std::to_string(p.agents[i]) + " and " +
                           std::to_string(p.agents[j]) + " paid " +
                           fmt(x.payoffs[i]) + " vs " + fmt(x.payoffs[j])});
    return passed("equal treatment of equals");
}

Trial check_hierarchical_order_preservation(const Rule& rule, const Problem& p,
                                            Tolerance tol) {
    Allocation x = rule(p);
    for (std::size_t i = 1; i < p.size(); ++i) {
        const double lower = x.payoffs[i - 1] - p.needs[i - 1];
        const double upper = x.payoffs[i] - p.needs[i];
        if (upper < lower - tol.abs_tol)
            return failed("hierarchical order preservation",
                          {p, x, std::nullopt, std::nullopt,
                           "net payoff drops from rank " + std::to_string(i) +
                               " (" + fmt(lower) + ") to rank " +
                               std::to_string(i + 1) + " (" + fmt(upper) + ")"});
    }
    return passed("hierarchical order preservation");
}

Trial check_canonical_bilateral_fairness(const Rule& rule, double r1, double z1,
                                         double lambda, Tolerance tol) {
    if (!(r1 >= z1) || z1 < 0.0)
        throw std::invalid_argument("check_canonical_bilateral_fairness: need r1 >= z1 >= 0");
    Problem probe{{1, 2}, {r1, 0.0}, {z1, 0.0}};
    Allocation x = rule(probe);
    const double surplus = r1 - z1;
    const double want1 = z1 + lambda * surplus;
    const double want2 = (1.0 - lambda) * surplus;
    if (std::abs(x.payoffs[0] - want1) > tol.abs_tol ||
        std::abs(x.payoffs[1] - want2) > tol.abs_tol)
        return failed("canonical bilateral fairness (lambda=" + fmt(lambda) + ")",
                      {probe, x, std::nullopt, std::nullopt,
                       "expected (" + fmt(want1) + "," + fmt(want2) + "), got (" +
                           fmt(x.payoffs[0]) + "," + fmt(x.payoffs[1]) + ")"});
    return passed("canonical bilateral fairness (lambda=" + fmt(lambda) + ")");
}

Trial check_canonical_symmetric_fairness(const Rule& rule, const Problem& p,
                                         Tolerance tol) {
    for (std::size_t k = 1; k < p.size(); ++k) {
        if (p.revenues[k] != 0.0 || p.needs[k] != 0.0)
            throw std::invalid_argument(
                "check_canonical_symmetric_fairness: superiors must have zero revenue and need");
    }
    if (p.size() < 2) return skipped("no superiors to compare");
    Allocation x = rule(p);
    const double net = x.payoffs[0] - p.needs[0];
    for (std::size_t k = 1; k < p.size(); ++k) {
        if (std::abs(net - x.payoffs[k]) > tol.abs_tol)
            return failed("canonical symmetric fairness",
                          {p, x, std::nullopt, std::nullopt,
                           "net payoff of the productive agent (" + fmt(net) +
                               ") differs from superior at rank " +
                               std::to_string(k + 1) + " (" + fmt(x.payoffs[k]) + ")"});
    }
    return passed("canonical symmetric fairness");
}

Trial check_decomposability(const Rule& rule, const Problem& p, Tolerance tol) {
    if (!within_domain(classify(p), DomainClass::Z))
        return skipped("r >= z fails componentwise; surplus problem undefined");
    Problem needs_only = p;
    needs_only.revenues = p.needs;
    Problem surplus_only = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
        surplus_only.revenues[i] = p.surplus(i);
        surplus_only.needs[i] = 0.0;
    }
    Allocation x = rule(p);
    Allocation xn = rule(needs_only);
    Allocation xs = rule(surplus_only);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double sum = xn.payoffs[i] + xs.payoffs[i];
        if (std::abs(x.payoffs[i] - sum) > tol.abs_tol)
            return failed("decomposability",
                          {p, x, surplus_only, xs,
                           "phi(r,z) != phi(z,z) + phi(r-z,0) at rank " +
                               std::to_string(i + 1)});
    }
    return passed("decomposability");
}

// --- generation -------------------------------------------------------

ProblemGenerator::ProblemGenerator(GeneratorConfig config, std::uint64_t seed)
    : config_(config), engine_(seed) {
    if (config_.min_agents < 1 || config_.max_agents < config_.min_agents ||
        config_.max_agents > 12)
        throw std::invalid_argument("ProblemGenerator: agent range must lie in [1,12]");
    if (!(config_.magnitude > 0.0))
        throw std::invalid_argument("ProblemGenerator: magnitude must be positive");
    if (config_.domain == DomainClass::Invalid)
        throw std::invalid_argument("ProblemGenerator: cannot target the Invalid class");
}

double ProblemGenerator::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int ProblemGenerator::uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

Problem ProblemGenerator::next() {
    const int n = uniform_int(config_.min_agents, config_.max_agents);
    Problem p;
    p.agents.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.agents[static_cast<std::size_t>(i)] = i + 1;
    p.revenues.resize(p.agents.size());
    p.needs.resize(p.agents.size());
    switch (config_.domain) {
        case DomainClass::ZZero:
            for (std::size_t i = 0; i < p.size(); ++i) {
                p.needs[i] = 0.0;
                p.revenues[i] = uniform(0.0, config_.magnitude);
            }
            break;
        case DomainClass::Z:
            for (std::size_t i = 0; i < p.size(); ++i) {
                p.needs[i] = uniform(0.0, config_.magnitude);
                p.revenues[i] = p.needs[i] + uniform(0.0, config_.magnitude);
            }
            break;
        case DomainClass::ZStar: {
            for (std::size_t i = 0; i < p.size(); ++i) {
                p.revenues[i] = uniform(0.0, config_.magnitude);
                p.needs[i] = uniform(0.0, config_.magnitude);
            }
            const double total_r = p.total_revenue();
            const double total_z = p.total_need();
            if (total_z > total_r && total_z > 0.0) {
                // rescale needs to restore the aggregate constraint while
                // keeping individual r_i < z_i cases alive; the slack factor
                // absorbs the rounding of the per-entry products
                const double scale = (total_r / total_z) * (1.0 - 1e-12);
                for (double& z : p.needs) z *= scale;
            }
            break;
        }
        case DomainClass::Invalid: break;  // rejected in the constructor
    }
    return p;
}

// --- audit ------------------------------------------------------------

bool AuditReport::all_clean() const {
    return std::all_of(axioms.begin(), axioms.end(),
                       [](const AxiomResult& r) { return r.clean(); });
}

namespace {

// One axiom trial: draw a base problem plus axiom-appropriate perturbation
// parameters from `gen` and evaluate the predicate.
Trial run_trial(const Rule& rule, const AxiomSpec& axiom,
                const AuditConfig& config, ProblemGenerator& gen) {
    const Tolerance tol = config.tol;
    const DomainClass domain = config.domain;
    const double mag = config.magnitude;

    auto draw_pair = [&](double& r, double& z) {
        // one (revenue, need) pair consistent with the audit domain
        switch (domain) {
            case DomainClass::ZZero:
                z = 0.0;
                r = gen.uniform(0.0, mag);
                break;
            case DomainClass::Z:
                z = gen.uniform(0.0, mag);
                r = z + gen.uniform(0.0, mag);
                break;
            default:
                r = gen.uniform(0.0, mag);
                z = gen.uniform(0.0, mag);
                break;
        }
    };

    switch (axiom.id) {
        case AxiomId::Balance:
            return check_balance(rule, gen.next(), tol);
        case AxiomId::Anonymity: {
            Problem p = gen.next();
            std::vector<int> ids(p.size());
            int id = gen.uniform_int(1, 4);
            for (std::size_t i = 0; i < p.size(); ++i) {
                ids[i] = id;
                id += gen.uniform_int(1, 4);
            }
            return check_anonymity(rule, p, ids, tol);
        }
        case AxiomId::NeedsLowerBound:
            return check_needs_lower_bound(rule, gen.next(), tol);
        case AxiomId::WeakNeedsLowerBound:
            return check_weak_needs_lower_bound(rule, gen.next(), tol);
        case AxiomId::LowestRankConsistency:
            return check_lowest_rank_consistency(rule, gen.next(), domain, tol);
        case AxiomId::HighestRankIndependence: {
            Problem p = gen.next();
            double r = 0.0, z = 0.0;
            draw_pair(r, z);
            return check_highest_rank_independence(rule, p, r, z, domain, tol);
        }
        case AxiomId::HighestRankSplittingNeutrality: {
            Problem p = gen.next();
            const double rs = gen.uniform(0.0, 1.0);
            const double zs = gen.uniform(0.0, 1.0);
            return check_highest_rank_splitting_neutrality(rule, p, rs, zs,
                                                           domain, tol);
        }
        case AxiomId::BilateralLinearity: {
            Problem a = gen.next();
            Problem b = gen.next();
            const double alpha = gen.uniform(0.0, 2.0) + 1e-6;
            const double beta = gen.uniform(0.0, 2.0) + 1e-6;
            return check_bilateral_linearity(rule, a, b, alpha, beta, tol);
        }
        case AxiomId::EqualTreatmentOfEquals: {
            Problem p = gen.next();
            if (p.size() < 2) return skipped("single agent; no pair to equalize");
            const std::size_t i =
                static_cast<std::size_t>(gen.uniform_int(0, static_cast<int>(p.size()) - 2));
            const std::size_t j = static_cast<std::size_t>(
                gen.uniform_int(static_cast<int>(i) + 1, static_cast<int>(p.size()) - 1));
            p.revenues[j] = p.revenues[i];
            p.needs[j] = p.needs[i];
            if (!within_domain(classify(p), domain))
                return skipped("forced duplicate pair leaves the audit domain");
            return check_equal_treatment_of_equals(rule, p, i, j, tol);
        }
        case AxiomId::HierarchicalOrderPreservation:
            return check_hierarchical_order_preservation(rule, gen.next(), tol);
        case AxiomId::CanonicalBilateralFairness: {
            double r1 = 0.0, z1 = 0.0;
            // the probe always satisfies r1 >= z1 (axiom precondition)
            z1 = (domain == DomainClass::ZZero) ? 0.0 : gen.uniform(0.0, mag);
            r1 = z1 + gen.uniform(0.0, mag);
            return check_canonical_bilateral_fairness(rule, r1, z1, axiom.lambda, tol);
        }
        case AxiomId::SuperiorIndependence: {
            Problem p = gen.next();
            if (p.size() < 2) return skipped("single agent; no top block");
            const std::size_t cut = static_cast<std::size_t>(
                gen.uniform_int(1, static_cast<int>(p.size()) - 1));
            std::vector<double> br(p.size() - cut), bz(p.size() - cut);
            for (std::size_t i = 0; i < br.size(); ++i) draw_pair(br[i], bz[i]);
            return check_superior_independence(rule, p, cut, br, bz, domain, tol);
        }
        case AxiomId::CanonicalSymmetricFairness: {
            const int n = gen.uniform_int(std::max(config.min_agents, 2),
                                          std::max(config.max_agents, 2));
            Problem p;
            for (int i = 1; i <= n; ++i) p.agents.push_back(i);
            p.revenues.assign(static_cast<std::size_t>(n), 0.0);
            p.needs.assign(static_cast<std::size_t>(n), 0.0);
            p.needs[0] = (domain == DomainClass::ZZero) ? 0.0 : gen.uniform(0.0, mag);
            p.revenues[0] = p.needs[0] + gen.uniform(0.0, mag);
            return check_canonical_symmetric_fairness(rule, p, tol);
        }
        case AxiomId::Decomposability:
            return check_decomposability(rule, gen.next(), tol);
    }
    throw std::logic_error("run_trial: unhandled axiom");
}

}  // namespace

AuditReport audit(const Rule& rule, const std::string& rule_label,
                  const std::vector<AxiomSpec>& axioms,
                  const AuditConfig& config) {
    if (config.trials < 1)
        throw std::invalid_argument("audit: trials must be >= 1");
    AuditReport report;
    report.rule = rule_label;
    report.domain = config.domain;
    report.seed = config.seed;
    report.tolerance = config.tol.abs_tol;
    report.trials = config.trials;
    for (std::size_t a = 0; a < axioms.size(); ++a) {
        AxiomResult result;
        result.axiom = axioms[a];
        GeneratorConfig gc{config.domain, config.min_agents, config.max_agents,
                           config.magnitude};
        if (axioms[a].id == AxiomId::BilateralLinearity) {
            gc.min_agents = gc.max_agents = 2;  // the axiom is bilateral
        }
        ProblemGenerator gen(gc, splitmix64(config.seed + a));
        for (long t = 0; t < config.trials; ++t) {
            Trial trial = run_trial(rule, axioms[a], config, gen);
            ++result.attempted;
            switch (trial.verdict) {
                case Verdict::Pass: break;
                case Verdict::Skipped: ++result.skipped; break;
                case Verdict::Fail:
                    ++result.failed;
                    if (result.first_failure_index < 0) {
                        result.first_failure_index = t;
                        result.first_counterexample = trial.counterexample;
                    }
                    break;
            }
        }
        // falsificationist wording: a clean run is never a proof
        result.verdict =
            result.clean()
                ? "no counterexample found in " + std::to_string(result.attempted) +
                      " trials"
                : "falsified at trial " + std::to_string(result.first_failure_index);
        report.axioms.push_back(std::move(result));
    }
    return report;
}

// --- negative controls ------------------------------------------------

Rule proportional_test_double() {
    return [](const Problem& p) {
        const double total_r = p.total_revenue();
        double weight = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i)
            weight += p.revenues[i] + p.needs[i];
        Allocation out{p.agents, std::vector<double>(p.size())};
        for (std::size_t i = 0; i < p.size(); ++i) {
            out.payoffs[i] = (weight > 0.0)
                                 ? (p.revenues[i] + p.needs[i]) / weight * total_r
                                 : total_r / static_cast<double>(p.size());
        }
        return out;
    };
}

Rule id_parity_test_double() {
    return [](const Problem& p) {
        const double total_r = p.total_revenue();
        std::vector<std::size_t> even;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p.agents[i] % 2 == 0) even.push_back(i);
        Allocation out{p.agents, std::vector<double>(p.size(), 0.0)};
        if (even.empty()) {
            for (double& x : out.payoffs) x = total_r / static_cast<double>(p.size());
        } else {
            for (std::size_t i : even)
                out.payoffs[i] = total_r / static_cast<double>(even.size());
        }
        return out;
    };
}

}  // namespace hrs
