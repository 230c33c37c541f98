#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hrs/core.hpp"

namespace hrs {

/// A rule maps a problem to an allocation. All built-in rules are pure
/// and total on Zstar (they are well defined there even when some agent's
/// need exceeds his revenue).
using Rule = std::function<Allocation(const Problem&)>;

enum class RuleKind {
    Geometric,          // share lambda of carried surplus, remainder bubbles up
    Serial,             // each surplus split equally over the agent and his superiors
    FullTransfer,       // alias: Geometric(0)
    NoTransfer,         // alias: Geometric(1)
    BalancedTransfer,   // alias: Geometric(1/2)
    GeometricZeroNeeds, // geometric closed form on the zero-needs domain
    SerialZeroNeeds,    // serial closed form on the zero-needs domain
    ExtendedGeometric,  // needs-extension of GeometricZeroNeeds
    ExtendedSerial,     // needs-extension of SerialZeroNeeds
};

struct RuleSpec {
    RuleKind kind = RuleKind::Geometric;
    double lambda = 0.5;  // used by Geometric / GeometricZeroNeeds / ExtendedGeometric
};

/// Need-adjusted geometric rule. Forward surplus-carry pass:
///   pool_i = r_i - z_i + carry_{i-1}
///   x_i = z_i + lambda * pool_i,   carry_i = (1 - lambda) * pool_i   (i < n)
///   x_n = r_n + carry_{n-1}
/// Balance holds by construction.
Allocation geometric(const Problem& p, double lambda);

/// Need-adjusted serial rule: x_i = z_i + sum_{j<=i} (r_j - z_j)/(n - j + 1).
Allocation serial(const Problem& p);

/// Geometric rule on the zero-needs domain, computed from its own closed
/// form rather than by delegating to geometric().
Allocation geometric_zero_needs(const Problem& p, double lambda);

/// Serial rule on the zero-needs domain: x_i = sum_{j<=i} r_j/(n - j + 1).
Allocation serial_zero_needs(const Problem& p);

/// Lifts a zero-needs rule to the needs domain: pay each agent his need,
/// then apply the base rule to the surplus problem (M, r - z). Requires
/// the problem to be in Z so that r - z is a valid zero-needs problem.
Allocation extend(const Rule& zero_needs_base, const Problem& p);

/// Two-agent folk solution (z_1 + (r_1-z_1)/2, r_2 + (r_1-z_1)/2), the
/// common value of geometric(1/2) and serial on two agents.
Allocation folk_two_agent(const Problem& p);

/// Recovers a geometric rule's lambda from the payoff to agent 1 on the
/// probe problem (M={1,2}, r=(1,0), z=(0,0)).
double infer_lambda(const Rule& rule);

Rule make_rule(const RuleSpec& spec);
std::string rule_name(const RuleSpec& spec);

/// Parses CLI rule names: geometric | serial | full-transfer | no-transfer
/// | balanced (plus the zero-needs and extended variants).
std::optional<RuleSpec> rule_from_string(const std::string& name,
                                         std::optional<double> lambda);

}  // namespace hrs
