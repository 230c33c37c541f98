#include "hrs/rules.hpp"

#include <stdexcept>

namespace hrs {

namespace {

void require_allocatable(const Problem& p, const char* who) {
    if (classify(p) == DomainClass::Invalid)
        throw std::domain_error(std::string(who) +
                                ": total needs exceed total revenues");
}

void require_zero_needs(const Problem& p, const char* who) {
    if (classify(p) != DomainClass::ZZero)
        throw std::domain_error(std::string(who) +
                                ": problem has nonzero needs");
}

void require_lambda(double lambda, const char* who) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument(std::string(who) +
                                    ": lambda must lie in [0,1]");
}

}  // namespace

Allocation geometric(const Problem& p, double lambda) {
    require_allocatable(p, "geometric");
    require_lambda(lambda, "geometric");
    const std::size_t n = p.size();
    Allocation out{p.agents, std::vector<double>(n)};
    double carry = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double pool = p.surplus(i) + carry;
        out.payoffs[i] = p.needs[i] + lambda * pool;
        carry = (1.0 - lambda) * pool;
    }
    out.payoffs[n - 1] = p.revenues[n - 1] + carry;
    return out;
}

Allocation serial(const Problem& p) {
    require_allocatable(p, "serial");
    const std::size_t n = p.size();
    Allocation out{p.agents, std::vector<double>(n)};
    double shared = 0.0;  // accumulated equal shares from agents 1..i
    for (std::size_t i = 0; i < n; ++i) {
        shared += p.surplus(i) / static_cast<double>(n - i);
        out.payoffs[i] = p.needs[i] + shared;
    }
    return out;
}

Allocation geometric_zero_needs(const Problem& p, double lambda) {
    require_zero_needs(p, "geometric_zero_needs");
    require_lambda(lambda, "geometric_zero_needs");
    const std::size_t n = p.size();
    Allocation out{p.agents, std::vector<double>(n)};
    // x_i = lambda * (r_i + (1-lambda) r_{i-1} + ... + (1-lambda)^{i-1} r_1),
    // top agent absorbs the full discounted stack without the lambda factor.
    for (std::size_t i = 0; i < n; ++i) {
        double stack = 0.0;
        double w = 1.0;
        for (std::size_t j = i + 1; j-- > 0;) {
            stack += w * p.revenues[j];
            w *= (1.0 - lambda);
        }
        out.payoffs[i] = (i + 1 < n) ? lambda * stack : stack;
    }
    return out;
}

Allocation serial_zero_needs(const Problem& p) {
    require_zero_needs(p, "serial_zero_needs");
    const std::size_t n = p.size();
    Allocation out{p.agents, std::vector<double>(n)};
    double shared = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        shared += p.revenues[i] / static_cast<double>(n - i);
        out.payoffs[i] = shared;
    }
    return out;
}

Allocation extend(const Rule& zero_needs_base, const Problem& p) {
    if (!within_domain(classify(p), DomainClass::Z))
        throw std::domain_error(
            "extend: problem must satisfy r >= z componentwise");
    Problem surplus{p.agents, {}, std::vector<double>(p.size(), 0.0)};
    surplus.revenues.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        surplus.revenues[i] = p.surplus(i);
    Allocation base = zero_needs_base(surplus);
    Allocation out{p.agents, base.payoffs};
    for (std::size_t i = 0; i < p.size(); ++i) out.payoffs[i] += p.needs[i];
    return out;
}

Allocation folk_two_agent(const Problem& p) {
    if (p.size() != 2)
        throw std::invalid_argument("folk_two_agent: exactly two agents required");
    require_allocatable(p, "folk_two_agent");
    const double half = 0.5 * p.surplus(0);
    return Allocation{p.agents, {p.needs[0] + half, p.revenues[1] + half}};
}

double infer_lambda(const Rule& rule) {
    const Problem probe{{1, 2}, {1.0, 0.0}, {0.0, 0.0}};
    return rule(probe).payoffs[0];
}

Rule make_rule(const RuleSpec& spec) {
    const double lambda = spec.lambda;
    switch (spec.kind) {
        case RuleKind::Geometric:
            require_lambda(lambda, "make_rule");
            return [lambda](const Problem& p) { return geometric(p, lambda); };
        case RuleKind::Serial:
            return [](const Problem& p) { return serial(p); };
        case RuleKind::FullTransfer:
            return [](const Problem& p) { return geometric(p, 0.0); };
        case RuleKind::NoTransfer:
            return [](const Problem& p) { return geometric(p, 1.0); };
        case RuleKind::BalancedTransfer:
            return [](const Problem& p) { return geometric(p, 0.5); };
        case RuleKind::GeometricZeroNeeds:
            require_lambda(lambda, "make_rule");
            return [lambda](const Problem& p) {
                return geometric_zero_needs(p, lambda);
            };
        case RuleKind::SerialZeroNeeds:
            return [](const Problem& p) { return serial_zero_needs(p); };
        case RuleKind::ExtendedGeometric:
            require_lambda(lambda, "make_rule");
            return [lambda](const Problem& p) {
                return extend(
                    [lambda](const Problem& q) {
                        return geometric_zero_needs(q, lambda);
                    },
                    p);
            };
        case RuleKind::ExtendedSerial:
            return [](const Problem& p) {
                return extend([](const Problem& q) { return serial_zero_needs(q); },
                              p);
            };
    }
    throw std::invalid_argument("make_rule: unknown rule kind");
}

std::string rule_name(const RuleSpec& spec) {
    switch (spec.kind) {
        case RuleKind::Geometric:
            return "geometric(lambda=" + std::to_string(spec.lambda) + ")";
        case RuleKind::Serial: return "serial";
        case RuleKind::FullTransfer: return "full-transfer";
        case RuleKind::NoTransfer: return "no-transfer";
        case RuleKind::BalancedTransfer: return "balanced-transfer";
        case RuleKind::GeometricZeroNeeds:
            return "geometric-zero-needs(lambda=" + std::to_string(spec.lambda) + ")";
        case RuleKind::SerialZeroNeeds: return "serial-zero-needs";
        case RuleKind::ExtendedGeometric:
            return "extended-geometric(lambda=" + std::to_string(spec.lambda) + ")";
        case RuleKind::ExtendedSerial: return "extended-serial";
    }
    return "?";
}

std::optional<RuleSpec> rule_from_string(const std::string& name,
                                         std::optional<double> lambda) {
    RuleSpec spec;
    if (name == "geometric") {
        spec.kind = RuleKind::Geometric;
        if (!lambda) return std::nullopt;  // geometric needs an explicit lambda
        spec.lambda = *lambda;
    } else if (name == "serial") {
        spec.kind = RuleKind::Serial;
    } else if (name == "full-transfer") {
        spec.kind = RuleKind::FullTransfer;
        spec.lambda = 0.0;
    } else if (name == "no-transfer") {
        spec.kind = RuleKind::NoTransfer;
        spec.lambda = 1.0;
    } else if (name == "balanced") {
        spec.kind = RuleKind::BalancedTransfer;
        spec.lambda = 0.5;
    } else if (name == "geometric-zero-needs") {
        spec.kind = RuleKind::GeometricZeroNeeds;
        if (!lambda) return std::nullopt;
        spec.lambda = *lambda;
    } else if (name == "serial-zero-needs") {
        spec.kind = RuleKind::SerialZeroNeeds;
    } else if (name == "extended-geometric") {
        spec.kind = RuleKind::ExtendedGeometric;
        if (!lambda) return std::nullopt;
        spec.lambda = *lambda;
    } else if (name == "extended-serial") {
        spec.kind = RuleKind::ExtendedSerial;
    } else {
        return std::nullopt;
    }
    if (spec.kind != RuleKind::Geometric &&
        spec.kind != RuleKind::GeometricZeroNeeds &&
        spec.kind != RuleKind::ExtendedGeometric && lambda &&
        *lambda != spec.lambda) {
        return std::nullopt;  // lambda given for a rule that does not take one
    }
    return spec;
}

}  // namespace hrs
