#include "hrs/core.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hrs {

const char* to_string(DomainClass d) {
    switch (d) {
        case DomainClass::ZZero: return "Zzero";
        case DomainClass::Z: return "Z";
        case DomainClass::ZStar: return "Zstar";
        case DomainClass::Invalid: return "Invalid";
    }
    return "?";
}

std::optional<DomainClass> domain_from_string(const std::string& s) {
    if (s == "Z") return DomainClass::Z;
    if (s == "Zstar" || s == "ZStar" || s == "Z*") return DomainClass::ZStar;
    if (s == "Zzero" || s == "ZZero" || s == "Z0") return DomainClass::ZZero;
    if (s == "Invalid") return DomainClass::Invalid;
    return std::nullopt;
}

double Problem::total_revenue() const {
    return std::accumulate(revenues.begin(), revenues.end(), 0.0);
}

double Problem::total_need() const {
    return std::accumulate(needs.begin(), needs.end(), 0.0);
}

double Allocation::total() const {
    return std::accumulate(payoffs.begin(), payoffs.end(), 0.0);
}

std::optional<std::string> structural_error(const Problem& p) {
    const std::size_t n = p.agents.size();
    if (n == 0) return "problem has no agents";
    if (p.revenues.size() != n)
        return "revenues length " + std::to_string(p.revenues.size()) +
               " does not match agent count " + std::to_string(n);
    if (p.needs.size() != n)
        return "needs length " + std::to_string(p.needs.size()) +
               " does not match agent count " + std::to_string(n);
    if (p.agents.front() < 1) return "agent ids must be positive";
    for (std::size_t i = 1; i < n; ++i) {
        if (p.agents[i] <= p.agents[i - 1])
            return "agent ids must be strictly increasing";
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(p.revenues[i] >= 0.0)) return "negative or non-finite revenue";
        if (!(p.needs[i] >= 0.0)) return "negative or non-finite need";
        if (std::isinf(p.revenues[i]) || std::isinf(p.needs[i]))
            return "non-finite entry";
    }
    return std::nullopt;
}

DomainClass classify(const Problem& p) {
    if (auto err = structural_error(p))
        throw std::invalid_argument("classify: " + *err);
    bool all_zero = true;
    bool componentwise = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.needs[i] != 0.0) all_zero = false;
        if (p.revenues[i] < p.needs[i]) componentwise = false;
    }
    if (all_zero) return DomainClass::ZZero;
    if (componentwise) return DomainClass::Z;
    if (p.total_revenue() >= p.total_need()) return DomainClass::ZStar;
    return DomainClass::Invalid;
}

bool within_domain(DomainClass instance, DomainClass domain) {
    if (instance == DomainClass::Invalid) return false;
    switch (domain) {
        case DomainClass::ZZero: return instance == DomainClass::ZZero;
        case DomainClass::Z:
            return instance == DomainClass::ZZero || instance == DomainClass::Z;
        case DomainClass::ZStar: return true;
        case DomainClass::Invalid: return false;
    }
    return false;
}

Canonical canonicalize(const Problem& p) {
    if (auto err = structural_error(p))
        throw std::invalid_argument("canonicalize: " + *err);
    Canonical c;
    c.original_ids = p.agents;
    c.problem.agents.resize(p.size());
    std::iota(c.problem.agents.begin(), c.problem.agents.end(), 1);
    c.problem.revenues = p.revenues;
    c.problem.needs = p.needs;
    return c;
}

bool approx_equal(const Allocation& x, const Allocation& y, Tolerance tol) {
    if (x.agents != y.agents)
        throw std::invalid_argument("approx_equal: mismatched agent sequences");
    for (std::size_t i = 0; i < x.payoffs.size(); ++i) {
        if (std::abs(x.payoffs[i] - y.payoffs[i]) > tol.abs_tol) return false;
    }
    return true;
}

}  // namespace hrs
