#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hrs {

/// Domain membership of a problem instance, most specific tag first:
/// ZZero (all needs zero) implies Z (componentwise r >= z) implies
/// ZStar (aggregate revenue covers aggregate need).
enum class DomainClass { ZZero, Z, ZStar, Invalid };

const char* to_string(DomainClass d);
std::optional<DomainClass> domain_from_string(const std::string& s);

/// A linear hierarchy with per-agent revenues and needs. Agent ids are
/// strictly increasing positive integers; lower id = lower rank, the last
/// agent is the top of the hierarchy.
struct Problem {
    std::vector<int> agents;
    std::vector<double> revenues;
    std::vector<double> needs;

    std::size_t size() const { return agents.size(); }
    double total_revenue() const;
    double total_need() const;
    double surplus(std::size_t i) const { return revenues[i] - needs[i]; }
};

struct Allocation {
    std::vector<int> agents;
    std::vector<double> payoffs;

    double total() const;
};

struct Tolerance {
    double abs_tol = 1e-9;
};

/// Structural problems (length mismatches, negative entries, bad id order)
/// are a separate channel from domain membership: a structurally broken
/// Problem is never classified, it is rejected outright.
std::optional<std::string> structural_error(const Problem& p);

/// Most specific domain tag for a structurally valid problem.
/// ZZero if all needs are zero; else Z if r >= z componentwise; else
/// ZStar if total revenue covers total need; else Invalid.
DomainClass classify(const Problem& p);

/// True if an instance with class `instance` belongs to the domain
/// denoted by `domain` (Invalid belongs to nothing).
bool within_domain(DomainClass instance, DomainClass domain);

struct Canonical {
    Problem problem;                // agents relabeled to 1..n, same (r, z)
    std::vector<int> original_ids;  // original_ids[i] = source id of canonical agent i+1
};

/// Order-preserving relabeling onto {1,..,n}. Rules are computed on the
/// canonical form and mapped back through original_ids.
Canonical canonicalize(const Problem& p);

/// Componentwise |x_i - y_i| <= abs_tol over identical agent sequences.
bool approx_equal(const Allocation& x, const Allocation& y, Tolerance tol = {});

}  // namespace hrs
