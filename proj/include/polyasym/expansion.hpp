#pragma once

#include "polyasym/complex.hpp"

#include <vector>

namespace polyasym {

template <class T>
struct ExpansionResult {
    T value{};
    std::vector<T> partial_sums;  // S_0 .. S_N
    std::vector<T> terms;         // individual series terms
    unsigned order = 0;           // N, index of the last term included
    Real error_estimate = 0;      // magnitude of the last term
    bool converged = false;       // stopping rule met (adaptive truncation only)
    bool outside_proven_region = false;
};

// Adaptive truncation: stop once `quiet_terms` consecutive terms are below
// rel_tol * |partial sum|, or at max_order.
struct Truncation {
    unsigned max_order = 200;
    Real rel_tol = Real("1e-16");
    unsigned quiet_terms = 2;
};

// Shared bookkeeping for the expansion drivers.
template <class T>
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(ExpansionResult<T>& out) : out_(out) {}

    void add(const T& term)
    {
        sum_ += term;
        out_.terms.push_back(term);
        out_.partial_sums.push_back(sum_);
        out_.order = static_cast<unsigned>(out_.terms.size() - 1);
        out_.error_estimate = abs(term);
        out_.value = sum_;
    }

    // True once the adaptive stopping rule is satisfied.
    bool settled(const Truncation& t)
    {
        if (abs(out_.terms.back()) <= t.rel_tol * abs(sum_))
            ++quiet_;
        else
            quiet_ = 0;
        if (quiet_ >= t.quiet_terms)
            out_.converged = true;
        return out_.converged;
    }

private:
    ExpansionResult<T>& out_;
    T sum_{};
    unsigned quiet_ = 0;
};

}  // namespace polyasym
