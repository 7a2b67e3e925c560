#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "powerpath/constructions.hpp"

namespace powerpath {

using Rational = boost::rational<std::int64_t>;

// One split n = n0 + n1 of the Turan-number objective.
struct SplitBreakdown {
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    std::int64_t path_part = 0;   // f(n0, s)
    std::int64_t cross = 0;       // n0 * n1
    std::int64_t turan_part = 0;  // t(n1, p-1)
    std::int64_t total = 0;       // path_part + cross + turan_part
    // The objective as literally printed, f(n0,s) + n0*t(n1,p); kept for reports.
    std::int64_t literal_total = 0;
};

struct TuranEvaluation {
    std::int64_t value = 0;
    std::vector<std::int64_t> argmax_splits;
    // Feasible splits only (n0 = 0 is the sole feasible split when s < 2).
    std::vector<SplitBreakdown> breakdown;
    SParameter s_used;
    std::int64_t literal_value = 0;
    std::vector<std::int64_t> literal_argmax_splits;
};

// ex(n, P_s) when it exists: s >= 2 uses t C(s-1,2) + C(r,2); s <= 1 is only
// feasible for n = 0.
std::optional<std::int64_t> path_free_max_edges(std::int64_t n, std::int64_t s);

// f(n,k) = ex(n,P_k) = t C(k-1,2) + C(r,2) with n = (k-1)t + r. Requires k >= 2.
std::int64_t path_turan_value(std::int64_t n, std::int64_t k);

// max over n0 of f(n0,s) + n0 n1 + t(n1,p-1). p = 1 delegates to f(n,k).
TuranEvaluation power_path_turan_value(std::int64_t n, std::int64_t k, std::int64_t p);

// (k-2) n / 2, exact.
Rational erdos_gallai_bound(std::int64_t n, std::int64_t k);

// max{h(n,k-1,1), h(n,k-1,t-1)} with t = floor(k/2); terms whose H-parameters are
// invalid are skipped, and ParameterError is raised when neither is valid.
std::int64_t connected_path_bound(std::int64_t n, std::int64_t k);

// t(n,p) + (s-2) n / (2p), without the o(n) term.
Rational asymptotic_lower_bound(std::int64_t n, std::int64_t k, std::int64_t p);

}  // namespace powerpath
