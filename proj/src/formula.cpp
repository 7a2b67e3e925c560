#include "powerpath/formula.hpp"

#include <algorithm>
#include <string>

#include "powerpath/errors.hpp"

namespace powerpath {

namespace {

std::int64_t choose2(std::int64_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }

}  // namespace

std::optional<std::int64_t> path_free_max_edges(std::int64_t n, std::int64_t s) {
    if (n < 0) throw ParameterError("negative order");
    if (s < 2) {
        if (n == 0) return 0;
        return std::nullopt;
    }
    const std::int64_t t = n / (s - 1);
    const std::int64_t r = n % (s - 1);
    return t * choose2(s - 1) + choose2(r);
}

std::int64_t path_turan_value(std::int64_t n, std::int64_t k) {
    if (k < 2) throw ParameterError("path_turan_value needs k >= 2");
    return *path_free_max_edges(n, k);
}

TuranEvaluation power_path_turan_value(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (n < 0 || k < 1 || p < 1) throw ParameterError("power_path_turan_value needs n >= 0, k >= 1, p >= 1");
    TuranEvaluation out;
    out.s_used = s_parameter(k, p);
    if (p == 1) {
        const std::int64_t f = path_turan_value(n, k);
        SplitBreakdown row{n, 0, f, 0, 0, f, f};
        out.breakdown.push_back(row);
        out.value = out.literal_value = f;
        out.argmax_splits = out.literal_argmax_splits = {n};
        return out;
    }
    bool any = false;
    for (std::int64_t n0 = 0; n0 <= n; ++n0) {
        const auto f = path_free_max_edges(n0, out.s_used.s);
        if (!f) continue;
        SplitBreakdown row;
        row.n0 = n0;
        row.n1 = n - n0;
        row.path_part = *f;
        row.cross = n0 * row.n1;
        row.turan_part = turan_edge_count(row.n1, p - 1);
        row.total = row.path_part + row.cross + row.turan_part;
        row.literal_total = row.path_part + n0 * turan_edge_count(row.n1, p);
        if (!any || row.total > out.value) {
            out.value = row.total;
            out.argmax_splits.clear();
        }
        if (row.total == out.value) out.argmax_splits.push_back(n0);
        if (!any || row.literal_total > out.literal_value) {
            out.literal_value = row.literal_total;
            out.literal_argmax_splits.clear();
        }
        if (row.literal_total == out.literal_value) out.literal_argmax_splits.push_back(n0);
        any = true;
        out.breakdown.push_back(row);
    }
    return out;
}

Rational erdos_gallai_bound(std::int64_t n, std::int64_t k) {
    if (k < 2) throw ParameterError("erdos_gallai_bound needs k >= 2");
    return Rational((k - 2) * n, 2);
}

std::int64_t connected_path_bound(std::int64_t n, std::int64_t k) {
    if (k < 3 || n < k - 1) throw ParameterError("connected_path_bound needs n >= k-1 >= 2");
    const std::int64_t t = k / 2;
    std::optional<std::int64_t> best;
    for (std::int64_t a : {std::int64_t{1}, t - 1}) {
        try {
            const std::int64_t v = h_value(n, k - 1, a);
            best = best ? std::max(*best, v) : v;
        } catch (const ParameterError&) {
        }
    }
    if (!best) throw ParameterError("connected_path_bound: no valid H(n,k-1,a) for n=" + std::to_string(n));
    return *best;
}

Rational asymptotic_lower_bound(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (p < 2) throw ParameterError("asymptotic_lower_bound needs p >= 2");
    const auto sp = s_parameter(k, p);
    return Rational(turan_edge_count(n, p)) + Rational((sp.s - 2) * n, 2 * p);
}

}  // namespace powerpath
