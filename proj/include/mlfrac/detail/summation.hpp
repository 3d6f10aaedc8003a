#pragma once

#include <algorithm>

#include "mlfrac/fox_wright.hpp"

namespace mlfrac::detail {

struct Term {
    Complex value;
    bool structural_zero = false;  // dropped by a Gamma pole; not evidence of convergence
    bool terminal = false;         // no further nonzero terms (polynomial case)
};

struct SeriesSum {
    Complex value;
    long terms = 0;
    Real tail = 0;     // relative to max(|value|, largest term)
    Real abs_sum = 0;  // sum of |term|, for conditioning estimates
    Status status = Status::converged;
};

// Stops when two consecutive nonzero terms fall below tol * max(|partial|, largest term)
// and the geometric tail estimate is also below that level.
template <class TermFn>
SeriesSum sum_series(TermFn&& term, Real tol, long cap) {
    SeriesSum out;
    Complex sum = 0;
    Real prev = -1, largest = 0;
    int small_run = 0;
    for (long n = 0; n < cap; ++n) {
        const Term t = term(n);
        out.terms = n + 1;
        if (t.terminal) {
            out.value = sum;
            out.status = Status::polynomial;
            out.tail = 0;
            return out;
        }
        if (t.structural_zero) continue;
        sum += t.value;
        const Real mag = std::abs(t.value);
        out.abs_sum += mag;
        largest = std::max(largest, mag);
        const Real scale = std::max(std::abs(sum), largest);
        if (mag <= tol * scale) {
            ++small_run;
            if (small_run >= 2) {
                Real est = mag;
                if (prev > 0 && mag < prev) {
                    const Real rho = mag / prev;
                    est = mag * rho / (1.0L - rho);
                }
                if (est / scale <= tol) {
                    out.value = sum;
                    out.tail = est / scale;
                    out.status = Status::converged;
                    return out;
                }
            }
        } else {
            small_run = 0;
        }
        prev = mag;
    }
    out.value = sum;
    out.tail = prev / std::max(std::abs(sum), largest);
    out.status = Status::truncated;
    return out;
}

inline EvalResult to_result(const SeriesSum& s) {
    return {s.value, s.terms, s.tail, s.status};
}

}  // namespace mlfrac::detail
