#pragma once

#include "doctest.h"
#include "mlfrac/types.hpp"

namespace mlfrac::testing {

inline Complex C(double re, double im = 0.0) { return Complex{static_cast<Real>(re), static_cast<Real>(im)}; }

inline void check_close(const Complex& got, const Complex& want, Real rel, Real abs_floor = 0) {
    const Real err = std::abs(got - want);
    const Real bound = rel * std::max(std::abs(want), abs_floor);
    INFO("got (" << static_cast<double>(got.real()) << ", " << static_cast<double>(got.imag()) << ") want ("
                 << static_cast<double>(want.real()) << ", " << static_cast<double>(want.imag()) << ") err "
                 << static_cast<double>(err));
    CHECK(err <= bound);
}

}  // namespace mlfrac::testing
