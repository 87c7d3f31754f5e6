#pragma once

#include "torus/error.hpp"

#include <gtest/gtest.h>

template <class F>
void expect_code(F&& f, torus::Errc code) {
    try {
        f();
        ADD_FAILURE() << "expected " << torus::errc_name(code);
    } catch (const torus::Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

#include "torus/polyring.hpp"

#include <ostream>

namespace torus {

inline void PrintTo(const IntPolynomial& f, std::ostream* os) { *os << f.to_string(); }

} // namespace torus
