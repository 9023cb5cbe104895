#pragma once

#include <doctest.h>

#include <hypertorsion/hypertorsion.hpp>
#include <hypertorsion/selftest/generators.hpp>
#include <hypertorsion/selftest/oracles.hpp>

namespace doctest {
template <>
struct StringMaker<hypertorsion::Elem> {
    static String convert(const hypertorsion::Elem& e) { return e.to_string().c_str(); }
};
template <>
struct StringMaker<hypertorsion::Poly> {
    static String convert(const hypertorsion::Poly& p) { return p.to_string().c_str(); }
};
} // namespace doctest

namespace ht = hypertorsion;

inline ht::Poly P(const char* text, const ht::Field& f) { return ht::parse_poly(text, f); }
