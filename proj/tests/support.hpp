#pragma once

#include "mildisc/dataset.hpp"
#include "mildisc/error.hpp"

#include <doctest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

inline mildisc::Dataset csv(const std::string& text, const mildisc::SchemaHint& hint = {}) {
    std::istringstream in(text);
    return mildisc::parse_csv(in, hint, "t");
}

template <typename Fn>
mildisc::ErrorKind kind_of(Fn&& fn) {
    try {
        fn();
    } catch (const mildisc::Error& e) {
        return e.kind();
    }
    FAIL("no mildisc::Error thrown");
    return mildisc::ErrorKind::contract;
}

/// Continuous columns plus a class column of codes 1..s.
inline mildisc::Dataset table(const std::vector<std::vector<double>>& continuous, const std::vector<int>& classes,
                              std::size_t s) {
    std::vector<mildisc::AttributeSpec> attrs;
    std::vector<std::vector<double>> cols;
    for (std::size_t a = 0; a < continuous.size(); ++a) {
        attrs.push_back({"x" + std::to_string(a), mildisc::AttributeKind::continuous, {}});
        cols.push_back(continuous[a]);
    }
    mildisc::AttributeSpec cls{"class", mildisc::AttributeKind::class_label, {}};
    for (std::size_t c = 1; c <= s; ++c) cls.values.push_back("c" + std::to_string(c));
    attrs.push_back(cls);
    cols.emplace_back(classes.begin(), classes.end());
    return mildisc::Dataset("t", attrs, cols);
}

/// Random column shapes used by the property tests.
inline std::vector<double> random_column(std::mt19937_64& rng, std::size_t m) {
    std::vector<double> v(m);
    switch (rng() % 5) {
    case 0: {
        std::uniform_real_distribution<double> u(-5.0, 5.0);
        for (auto& x : v) x = u(rng);
        break;
    }
    case 1: {  // few distinct values, many ties
        std::uniform_int_distribution<int> d(0, 4);
        for (auto& x : v) x = d(rng);
        break;
    }
    case 2: {  // clusters
        std::normal_distribution<double> a(0.0, 0.1), b(3.0, 1.0);
        for (auto& x : v) x = rng() % 3 ? a(rng) : b(rng);
        break;
    }
    case 3: {  // grid values that sit on subinterval edges
        std::uniform_int_distribution<int> d(0, 40);
        for (auto& x : v) x = 0.1 + 0.02 * d(rng);
        break;
    }
    default: {
        std::exponential_distribution<double> e(1.0);
        for (auto& x : v) x = e(rng);
        break;
    }
    }
    return v;
}

} // namespace testing
