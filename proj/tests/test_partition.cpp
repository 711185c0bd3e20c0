#include "fixtures.hpp"
#include "support.hpp"

#include "mildisc/mil.hpp"

#include <cmath>

using namespace mildisc;
using testing::kind_of;

TEST_CASE("init_partition on the worked example") {
    const auto col = fixtures::worked_column(fixtures::worked_counts());
    const auto p = init_partition(col, 2, MilParams{20, 3, 0});
    CHECK(p.n == 40);
    CHECK(p.m == 240);
    CHECK(p.ts_base == 6.0);
    CHECK(p.h == doctest::Approx(0.020).epsilon(1e-12));
    CHECK(p.d_min == 0.1);
    CHECK(p.d_max == 0.9);
}

TEST_CASE("n is clamped below m") {
    const std::vector<double> col{1, 2, 3, 4, 5};
    CHECK(init_partition(col, 3, MilParams{20, 3, 0}).n == 4);
    CHECK(init_partition(std::vector<double>{7.0}, 2, MilParams{}).n == 1);
    CHECK(init_partition(col, 1, MilParams{2, 3, 0}).n == 2);
}

TEST_CASE("constant column has zero width") {
    const auto p = init_partition(std::vector<double>{5, 5, 5}, 2, MilParams{});
    CHECK(p.h == 0.0);
    CHECK(p.d_min == 5.0);
    CHECK(p.d_max == 5.0);
}

TEST_CASE("init_partition errors") {
    const std::vector<double> all_missing{missing_value, missing_value};
    CHECK(kind_of([&] { init_partition(all_missing, 2, MilParams{}); }) == ErrorKind::all_missing);
    CHECK(kind_of([] { init_partition(std::vector<double>{1, 2}, 0, MilParams{}); }) == ErrorKind::parameter);
    CHECK(kind_of([] { init_partition(std::vector<double>{1, 2}, 2, MilParams{0, 3, 0}); }) == ErrorKind::parameter);
    CHECK(kind_of([] { init_partition(std::vector<double>{1, 2}, 2, MilParams{20, 0, 0}); }) == ErrorKind::parameter);
}

TEST_CASE("replacement value formula") {
    InitialPartition p;
    p.d_min = 0;
    p.d_max = 10;
    p.m = 10;
    CHECK(replacement_value(p, 5.0) == 5.0);
}

TEST_CASE("g is drawn inside (1, m) and imputed values stay in range") {
    InitialPartition p;
    p.d_min = -2;
    p.d_max = 3;
    p.m = 4;
    for (std::size_t row = 0; row < 5000; ++row) {
        const double g = draw_g(p, ImputeKey{9, 1}, row);
        CHECK(g > 1.0);
        CHECK(g < 4.0);
        const double v = imputed_value(p, ImputeKey{9, 1}, row);
        CHECK(p.covers(v));
    }
}

TEST_CASE("impute_missing") {
    const std::vector<double> full{1, 2, 3};
    const auto p = init_partition(full, 2, MilParams{});
    CHECK(impute_missing(full, p, 7) == full);

    const std::vector<double> holes{1, missing_value, 3, missing_value};
    const auto q = init_partition(holes, 2, MilParams{});
    const auto a = impute_missing(holes, q, 7);
    const auto b = impute_missing(holes, q, 7);
    CHECK(a == b);
    CHECK(a[0] == 1);
    CHECK(a[2] == 3);
    for (double v : a) CHECK((v >= 1 && v <= 3));
    CHECK(impute_missing(holes, q, 8) != a);
}

TEST_CASE("subinterval membership") {
    const auto col = fixtures::worked_column(fixtures::worked_counts());
    const auto p = init_partition(col, 2, MilParams{});
    CHECK(p.subinterval_of(0.10) == 0);
    CHECK(p.subinterval_of(0.119) == 0);
    CHECK(p.subinterval_of(0.121) == 1);
    CHECK(p.subinterval_of(0.90) == 39);
    CHECK(p.subinterval_of(p.boundary(17)) == 17);
}

TEST_CASE("compute_cts") {
    const auto counts = fixtures::worked_counts();
    const auto col = fixtures::worked_column(counts);
    const auto p = init_partition(col, 2, MilParams{});
    const auto cts = compute_cts(col, p);
    CHECK(cts.counts == counts);
    CHECK(cts.total() == 240);

    // m = n, one value per subinterval, d_max closing the last one
    InitialPartition up;
    up.d_min = 0;
    up.d_max = 10;
    up.n = 10;
    up.h = 1;
    up.m = 10;
    std::vector<double> uniform{0.0};
    for (int j = 1; j < 9; ++j) uniform.push_back(j + 0.5);
    uniform.push_back(10.0);
    CHECK(compute_cts(uniform, up).counts == std::vector<std::size_t>(10, 1));

    const std::vector<double> out{0.0, 11.0};
    CHECK(kind_of([&] { compute_cts(out, up); }) == ErrorKind::domain);
    const std::vector<double> miss{1.0, missing_value};
    CHECK(kind_of([&] { compute_cts(miss, up); }) == ErrorKind::contract);
}
