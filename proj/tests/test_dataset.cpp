#include "support.hpp"

#include "mildisc/dataset.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

using namespace mildisc;
using testing::csv;
using testing::kind_of;

TEST_CASE("csv: class codes follow first appearance") {
    const auto d = csv("x,y,label\n1,2,a\n3,4,b\n5,6,a\n");
    CHECK(d.rows() == 3);
    CHECK(d.class_index() == 2);
    CHECK(d.class_count() == 2);
    CHECK(d.attribute(2).code_of("a") == 1);
    CHECK(d.attribute(2).code_of("b") == 2);
    CHECK(d.class_codes() == std::vector<int>{1, 2, 1});
    CHECK(d.attribute(0).is_continuous());
}

TEST_CASE("csv: iris file shape") {
    const auto d = load_dataset(MIL_DATA_DIR "/uci/iris.csv");
    CHECK(d.rows() == 150);
    CHECK(d.class_count() == 3);
    std::size_t continuous = 0;
    for (const auto& a : d.attributes()) continuous += a.is_continuous();
    CHECK(continuous == 4);
}

TEST_CASE("csv: missing continuous cell") {
    const auto d = csv("a,b,c\n1.0,?,x\n");
    CHECK(d.rows() == 1);
    CHECK(is_missing(d.cell(0, 1)));
    CHECK(d.cell(0, 0) == 1.0);
    const auto e = csv("a,b,c\n1.0,,x\n2,3,y\n");
    CHECK(is_missing(e.cell(0, 1)));
}

TEST_CASE("csv: quoting, trimming and nominal inference") {
    const auto d = csv("name,v,cls\n\"a, b\", 1 ,p\nplain,2,q\n");
    CHECK_FALSE(d.attribute(0).is_continuous());
    CHECK(d.attribute(0).value_of(1) == "a, b");
    CHECK(d.cell(0, 1) == 1.0);
}

TEST_CASE("csv: rows with a missing class are dropped and counted") {
    const auto d = csv("a,c\n1,x\n2,?\n3,y\n");
    CHECK(d.rows() == 2);
    CHECK(d.dropped_rows() == 1);
}

TEST_CASE("csv: errors") {
    CHECK(kind_of([] { csv("a,b,c\n1,2,x\n1,2\n"); }) == ErrorKind::structural);
    CHECK(kind_of([] { csv("a,b,c\n"); }) == ErrorKind::empty_dataset);
    CHECK(kind_of([] { csv("a,c\n1,?\n2,?\n"); }) == ErrorKind::unusable_dataset);
    CHECK(kind_of([] { load_dataset("/nonexistent/file.csv"); }) == ErrorKind::io);
    try {
        csv("a,b,c\n1,2,x\n1,2,y\n3\n");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    }
}

TEST_CASE("csv: schema hint picks the class column") {
    SchemaHint hint;
    hint.class_index = 0;
    const auto d = csv("cls,x\na,1\nb,2\n", hint);
    CHECK(d.class_index() == 0);
    CHECK(d.attribute(1).is_continuous());
}

TEST_CASE("arff: declarations map to kinds and codes") {
    std::istringstream in("% comment\n@relation flowers\n@attribute petal numeric\n"
                          "@attribute colour {red,blue}\n@attribute class {no,yes}\n@data\n"
                          "1.5,blue,yes\n?,red,no\n");
    const auto d = parse_arff(in);
    CHECK(d.name() == "flowers");
    CHECK(d.attribute(0).is_continuous());
    CHECK(d.attribute(1).kind == AttributeKind::nominal);
    CHECK(d.attribute(2).code_of("no") == 1);
    CHECK(d.attribute(2).code_of("yes") == 2);
    CHECK(d.class_codes() == std::vector<int>{2, 1});
    CHECK(d.cell(0, 1) == 2.0);
    CHECK(is_missing(d.cell(1, 0)));
}

TEST_CASE("arff: errors") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return parse_arff(in);
    };
    CHECK(kind_of([&] { parse("@relation r\n@attribute a numeric\n@attribute c {x,y}\n@data\n1\n"); }) ==
          ErrorKind::structural);
    CHECK(kind_of([&] { parse("@relation r\n@attribute notes string\n@attribute c {x}\n@data\n"); }) ==
          ErrorKind::unsupported_feature);
    CHECK(kind_of([&] { parse("@relation r\n@attribute d date\n@attribute c {x}\n@data\n"); }) ==
          ErrorKind::unsupported_feature);
    CHECK(kind_of([&] { parse("@relation r\n@bogus\n@data\n"); }) == ErrorKind::structural);
    try {
        parse("@relation r\n@attribute notes string\n@attribute c {x}\n@data\n");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("notes") != std::string::npos);
    }
}

TEST_CASE("csv round trip reproduces the dataset") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng() % 30;
        std::vector<std::vector<double>> cols(2);
        for (auto& c : cols) {
            c = testing::random_column(rng, m);
            for (auto& x : c) {
                if (rng() % 7 == 0) x = missing_value;
            }
        }
        // keep the column continuous on re-read: at least one present cell
        for (auto& c : cols) c[0] = 0.25;
        std::vector<int> cls(m);
        for (auto& c : cls) c = 1 + static_cast<int>(rng() % 3);
        const auto d = testing::table(cols, cls, 3);
        std::stringstream buf;
        write_csv(d, buf);
        const auto back = parse_csv(buf, schema_of(d), "t");
        // class dictionary is rebuilt by first appearance
        for (std::size_t a = 0; a < 2; ++a) {
            const auto x = d.column(a), y = back.column(a);
            REQUIRE(x.size() == y.size());
            for (std::size_t i = 0; i < x.size(); ++i) {
                CHECK((x[i] == y[i] || (is_missing(x[i]) && is_missing(y[i]))));
            }
        }
        for (std::size_t r = 0; r < m; ++r) {
            CHECK(back.attribute(2).value_of(back.class_codes()[r]) == d.attribute(2).value_of(d.class_codes()[r]));
        }
    }
}

TEST_CASE("round trip of a parsed file is exact") {
    const auto d = load_dataset(MIL_DATA_DIR "/uci/glass.csv");
    std::stringstream buf;
    write_csv(d, buf);
    CHECK(parse_csv(buf, schema_of(d), d.name()) == d);
}

TEST_CASE("attribute_stats") {
    const auto a = testing::table({{0.50, 0.10, 0.20, 0.15, 0.25, 0.31, 0.71, 0.52, 0.82, 0.131, 0.90, 0.12}},
                                  std::vector<int>(12, 1), 1);
    const auto s = attribute_stats(a, 0);
    CHECK(s.d_min == 0.1);
    CHECK(s.d_max == 0.90);
    CHECK(s.missing_count == 0);

    const auto c = attribute_stats(testing::table({{5, 5, 5}}, {1, 1, 1}, 1), 0);
    CHECK(c.d_min == 5);
    CHECK(c.d_max == 5);
    CHECK(c.missing_count == 0);

    const auto m = attribute_stats(testing::table({{1.0, missing_value, 3.0}}, {1, 1, 1}, 1), 0);
    CHECK(m.d_min == 1.0);
    CHECK(m.d_max == 3.0);
    CHECK(m.missing_count == 1);

    CHECK(kind_of([] { attribute_stats(testing::table({{1.0}}, {1}, 1), 1); }) == ErrorKind::type);
    CHECK(kind_of([] { attribute_stats(testing::table({{missing_value, missing_value}}, {1, 1}, 1), 0); }) ==
          ErrorKind::all_missing);
}
