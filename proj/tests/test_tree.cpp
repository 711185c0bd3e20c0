#include "support.hpp"

#include "mildisc/tree.hpp"

#include <fstream>

using namespace mildisc;
using testing::kind_of;

namespace {

Dataset nominal(const std::string& text) { return testing::csv(text); }

} // namespace

TEST_CASE("single-class training set is a single leaf") {
    const auto d = nominal("a,b,c\nx,p,yes\ny,q,yes\nx,q,yes\n");
    const auto model = train_tree(d);
    CHECK(model.nodes().size() == 1);
    CHECK(model.depth() == 0);
    CHECK(predict(model, d.row(0)) == 1);
}

TEST_CASE("xor needs depth two and fits the training rows") {
    // codes: "0"->1, "1"->2 once the columns are forced nominal
    SchemaHint hint;
    hint.kinds = {{0, AttributeKind::nominal}, {1, AttributeKind::nominal}};
    const auto x = testing::csv("a,b,c\n0,0,n\n0,1,y\n1,0,y\n1,1,n\n", hint);
    const auto model = train_tree(x);
    CHECK(model.depth() == 2);
    CHECK(accuracy(model, x) == 100.0);
}

TEST_CASE("an attribute equal to the class gives depth one") {
    const auto d = nominal("noise,copy,cls\nu,a,a\nv,b,b\nu,b,b\nu,a,a\nv,a,a\nv,b,b\n");
    const auto model = train_tree(d);
    CHECK(model.depth() == 1);
    CHECK(model.nodes()[0].attribute == 1);
    CHECK(accuracy(model, d) == 100.0);
}

TEST_CASE("prediction paths and fallback") {
    const auto d = nominal("f,cls\nred,a\nred,a\nblue,b\ngreen,b\n");
    const auto model = train_tree(d);
    CHECK(predict(model, d.row(0)) == 1);
    CHECK(predict(model, d.row(2)) == 2);
    // code 9 never reached the root split: root majority (tie a/b -> smaller code)
    const std::vector<double> unseen{9.0, 1.0};
    CHECK(predict(model, unseen) == model.nodes()[0].majority);
    CHECK(model.nodes()[0].majority == 1);
    const std::vector<double> short_row{1.0};
    CHECK(kind_of([&] { predict(model, short_row); }) == ErrorKind::contract);
}

TEST_CASE("constant model") {
    const std::vector<TreeModel::Node> nodes{TreeModel::Node{-1, 2, {}}};
    const TreeModel model(nodes, 3);
    CHECK(predict(model, std::vector<double>{1, 5, 1}) == 2);
    CHECK(predict(model, std::vector<double>{3, 1, 2}) == 2);
}

TEST_CASE("continuous attributes are rejected") {
    const auto d = testing::csv("x,c\n1.5,a\n2.5,b\n");
    CHECK(kind_of([&] { train_tree(d); }) == ErrorKind::contract);
}

TEST_CASE("accuracy") {
    const auto d = nominal("f,cls\nred,a\nblue,b\nred,a\nblue,b\n");
    const auto model = train_tree(d);
    CHECK(accuracy(model, d) == 100.0);
    const auto three_of_four = nominal("f,cls\nred,a\nblue,b\nred,a\nblue,a\n");
    // same dictionaries: red->1 blue->2, a->1 b->2
    CHECK(accuracy(model, three_of_four) == 75.0);
}

TEST_CASE("majority leaf on haberman matches the class prior") {
    const auto d = load_dataset(MIL_DATA_DIR "/uci/haberman.csv");
    const TreeModel majority({TreeModel::Node{-1, 1, {}}}, d.attribute_count());
    std::size_t first = 0;
    for (int c : d.class_codes()) first += c == 1;
    CHECK(first == 225);
    CHECK(d.rows() == 306);
    CHECK(accuracy(majority, d) == doctest::Approx(100.0 * 225 / 306));
    CHECK(accuracy(majority, d) == doctest::Approx(73.53).epsilon(1e-3));
}

TEST_CASE("an empty test set cannot be built") {
    const auto d = nominal("f,cls\nred,a\n");
    CHECK(kind_of([&] { d.select_rows(std::vector<std::size_t>{}); }) == ErrorKind::empty_dataset);
}

TEST_CASE("missing nominal cells form their own branch") {
    const auto d = nominal("f,cls\nred,a\n?,b\nred,a\n?,b\n");
    const auto model = train_tree(d);
    CHECK(accuracy(model, d) == 100.0);
}
