#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "tabinv/dyck.hpp"
#include "tabinv/genfun.hpp"
#include "tabinv/serialize.hpp"

using namespace tabinv;
using nlohmann::json;

TEST_CASE("text parsing of shapes, contents, and fillings") {
    CHECK(parse_shape("4,4,3,2") == Shape({4, 4, 3, 2}));
    CHECK(parse_shape("2^3") == Shape({2, 2, 2}));
    CHECK(parse_shape("2^2,1^3") == Shape({2, 2, 1, 1, 1}));
    CHECK_THROWS_AS(parse_shape("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape(""), std::invalid_argument);

    CHECK(parse_content("1^2,2^2,3") == Content({2, 2, 1}));
    CHECK(parse_content("1,2,3") == Content::standard(3));
    CHECK_THROWS_AS(parse_content("2,3"), std::invalid_argument);  // value 1 missing

    Filling f = parse_filling_text("1 2 6 10\n2 5 8 10\n3 5 9\n4 7\n");
    CHECK(f == fixtures::semistandard_example());
    CHECK(parse_filling_text(filling_to_text(f)) == f);
    CHECK_THROWS_AS(parse_filling_text(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_filling_text("1 2\n3 4 5\n"), std::invalid_argument);  // ragged up
}

TEST_CASE("mpz json form") {
    CHECK(to_json(mpz_class(42)) == json(42));
    CHECK(to_json(mpz_class(-7)) == json(-7));
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    CHECK(to_json(big) == json("1000000000000000000000000000000"));
}

TEST_CASE("filling json round trip") {
    Filling f = fixtures::semistandard_example();
    json j = filling_to_json(f);
    CHECK(j.at("shape") == json({4, 4, 3, 2}));
    CHECK(filling_from_json(j) == f);
    CHECK(filling_from_json(json{{"rows", {{1, 2}, {3}}}}) == Filling({{1, 2}, {3}}));
    CHECK_THROWS_AS(filling_from_json(json{{"rows", {{1, 2}}}, {"shape", {3}}}),
                    std::invalid_argument);
}

TEST_CASE("inversion pair json") {
    Filling f = fixtures::inverted_example_a();
    auto pairs = inversion_pairs(f);
    REQUIRE(!pairs.empty());
    json j = inversion_pair_to_json(pairs.front(), f);
    CHECK(j.at("col") == pairs.front().column);
    CHECK(j.at("values")[0].get<int>() < j.at("values")[1].get<int>());
}

TEST_CASE("polynomial json") {
    CHECK(qpoly_to_json(q_binomial(4, 2)) == json{{"coeffs", {1, 1, 2, 1, 1}}});
    CHECK(qpoly_to_json(QPolynomial{}) == json{{"coeffs", {0}}});
}

TEST_CASE("histogram json and csv") {
    InversionHistogram h = histogram(Shape({2, 2, 2}), Content::standard(6));
    json j = histogram_to_json(h, Shape({2, 2, 2}), Content::standard(6));
    CHECK(j.at("lambda") == json({2, 2, 2}));
    CHECK(j.at("mu") == json({1, 1, 1, 1, 1, 1}));
    CHECK(j.at("counts").at("0") == 5);
    CHECK(j.at("counts").at("6") == 1);

    CHECK(histogram_to_csv(h) == "k,count\n0,5\n1,16\n2,25\n3,24\n4,14\n5,5\n6,1\n");
}

TEST_CASE("path text and return table json") {
    CHECK(path_to_text(syt_to_path(fixtures::two_row_example())) == "1,1,2,2,1,2,1");

    Shape shape({2, 2, 2});
    json j = return_table_to_json(return_table(shape), shape);
    CHECK(j.at("lambda") == json({2, 2, 2}));
    mpz_class total = 0;
    for (const auto& entry : j.at("profiles")) total += entry.at("count").get<long>();
    CHECK(total == 5);
}
