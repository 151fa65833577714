#include "doctest.h"
#include "oracle.hpp"

#include "json.hpp"

using namespace sl2wt;
using oracle::q;
using nlohmann::json;

TEST_CASE("weight JSON") {
    CHECK(json::parse(to_json(Weight(q(-2, 4), q(3)))) == json::parse(R"({"a":[-1,2],"b":[3,1]})"));
    CHECK(weight_from_json(R"({"a":[2,6],"b":[0,1]})") == Weight(q(1, 3)));
    CHECK_THROWS_AS(weight_from_json(R"({"a":[1,0],"b":[0,1]})"), ParseError);
    CHECK_THROWS_AS(weight_from_json("[1,2]"), ParseError);
    std::mt19937_64 rng(1);
    for (int n = 0; n < 100; ++n) {
        Weight w = oracle::random_weight(rng, n % 2 == 0);
        CHECK(weight_from_json(to_json(w)) == w);
    }
}

TEST_CASE("label schema") {
    auto level = admissible_level(5, 3);
    auto x = parse_c_label(level, R"({"cat":"C","flow":2,"base":{"type":"D+","r":1,"s":2}})");
    CHECK(x == d_plus(level, 1, 2, 2));
    auto e = parse_c_label(level, R"({"cat":"C","flow":0,"base":{"type":"E","r":4,"s":2,"lam":{"a":[1,5],"b":[1,1]}}})");
    CHECK(e == typical(level, 1, 1, Weight(q(1, 5), q(1))));
    auto j = json::parse(to_json(e));
    CHECK(j["cat"] == "C");
    CHECK(j["base"]["type"] == "E");
    CHECK(j["base"]["r"] == 1);

    auto y = parse_a_label(level, R"({"cat":"A","r":4,"s":2,"flow":-1,"lam":{"a":[7,3],"b":[0,1]}})");
    CHECK(y == a_label(level, 1, 1, -1, Weight(q(1, 3))));
    CHECK_THROWS_AS(parse_c_label(level, R"({"cat":"C","flow":0,"base":{"type":"X","r":1,"s":1}})"), ParseError);
    CHECK_THROWS_AS(parse_c_label(level, "{not json"), ParseError);
    CHECK_THROWS_AS(parse_c_label(level, R"({"cat":"C","flow":0,"base":{"type":"D+","r":9,"s":1}})"), OutOfKacTable);
}

TEST_CASE("compact syntax") {
    auto level = admissible_level(5, 3);
    CHECK(parse_c_label(level, "D+(1,1)@0") == d_plus(level, 1, 1));
    CHECK(parse_c_label(level, "D-(1,1)@0") == d_minus(level, 1, 1));
    CHECK(parse_c_label(level, "L(1)@2") == l_r0(level, 1, 2));
    CHECK(parse_c_label(level, "E(1/5+w;4,2)@-3") == typical(level, 1, 1, Weight(q(1, 5), q(1)), -3));
    CHECK(parse_a_label(level, "M(1,2)xPi(1;-5/6)") == a_label(level, 1, 2, 1, Weight(q(1, 6))));
    CHECK(is_a_label_text("M(1,1)xPi(0;0)"));
    CHECK(is_a_label_text(R"({"cat":"A","r":1,"s":1,"flow":0,"lam":{"a":[0,1],"b":[0,1]}})"));
    CHECK_FALSE(is_a_label_text("D+(1,1)@0"));
    // The flow suffix is optional and defaults to 0.
    CHECK(parse_c_label(level, "D+(1,1)") == d_plus(level, 1, 1));
    CHECK_THROWS_AS(parse_c_label(level, "D+(1,1)@x"), ParseError);
    CHECK_THROWS_AS(parse_c_label(level, "Q(1,1)@0"), ParseError);
    CHECK_THROWS_AS(parse_c_label(level, "E(-5/3;1,1)@0"), NotSimple);
    CHECK_THROWS_AS(parse_a_label(level, "M(1,1)xPi(0)"), ParseError);
}

TEST_CASE("JSON round trip is byte-identical after canonicalization") {
    std::mt19937_64 rng(2);
    for (auto [u, v] : oracle::test_levels()) {
        auto level = admissible_level(u, v);
        for (int n = 0; n < 100; ++n) {
            auto x = oracle::random_c_label(level, rng);
            std::string s = to_json(x);
            CHECK(to_json(parse_c_label(level, s)) == s);
            CHECK(parse_c_label(level, to_string(x)) == x);
            auto y = oracle::random_a_label(level, rng);
            std::string t = to_json(y);
            CHECK(to_json(parse_a_label(level, t)) == t);
            CHECK(parse_a_label(level, to_string(y)) == y);
        }
    }
}

TEST_CASE("objects, reports and tables") {
    auto level = admissible_level(5, 3);
    auto obj = json::parse(to_json(level, CObject::projective(1, 1, 0)));
    CHECK(obj["layers"].size() == 3);
    auto m = json::parse(to_json(level, build_M(level, 1, 2, 0)));
    CHECK(m["layers"].size() == 2);
    auto diagram = loewy_diagram(loewy_A(level, build_M(level, 1, 2, 0)));
    CHECK(diagram.find('|') != std::string::npos);

    auto rep = run_pipeline(admissible_level(3, 2));
    auto j = json::parse(to_json(rep));
    CHECK(j["verdict"] == true);
    CHECK(render_report(rep).find("verdict true") != std::string::npos);

    auto kac = json::parse(kac_table_json(level));
    REQUIRE(kac["table"].size() == 4 * 4);
    CHECK(kac["c"] == json::parse("[-3,5]"));
    for (const auto& row : kac["table"]) {
        int r = row["r"], s = row["s"];
        CHECK(row.contains("h") == (s >= 1 && s <= 2));
        Rational lam = q(row["lambda"][0].get<long>(), row["lambda"][1].get<long>());
        CHECK(lam == oracle::lambda_rs(5, 3, r, s));
    }
    CHECK(kac_table_text(level).find("-1/20") != std::string::npos);

    GrothC g(d_plus(level, 1, 1));
    g.add(d_plus(level, 2, 1), 3);
    CHECK(json::parse(to_json(g)).size() == 2);
}
