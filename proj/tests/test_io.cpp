#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bridgeland/io.hpp"
#include "fixtures.hpp"

#include <random>

using namespace bridgeland;
using namespace fixtures;
using nlohmann::json;

TEST_CASE("object literals") {
    CHECK(parse_object(P, "O").cls == O(P));
    CHECK(parse_object(P, " O(1,0) ").cls == O(P, 1, 0));
    const ExcObject m = parse_object(P, "O(-1,-2)[1]");
    CHECK(m.cls == O(P, -1, -2));
    CHECK(m.shift == 1);
    CHECK(display_name(m) == "O(-1,-2)[1]");

    CHECK(parse_object(B, "O(E)").cls == O(B, 1, 0));
    CHECK(parse_object(B, "O(F)").cls == O(B, 0, 1));
    CHECK(parse_object(B, "O(-E-2F)[2]") == ExcObject{"", O(B, -1, -2), 2});
    CHECK(parse_object(B, "O(2E+3F)").cls == O(B, 2, 3));
    CHECK(parse_object(B, "O(1,2)").cls == O(B, 1, 2));
    CHECK(parse_object(B, "O(-E-F)").label == "O(-E-F)");

    const ExcObject t = parse_object(B, "T[1]");
    CHECK(t.cls == T());
    CHECK(t.shift == 1);
    CHECK(t.label == "O_E(E)");

    CHECK(parse_object(P, "(3,(1,1),-1)").cls == G());
    CHECK(parse_object(B, "(2, (1,1), -1/2)").cls == G1());
    CHECK(parse_object(B, "(0,(1,0),-1/2)").label == "O_E(E)");
    CHECK(parse_object(P, "(1,(0,1),0)").label == "O(0,1)");
    CHECK(parse_object(P, "O[-1]").shift == -1);
}

TEST_CASE("object literal errors") {
    for (const char* bad : {"", "Q", "O(", "O(1)", "O(1,2,3)", "O(1/2,0)", "O(E)[x]", "O(1,0)]", "(1,2)",
                            "(1,(0,0))", "O(G)", "O(2X)"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_object(B, bad), ParseError);
    }
    CHECK_THROWS_AS(parse_object(P, "O(E)"), ParseError);
    CHECK_THROWS_AS(parse_object(P, "T"), ParseError);
    CHECK_THROWS_AS(parse_ns_class("1/0,1"), ParseError);
    CHECK(parse_ns_class("(1/2,-3)") == NSClass(Rational(1, 2), -3));
}

TEST_CASE("ChernCharacter JSON") {
    const json j = to_json(T());
    CHECK(j.dump() == R"({"c1":[1,0],"ch2":"-1/2","rank":0,"surface":"blp2"})");
    CHECK(chern_from_json(j) == T());
    CHECK(chern_from_json(json::parse(R"({"surface":"p1xp1","rank":"3","c1":[1,"1"],"ch2":-1})")) == G());
    CHECK(to_json(ChernCharacter(P, 1, NSClass(Rational(1, 3), 0), 0))["c1"][0] == "1/3");

    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        const ChernCharacter v = random_class(i % 2 ? P : B, rng);
        CHECK(chern_from_json(json::parse(to_json(v).dump())) == v);
    }
    CHECK_THROWS_AS(chern_from_json(json::parse(R"({"surface":"p2","rank":1,"c1":[0,0],"ch2":0})")), ParseError);
    CHECK_THROWS_AS(chern_from_json(json::parse(R"({"surface":"p1xp1","rank":1,"c1":[0],"ch2":0})")), ParseError);
    CHECK_THROWS_AS(chern_from_json(json::parse(R"({"surface":"p1xp1","rank":1.5,"c1":[0,0],"ch2":0})")),
                    ParseError);
    CHECK_THROWS_AS(chern_from_json(json::parse(R"({"surface":"p1xp1","c1":[0,0],"ch2":0})")), ParseError);
}

TEST_CASE("collection JSON round trip") {
    const ExcCollection E{B, {parse_object(B, "O(-E-2F)[2]"), parse_object(B, "T[1]"),
                              parse_object(B, "O(-E-F)[1]"), parse_object(B, "O")}};
    const json j = to_json(E);
    CHECK(j["objects"].size() == 4);
    CHECK(j["objects"][1]["label"] == "O_E(E)");
    CHECK(j["objects"][1]["shift"] == 1);
    const ExcCollection back = collection_from_json(json::parse(j.dump()));
    CHECK(back == E);
    for (std::size_t i = 0; i < E.size(); ++i) CHECK(back[i].label == E[i].label);

    const ExcCollection unlabeled =
        collection_from_json(json::parse(R"({"surface":"blp2","objects":[{"rank":0,"c1":[1,0],"ch2":"-1/2"}]})"));
    CHECK(unlabeled[0].label == "O_E(E)");
    CHECK(unlabeled[0].shift == 0);

    CHECK_THROWS_AS(collection_from_json(json::parse(R"({"surface":"blp2"})")), ParseError);
    CHECK_THROWS_AS(collection_from_json(json::parse(R"({"surface":"blp2","objects":{}})")), ParseError);
    CHECK_THROWS_AS(
        collection_from_json(json::parse(R"({"surface":"blp2","objects":[{"rank":1,"c1":[0,0],"ch2":0,"shift":"1"}]})")),
        ParseError);
}

TEST_CASE("quiver and coverage JSON") {
    QuiverData q;
    q.arrows = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>::Zero(2, 2);
    q.arrows(0, 1) = 3;
    q.labels = {"A", "B"};
    CHECK(to_json(q).dump() == R"({"arrows":[[0,3],[0,0]],"labels":["A","B"]})");

    CoverageReport r{Surface::P1xP1, 2, 1, 0, 0, 0, Rational(1, 4), Rational(1, 4)};
    r.covered = false;
    r.results.push_back({0, 0, NSClass(1, 0), "p1p1", Rational(1, 8)});
    r.results.push_back({0, Rational(1, 4), std::nullopt, "", 0});
    r.first_failure = r.results.back();
    const json j = to_json(r);
    CHECK(j["covered"] == false);
    CHECK(j["H"]["a"] == "2");
    CHECK(j["results"][0]["p"] == "1");
    CHECK(j["results"][0]["t"] == "1/8");
    CHECK(j["results"][1]["region"].is_null());
    CHECK(j["first_failure"]["y"] == "1/4");
}
