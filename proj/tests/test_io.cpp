#include "wsr/io.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace wsr;

namespace {

json parse(const char* text) { return json::parse(text); }

} // namespace

TEST_CASE("bigint_from_json accepts integers and decimal strings only") {
    CHECK(bigint_from_json(json(42)) == 42);
    CHECK(bigint_from_json(json(-7)) == -7);
    CHECK(bigint_from_json(json(18446744073709551615ULL)) ==
          bigint_from_decimal("18446744073709551615"));
    CHECK(bigint_from_json(json("123456789012345678901234567890")) ==
          bigint_from_decimal("123456789012345678901234567890"));
    CHECK(bigint_from_json(json("-5")) == -5);
    CHECK_THROWS_AS(bigint_from_json(json(1.5)), error);
    CHECK_THROWS_AS(bigint_from_json(json(true)), error);
    CHECK_THROWS_AS(bigint_from_json(json(nullptr)), error);
    CHECK_THROWS_AS(bigint_from_json(json("12a")), error);
    CHECK_THROWS_AS(bigint_from_json(json("")), error);
}

TEST_CASE("pair documents parse into raw vectors") {
    std::vector<CharVector> v =
        parse_pair_document(parse(R"({"lambda": [[-2,1],[1,-2],[2,1],[1,2]]})"));
    REQUIRE(v.size() == 4);
    CHECK(v[0] == CharVector{-2, 1});
    CHECK(v[3] == CharVector{1, 2});

    // entries may arrive as decimal strings
    std::vector<CharVector> w =
        parse_pair_document(parse(R"({"lambda": [["9000000000000000000000", "1"]]})"));
    CHECK(w[0].a == bigint_from_decimal("9000000000000000000000"));

    CHECK_THROWS_AS(parse_pair_document(parse("[]")), error);
    CHECK_THROWS_AS(parse_pair_document(parse(R"({"points": []})")), error);
    CHECK_THROWS_AS(parse_pair_document(parse(R"({"lambda": 3})")), error);
    CHECK_THROWS_AS(parse_pair_document(parse(R"({"lambda": [[1,2,3]]})")), error);
    CHECK_THROWS_AS(parse_pair_document(parse(R"({"lambda": [[1]]})")), error);
    CHECK_THROWS_AS(parse_pair_document(parse(R"({"lambda": [[1.5, 2]]})")), error);
}

TEST_CASE("polynomial documents take one of two shapes") {
    SRPolynomial lin = parse_polynomial_document(parse(R"({"linear": [0,0,1,0]})"), 4);
    CHECK(lin == SRPolynomial::monomial(4, {0, 0, 1, 0}));

    SRPolynomial terms = parse_polynomial_document(
        parse(R"({"terms": [{"coeff": 2, "exp": [1,0,0]}, {"coeff": -1, "exp": [0,0,2]}]})"),
        3);
    SRPolynomial expect(3);
    expect.add_term({1, 0, 0}, 2);
    expect.add_term({0, 0, 2}, -1);
    CHECK(terms == expect);

    // duplicate exponent vectors merge; cancellation drops the term
    SRPolynomial gone = parse_polynomial_document(
        parse(R"({"terms": [{"coeff": 5, "exp": [1,1]}, {"coeff": -5, "exp": [1,1]}]})"), 2);
    CHECK(gone.is_zero());

    CHECK_THROWS_AS(parse_polynomial_document(parse("[1,2]"), 2), error);
    CHECK_THROWS_AS(parse_polynomial_document(parse(R"({"linear": [1], "terms": []})"), 1),
                    error);
    CHECK_THROWS_AS(parse_polynomial_document(parse(R"({"other": 1})"), 2), error);
    CHECK_THROWS_AS(parse_polynomial_document(parse(R"({"linear": [1,2]})"), 3), error);
    CHECK_THROWS_AS(parse_polynomial_document(parse(R"({"terms": [{"coeff": 1}]})"), 2),
                    error);
    CHECK_THROWS_AS(
        parse_polynomial_document(parse(R"({"terms": [{"coeff": 1, "exp": [1]}]})"), 2),
        error);
    CHECK_THROWS_AS(
        parse_polynomial_document(parse(R"({"terms": [{"coeff": 1, "exp": [-1, 0]}]})"), 2),
        error);
    CHECK_THROWS_AS(
        parse_polynomial_document(parse(R"({"terms": [{"coeff": 1, "exp": [1.5, 0]}]})"), 2),
        error);
}

TEST_CASE("values serialize as decimal strings") {
    CHECK(to_json(BigInt(-12)) == json("-12"));
    CHECK(to_json(IntVec{1, -2}) == parse(R"(["1","-2"])"));
    CHECK(to_json(IntMatrix{{1, 2}, {3, 4}}) == parse(R"([["1","2"],["3","4"]])"));

    SRPolynomial p(2);
    p.add_term({2, 0}, -3);
    p.add_term({0, 1}, 7);
    // canonical term order: exponent vectors compare lexicographically
    CHECK(to_json(p) == parse(R"({"terms": [{"coeff":"7","exp":[0,1]},
                                            {"coeff":"-3","exp":[2,0]}]})"));
}

TEST_CASE("polynomial serialization round-trips through parsing") {
    SRPolynomial p(3);
    p.add_term({1, 2, 0}, 11);
    p.add_term({0, 0, 5}, -2);
    CHECK(parse_polynomial_document(to_json(p), 3) == p);
}

TEST_CASE("analysis report carries every section") {
    std::vector<CharVector> raw{{-2, 1}, {1, -2}, {2, 1}, {1, 2}};
    json r = analysis_report(raw);
    CHECK(r["tool"] == "wsrtool");
    CHECK(r["version"] == json(version));
    CHECK(r["input"]["lambda"] == parse(R"([["-2","1"],["1","-2"],["2","1"],["1","2"]])"));
    CHECK(r["validation"]["ok"] == true);
    CHECK(r["validation"]["violations"].empty());
    CHECK(r["topology"]["minor_gcd"] == "1");
    CHECK(r["topology"]["h3_invariants"].empty());
    CHECK(r["topology"]["even_cohomology"] == true);
    CHECK(r["wsr2"]["kernel"] == parse(R"([["1","2","-1","2"],["0","3","-4","5"]])"));
    CHECK(r["wsr2"]["phi_images"] == parse(R"([["0","3","6","0"],["0","0","15","0"]])"));
    CHECK(r["wsr2"]["basis_hnf"] == parse(R"([["1","1","2","7"],["0","3","1","5"],
                                              ["0","0","5","10"],["0","0","0","15"]])"));
    CHECK(r["wsr2"]["index"] == "225");
    CHECK(r["picard"]["index"] == "225");
    CHECK(r["picard"]["class_free_rank"] == 2);
    CHECK(r["picard"]["class_torsion"].empty());
    CHECK(r["picard"]["hypothesis_satisfied"] == true);
    // not in standard position: the cellular section is explicitly null
    CHECK(r["cellular"].is_null());
}

TEST_CASE("analysis report includes the cellular section in standard position") {
    std::vector<CharVector> raw{{-2, 1}, {1, -2}, {1, 0}, {0, 1}};
    json r = analysis_report(raw);
    CHECK(r["wsr2"]["index"] == "12");
    REQUIRE(r["cellular"].is_object());
    CHECK(r["cellular"]["u"] == parse(R"([["-2","4","0","0"],["4","-2","0","0"]])"));
    CHECK(r["cellular"]["xi"] == parse(R"([["1","0","2","-1"],["0","1","-1","2"]])"));
    CHECK(r["cellular"]["v"]["terms"][0]["exp"] == parse("[0,0,1,1]"));
}

TEST_CASE("invalid input stops the report after validation") {
    std::vector<CharVector> raw{{2, 4}, {1, 0}, {0, 1}};
    json r = analysis_report(raw);
    CHECK(r["validation"]["ok"] == false);
    REQUIRE(r["validation"]["violations"].size() == 1);
    CHECK(r["validation"]["violations"][0]["kind"] == "NotPrimitive");
    CHECK(r["validation"]["violations"][0]["index"] == 1);
    CHECK(r["validation"]["violations"][0]["message"] == "NotPrimitive(1)");
    CHECK_FALSE(r.contains("topology"));
    CHECK_FALSE(r.contains("wsr2"));
}

TEST_CASE("reports are byte-identical across runs") {
    std::vector<CharVector> raw{{-2, 1}, {1, -2}, {2, 1}, {1, 2}};
    std::string once = analysis_report(raw).dump(2);
    std::string twice = analysis_report(raw).dump(2);
    CHECK(once == twice);
    // and the text is loss-free
    CHECK(json::parse(once) == analysis_report(raw));
}

TEST_CASE("topology and picard serializers keep torsion") {
    auto val = CharacteristicPair::validate({{1, 2}, {2, 1}, {1, -1}});
    REQUIRE(val.ok());
    json t = topology_json(even_cohomology_check(*val.pair));
    CHECK(t["minor_gcd"] == "3");
    CHECK(t["h3_invariants"] == parse(R"(["3"])"));
    CHECK(t["even_cohomology"] == false);
    json p = picard_json(picard_report(*val.pair));
    CHECK(p["class_torsion"] == parse(R"(["3"])"));
    CHECK(p["index"] == "9");
    CHECK(p["hypothesis_satisfied"] == false);
}

TEST_CASE("normalization serializer records the witnesses") {
    auto val = CharacteristicPair::validate({{1, 0}, {0, 1}, {-1, 1}, {0, -1}});
    REQUIRE(val.ok());
    json n = normalization_json(normalize_smooth(*val.pair));
    CHECK(n["rotation"] == 2);
    CHECK(n["g"] == parse(R"([["1","0"],["0","1"]])"));
    CHECK(n["lambda"] == parse(R"([["-1","1"],["0","-1"],["1","0"],["0","1"]])"));
}
