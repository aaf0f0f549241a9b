#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "petalkit/invariants.hpp"
#include "petalkit/json_io.hpp"

using namespace petalkit;
using io::json;

TEST_CASE("braid word round trip and exact bytes") {
    braid::BraidWord w(3, {{1, 1}, {2, -1}, {1, 1}});
    json j = io::to_json(w);
    CHECK(io::dump_line(j) == R"({"strands":3,"letters":[[1,1],[2,-1],[1,1]]})");
    CHECK(io::braid_from_json(j) == w);
    // parsing is insensitive to field order even though output is not
    json swapped = json::parse(R"({"letters":[[1,1],[2,-1],[1,1]],"strands":3})");
    CHECK(io::braid_from_json(swapped) == w);
    // empty word
    braid::BraidWord e(2);
    CHECK(io::dump_line(io::to_json(e)) == R"({"strands":2,"letters":[]})");
    CHECK(io::braid_from_json(io::to_json(e)) == e);
}

TEST_CASE("braid word malformed inputs") {
    auto parse = [](const char* s) { return io::braid_from_json(json::parse(s)); };
    CHECK_THROWS_AS(parse(R"({"letters":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":3})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":"3","letters":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":3,"letters":[[1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":3,"letters":[[1,2]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":3,"letters":[[0,1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":3,"letters":[[3,1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":1,"letters":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"([1,2,3])"), std::invalid_argument);
    // the error message is prefixed consistently
    try {
        parse(R"({"strands":3})");
        FAIL("expected a throw");
    } catch (const std::invalid_argument& ex) {
        CHECK(std::string(ex.what()).rfind("malformed JSON: ", 0) == 0);
    }
}

TEST_CASE("canonical braid round trip") {
    braid::BraidWord delta = braid::half_twist_word(3);
    braid::CanonicalBraid cb = braid::to_canonical(delta);
    json j = io::to_json(cb);
    CHECK(io::dump_line(j) == R"({"strands":3,"inf":1,"factors":[]})");
    CHECK(io::canonical_from_json(j) == cb);

    braid::CanonicalBraid cb2 = braid::to_canonical(braid::BraidWord(3, {{1, 1}}));
    json j2 = io::to_json(cb2);
    CHECK(io::dump_line(j2) == R"({"strands":3,"inf":0,"factors":[[2,1,3]]})");
    CHECK(io::canonical_from_json(j2) == cb2);

    auto parse = [](const char* s) { return io::canonical_from_json(json::parse(s)); };
    CHECK_THROWS_AS(parse(R"({"strands":3,"inf":0})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":3,"inf":0,"factors":[[1,1,2]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"strands":3,"inf":0,"factors":[[2,1]]})"),
                    std::invalid_argument);
}

TEST_CASE("grid round trip and validation") {
    grid::GridDiagram gd = grid::minimal_torus_grid(2, 3);
    json j = io::to_json(gd);
    CHECK(io::dump_line(j) == R"({"size":5,"x":[3,4,5,1,2],"o":[1,2,3,4,5]})");
    grid::GridDiagram back = io::grid_from_json(j);
    CHECK(back.size == gd.size);
    CHECK(back.x_rows == gd.x_rows);
    CHECK(back.o_rows == gd.o_rows);

    auto parse = [](const char* s) { return io::grid_from_json(json::parse(s)); };
    CHECK_THROWS_AS(parse(R"({"size":2,"x":[1,2],"o":[1,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"size":3,"x":[1,2],"o":[2,3,1]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"x":[2,1],"o":[1,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"size":2,"x":[2,1],"o":[1,"2"]})"), std::invalid_argument);
    // two-component link grid must be rejected
    CHECK_THROWS_AS(parse(R"({"size":4,"x":[2,1,4,3],"o":[1,2,3,4]})"),
                    std::invalid_argument);
}

TEST_CASE("pd round trip and validation") {
    grid::PDCode pd = grid::grid_to_pd(grid::minimal_torus_grid(2, 3));
    json j = io::to_json(pd);
    CHECK(io::pd_from_json(j) == pd);
    CHECK(io::dump_line(io::to_json(grid::PDCode{})) == R"({"crossings":[]})");
    // every sign serializes as "+" or "-"
    for (const auto& c : j["crossings"]) {
        CHECK(c.size() == 5);
        CHECK((c[4] == "+" || c[4] == "-"));
    }

    auto parse = [](const char* s) { return io::pd_from_json(json::parse(s)); };
    CHECK_THROWS_AS(parse(R"({"crossings":[[1,2,3,4]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"crossings":[[1,2,3,4,1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"crossings":[[1,2,3,4,"x"]]})"), std::invalid_argument);
    // structurally fine, geometrically invalid: labels not consecutive
    CHECK_THROWS_AS(parse(R"({"crossings":[[1,1,1,1,"+"]]})"), std::invalid_argument);
}

TEST_CASE("petal round trip and validation") {
    petal::PetalPermutation pp = petal::torus_petal_permutation(1);
    json j = io::to_json(pp);
    CHECK(io::dump_line(j) == R"({"levels":[1,7,3,6,2,5,9,4,8]})");
    CHECK(io::petal_from_json(j) == pp);

    auto parse = [](const char* s) { return io::petal_from_json(json::parse(s)); };
    CHECK_THROWS_AS(parse(R"({"levels":[1,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"levels":[2,1,3]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"levels":[1,2,2]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"levels":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({})"), std::invalid_argument);
}

TEST_CASE("laurent round trip, var handling, exact bytes") {
    invariants::LaurentPoly p = invariants::torus_alexander(2, 3);
    json j = io::to_json(p);
    CHECK(io::dump_line(j) == R"({"var":"t","terms":[[0,1],[1,-1],[2,1]]})");
    std::string var;
    CHECK(io::laurent_from_json(j, &var) == p);
    CHECK(var == "t");

    json ja = io::to_json(invariants::LaurentPoly::term(-1, 3), "A");
    CHECK(io::dump_line(ja) == R"({"var":"A","terms":[[3,-1]]})");
    CHECK(io::laurent_from_json(ja, &var) == invariants::LaurentPoly::term(-1, 3));
    CHECK(var == "A");

    // zero polynomial has an empty terms list
    CHECK(io::dump_line(io::to_json(invariants::LaurentPoly())) ==
          R"({"var":"t","terms":[]})");
    CHECK(io::laurent_from_json(io::to_json(invariants::LaurentPoly())).is_zero());

    auto parse = [](const char* s) { return io::laurent_from_json(json::parse(s)); };
    CHECK_THROWS_AS(parse(R"({"var":"x","terms":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"var":"t","terms":[[1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"var":"t","terms":[[0,1.5]]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"terms":[]})"), std::invalid_argument);
    // duplicate exponents accumulate rather than error: parsers accept any
    // term list, serializers always emit the canonical sorted form
    CHECK(io::laurent_from_json(json::parse(R"({"var":"t","terms":[[0,1],[0,2]]})")) ==
          invariants::LaurentPoly(3));
}
