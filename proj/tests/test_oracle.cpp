#include <doctest.h>

#include <vector>

#include "trimulti/construct.hpp"
#include "trimulti/oracle.hpp"

using namespace trimulti;

namespace {
const std::vector<std::int64_t> three_four{3, 3, 3, 3};
const std::vector<std::int64_t> three_six{3, 3, 3, 3, 3, 3};
}  // namespace

TEST_CASE("all-threes on 4 vertices exists (K4), on 6 it does not") {
    const OracleResult yes = exists_triangular_realization(three_four);
    CHECK(yes.exists);
    REQUIRE(yes.witness.has_value());
    CHECK(degree_sequence_of(*yes.witness) == three_four);
    CHECK(check_triangular(*yes.witness).is_triangular);

    const OracleResult no = exists_triangular_realization(three_six);
    CHECK_FALSE(no.exists);
    CHECK_FALSE(no.witness.has_value());
    CHECK(no.nodes_explored > 0);
}

TEST_CASE("brute force finds the doubled triangle for (4,4,4)") {
    const OracleResult result = exists_triangular_realization(std::vector<std::int64_t>{4, 4, 4});
    CHECK(result.exists);
    REQUIRE(result.witness.has_value());
    CHECK(degree_sequence_of(*result.witness) == std::vector<std::int64_t>{4, 4, 4});
}

TEST_CASE("identical queries explore identical node counts") {
    const OracleResult a = exists_triangular_realization(three_six);
    const OracleResult b = exists_triangular_realization(three_six);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.bound_used == 3);
}

TEST_CASE("oracle limits") {
    const std::vector<std::int64_t> wide(10, 4);
    CHECK_THROWS_AS(exists_triangular_realization(wide), Error);
    try {
        exists_triangular_realization(wide);
    } catch (const Error& e) {
        CHECK(e.code() == errc::limit_exceeded);
    }

    const std::vector<std::int64_t> heavy{20, 20, 20};  // sum 60 > default cap 40
    CHECK_THROWS_AS(exists_triangular_realization(heavy), Error);

    OracleLimits raised;
    raised.max_degree_sum = 100;
    CHECK(exists_triangular_realization(heavy, raised).exists);

    CHECK_THROWS_AS(exists_triangular_realization(std::vector<std::int64_t>{4, 0, 4}), Error);
}

TEST_CASE("simple-graph search fixtures") {
    CHECK_FALSE(exists_simple_realization(std::vector<std::int64_t>{3, 3, 1, 1}).exists);
    CHECK(exists_simple_realization(std::vector<std::int64_t>{2, 2, 2}).exists);
    CHECK(exists_simple_realization(std::vector<std::int64_t>{3, 3, 3, 3}).exists);
    CHECK_THROWS_AS(exists_simple_realization(std::vector<std::int64_t>(9, 2)), Error);
}

TEST_CASE("census fixtures") {
    const auto small = proposition_census(4);
    REQUIRE(small.size() == 2);
    CHECK(small[0].n == 3);
    CHECK_FALSE(small[0].exists);
    CHECK(small[1].n == 4);
    CHECK(small[1].exists);

    const auto medium = proposition_census(6);
    REQUIRE(medium.size() == 4);
    CHECK_FALSE(medium[2].exists);  // n = 5, odd sum
    CHECK(medium[2].nodes_explored == 0);
    CHECK_FALSE(medium[3].exists);  // n = 6, exhausted
    CHECK(medium[3].nodes_explored > 0);

    CHECK_THROWS_AS(proposition_census(9), Error);
}

TEST_CASE("necessity: odd sum or hub overflow kills realizability") {
    // Parity violation only.
    CHECK_FALSE(exists_triangular_realization(std::vector<std::int64_t>{5, 4, 4}).exists);
    // d1 bound violation only (sum even).
    CHECK_FALSE(exists_triangular_realization(std::vector<std::int64_t>{9, 2, 1}).exists);
    CHECK_FALSE(exists_triangular_realization(std::vector<std::int64_t>{6, 2, 2}).exists);
}

TEST_CASE("oracle agrees with realize at tiny scale") {
    // Every descending sequence with n in {3,4}, degrees in [4,6].
    for (std::int64_t a = 6; a >= 4; --a)
        for (std::int64_t b = a; b >= 4; --b)
            for (std::int64_t c = b; c >= 4; --c) {
                const DegreeSequence seq = canonicalize({a, b, c});
                const bool conditions = check_triangular_conditions(seq).triangular_conditions_ok();
                CHECK(exists_triangular_realization(seq.degrees()).exists == conditions);
                for (std::int64_t d = c; d >= 4; --d) {
                    const DegreeSequence seq4 = canonicalize({a, b, c, d});
                    const bool conditions4 = check_triangular_conditions(seq4).triangular_conditions_ok();
                    CHECK(exists_triangular_realization(seq4.degrees()).exists == conditions4);
                }
            }
}

TEST_CASE("deadline cancellation") {
    OracleLimits limits;
    limits.max_n = 8;
    limits.max_degree_sum = 100;
    limits.deadline = std::chrono::steady_clock::now() - std::chrono::milliseconds(1);
    const std::vector<std::int64_t> big(8, 5);
    CHECK_THROWS_AS(exists_triangular_realization(big, limits), Error);
}
