#include "doctest.h"
#include "facemagic/formulas.hpp"
#include "facemagic/errors.hpp"

using namespace facemagic;

TEST_CASE("beta") {
    CHECK(beta(3) == 1);
    CHECK(beta(5) == 1);
    CHECK(beta(7) == 2);
    CHECK(beta(9) == 4);
    CHECK(beta(11) == 12);
    CHECK_THROWS_AS(beta(4), ValidationError);
}

TEST_CASE("count of value-(2mn+2) labelings") {
    CHECK(count_value_mid(3, 3) == 1);
    CHECK(count_value_mid(3, 5) == 8);
    CHECK(count_value_mid(5, 3) == 8);
    CHECK(count_value_mid(5, 5) == 16);
    CHECK(count_value_mid(9, 9) == 110592); // 3 * 2^6 * (4!)^2
}

TEST_CASE("lower bounds") {
    CHECK(lower_bound_value_plus(3, 3) == 1);
    CHECK(lower_bound_value_plus(5, 5) == 4);
    CHECK(lower_bound_value_plus(3, 5) == 4);
    CHECK(lower_bound_value_plus(9, 9) == 3072); // 3 * 2^6 * 4^2

    CHECK(lower_bound_total(3, 3) == 3);
    CHECK(lower_bound_total(3, 5) == 16);
    CHECK(lower_bound_total(5, 5) == 24);
}
