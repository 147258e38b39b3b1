#include <doctest.h>

#include <array>
#include <set>
#include <stdexcept>

#include "triplewell/fock_basis.hpp"

using namespace triplewell;

TEST_CASE("basis dimension formula") {
    CHECK(basis_dimension(0) == 1);
    CHECK(basis_dimension(1) == 3);
    CHECK(basis_dimension(4) == 15);
    CHECK(basis_dimension(20) == 231);
    CHECK(basis_dimension(10000) == 10001L * 10002L / 2);
}

TEST_CASE("enumeration order") {
    Basis b1(1);
    REQUIRE(b1.dimension() == 3);
    CHECK(b1.state(0) == FockState{1, 0, 0});
    CHECK(b1.state(1) == FockState{0, 1, 0});
    CHECK(b1.state(2) == FockState{0, 0, 1});

    Basis b2(2);
    CHECK(b2.state(0) == FockState{2, 0, 0});
    CHECK(b2.state(b2.dimension() - 1) == FockState{0, 0, 2});

    Basis b4(4);
    CHECK(b4.dimension() == 15);
}

TEST_CASE("index_of") {
    Basis b(1);
    CHECK(b.index_of({1, 0, 0}) == 0);
    CHECK(b.index_of({0, 0, 1}) == 2);
    CHECK_THROWS_AS((void)b.index_of({1, 1, 0}), std::invalid_argument);

    Basis b5(5);
    for (long i = 0; i < b5.dimension(); ++i) CHECK(b5.index_of(b5.state(i)) == i);
}

TEST_CASE("exhaustive enumeration properties up to N=100") {
    for (long n : {0L, 1L, 2L, 3L, 7L, 25L, 100L}) {
        Basis b(n);
        REQUIRE(b.dimension() == basis_dimension(n));
        std::set<std::array<long, 3>> seen;
        for (long i = 0; i < b.dimension(); ++i) {
            const FockState& s = b.state(i);
            CHECK(s.n1 >= 0);
            CHECK(s.n2 >= 0);
            CHECK(s.n3 >= 0);
            CHECK(s.total() == n);
            seen.insert({s.n1, s.n2, s.n3});
            CHECK(b.index_of(s) == i);
        }
        CHECK(static_cast<long>(seen.size()) == b.dimension());
    }
}
