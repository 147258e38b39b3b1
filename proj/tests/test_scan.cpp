#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "triplewell/scan.hpp"

using namespace triplewell;

namespace {

double max_energy_dev(const std::vector<SweepRow>& rows) {
    double d = 0.0;
    for (const auto& r : rows) {
        REQUIRE(r.error.empty());
        d = std::max(d, std::abs(r.quantum_e - r.classical_e));
    }
    return d;
}

}  // namespace

TEST_CASE("axis and quantity parsing") {
    CHECK(axis_from_name("u") == Axis::u);
    CHECK(axis_from_name("j") == Axis::j);
    CHECK(axis_from_name("eps") == Axis::epsilon);
    CHECK_THROWS_AS((void)axis_from_name("q"), std::invalid_argument);
    CHECK(quantity_from_name("n2") == Quantity::n2);
    CHECK_THROWS_AS((void)quantity_from_name("n4"), std::invalid_argument);
}

TEST_CASE("sweep") {
    SUBCASE("U=0, N=1: single-particle correspondence is exact") {
        std::vector<SweepRow> rows = sweep(Axis::j, -3.0, 3.0, 61, ModelParams{0.0, 0.0, 1.0, 1});
        REQUIRE(rows.size() == 61);
        CHECK(max_energy_dev(rows) < 1e-10);
        for (const auto& r : rows) {
            for (int k = 0; k < 3; ++k)
                CHECK(r.quantum_occ[k] == doctest::Approx(r.classical_occ[k]).epsilon(1e-10));
            CHECK(r.classical_occ[0] + r.classical_occ[1] + r.classical_occ[2] ==
                  doctest::Approx(1.0).epsilon(1e-9));
            CHECK(r.quantum_occ[0] + r.quantum_occ[1] + r.quantum_occ[2] ==
                  doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("rows ascend in the swept coordinate") {
        std::vector<SweepRow> rows = sweep(Axis::u, 2.0, -2.0, 9, ModelParams{0.0, 1.0, 0.3, 3});
        for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);
    }
    SUBCASE("repulsive side converges with N") {
        auto dev_for = [](long n) {
            return max_energy_dev(sweep(Axis::u, 0.0, 3.0, 7, ModelParams{0.0, 1.0, 0.0, n}));
        };
        CHECK(dev_for(60) < dev_for(10));
    }
    SUBCASE("attractive eps=0 agreement already good at N=2") {
        // Finite-N correction at U/J=-3 is ~0.22 (7% of |E|); it shrinks
        // with N, and on plot scale the N=2 curve already tracks the
        // classical one.
        std::vector<SweepRow> rows =
            sweep(Axis::u, -3.0, -3.0 + 1e-9, 2, ModelParams{0.0, 1.0, 0.0, 2});
        const double dev = std::abs(rows.front().quantum_e - rows.front().classical_e);
        CHECK(dev <= 0.1 * std::abs(rows.front().classical_e));
    }
    SUBCASE("step count below 2 rejected") {
        CHECK_THROWS_AS((void)sweep(Axis::u, 0.0, 1.0, 1, ModelParams{0.0, 1.0, 0.0, 2}),
                        std::invalid_argument);
    }
}

TEST_CASE("grid2d") {
    SUBCASE("trapped region: n2 stays small for U/J < -1/2") {
        // n2 decays towards zero as U/J moves away from the -1/2 boundary;
        // it is only approximately zero at finite |U|.
        std::vector<GridCell> cells = grid2d(-3.0, -1.0, 0.1, 0.9, 4, 4, Quantity::n2);
        for (const auto& c : cells) {
            REQUIRE(c.error.empty());
            CHECK(c.value < 0.06);
        }
        std::vector<GridCell> deep = grid2d(-3.0, -2.0, 0.1, 0.9, 3, 3, Quantity::n2);
        for (const auto& c : deep) CHECK(c.value < 0.02);
    }
    SUBCASE("repulsive region: n2 near 1/2 for U/J >= 1, small tilt") {
        std::vector<GridCell> cells = grid2d(1.0, 3.0, 0.01, 0.09, 3, 3, Quantity::n2);
        for (const auto& c : cells) {
            REQUIRE(c.error.empty());
            CHECK(c.value == doctest::Approx(0.5).epsilon(1e-2));
        }
    }
    SUBCASE("sharp crossover along the U/J=-2 column") {
        std::vector<GridCell> lo = grid2d(-2.0, -2.0 + 1e-12, 1e-6, 1e-6 + 1e-12, 2, 2,
                                          Quantity::n1);
        std::vector<GridCell> hi = grid2d(-2.0, -2.0 + 1e-12, 0.3, 0.3 + 1e-12, 2, 2,
                                          Quantity::n1);
        CHECK(std::abs(lo.front().value - 0.5) < 0.05);
        CHECK(hi.front().value > 0.9);
    }
    SUBCASE("row-major deterministic ordering") {
        std::vector<GridCell> cells = grid2d(0.0, 1.0, 0.0, 1.0, 3, 3, Quantity::n1);
        REQUIRE(cells.size() == 9);
        CHECK(cells[0].u_over_j == doctest::Approx(0.0));
        CHECK(cells[1].eps_over_j > cells[0].eps_over_j);
        CHECK(cells[3].u_over_j > cells[0].u_over_j);
    }
    SUBCASE("mirror symmetry in the tilt") {
        std::vector<GridCell> plus = grid2d(-1.5, 1.5, 0.2, 0.8, 4, 4, Quantity::n1);
        std::vector<GridCell> minus = grid2d(-1.5, 1.5, -0.2, -0.8, 4, 4, Quantity::n3);
        REQUIRE(plus.size() == minus.size());
        for (std::size_t i = 0; i < plus.size(); ++i)
            CHECK(plus[i].value == doctest::Approx(minus[i].value).epsilon(1e-9));
    }
    SUBCASE("invalid ranges rejected") {
        CHECK_THROWS_AS((void)grid2d(0.0, 1.0, 0.0, 1.0, 1, 3, Quantity::n1),
                        std::invalid_argument);
    }
}

TEST_CASE("min_bosons_for_agreement") {
    SUBCASE("U=0 family is exact for a single particle") {
        std::vector<ModelParams> family;
        for (double j : {-2.0, -0.5, 0.5, 2.0}) family.push_back(ModelParams{0.0, j, 1.0, 1});
        CHECK(min_bosons_for_agreement(family, AgreementQuantity::energy, 1e-8, 5) == 1);
        CHECK(min_bosons_for_agreement(family, AgreementQuantity::occupations, 1e-8, 5) == 1);
    }
    SUBCASE("eps=0 repulsive occupations agree at N=1") {
        std::vector<ModelParams> family;
        for (double u : {0.0, 0.3, 0.6, 0.9}) family.push_back(ModelParams{u, 1.0, 0.0, 1});
        CHECK(min_bosons_for_agreement(family, AgreementQuantity::occupations, 1e-2, 5) == 1);
    }
    SUBCASE("attractive energy agreement by N=2") {
        // Deviations at U/J=-3: 0.92 for N=1, 0.22 for N=2; a plot-scale
        // tolerance is reached with two bosons already.
        std::vector<ModelParams> family{ModelParams{-3.0, 1.0, 0.0, 1}};
        auto n = min_bosons_for_agreement(family, AgreementQuantity::energy, 0.3, 4);
        REQUIRE(n.has_value());
        CHECK(*n == 2);
    }
    SUBCASE("unreachable tolerance reports not-found") {
        std::vector<ModelParams> family{ModelParams{2.0, 1.0, 0.0, 1}};
        CHECK(!min_bosons_for_agreement(family, AgreementQuantity::energy, 1e-14, 3).has_value());
    }
    SUBCASE("argument validation") {
        std::vector<ModelParams> family{ModelParams{0.0, 1.0, 1.0, 1}};
        CHECK_THROWS_AS((void)min_bosons_for_agreement(family, AgreementQuantity::energy, 0.0, 3),
                        std::invalid_argument);
        CHECK_THROWS_AS((void)min_bosons_for_agreement({}, AgreementQuantity::energy, 1e-2, 3),
                        std::invalid_argument);
    }
}
