#include <doctest.h>

#include <map>

#include "ihsat/dataset.hpp"
#include "ihsat/errors.hpp"
#include "ihsat/spectral.hpp"
#include "oracles.hpp"

using namespace ihsat;

namespace {
IrrepSum Q(long long m = 1) { return IrrepSum::trivial(m); }
IrrepSum V(std::vector<int> parts, long long m = 1) {
    return IrrepSum::single(Partition(std::move(parts)), m);
}

// Independent total-degree summation over a page, ignoring differentials.
GradedTable direct_sum_by_total_degree(const GysinPage& page) {
    GradedTable out(page.context_genus);
    for (const auto& col : page.columns)
        for (const auto& [q, value] : col.entries.entries()) out.add(col.p + q, value);
    return out;
}

std::uint64_t total_dimension(const GradedTable& t) {
    std::uint64_t total = 0;
    for (const auto& [d, v] : t.entries()) total += v.total_dimension(t.context_genus());
    return total;
}
}  // namespace

TEST_CASE("invariant part of the universal family") {
    GradedTable g2 = invariant_kummer_row(2);
    CHECK(g2.at(0).equals(Q()));
    CHECK(g2.at(1).is_zero());

    CHECK(invariant_kummer_row(4).at(2).equals(Q() + V({1, 1})));

    GradedTable g1 = invariant_kummer_row(1);
    CHECK(g1.at(0).equals(Q()));
    CHECK(g1.max_degree() == 0);

    // Termwise the even rows are whole exterior powers, so their total
    // dimensions are binomial coefficients.
    for (int g = 2; g <= 8; ++g) {
        GradedTable row = invariant_kummer_row(g);
        for (int p = 0; p <= row.max_degree(); p += 2) {
            CHECK(row.at(p).equals(exterior_power_decomposition(g - 1, p)));
            CHECK(row.at(p).total_dimension(g - 1) ==
                  static_cast<std::uint64_t>(oracles::binomial(2 * (g - 1), p)));
            if (p + 1 <= row.max_degree()) CHECK(row.at(p + 1).is_zero());
        }
    }
}

TEST_CASE("circle-bundle link cohomology") {
    GradedTable g4 = circle_link_ih(4);
    CHECK(g4.at(0).equals(Q()));
    CHECK(g4.at(1).is_zero());
    CHECK(g4.at(2).equals(V({1, 1})));
    CHECK(g4.at(3).is_zero());

    CHECK(circle_link_ih(3).at(2).equals(V({1, 1})));
    CHECK(circle_link_ih(1).at(0).equals(Q()));

    // Closed form: the column partition of the degree, at even degrees.
    for (int g = 1; g <= 12; ++g) {
        GradedTable link = circle_link_ih(g);
        for (int q = 0; q <= g - 1; ++q) {
            IrrepSum expected =
                q % 2 == 0 ? IrrepSum::single(Partition::column(q)) : IrrepSum::zero();
            CAPTURE(g);
            CAPTURE(q);
            CHECK(link.at(q).equals(expected));
        }
    }
}

TEST_CASE("gysin assembly: single column is a reindexing") {
    GysinPage page;
    page.context_genus = 2;
    GradedTable col(2);
    col.set(0, Q());
    col.set(3, V({1, 1}) + Q());
    page.columns.push_back({5, col});
    GradedTable out = gysin_assemble(page);
    CHECK(out.at(5).equals(Q()));
    CHECK(out.at(8).equals(V({1, 1}) + Q()));
    CHECK(out.entries().size() == 2);
}

TEST_CASE("gysin assembly of the shipped page reproduces the fiber table") {
    DatasetRegistry registry = DatasetRegistry::builtin();
    const GysinPage& page = registry.gysin(4, 1);
    GradedTable assembled = gysin_assemble(page);
    CHECK(assembled.equals(registry.fiber(4, 1)));
    for (int d = 1; d <= assembled.max_degree(); d += 2) CHECK(assembled.at(d).is_zero());
}

TEST_CASE("gysin assembly without the forced differential keeps degree 7") {
    DatasetRegistry registry = DatasetRegistry::builtin();
    GysinPage page = registry.gysin(4, 1);
    page.differentials.clear();
    GradedTable out = gysin_assemble(page);
    // Oracle: direct summation by total degree.
    GradedTable direct = direct_sum_by_total_degree(page);
    CHECK(out.equals(direct));
    CHECK_FALSE(out.at(7).is_zero());
    CHECK(out.at(7).equals(V({2})));
    CHECK(out.at(8).equals(V({2}) + Q(4)));
}

TEST_CASE("gysin euler bookkeeping") {
    DatasetRegistry registry = DatasetRegistry::builtin();
    GysinPage with = registry.gysin(4, 1);
    GysinPage without = with;
    without.differentials.clear();
    std::uint64_t cancelled = 0;
    for (const auto& d : with.differentials) cancelled += d.cancelled.total_dimension(1);
    CHECK(total_dimension(gysin_assemble(with)) + 2 * cancelled ==
          total_dimension(gysin_assemble(without)));
}

TEST_CASE("gysin mismatched differentials are rejected") {
    GysinPage page;
    page.context_genus = 1;
    GradedTable c0(1), c1(1);
    c0.set(2, IrrepSum::single(Partition({2}), 1, -2));
    c1.set(2, IrrepSum::single(Partition({2}), 1, -2));
    page.columns.push_back({0, c0});
    page.columns.push_back({1, c1});

    SUBCASE("absent source cell") {
        page.differentials.push_back({0, 3, V({2})});
        CHECK_THROWS_AS(gysin_assemble(page), MismatchedDifferentialError);
    }
    SUBCASE("twist mismatch") {
        page.differentials.push_back({0, 2, IrrepSum::single(Partition({2}), 1, -1)});
        CHECK_THROWS_AS(gysin_assemble(page), MismatchedDifferentialError);
    }
    SUBCASE("matching twists cancel") {
        page.differentials.push_back({0, 2, IrrepSum::single(Partition({2}), 1, -2)});
        CHECK(gysin_assemble(page).is_zero());
    }
}
