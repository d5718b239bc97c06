#include <doctest.h>

#include "ihsat/errors.hpp"
#include "ihsat/irrep_sum.hpp"
#include "ihsat/partition.hpp"
#include "oracles.hpp"

using namespace ihsat;

namespace {
IrrepSum Q(long long m = 1) { return IrrepSum::trivial(m); }
IrrepSum V(std::vector<int> parts, long long m = 1) {
    return IrrepSum::single(Partition(std::move(parts)), m);
}
}  // namespace

TEST_CASE("partition normalization drops zeros and validates") {
    CHECK(Partition::normalized({1, 1, 0}, 3).parts() == std::vector<int>{1, 1});
    CHECK(Partition::normalized({2, 2}, 2).parts() == std::vector<int>{2, 2});
    CHECK_THROWS_AS(Partition::normalized({1, 1, 1}, 2), TooManyRowsError);
    CHECK_THROWS_AS(Partition::normalized({1, 2}, 3), NonMonotoneError);
    CHECK_THROWS_AS(Partition::normalized({1, 0, 1}, 3), NonMonotoneError);

    // Idempotence: normalizing a normalized partition changes nothing.
    for (const auto& parts : {std::vector<int>{}, {3}, {2, 1}, {2, 2, 1}, {1, 1, 1, 1}}) {
        Partition p = Partition::normalized(parts, 4);
        CHECK(Partition::normalized(p.parts(), 4).parts() == p.parts());
    }
}

TEST_CASE("partition accessors") {
    Partition p({2, 1});
    CHECK(p.weight() == 3);
    CHECK(p.rows() == 2);
    CHECK(p.to_string() == "V[2,1]");
    CHECK(Partition().to_string() == "Q");
    CHECK(Partition().is_trivial());
    CHECK(Partition::column(3).parts() == std::vector<int>{1, 1, 1});
}

TEST_CASE("weyl dimensions against the tableau-counting oracle") {
    CHECK(weyl_dimension(Partition(), 1) == 1);
    CHECK(weyl_dimension(Partition(), 5) == 1);
    CHECK(weyl_dimension(Partition({1}), 2) == 4);
    CHECK(weyl_dimension(Partition({1, 1}), 2) == 5);  // matches king_dimension({1,1}, 2)

    // Every partition of weight <= 4 in up to 3 rows, genus 1..3, plus a few
    // wider ones: both routes must agree.
    std::vector<std::vector<int>> shapes{{},       {1},       {2},    {3},       {4},
                                         {1, 1},   {2, 1},    {2, 2}, {3, 1},    {1, 1, 1},
                                         {2, 1, 1}, {1, 1, 1, 1}, {2, 2, 1}};
    for (int g = 1; g <= 4; ++g) {
        for (const auto& shape : shapes) {
            if (static_cast<int>(shape.size()) > g) continue;
            CAPTURE(g);
            CAPTURE(shape.size());
            CHECK(weyl_dimension(Partition(shape), g) ==
                  static_cast<std::uint64_t>(oracles::king_dimension(shape, g)));
        }
    }
}

TEST_CASE("sum arithmetic") {
    CHECK((Q() + Q()).equals(Q(2)));
    CHECK((V({1, 1}) + Q() + Q()).equals(V({1, 1}) + Q(2)));
    CHECK((IrrepSum::zero() + V({2})).equals(V({2})));

    CHECK((V({1, 1}) + Q(2)).subtract(Q()).equals(V({1, 1}) + Q()));
    IrrepSum x = V({2, 2}) + V({1, 1}, 3) + Q(2);
    CHECK(x.subtract(x).is_zero());
    CHECK_THROWS_AS(Q().subtract(V({1, 1})), NegativeMultiplicityError);

    CHECK(IrrepSum::min(Q(2) + V({1, 1}), Q()).equals(Q()));
    CHECK(IrrepSum::min(x, IrrepSum::zero()).is_zero());
    CHECK(IrrepSum::min(Q() + V({1, 1}), Q() + V({1, 1}) + V({1, 1, 1})).equals(Q() + V({1, 1})));
}

TEST_CASE("subtraction round trip") {
    std::vector<IrrepSum> pool{IrrepSum::zero(), Q(), Q(3), V({1, 1}), V({2}) + Q(2),
                               V({2, 2}) + V({1, 1}) + Q()};
    for (const auto& a : pool)
        for (const auto& b : pool) CHECK((a + b).subtract(b).equals(a));
}

TEST_CASE("exterior powers of the standard system") {
    CHECK(exterior_power_decomposition(3, 0).equals(Q()));
    for (int g = 2; g <= 6; ++g)
        CHECK(exterior_power_decomposition(g, 2).equals(V({1, 1}) + Q()));
    CHECK(exterior_power_decomposition(3, 4).equals(exterior_power_decomposition(3, 2)));

    // Degree-3 dimension check in rank 3: dim V[1,1,1] + dim V[1] = C(6,3).
    CHECK(weyl_dimension(Partition({1, 1, 1}), 3) + weyl_dimension(Partition({1}), 3) == 20);
    CHECK(exterior_power_decomposition(3, 3).total_dimension(3) == 20);

    for (int g = 1; g <= 8; ++g)
        for (int q = 0; q <= 2 * g; ++q) {
            CHECK(exterior_power_decomposition(g, q)
                      .equals(exterior_power_decomposition(g, 2 * g - q)));
            CHECK(exterior_power_decomposition(g, q).total_dimension(g) ==
                  static_cast<std::uint64_t>(oracles::binomial(2 * g, q)));
        }

    CHECK_THROWS_AS(exterior_power_decomposition(3, -1), OutOfRangeError);
    CHECK_THROWS_AS(exterior_power_decomposition(3, 7), OutOfRangeError);
}

TEST_CASE("duality and twist semantics") {
    CHECK(V({1, 1}).dual().equals(V({1, 1})));
    CHECK(IrrepSum::zero().dual().is_zero());

    IrrepSum twisted = IrrepSum::single(Partition({2}), 1, -2) + IrrepSum::single(Partition(), 3, 0);
    CHECK(twisted.dual().dual().equals(twisted));
    CHECK(twisted.dual().multiplicity(Partition({2}), 2) == 1);

    // Twist tags matter only when both operands carry them.
    IrrepSum plain = V({2}) + Q(3);
    CHECK(twisted.equals(plain));
    IrrepSum other_twist = IrrepSum::single(Partition({2}), 1, -1) + IrrepSum::single(Partition(), 3, 0);
    CHECK_FALSE(twisted.equals(other_twist));
    CHECK(twisted.without_twists().equals(plain));
}

TEST_CASE("display form") {
    CHECK((V({2, 2}) + V({1, 1}) + Q(2)).to_string() == "V[2,2] + V[1,1] + 2 Q");
    CHECK(IrrepSum::zero().to_string() == "0");
    CHECK(IrrepSum::single(Partition(), 2, -4).to_string() == "2 Q(-4)");
}
