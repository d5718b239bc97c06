#include <doctest.h>

#include "ihsat/checks.hpp"
#include "ihsat/engine.hpp"
#include "ihsat/errors.hpp"
#include "ihsat/spectral.hpp"

using namespace ihsat;

namespace {
IrrepSum Q(long long m = 1) { return IrrepSum::trivial(m); }
IrrepSum V(std::vector<int> parts, long long m = 1) {
    return IrrepSum::single(Partition(std::move(parts)), m);
}
const Partition kV11({1, 1});
}  // namespace

TEST_CASE("stratification and defect") {
    Stratification g2 = make_stratification(2, {1, 1});
    CHECK(g2.strata_dims == std::vector<int>{0, 1, 3});
    CHECK(g2.total_dim == 3);
    CHECK(defect(g2) == 0);

    Stratification g4 = make_stratification(4, {9, 6, 5, 3});
    CHECK(g4.total_dim == 10);
    CHECK(g4.codim(0) == 10);
    CHECK(g4.codim(1) == 9);
    CHECK(g4.codim(2) == 7);
    CHECK(g4.codim(3) == 4);
    CHECK(defect(g4) == 8);  // 2*9 + 0 - 10 from the deepest stratum

    Stratification g1 = make_stratification(1, {0});
    CHECK(g1.total_dim == 1);
    CHECK(defect(g1) == 0);

    CHECK_THROWS_AS(make_stratification(2, {1, -1}), BadDimsError);
    CHECK_THROWS_AS(make_stratification(2, {1}), BadDimsError);
}

TEST_CASE("predicted contributions substitute known links and mint symbols") {
    Stratification strat = make_stratification(3, {3, 3, 2});
    LinkStore links;
    // Circle values for N_{1,2}; IH^0 seeds for the others.
    GradedTable circle = circle_link_ih(2);
    for (int q = 0; q <= 1; ++q) links.set(LinkKey{1, 2, Partition()}, q, circle.at(q));
    links.set(LinkKey{1, 3, Partition()}, 0, Q());

    std::vector<LedgerEntry> sources{{3, 0, Q(), 0}, {2, 2, Q(), -1}, {2, 4, Q(), 1}};
    SymbolicTable predicted = predicted_contributions(1, sources, links, strat);

    // The entry (r=2, j=2, Q) lands IH^0(N_{1,2}) = Q at degree 2 and the
    // vanishing IH^1(N_{1,2}) at degree 3.
    CHECK(predicted.at(2).known.equals(Q()));
    CHECK(predicted.at(3).known.is_zero());
    // Degrees 0..4 carry the intersection-complex column over A_1.
    CHECK(predicted.at(0).known.equals(Q()));  // seeded IH^0
    CHECK_FALSE(predicted.at(0).has_unknowns());
    REQUIRE(predicted.at(4).has_unknowns());
    CHECK(predicted.at(4).unknowns.front().first.to_string() == "IH4(N_{1,3},Q)");
    // Beyond the truncation bound nothing contributes from the open stratum.
    CHECK(predicted.count(5) == 0);

    CHECK(links.symbolic_keys().count(LinkKey{1, 3, Partition()}) == 1);
}

TEST_CASE("predicted contributions with an empty ledger") {
    Stratification strat = make_stratification(2, {1, 1});
    LinkStore links;
    links.set(LinkKey{1, 2, Partition()}, 0, Q());
    std::vector<LedgerEntry> sources{{2, 0, Q(), 0}};
    SymbolicTable predicted = predicted_contributions(1, sources, links, strat);
    CHECK(predicted.at(0).known.equals(Q()));
}

TEST_CASE("inference finds nothing when the fiber is fully accounted") {
    Stratification strat = make_stratification(2, {1, 1});
    GradedTable fiber(1);
    fiber.set(0, Q());
    SymbolicTable predicted;
    predicted[0].known = Q();
    InferenceResult result = infer_new_systems(1, fiber, predicted, strat);
    CHECK(result.entries.empty());
    CHECK(result.constraints.empty());
}

TEST_CASE("inference enforces the reflective symmetry") {
    // A fiber with a new system above the axis but not at its mirror, with
    // both degrees unknown-free, is inconsistent.
    Stratification strat = make_stratification(2, {1, 1});
    GradedTable fiber(1);
    fiber.set(0, Q());
    fiber.set(2, Q(2));  // one Q accounted, one new
    SymbolicTable predicted;
    predicted[0].known = Q();
    predicted[1].known = IrrepSum::zero();
    predicted[2].known = Q();
    // axis = 2: degree 2 is the axis itself, so this is fine
    CHECK_NOTHROW(infer_new_systems(1, fiber, predicted, strat));

    GradedTable bad(1);
    bad.set(0, Q(2));  // would need a mirror at degree 4 > 2 f_k
    SymbolicTable none;
    none[0].known = Q();
    CHECK_THROWS_AS(infer_new_systems(1, bad, none, strat), ContradictionError);
}

TEST_CASE("link resolution") {
    LinkStore links;
    LinkKey a{0, 2, Partition()};
    LinkKey b{2, 3, kV11};

    SUBCASE("single symbols become known") {
        std::vector<Constraint> cs{{{{LinkSymbol{a, 1}, 1}}, IrrepSum::zero(), 0, 1}};
        auto open = resolve_links(cs, links);
        CHECK(open.empty());
        CHECK(links.lookup(a, 1)->is_zero());
        // Duality mirror: real dimension of N_{0,2} is 5.
        CHECK(links.lookup(a, 4)->is_zero());
    }
    SUBCASE("zero right-hand side forces every symbol to zero") {
        std::vector<Constraint> cs{
            {{{LinkSymbol{a, 2}, 1}, {LinkSymbol{b, 1}, 1}}, IrrepSum::zero(), 0, 2}};
        CHECK(resolve_links(cs, links).empty());
        CHECK(links.lookup(a, 2)->is_zero());
        CHECK(links.lookup(b, 1)->is_zero());
    }
    SUBCASE("pairwise sums with nonzero right side survive") {
        std::vector<Constraint> cs{
            {{{LinkSymbol{a, 2}, 1}, {LinkSymbol{b, 0}, 1}}, V({2, 2}), 2, 4}};
        auto open = resolve_links(cs, links);
        REQUIRE(open.size() == 1);
        CHECK(open[0].to_string() == "IH2(N_{0,2},Q) + IH0(N_{2,3},V[1,1]) = V[2,2]");
    }
    SUBCASE("contradictions are reported") {
        links.set(a, 1, Q());
        std::vector<Constraint> cs{{{{LinkSymbol{a, 1}, 1}}, Q(2), 0, 1}};
        CHECK_THROWS_AS(resolve_links(cs, links), ContradictionError);
    }
    SUBCASE("substitution of known symbols reduces constraints") {
        links.set(b, 0, IrrepSum::zero());
        std::vector<Constraint> cs{
            {{{LinkSymbol{a, 2}, 1}, {LinkSymbol{b, 0}, 1}}, V({2, 2}), 2, 4}};
        auto open = resolve_links(cs, links);
        CHECK(open.empty());
        CHECK(links.lookup(a, 2)->equals(V({2, 2})));
    }
}

TEST_CASE("blow-up split") {
    // Exact rows, no unknowns: a toy 2-fold blown up at a point.
    BettiTable blown = BettiTable::zeros(4);
    blown.set(0, BettiEntry::known(1));
    blown.set(2, BettiEntry::known(2));
    blown.set(4, BettiEntry::known(1));
    GradedTable e(0);
    e.set(0, Q());
    e.set(2, Q());
    BettiTable split = blowup_split(blown, e, 2);
    CHECK(split.at(0).value == 1);
    CHECK(split.at(2).value == 1);
    CHECK(split.at(4).value == 1);

    SUBCASE("zero exceptional row is the identity") {
        GradedTable zero(0);
        BettiTable same = blowup_split(blown, zero, 2);
        CHECK(same == blown);
    }
}

TEST_CASE("engine reproduces the small-genus runs") {
    Engine engine(DatasetRegistry::builtin());

    const GenusResult& g1 = engine.genus(1);
    CHECK(g1.assembly.ih.to_string() == "1 0 1");
    CHECK(g1.ledger.empty());

    const GenusResult& g2 = engine.genus(2);
    CHECK(g2.assembly.ih.to_string() == "1 0 1 0 1 0 1");
    REQUIRE(g2.ledger.size() == 1);
    CHECK(g2.ledger[0].stratum == 1);
    CHECK(g2.ledger[0].fiber_degree == 2);
    CHECK(g2.ledger[0].shift_label == 0);
    CHECK(g2.defect_value == 0);

    const GenusResult& g3 = engine.genus(3);
    CHECK(g3.assembly.ih.to_string() == "1 0 1 0 1 0 2 0 1 0 1 0 1");
    // Ledger: degrees (2, 4) on A_2 and (4, 6) on A_1, all trivial systems.
    REQUIRE(g3.ledger.size() == 4);
    CHECK(g3.ledger[0].stratum == 2);
    CHECK(g3.ledger[0].fiber_degree == 2);
    CHECK(g3.ledger[0].shift_label == -1);
    CHECK(g3.ledger[3].stratum == 1);
    CHECK(g3.ledger[3].fiber_degree == 6);
    CHECK(g3.ledger[3].shift_label == 1);
    CHECK(g3.retained.empty());
}

TEST_CASE("genus-4 stratum tables match the worked computation") {
    Engine engine(DatasetRegistry::builtin());
    const GenusResult& g4 = engine.genus(4);

    // Stratum A_2, degree 4: IH4(N_{2,4}) + IH0(N_{2,3},V[1,1]) + V[1,1] + Q.
    const StratumStep* step2 = nullptr;
    for (const auto& step : g4.steps)
        if (step.stratum == 2) step2 = &step;
    REQUIRE(step2 != nullptr);
    const SymbolicSum& d4 = step2->predicted.at(4);
    CHECK(d4.known.equals(V({1, 1}) + Q()));
    REQUIRE(d4.unknowns.size() == 2);
    CHECK(d4.unknowns[0].first.to_string() == "IH4(N_{2,4},Q)");
    CHECK(d4.unknowns[1].first.to_string() == "IH0(N_{2,3},V[1,1])");

    // New systems on A_2: degrees 4, 6, 8, 10 with multiplicities 1, 2, 2, 1.
    CHECK(step2->new_systems.at(4).equals(Q()));
    CHECK(step2->new_systems.at(6).equals(Q(2)));
    CHECK(step2->new_systems.at(8).equals(Q(2)));
    CHECK(step2->new_systems.at(10).equals(Q()));

    // Stratum A_3 finds the nontrivial system V[1,1] at degree 4.
    const StratumStep& step3 = g4.steps.front();
    CHECK(step3.stratum == 3);
    CHECK(step3.new_systems.at(4).equals(V({1, 1}) + Q()));

    // No stage-1 new systems on the deepest stratum beyond the fiber's own
    // new part (degrees 2..18, totals 1 1 2 3 3 3 2 1 1).
    const StratumStep& step0 = g4.steps.back();
    CHECK(step0.stratum == 0);
    std::vector<long long> totals;
    for (int d = 2; d <= 18; d += 2)
        totals.push_back(step0.new_systems.count(d)
                             ? step0.new_systems.at(d).multiplicity(Partition(), std::nullopt)
                             : 0);
    CHECK(totals == std::vector<long long>{1, 1, 2, 3, 3, 3, 2, 1, 1});

    // Dimension bookkeeping closes over every resolvable degree.
    std::string failure;
    CHECK(verify_dimension_bookkeeping(g4, engine.links(), &failure));
    CHECK(failure.empty());
}

TEST_CASE("link store ends up with the published values") {
    Engine engine(DatasetRegistry::builtin());
    engine.genus(4);
    const LinkStore& links = engine.links();

    CHECK(links.lookup(LinkKey{1, 3, Partition()}, 0)->equals(Q()));
    for (int q = 1; q <= 4; ++q) CHECK(links.lookup(LinkKey{1, 3, Partition()}, q)->is_zero());
    CHECK_FALSE(links.lookup(LinkKey{2, 4, Partition()}, 4).has_value());
    CHECK(links.lookup(LinkKey{1, 4, Partition()}, 5)->is_zero());
    CHECK_FALSE(links.lookup(LinkKey{2, 3, kV11}, 0).has_value());
    CHECK(links.lookup(LinkKey{1, 3, kV11}, 4)->is_zero());
}

TEST_CASE("recursion consistency and caching") {
    Engine fresh(DatasetRegistry::builtin());
    const BettiTable standalone = fresh.genus(2).assembly.ih;

    Engine nested(DatasetRegistry::builtin());
    nested.genus(3);  // computes genus 2 internally
    CHECK(nested.genus(2).assembly.ih == standalone);
}

TEST_CASE("summand rows carry the shifts the tables print") {
    Engine engine(DatasetRegistry::builtin());
    const GenusResult& g4 = engine.genus(4);
    std::vector<std::string> labels;
    for (const auto& row : g4.assembly.rows) labels.push_back(row.label);
    std::vector<std::string> expected{
        "ih(Sat_3) [-2]",        "ih(Sat_3) [0]",  "ih(Sat_3,V[1,1]) [0]", "ih(Sat_3) [2]",
        "ih(Sat_2) [-3]",        "2 ih(Sat_2) [-1]", "2 ih(Sat_2) [1]",    "ih(Sat_2) [3]",
        "ih(Sat_1) [-3]",        "2 ih(Sat_1) [-1]", "2 ih(Sat_1) [1]",    "ih(Sat_1) [3]",
        "new part of H*(F_{0,4}) [0]"};
    CHECK(labels == expected);
}

TEST_CASE("corrupted fiber table is caught, not absorbed") {
    DatasetRegistry corrupted = corrupt_f24_registry(DatasetRegistry::builtin());
    Engine engine(corrupted);
    const GenusResult& g4 = engine.genus(4);
    // The degree-4 pairwise sum collapses: both symbols get forced to zero,
    // which contradicts the published table.
    CHECK(engine.links().lookup(LinkKey{2, 3, kV11}, 0).has_value());
    CHECK(engine.links().lookup(LinkKey{2, 3, kV11}, 0)->is_zero());
    CHECK(g4.retained.size() < 6);
}
