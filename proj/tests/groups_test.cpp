#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "group.hpp"

using namespace blockeq;
using namespace blockeq::grp;

namespace {

GroupPtr a5() {
    return FinGroup::make(5, {Perm::parseCycles("(1,2,3,4,5)", 5), Perm::parseCycles("(1,2,3)", 5)});
}

GroupPtr d10() {
    return FinGroup::make(5, {Perm::parseCycles("(1,2,3,4,5)", 5), Perm::parseCycles("(2,5)(3,4)", 5)});
}

} // namespace

TEST_CASE("cycle parsing round trips") {
    Perm p = Perm::parseCycles("(1,2,3)(4,5)", 6);
    CHECK(p.cycleString() == "(1,2,3)(4,5)");
    CHECK(Perm::parseCycles("()", 4).isIdentity());
    CHECK(p.order() == 6);
}

TEST_CASE("enumeration: trivial, A5, D10") {
    auto triv = FinGroup::make(3, {});
    CHECK(triv->order() == 1);
    CHECK(a5()->order() == 60);
    CHECK(d10()->order() == 10);
}

TEST_CASE("enumeration deterministic") {
    auto g1 = a5();
    auto g2 = a5();
    CHECK(g1->elements() == g2->elements());
}

TEST_CASE("words evaluate to their element") {
    auto g = a5();
    for (size_t i = 0; i < g->order(); i += 7) {
        Word w = g->wordFor(i);
        CHECK(g->evalWord(w) == g->element(i));
    }
}

TEST_CASE("centralizer and normalizer in A5") {
    auto g = a5();
    Subgroup c5{g, {Perm::parseCycles("(1,2,3,4,5)", 5)}};
    Subgroup n = normalizer(g, c5);
    CHECK(subgroupOrder(n) == 10);
    Subgroup c = centralizer(g, c5);
    CHECK(subgroupOrder(c) == 5);
    // centralizer of trivial subgroup = G
    Subgroup triv{g, {}};
    CHECK(subgroupOrder(centralizer(g, triv)) == 60);
    // normalizer contains centralizer
    CHECK(subgroupContains(n, c));
}

TEST_CASE("sylow subgroups") {
    auto g = a5();
    CHECK(subgroupOrder(sylow(g, 5)) == 5);
    CHECK(subgroupOrder(sylow(g, 2)) == 4);
    auto c3 = FinGroup::make(3, {Perm::parseCycles("(1,2,3)", 3)});
    CHECK(subgroupOrder(sylow(c3, 2)) == 1);
}

TEST_CASE("complements") {
    auto d = d10();
    Subgroup q{d, {Perm::parseCycles("(1,2,3,4,5)", 5)}};
    auto comps = complements(d, q);
    REQUIRE(!comps.empty());
    for (auto& k : comps) {
        CHECK(subgroupOrder(k) == 2);
        CHECK(subgroupOrder(intersect(k, q)) == 1);
    }
    // N = Q: the only complement is trivial
    auto c5 = FinGroup::make(5, {Perm::parseCycles("(1,2,3,4,5)", 5)});
    Subgroup qq{c5, {Perm::parseCycles("(1,2,3,4,5)", 5)}};
    auto cc = complements(c5, qq);
    REQUIRE(cc.size() == 1);
    CHECK(subgroupOrder(cc[0]) == 1);
    // C4 over C2: nonsplit
    auto c4 = FinGroup::make(4, {Perm::parseCycles("(1,2,3,4)", 4)});
    Subgroup c2{c4, {Perm::parseCycles("(1,3)(2,4)", 4)}};
    CHECK(complements(c4, c2).empty());
}

TEST_CASE("genTwoEl") {
    auto d = d10();
    Subgroup redundant{d, {Perm::parseCycles("(1,2,3,4,5)", 5), Perm::parseCycles("(2,5)(3,4)", 5),
                           Perm::parseCycles("(1,3,5,2,4)", 5)}};
    Subgroup two = genTwoEl(redundant, Rng(1));
    CHECK(two.generators.size() == 2);
    CHECK(subgroupOrder(two) == 10);

    auto c5 = FinGroup::make(5, {Perm::parseCycles("(1,2,3,4,5)", 5)});
    Subgroup one{c5, {Perm::parseCycles("(1,2,3,4,5)", 5)}};
    Subgroup padded = genTwoEl(one, Rng(1));
    CHECK(padded.generators.size() == 2);
    CHECK(subgroupOrder(padded) == 5);
}

TEST_CASE("direct product") {
    auto a = a5();
    auto d = d10();
    auto pe = directProduct(a, d);
    CHECK(pe.product->order() == 600);
    // embedded images commute elementwise (generators)
    for (const Perm& x : a->generators())
        for (const Perm& y : d->generators()) {
            Perm ex = pe.embedLeft(x);
            Perm ey = pe.embedRight(y);
            CHECK(ex.compose(ey) == ey.compose(ex));
        }
    // projection then embedding round-trips generators
    for (const Perm& x : a->generators())
        CHECK(pe.projectLeft(pe.embedLeft(x)) == x);
}

TEST_CASE("conjugateUntil") {
    auto g = a5();
    Subgroup s{g, {Perm::parseCycles("(1,2,3,4,5)", 5)}};
    // predicate always true -> identity tried first, returns s itself
    Subgroup same = conjugateUntil(s, g, [](const Subgroup&) { return true; });
    CHECK(sameSubgroup(same, s));
    // conjugate until the subgroup contains a specific 5-cycle
    Perm target = Perm::parseCycles("(1,3,2,4,5)", 5);
    Subgroup hit = conjugateUntil(s, g, [&](const Subgroup& c) { return c.containsElement(target); });
    CHECK(hit.containsElement(target));
}

TEST_CASE("orderLSubgroupClasses on C5xC5 and A5's V4 inside A4") {
    // H = D = C5 x C5: trivial conjugation -> 6 classes
    auto c5c5 = FinGroup::make(10, {Perm::parseCycles("(1,2,3,4,5)", 10), Perm::parseCycles("(6,7,8,9,10)", 10)});
    Subgroup d{c5c5, {Perm::parseCycles("(1,2,3,4,5)", 10), Perm::parseCycles("(6,7,8,9,10)", 10)}};
    CHECK(orderLSubgroupClasses(c5c5, d, 5).size() == 6);

    // H = A4 acting on V4: one class of C2's
    auto a4 = FinGroup::make(4, {Perm::parseCycles("(1,2)(3,4)", 4), Perm::parseCycles("(1,2,3)", 4)});
    Subgroup v4{a4, {Perm::parseCycles("(1,2)(3,4)", 4), Perm::parseCycles("(1,3)(2,4)", 4)}};
    CHECK(orderLSubgroupClasses(a4, v4, 2).size() == 1);
}
