#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "qra/drinfeld.hpp"
#include "qra/errors.hpp"
#include "qra/segments.hpp"

using namespace qra;

namespace {

Cyc ce(long j, long ell) { return Cyc::eps_power(j, ell); }
Cyc cl(long n, long ell) { return Cyc::from_long(n, ell); }

EpsilonSegment seg(long m, Cyc a) { return EpsilonSegment{m, std::move(a)}; }

bool same_multiset(std::vector<Cyc> a, std::vector<Cyc> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::vector<Cyc> all_points(const std::vector<EpsilonSegment>& segs, long ell) {
    std::vector<Cyc> pts;
    for (const EpsilonSegment& s : segs)
        for (const Cyc& p : segment_points(s, ell)) pts.push_back(p);
    return pts;
}

}  // namespace

TEST_CASE("segment points enumerate the eps string") {
    const long l = 5;
    const auto pts = segment_points(seg(3, cl(2, l)), l);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == cl(2, l) * ce(2, l));
    CHECK(pts[1] == cl(2, l));
    CHECK(pts[2] == cl(2, l) * ce(-2, l));

    const auto one = segment_points(seg(1, cl(7, l)), l);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == cl(7, l));

    // length-4 string at l=5 still has pairwise distinct points
    const auto four = segment_points(seg(4, ce(1, l)), l);
    for (size_t i = 0; i < four.size(); ++i)
        for (size_t j = i + 1; j < four.size(); ++j) CHECK(!(four[i] == four[j]));

    CHECK_THROWS_AS(segment_points(seg(0, cl(1, l)), l), QraError);
    CHECK_THROWS_AS(segment_points(seg(5, cl(1, l)), l), QraError);
    CHECK_THROWS_AS(segment_points(seg(1, Cyc::zero(l)), l), QraError);
}

TEST_CASE("general position criterion") {
    const long l = 5;
    const Cyc a = cl(3, l);

    // S1(a), S1(a eps^2): union is S2(a eps), special position
    CHECK(general_position(seg(1, a), seg(1, a * ce(2, l)), l) == false);
    // equal segments sit in general position (ratio 1 is no eps power in range)
    CHECK(general_position(seg(1, a), seg(1, a), l) == true);
    CHECK(general_position(seg(2, a), seg(2, a), l) == true);

    // S2(a) vs S1(b): only b/a = eps^{+-3} is special
    for (long j : {3L, -3L}) CHECK(general_position(seg(2, a), seg(1, a * ce(j, l)), l) == false);
    for (long j : {1L, -1L, 2L, -2L, 0L})
        CHECK(general_position(seg(2, a), seg(1, a * ce(j, l)), l) == true);
    CHECK(general_position(seg(2, a), seg(1, cl(2, l) * a), l) == true);

    // rationally unrelated centers never interact
    CHECK(general_position(seg(2, cl(2, l)), seg(2, cl(7, l)), l) == true);

    // symmetry over a small grid
    for (long ms = 1; ms <= 3; ++ms)
        for (long mt = 1; mt <= 3; ++mt)
            for (long j = -4; j <= 4; ++j)
                CHECK(general_position(seg(ms, a), seg(mt, a * ce(j, l)), l) ==
                      general_position(seg(mt, a * ce(j, l)), seg(ms, a), l));

    CHECK_THROWS_AS(general_position(seg(5, a), seg(1, a), l), QraError);
}

TEST_CASE("polynomials in factored form expand exactly") {
    const long l = 3;
    const PolyOverEps P = poly_from_inv_roots(l, {cl(2, l), cl(3, l)});
    const auto c = P.coeffs();
    REQUIRE(c.size() == 3);
    CHECK(c[0] == cl(1, l));
    CHECK(c[1] == cl(-5, l));
    CHECK(c[2] == cl(6, l));

    // a direct orbit factor 1 - 4 u^3 next to a linear root
    PolyOverEps Q;
    Q.ell = l;
    Q.inv_roots = {cl(2, l)};
    Q.orbit_c = {cl(4, l)};
    const auto qc = Q.coeffs();
    REQUIRE(qc.size() == 5);
    CHECK(qc[0] == cl(1, l));
    CHECK(qc[1] == cl(-2, l));
    CHECK(qc[2] == Cyc::zero(l));
    CHECK(qc[3] == cl(-4, l));
    CHECK(qc[4] == cl(8, l));

    // the empty product is the constant 1
    const PolyOverEps one = poly_from_inv_roots(l, {});
    REQUIRE(one.coeffs().size() == 1);
    CHECK(one.coeffs()[0].is_one());

    CHECK_THROWS_AS(poly_from_inv_roots(l, {Cyc::zero(l)}), QraError);
    CHECK_THROWS_AS(poly_from_inv_roots(4, {cl(2, 4)}), QraError);
}

TEST_CASE("segment decomposition merges forced pairs") {
    const long l = 5;

    // (1 - eps u)(1 - eps^{-1} u) -> S2(1)
    auto segs = decompose_into_segments(poly_from_inv_roots(l, {ce(1, l), ce(-1, l)}));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].m == 2);
    CHECK(segs[0].a == cl(1, l));

    // 1 - a u -> S1(a)
    segs = decompose_into_segments(poly_from_inv_roots(l, {cl(7, l)}));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0] == seg(1, cl(7, l)));

    // (1 - u)(1 - eps^2 u) -> S2(eps)
    segs = decompose_into_segments(poly_from_inv_roots(l, {cl(1, l), ce(2, l)}));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].m == 2);
    CHECK(segs[0].a == ce(1, l));

    // repeated root: two parallel S1's
    segs = decompose_into_segments(poly_from_inv_roots(l, {cl(3, l), cl(3, l)}));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == seg(1, cl(3, l)));
    CHECK(segs[1] == seg(1, cl(3, l)));

    // two orbit classes stay independent
    segs = decompose_into_segments(
        poly_from_inv_roots(l, {cl(2, l), cl(2, l) * ce(2, l), cl(7, l)}));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == seg(1, cl(7, l)));
    CHECK(segs[1] == seg(2, cl(2, l) * ce(1, l)));
}

TEST_CASE("segment decomposition with overlaps and multiplicities") {
    const long l = 5;

    // {eps^-1, eps, eps, eps^3} -> S3(eps) + S1(eps)
    auto segs = decompose_into_segments(
        poly_from_inv_roots(l, {ce(-1, l), ce(1, l), ce(1, l), ce(3, l)}));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == seg(1, ce(1, l)));
    CHECK(segs[1] == seg(3, ce(1, l)));

    // {eps, eps, eps^4} -> S2(1) + S1(eps): the spare eps nests inside S2(1)'s hull
    segs = decompose_into_segments(poly_from_inv_roots(l, {ce(1, l), ce(1, l), ce(4, l)}));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == seg(1, ce(1, l)));
    CHECK(segs[1] == seg(2, cl(1, l)));

    // overlapping S2(2) and S2(2 eps^2) resolve to S3(2 eps) + S1(2 eps)
    segs = decompose_into_segments(poly_from_inv_roots(
        l, {cl(2, l) * ce(1, l), cl(2, l) * ce(-1, l), cl(2, l) * ce(3, l), cl(2, l) * ce(1, l)}));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == seg(1, cl(2, l) * ce(1, l)));
    CHECK(segs[1] == seg(3, cl(2, l) * ce(1, l)));
}

TEST_CASE("segment decomposition is independent of root order") {
    const long l = 5;
    std::vector<Cyc> roots{ce(-1, l), ce(1, l), ce(1, l), ce(3, l), cl(7, l)};
    std::sort(roots.begin(), roots.end());
    const auto first = decompose_into_segments(poly_from_inv_roots(l, roots));
    long tried = 0;
    do {
        const auto again = decompose_into_segments(poly_from_inv_roots(l, roots));
        CHECK(again == first);
        // every output pair is in general position and the points are conserved
        for (size_t i = 0; i < again.size(); ++i)
            for (size_t j = i + 1; j < again.size(); ++j)
                CHECK(general_position(again[i], again[j], l));
        CHECK(same_multiset(all_points(again, l), roots));
    } while (++tried < 24 && std::next_permutation(roots.begin(), roots.end()));
    CHECK(tried == 24);
}

TEST_CASE("segment decomposition detects full orbits") {
    const long l = 3;
    CHECK_THROWS_AS(
        decompose_into_segments(poly_from_inv_roots(l, {cl(1, l), ce(1, l), ce(2, l)})),
        OrbitDetected);
    // an orbit hiding across two special-position strings
    CHECK_THROWS_AS(
        decompose_into_segments(poly_from_inv_roots(l, {ce(1, l), ce(2, l), cl(1, l), ce(1, l)})),
        OrbitDetected);
    // explicit u^l factors are full orbits by construction
    PolyOverEps P;
    P.ell = l;
    P.orbit_c = {cl(4, l)};
    CHECK_THROWS_AS(decompose_into_segments(P), OrbitDetected);
}

TEST_CASE("orbit factorization splits P0 from P1") {
    const long l = 3;

    // 1 - u^3: pure orbit part
    auto sp = factor_P0_P1(poly_from_inv_roots(l, {cl(1, l), ce(1, l), ce(2, l)}));
    CHECK(sp.p0.inv_roots.empty());
    CHECK(sp.p0.orbit_c.empty());
    REQUIRE(sp.r_inv_roots.size() == 1);
    CHECK(sp.r_inv_roots[0] == cl(1, l));
    const auto p1c = sp.p1.coeffs();
    REQUIRE(p1c.size() == 4);
    CHECK(p1c[0] == cl(1, l));
    CHECK(p1c[3] == cl(-1, l));

    // (1 - 2u)(1 - u^3): orbit stripped, linear factor stays
    sp = factor_P0_P1(
        poly_from_inv_roots(l, {cl(2, l), cl(1, l), ce(1, l), ce(2, l)}));
    REQUIRE(sp.p0.inv_roots.size() == 1);
    CHECK(sp.p0.inv_roots[0] == cl(2, l));
    REQUIRE(sp.r_inv_roots.size() == 1);
    CHECK(sp.r_inv_roots[0] == cl(1, l));

    // (1 - u)(1 - eps u): only two of three orbit members, nothing strips
    sp = factor_P0_P1(poly_from_inv_roots(l, {cl(1, l), ce(1, l)}));
    CHECK(sp.p0.inv_roots.size() == 2);
    CHECK(sp.r_inv_roots.empty());
    REQUIRE(sp.p1.coeffs().size() == 1);

    // (1 - 2u)^3: equal l-th powers without the orbit spread do not strip
    sp = factor_P0_P1(poly_from_inv_roots(l, {cl(2, l), cl(2, l), cl(2, l)}));
    CHECK(sp.p0.inv_roots.size() == 3);
    CHECK(sp.r_inv_roots.empty());

    // orbit of 2: (1 - 2u)(1 - 2 eps u)(1 - 2 eps^2 u) = 1 - 8 u^3
    sp = factor_P0_P1(poly_from_inv_roots(
        l, {cl(2, l), cl(2, l) * ce(1, l), cl(2, l) * ce(2, l)}));
    CHECK(sp.p0.inv_roots.empty());
    REQUIRE(sp.r_inv_roots.size() == 1);
    CHECK(sp.r_inv_roots[0] == cl(8, l));

    // explicit orbit factors pass straight through
    PolyOverEps Q;
    Q.ell = l;
    Q.inv_roots = {cl(2, l)};
    Q.orbit_c = {cl(4, l), cl(4, l)};
    sp = factor_P0_P1(Q);
    CHECK(sp.p0.inv_roots.size() == 1);
    REQUIRE(sp.r_inv_roots.size() == 2);
    CHECK(sp.r_inv_roots[0] == cl(4, l));
    CHECK(sp.r_inv_roots[1] == cl(4, l));
}

TEST_CASE("orbit factorization multiplies back exactly") {
    const long l = 3;
    std::vector<PolyOverEps> battery;
    battery.push_back(poly_from_inv_roots(l, {cl(2, l), cl(1, l), ce(1, l), ce(2, l)}));
    battery.push_back(poly_from_inv_roots(l, {cl(1, l), ce(1, l)}));
    battery.push_back(poly_from_inv_roots(
        l, {cl(2, l), cl(2, l) * ce(1, l), cl(2, l) * ce(2, l), cl(2, l), ce(2, l)}));
    {
        PolyOverEps Q;
        Q.ell = l;
        Q.inv_roots = {cl(5, l), ce(1, l)};
        Q.orbit_c = {cl(4, l)};
        battery.push_back(Q);
    }
    for (const PolyOverEps& P : battery) {
        const auto sp = factor_P0_P1(P);
        CHECK(poly_mul(sp.p0.coeffs(), sp.p1.coeffs()) == P.coeffs());
        // P1 is R(u^l): only multiples of l carry coefficients
        const auto p1c = sp.p1.coeffs();
        for (size_t i = 0; i < p1c.size(); ++i)
            if (i % static_cast<size_t>(l) != 0) CHECK(p1c[i].is_zero());
        // stripping is complete: P0 has no further orbit
        const auto again = factor_P0_P1(sp.p0);
        CHECK(again.r_inv_roots.empty());
    }
}

TEST_CASE("canonical parameters from a polynomial") {
    const long l = 3;

    // P = 1 - u^3 -> no segments, one frobenius entry at c = 1
    auto prm = canonical_params(poly_from_inv_roots(l, {cl(1, l), ce(1, l), ce(2, l)}));
    CHECK(prm.segments.empty());
    REQUIRE(prm.frobenius.size() == 1);
    CHECK(prm.frobenius[0].n == 1);
    CHECK(prm.frobenius[0].c == cl(1, l));

    // P = 1 - 2u -> one segment, no frobenius part
    prm = canonical_params(poly_from_inv_roots(l, {cl(2, l)}));
    REQUIRE(prm.segments.size() == 1);
    CHECK(prm.segments[0] == seg(1, cl(2, l)));
    CHECK(prm.frobenius.empty());

    // mixed: (1 - eps u)(1 - eps^{-1} u)(1 - 4 u^5)^2 at l = 5
    const long l5 = 5;
    PolyOverEps M;
    M.ell = l5;
    M.inv_roots = {ce(1, l5), ce(-1, l5)};
    M.orbit_c = {cl(4, l5), cl(4, l5)};
    prm = canonical_params(M);
    REQUIRE(prm.segments.size() == 1);
    CHECK(prm.segments[0].m == 2);
    CHECK(prm.segments[0].a == cl(1, l5));
    REQUIRE(prm.frobenius.size() == 1);
    CHECK(prm.frobenius[0].n == 2);
    CHECK(prm.frobenius[0].c == cl(4, l5));

    // repeated orbit at distinct centers groups by value
    PolyOverEps D;
    D.ell = l;
    D.orbit_c = {cl(4, l), cl(9, l), cl(4, l), cl(4, l)};
    prm = canonical_params(D);
    REQUIRE(prm.frobenius.size() == 2);
    CHECK(prm.frobenius[0].n == 1);
    CHECK(prm.frobenius[0].c == cl(9, l));
    CHECK(prm.frobenius[1].n == 3);
    CHECK(prm.frobenius[1].c == cl(4, l));

    // canonical ordering: segments ascending by (m, a)
    prm = canonical_params(
        poly_from_inv_roots(l, {cl(7, l), cl(2, l), cl(2, l) * ce(2, l), cl(3, l)}));
    REQUIRE(prm.segments.size() == 3);
    CHECK(prm.segments[0].m == 1);
    CHECK(prm.segments[1].m == 1);
    CHECK(prm.segments[2].m == 2);
    CHECK((prm.segments[0].a < prm.segments[1].a));
}

TEST_CASE("canonical parameters are idempotent through rebuilding") {
    const long l = 3;
    std::vector<PolyOverEps> battery;
    battery.push_back(poly_from_inv_roots(l, {cl(2, l), cl(1, l), ce(1, l), ce(2, l)}));
    battery.push_back(poly_from_inv_roots(l, {cl(2, l), cl(3, l), cl(3, l) * ce(1, l)}));
    {
        PolyOverEps Q;
        Q.ell = l;
        Q.inv_roots = {cl(5, l)};
        Q.orbit_c = {cl(4, l), cl(4, l), cl(9, l)};
        battery.push_back(Q);
    }
    for (const PolyOverEps& P : battery) {
        const ReprParams prm = canonical_params(P);
        const PolyOverEps back = poly_from_params(prm, l);
        CHECK(back.coeffs() == P.coeffs());
        CHECK(canonical_params(back) == prm);
    }
}

TEST_CASE("isomorphism compares classification data") {
    const long l = 3;
    ReprParams p1, p2;
    p1.segments = {seg(1, cl(2, l)), seg(2, ce(1, l))};
    p1.frobenius = {frob_from_b(1, cl(2, l), l)};
    p2 = p1;
    CHECK(isomorphic(p1, p2));

    // order inside the lists is immaterial
    std::swap(p2.segments[0], p2.segments[1]);
    CHECK(isomorphic(p1, p2));

    // frobenius parameters matter only through their l-th power
    p2 = p1;
    p2.frobenius = {frob_from_b(1, cl(2, l) * ce(1, l), l)};
    CHECK(frob_from_b(1, cl(2, l), l).c == cl(8, l));
    CHECK(isomorphic(p1, p2));

    // segment centers matter exactly
    p2 = p1;
    p2.segments[0].a = cl(2, l) * ce(1, l);
    CHECK(!isomorphic(p1, p2));

    // multiplicities matter
    p2 = p1;
    p2.segments.push_back(seg(1, cl(2, l)));
    CHECK(!isomorphic(p1, p2));

    p2 = p1;
    p2.frobenius.push_back(frob_from_b(2, cl(2, l), l));
    CHECK(!isomorphic(p1, p2));
}

TEST_CASE("irreducibility prediction from factor lists") {
    const long l = 3;
    ReprParams p;

    // two length-1 segments at ratio eps^2: special position
    p.segments = {seg(1, cl(1, l)), seg(1, ce(2, l))};
    CHECK(predict_irreducible(p, l) == false);

    // a single segment is always irreducible
    p.segments = {seg(1, cl(7, l))};
    CHECK(predict_irreducible(p, l) == true);

    // frobenius entries with equal l-th powers collide
    p.segments.clear();
    p.frobenius = {frob_from_b(1, cl(2, l), l), frob_from_b(1, cl(2, l) * ce(1, l), l)};
    CHECK(predict_irreducible(p, l) == false);

    // distinct l-th powers coexist, and segments never clash with frobenius parts
    p.frobenius = {frob_from_b(1, cl(2, l), l), frob_from_b(1, cl(3, l), l)};
    p.segments = {seg(1, cl(2, l))};
    CHECK(predict_irreducible(p, l) == true);

    // rational ratio keeps two segments apart
    p.frobenius.clear();
    p.segments = {seg(1, cl(1, l)), seg(1, cl(2, l))};
    CHECK(predict_irreducible(p, l) == true);

    // length bound is a hard precondition
    p.segments = {seg(3, cl(1, l))};
    CHECK_THROWS_AS(predict_irreducible(p, l), QraError);

    // canonical parameters always predict irreducible
    const auto prm = canonical_params(
        poly_from_inv_roots(l, {cl(2, l), cl(1, l), ce(1, l), ce(2, l), cl(7, l)}));
    CHECK(predict_irreducible(prm, l) == true);
}

TEST_CASE("construction plans follow the factorization") {
    const long l = 3;

    // P = 1 - 7u -> [ev(1, 7)]
    auto plan = construction_plan(poly_from_inv_roots(l, {cl(7, l)}));
    REQUIRE(plan.size() == 1);
    CHECK(plan[0].kind == PlanFactor::Kind::Ev);
    CHECK(plan[0].weight == 1);
    CHECK(plan[0].param == cl(7, l));

    // P = (1 - a eps u)(1 - a eps^{-1} u) at l = 5 -> [ev(2, a)]
    const long l5 = 5;
    const Cyc a = cl(3, l5);
    plan = construction_plan(poly_from_inv_roots(l5, {a * ce(1, l5), a * ce(-1, l5)}));
    REQUIRE(plan.size() == 1);
    CHECK(plan[0].kind == PlanFactor::Kind::Ev);
    CHECK(plan[0].weight == 2);
    CHECK(plan[0].param == a);

    // P = (1 - 2u)(1 - u^3) -> [ev(1, 2), frob(1, 1)]
    plan = construction_plan(
        poly_from_inv_roots(l, {cl(2, l), cl(1, l), ce(1, l), ce(2, l)}));
    REQUIRE(plan.size() == 2);
    CHECK(plan[0].kind == PlanFactor::Kind::Ev);
    CHECK(plan[0].weight == 1);
    CHECK(plan[0].param == cl(2, l));
    CHECK(plan[1].kind == PlanFactor::Kind::Frob);
    CHECK(plan[1].weight == 1);
    CHECK(plan[1].param == cl(1, l));

    // the same polynomial handed over as an explicit orbit factor
    PolyOverEps Q;
    Q.ell = l;
    Q.inv_roots = {cl(2, l)};
    Q.orbit_c = {cl(1, l)};
    CHECK(construction_plan(Q) == plan);
}

TEST_CASE("plans rebuild modules whose polynomial is the input") {
    struct Entry {
        PolyOverEps P;
        long dim;
    };
    std::vector<Entry> battery;
    {
        const long l = 5;
        battery.push_back({poly_from_inv_roots(l, {cl(3, l)}), 2});
        battery.push_back(
            {poly_from_inv_roots(l, {cl(2, l) * ce(1, l), cl(2, l) * ce(-1, l)}), 3});
        battery.push_back({poly_from_inv_roots(l, {ce(1, l), ce(-1, l)}), 3});
    }
    {
        const long l = 3;
        battery.push_back(
            {poly_from_inv_roots(l, {cl(2, l), cl(1, l), ce(1, l), ce(2, l)}), 4});
        battery.push_back({poly_from_inv_roots(l, {cl(2, l), cl(3, l)}), 4});
        PolyOverEps F;
        F.ell = l;
        F.orbit_c = {cl(1, l), cl(1, l)};
        battery.push_back({F, 3});
        PolyOverEps E;
        E.ell = l;
        E.inv_roots = {};
        battery.push_back({E, 1});
    }
    for (const Entry& e : battery) {
        const auto plan = construction_plan(e.P);
        EpsPtr M = build_plan(plan, e.P.ell);
        CHECK(M->mod().dim == e.dim);
        auto certs = highest_weight_vectors(*M);
        REQUIRE(certs.size() == 1);
        const DrinfeldPolynomial D = extract_polynomial(*M, certs.front());
        CHECK(D.plus_coeffs == e.P.coeffs());
        // the predicted dimension matches the built one
        const ReprParams prm = canonical_params(e.P);
        long dim = 1;
        for (const EpsilonSegment& s : prm.segments) dim *= s.m + 1;
        for (const FrobFactor& f : prm.frobenius) dim *= f.n + 1;
        CHECK(dim == e.dim);
    }
}

TEST_CASE("plan rebuilding covers parameters outside the rationals") {
    // mixed example at l = 5: (1 - eps u)(1 - eps^{-1} u)(1 - 4 u^5)^2
    const long l = 5;
    PolyOverEps M;
    M.ell = l;
    M.inv_roots = {ce(1, l), ce(-1, l)};
    M.orbit_c = {cl(4, l), cl(4, l)};
    const auto plan = construction_plan(M);
    REQUIRE(plan.size() == 2);
    CHECK(plan[0].kind == PlanFactor::Kind::Ev);
    CHECK(plan[1].kind == PlanFactor::Kind::Frob);
    CHECK(plan[1].weight == 2);
    CHECK(plan[1].param == cl(4, l));
    EpsPtr V = build_plan(plan, l);
    CHECK(V->mod().dim == 9);
    auto certs = highest_weight_vectors(*V);
    REQUIRE(certs.size() == 1);
    CHECK(certs.front().weight == 12);
    const DrinfeldPolynomial D = extract_polynomial(*V, certs.front());
    CHECK(D.plus_coeffs == M.coeffs());
}
