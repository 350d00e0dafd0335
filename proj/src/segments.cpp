#include "qra/segments.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "qra/drinfeld.hpp"
#include "qra/errors.hpp"

namespace qra {

namespace {

void check_ell(long ell) {
    if (ell < 3 || ell % 2 == 0) throw QraError("segment arithmetic needs odd l >= 3");
}

Cyc bound_nonzero(const Cyc& x, long ell, const char* what) {
    const Cyc v = x + Cyc::zero(ell);  // adopts the modulus; mixed moduli throw
    if (v.is_zero()) throw QraError(std::string(what) + " must be nonzero");
    return v;
}

void check_segment(const EpsilonSegment& s, long ell) {
    check_ell(ell);
    if (s.m < 1 || s.m >= ell) throw QraError("segment length must lie in [1, l)");
    bound_nonzero(s.a, ell, "segment center");
}

bool contains(const std::vector<Cyc>& v, const Cyc& x) {
    for (const Cyc& y : v)
        if (y == x) return true;
    return false;
}

bool same_multiset(std::vector<Cyc> a, std::vector<Cyc> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// The unique segment a set of < l distinct points forms, if any: its top t
// is the one point with t eps^2 outside the set, the rest hang off the top
// in eps^{-2} steps.
std::optional<EpsilonSegment> segment_shape(const std::vector<Cyc>& pts, long ell) {
    const long m = static_cast<long>(pts.size());
    if (m < 1 || m >= ell) return std::nullopt;
    for (const Cyc& top : pts) {
        if (contains(pts, top * Cyc::eps_power(2, ell))) continue;
        Cyc cur = top;
        bool ok = true;
        for (long j = 1; j < m && ok; ++j) {
            cur *= Cyc::eps_power(-2, ell);
            ok = contains(pts, cur);
        }
        if (ok) return EpsilonSegment{m, top * Cyc::eps_power(-(m - 1), ell)};
    }
    return std::nullopt;
}

bool seg_lt_canonical(const EpsilonSegment& x, const EpsilonSegment& y) {
    if (x.m != y.m) return x.m < y.m;
    return x.a < y.a;
}

bool seg_lt_center(const EpsilonSegment& x, const EpsilonSegment& y) {
    if (!(x.a == y.a)) return x.a < y.a;
    return x.m < y.m;
}

bool frob_lt(const FrobFactor& x, const FrobFactor& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.c < y.c;
}

void validate_poly(const PolyOverEps& P) {
    check_ell(P.ell);
    for (const Cyc& r : P.inv_roots) bound_nonzero(r, P.ell, "inverse root");
    for (const Cyc& c : P.orbit_c) bound_nonzero(c, P.ell, "orbit factor parameter");
}

// Union and intersection of a special-position pair, as segments.  Both
// strings live in one eps-orbit, so a union of l points is the whole orbit.
std::pair<EpsilonSegment, std::optional<EpsilonSegment>> merge_pair(const EpsilonSegment& A,
                                                                    const EpsilonSegment& B,
                                                                    long ell) {
    const auto pa = segment_points(A, ell);
    const auto pb = segment_points(B, ell);
    std::vector<Cyc> uni = pa, inter;
    for (const Cyc& x : pb) {
        if (contains(pa, x))
            inter.push_back(x);
        else
            uni.push_back(x);
    }
    if (static_cast<long>(uni.size()) >= ell)
        throw OrbitDetected("roots contain a full eps-orbit");
    const auto u = segment_shape(uni, ell);
    if (!u) throw QraError("special-position pair does not merge to a segment");
    std::optional<EpsilonSegment> i;
    if (!inter.empty()) {
        i = segment_shape(inter, ell);
        if (!i) throw QraError("special-position overlap is not a segment");
    }
    return {*u, i};
}

}  // namespace

FrobFactor frob_from_b(long n, const Cyc& b, long ell) {
    check_ell(ell);
    if (n < 1) throw QraError("Frobenius factor needs n >= 1");
    return FrobFactor{n, bound_nonzero(b, ell, "evaluation parameter").pow(ell)};
}

std::vector<Cyc> PolyOverEps::coeffs() const {
    validate_poly(*this);
    std::vector<Cyc> acc{Cyc::from_long(1, ell)};
    for (const Cyc& r : inv_roots) {
        std::vector<Cyc> lin{Cyc::from_long(1, ell), -r};
        acc = poly_mul(acc, lin);
    }
    for (const Cyc& c : orbit_c) {
        std::vector<Cyc> orb(static_cast<size_t>(ell) + 1, Cyc::zero(ell));
        orb.front() = Cyc::from_long(1, ell);
        orb.back() = -c;
        acc = poly_mul(acc, orb);
    }
    return acc;
}

PolyOverEps poly_from_inv_roots(long ell, std::vector<Cyc> roots) {
    PolyOverEps P;
    P.ell = ell;
    P.inv_roots = std::move(roots);
    validate_poly(P);
    for (Cyc& r : P.inv_roots) r = r + Cyc::zero(ell);
    return P;
}

PolyOverEps poly_from_params(const ReprParams& params, long ell) {
    check_ell(ell);
    PolyOverEps P;
    P.ell = ell;
    for (const EpsilonSegment& s : params.segments)
        for (const Cyc& p : segment_points(s, ell)) P.inv_roots.push_back(p);
    for (const FrobFactor& f : params.frobenius) {
        if (f.n < 1) throw QraError("Frobenius factor needs n >= 1");
        const Cyc c = bound_nonzero(f.c, ell, "Frobenius parameter");
        for (long t = 0; t < f.n; ++t) P.orbit_c.push_back(c);
    }
    return P;
}

std::vector<Cyc> segment_points(const EpsilonSegment& s, long ell) {
    check_segment(s, ell);
    std::vector<Cyc> pts;
    const Cyc a = s.a + Cyc::zero(ell);
    for (long p = 1; p <= s.m; ++p) pts.push_back(a * Cyc::eps_power(s.m + 1 - 2 * p, ell));
    return pts;
}

bool general_position(const EpsilonSegment& s, const EpsilonSegment& t, long ell) {
    check_segment(s, ell);
    check_segment(t, ell);
    const Cyc ratio = (s.a + Cyc::zero(ell)) / t.a;
    const long pmax = std::min(s.m, t.m);
    for (long p = 0; p < pmax; ++p) {
        const long e = s.m + t.m - 2 * p;
        if (ratio == Cyc::eps_power(e, ell) || ratio == Cyc::eps_power(-e, ell)) return false;
    }
    return true;
}

std::vector<EpsilonSegment> decompose_into_segments(const PolyOverEps& P) {
    validate_poly(P);
    if (!P.orbit_c.empty()) throw OrbitDetected("polynomial has explicit u^l factors");
    const long l = P.ell;
    std::vector<EpsilonSegment> segs;
    for (const Cyc& r : P.inv_roots) segs.push_back(EpsilonSegment{1, r + Cyc::zero(l)});

    bool merged = true;
    while (merged) {
        merged = false;
        std::sort(segs.begin(), segs.end(), seg_lt_center);
        for (size_t i = 0; i < segs.size() && !merged; ++i)
            for (size_t j = i + 1; j < segs.size() && !merged; ++j) {
                if (general_position(segs[i], segs[j], l)) continue;
                auto [uni, inter] = merge_pair(segs[i], segs[j], l);
                segs.erase(segs.begin() + static_cast<long>(j));
                segs.erase(segs.begin() + static_cast<long>(i));
                segs.push_back(uni);
                if (inter) segs.push_back(*inter);
                merged = true;
            }
    }

    std::sort(segs.begin(), segs.end(), seg_lt_canonical);
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j)
            if (!general_position(segs[i], segs[j], l))
                throw QraError("segment decomposition failed to stabilize");
    std::vector<Cyc> pts;
    for (const EpsilonSegment& s : segs)
        for (const Cyc& p : segment_points(s, l)) pts.push_back(p);
    if (!same_multiset(pts, poly_from_inv_roots(l, P.inv_roots).inv_roots))
        throw QraError("segment decomposition lost roots");
    return segs;
}

OrbitSplit factor_P0_P1(const PolyOverEps& P) {
    validate_poly(P);
    const long l = P.ell;
    std::vector<Cyc> pool;
    for (const Cyc& r : P.inv_roots) pool.push_back(r + Cyc::zero(l));
    std::sort(pool.begin(), pool.end());
    std::vector<Cyc> rroots;
    for (const Cyc& c : P.orbit_c) rroots.push_back(c + Cyc::zero(l));

    bool stripped = true;
    while (stripped) {
        stripped = false;
        for (size_t i = 0; i < pool.size() && !stripped; ++i) {
            std::vector<size_t> take;
            bool full = true;
            for (long j = 0; j < l && full; ++j) {
                const Cyc want = pool[i] * Cyc::eps_power(j, l);
                full = false;
                for (size_t t = 0; t < pool.size() && !full; ++t) {
                    if (std::find(take.begin(), take.end(), t) != take.end()) continue;
                    if (pool[t] == want) {
                        take.push_back(t);
                        full = true;
                    }
                }
            }
            if (!full) continue;
            rroots.push_back(pool[i].pow(l));
            std::sort(take.begin(), take.end());
            for (size_t t = take.size(); t-- > 0;)
                pool.erase(pool.begin() + static_cast<long>(take[t]));
            stripped = true;
        }
    }

    std::sort(rroots.begin(), rroots.end());
    OrbitSplit out;
    out.p0.ell = l;
    out.p0.inv_roots = std::move(pool);
    out.p1.ell = l;
    out.p1.orbit_c = rroots;
    out.r_inv_roots = std::move(rroots);
    return out;
}

ReprParams canonical_params(const PolyOverEps& P) {
    const OrbitSplit sp = factor_P0_P1(P);
    ReprParams out;
    out.segments = decompose_into_segments(sp.p0);
    for (size_t i = 0; i < sp.r_inv_roots.size();) {
        size_t j = i;
        while (j < sp.r_inv_roots.size() && sp.r_inv_roots[j] == sp.r_inv_roots[i]) ++j;
        out.frobenius.push_back(FrobFactor{static_cast<long>(j - i), sp.r_inv_roots[i]});
        i = j;
    }
    std::sort(out.frobenius.begin(), out.frobenius.end(), frob_lt);
    return out;
}

bool isomorphic(const ReprParams& p1, const ReprParams& p2) {
    ReprParams a = p1, b = p2;
    std::sort(a.segments.begin(), a.segments.end(), seg_lt_canonical);
    std::sort(b.segments.begin(), b.segments.end(), seg_lt_canonical);
    std::sort(a.frobenius.begin(), a.frobenius.end(), frob_lt);
    std::sort(b.frobenius.begin(), b.frobenius.end(), frob_lt);
    return a == b;
}

bool predict_irreducible(const ReprParams& params, long ell) {
    check_ell(ell);
    for (const EpsilonSegment& s : params.segments) check_segment(s, ell);
    for (const FrobFactor& f : params.frobenius) {
        if (f.n < 1) throw QraError("Frobenius factor needs n >= 1");
        bound_nonzero(f.c, ell, "Frobenius parameter");
    }
    for (size_t i = 0; i < params.segments.size(); ++i)
        for (size_t j = i + 1; j < params.segments.size(); ++j)
            if (!general_position(params.segments[i], params.segments[j], ell)) return false;
    for (size_t i = 0; i < params.frobenius.size(); ++i)
        for (size_t j = i + 1; j < params.frobenius.size(); ++j)
            if (params.frobenius[i].c == params.frobenius[j].c) return false;
    return true;
}

std::vector<PlanFactor> construction_plan(const PolyOverEps& P) {
    const ReprParams prm = canonical_params(P);
    std::vector<PlanFactor> plan;
    for (const EpsilonSegment& s : prm.segments)
        plan.push_back(PlanFactor{PlanFactor::Kind::Ev, s.m, s.a});
    for (const FrobFactor& f : prm.frobenius)
        plan.push_back(PlanFactor{PlanFactor::Kind::Frob, f.n, f.c});
    return plan;
}

EpsPtr build_plan(const std::vector<PlanFactor>& plan, long ell) {
    check_ell(ell);
    if (plan.empty()) return evaluation_source(0, Cyc::from_long(1, ell), ell);
    EpsPtr acc;
    for (const PlanFactor& f : plan) {
        EpsPtr next = f.kind == PlanFactor::Kind::Ev
                          ? evaluation_source(f.weight, f.param + Cyc::zero(ell), ell)
                          : frobenius_pullback_classical(f.weight, f.param + Cyc::zero(ell), ell);
        acc = acc ? tensor_source(acc, next) : next;
    }
    return acc;
}

}  // namespace qra
