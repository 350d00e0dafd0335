#pragma once

#include <vector>

#include "qra/cyclotomic.hpp"
#include "qra/derived.hpp"

namespace qra {

// The eps-string S_m(a) = {a eps^{m-1}, a eps^{m-3}, ..., a eps^{-m+1}},
// 1 <= m < l, a nonzero.
struct EpsilonSegment {
    long m = 1;
    Cyc a;
    bool operator==(const EpsilonSegment&) const = default;
};

// One Frobenius factor: the classical evaluation module of highest weight n
// at parameter c.  Loop parameters b enter only through c = b^l, so c is
// what gets stored; it need not have an l-th root inside Q(eps).
struct FrobFactor {
    long n = 1;
    Cyc c;
    bool operator==(const FrobFactor&) const = default;
};

FrobFactor frob_from_b(long n, const Cyc& b, long ell);

// Classification data of a finite-dimensional simple module: evaluation
// segments plus Frobenius factors.
struct ReprParams {
    std::vector<EpsilonSegment> segments;
    std::vector<FrobFactor> frobenius;
    bool operator==(const ReprParams&) const = default;
};

// Polynomial over Q(eps) with constant term 1, kept in factored form:
// linear inverse roots plus direct factors 1 - c u^l (whose own roots need
// not lie in Q(eps)).  coeffs() is the full expansion, ascending degree.
struct PolyOverEps {
    long ell = 0;
    std::vector<Cyc> inv_roots;
    std::vector<Cyc> orbit_c;
    std::vector<Cyc> coeffs() const;
};

PolyOverEps poly_from_inv_roots(long ell, std::vector<Cyc> roots);
PolyOverEps poly_from_params(const ReprParams& params, long ell);

// Points of S_m(a), highest eps power first.
std::vector<Cyc> segment_points(const EpsilonSegment& s, long ell);

// True unless the centers are related by a_s/a_t = eps^{+-(m_s+m_t-2p)} for
// some 0 <= p < min(m_s, m_t), equivalently: the union of the two strings is
// not a longer string.
bool general_position(const EpsilonSegment& s, const EpsilonSegment& t, long ell);

// Unique partition of the inverse-root multiset into segments pairwise in
// general position, by greedy merging of special-position pairs.  Output is
// sorted by (m, a).  Throws OrbitDetected when the roots contain a full
// eps-orbit (strip those with factor_P0_P1 first).
std::vector<EpsilonSegment> decompose_into_segments(const PolyOverEps& P);

// P = P0 * P1 with P0 free of factors 1 - c u^l and P1 a polynomial in u^l:
// P1(u) = prod (1 - c u^l) over r_inv_roots, the inverse roots of its R.
struct OrbitSplit {
    PolyOverEps p0;
    PolyOverEps p1;
    std::vector<Cyc> r_inv_roots;
};
OrbitSplit factor_P0_P1(const PolyOverEps& P);

// Full classification of P: segments of the orbit-free part, Frobenius
// entries (n, c) grouping equal c among the stripped orbits, both lists
// canonically sorted.
ReprParams canonical_params(const PolyOverEps& P);

// Same simple module: segment multisets agree exactly, Frobenius multisets
// agree on (n, c).
bool isomorphic(const ReprParams& p1, const ReprParams& p2);

// Tensor product of the listed factors stays simple: segments pairwise in
// general position and Frobenius parameters c pairwise distinct.  Throws
// QraError when a segment length falls outside [1, l).
bool predict_irreducible(const ReprParams& params, long ell);

// One tensor factor of the construction: an evaluation module V(m)_a or a
// Frobenius factor of classical weight n at parameter c.
struct PlanFactor {
    enum class Kind { Ev, Frob };
    Kind kind = Kind::Ev;
    long weight = 1;
    Cyc param;
    bool operator==(const PlanFactor&) const = default;
};

// Ordered factor list realizing V(P): evaluation factors for the segments of
// P0, then Frobenius factors for P1.
std::vector<PlanFactor> construction_plan(const PolyOverEps& P);

// Materialize a plan as the left-to-right tensor of its factors; the empty
// plan gives the one-dimensional trivial module.
EpsPtr build_plan(const std::vector<PlanFactor>& plan, long ell);

}  // namespace qra
