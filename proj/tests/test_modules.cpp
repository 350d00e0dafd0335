#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "qra/derived.hpp"
#include "qra/module.hpp"
#include "qra/mpoly.hpp"
#include "qra/qnum.hpp"

using namespace qra;

namespace {

const RatFunc one_rf{1L};

template <class S>
Mat<S> scaled(Mat<S> m, const S& c) {
    m.scale(c);
    return m;
}

template <class S>
Mat<S> kpow(const Module<S>& V, long e) {
    const S one = scalar_one<S>(V.ell);
    return e >= 0 ? mat_pow(V.k, e, one) : mat_pow(V.kinv, -e, one);
}

Module<RatFunc> Vna(long n, const Rat& a) {
    return evaluation_twist(make_Vn<RatFunc>(n), RatFunc(a));
}

// coefficients s_0..s_N of q^{deg P} P(q^{-2} u) / P(u), P given by its
// coefficient vector with constant term 1
std::vector<RatFunc> hw_psi_series(const std::vector<RatFunc>& c, long N) {
    const long d = static_cast<long>(c.size()) - 1;
    std::vector<RatFunc> s(static_cast<size_t>(N + 1));
    for (long m = 0; m <= N; ++m) {
        RatFunc acc;
        if (m <= d) acc = c[static_cast<size_t>(m)] * RatFunc::q_power(d - 2 * m);
        for (long j = 1; j <= m && j <= d; ++j)
            acc -= c[static_cast<size_t>(j)] * s[static_cast<size_t>(m - j)];
        s[static_cast<size_t>(m)] = acc;
    }
    return s;
}

std::vector<RatFunc> drinfeld_poly_coeffs(long n, const Rat& a) {
    std::vector<RatFunc> c{one_rf};
    for (long m = 1; m <= n; ++m) {
        std::vector<RatFunc> next(c.size() + 1);
        const RatFunc root{Laurent::q_power(n - 2 * m + 1, a)};
        for (size_t j = 0; j < c.size(); ++j) {
            next[j] += c[j];
            next[j + 1] -= c[j] * root;
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

TEST_CASE("parameter polynomials form a ring with monomial inverses") {
    const MPoly a0 = MPoly::var(0), a1 = MPoly::var(1);
    const MPoly two = MPoly::constant(RatFunc(2L));
    CHECK((a0 + a1) * (a0 + a1) == a0 * a0 + two * a0 * a1 + a1 * a1);
    CHECK((a0 - a0).is_zero());
    CHECK(MPoly::constant(one_rf).is_one());
    CHECK(MPoly::var(2, 0).is_one());

    const MPoly m = MPoly::constant(RatFunc(Rat(3, 2))) * MPoly::var(0, 2) * MPoly::var(1, -1);
    CHECK(m * m.inverse() == MPoly::constant(one_rf));
    CHECK_THROWS_AS((a0 + a1).inverse(), QraError);

    const std::vector<RatFunc> pt{RatFunc(2L), RatFunc::q_power(1)};
    CHECK(m.eval(pt) == RatFunc(Rat(3, 2)) * RatFunc(4L) * RatFunc::q_power(-1));
    CHECK((a0 * a1 + a1).eval(pt) == RatFunc::q_power(1) * RatFunc(3L));
}

TEST_CASE("matrix span and kernel machinery") {
    Mat<RatFunc> A(2, 2);
    A.at(0, 0) = RatFunc(1L);
    A.at(0, 1) = RatFunc(2L);
    A.at(1, 0) = RatFunc(2L);
    A.at(1, 1) = RatFunc(4L);
    CHECK(rank(A) == 1);
    const auto ker = kernel_basis(A, one_rf);
    REQUIRE(ker.size() == 1);
    CHECK(vec_is_zero(mat_vec(A, ker[0])));

    Mat<RatFunc> U(2, 2);
    U.at(0, 0) = U.at(1, 1) = RatFunc(1L);
    U.at(0, 1) = RatFunc(3L);
    const auto inv = inverse_matrix(U, one_rf);
    REQUIRE(inv.has_value());
    CHECK(*inv * U == Mat<RatFunc>::identity(2, one_rf));
    CHECK_FALSE(inverse_matrix(A, one_rf).has_value());

    // nilpotent generator reaches the whole plane from e_1
    Mat<RatFunc> N(2, 2);
    N.at(0, 1) = RatFunc(1L);
    const auto span = invariant_span<RatFunc>({N}, {unit_vec(2L, 1L, one_rf)}, 2);
    CHECK(span.dim() == 2);
    const auto cb = closure_basis<RatFunc>({N}, unit_vec(2L, 1L, one_rf), 2);
    REQUIRE(cb.raw.size() == 2);
    CHECK(cb.steps[1] == std::pair<long, long>{0, 0});

    // kron flattening: (i, j) -> i * dimW + j
    Mat<RatFunc> E01(2, 2), F10(2, 2);
    E01.at(0, 1) = RatFunc(1L);
    F10.at(1, 0) = RatFunc(1L);
    const Mat<RatFunc> K = kron(E01, F10);
    CHECK(K.at(0 * 2 + 1, 1 * 2 + 0) == one_rf);
    CHECK(rank(K) == 1);
}

TEST_CASE("simple cores match the ladder formulas") {
    const Module<RatFunc> V1 = make_Vn<RatFunc>(1);
    CHECK(V1.dim == 2);
    CHECK(V1.k.at(0, 0) == RatFunc::q_power(1));
    CHECK(V1.k.at(1, 1) == RatFunc::q_power(-1));
    CHECK(V1.e1p.at(0, 1) == one_rf);
    CHECK(V1.e1m.at(1, 0) == one_rf);
    CHECK(hw_index(V1) == 0);

    const Module<RatFunc> V2 = make_Vn<RatFunc>(2);
    CHECK(V2.e1p.at(0, 1) == RatFunc(qint(2)));
    CHECK(V2.e1p.at(1, 2) == one_rf);
    CHECK(V2.e1m.at(1, 0) == one_rf);
    CHECK(V2.e1m.at(2, 1) == RatFunc(qint(2)));
    CHECK(V2.wt == std::vector<long>{2, 0, -2});
    for (long n = 0; n <= 4; ++n) CHECK_NOTHROW(relation_audit(make_Vn<RatFunc>(n)));

    const Module<Cyc> W2 = make_Vn<Cyc>(2, 3);
    CHECK(W2.e1p.at(0, 1) == Cyc::from_long(-1, 3));  // [2] at a third root of unity
    CHECK(W2.k.at(0, 0) == Cyc::eps_power(2, 3));
    CHECK(W2.k.at(2, 2) == Cyc::eps_power(-2, 3));
    CHECK_NOTHROW(relation_audit(W2));

    CHECK_THROWS_AS(make_Vn<Cyc>(3, 3), QraError);
    CHECK_THROWS_AS(make_Vn<Cyc>(2, 4), QraError);
    CHECK_THROWS_AS(make_Vn<RatFunc>(2, 3), QraError);
    CHECK_THROWS_AS(make_Vn<RatFunc>(-1), QraError);
}

TEST_CASE("evaluation twist fills in the loop Chevalley operators") {
    const Module<RatFunc> V = Vna(1, Rat(3, 2));
    CHECK(V.has_e0);
    CHECK(V.e0p.at(1, 0) == RatFunc(Laurent::q_power(1, Rat(3, 2))));
    CHECK(V.e0m.at(0, 1) == RatFunc(Laurent::q_power(-1, Rat(2, 3))));
    CHECK_NOTHROW(relation_audit(V));
    CHECK_NOTHROW(relation_audit(Vna(2, Rat(2))));
    CHECK_NOTHROW(relation_audit(Vna(3, Rat(-1))));
    CHECK_NOTHROW(relation_audit(tensor(Vna(1, Rat(2)), Vna(1, Rat(3)))));
    CHECK_NOTHROW(relation_audit(tensor(Vna(2, Rat(3, 2)), Vna(1, Rat(5)))));

    CHECK_THROWS_AS(evaluation_twist(make_Vn<RatFunc>(1), RatFunc()), QraError);
    CHECK_THROWS_AS(evaluation_twist(Vna(1, Rat(2)), RatFunc(2L)), QraError);
    CHECK_THROWS_AS(tensor(make_Vn<Cyc>(1, 3), make_Vn<Cyc>(1, 5)), QraError);
}

TEST_CASE("derived window reproduces the evaluation formulas") {
    for (long n : {1L, 2L}) {
        for (const Rat& a : {Rat(2), Rat(3, 2)}) {
            const Module<RatFunc> V = Vna(n, a);
            DerivedWindow<RatFunc> W = drinfeld_matrices(V, 2);
            const RatFunc rfa{a};
            for (long r = -3; r <= 3; ++r) {
                const RatFunc c = RatFunc::q_power(-r) * rfa.pow(r);
                CHECK(W.op(sym_xp(r)) == scaled(kpow(V, r) * V.e1p, c));
                CHECK(W.op(sym_xm(r)) == scaled(V.e1m * kpow(V, r), c));
            }
            // divided powers follow the same pattern with q^{-n r^2} a^{n r}
            for (long m : {-2L, -1L, 1L, 2L})
                for (long r : {2L, 3L}) {
                    const RatFunc c = RatFunc::q_power(-m * r * r) * rfa.pow(m * r);
                    CHECK(W.op(sym_xp(m, r)) == scaled(kpow(V, m * r) * W.op(sym_xp(0, r)), c));
                }
        }
    }

    // the two misreadings of the loop seeds fail the evaluation formulas
    const Module<RatFunc> V = Vna(1, Rat(2));
    DerivedWindow<RatFunc> W(V);
    CHECK(W.op(sym_xm(1)) == V.k * V.e0p);
    CHECK_FALSE(W.op(sym_xm(1)) == V.e0p);
    CHECK_FALSE(W.op(sym_xp(-1)) == V.kinv * V.e0m);
}

TEST_CASE("psi ladder matches the polynomial ratio on the highest weight line") {
    const Rat a{2};
    for (long n : {1L, 2L, 3L}) {
        const Module<RatFunc> V = Vna(n, a);
        DerivedWindow<RatFunc> W(V);
        const auto s = hw_psi_series(drinfeld_poly_coeffs(n, a), 4);
        for (long r = 0; r <= 4; ++r) {
            const Vec<RatFunc> col = mat_vec(W.op(sym_psip(r)), unit_vec(V.dim, 0L, one_rf));
            CHECK(col[0] == s[static_cast<size_t>(r)]);
            for (long j = 1; j < V.dim; ++j) CHECK(col[static_cast<size_t>(j)].is_zero());
        }
        if (n == 2) {
            const RatFunc hand{Laurent::q_power(3, a) - Laurent::q_power(-1, a)};
            CHECK(s[1] == hand);
        }
    }

    // h_r acts on the top vector of V(1)_a by a^r q^{-r} [r] / r
    const Module<RatFunc> V1 = Vna(1, a);
    DerivedWindow<RatFunc> W1(V1);
    for (long r = 1; r <= 3; ++r) {
        const RatFunc expect = RatFunc::q_power(-r) * RatFunc(qint(r)) * RatFunc(a).pow(r) *
                               RatFunc(Rat(1, r));
        CHECK(W1.op(sym_h(r)).at(0, 0) == expect);
    }
}

TEST_CASE("loop relation audit passes on evaluation tensors") {
    CHECK_NOTHROW(drinfeld_matrices(tensor(Vna(1, Rat(2)), Vna(1, Rat(3))), 2));
    CHECK_NOTHROW(drinfeld_matrices(tensor(Vna(2, Rat(3, 2)), Vna(1, Rat(-1))), 2));
}

TEST_CASE("divided powers act on symbolic tensor products") {
    auto V1sym = [](long i) { return evaluation_twist(make_Vn<MPoly>(1), MPoly::var(i)); };

    // single symbolic factor: the evaluation formulas hold with a a symbol
    {
        const Module<MPoly> V = V1sym(0);
        DerivedWindow<MPoly> W = drinfeld_matrices(V, 1);
        for (long r = -2; r <= 2; ++r) {
            const MPoly c = MPoly::constant(RatFunc::q_power(-r)) * MPoly::var(0, r);
            CHECK(W.op(sym_xp(r)) == scaled(kpow(V, r) * V.e1p, c));
        }
    }

    for (long r = 2; r <= 4; ++r) {
        Module<MPoly> T = V1sym(0);
        for (long i = 1; i < r; ++i) T = tensor(T, V1sym(i));
        DerivedWindow<MPoly> W(T);
        const MPoly one = scalar_one<MPoly>(0);
        const Vec<MPoly> bottom = unit_vec(T.dim, T.dim - 1, one);
        const Vec<MPoly> img = mat_vec(W.op(sym_xp(0, r)), bottom);
        CHECK(img == unit_vec(T.dim, 0L, one));
        CHECK(vec_is_zero(mat_vec(W.op(sym_xp(0, r + 1)), bottom)));
    }
}

TEST_CASE("power law for q^2-commuting halves of the coproduct") {
    const Module<RatFunc> L = Vna(1, Rat(2)), R = Vna(2, Rat(3));
    DerivedWindow<RatFunc> WL(L), WR(R);
    const Mat<RatFunc> IL = Mat<RatFunc>::identity(L.dim, one_rf);
    for (long n : {0L, 1L}) {
        const Mat<RatFunc> A = kron(WL.op(sym_xp(n)), R.k);
        const Mat<RatFunc> B = kron(IL, WR.op(sym_xp(n)));
        for (long s = 1; s <= 4; ++s) {
            const Mat<RatFunc> lhs =
                scaled(mat_pow(A + B, s, one_rf), RatFunc(qfact(s)).inverse());
            Mat<RatFunc> rhs(L.dim * R.dim, L.dim * R.dim);
            for (long t = 0; t <= s; ++t) {
                Mat<RatFunc> term = kron(WL.op(sym_xp(n, t)),
                                         WR.op(sym_xp(n, s - t)) * mat_pow(R.k, t, one_rf));
                term.scale(RatFunc::q_power(t * (s - t)));
                rhs += term;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("tensor flattening is associative") {
    const Module<RatFunc> A = Vna(1, Rat(2)), B = Vna(1, Rat(3)), C = Vna(2, Rat(5));
    const Module<RatFunc> X = tensor(tensor(A, B), C), Y = tensor(A, tensor(B, C));
    CHECK(X.e1p == Y.e1p);
    CHECK(X.e1m == Y.e1m);
    CHECK(X.e0p == Y.e0p);
    CHECK(X.e0m == Y.e0m);
    CHECK(X.k == Y.k);
    CHECK(X.wt == Y.wt);
}

TEST_CASE("specialization and the divided powers at a root of unity") {
    const Module<Cyc> W = specialize_module(Vna(1, Rat(2)), 3);
    CHECK(W.k.at(0, 0) == Cyc::eps_power(1, 3));
    CHECK(W.k.at(1, 1) == Cyc::eps_power(-1, 3));
    CHECK_NOTHROW(relation_audit(W));

    // a doctored entry with a genuine pole is named
    {
        Module<RatFunc> bad = Vna(1, Rat(2));
        Laurent phi3;
        phi3 += Laurent::q_power(2);
        phi3 += Laurent::q_power(1);
        phi3 += Laurent(1L);
        bad.e1p.at(0, 1) = RatFunc(Laurent(1L), phi3);
        try {
            specialize_module(bad, 3);
            FAIL("expected PoleAtRoot");
        } catch (const PoleAtRoot& e) {
            CHECK(std::string(e.what()).find("e1+ entry (0,1)") != std::string::npos);
        }
    }

    for (long ell : {3L, 5L}) {
        EpsPtr src = specialized_source(Vna(2, Rat(2)), ell);
        const Cyc a = Cyc::from_rat(Rat(2), ell);
        for (long m : {-2L, -1L, 1L, 2L})
            for (long r : {1L, 2L, 3L}) {
                const Cyc c = Cyc::eps_power(-m * r * r, ell) * a.pow(m * r);
                CHECK(src->op(sym_xp(m, r)) ==
                      scaled(kpow(src->mod(), m * r) * src->op(sym_xp(0, r)), c));
            }
    }

    // [k; 0 / l] from the generic product formula equals the label diagonal
    {
        EpsPtr src = specialized_source(tensor(Vna(2, Rat(2)), Vna(1, Rat(3))), 3);
        Vec<Cyc> d;
        for (long w : src->mod().wt) d.push_back(qbinom_eps(w, 3, 3));
        CHECK(src->op(sym_kbin(3)) == Mat<Cyc>::diag(d));
        const auto wd = weight_decomposition(*src);
        CHECK(wd.at(3) == std::vector<long>{0});
        CHECK(wd.at(1) == std::vector<long>{1, 2});
        CHECK(wd.at(-1) == std::vector<long>{3, 4});
        CHECK(wd.at(-3) == std::vector<long>{5});
        for (const auto& [w, idx] : wd) CHECK(idx.size() == wd.at(-w).size());
    }
}

TEST_CASE("frobenius pullback acts through classical divided powers") {
    EpsPtr F = frobenius_pullback(1, Cyc::from_long(2, 3), 3);
    CHECK(F->mod().dim == 2);
    CHECK(F->mod().e1p.is_zero());
    CHECK(F->mod().e0p.is_zero());
    CHECK(F->mod().k == Mat<Cyc>::identity(2, Cyc::from_long(1, 3)));
    CHECK(F->mod().wt == std::vector<long>{3, -3});
    CHECK(F->op(sym_xp(0)).is_zero());
    CHECK(F->op(sym_xp(0, 2)).is_zero());
    CHECK(F->op(sym_xp(0, 3)).at(0, 1) == Cyc::from_long(1, 3));
    CHECK(F->op(sym_xm(0, 3)).at(1, 0) == Cyc::from_long(1, 3));
    CHECK(F->op(sym_xp(0, 6)).is_zero());  // (ebar+)^2 = 0 in dimension 2
    CHECK(F->op(sym_xp(1, 3)) == scaled(F->op(sym_xp(0, 3)), Cyc::from_long(8, 3)));
    CHECK(F->op(sym_xm(1, 3)) == scaled(F->op(sym_xm(0, 3)), Cyc::from_long(8, 3)));
    CHECK(F->op(sym_xp(2, 3)) == scaled(F->op(sym_xp(0, 3)), Cyc::from_long(64, 3)));
    CHECK(F->op(sym_psip(1)).is_zero());
    CHECK(F->op(sym_psip(0)) == F->mod().k);
    CHECK(F->op(sym_kbin(3)) == Mat<Cyc>::diag({Cyc::from_long(1, 3), Cyc::from_long(-1, 3)}));
    const auto wd = weight_decomposition(*F);
    CHECK(wd.at(3) == std::vector<long>{0});
    CHECK(wd.at(-3) == std::vector<long>{1});

    // the pullback depends on b only through b^l
    EpsPtr Fe = frobenius_pullback(1, Cyc::from_long(2, 3) * Cyc::eps_power(1, 3), 3);
    CHECK(Fe->op(sym_xp(1, 3)) == F->op(sym_xp(1, 3)));
    CHECK(Fe->op(sym_xm(2, 3)) == F->op(sym_xm(2, 3)));

    // classical m-th powers over m! in higher rank
    EpsPtr G = frobenius_pullback(2, Cyc::from_long(1, 3), 3);
    CHECK(G->op(sym_xp(0, 3)).at(0, 1) == Cyc::from_long(2, 3));
    CHECK(G->op(sym_xp(0, 3)).at(1, 2) == Cyc::from_long(1, 3));
    CHECK(G->op(sym_xp(0, 6)).at(0, 2) == Cyc::from_long(1, 3));  // 2 * 1 / 2!
    CHECK_THROWS_AS(G->op(sym_p(1)), MissingSymbol);
}

TEST_CASE("lusztig tensor factorization at l = 3") {
    EpsPtr M2 = lusztig_tensor(2, 3), M3 = lusztig_tensor(3, 3), M4 = lusztig_tensor(4, 3);
    CHECK(M2->mod().dim == 3);
    CHECK(M3->mod().dim == 2);
    CHECK(M4->mod().dim == 4);

    const auto w2 = weight_decomposition(*M2);
    CHECK(w2.size() == 3);
    CHECK(w2.count(2) == 1);
    CHECK(w2.count(0) == 1);
    CHECK(w2.count(-2) == 1);

    const auto w4 = weight_decomposition(*M4);
    CHECK(w4.size() == 4);
    for (long w : {4L, 2L, -2L, -4L}) CHECK(w4.at(w).size() == 1);
    for (const auto& [w, idx] : w4) CHECK(idx.size() == w4.at(-w).size());

    CHECK(M4->supports(sym_xp(0, 3)));
    CHECK_FALSE(M4->supports(sym_xm(1)));  // the sl2 factor carries no loop operators
    CHECK_FALSE(M4->op(sym_xp(0, 3)).is_zero());
}

TEST_CASE("commuting square of evaluation and pullback") {
    CHECK(commuting_square_check(Rat(1), 1, 3));
    CHECK(commuting_square_check(Rat(2), 1, 3));
    CHECK(commuting_square_check(Rat(1), 0, 3));
}

TEST_CASE("malformed presentations are rejected") {
    // non-diagonalizable k
    {
        Module<Cyc> V;
        V.ell = 3;
        V.dim = 2;
        V.k = Mat<Cyc>::identity(2, Cyc::from_long(1, 3));
        V.k.at(0, 1) = Cyc::from_long(1, 3);
        V.wt = {0, 0};
        CHECK_THROWS_AS(weight_decomposition(V, Mat<Cyc>(2, 2)), NonSemisimple);
    }
    // k eigenvalue outside the root-of-unity grid
    {
        Module<Cyc> V;
        V.ell = 3;
        V.dim = 1;
        V.k = Mat<Cyc>::diag({Cyc::from_long(2, 3)});
        V.wt = {0};
        CHECK_THROWS_AS(weight_decomposition(V, Mat<Cyc>::diag({Cyc::from_long(0, 3)})),
                        NonSemisimple);
    }
    // fractional [k;0/l] eigenvalue
    {
        Module<Cyc> V;
        V.ell = 3;
        V.dim = 1;
        V.k = Mat<Cyc>::diag({Cyc::from_long(1, 3)});
        V.wt = {0};
        CHECK_THROWS_AS(weight_decomposition(V, Mat<Cyc>::diag({Cyc::eps_power(1, 3)})),
                        NonSemisimple);
    }
    // labels contradicting the matrices
    {
        Module<Cyc> V;
        V.ell = 3;
        V.dim = 1;
        V.k = Mat<Cyc>::diag({Cyc::from_long(1, 3)});
        V.wt = {3};
        CHECK_THROWS_AS(weight_decomposition(V, Mat<Cyc>::diag({Cyc::from_long(0, 3)})),
                        RelationViolation);
    }
    // broken sl2 commutator is caught by the audit
    {
        Module<RatFunc> V = make_Vn<RatFunc>(1);
        V.e1p.at(0, 1) = RatFunc(2L);
        CHECK_THROWS_AS(relation_audit(V), RelationViolation);
    }
}
