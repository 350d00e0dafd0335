#include "qra/drinfeld.hpp"

#include <string>

#include "qra/evaluator.hpp"
#include "qra/rationals.hpp"

namespace qra {

namespace {

template <class S>
long lead_index(const Vec<S>& v) {
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return static_cast<long>(i);
    throw QraError("zero vector has no leading coordinate");
}

// kernel of op restricted to span(basis); members are full-space vectors
std::vector<Vec<Cyc>> cut_kernel(const Mat<Cyc>& op, const std::vector<Vec<Cyc>>& basis,
                                 const Cyc& one) {
    if (basis.empty()) return {};
    const long dim = op.rows();
    std::vector<Vec<Cyc>> images;
    images.reserve(basis.size());
    bool all_zero = true;
    for (const auto& b : basis) {
        Vec<Cyc> w = mat_vec(op, b);
        if (!vec_is_zero(w)) all_zero = false;
        images.push_back(std::move(w));
    }
    if (all_zero) return basis;
    std::vector<Vec<Cyc>> coords = kernel_basis(mat_from_columns(images, dim), one);
    std::vector<Vec<Cyc>> out;
    out.reserve(coords.size());
    for (const auto& c : coords) {
        Vec<Cyc> v(static_cast<size_t>(dim));
        for (size_t j = 0; j < basis.size(); ++j) {
            if (c[j].is_zero()) continue;
            for (long i = 0; i < dim; ++i)
                v[static_cast<size_t>(i)] += c[j] * basis[j][static_cast<size_t>(i)];
        }
        out.push_back(std::move(v));
    }
    return out;
}

// shared between the eps and generic paths; win is an op(Sym) provider
template <class S, class W>
DrinfeldPoly<S> extract_at(W& win, const Vec<S>& v, long n, long ell, const std::string& where) {
    if (n < 0) throw QraError("certified weight must be non-negative on " + where);
    const S one = scalar_one<S>(ell);
    const size_t lead = static_cast<size_t>(lead_index(v));
    if (!(v[lead] == one)) throw QraError("certificate vector must have leading coordinate 1");
    auto eig = [&](long r, bool plus_side) -> S {
        Vec<S> w = eval_apply(cartan_pairing_word(r, plus_side), win, v);
        const S lam = w[lead];
        for (size_t i = 0; i < v.size(); ++i)
            if (!(w[i] == lam * v[i]))
                throw NotEigen(std::string(plus_side ? "plus" : "minus") +
                               " pairing at order " + std::to_string(r) +
                               " is not proportional to the certified vector on " + where);
        return lam;
    };
    DrinfeldPoly<S> P;
    P.weight = n;
    for (long r = 0; r <= n; ++r) P.plus_coeffs.push_back(eig(r, true));
    for (long r = 0; r <= n; ++r) P.minus_coeffs.push_back(eig(r, false));
    if (P.plus_coeffs.back().is_zero())
        throw RelationViolation("top series coefficient vanishes at the certified weight on " +
                                where);
    if (!eig(n + 1, true).is_zero() || !eig(n + 1, false).is_zero())
        throw RelationViolation("series coefficient persists beyond the certified weight on " +
                                where);
    const S& top = P.plus_coeffs.back();
    for (long r = 0; r <= n; ++r)
        if (!(P.minus_coeffs[static_cast<size_t>(r)] * top ==
              P.plus_coeffs[static_cast<size_t>(n - r)]))
            throw RelationViolation("minus series fails the reversal identity at order " +
                                    std::to_string(r) + " on " + where);
    return P;
}

}  // namespace

Element cartan_pairing_word(long r, bool plus_side) {
    if (r < 0) throw QraError("pairing order must be non-negative");
    Word w;
    w.reserve(static_cast<size_t>(r) + 2);
    for (long t = 0; t < r; ++t) w.push_back(plus_side ? sym_kinv() : sym_k());
    w.push_back(plus_side ? sym_xp(0, r) : sym_xp(-1, r));
    w.push_back(plus_side ? sym_xm(1, r) : sym_xm(0, r));
    RatFunc c = RatFunc::q_power(plus_side ? r * r : -r * r);
    if (r % 2) c = -c;
    return Element::from_word(w, c);
}

long read_weight(EpsSource& src, const Vec<Cyc>& v) {
    const long l = src.ell();
    const size_t lead = static_cast<size_t>(lead_index(v));
    auto eigen_of = [&](const Mat<Cyc>& m) -> Cyc {
        Vec<Cyc> w = mat_vec(m, v);
        const Cyc lam = w[lead] / v[lead];
        for (size_t i = 0; i < v.size(); ++i)
            if (!(w[i] == lam * v[i]))
                throw NotEigen("vector is not a Cartan eigenvector on " + src.mod().name);
        return lam;
    };
    const Cyc lk = eigen_of(src.mod().k);
    long n0 = -1;
    for (long t = 0; t < l; ++t)
        if (lk == Cyc::eps_power(t, l)) {
            n0 = t;
            break;
        }
    if (n0 < 0) throw NotEigen("k eigenvalue is not a power of eps on " + src.mod().name);
    const Cyc lb = eigen_of(src.op(sym_kbin(l)));
    if (!lb.is_rat() || !rat_is_int(lb.as_rat()))
        throw NotEigen("[k;0/l] eigenvalue is not an integer on " + src.mod().name);
    return n0 + l * rat_to_long(lb.as_rat());
}

std::vector<HighestWeightCertificate> highest_weight_vectors(EpsSource& src) {
    const long l = src.ell();
    const long dim = src.mod().dim;
    const Cyc one = Cyc::from_long(1, l);

    struct Space {
        long n;
        std::vector<Vec<Cyc>> basis;
    };
    std::vector<Space> spaces;
    const auto wd = weight_decomposition(src);
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) {
        Space sp{it->first, {}};
        sp.basis.reserve(it->second.size());
        for (long j : it->second) sp.basis.push_back(unit_vec(dim, j, one));
        spaces.push_back(std::move(sp));
    }

    auto cut_radius = [&](long n) {
        if (!src.supports(sym_xp(n, 1))) return;
        for (const Sym& s : {sym_xp(n, 1), sym_xp(n, l)}) {
            const Mat<Cyc>& m = src.op(s);
            for (Space& sp : spaces) sp.basis = cut_kernel(m, sp.basis, one);
        }
    };
    auto total = [&] {
        long t = 0;
        for (const Space& sp : spaces) t += static_cast<long>(sp.basis.size());
        return t;
    };

    const long w0 = dim > 0 ? dim : 1;
    const long wmax = w0 + 2 * l + 8;
    std::vector<std::pair<long, long>> evidence;
    for (long n = -w0; n <= w0; ++n) cut_radius(n);
    evidence.emplace_back(w0, total());
    long w = w0;
    long stable = 0;
    while (stable < 2) {
        if (w == wmax)
            throw NoStabilization("joint raising kernel still changing at radius " +
                                  std::to_string(w) + " on " + src.mod().name);
        ++w;
        cut_radius(w);
        cut_radius(-w);
        evidence.emplace_back(w, total());
        stable = evidence[evidence.size() - 2].second == evidence.back().second ? stable + 1 : 0;
    }

    std::vector<HighestWeightCertificate> certs;
    for (const Space& sp : spaces) {
        SpanBasis<Cyc> canon(dim);
        for (const auto& v : sp.basis) canon.add(v);
        for (const auto& [piv, row] : canon.rows()) {
            (void)piv;
            certs.push_back({row, sp.n, w, evidence});
        }
    }
    return certs;
}

DrinfeldPolynomial extract_polynomial(EpsSource& src, const HighestWeightCertificate& cert) {
    const long n = read_weight(src, cert.vector);
    if (n != cert.weight)
        throw RelationViolation("certificate weight disagrees with the Cartan eigenvalues on " +
                                src.mod().name);
    return extract_at<Cyc>(src, cert.vector, n, src.ell(), src.mod().name);
}

template <class S>
DrinfeldPoly<S> extract_polynomial_generic(DerivedWindow<S>& win) {
    const Module<S>& V = win.module();
    const long hw = hw_index(V);
    const long n = V.wt[static_cast<size_t>(hw)];
    return extract_at<S>(win, unit_vec(V.dim, hw, scalar_one<S>(0)), n, 0, V.name);
}

template DrinfeldPoly<RatFunc> extract_polynomial_generic(DerivedWindow<RatFunc>&);
template DrinfeldPoly<MPoly> extract_polynomial_generic(DerivedWindow<MPoly>&);

bool check_multiplicativity(const EpsPtr& V, const EpsPtr& W,
                            const HighestWeightCertificate& cv,
                            const HighestWeightCertificate& cw) {
    const DrinfeldPolynomial pv = extract_polynomial(*V, cv);
    const DrinfeldPolynomial pw = extract_polynomial(*W, cw);
    EpsPtr T = tensor_source(V, W);
    HighestWeightCertificate ct;
    ct.vector = kron_vec(cv.vector, cw.vector);
    ct.weight = cv.weight + cw.weight;
    ct.window = cv.window > cw.window ? cv.window : cw.window;
    DrinfeldPolynomial pt;
    try {
        pt = extract_polynomial(*T, ct);
    } catch (const NotEigen&) {
        return false;
    } catch (const RelationViolation&) {
        return false;
    }
    return pt.plus_coeffs == poly_mul(pv.plus_coeffs, pw.plus_coeffs) &&
           pt.minus_coeffs == poly_mul(pv.minus_coeffs, pw.minus_coeffs);
}

}  // namespace qra
