#pragma once

#include <memory>
#include <vector>

#include "qra/derived.hpp"
#include "qra/mpoly.hpp"
#include "qra/words.hpp"

namespace qra {

// Words act on column vectors with the leftmost symbol applied last, so a
// word maps to the product of its symbol matrices in written order.
template <class S>
Mat<S> eval_element(const Element& e, DerivedWindow<S>& W) {
    const long dim = W.module().dim;
    const S one = scalar_one<S>(W.module().ell);
    Mat<S> acc(dim, dim);
    for (const auto& [w, c] : e.terms()) {
        Mat<S> term = Mat<S>::identity(dim, one);
        for (const Sym& s : w) term = term * W.op(s);
        term.scale(scalar_rf<S>(c, W.module().ell));
        acc += term;
    }
    return acc;
}

// Vector route: cheaper than a full matrix when only one column is needed.
template <class S>
Vec<S> eval_apply(const Element& e, DerivedWindow<S>& W, const Vec<S>& v) {
    Vec<S> acc(v.size());
    for (const auto& [w, c] : e.terms()) {
        Vec<S> cur = v;
        for (auto it = w.rbegin(); it != w.rend(); ++it) cur = mat_vec(W.op(*it), cur);
        const S cc = scalar_rf<S>(c, W.module().ell);
        for (size_t i = 0; i < cur.size(); ++i) acc[i] += cur[i] * cc;
    }
    return acc;
}

Mat<Cyc> eval_element(const Element& e, EpsSource& src);
Vec<Cyc> eval_apply(const Element& e, EpsSource& src, const Vec<Cyc>& v);

template <class S>
bool operators_equal_on(const Element& x, const Element& y, DerivedWindow<S>& W) {
    return eval_element(x, W) == eval_element(y, W);
}

// Faithful zero test for plus-alphabet elements: a homogeneous element of
// degree r in the x^+ symbols (all indices >= 0) vanishes iff it kills the
// bottom vector of a rank-r tensor of two-dimensional evaluation modules
// with independent symbolic parameters.  Reusable across many comparisons
// of the same degree; the operator cache lives for the oracle's lifetime.
class UplusOracle {
public:
    explicit UplusOracle(long degree);

    long degree() const { return deg_; }
    DerivedWindow<MPoly>& window() { return *win_; }
    const Vec<MPoly>& bottom() const { return bottom_; }

    Vec<MPoly> apply(const Element& e);
    // gated faithful test; throws QraError on non-plus or wrong-degree input
    bool kills(const Element& d);

private:
    long deg_;
    std::unique_ptr<DerivedWindow<MPoly>> win_;
    Vec<MPoly> bottom_;
};

bool equal_uplus(const Element& x, const Element& y, long degree);

// Truncated formal series over the word algebra, coefficient of u^t at t.
using USeries = std::vector<Element>;

// sum_t q^{shift_exp * t} x_t^+ u^t, so shift_exp = 2 substitutes q^2 u
USeries xplus_series(long order, long shift_exp = 0);
// sum_t psi_t^+ u^t with the t = 0 coefficient equal to k
USeries psip_series(long order);
USeries series_mul(const USeries& a, const USeries& b, long order);
USeries series_pow(const USeries& a, long r, long order);
// a^r / [r]!
USeries series_divided(const USeries& a, long r, long order);
void series_scale(USeries& a, const RatFunc& c);
void series_add(USeries& a, const USeries& b);
void series_sub(USeries& a, const USeries& b);

}  // namespace qra
