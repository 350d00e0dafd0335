#include "qra/evaluator.hpp"

#include "qra/qnum.hpp"

namespace qra {

Mat<Cyc> eval_element(const Element& e, EpsSource& src) {
    const long dim = src.mod().dim;
    const Cyc one = scalar_one<Cyc>(src.ell());
    Mat<Cyc> acc(dim, dim);
    for (const auto& [w, c] : e.terms()) {
        Mat<Cyc> term = Mat<Cyc>::identity(dim, one);
        for (const Sym& s : w) term = term * src.op(s);
        term.scale(scalar_rf<Cyc>(c, src.ell()));
        acc += term;
    }
    return acc;
}

Vec<Cyc> eval_apply(const Element& e, EpsSource& src, const Vec<Cyc>& v) {
    Vec<Cyc> acc(v.size(), Cyc::zero(src.ell()));
    for (const auto& [w, c] : e.terms()) {
        Vec<Cyc> cur = v;
        for (auto it = w.rbegin(); it != w.rend(); ++it) cur = mat_vec(src.op(*it), cur);
        const Cyc cc = scalar_rf<Cyc>(c, src.ell());
        for (size_t i = 0; i < cur.size(); ++i) acc[i] += cur[i] * cc;
    }
    return acc;
}

UplusOracle::UplusOracle(long degree) : deg_(degree) {
    if (degree < 1) throw QraError("faithful oracle needs degree >= 1");
    Module<MPoly> m = evaluation_twist(make_Vn<MPoly>(1), MPoly::var(0));
    for (long i = 1; i < degree; ++i)
        m = tensor(m, evaluation_twist(make_Vn<MPoly>(1), MPoly::var(i)));
    win_ = std::make_unique<DerivedWindow<MPoly>>(std::move(m));
    bottom_ = unit_vec<MPoly>(win_->module().dim, win_->module().dim - 1,
                              scalar_one<MPoly>(0));
}

Vec<MPoly> UplusOracle::apply(const Element& e) {
    return eval_apply(e, *win_, bottom_);
}

bool UplusOracle::kills(const Element& d) {
    if (d.is_zero()) return true;
    if (!d.is_uplusplus())
        throw QraError("faithful oracle needs words in the non-negative plus alphabet");
    long plus = 0, minus = 0;
    if (!d.homogeneous_xdegree(plus, minus) || minus != 0 || plus != deg_)
        throw QraError("faithful oracle needs a homogeneous plus element whose degree matches the tensor rank");
    return vec_is_zero(apply(d));
}

bool equal_uplus(const Element& x, const Element& y, long degree) {
    UplusOracle oracle(degree);
    return oracle.kills(x - y);
}

USeries xplus_series(long order, long shift_exp) {
    USeries s;
    s.reserve(order + 1);
    for (long t = 0; t <= order; ++t) {
        Element e = Element::from_sym(sym_xp(t));
        if (shift_exp != 0) e = RatFunc::q_power(shift_exp * t) * e;
        s.push_back(std::move(e));
    }
    return s;
}

USeries psip_series(long order) {
    USeries s;
    s.reserve(order + 1);
    s.push_back(Element::from_sym(sym_k()));
    for (long t = 1; t <= order; ++t) s.push_back(Element::from_sym(sym_psip(t)));
    return s;
}

USeries series_mul(const USeries& a, const USeries& b, long order) {
    USeries c(order + 1);
    for (long m = 0; m <= order; ++m) {
        for (long i = 0; i <= m; ++i) {
            if (i >= static_cast<long>(a.size())) break;
            if (m - i >= static_cast<long>(b.size())) continue;
            c[m] = c[m] + a[i] * b[m - i];
        }
    }
    return c;
}

USeries series_pow(const USeries& a, long r, long order) {
    USeries c(order + 1);
    c[0] = Element::one();
    for (long i = 0; i < r; ++i) c = series_mul(c, a, order);
    return c;
}

USeries series_divided(const USeries& a, long r, long order) {
    USeries c = series_pow(a, r, order);
    series_scale(c, RatFunc(qfact(r)).inverse());
    return c;
}

void series_scale(USeries& a, const RatFunc& c) {
    for (Element& e : a) e.scale(c);
}

void series_add(USeries& a, const USeries& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
}

void series_sub(USeries& a, const USeries& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = a[i] - b[i];
}

}  // namespace qra
