#include "qra/module.hpp"

namespace qra {

namespace {

Mat<Cyc> spec_mat(const Mat<RatFunc>& m, long ell, const char* label) {
    Mat<Cyc> r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            try {
                r.at(i, j) = specialize(m.at(i, j), ell);
            } catch (const PoleAtRoot& e) {
                throw PoleAtRoot(std::string(e.what()) + " at " + label + " entry (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    return r;
}

}  // namespace

Module<Cyc> specialize_module(const Module<RatFunc>& V, long ell) {
    if (V.ell != 0) throw QraError("specialize_module expects a generic module");
    if (ell < 3 || ell % 2 == 0) throw QraError("specialized modules need odd l >= 3");
    Module<Cyc> R;
    R.ell = ell;
    R.dim = V.dim;
    R.has_e0 = V.has_e0;
    R.wt = V.wt;
    R.name = V.name + "|l=" + std::to_string(ell);
    R.e1p = spec_mat(V.e1p, ell, "e1+");
    R.e1m = spec_mat(V.e1m, ell, "e1-");
    R.k = spec_mat(V.k, ell, "k");
    R.kinv = spec_mat(V.kinv, ell, "k^{-1}");
    if (V.has_e0) {
        R.e0p = spec_mat(V.e0p, ell, "e0+");
        R.e0m = spec_mat(V.e0m, ell, "e0-");
    }
    return R;
}

}  // namespace qra
