#pragma once

#include <utility>
#include <vector>

#include "qra/words.hpp"

namespace qra {

// P_n as a polynomial in the commuting h_r (recursive route); P_0 = 1,
// negative n through the Omega twist. Coefficients stay in Q(q).
Element build_P(long n);

// P_n by the closed partition-sum formula (independent of the recursion)
Element build_P_exp(long n);

// P_n through the psi-side recursion. The 1/(1 - q^{-2n}) coefficients are
// generic-only: they acquire poles at eps whenever l | n, so evaluating the
// result on a specialized module raises PoleAtRoot.
Element psi_recursion(long n);

enum class PRoute { h_recursion, psi_route, exp_formula };
Element build_P(long n, PRoute route);

// rewrite every psi symbol as k^{pm1} times its h-polynomial (exp series)
Element expand_psi_in_h(const Element& e);

// layer coefficients of the generating series of divided powers:
// recursion route, composition-sum route (independent oracle), and the
// Young-diagram closed form
Element build_D_plus(long n, long r);
Element build_D_plus_series(long n, long r);
Element build_D_plus_young(long n, long r);

enum class DPlusRoute { series, recursion, young };
Element build_D_plus(long n, long r, DPlusRoute route);

// minus-side layers via the composition sum; equals (-1)^r T(Phi(.)) of the
// plus-side layer, which tests pin down
Element build_D_minus(long n, long r);

// sum_{m=0}^n P_m D_{n-m}^+(xi^(r)) with opaque P symbols
Element build_Dbb(long n, long r);

// A_{0,n} = x_n^+, A_{r,n} = A_{r-1,n} x_0^+ - q^{2r} x_0^+ A_{r-1,n}
Element build_A(long r, long n);

// B_{r,n} = sum_{s=0}^r (x_0^+)^s x_n^+ (x_0^+)^{r-s}
Element build_B(long r, long n);

// (total rows, sum of adjacent-column products) of the diagram with pi[i-1]
// rows of length i
std::pair<long, long> young_stats(const std::vector<long>& pi);

}  // namespace qra
