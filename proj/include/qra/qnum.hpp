#pragma once

#include "qra/laurent.hpp"

namespace qra {

// balanced q-integer [n] = (q^n - q^{-n})/(q - q^{-1}); [-n] = -[n], [0] = 0
Laurent qint(long n);

// [n]! for n >= 0
Laurent qfact(long n);

// balanced Gaussian binomial; n may be negative, r >= 0.
// Product route with exact division: prod_{s=1..r} [n-s+1]/[s].
Laurent qbinom(long n, long r);

// independent Pascal-recurrence route, n >= 0 only (cross-check oracle)
Laurent qbinom_pascal(long n, long r);

}  // namespace qra
