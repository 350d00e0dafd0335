#include "qra/qnum.hpp"

#include <map>
#include <utility>

#include "qra/errors.hpp"

namespace qra {

Laurent qint(long n) {
    if (n == 0) return Laurent();
    if (n < 0) return -qint(-n);
    Laurent r;
    for (long i = 0; i < n; ++i) r += Laurent::q_power(n - 1 - 2 * i);
    return r;
}

Laurent qfact(long n) {
    if (n < 0) throw QraError("qfact: negative argument");
    Laurent r(1L);
    for (long i = 2; i <= n; ++i) r *= qint(i);
    return r;
}

Laurent qbinom(long n, long r) {
    if (r < 0) throw QraError("qbinom: negative lower index");
    Laurent b(1L);
    for (long s = 1; s <= r; ++s) b = div_exact(b * qint(n - s + 1), qint(s));
    return b;
}

Laurent qbinom_pascal(long n, long r) {
    if (n < 0 || r < 0) throw QraError("qbinom_pascal: negative index");
    if (r > n) return Laurent();
    // [n r] = q^{-r} [n-1 r] + q^{n-r} [n-1 r-1]
    std::map<std::pair<long, long>, Laurent> memo;
    auto rec = [&](auto&& self, long nn, long rr) -> Laurent {
        if (rr == 0 || rr == nn) return Laurent(1L);
        if (rr > nn) return Laurent();
        auto key = std::make_pair(nn, rr);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Laurent v = self(self, nn - 1, rr);
        v.mul_qpow(-rr);
        Laurent w = self(self, nn - 1, rr - 1);
        w.mul_qpow(nn - rr);
        v += w;
        memo.emplace(key, v);
        return v;
    };
    return rec(rec, n, r);
}

}  // namespace qra
