#include "qra/builders.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "qra/qnum.hpp"

namespace qra {

namespace {

RatFunc rf_qpow(long e) { return RatFunc(Laurent::q_power(e)); }

// q - q^-1
Laurent q_minus_qinv() {
  Laurent l = Laurent::q_power(1);
  l -= Laurent::q_power(-1);
  return l;
}

// truncated exp of a series with zero constant term, c[s] the u^s coefficient
std::vector<Element> exp_series(const std::vector<Element>& c, long upto) {
  std::vector<Element> out(static_cast<size_t>(upto) + 1, Element::zero());
  out[0] = Element::one();
  std::vector<Element> pw = out;  // current c^m / m!
  for (long m = 1; m <= upto; ++m) {
    std::vector<Element> next(static_cast<size_t>(upto) + 1, Element::zero());
    for (long i = 0; i <= upto; ++i)
      for (long s = 1; i + s <= upto; ++s) next[i + s] += pw[i] * c[s];
    RatFunc inv_m{Laurent(Rat(1, m))};
    for (long i = 0; i <= upto; ++i) {
      next[i] = inv_m * next[i];
      out[i] += next[i];
    }
    pw = std::move(next);
  }
  return out;
}

// psi^+_n = k * plus_layers[n], psi^-_{-n} = k^-1 * minus_layers[n]
const std::vector<Element>& psi_h_layers(bool plus, long upto) {
  static std::map<std::pair<bool, long>, std::vector<Element>> cache;
  auto it = cache.lower_bound({plus, upto});
  if (it != cache.end() && it->first.first == plus && it->first.second >= upto)
    return it->second;
  std::vector<Element> c(static_cast<size_t>(upto) + 1, Element::zero());
  for (long s = 1; s <= upto; ++s) {
    Laurent coef = q_minus_qinv();
    if (!plus) coef.mul_rat(Rat(-1));
    Element hs = Element::from_sym(sym_h(plus ? s : -s));
    c[s] = RatFunc(coef) * hs;
  }
  auto layers = exp_series(c, upto);
  return cache[{plus, upto}] = std::move(layers);
}

void compositions_rec(long n, long r, std::vector<long>& cur,
                      const std::function<void(const std::vector<long>&)>& f) {
  if (r == 0) {
    if (n == 0) f(cur);
    return;
  }
  if (r == 1) {
    cur.push_back(n);
    f(cur);
    cur.pop_back();
    return;
  }
  for (long m = 0; m <= n; ++m) {
    cur.push_back(m);
    compositions_rec(n - m, r - 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

Element build_P(long n) {
  static std::map<long, Element> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Element out;
  if (n == 0) {
    out = Element::one();
  } else if (n < 0) {
    out = apply_Omega(build_P(-n));
  } else {
    Element acc;
    for (long r = 1; r <= n; ++r) {
      RatFunc c{Laurent::q_power(r, Rat(r))};
      c *= RatFunc(qint(r)).inverse();
      acc += c * (Element::from_sym(sym_h(r)) * build_P(n - r));
    }
    out = RatFunc(Laurent(Rat(-1, n))) * acc;
  }
  return cache[n] = out;
}

Element build_P_exp(long n) {
  if (n == 0) return Element::one();
  if (n < 0) return apply_Omega(build_P_exp(-n));
  Element out;
  // multiplicity vectors (k_1, ..., k_n) with sum r*k_r == n
  std::vector<long> mult(static_cast<size_t>(n) + 1, 0);
  std::function<void(long, long)> rec = [&](long r, long rem) {
    if (rem == 0) {
      RatFunc c = RatFunc::q_power(n);
      Word w;
      for (long i = 1; i <= n; ++i)
        for (long j = 0; j < mult[static_cast<size_t>(i)]; ++j) {
          c *= RatFunc(qint(i)).inverse();
          w.push_back(sym_h(i));
        }
      long parity = 0;
      Rat fact(1);
      for (long i = 1; i <= n; ++i) {
        parity += mult[static_cast<size_t>(i)];
        for (long j = 2; j <= mult[static_cast<size_t>(i)]; ++j) fact *= j;
      }
      c *= RatFunc(Laurent(Rat(parity % 2 ? -1 : 1) / fact));
      out.add_term(w, c);
      return;
    }
    if (r > rem) return;
    for (long k = 0; k * r <= rem; ++k) {
      mult[static_cast<size_t>(r)] = k;
      rec(r + 1, rem - k * r);
      mult[static_cast<size_t>(r)] = 0;
    }
  };
  rec(1, n);
  return out;
}

Element build_P(long n, PRoute route) {
  switch (route) {
    case PRoute::h_recursion:
      return build_P(n);
    case PRoute::psi_route:
      return psi_recursion(n);
    case PRoute::exp_formula:
      return build_P_exp(n);
  }
  throw std::invalid_argument("bad route");
}

Element psi_recursion(long n) {
  static std::map<long, Element> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Element out;
  if (n == 0) {
    out = Element::one();
  } else if (n < 0) {
    out = apply_Omega(psi_recursion(-n));
  } else {
    Element acc;
    Element kinv = Element::from_sym(sym_kinv());
    for (long r = 1; r <= n; ++r)
      acc += kinv * Element::from_sym(sym_psip(r)) * psi_recursion(n - r);
    Laurent den = Laurent(Rat(1));
    den -= Laurent::q_power(-2 * n);
    out = RatFunc(Laurent(Rat(-1)), den) * acc;
  }
  return cache[n] = out;
}

Element expand_psi_in_h(const Element& e) {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    Element prod = Element::one();
    for (const Sym& s : w) {
      Element piece;
      switch (s.kind) {
        case SymKind::PSIP: {
          if (s.n < 0) break;  // zero
          piece = Element::from_sym(sym_k()) * psi_h_layers(true, s.n)[s.n];
          break;
        }
        case SymKind::PSIM: {
          if (s.n > 0) break;  // zero
          piece =
              Element::from_sym(sym_kinv()) * psi_h_layers(false, -s.n)[-s.n];
          break;
        }
        default:
          piece = Element::from_sym(s);
      }
      prod = prod * piece;
    }
    out += c * prod;
  }
  return out;
}

Element build_D_plus(long n, long r) {
  if (r < 0) throw std::invalid_argument("negative divided power");
  static std::map<std::pair<long, long>, Element> cache;
  auto key = std::make_pair(n, r);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Element out;
  if (n < 0 || r == 0) {
    out = (n == 0) ? Element::one() : Element::zero();
  } else if (n == 0) {
    out = Element::from_sym(sym_xp(0, r));
  } else {
    for (long s = 1; s <= r - 1; ++s) {
      RatFunc c = rf_qpow(s * (r - 1));
      if (s % 2 == 0) c *= RatFunc(Laurent(Rat(-1)));
      out += c * (Element::from_sym(sym_xp(0, s)) * build_D_plus(n, r - s));
    }
    if (r <= n)
      out += rf_qpow(r * (r - 1)) * tau_shift(build_D_plus(n - r, r), 1);
  }
  return cache[key] = out;
}

Element build_D_plus(long n, long r, DPlusRoute route) {
  switch (route) {
    case DPlusRoute::series:
      return build_D_plus_series(n, r);
    case DPlusRoute::recursion:
      return build_D_plus(n, r);
    case DPlusRoute::young:
      return build_D_plus_young(n, r);
  }
  throw std::invalid_argument("bad route");
}

Element build_D_plus_series(long n, long r) {
  if (n < 0) return Element::zero();
  if (r == 0) return n == 0 ? Element::one() : Element::zero();
  Element out;
  RatFunc c = RatFunc(qfact(r)).inverse();
  std::vector<long> cur;
  compositions_rec(n, r, cur, [&](const std::vector<long>& m) {
    Word w;
    for (long mi : m) w.push_back(sym_xp(mi, 1));
    out.add_term(w, c);
  });
  return out;
}

std::pair<long, long> young_stats(const std::vector<long>& pi) {
  long len = static_cast<long>(pi.size());
  long l = 0;
  for (long ri : pi) l += ri;
  long f = 0;
  long col = 0;  // column heights, rightmost first
  long prev = 0;
  for (long j = len; j >= 1; --j) {
    prev = col;
    col += pi[static_cast<size_t>(j - 1)];
    f += col * prev;
  }
  return {l, f};
}

Element build_D_plus_young(long n, long r) {
  if (n < 0) return Element::zero();
  if (r == 0) return n == 0 ? Element::one() : Element::zero();
  Element out;
  std::vector<long> pi;  // pi[i-1] rows of length i
  // enumerate pi with sum i*pi[i-1] == n and total rows <= r
  std::function<void(long, long, long)> rec = [&](long i, long rem, long rows) {
    if (rem == 0) {
      std::vector<long> full = pi;
      auto [l, f] = young_stats(full);
      Word w;
      if (r - l > 0) w.push_back(sym_xp(0, r - l));
      for (size_t j = 0; j < full.size(); ++j)
        if (full[j] > 0) w.push_back(sym_xp(static_cast<long>(j + 1), full[j]));
      out.add_term(w, rf_qpow(-n + f + r * l));
      return;
    }
    if (i > rem) return;
    for (long ri = 0; ri * i <= rem && rows + ri <= r; ++ri) {
      pi.push_back(ri);
      rec(i + 1, rem - ri * i, rows + ri);
      pi.pop_back();
    }
  };
  rec(1, n, 0);
  return out;
}

Element build_D_minus(long n, long r) {
  if (n < 0) return Element::zero();
  if (r == 0) return n == 0 ? Element::one() : Element::zero();
  Element out;
  RatFunc c = RatFunc(qfact(r)).inverse();
  std::vector<long> cur;
  compositions_rec(n, r, cur, [&](const std::vector<long>& m) {
    Word w;
    for (long mi : m) w.push_back(sym_xm(mi + 1, 1));
    out.add_term(w, c);
  });
  return out;
}

Element build_Dbb(long n, long r) {
  Element out;
  for (long m = 0; m <= n; ++m) {
    Element pm =
        m == 0 ? Element::one() : Element::from_sym(sym_p(m));
    out += pm * build_D_plus(n - m, r);
  }
  return out;
}

Element build_A(long r, long n) {
  Element a = Element::from_sym(sym_xp(n, 1));
  Element x0 = Element::from_sym(sym_xp(0, 1));
  for (long i = 1; i <= r; ++i) {
    Element next = a * x0;
    next -= rf_qpow(2 * i) * (x0 * a);
    a = next;
  }
  return a;
}

Element build_B(long r, long n) {
  Element out;
  for (long s = 0; s <= r; ++s) {
    Word w;
    for (long i = 0; i < s; ++i) w.push_back(sym_xp(0, 1));
    w.push_back(sym_xp(n, 1));
    for (long i = 0; i < r - s; ++i) w.push_back(sym_xp(0, 1));
    out.add_term(w, RatFunc(Laurent(Rat(1))));
  }
  return out;
}

}  // namespace qra
