#include "qra/words.hpp"

#include <algorithm>

#include "qra/errors.hpp"
#include "qra/ring_io.hpp"

namespace qra {

Element Element::from_word(const Word& w, const RatFunc& c) {
    Element e;
    e.add_term(w, c);
    return e;
}

Element Element::from_sym(const Sym& s, const RatFunc& c) { return from_word({s}, c); }

void Element::add_term(const Word& w, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, -c);
    return r;
}

Element& Element::scale(const RatFunc& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [w, v] : t_) v *= c;
    return *this;
}

bool Element::homogeneous_xdegree(long& plus_deg, long& minus_deg) const {
    bool first = true;
    for (const auto& [w, c] : t_) {
        long p = 0, m = 0;
        for (const Sym& s : w) {
            if (s.kind == SymKind::XP) p += s.r;
            if (s.kind == SymKind::XM) m += s.r;
        }
        if (first) {
            plus_deg = p;
            minus_deg = m;
            first = false;
        } else if (p != plus_deg || m != minus_deg) {
            return false;
        }
    }
    if (first) {
        plus_deg = minus_deg = 0;  // zero element: vacuously homogeneous
    }
    return true;
}

bool Element::is_uplusplus() const {
    for (const auto& [w, c] : t_)
        for (const Sym& s : w)
            if (s.kind != SymKind::XP || s.n < 0) return false;
    return true;
}

Element operator+(Element a, const Element& b) {
    a += b;
    return a;
}

Element operator-(Element a, const Element& b) {
    a -= b;
    return a;
}

Element operator*(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

Element operator*(const RatFunc& c, Element a) {
    a.scale(c);
    return a;
}

namespace {

// sign of T^power on one symbol, and the shifted symbol
Sym t_image(const Sym& s, long power, bool& flip) {
    flip = false;
    Sym out = s;
    switch (s.kind) {
        case SymKind::XP:
            out.n = s.n - power;
            flip = ((power * s.r) % 2) != 0;
            break;
        case SymKind::XM:
            out.n = s.n + power;
            flip = ((power * s.r) % 2) != 0;
            break;
        case SymKind::KBIN:
            throw MissingSymbol("no T image for " + sym_str(s));
        default:
            break;  // psi, h, k, P are fixed
    }
    return out;
}

Sym phi_image(const Sym& s) {
    Sym out = s;
    if (s.kind == SymKind::XP)
        out.kind = SymKind::XM;
    else if (s.kind == SymKind::XM)
        out.kind = SymKind::XP;
    return out;  // psi/h/k/P/kbin fixed
}

Sym omega_image(const Sym& s) {
    Sym out = s;
    switch (s.kind) {
        case SymKind::XP:
            out.kind = SymKind::XM;
            out.n = -s.n;
            break;
        case SymKind::XM:
            out.kind = SymKind::XP;
            out.n = -s.n;
            break;
        case SymKind::PSIP:
            out.kind = SymKind::PSIM;
            out.n = -s.n;
            break;
        case SymKind::PSIM:
            out.kind = SymKind::PSIP;
            out.n = -s.n;
            break;
        case SymKind::H:
        case SymKind::P:
            out.n = -s.n;
            break;
        case SymKind::K:
            out.kind = SymKind::KINV;
            break;
        case SymKind::KINV:
            out.kind = SymKind::K;
            break;
        case SymKind::KBIN:
            break;  // invariant: both numerator factors and [s] flip sign
    }
    return out;
}

}  // namespace

Element apply_T(const Element& e, long power) {
    Element r;
    for (const auto& [w, c] : e.terms()) {
        Word img;
        img.reserve(w.size());
        bool neg = false;
        for (const Sym& s : w) {
            bool flip;
            img.push_back(t_image(s, power, flip));
            neg ^= flip;
        }
        r.add_term(img, neg ? -c : c);
    }
    return r;
}

Element apply_Phi(const Element& e) {
    Element r;
    for (const auto& [w, c] : e.terms()) {
        Word img;
        img.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) img.push_back(phi_image(*it));
        r.add_term(img, c);
    }
    return r;
}

Element apply_Omega(const Element& e) {
    Element r;
    for (const auto& [w, c] : e.terms()) {
        Word img;
        img.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) img.push_back(omega_image(*it));
        r.add_term(img, c.bar());
    }
    return r;
}

Element tau_shift(const Element& e, long power) {
    Element r;
    for (const auto& [w, c] : e.terms()) {
        Word img;
        img.reserve(w.size());
        for (const Sym& s : w) {
            Sym out = s;
            if (s.kind == SymKind::XP) out.n = s.n + power;
            if (s.kind == SymKind::XM) out.n = s.n - power;
            img.push_back(out);
        }
        r.add_term(img, c);
    }
    return r;
}

Element commutative_normal(const Element& e) {
    Element r;
    for (const auto& [w, c] : e.terms()) {
        for (const Sym& s : w)
            if (s.kind == SymKind::XP || s.kind == SymKind::XM || s.kind == SymKind::KBIN)
                throw QraError("commutative_normal: non-Cartan symbol " + sym_str(s));
        Word img = w;
        std::sort(img.begin(), img.end());
        // cancel adjacent k k^{-1} after sorting (K sorts before KINV)
        long nk = 0, nki = 0;
        Word rest;
        for (const Sym& s : img) {
            if (s.kind == SymKind::K)
                ++nk;
            else if (s.kind == SymKind::KINV)
                ++nki;
            else
                rest.push_back(s);
        }
        long net = nk - nki;
        Word out;
        for (long i = 0; i < (net > 0 ? net : -net); ++i) out.push_back(net > 0 ? sym_k() : sym_kinv());
        out.insert(out.end(), rest.begin(), rest.end());
        std::sort(out.begin(), out.end());
        r.add_term(out, c);
    }
    return r;
}

std::string sym_str(const Sym& s) {
    auto idx = [&](const char* base) { return std::string(base) + "[" + std::to_string(s.n) + "]"; };
    std::string core;
    switch (s.kind) {
        case SymKind::XP:
            core = idx("x+");
            break;
        case SymKind::XM:
            core = idx("x-");
            break;
        case SymKind::PSIP:
            core = idx("psi+");
            break;
        case SymKind::PSIM:
            core = idx("psi-");
            break;
        case SymKind::H:
            core = idx("h");
            break;
        case SymKind::K:
            return "k";
        case SymKind::KINV:
            return "k^-1";
        case SymKind::P:
            return idx("P");
        case SymKind::KBIN:
            return "kbin[" + std::to_string(s.r) + "]";
    }
    if (s.r != 1) core += "^(" + std::to_string(s.r) + ")";
    return core;
}

std::string element_str(const Element& e) {
    if (e.is_zero()) return "(0)";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        std::string t = "(" + ratfunc_str(c) + ")";
        if (w.empty()) {
            t += "*1";
        } else {
            t += "*";
            for (size_t i = 0; i < w.size(); ++i) {
                if (i) t += ".";
                t += sym_str(w[i]);
            }
        }
        out += first ? t : " + " + t;
        first = false;
    }
    return out;
}

}  // namespace qra
