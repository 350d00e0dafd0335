#include "qra/ring_io.hpp"

#include <cctype>
#include <cstdlib>

#include "qra/errors.hpp"

namespace qra {

namespace {

// "c * base^e" for c > 0; caller handles the sign
std::string mono_str(const Rat& c, const std::string& base, long e) {
    std::string pw;
    if (e == 1)
        pw = base;
    else if (e != 0)
        pw = base + "^" + std::to_string(e);
    if (e == 0) return rat_str(c);
    if (c == 1) return pw;
    return rat_str(c) + "*" + pw;
}

// terms: (exponent, coefficient) in decreasing exponent order, all coefficients nonzero
std::string join_terms(const std::vector<std::pair<long, Rat>>& terms, const std::string& base) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        bool neg = c < 0;
        std::string abs_txt = mono_str(neg ? Rat(-c) : c, base, e);
        if (first)
            out = neg ? "-" + abs_txt : abs_txt;
        else
            out += (neg ? " - " : " + ") + abs_txt;
        first = false;
    }
    return out;
}

}  // namespace

std::string laurent_str(const Laurent& f) {
    std::vector<std::pair<long, Rat>> terms;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) terms.emplace_back(it->first, it->second);
    return join_terms(terms, "q");
}

std::string ratfunc_str(const RatFunc& f) {
    if (f.den().is_one()) return laurent_str(f.num());
    return "(" + laurent_str(f.num()) + ")/(" + laurent_str(f.den()) + ")";
}

std::string cyc_str(const Cyc& c) {
    std::vector<std::pair<long, Rat>> terms;
    if (c.ell() != 0)
        for (long i = phi_degree(c.ell()); i-- > 0;)
            if (c.coeff(i) != 0) terms.emplace_back(i, c.coeff(i));
    return join_terms(terms, "eps");
}

namespace {

// single-monomial test: at most one nonzero coefficient
bool cyc_single(const Cyc& c, Rat& coeff_out, long& e_out) {
    long found = -1;
    if (c.ell() != 0)
        for (long i = 0; i < phi_degree(c.ell()); ++i)
            if (c.coeff(i) != 0) {
                if (found >= 0) return false;
                found = i;
            }
    if (found < 0) {
        coeff_out = 0;
        e_out = 0;
        return true;
    }
    coeff_out = c.coeff(found);
    e_out = found;
    return true;
}

bool rf_single(const RatFunc& f, Rat& coeff_out, long& e_out) {
    if (!f.den().is_one()) return false;
    if (f.num().terms().size() > 1) return false;
    if (f.num().is_zero()) {
        coeff_out = 0;
        e_out = 0;
        return true;
    }
    coeff_out = f.num().terms().begin()->second;
    e_out = f.num().terms().begin()->first;
    return true;
}

template <class S>
struct UPolyTraits;

template <>
struct UPolyTraits<Cyc> {
    static std::string str(const Cyc& c) { return cyc_str(c); }
    static bool single(const Cyc& c, Rat& co, long& e) { return cyc_single(c, co, e); }
    static const char* base() { return "eps"; }
    static bool all_neg(const Cyc& c) {
        bool any = false;
        if (c.ell() != 0)
            for (long i = 0; i < phi_degree(c.ell()); ++i) {
                if (c.coeff(i) > 0) return false;
                if (c.coeff(i) < 0) any = true;
            }
        return any;
    }
};

template <>
struct UPolyTraits<RatFunc> {
    static std::string str(const RatFunc& f) { return ratfunc_str(f); }
    static bool single(const RatFunc& f, Rat& co, long& e) { return rf_single(f, co, e); }
    static const char* base() { return "q"; }
    static bool all_neg(const RatFunc& f) {
        if (!f.den().is_one()) return false;
        bool any = false;
        for (const auto& [e, c] : f.num().terms()) {
            if (c > 0) return false;
            if (c < 0) any = true;
        }
        return any;
    }
};

template <class S>
std::string upoly_str_impl(const std::vector<S>& p) {
    std::string out;
    bool first = true;
    for (size_t k = 0; k < p.size(); ++k) {
        const S& c = p[k];
        Rat co;
        long e;
        if (c == S()) continue;
        std::string upw = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
        std::string piece;
        bool neg = false;
        if (UPolyTraits<S>::single(c, co, e)) {
            neg = co < 0;
            Rat a = neg ? Rat(-co) : co;
            std::string ctxt = mono_str(a, UPolyTraits<S>::base(), e);
            if (k == 0)
                piece = ctxt;
            else if (ctxt == "1")
                piece = upw;
            else
                piece = ctxt + "*" + upw;
        } else if (UPolyTraits<S>::all_neg(c)) {
            neg = true;
            S mc = c;
            mc = S() - mc;
            piece = "(" + UPolyTraits<S>::str(mc) + ")";
            if (k > 0) piece += "*" + upw;
        } else {
            piece = "(" + UPolyTraits<S>::str(c) + ")";
            if (k > 0) piece += "*" + upw;
        }
        if (first)
            out = neg ? "-" + piece : piece;
        else
            out += (neg ? " - " : " + ") + piece;
        first = false;
    }
    return first ? "0" : out;
}

}  // namespace

std::string upoly_str(const std::vector<Cyc>& p) { return upoly_str_impl(p); }
std::string upoly_str_rf(const std::vector<RatFunc>& p) { return upoly_str_impl(p); }

// ---------------------------------------------------------------- parser

namespace {

struct UVal {
    std::vector<Cyc> c;  // ascending in u, trimmed
    long ell;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool scalar() const { return c.size() <= 1; }
    Cyc scalar_val() const { return c.empty() ? Cyc::zero(ell) : c[0]; }
};

UVal uval_scalar(Cyc v, long ell) {
    UVal r{{std::move(v)}, ell};
    r.trim();
    return r;
}

UVal operator+(UVal a, const UVal& b) {
    a.c.resize(std::max(a.c.size(), b.c.size()), Cyc::zero(a.ell));
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
    a.trim();
    return a;
}

UVal operator-(UVal a, const UVal& b) {
    a.c.resize(std::max(a.c.size(), b.c.size()), Cyc::zero(a.ell));
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    a.trim();
    return a;
}

UVal operator*(const UVal& a, const UVal& b) {
    UVal r{{}, a.ell};
    if (a.c.empty() || b.c.empty()) return r;
    if (a.c.size() + b.c.size() > 512) throw ParseError("u-degree too large");
    r.c.assign(a.c.size() + b.c.size() - 1, Cyc::zero(a.ell));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;
    long ell;  // modulus used for eps; >= 1

    explicit Parser(const std::string& str, long l) : s(str), ell(l) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool at_atom_start() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    long read_int() {
        skip();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) throw ParseError("expected integer at position " + std::to_string(pos));
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1000000) throw ParseError("integer literal too large");
            ++pos;
        }
        return neg ? -v : v;
    }

    UVal atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            UVal v = expr();
            if (peek() != ')') throw ParseError("expected ')' at position " + std::to_string(pos));
            ++pos;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = read_int();
            return uval_scalar(Cyc::from_long(v, ell), ell);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            if (name == "u") {
                UVal r{{Cyc::zero(ell), Cyc::from_long(1, ell)}, ell};
                return r;
            }
            if (name == "eps") {
                if (ell < 2) throw ParseError("eps not available without a root of unity");
                return uval_scalar(Cyc::eps_power(1, ell), ell);
            }
            throw ParseError("unknown name '" + name + "'");
        }
        throw ParseError("unexpected character at position " + std::to_string(pos));
    }

    UVal factor() {
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++pos;
        }
        UVal v = atom();
        if (peek() == '^') {
            ++pos;
            long e = read_int();
            if (v.scalar()) {
                Cyc sc = v.scalar_val();
                if (e < 0 && sc.is_zero()) throw ParseError("zero to a negative power");
                v = uval_scalar(sc.pow(e), ell);
            } else {
                if (e < 0) throw ParseError("negative power of a u-polynomial");
                if (e > 512) throw ParseError("exponent too large");
                UVal r = uval_scalar(Cyc::from_long(1, ell), ell);
                for (long i = 0; i < e; ++i) r = r * v;
                v = std::move(r);
            }
        }
        if (neg) {
            UVal z{{}, ell};
            v = z - v;
        }
        return v;
    }

    UVal term() {
        UVal v = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                v = v * factor();
            } else if (c == '/') {
                ++pos;
                UVal d = factor();
                if (!d.scalar() || d.scalar_val().is_zero()) throw ParseError("division requires a nonzero u-free value");
                Cyc inv = d.scalar_val().inverse();
                for (Cyc& x : v.c) x *= inv;
            } else if (at_atom_start()) {
                v = v * factor();  // implicit multiplication
            } else {
                return v;
            }
        }
    }

    UVal expr() {
        UVal v = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                v = v + term();
            } else if (c == '-') {
                ++pos;
                v = v - term();
            } else {
                return v;
            }
        }
    }
};

}  // namespace

std::vector<Cyc> parse_upoly(const std::string& s, long ell) {
    long effective = ell >= 1 ? ell : 1;
    Parser p(s, effective);
    UVal v = p.expr();
    p.skip();
    if (p.pos != s.size()) throw ParseError("trailing input at position " + std::to_string(p.pos));
    return v.c;
}

Cyc parse_scalar(const std::string& s, long ell) {
    std::vector<Cyc> v = parse_upoly(s, ell);
    if (v.size() > 1) throw ParseError("expected a scalar, got a u-polynomial: " + s);
    return v.empty() ? Cyc::zero(ell >= 1 ? ell : 1) : v[0];
}

Rat parse_rat_scalar(const std::string& s) {
    Cyc c = parse_scalar(s, 1);
    return c.as_rat();
}

}  // namespace qra
