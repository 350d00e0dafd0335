#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qra/ratfunc.hpp"

namespace qra {

// Symbols of the loop-generator alphabet. No normal form is imposed on words;
// relations live in the evaluator and the identity registry, not here.
enum class SymKind : std::uint8_t {
    XP,    // (x_n^+)^{(r)}, divided power (r = 1 is the plain generator)
    XM,    // (x_n^-)^{(r)}
    PSIP,  // psi_n^+, n >= 1
    PSIM,  // psi_n^-, n <= -1
    H,     // h_n, n != 0
    K,     // k
    KINV,  // k^{-1}
    P,     // P_n
    KBIN,  // [k; 0 over r]
};

struct Sym {
    SymKind kind;
    long n = 0;  // loop index (XP/XM/PSIP/PSIM/H/P); binomial order for KBIN
    long r = 1;  // divided order for XP/XM; 1 otherwise
    auto operator<=>(const Sym&) const = default;
};

inline Sym sym_xp(long n, long r = 1) { return {SymKind::XP, n, r}; }
inline Sym sym_xm(long n, long r = 1) { return {SymKind::XM, n, r}; }
inline Sym sym_psip(long n) { return {SymKind::PSIP, n, 1}; }
inline Sym sym_psim(long n) { return {SymKind::PSIM, n, 1}; }
inline Sym sym_h(long n) { return {SymKind::H, n, 1}; }
inline Sym sym_k() { return {SymKind::K, 0, 1}; }
inline Sym sym_kinv() { return {SymKind::KINV, 0, 1}; }
inline Sym sym_p(long n) { return {SymKind::P, n, 1}; }
inline Sym sym_kbin(long r) { return {SymKind::KBIN, 0, r}; }

using Word = std::vector<Sym>;

// Finite Q(q)-linear combination of free words.
class Element {
public:
    Element() = default;
    static Element zero() { return {}; }
    static Element one() { return from_word({}); }
    static Element from_word(const Word& w, const RatFunc& c = RatFunc(1L));
    static Element from_sym(const Sym& s, const RatFunc& c = RatFunc(1L));

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<Word, RatFunc>& terms() const { return t_; }

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element operator-() const;
    Element& scale(const RatFunc& c);

    bool operator==(const Element&) const = default;

    // total degree in x^+ / x^- symbols (sum of divided orders), if every word
    // is homogeneous of one common bidegree; false otherwise
    bool homogeneous_xdegree(long& plus_deg, long& minus_deg) const;
    // true iff only XP symbols appear, all with index >= 0
    bool is_uplusplus() const;

    void add_term(const Word& w, const RatFunc& c);

private:
    std::map<Word, RatFunc> t_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element operator*(const RatFunc& c, Element a);

// involutions / twists
Element apply_T(const Element& e, long power);      // T(x_n^pm) = -x_{n mp 1}^pm, fixes psi/h/k/P
Element apply_Phi(const Element& e);                // antiautomorphism: x^+ <-> x^-, reverses words
Element apply_Omega(const Element& e);              // antiautomorphism: bar coefficients, negate indices
Element tau_shift(const Element& e, long power);    // unsigned loop shift: x_n^+ -> x_{n+power}^+, x_n^- -> x_{n-power}^-

// Exact comparison form for elements of the commutative (Cartan) alphabet
// {K, KINV, PSIP, PSIM, H, P}: sorts each word and cancels k k^{-1} pairs.
// Throws QraError if an XP/XM/KBIN symbol is present.
Element commutative_normal(const Element& e);

// debug / report serialization, e.g. "(q^2)*x+[3].x-[0] + (-1)*P[2]"
std::string element_str(const Element& e);
std::string sym_str(const Sym& s);

}  // namespace qra
