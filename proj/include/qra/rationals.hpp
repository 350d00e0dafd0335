#pragma once

#include <gmpxx.h>

#include <string>

#include "qra/errors.hpp"

namespace qra {

using Rat = mpq_class;

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool rat_is_int(const Rat& r) { return r.get_den() == 1; }

inline long rat_to_long(const Rat& r) {
    if (!rat_is_int(r) || !r.get_num().fits_slong_p())
        throw QraError("rat_to_long: not a small integer: " + rat_str(r));
    return r.get_num().get_si();
}

// "-3/2", "7"; denominator must be nonzero
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

}  // namespace qra
