#pragma once

#include <gmpxx.h>

#include <string>

#include "mfw/errors.hpp"

namespace mfw {

// Exact rational coefficients. mpq_class arithmetic keeps results canonical
// as long as every constructed value is canonical, so all construction goes
// through the helpers below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_parts(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Prints as "p" or "p/q"; matches the expression grammar.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace mfw
