#ifndef BLINDED_RATIONAL_HPP_
#define BLINDED_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace blinded {

// Exact rational arithmetic. Every verification path in the library works in
// Rat; floating point appears only in statistical report fields.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p/q" or "p" (optional sign, base 10). Throws ParseError on anything
// else, including q == 0.
Rat rat_parse(const std::string& text);

// Canonical form: reduced, "p/q" with q > 0, or "p" when q == 1.
std::string rat_str(const Rat& r);

std::string rat_vec_str(const std::vector<Rat>& v);

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

double rat_double(const Rat& r);

}  // namespace blinded

#endif  // BLINDED_RATIONAL_HPP_
