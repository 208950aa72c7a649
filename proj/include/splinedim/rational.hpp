#ifndef SPLINEDIM_RATIONAL_HPP
#define SPLINEDIM_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace splinedim {

/**
 * Exact rational scalar used throughout the library. GMP keeps values in
 * lowest terms with a positive denominator, so equality is plain equality
 * and no rounding can occur anywhere.
 */
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/**
 * Parse an exact rational from text. Accepted forms: integers ("-12"),
 * fractions ("3/4", "-7/2"), and decimals ("0.25", "-1.5"), all converted
 * exactly.
 *
 * @throws std::invalid_argument on malformed input or zero denominator.
 */
Rational parse_rational(const std::string& text);

/** Render a rational as "p" or "p/q" with q > 1. */
std::string format_rational(const Rational& q);

}  // namespace splinedim

#endif
