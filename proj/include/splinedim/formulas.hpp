#ifndef SPLINEDIM_FORMULAS_HPP
#define SPLINEDIM_FORMULAS_HPP

#include <map>
#include <vector>

namespace splinedim {

/** Binomial coefficient with the zero convention: 0 whenever n < k
 *  (including negative n), so the dimension formulas degrade to plain
 *  polynomial dimensions at small degrees. */
long binom_safe(long n, long k);

/**
 * The correction term for the Alfeld split of a k-simplex:
 *   r odd:  k * C(d + k - (r+1)(k+1)/2, k)
 *   r even: C(d + k - 1 - r(k+1)/2, k) + ... + C(d - r(k+1)/2, k),
 * k consecutive terms.
 */
long A_term(int k, long d, int r);

/**
 * The correction term for the pyramid over an Alfeld-split base:
 *   r odd:  (k-1) * C(d + k - (r+1)k/2, k)
 *   r even: C(d + k - 1 - rk/2, k) + ... + C(d + 1 - rk/2, k),
 * k-1 consecutive terms.
 */
long P_term(int k, long d, int r);

/** C(d+k, k) + A(k, d, r). */
long dim_alfeld(int k, long d, int r);
/** C(d+k, k) + P(k, d, r), for the cone over an Alfeld-split (k-1)-simplex. */
long dim_pyramid(int k, long d, int r);
/** C(d+k, k) + A(k, d, r) + (k+1) P(k, d, r). */
long dim_facet(int k, long d, int r);
/** C(d+k, k) + (k+2) A(k, d, r). */
long dim_double_alfeld(int k, long d, int r);

/** Checks the telescoping identity
 *  sum_{i=0..d} [ C(i+k-1, k-1) + A(k-1, i, r) ] = dim_pyramid(k, d, r). */
bool pyramid_sum_identity(int k, long d, int r);

/**
 * Reads generator degrees off a dimension function of a free graded module:
 * greedily peel h(d) = sum_j C(d - a_j + k, k). Input must cover d = 0..d_max
 * contiguously.
 *
 * @returns degree -> multiplicity
 * @throws std::invalid_argument if a residual goes negative (the input is
 * not of free form within the given range).
 */
std::map<long, long> infer_generator_degrees(const std::vector<long>& h, int k);

}  // namespace splinedim

#endif
