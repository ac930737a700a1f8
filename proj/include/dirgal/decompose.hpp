/// decompose.hpp -- splitting a variety into certified minimal primes
/// (factorization-driven: generator factorization, graph-variable peeling,
/// quadratic-pair splitting, elimination-driven splitting) and a geometric
/// integrality test on the same class.
#ifndef DIRGAL_DECOMPOSE_HPP
#define DIRGAL_DECOMPOSE_HPP

#include "dirgal/ideal.hpp"
#include "dirgal/mfactor.hpp"

namespace dirgal {

/// Minimal primes of I, each certified prime.  Throws
/// Error("decompose", "decomposition incomplete ...") when the splitting
/// strategy cannot certify a leaf; never silently returns a non-prime.
/// Unit ideal yields the empty list.
std::vector<Ideal> decompose_variety(const Ideal& I);

/// True iff decompose_variety(I) == {radical-equal image of I}.
bool is_prime_certified(const Ideal& I);

/// Geometric integrality of V(I) (I expected prime; a certified-reducible
/// input returns no).  extension_bound limits the base-change scan; 0 picks
/// a bound from the generator degrees.
Cert geometrically_integral(const Ideal& I, int extension_bound = 0);

} // namespace dirgal

#endif
