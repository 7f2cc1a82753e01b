#ifndef CHORDALCAD_GCD_HPP
#define CHORDALCAD_GCD_HPP

#include "chordalcad/poly.hpp"

namespace chordalcad {

/// Multivariate GCD over the integers via the primitive polynomial
/// remainder sequence. Result is sign-normalized and primitive up to the
/// integer gcd of the contents. Rejects gcd(0, 0).
Poly gcd(const Poly& f, const Poly& g);

/// Product of the distinct factors of f: f / gcd(f, df/dx_1, ..., df/dx_n),
/// divides f, squarefree, sign-normalized. f must be non-constant.
Poly squarefree_part(const Poly& f);

/// Gcd-free refinement of A: pairwise-coprime, squarefree, primitive,
/// sign-normalized non-constant polynomials such that every a in A is an
/// integer times a product of powers of members. Not a full irreducible
/// factorization; splits by recursive content extraction, squarefree
/// parts, pairwise gcds, and rational linear factors of (de-homogenized)
/// univariate elements.
PolySet finest_basis(const PolySet& A);

}  // namespace chordalcad

#endif
