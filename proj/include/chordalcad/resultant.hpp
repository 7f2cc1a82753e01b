#ifndef CHORDALCAD_RESULTANT_HPP
#define CHORDALCAD_RESULTANT_HPP

#include "chordalcad/poly.hpp"

#include <vector>

namespace chordalcad {

/// Sylvester resultant of f and g w.r.t. x, computed by the subresultant
/// PRS; sign-normalized. Both degrees in x must be >= 1.
Poly resultant(const Poly& f, const Poly& g, VarId x);

/// Resultant with the exact determinant sign (no normalization).
Poly resultant_raw(const Poly& f, const Poly& g, VarId x);

/// Discriminant of f w.r.t. x: (-1)^{s(s-1)/2} res(f, f', x) / lc(f, x),
/// exact division, s = deg(f, x) >= 2. Zero for non-squarefree input;
/// sign-normalized otherwise.
Poly discriminant(const Poly& f, VarId x);

/// Subresultant chain S_{mu+1}, ..., S_0 of f and g w.r.t. x (inputs
/// swapped if deg f < deg g), computed by the subresultant polynomial
/// remainder sequence. The last element is the resultant.
std::vector<Poly> subresultant_chain(const Poly& f, const Poly& g, VarId x);

}  // namespace chordalcad

#endif
