#pragma once

#include "reptqft/laurent_poly.hpp"
#include "reptqft/tqft.hpp"

namespace reptqft::affc {

/// Genera for which affc_datum() carries reference values.
inline constexpr unsigned kReferenceGenera = 6;

/// Tube data for G = Aff(C) on the two generators (i_! Q_0, j_! Q_{ASO*}),
/// where ASO* is the set of nonidentity translations. The genus-tube matrix
/// keeps its overall factor e(G) = q(q - 1). No puncture or identity tubes.
/// Reference values from affc_closed_form are attached for exported files.
TqftDatum affc_datum();

/// Entries of the genus tube assembled from fiber classes (stratification of
/// the commutator map fibers), without going through the stored matrix.
PolyMatrix genus_tube_from_strata();

/// q^{2g-1}((q - 1)^{2g} + q - 1); requires g >= 1.
LaurentPoly affc_closed_form(unsigned g);

/// e(X_k) for X_k = {sum_{i<=k} (a_i - 1) b_i = 0} in (C* x C)^k, by the
/// recursion e(X_k) = (q - 2) q^{k-1} (q - 1)^{k-1} + q e(X_{k-1}),
/// e(X_1) = 2q - 2. Requires k >= 1.
LaurentPoly xk_epoly(unsigned k);

}  // namespace reptqft::affc
