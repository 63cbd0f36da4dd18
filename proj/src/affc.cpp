#include "reptqft/affc.hpp"

#include "reptqft/error.hpp"
#include "reptqft/motivic.hpp"

namespace reptqft::affc {

namespace {

using motivic::disjoint_union;
using motivic::fibration;
using motivic::open_complement;
using motivic::standard_class;

LaurentPoly product(std::initializer_list<LaurentPoly> factors) {
  LaurentPoly out = 1;
  for (const auto& f : factors) out = fibration(out, f);
  return out;
}

}  // namespace

PolyMatrix genus_tube_from_strata() {
  const LaurentPoly q = standard_class("affine_line");
  const LaurentPoly t = standard_class("torus");
  const LaurentPoly l2 = standard_class("line_minus_two_points");

  // Commutator-map fibers over a nonidentity translation alpha and over I.
  const LaurentPoly generic_fiber = disjoint_union(product({l2, t, t, q, q}), product({l2, t, q, q}));
  const LaurentPoly identity_fiber =
      disjoint_union(disjoint_union(product({l2, t, t, q, q}), product({t, q, q, q})), product({l2, t, q, q}));

  // Starting from ASO*, the fibers are complements inside (C*)^3 x C^3.
  const LaurentPoly ambient = product({t, t, t, q, q, q});
  const LaurentPoly shifted_identity_fiber = open_complement(ambient, identity_fiber);
  const LaurentPoly shifted_generic_fiber = open_complement(ambient, generic_fiber);

  PolyMatrix m(2, 2);
  m(0, 0) = identity_fiber;
  m(1, 0) = generic_fiber;
  m(0, 1) = shifted_identity_fiber;
  m(1, 1) = shifted_generic_fiber;
  return m;
}

TqftDatum affc_datum() {
  const LaurentPoly q = LaurentPoly::q();
  const LaurentPoly e_g = q * (q - 1);
  PolyMatrix l(2, 2);
  l(0, 0) = e_g * (pow(q, 3) - pow(q, 2));
  l(0, 1) = e_g * (pow(q, 4) - 3 * pow(q, 3) + 2 * pow(q, 2));
  l(1, 0) = e_g * (pow(q, 3) - 2 * pow(q, 2));
  l(1, 1) = e_g * (pow(q, 4) - 3 * pow(q, 3) + 3 * pow(q, 2));

  TqftDatum::Parts parts;
  parts.rank = 2;
  parts.e_G = e_g;
  parts.genus_tube = std::move(l);
  parts.disc_in = {LaurentPoly(1), LaurentPoly()};
  parts.disc_out = {LaurentPoly(1), LaurentPoly()};
  for (unsigned g = 1; g <= kReferenceGenera; ++g) parts.reference.emplace(g, affc_closed_form(g));
  return TqftDatum(std::move(parts));
}

LaurentPoly affc_closed_form(unsigned g) {
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "closed form needs genus >= 1");
  const LaurentPoly q = LaurentPoly::q();
  return pow(q, 2 * g - 1) * (pow(q - 1, 2 * g) + q - 1);
}

LaurentPoly xk_epoly(unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "X_k needs k >= 1");
  const LaurentPoly q = LaurentPoly::q();
  // X_1 = (C - {0, 1}) disjoint C.
  LaurentPoly e = motivic::disjoint_union(q - 2, q);
  for (unsigned i = 2; i <= k; ++i) {
    e = motivic::disjoint_union((q - 2) * pow(q, i - 1) * pow(q - 1, i - 1), q * e);
  }
  return e;
}

}  // namespace reptqft::affc
