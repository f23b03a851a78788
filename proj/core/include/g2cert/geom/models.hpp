#pragma once

#include <array>
#include <string>

#include "g2cert/geom/variety.hpp"

/// The concrete varieties and maps of the G2 reduction: the 5-dimensional
/// quadric in P^6, its torus-stable affine chart, the four models
/// Lambda_1 ... Lambda_4 of its torus quotient and the maps between them.
namespace g2cert::models {

/// Ring with variables X1, ..., X7.
PolyRing quadric_ring(const Field& k = Field::rationals());
/// X1*X7 + X2*X6 + X3*X5 + X4^2.
MultiPoly quadric_equation(const PolyRing& ring);
VarietyDescriptor quadric(const Field& k = Field::rationals());

/// Chart X4 = 1 with coordinates x1, x2, x3, x5, x6, x7 and the equation
/// x1*x7 + x2*x6 + x3*x5 + 1.
VarietyDescriptor quadric_chart(const Field& k = Field::rationals());
/// Torus weights of the chart coordinates, one column per coordinate.
IntMatrix chart_weights();

/// Lambda_1 in A^5 (y1, y2, y3, z1, z2).
VarietyDescriptor lambda1(const Field& k = Field::rationals());
/// Lambda_2 in P^5 (Y1 : Y2 : Y3 : Z0 : Z1 : Z2), the projective closure.
VarietyDescriptor lambda2(const Field& k = Field::rationals());
/// Lambda_3 in P^4 (Y1 : Y2 : Y3 : Z1 : Z2), the cubic obtained by eliminating Z0.
VarietyDescriptor lambda3(const Field& k = Field::rationals());
/// Lambda_4 in P^4, the quadric Z1*Z2 + Y2*Y3 + Y1*Y3 + Y1*Y2.
VarietyDescriptor lambda4(const Field& k = Field::rationals());

RationalMapDescriptor lambda1_to_lambda2();
RationalMapDescriptor lambda2_to_lambda1();
RationalMapDescriptor lambda2_to_lambda3();
RationalMapDescriptor lambda3_to_lambda2();
RationalMapDescriptor cremona_3_to_4();
RationalMapDescriptor cremona_4_to_3();

/// Quotient map from the chart to Lambda_1 given by the invariant monomials.
RationalMapDescriptor quotient_map();
/// The invariants y1 = x1 x7, y2 = x2 x6, y3 = x3 x5, z1 = x1 x5 x6,
/// z2 = x2 x3 x7 with their relations and recovery identities.
QuotientData quotient_data();

/// Action on a model's coordinates: y_i -> y_{perm[i]} on the three y
/// coordinates (any case), z1 <-> z2 when `swap_z`, other coordinates fixed.
MonomialAction model_action(const VarietyDescriptor& model, const std::array<std::size_t, 3>& y_perm, bool swap_z,
                            const std::string& label);

}  // namespace g2cert::models
