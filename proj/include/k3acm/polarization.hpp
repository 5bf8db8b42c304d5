#pragma once

#include "k3acm/lattice.hpp"

namespace k3acm {

// Whether h is a consistent polarization marking: h^2 > 0, h lies in the
// canonical half of the positive cone (positive pairing with the
// positive_cone_reference vector), and no (-2)-class is orthogonal to h
// (h is in the interior of a chamber, so some surface with this Picard
// lattice has h ample).
bool is_ample(const PicardLattice& lat, const DivisorClass& h);

// Ample, h^2 >= 4, and neither projective obstruction occurs:
//  (i)  no elliptic pencil class E (primitive, effective, square 0, empty
//       fixed part) with 1 <= E.h <= 2  (hyperelliptic / monogonal maps);
//  (ii) h is not twice an effective class of square 2 (double sextic).
bool is_very_ample(const PicardLattice& lat, const DivisorClass& h);

// Sectional genus of the polarization: g = h^2/2 + 1.
// Requires h^2 > 0 (non_positive_polarization).
Int sectional_genus(const PicardLattice& lat, const DivisorClass& h);

// A validated very ample polarization; construction throws not_very_ample
// otherwise. Guarantees genus >= 3 (since h^2 >= 4).
class Polarization {
public:
    Polarization(PicardLattice lat, DivisorClass h);

    const PicardLattice& lattice() const { return lat_; }
    const DivisorClass& cls() const { return h_; }
    Int square() const { return square_; }
    Int genus() const { return genus_; }

private:
    PicardLattice lat_;
    DivisorClass h_;
    Int square_;
    Int genus_;
};

} // namespace k3acm
