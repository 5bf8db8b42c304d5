#include "k3acm/polarization.hpp"

#include "k3acm/cohomology.hpp"

namespace k3acm {

bool is_ample(const PicardLattice& lat, const DivisorClass& h) {
    if (h.rank() != lat.rank()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    if (lat.square(h) <= 0) return false;
    // Positive cone has two halves; the reference vector fixes one. Two
    // positive-square classes never pair to zero (Hodge index), so the sign
    // test is decisive.
    if (lat.pair(h, positive_cone_reference(lat)) <= 0) return false;
    return orthogonal_roots(lat, h).empty();
}

bool is_very_ample(const PicardLattice& lat, const DivisorClass& h) {
    if (h.rank() != lat.rank()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    if (lat.square(h) < 4) return false;
    if (!is_ample(lat, h)) return false;
    CohomologyEngine eng(lat, h);
    // (i) an elliptic pencil of degree 1 or 2 forces a 2:1 or degenerate
    // projective map. A decomposable square-0 class of degree <= 2 would
    // expose a pencil of degree <= 2 as its moving part, so testing
    // empty-fixed-part primitive classes is complete.
    for (const auto& e : enumerate_by_degree(lat, h, 2, 0)) {
        if (lat.square(e) != 0) continue;
        if (primitive_part(e).multiplicity != 1) continue;
        if (!eng.is_effective(e)) continue;
        if (!eng.reduce_to_nef(e).fixed_part.empty()) continue;
        return false;
    }
    // (ii) h = 2B with B effective of square 2: the map is 2:1 onto a quadric.
    bool even = true;
    for (int i = 0; i < h.rank() && even; ++i) even = (h[i] % 2 == 0);
    if (even) {
        std::vector<Int> half(static_cast<size_t>(h.rank()));
        for (int i = 0; i < h.rank(); ++i) half[static_cast<size_t>(i)] = h[i] / 2;
        DivisorClass b(std::move(half));
        if (lat.square(b) == 2 && eng.is_effective(b)) return false;
    }
    return true;
}

Int sectional_genus(const PicardLattice& lat, const DivisorClass& h) {
    const Int sq = lat.square(h);
    if (sq <= 0) fail(ErrorCode::non_positive_polarization, "sectional genus requires H^2 > 0");
    return checked_add(sq / 2, 1);
}

Polarization::Polarization(PicardLattice lat, DivisorClass h) : lat_(std::move(lat)), h_(std::move(h)) {
    if (!is_very_ample(lat_, h_)) fail(ErrorCode::not_very_ample, "polarization must be very ample");
    square_ = lat_.square(h_);
    genus_ = sectional_genus(lat_, h_);
}

} // namespace k3acm
