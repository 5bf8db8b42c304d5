#include "k3acm/cohomology.hpp"

#include <algorithm>

#include "k3acm/polarization.hpp"

namespace k3acm {

CohomologyEngine::CohomologyEngine(PicardLattice lattice, DivisorClass ample)
    : lat_(std::move(lattice)), ample_(std::move(ample)) {
    if (ample_.rank() != lat_.rank()) fail(ErrorCode::dimension_mismatch, "ample class rank mismatch");
    if (!is_ample(lat_, ample_)) fail(ErrorCode::not_ample, "engine requires an ample polarization");
}

// Extends the root cache one degree at a time. Irreducibility of a degree-t
// root only consults effective classes of degree < t, so levels are built in
// order and earlier levels are final when later ones are processed.
void CohomologyEngine::ensure(Int degree_bound) const {
    for (Int t = st_.high_water + 1; t <= degree_bound; ++t) {
        auto slice = enumerate_degree_range(lat_, ample_, t, t, -2);
        std::sort(slice.begin(), slice.end());
        for (const auto& g : slice) {
            if (lat_.square(g) != -2) continue;
            st_.roots.push_back(g);
            st_.root_degrees.push_back(t);
            if (irreducible_at(g, t)) {
                st_.irreducibles.push_back(g);
                st_.irreducible_degrees.push_back(t);
            }
        }
        st_.high_water = t;
    }
}

// A (-2)-class of degree t is reducible iff it splits as A + B with both
// parts effective; the lower-degree part has degree s <= t/2, so scanning
// cached effective classes of each such degree decides it.
bool CohomologyEngine::irreducible_at(const DivisorClass& g, Int degree) const {
    for (Int s = 1; 2 * s <= degree; ++s) {
        for (const auto& a : effectives_of_degree(s)) {
            if (a == g) continue;
            if (effective_inner(g - a)) return false;
        }
    }
    return true;
}

const std::vector<DivisorClass>& CohomologyEngine::effectives_of_degree(Int degree) const {
    auto it = st_.effectives_at.find(degree);
    if (it != st_.effectives_at.end()) return it->second;
    // Any effective class D of degree s satisfies D^2 >= -2s^2: reduction
    // subtracts at most s roots, each of square -2 and mutual pairings
    // bounded by degrees, so the tight floor -2s^2 is safe.
    const Int floor_sq = checked_mul(-2, checked_mul(degree, degree));
    auto slice = enumerate_degree_range(lat_, ample_, degree, degree, floor_sq);
    std::vector<DivisorClass> eff;
    for (const auto& d : slice)
        if (effective_inner(d)) eff.push_back(d);
    std::sort(eff.begin(), eff.end());
    return st_.effectives_at.emplace(degree, std::move(eff)).first->second;
}

bool CohomologyEngine::effective_inner(const DivisorClass& d) const {
    if (d.is_zero()) return true;
    const Int deg = degree(d);
    if (deg <= 0) return false;
    if (lat_.square(d) >= -2) return true; // Riemann-Roch: chi(D) >= 1 and h^0(-D) = 0
    ensure(deg);
    auto memo = st_.effective_memo.find(d.coords());
    if (memo != st_.effective_memo.end()) return memo->second;
    bool result = false;
    for (size_t i = 0; i < st_.irreducibles.size() && !result; ++i) {
        if (st_.irreducible_degrees[i] > deg) break;
        const auto& g = st_.irreducibles[i];
        if (lat_.pair(g, d) < 0 && effective_inner(d - g)) result = true;
    }
    st_.effective_memo.emplace(d.coords(), result);
    return result;
}

std::vector<DivisorClass> CohomologyEngine::neg_two_classes(Int max_degree) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure(max_degree);
    std::vector<DivisorClass> out;
    for (size_t i = 0; i < st_.roots.size(); ++i)
        if (st_.root_degrees[i] <= max_degree) out.push_back(st_.roots[i]);
    return out;
}

std::vector<DivisorClass> CohomologyEngine::irreducible_neg_two(Int max_degree) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    ensure(max_degree);
    std::vector<DivisorClass> out;
    for (size_t i = 0; i < st_.irreducibles.size(); ++i)
        if (st_.irreducible_degrees[i] <= max_degree) out.push_back(st_.irreducibles[i]);
    return out;
}

bool CohomologyEngine::is_effective(const DivisorClass& d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (d.rank() != lat_.rank()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    return effective_inner(d);
}

ReductionResult CohomologyEngine::reduce_inner(const DivisorClass& d, TieBreak order) const {
    if (!effective_inner(d)) fail(ErrorCode::not_effective, "cannot reduce a non-effective class");
    ReductionResult res;
    DivisorClass cur = d;
    for (;;) {
        const Int deg = degree(cur);
        if (deg < 0) fail(ErrorCode::internal_inconsistency, "reduction drove degree negative");
        if (deg == 0 && !cur.is_zero())
            fail(ErrorCode::internal_inconsistency, "reduction reached a nonzero degree-0 class");
        ensure(deg);
        int pick = -1;
        if (order == TieBreak::min_degree_lex) {
            for (size_t i = 0; i < st_.irreducibles.size(); ++i) {
                if (st_.irreducible_degrees[i] > deg) break;
                if (lat_.pair(st_.irreducibles[i], cur) < 0) {
                    pick = static_cast<int>(i);
                    break;
                }
            }
        } else {
            for (size_t i = st_.irreducibles.size(); i-- > 0;) {
                if (st_.irreducible_degrees[i] > deg) continue;
                if (lat_.pair(st_.irreducibles[i], cur) < 0) {
                    pick = static_cast<int>(i);
                    break;
                }
            }
        }
        if (pick < 0) break;
        cur -= st_.irreducibles[static_cast<size_t>(pick)];
        res.fixed_part.push_back(st_.irreducibles[static_cast<size_t>(pick)]);
    }
    if (lat_.square(cur) < 0) fail(ErrorCode::internal_inconsistency, "nef part has negative square");
    res.nef_part = std::move(cur);
    return res;
}

ReductionResult CohomologyEngine::reduce_to_nef(const DivisorClass& d, TieBreak order) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (d.rank() != lat_.rank()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    return reduce_inner(d, order);
}

bool CohomologyEngine::is_nef(const DivisorClass& d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (d.rank() != lat_.rank()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    if (lat_.square(d) < 0) return false; // pairs negatively with itself or a fixed component
    const Int deg = degree(d);
    if (deg < 0) return false;
    if (deg == 0) return d.is_zero(); // nondegenerate: only 0 has degree 0 and square >= 0
    // An irreducible (-2)-curve of degree > deg(d) cannot pair negatively
    // with d: writing d in the nef closure needs only curves it dominates.
    ensure(deg);
    for (size_t i = 0; i < st_.irreducibles.size(); ++i) {
        if (st_.irreducible_degrees[i] > deg) break;
        if (lat_.pair(st_.irreducibles[i], d) < 0) return false;
    }
    return true;
}

EllipticDecomposition CohomologyEngine::elliptic_decomposition(const DivisorClass& d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (d.rank() != lat_.rank()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    if (d.is_zero()) fail(ErrorCode::zero_class, "elliptic decomposition needs a nonzero class");
    if (lat_.square(d) != 0) fail(ErrorCode::nonzero_square, "elliptic decomposition needs square 0");
    if (!is_nef(d)) fail(ErrorCode::not_nef, "elliptic decomposition needs a nef class");
    auto prim = primitive_part(d);
    return {prim.multiplicity, std::move(prim.primitive)};
}

CohomologyVector CohomologyEngine::dims_inner(const DivisorClass& d) const {
    if (d.is_zero()) return {1, 0, 1}; // h^0(O) = h^2(O) = 1 on a K3 surface
    const Int chi = lat_.chi(d);
    if (effective_inner(d)) {
        auto red = reduce_inner(d, TieBreak::min_degree_lex);
        const auto& p = red.nef_part;
        const Int psq = lat_.square(p);
        Int h0;
        if (p.is_zero())
            h0 = 1;
        else if (psq > 0)
            h0 = lat_.chi(p); // nef and big: no higher cohomology
        else
            h0 = checked_add(primitive_part(p).multiplicity, 1); // k*fiber: k+1 sections
        const Int h1 = checked_sub(h0, chi);
        if (h1 < 0) fail(ErrorCode::internal_inconsistency, "negative h^1 for an effective class");
        return {h0, h1, 0};
    }
    if (effective_inner(-d)) {
        CohomologyVector dual = dims_inner(-d);
        return {dual.h2, dual.h1, dual.h0}; // Serre duality: h^i(D) = h^{2-i}(-D)
    }
    const Int h1 = checked_neg(chi);
    if (h1 < 0) fail(ErrorCode::internal_inconsistency, "chi > 0 but neither D nor -D effective");
    return {0, h1, 0};
}

CohomologyVector CohomologyEngine::cohomology_dims(const DivisorClass& d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (d.rank() != lat_.rank()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    return dims_inner(d);
}

bool CohomologyEngine::is_base_point_free(const DivisorClass& d) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    if (d.rank() != lat_.rank()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    auto red = reduce_inner(d, TieBreak::min_degree_lex); // throws not_effective
    if (!red.fixed_part.empty()) return false;
    if (d.is_zero()) return true;
    // d is nef. The only base-point obstruction left is d = k*F + Gamma with
    // F an effective square-0 class, Gamma a (-2)-curve, F.Gamma = 1, k >= 2;
    // then Gamma is in the base locus. Gamma has degree < deg(d).
    const Int deg = degree(d);
    ensure(deg);
    for (size_t i = 0; i < st_.irreducibles.size(); ++i) {
        if (st_.irreducible_degrees[i] >= deg) break;
        const auto& g = st_.irreducibles[i];
        DivisorClass rest = d - g;
        if (rest.is_zero()) continue;
        if (lat_.square(rest) != 0) continue;
        auto prim = primitive_part(rest);
        if (prim.multiplicity < 2) continue;
        if (lat_.pair(prim.primitive, g) != 1) continue;
        if (!effective_inner(prim.primitive)) continue;
        return false;
    }
    return true;
}

} // namespace k3acm
