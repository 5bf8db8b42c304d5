#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "k3acm/lattice.hpp"

namespace k3acm {

struct CohomologyVector {
    Int h0 = 0, h1 = 0, h2 = 0;
    friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

struct ReductionResult {
    DivisorClass nef_part;
    std::vector<DivisorClass> fixed_part; // subtracted (-2)-classes, in subtraction order
};

struct EllipticDecomposition {
    Int multiplicity;
    DivisorClass fiber; // primitive, fiber^2 = 0
};

// Which candidate to subtract first when several (-2)-classes pair negatively.
// The nef part is independent of this choice; exposing both orders lets tests
// assert that.
enum class TieBreak { min_degree_lex, max_degree_revlex };

// Exact sheaf-cohomology dimensions of line bundles on a K3 surface whose
// Picard lattice is exactly `lattice`, polarized by the designated ample
// class. All queries are relative to that choice: "effective" means degree
// and (-2)-curve tests against it succeed. Results are cached; the cache
// only ever extends (verdicts never change as the degree bound grows), and
// a mutex makes concurrent queries safe.
class CohomologyEngine {
public:
    // Throws not_ample unless is_ample(lattice, ample).
    CohomologyEngine(PicardLattice lattice, DivisorClass ample);

    CohomologyEngine(const CohomologyEngine&) = delete;
    CohomologyEngine& operator=(const CohomologyEngine&) = delete;

    const PicardLattice& lattice() const { return lat_; }
    const DivisorClass& ample() const { return ample_; }
    Int degree(const DivisorClass& d) const { return lat_.pair(ample_, d); }

    // All (-2)-classes of degree 1..max_degree, sorted by (degree, lex).
    std::vector<DivisorClass> neg_two_classes(Int max_degree) const;

    // The subset that is not a sum of two effective classes: the classes of
    // irreducible (-2)-curves. Same order.
    std::vector<DivisorClass> irreducible_neg_two(Int max_degree) const;

    // h^0(D) > 0: zero class, or positive degree with D^2 >= -2, or reachable
    // by subtracting an irreducible (-2)-class that pairs negatively.
    bool is_effective(const DivisorClass& d) const;

    // Zariski-style reduction: repeatedly subtract an irreducible (-2)-class
    // pairing negatively until none does. Preserves h^0; the result is the
    // nef (moving) part plus the multiset of subtracted classes.
    // Throws not_effective unless is_effective(d).
    ReductionResult reduce_to_nef(const DivisorClass& d, TieBreak order = TieBreak::min_degree_lex) const;

    // Nonnegative square, nonnegative degree, and nonnegative pairing with
    // every irreducible (-2)-class (of degree up to deg d, which suffices).
    bool is_nef(const DivisorClass& d) const;

    // For nef d with d^2 = 0: d = k * fiber with fiber primitive of square 0.
    // Throws zero_class / nonzero_square / not_nef.
    EllipticDecomposition elliptic_decomposition(const DivisorClass& d) const;

    // (h^0, h^1, h^2), exact. Cases: 0 -> (1,0,1); effective D -> h^2 = 0 and
    // h^0 from the nef part P (chi(P) if P^2 > 0; multiplicity+1 if P^2 = 0;
    // 1 if P = 0), h^1 = h^0 - chi(D); -D effective -> Serre-dual; neither
    // side effective -> (0, -chi(D), 0).
    CohomologyVector cohomology_dims(const DivisorClass& d) const;

    // Whether |D| is base point free: the fixed part of the reduction is
    // empty and the nef part is not of the form k*F + Gamma with F an
    // effective square-0 class, Gamma a (-2)-class, F.Gamma = 1 and k >= 2.
    // Throws not_effective unless is_effective(d).
    bool is_base_point_free(const DivisorClass& d) const;

private:
    struct State {
        Int high_water = 0;                                       // degrees fully scanned
        std::vector<DivisorClass> roots;                          // (-2)-classes, (degree, lex) order
        std::vector<Int> root_degrees;                            // parallel to roots
        std::vector<DivisorClass> irreducibles;                   // subset of roots, same order
        std::vector<Int> irreducible_degrees;                     // parallel
        std::map<Int, std::vector<DivisorClass>> effectives_at;   // per exact degree
        std::map<std::vector<Int>, bool> effective_memo;
    };

    void ensure(Int degree_bound) const;
    bool irreducible_at(const DivisorClass& g, Int degree) const;
    const std::vector<DivisorClass>& effectives_of_degree(Int degree) const;
    bool effective_inner(const DivisorClass& d) const;
    ReductionResult reduce_inner(const DivisorClass& d, TieBreak order) const;
    CohomologyVector dims_inner(const DivisorClass& d) const;

    PicardLattice lat_;
    DivisorClass ample_;
    mutable std::recursive_mutex mu_;
    mutable State st_;
};

} // namespace k3acm
