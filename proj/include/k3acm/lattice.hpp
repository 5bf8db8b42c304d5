#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "k3acm/checked.hpp"

namespace k3acm {

// A divisor class is an integer coordinate vector in a fixed basis of the
// Picard lattice. Arithmetic is componentwise and overflow-checked.
class DivisorClass {
public:
    DivisorClass() = default;
    explicit DivisorClass(std::vector<Int> coords) : c_(std::move(coords)) {}
    DivisorClass(std::initializer_list<Int> coords) : c_(coords) {}

    int rank() const { return static_cast<int>(c_.size()); }
    Int operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Int& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<Int>& coords() const { return c_; }

    bool is_zero() const {
        for (Int x : c_)
            if (x != 0) return false;
        return true;
    }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator-(const DivisorClass& a);
    friend DivisorClass operator*(Int k, const DivisorClass& a);

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DivisorClass& a, const DivisorClass& b) { return a.c_ != b.c_; }
    // Lexicographic coordinate order; the tie-break order used everywhere.
    friend bool operator<(const DivisorClass& a, const DivisorClass& b) { return a.c_ < b.c_; }

    std::string to_string() const;

private:
    std::vector<Int> c_;
};

struct PrimitiveDecomposition {
    Int multiplicity;       // gcd of the coordinates, >= 1
    DivisorClass primitive; // same ray, coordinates divided by the gcd
};

// Splits a nonzero class as multiplicity * primitive. Throws zero_class on 0.
PrimitiveDecomposition primitive_part(const DivisorClass& d);

// An even nondegenerate symmetric bilinear form of signature (1, rank-1):
// the Picard lattice of a projective K3 surface. Validation happens in
// from_gram; a constructed lattice is always well-formed.
class PicardLattice {
public:
    // Validates: square shape, symmetry (not_symmetric), even diagonal
    // (odd_diagonal), signature (1, rank-1, 0) (wrong_signature).
    static PicardLattice from_gram(const std::vector<std::vector<Int>>& gram);

    int rank() const { return rank_; }
    Int gram(int i, int j) const { return g_[static_cast<size_t>(i * rank_ + j)]; }
    std::vector<std::vector<Int>> gram_rows() const;

    // Intersection pairing D.E; throws dimension_mismatch on rank mismatch.
    Int pair(const DivisorClass& d, const DivisorClass& e) const;
    Int square(const DivisorClass& d) const { return pair(d, d); }

    // Euler characteristic chi(D) = 2 + D^2/2 (Riemann-Roch on a K3 surface;
    // the square is even, so the division is exact).
    Int chi(const DivisorClass& d) const { return checked_add(2, square(d) / 2); }

    DivisorClass zero_class() const { return DivisorClass(std::vector<Int>(static_cast<size_t>(rank_), 0)); }
    DivisorClass basis_class(int i) const;

    friend bool operator==(const PicardLattice& a, const PicardLattice& b) {
        return a.rank_ == b.rank_ && a.g_ == b.g_;
    }

private:
    PicardLattice(int rank, std::vector<Int> flat) : rank_(rank), g_(std::move(flat)) {}

    int rank_ = 0;
    std::vector<Int> g_; // row-major Gram matrix
};

// Rank-2 lattice with Gram [[2g-2, d], [d, 0]] in the basis (C, F): C a curve
// of genus g, F an elliptic fiber with C.F = d. Valid for g >= 3 and
// 3 <= d <= floor((g+3)/2); otherwise throws out_of_range.
PicardLattice rank2_family(Int g, Int d);

// All classes D with lo <= H.D <= hi and D^2 >= min_square, sorted by
// (degree, then lexicographic coordinates). Exact: solves the degree equation
// on a sublattice coset and enumerates an integer ellipsoid box. Requires
// H^2 > 0 (non_positive_polarization).
std::vector<DivisorClass> enumerate_degree_range(const PicardLattice& lat, const DivisorClass& h,
                                                 Int lo, Int hi, Int min_square);

// Degrees 1..max_degree; empty when max_degree <= 0. Sorted lexicographically.
std::vector<DivisorClass> enumerate_by_degree(const PicardLattice& lat, const DivisorClass& h,
                                              Int max_degree, Int min_square);

// Deterministic representative of the positive cone: the first vector of
// positive square in a balanced box search (coordinates tried in the order
// 0, 1, -1, 2, -2, ...). Fixes which half of the cone counts as "positive".
DivisorClass positive_cone_reference(const PicardLattice& lat);

// All (-2)-classes orthogonal to h (walls through h), both signs included.
// Exact short-vector search in the negative definite sublattice h^perp.
// Requires h^2 > 0 (non_positive_polarization).
std::vector<DivisorClass> orthogonal_roots(const PicardLattice& lat, const DivisorClass& h);

} // namespace k3acm
