#pragma once

// Independent brute-force oracles for the lattice machinery. Everything here
// is deliberately naive: plain box scans with no number theory, so that
// agreement with the production algorithms is meaningful evidence.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "k3acm/lattice.hpp"

namespace oracle {

using k3acm::DivisorClass;
using k3acm::Int;
using k3acm::PicardLattice;

// All classes with |coord| <= box, lo <= H.D <= hi, D^2 >= min_square,
// sorted (degree, lex) like enumerate_degree_range.
inline std::vector<DivisorClass> box_enumerate(const PicardLattice& lat, const DivisorClass& h, Int lo,
                                               Int hi, Int min_square, Int box) {
    std::vector<DivisorClass> out;
    const int n = lat.rank();
    std::vector<Int> c(static_cast<size_t>(n), -box);
    for (;;) {
        DivisorClass d{std::vector<Int>(c)};
        const Int deg = lat.pair(h, d);
        if (deg >= lo && deg <= hi && lat.square(d) >= min_square) out.push_back(d);
        int i = 0;
        while (i < n && c[static_cast<size_t>(i)] == box) {
            c[static_cast<size_t>(i)] = -box;
            ++i;
        }
        if (i == n) break;
        ++c[static_cast<size_t>(i)];
    }
    std::sort(out.begin(), out.end(), [&](const DivisorClass& a, const DivisorClass& b) {
        const Int da = lat.pair(h, a), db = lat.pair(h, b);
        return da != db ? da < db : a < b;
    });
    return out;
}

// Largest |coordinate| in a list; used to confirm a box was wide enough.
inline Int max_coord(const std::vector<DivisorClass>& classes) {
    Int m = 0;
    for (const auto& d : classes)
        for (int i = 0; i < d.rank(); ++i) m = std::max(m, d[i] < 0 ? -d[i] : d[i]);
    return m;
}

// Deterministic xorshift generator so property tests are reproducible.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // Uniform-ish integer in [lo, hi].
    Int range(Int lo, Int hi) {
        return lo + static_cast<Int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    DivisorClass cls(int rank, Int lo, Int hi) {
        std::vector<Int> c(static_cast<size_t>(rank));
        for (auto& x : c) x = range(lo, hi);
        return DivisorClass(std::move(c));
    }
};

} // namespace oracle
