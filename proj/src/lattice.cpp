#include "k3acm/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace k3acm {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (c_.size() != o.c_.size()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (c_.size() != o.c_.size()) fail(ErrorCode::dimension_mismatch, "class rank mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    return *this;
}

DivisorClass operator-(const DivisorClass& a) {
    std::vector<Int> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_neg(a.c_[i]);
    return DivisorClass(std::move(c));
}

DivisorClass operator*(Int k, const DivisorClass& a) {
    std::vector<Int> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(k, a.c_[i]);
    return DivisorClass(std::move(c));
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ')';
    return os.str();
}

PrimitiveDecomposition primitive_part(const DivisorClass& d) {
    if (d.is_zero()) fail(ErrorCode::zero_class, "primitive_part of the zero class");
    Int g = 0;
    for (int i = 0; i < d.rank(); ++i) g = std::gcd(g, d[i]);
    std::vector<Int> c(static_cast<size_t>(d.rank()));
    for (int i = 0; i < d.rank(); ++i) c[static_cast<size_t>(i)] = d[i] / g;
    return {g, DivisorClass(std::move(c))};
}

const char* code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::not_symmetric: return "not_symmetric";
    case ErrorCode::odd_diagonal: return "odd_diagonal";
    case ErrorCode::wrong_signature: return "wrong_signature";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::zero_class: return "zero_class";
    case ErrorCode::non_positive_polarization: return "non_positive_polarization";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::not_ample: return "not_ample";
    case ErrorCode::not_effective: return "not_effective";
    case ErrorCode::not_nef: return "not_nef";
    case ErrorCode::nonzero_square: return "nonzero_square";
    case ErrorCode::not_very_ample: return "not_very_ample";
    case ErrorCode::neither_side_effective: return "neither_side_effective";
    case ErrorCode::out_of_scope: return "out_of_scope";
    case ErrorCode::empty_window: return "empty_window";
    case ErrorCode::bound_too_small: return "bound_too_small";
    case ErrorCode::precondition_violated: return "precondition_violated";
    case ErrorCode::internal_inconsistency: return "internal_inconsistency";
    }
    return "unknown_error";
}

namespace {

struct Signature {
    int pos = 0, neg = 0, zero = 0;
};

// Sylvester inertia of a symmetric integer matrix by congruence transformations.
// Row/column operations scale by the pivot, which preserves signs of the
// inertia (congruence by a nonsingular rational matrix); everything stays in
// checked 64-bit integers.
Signature inertia(std::vector<std::vector<Int>> m) {
    const int n = static_cast<int>(m.size());
    Signature sig;
    auto at = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
    for (int k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            int swap_row = -1, mix_row = -1;
            for (int j = k + 1; j < n && swap_row < 0; ++j)
                if (at(j, j) != 0) swap_row = j;
            for (int j = k + 1; j < n && mix_row < 0; ++j)
                if (at(k, j) != 0) mix_row = j;
            if (swap_row >= 0) {
                std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(swap_row)]);
                for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, swap_row));
            } else if (mix_row >= 0) {
                // Both diagonals vanish but the off-diagonal entry does not:
                // add row/col mix_row into row/col k, giving diagonal 2*entry.
                for (int j = 0; j < n; ++j) at(k, j) = checked_add(at(k, j), at(mix_row, j));
                for (int i = 0; i < n; ++i) at(i, k) = checked_add(at(i, k), at(i, mix_row));
            } else {
                ++sig.zero; // row k is zero on the remaining block
                continue;
            }
        }
        const Int p = at(k, k);
        if (p > 0)
            ++sig.pos;
        else
            ++sig.neg;
        for (int i = k + 1; i < n; ++i) {
            const Int a = at(i, k);
            if (a == 0) continue;
            // Congruence by E = I + (p-1)e_ii - a*e_ik: row then column update.
            for (int j = 0; j < n; ++j) at(i, j) = checked_sub(checked_mul(p, at(i, j)), checked_mul(a, at(k, j)));
            for (int j = 0; j < n; ++j) at(j, i) = checked_sub(checked_mul(p, at(j, i)), checked_mul(a, at(j, k)));
        }
        // Tame entry growth: pull out common factors of each remaining row,
        // together with the matching column (divides the diagonal by g^2 only
        // when both operations share the factor, so divide rows and columns
        // separately is unsound; instead divide the whole symmetric block by
        // the gcd of everything, which is a positive congruence scaling).
        Int g = 0;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) g = std::gcd(g, at(i, j));
        if (g > 1) {
            // Dividing a symmetric block by g changes the form by a positive
            // scalar, preserving inertia, only if we treat the block as an
            // independent form - which it is, since rows/cols 0..k are now
            // zero against it.
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j) at(i, j) /= g;
        }
    }
    return sig;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

// Extended gcd: returns g = gcd(a,b) >= 0 with x*a + y*b = g.
struct ExtGcd {
    Int g, x, y;
};

ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = t;
        t = checked_sub(old_x, checked_mul(q, x));
        old_x = x;
        x = t;
        t = checked_sub(old_y, checked_mul(q, y));
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_x = checked_neg(old_x);
        old_y = checked_neg(old_y);
    }
    return {old_r, old_x, old_y};
}

// The degree functional c = G*h. Solves c.x = t on the lattice: u is a vector
// with c.u = g = gcd(c), and kernel is a basis of { x : c.x = 0 }. Built from
// a chain of unimodular 2x2 column operations, so the kernel basis is a basis
// of the full kernel lattice, not a finite-index sublattice.
struct DegreeSystem {
    std::vector<Int> functional;
    Int g = 0;
    std::vector<Int> u;
    std::vector<std::vector<Int>> kernel;
};

DegreeSystem degree_system(const PicardLattice& lat, const DivisorClass& h) {
    const int n = lat.rank();
    DegreeSystem sys;
    sys.functional.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s = checked_add(s, checked_mul(lat.gram(i, j), h[j]));
        sys.functional[static_cast<size_t>(i)] = s;
    }
    const auto& c = sys.functional;
    std::vector<Int> u(static_cast<size_t>(n), 0);
    u[0] = 1;
    Int g = c[0];
    if (g < 0) {
        g = -g;
        u[0] = -1;
    }
    for (int i = 1; i < n; ++i) {
        const Int ci = c[static_cast<size_t>(i)];
        if (g == 0 && ci == 0) {
            // Degenerate direction cannot occur: the form is nondegenerate,
            // so c = G*h vanishes only for h = 0, excluded by h^2 > 0.
            std::vector<Int> k(static_cast<size_t>(n), 0);
            k[static_cast<size_t>(i)] = 1;
            sys.kernel.push_back(std::move(k));
            continue;
        }
        ExtGcd e = ext_gcd(g, ci);
        std::vector<Int> k(static_cast<size_t>(n), 0);
        // c.k = (ci/e.g)*c.u - (g/e.g)*ci = 0
        for (int j = 0; j < n; ++j) k[static_cast<size_t>(j)] = checked_mul(ci / e.g, u[static_cast<size_t>(j)]);
        k[static_cast<size_t>(i)] = checked_sub(k[static_cast<size_t>(i)], g / e.g);
        std::vector<Int> u2(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) u2[static_cast<size_t>(j)] = checked_mul(e.x, u[static_cast<size_t>(j)]);
        u2[static_cast<size_t>(i)] = checked_add(u2[static_cast<size_t>(i)], e.y);
        u = std::move(u2);
        sys.kernel.push_back(std::move(k));
        g = e.g;
    }
    sys.g = g;
    sys.u = std::move(u);
    if (g <= 0) fail(ErrorCode::internal_inconsistency, "degenerate degree functional");
    if (dot(c, sys.u) != g) fail(ErrorCode::internal_inconsistency, "degree system unit defect");
    for (const auto& k : sys.kernel)
        if (dot(c, k) != 0) fail(ErrorCode::internal_inconsistency, "degree system kernel defect");
    return sys;
}

Int det_recursive(const std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int det = 0;
    std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
    for (size_t col = 0; col < n; ++col) {
        if (m[0][col] == 0) continue;
        for (size_t i = 1; i < n; ++i) {
            size_t jj = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        Int term = checked_mul(m[0][col], det_recursive(minor));
        det = (col % 2 == 0) ? checked_add(det, term) : checked_sub(det, term);
    }
    return det;
}

std::vector<std::vector<Int>> adjugate(const std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    std::vector<std::vector<Int>> adj(n, std::vector<Int>(n, 0));
    if (n == 0) return adj;
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            size_t ii = 0;
            for (size_t i = 0; i < n; ++i) {
                if (i == r) continue;
                size_t jj = 0;
                for (size_t j = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor[ii][jj++] = m[i][j];
                }
                ++ii;
            }
            Int cof = det_recursive(minor);
            if ((r + c) % 2 != 0) cof = checked_neg(cof);
            adj[c][r] = cof; // adjugate = transposed cofactor matrix
        }
    }
    return adj;
}

// Enumerates integer y (dimension m) with y^T A y - 2 b^T y <= r0 for A
// positive definite. Box bounds come from completing the square exactly:
// (y_i*det - (adj*b)_i)^2 <= (r0*det + b^T adj b) * adj_ii for each i.
struct Ellipsoid {
    const std::vector<std::vector<Int>>& a;
    const std::vector<Int>& b;
    Int r0;
    Int det;
    const std::vector<std::vector<Int>>& adj;

    std::vector<Int> adj_b;
    Int radius_scaled = 0; // r0*det + b^T adj b; empty when negative

    bool empty = false;

    Ellipsoid(const std::vector<std::vector<Int>>& a_, const std::vector<Int>& b_, Int r0_, Int det_,
              const std::vector<std::vector<Int>>& adj_)
        : a(a_), b(b_), r0(r0_), det(det_), adj(adj_) {
        const size_t m = a.size();
        adj_b.assign(m, 0);
        for (size_t i = 0; i < m; ++i) adj_b[i] = dot(adj[i], b);
        radius_scaled = checked_add(checked_mul(r0, det), dot(b, adj_b));
        empty = radius_scaled < 0;
    }

    template <typename Fn> void for_each(Fn&& fn) {
        if (empty) return;
        std::vector<Int> y(a.size(), 0);
        recurse(0, y, fn);
    }

    template <typename Fn> void recurse(size_t i, std::vector<Int>& y, Fn&& fn) {
        const size_t m = a.size();
        if (i == m) {
            // Exact final filter: quadratic value at y.
            Int q = 0;
            for (size_t r = 0; r < m; ++r) {
                Int row = 0;
                for (size_t c = 0; c < m; ++c) row = checked_add(row, checked_mul(a[r][c], y[c]));
                q = checked_add(q, checked_mul(y[r], row));
            }
            q = checked_sub(q, checked_mul(2, dot(b, y)));
            if (q <= r0) fn(y);
            return;
        }
        const Int s2 = checked_mul(radius_scaled, adj[i][i]);
        if (s2 < 0) return;
        const Int s = isqrt_floor(s2);
        const Int lo = ceil_div(checked_sub(adj_b[i], s), det);
        const Int hi = floor_div(checked_add(adj_b[i], s), det);
        for (Int v = lo; v <= hi; ++v) {
            y[i] = v;
            recurse(i + 1, y, fn);
        }
        y[i] = 0;
    }
};

// Shared setup for degree-window enumeration: coset representative plus the
// negative definite form on the kernel of the degree functional.
struct DegreeEnumerator {
    const PicardLattice& lat;
    DegreeSystem sys;
    std::vector<std::vector<Int>> a;   // -M^T G M, positive definite
    std::vector<std::vector<Int>> adj; // adjugate of a
    Int det = 1;

    DegreeEnumerator(const PicardLattice& lat_, const DivisorClass& h) : lat(lat_) {
        if (h.rank() != lat.rank()) fail(ErrorCode::dimension_mismatch, "polarization rank mismatch");
        if (lat.square(h) <= 0)
            fail(ErrorCode::non_positive_polarization, "degree enumeration requires H^2 > 0");
        sys = degree_system(lat, h);
        const size_t m = sys.kernel.size();
        const int n = lat.rank();
        a.assign(m, std::vector<Int>(m, 0));
        for (size_t r = 0; r < m; ++r) {
            std::vector<Int> gk(static_cast<size_t>(n), 0);
            for (int i = 0; i < n; ++i) {
                Int s = 0;
                for (int j = 0; j < n; ++j) s = checked_add(s, checked_mul(lat.gram(i, j), sys.kernel[r][static_cast<size_t>(j)]));
                gk[static_cast<size_t>(i)] = s;
            }
            for (size_t c = 0; c < m; ++c) a[r][c] = checked_neg(dot(gk, sys.kernel[c]));
        }
        det = det_recursive(a);
        if (det <= 0 && m > 0)
            fail(ErrorCode::internal_inconsistency, "kernel form of an H with H^2 > 0 must be negative definite");
        if (m == 0) det = 1;
        adj = adjugate(a);
    }

    // All D with H.D = t and D^2 >= min_square, appended to out.
    void degree_slice(Int t, Int min_square, std::vector<DivisorClass>& out) const {
        if (t % sys.g != 0) return;
        const int n = lat.rank();
        const Int scale = t / sys.g;
        std::vector<Int> x0(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) x0[static_cast<size_t>(i)] = checked_mul(scale, sys.u[static_cast<size_t>(i)]);
        DivisorClass base{std::vector<Int>(x0)};
        const Int e = lat.square(base);
        const size_t m = sys.kernel.size();
        // Q(x0 + K y) = e + 2 (K^T G x0).y - y^T A y, so the constraint
        // Q >= min_square becomes y^T A y - 2 b.y <= e - min_square.
        std::vector<Int> b(m, 0);
        std::vector<Int> gx(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int j = 0; j < n; ++j) s = checked_add(s, checked_mul(lat.gram(i, j), x0[static_cast<size_t>(j)]));
            gx[static_cast<size_t>(i)] = s;
        }
        for (size_t r = 0; r < m; ++r) b[r] = dot(sys.kernel[r], gx);
        const Int r0 = checked_sub(e, min_square);
        Ellipsoid ell(a, b, r0, det, adj);
        ell.for_each([&](const std::vector<Int>& y) {
            std::vector<Int> c(x0);
            for (size_t r = 0; r < m; ++r)
                for (int i = 0; i < n; ++i)
                    c[static_cast<size_t>(i)] =
                        checked_add(c[static_cast<size_t>(i)], checked_mul(y[r], sys.kernel[r][static_cast<size_t>(i)]));
            out.emplace_back(std::move(c));
        });
    }
};

} // namespace

PicardLattice PicardLattice::from_gram(const std::vector<std::vector<Int>>& gram) {
    const int n = static_cast<int>(gram.size());
    if (n == 0) fail(ErrorCode::wrong_signature, "empty Gram matrix has no positive direction");
    for (const auto& row : gram)
        if (static_cast<int>(row.size()) != n) fail(ErrorCode::invalid_input, "Gram matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (gram[static_cast<size_t>(i)][static_cast<size_t>(j)] != gram[static_cast<size_t>(j)][static_cast<size_t>(i)])
                fail(ErrorCode::not_symmetric, "Gram matrix is not symmetric");
    for (int i = 0; i < n; ++i)
        if (gram[static_cast<size_t>(i)][static_cast<size_t>(i)] % 2 != 0)
            fail(ErrorCode::odd_diagonal, "even lattice needs even diagonal entries");
    Signature sig = inertia(gram);
    if (sig.pos != 1 || sig.neg != n - 1 || sig.zero != 0)
        fail(ErrorCode::wrong_signature, "Picard lattice of a K3 surface must have signature (1, rank-1)");
    std::vector<Int> flat;
    flat.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (const auto& row : gram) flat.insert(flat.end(), row.begin(), row.end());
    return PicardLattice(n, std::move(flat));
}

std::vector<std::vector<Int>> PicardLattice::gram_rows() const {
    std::vector<std::vector<Int>> rows(static_cast<size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        rows[static_cast<size_t>(i)].assign(g_.begin() + i * rank_, g_.begin() + (i + 1) * rank_);
    return rows;
}

Int PicardLattice::pair(const DivisorClass& d, const DivisorClass& e) const {
    if (d.rank() != rank_ || e.rank() != rank_) fail(ErrorCode::dimension_mismatch, "pairing rank mismatch");
    Int s = 0;
    for (int i = 0; i < rank_; ++i) {
        Int row = 0;
        for (int j = 0; j < rank_; ++j) row = checked_add(row, checked_mul(gram(i, j), e[j]));
        s = checked_add(s, checked_mul(d[i], row));
    }
    return s;
}

DivisorClass PicardLattice::basis_class(int i) const {
    if (i < 0 || i >= rank_) fail(ErrorCode::out_of_range, "basis index out of range");
    std::vector<Int> c(static_cast<size_t>(rank_), 0);
    c[static_cast<size_t>(i)] = 1;
    return DivisorClass(std::move(c));
}

PicardLattice rank2_family(Int g, Int d) {
    if (g < 3) fail(ErrorCode::out_of_range, "family lattice needs genus g >= 3");
    if (d < 3 || 2 * d > g + 3) fail(ErrorCode::out_of_range, "family lattice needs 3 <= d <= (g+3)/2");
    return PicardLattice::from_gram({{2 * g - 2, d}, {d, 0}});
}

std::vector<DivisorClass> enumerate_degree_range(const PicardLattice& lat, const DivisorClass& h, Int lo,
                                                 Int hi, Int min_square) {
    DegreeEnumerator en(lat, h);
    std::vector<DivisorClass> out;
    for (Int t = lo; t <= hi; ++t) {
        std::vector<DivisorClass> slice;
        en.degree_slice(t, min_square, slice);
        std::sort(slice.begin(), slice.end());
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

std::vector<DivisorClass> enumerate_by_degree(const PicardLattice& lat, const DivisorClass& h, Int max_degree,
                                              Int min_square) {
    if (max_degree <= 0) {
        DegreeEnumerator check(lat, h); // still validate H
        (void)check;
        return {};
    }
    auto out = enumerate_degree_range(lat, h, 1, max_degree, min_square);
    std::sort(out.begin(), out.end());
    return out;
}

DivisorClass positive_cone_reference(const PicardLattice& lat) {
    const int n = lat.rank();
    // Balanced value order 0, 1, -1, 2, -2, ... so that "natural" positive
    // directions win ties deterministically.
    auto value_at = [](Int idx) -> Int { return (idx % 2 == 1) ? (idx + 1) / 2 : -(idx / 2); };
    for (Int box = 1; box <= 1024; box *= 2) {
        const Int vals = 2 * box + 1;
        Int total = 1;
        for (int i = 0; i < n; ++i) total = checked_mul(total, vals);
        for (Int step = 0; step < total; ++step) {
            Int rem = step;
            std::vector<Int> c(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) {
                c[static_cast<size_t>(i)] = value_at(rem % vals);
                rem /= vals;
            }
            DivisorClass d(std::move(c));
            if (d.is_zero()) continue;
            if (lat.square(d) > 0) return d;
        }
    }
    fail(ErrorCode::internal_inconsistency, "no positive-square vector found in search box");
}

std::vector<DivisorClass> orthogonal_roots(const PicardLattice& lat, const DivisorClass& h) {
    DegreeEnumerator en(lat, h);
    std::vector<DivisorClass> out;
    en.degree_slice(0, -2, out);
    std::vector<DivisorClass> roots;
    for (auto& d : out)
        if (!d.is_zero() && lat.square(d) == -2) roots.push_back(d);
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace k3acm
