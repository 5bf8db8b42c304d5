#include "k3acm/acm.hpp"

#include <algorithm>

#include "k3acm/polarization.hpp"

namespace k3acm {

const char* acm_case_name(AcmCase c) {
    switch (c) {
    case AcmCase::case_a: return "a";
    case AcmCase::case_b: return "b";
    case AcmCase::case_c: return "c";
    case AcmCase::case_d: return "d";
    case AcmCase::none: return "none";
    }
    return "none";
}

AcmClassifier::AcmClassifier(const PicardLattice& lat, const DivisorClass& h) {
    if (!is_very_ample(lat, h)) fail(ErrorCode::not_very_ample, "classifier needs a very ample polarization");
    eng_ = std::make_unique<CohomologyEngine>(lat, h);
    hsq_ = lat.square(h);
}

bool AcmClassifier::is_initialized(const DivisorClass& d) const {
    return eng_->is_effective(d) && !eng_->is_effective(d - polarization());
}

bool AcmClassifier::acm_scan(const DivisorClass& e, Int extra_margin) const {
    const Int deg = eng_->degree(e);
    // Twists beyond m = ceil((H.E + 1)/H^2) have h^1 = 0 automatically
    // (degree leaves the window where intermediate cohomology can live), so
    // the scan over k = 0..m is a complete ACM test for both cohomology
    // directions: the negative side is Serre-dual to twists of -E.
    const Int m = checked_add(std::max<Int>(1, ceil_div(checked_add(deg, 1), hsq_)), extra_margin);
    for (Int k = 0; k <= m; ++k) {
        DivisorClass twist = e - k * polarization();
        if (eng_->cohomology_dims(twist).h1 != 0) return false;
    }
    return true;
}

bool AcmClassifier::is_acm(const DivisorClass& d) const { return is_acm_with_margin(d, 0); }

bool AcmClassifier::is_acm_with_margin(const DivisorClass& d, Int extra_margin) const {
    if (d.is_zero()) fail(ErrorCode::zero_class, "ACM test needs a nonzero class");
    if (eng_->is_effective(d)) return acm_scan(d, extra_margin);
    if (eng_->is_effective(-d)) return acm_scan(-d, extra_margin);
    fail(ErrorCode::neither_side_effective, "ACM test needs D or -D effective");
}

std::vector<std::pair<Int, Int>> AcmClassifier::h1_profile(const DivisorClass& d, Int l_min, Int l_max) const {
    if (l_min > l_max) fail(ErrorCode::empty_window, "h1 profile window is empty");
    std::vector<std::pair<Int, Int>> out;
    out.reserve(static_cast<size_t>(l_max - l_min + 1));
    for (Int l = l_min; l <= l_max; ++l)
        out.emplace_back(l, eng_->cohomology_dims(d + l * polarization()).h1);
    return out;
}

AcmCase AcmClassifier::classification_case(const DivisorClass& d) const {
    if (d.is_zero() || !eng_->is_effective(d))
        fail(ErrorCode::not_effective, "classification needs a nonzero effective class");
    const Int n = hsq_;
    const Int sq = lattice().square(d);
    if (sq < n - 6) fail(ErrorCode::out_of_scope, "classification covers D^2 >= H^2 - 6 only");
    const Int deg = eng_->degree(d);
    if (sq == n - 6) return (deg >= n - 3 && deg <= n - 1) ? AcmCase::case_a : AcmCase::none;
    if (sq == n - 4) return (deg == n - 1 || deg == n) ? AcmCase::case_b : AcmCase::none;
    if (sq == n - 2) return (deg == n + 1) ? AcmCase::case_c : AcmCase::none;
    if (sq >= n) {
        if (sq != checked_sub(checked_mul(2, deg), checked_add(n, 4))) return AcmCase::none;
        if (eng_->is_effective(d - polarization())) return AcmCase::none;
        DivisorClass residual = 2 * polarization() - d;
        if (eng_->cohomology_dims(residual).h1 != 0) return AcmCase::none;
        return AcmCase::case_d;
    }
    return AcmCase::none; // even squares strictly between n-2 and n cannot occur
}

bool AcmClassifier::is_ulrich(const DivisorClass& d) const {
    if (d.is_zero()) fail(ErrorCode::zero_class, "Ulrich test needs a nonzero class");
    if (!eng_->is_effective(d)) return false;
    if (lattice().square(d) != checked_sub(checked_mul(2, hsq_), 4)) return false;
    return is_initialized(d) && is_acm(d);
}

ClassificationRecord AcmClassifier::classify(const DivisorClass& d) const {
    if (d.is_zero() || !eng_->is_effective(d))
        fail(ErrorCode::not_effective, "classification record needs a nonzero effective class");
    ClassificationRecord rec;
    rec.cls = d;
    rec.degree = eng_->degree(d);
    rec.square = lattice().square(d);
    rec.initialized = is_initialized(d);
    rec.acm = is_acm(d);
    rec.out_of_scope = rec.square < hsq_ - 6;
    rec.numeric_case = rec.out_of_scope ? AcmCase::none : classification_case(d);
    rec.ulrich = rec.acm && rec.initialized && rec.square == checked_sub(checked_mul(2, hsq_), 4);
    const Int m = std::max<Int>(1, ceil_div(checked_add(rec.degree, 1), hsq_));
    rec.h1_profile = h1_profile(d, -m, m);
    return rec;
}

} // namespace k3acm
