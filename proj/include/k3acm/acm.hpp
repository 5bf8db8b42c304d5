#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "k3acm/cohomology.hpp"

namespace k3acm {

// Numeric case of the ACM-and-initialized classification for an effective
// class D against a very ample H with n = H^2:
//   case_a: D^2 = n-6 and n-3 <= H.D <= n-1
//   case_b: D^2 = n-4 and n-1 <= H.D <= n
//   case_c: D^2 = n-2 and H.D = n+1
//   case_d: D^2 >= n, D^2 = 2 H.D - n - 4, D-H not effective, h^1(2H-D) = 0
//   none:   effective and in scope (D^2 >= n-6) but matching no case
enum class AcmCase { case_a, case_b, case_c, case_d, none };

const char* acm_case_name(AcmCase c);

// Everything the classifier can say about one effective class.
struct ClassificationRecord {
    DivisorClass cls;
    Int degree = 0;
    Int square = 0;
    bool initialized = false;
    bool acm = false;
    bool out_of_scope = false; // D^2 < H^2 - 6: the numeric classification is silent
    AcmCase numeric_case = AcmCase::none;
    bool ulrich = false;
    std::vector<std::pair<Int, Int>> h1_profile; // (l, h^1(D + l*H)) over the scan window
};

// Decides ACM / initialized / Ulrich for line bundles relative to a very
// ample polarization, and cross-checks the finite cohomology scan against
// the numeric case classification.
class AcmClassifier {
public:
    // Throws not_very_ample unless is_very_ample(lat, h).
    AcmClassifier(const PicardLattice& lat, const DivisorClass& h);

    const CohomologyEngine& engine() const { return *eng_; }
    const PicardLattice& lattice() const { return eng_->lattice(); }
    const DivisorClass& polarization() const { return eng_->ample(); }
    Int polarization_square() const { return hsq_; }

    // h^0(D) > 0 and h^0(D - H) = 0: D has a section but no section through
    // a hyperplane twist down.
    bool is_initialized(const DivisorClass& d) const;

    // All intermediate cohomology of D vanishes. Finite test: with E the
    // effective side of {D, -D} and m = max(1, ceil((H.E + 1)/H^2)), ACM is
    // equivalent to h^1(E - k*H) = 0 for k = 0..m. Throws zero_class /
    // neither_side_effective.
    bool is_acm(const DivisorClass& d) const;

    // Same scan with m enlarged by extra_margin; the verdict must not change
    // (degree bounds make larger twists vanish automatically).
    bool is_acm_with_margin(const DivisorClass& d, Int extra_margin) const;

    // (l, h^1(D + l*H)) for l in [l_min, l_max]. Throws empty_window.
    std::vector<std::pair<Int, Int>> h1_profile(const DivisorClass& d, Int l_min, Int l_max) const;

    // The numeric case of an effective class. Throws not_effective when
    // neither nonzero-effective, out_of_scope when D^2 < H^2 - 6.
    AcmCase classification_case(const DivisorClass& d) const;

    // ACM, initialized, and D^2 = 2 H^2 - 4 (the maximal square an ACM
    // initialized class can have).
    bool is_ulrich(const DivisorClass& d) const;

    // Full record for an effective class d (throws not_effective otherwise).
    ClassificationRecord classify(const DivisorClass& d) const;

private:
    bool acm_scan(const DivisorClass& effective_side, Int extra_margin) const;

    std::unique_ptr<CohomologyEngine> eng_;
    Int hsq_ = 0;
};

} // namespace k3acm
