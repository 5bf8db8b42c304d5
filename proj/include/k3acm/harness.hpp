#pragma once

#include <string>
#include <vector>

#include "k3acm/acm.hpp"

namespace k3acm {

// One disagreement between the numeric classification and the direct
// cohomological ACM test. A correct engine produces none; any entry is a
// counterexample worth inspecting.
struct Mismatch {
    DivisorClass cls;
    AcmCase numeric_case = AcmCase::none;
    bool acm_and_initialized = false;
};

struct ValidationReport {
    std::vector<std::vector<Int>> gram;
    std::vector<std::string> basis; // optional labels, may be empty
    DivisorClass polarization;
    Int scan_degree = 0;     // degrees 1..scan_degree were scanned
    Int min_square = 0;      // in-scope square floor H^2 - 6
    std::vector<ClassificationRecord> records;
    std::vector<Mismatch> mismatches;
    double seconds = 0.0;    // wall clock; not serialized (reports stay byte-identical)
};

struct FamilyExampleReport {
    Int g = 0, d = 0, m = 0;
    std::vector<std::vector<Int>> gram;
    DivisorClass h;     // m*C
    DivisorClass cls;   // (m+1)*C - m*F
    bool very_ample = false;
    bool acm = false;
    bool initialized = false;
    bool case_d = false;
    bool ulrich = false;          // expected false: the square stays below the Ulrich value
    Int diff_square = 0;          // (D - H)^2, expected -4
    bool diff_effective = false;  // expected false
    bool pass = false;
};

struct FamilyEntry {
    Int g = 0, d = 0;
    bool root_found = false;     // bounded search for a (-2)-vector
    bool divides = false;        // d | g
    bool agree = false;          // the two must coincide
    std::vector<DivisorClass> polarizations;
    std::vector<Int> mismatch_counts; // parallel to polarizations
};

struct FamilyScanReport {
    Int g_max = 0;
    std::vector<FamilyEntry> entries;
    Int total_mismatches = 0;
    bool all_agree = true;
    double seconds = 0.0; // not serialized
};

// Full record for every effective class of degree 1..max_degree (square
// floor -2t^2 per degree t). Requires max_degree >= ceil(3/2 * H^2), the
// Ulrich degree horizon (bound_too_small otherwise). Sorted (degree, lex).
std::vector<ClassificationRecord> enumerate_acm(const AcmClassifier& clf, Int max_degree);

// Classifies every effective in-scope class (D^2 >= H^2 - 6) of degree
// 1..max(max_degree, 2*H^2) and compares the numeric case against the
// direct ACM-and-initialized verdict. parallel=true splits the classify
// loop across threads; the report is byte-identical either way.
ValidationReport cross_validate(const AcmClassifier& clf, Int max_degree, bool parallel = false);

// Checks the known ACM family: for d | (g+1), m = (g+1)/d, the class
// D = (m+1)C - mF against H = mC is ACM, initialized, of numeric case (d),
// not Ulrich, with D-H of square -4 and not effective. Throws
// precondition_violated unless g >= 3, 3 <= d <= (g+3)/2 and d | (g+1).
FamilyExampleReport verify_family_case_d(Int g, Int d);

// Sweeps the whole family 3 <= g <= g_max, 3 <= d <= (g+3)/2: the
// (-2)-vector existence criterion (bounded search vs d | g) plus a full
// cross-validation under C and, when d | (g+1), under mC. g_max < 3 gives
// an empty report.
FamilyScanReport scan_families(Int g_max);

} // namespace k3acm
