#include "k3acm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <thread>

#include "k3acm/polarization.hpp"

namespace k3acm {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::vector<ClassificationRecord> enumerate_acm(const AcmClassifier& clf, Int max_degree) {
    const Int n = clf.polarization_square();
    const Int horizon = checked_mul(3, n) / 2; // largest degree an Ulrich class can have
    if (max_degree < horizon)
        fail(ErrorCode::bound_too_small, "degree bound below the Ulrich horizon 3/2 * H^2");
    std::vector<ClassificationRecord> records;
    for (Int t = 1; t <= max_degree; ++t) {
        const Int floor_sq = checked_mul(-2, checked_mul(t, t));
        for (const auto& d :
             enumerate_degree_range(clf.lattice(), clf.polarization(), t, t, floor_sq)) {
            if (!clf.engine().is_effective(d)) continue;
            records.push_back(clf.classify(d));
        }
    }
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.cls < b.cls;
    });
    return records;
}

ValidationReport cross_validate(const AcmClassifier& clf, Int max_degree, bool parallel) {
    const auto start = std::chrono::steady_clock::now();
    const Int n = clf.polarization_square();
    ValidationReport rep;
    rep.gram = clf.lattice().gram_rows();
    rep.polarization = clf.polarization();
    rep.scan_degree = std::max(max_degree, checked_mul(2, n));
    rep.min_square = checked_sub(n, 6);

    auto classes = enumerate_degree_range(clf.lattice(), clf.polarization(), 1, rep.scan_degree,
                                          rep.min_square);
    std::vector<DivisorClass> effective;
    for (auto& d : classes)
        if (clf.engine().is_effective(d)) effective.push_back(std::move(d));

    rep.records.resize(effective.size());
    auto classify_range = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) rep.records[i] = clf.classify(effective[i]);
    };
    if (parallel && effective.size() > 1) {
        // The engine serializes internal cache access, so sharing it across
        // tasks is safe; records land at fixed indices, so the result is
        // identical to the serial order.
        const size_t workers = std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(),
                                                                    effective.size()));
        const size_t chunk = (effective.size() + workers - 1) / workers;
        std::vector<std::future<void>> tasks;
        for (size_t w = 0; w < workers; ++w) {
            const size_t lo = w * chunk, hi = std::min(effective.size(), lo + chunk);
            if (lo >= hi) break;
            tasks.push_back(std::async(std::launch::async, classify_range, lo, hi));
        }
        for (auto& t : tasks) t.get();
    } else {
        classify_range(0, effective.size());
    }

    std::stable_sort(rep.records.begin(), rep.records.end(), [](const auto& a, const auto& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.cls < b.cls;
    });
    for (const auto& rec : rep.records) {
        const bool numeric = rec.numeric_case != AcmCase::none;
        const bool direct = rec.acm && rec.initialized;
        if (numeric != direct) rep.mismatches.push_back({rec.cls, rec.numeric_case, direct});
    }
    rep.seconds = seconds_since(start);
    return rep;
}

FamilyExampleReport verify_family_case_d(Int g, Int d) {
    if (g < 3 || d < 3 || 2 * d > g + 3)
        fail(ErrorCode::precondition_violated, "family example needs g >= 3 and 3 <= d <= (g+3)/2");
    if ((g + 1) % d != 0)
        fail(ErrorCode::precondition_violated, "family example needs d | (g+1)");
    FamilyExampleReport rep;
    rep.g = g;
    rep.d = d;
    rep.m = (g + 1) / d;
    PicardLattice lat = rank2_family(g, d);
    rep.gram = lat.gram_rows();
    rep.h = DivisorClass{rep.m, 0};
    rep.cls = DivisorClass{rep.m + 1, -rep.m};
    rep.very_ample = is_very_ample(lat, rep.h);
    if (rep.very_ample) {
        AcmClassifier clf(lat, rep.h);
        rep.acm = clf.is_acm(rep.cls);
        rep.initialized = clf.is_initialized(rep.cls);
        rep.case_d = clf.classification_case(rep.cls) == AcmCase::case_d;
        rep.ulrich = clf.is_ulrich(rep.cls);
        DivisorClass diff = rep.cls - rep.h;
        rep.diff_square = lat.square(diff);
        rep.diff_effective = clf.engine().is_effective(diff);
    }
    rep.pass = rep.very_ample && rep.acm && rep.initialized && rep.case_d && !rep.ulrich &&
               rep.diff_square == -4 && !rep.diff_effective;
    return rep;
}

FamilyScanReport scan_families(Int g_max) {
    const auto start = std::chrono::steady_clock::now();
    FamilyScanReport rep;
    rep.g_max = g_max;
    for (Int g = 3; g <= g_max; ++g) {
        for (Int d = 3; 2 * d <= g + 3; ++d) {
            FamilyEntry entry;
            entry.g = g;
            entry.d = d;
            PicardLattice lat = rank2_family(g, d);
            // Independent bounded search for a (-2)-vector: |a|,|b| <= g is
            // ample room, the known solutions have |a| = 1, |b| = g/d.
            for (Int a = -g; a <= g && !entry.root_found; ++a)
                for (Int b = -g; b <= g && !entry.root_found; ++b)
                    if (lat.square(DivisorClass{a, b}) == -2) entry.root_found = true;
            entry.divides = (g % d == 0);
            entry.agree = (entry.root_found == entry.divides);
            if (!entry.agree) rep.all_agree = false;

            std::vector<DivisorClass> pols;
            DivisorClass c{1, 0};
            if (is_very_ample(lat, c)) pols.push_back(c);
            if ((g + 1) % d == 0) {
                const Int m = (g + 1) / d;
                DivisorClass mc{m, 0};
                if (m > 1 && is_very_ample(lat, mc)) pols.push_back(mc);
            }
            for (const auto& h : pols) {
                AcmClassifier clf(lat, h);
                auto cv = cross_validate(clf, 0, false);
                entry.polarizations.push_back(h);
                entry.mismatch_counts.push_back(static_cast<Int>(cv.mismatches.size()));
                rep.total_mismatches += static_cast<Int>(cv.mismatches.size());
            }
            rep.entries.push_back(std::move(entry));
        }
    }
    rep.seconds = seconds_since(start);
    return rep;
}

} // namespace k3acm
