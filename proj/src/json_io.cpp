#include "k3acm/json_io.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "k3acm/polarization.hpp"

namespace k3acm {

namespace {

nlohmann::json class_to_json(const DivisorClass& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (Int x : d.coords()) arr.push_back(x);
    return arr;
}

nlohmann::json gram_to_json(const std::vector<std::vector<Int>>& gram) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : gram) {
        nlohmann::json r = nlohmann::json::array();
        for (Int x : row) r.push_back(x);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_output(const nlohmann::json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) fail(ErrorCode::invalid_input, "cannot open output file: " + out_path);
    file << j.dump(2) << '\n';
}

} // namespace

LatticeFile read_lattice_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array())
        fail(ErrorCode::invalid_input, "lattice JSON needs a \"gram\" matrix");
    std::vector<std::vector<Int>> gram;
    for (const auto& row : j["gram"]) {
        if (!row.is_array()) fail(ErrorCode::invalid_input, "Gram rows must be arrays");
        std::vector<Int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer()) fail(ErrorCode::invalid_input, "Gram entries must be integers");
            r.push_back(x.get<Int>());
        }
        gram.push_back(std::move(r));
    }
    if (j.contains("rank") && j["rank"].is_number_integer() &&
        j["rank"].get<Int>() != static_cast<Int>(gram.size()))
        fail(ErrorCode::invalid_input, "declared rank disagrees with the Gram dimension");
    LatticeFile file{PicardLattice::from_gram(gram), {}};
    if (j.contains("basis")) {
        if (!j["basis"].is_array()) fail(ErrorCode::invalid_input, "basis must be an array of strings");
        for (const auto& name : j["basis"]) {
            if (!name.is_string()) fail(ErrorCode::invalid_input, "basis labels must be strings");
            file.basis.push_back(name.get<std::string>());
        }
        if (file.basis.size() != gram.size())
            fail(ErrorCode::invalid_input, "basis label count disagrees with the rank");
    }
    return file;
}

LatticeFile read_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::invalid_input, "cannot open lattice file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::invalid_input, std::string("lattice file is not valid JSON: ") + e.what());
    }
    return read_lattice_json(j);
}

nlohmann::json lattice_to_json(const PicardLattice& lat, const std::vector<std::string>& basis) {
    nlohmann::json j;
    j["schema"] = 1;
    j["rank"] = lat.rank();
    j["gram"] = gram_to_json(lat.gram_rows());
    if (!basis.empty()) j["basis"] = basis;
    return j;
}

DivisorClass parse_class(const std::string& text, int rank) {
    std::vector<Int> coords;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        Int value = 0;
        try {
            value = std::stoll(token, &pos);
        } catch (const std::exception&) {
            fail(ErrorCode::invalid_input, "class coordinate is not an integer: " + token);
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size())
            fail(ErrorCode::invalid_input, "class coordinate is not an integer: " + token);
        coords.push_back(value);
    }
    if (static_cast<int>(coords.size()) != rank)
        fail(ErrorCode::invalid_input, "class needs exactly " + std::to_string(rank) + " coordinates");
    return DivisorClass(std::move(coords));
}

nlohmann::json to_json(const CohomologyVector& v, const DivisorClass& cls, Int chi) {
    nlohmann::json j;
    j["schema"] = 1;
    j["class"] = class_to_json(cls);
    j["h0"] = v.h0;
    j["h1"] = v.h1;
    j["h2"] = v.h2;
    j["chi"] = chi;
    return j;
}

nlohmann::json to_json(const ClassificationRecord& rec) {
    nlohmann::json j;
    j["class"] = class_to_json(rec.cls);
    j["degree"] = rec.degree;
    j["square"] = rec.square;
    j["initialized"] = rec.initialized;
    j["acm"] = rec.acm;
    j["out_of_scope"] = rec.out_of_scope;
    j["case"] = acm_case_name(rec.numeric_case);
    j["ulrich"] = rec.ulrich;
    nlohmann::json profile = nlohmann::json::array();
    for (const auto& [l, h1] : rec.h1_profile) profile.push_back(nlohmann::json::array({l, h1}));
    j["h1_profile"] = std::move(profile);
    return j;
}

nlohmann::json to_json(const ValidationReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["gram"] = gram_to_json(rep.gram);
    if (!rep.basis.empty()) j["basis"] = rep.basis;
    j["polarization"] = class_to_json(rep.polarization);
    j["scan_degree"] = rep.scan_degree;
    j["min_square"] = rep.min_square;
    nlohmann::json records = nlohmann::json::array();
    Int acm_init = 0;
    for (const auto& rec : rep.records) {
        records.push_back(to_json(rec));
        if (rec.acm && rec.initialized) ++acm_init;
    }
    j["records"] = std::move(records);
    nlohmann::json mism = nlohmann::json::array();
    for (const auto& m : rep.mismatches) {
        nlohmann::json e;
        e["class"] = class_to_json(m.cls);
        e["numeric_case"] = acm_case_name(m.numeric_case);
        e["acm_and_initialized"] = m.acm_and_initialized;
        mism.push_back(std::move(e));
    }
    j["mismatches"] = std::move(mism);
    j["counts"] = {{"records", rep.records.size()},
                   {"acm_initialized", acm_init},
                   {"mismatches", rep.mismatches.size()}};
    return j;
}

nlohmann::json to_json(const FamilyExampleReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["g"] = rep.g;
    j["d"] = rep.d;
    j["m"] = rep.m;
    j["gram"] = gram_to_json(rep.gram);
    j["polarization"] = class_to_json(rep.h);
    j["class"] = class_to_json(rep.cls);
    j["very_ample"] = rep.very_ample;
    j["acm"] = rep.acm;
    j["initialized"] = rep.initialized;
    j["case_d"] = rep.case_d;
    j["ulrich"] = rep.ulrich;
    j["diff_square"] = rep.diff_square;
    j["diff_effective"] = rep.diff_effective;
    j["pass"] = rep.pass;
    return j;
}

nlohmann::json to_json(const FamilyScanReport& rep) {
    nlohmann::json j;
    j["schema"] = 1;
    j["g_max"] = rep.g_max;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : rep.entries) {
        nlohmann::json je;
        je["g"] = e.g;
        je["d"] = e.d;
        je["root_found"] = e.root_found;
        je["divides"] = e.divides;
        je["agree"] = e.agree;
        nlohmann::json pols = nlohmann::json::array();
        for (const auto& p : e.polarizations) pols.push_back(class_to_json(p));
        je["polarizations"] = std::move(pols);
        je["mismatch_counts"] = e.mismatch_counts;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["total_mismatches"] = rep.total_mismatches;
    j["all_agree"] = rep.all_agree;
    return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact ACM/Ulrich line bundle classification on polarized K3 surfaces"};
    app.require_subcommand(1);

    Int g = 0, d = 0, m = 1, g_max = 0, max_degree = 0;
    std::string lattice_path, ample_text, class_text, out_path;
    bool parallel = false;

    auto* family = app.add_subcommand("family", "emit a rank-2 family lattice as JSON");
    family->add_option("--g", g, "sectional genus of C")->required();
    family->add_option("--d", d, "fiber degree C.F")->required();
    family->add_option("--m", m, "suggested polarization multiple m*C");
    family->add_option("--out", out_path, "output file (default stdout)");

    auto* cohom = app.add_subcommand("cohomology", "h-vector of a line bundle");
    cohom->add_option("--lattice", lattice_path, "lattice JSON file")->required();
    cohom->add_option("--ample", ample_text, "ample class \"a,b\"")->required();
    cohom->add_option("--class", class_text, "divisor class \"x,y\"")->required();

    auto* classify = app.add_subcommand("classify", "classification record of an effective class");
    classify->add_option("--lattice", lattice_path, "lattice JSON file")->required();
    classify->add_option("--polarization", ample_text, "very ample class \"a,b\"")->required();
    classify->add_option("--class", class_text, "divisor class \"x,y\"")->required();

    auto* enumerate = app.add_subcommand("enumerate-acm", "classify every effective class up to a degree");
    enumerate->add_option("--lattice", lattice_path, "lattice JSON file")->required();
    enumerate->add_option("--polarization", ample_text, "very ample class \"a,b\"")->required();
    enumerate->add_option("--max-degree", max_degree, "degree bound (>= 3/2 * H^2)")->required();
    enumerate->add_option("--out", out_path, "output file (default stdout)");

    auto* cross = app.add_subcommand("cross-validate", "numeric cases vs direct ACM scan");
    cross->add_option("--lattice", lattice_path, "lattice JSON file")->required();
    cross->add_option("--polarization", ample_text, "very ample class \"a,b\"")->required();
    cross->add_option("--max-degree", max_degree, "degree bound (raised to 2*H^2 if below)");
    cross->add_option("--out", out_path, "output file (default stdout)");
    cross->add_flag("--parallel", parallel, "classify classes across threads");

    auto* scan = app.add_subcommand("scan-families", "sweep the rank-2 family lattices");
    scan->add_option("--g-max", g_max, "largest genus to scan")->required();
    scan->add_option("--out", out_path, "output file (default stdout)");

    std::vector<std::string> argv_storage;
    argv_storage.push_back("k3acm");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_storage.size());
    for (auto& s : argv_storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (family->parsed()) {
            if (m < 1) fail(ErrorCode::invalid_input, "--m must be >= 1");
            PicardLattice lat = rank2_family(g, d);
            nlohmann::json j = lattice_to_json(lat, {"C", "F"});
            j["polarization"] = class_to_json(DivisorClass{m, 0});
            write_output(j, out_path, out);
            return 0;
        }
        if (cohom->parsed()) {
            LatticeFile file = read_lattice_file(lattice_path);
            DivisorClass ample = parse_class(ample_text, file.lattice.rank());
            DivisorClass cls = parse_class(class_text, file.lattice.rank());
            CohomologyEngine eng(file.lattice, ample);
            write_output(to_json(eng.cohomology_dims(cls), cls, file.lattice.chi(cls)), out_path, out);
            return 0;
        }
        if (classify->parsed()) {
            LatticeFile file = read_lattice_file(lattice_path);
            DivisorClass h = parse_class(ample_text, file.lattice.rank());
            DivisorClass cls = parse_class(class_text, file.lattice.rank());
            AcmClassifier clf(file.lattice, h);
            nlohmann::json j = to_json(clf.classify(cls));
            j["schema"] = 1;
            write_output(j, out_path, out);
            return 0;
        }
        if (enumerate->parsed()) {
            LatticeFile file = read_lattice_file(lattice_path);
            DivisorClass h = parse_class(ample_text, file.lattice.rank());
            AcmClassifier clf(file.lattice, h);
            auto records = enumerate_acm(clf, max_degree);
            nlohmann::json j;
            j["schema"] = 1;
            j["gram"] = gram_to_json(file.lattice.gram_rows());
            j["polarization"] = class_to_json(h);
            j["max_degree"] = max_degree;
            nlohmann::json recs = nlohmann::json::array();
            Int acm_init = 0;
            for (const auto& rec : records) {
                recs.push_back(to_json(rec));
                if (rec.acm && rec.initialized) ++acm_init;
            }
            j["records"] = std::move(recs);
            j["counts"] = {{"records", records.size()}, {"acm_initialized", acm_init}};
            write_output(j, out_path, out);
            return 0;
        }
        if (cross->parsed()) {
            LatticeFile file = read_lattice_file(lattice_path);
            DivisorClass h = parse_class(ample_text, file.lattice.rank());
            AcmClassifier clf(file.lattice, h);
            ValidationReport rep = cross_validate(clf, max_degree, parallel);
            rep.basis = file.basis;
            write_output(to_json(rep), out_path, out);
            err << "cross-validate: " << rep.records.size() << " records, " << rep.mismatches.size()
                << " mismatches, " << rep.seconds << "s\n";
            return rep.mismatches.empty() ? 0 : 1;
        }
        if (scan->parsed()) {
            FamilyScanReport rep = scan_families(g_max);
            write_output(to_json(rep), out_path, out);
            err << "scan-families: " << rep.entries.size() << " lattices, " << rep.total_mismatches
                << " mismatches, " << rep.seconds << "s\n";
            return (rep.total_mismatches == 0 && rep.all_agree) ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::internal_inconsistency ? 1 : 2;
    }
    return 2;
}

} // namespace k3acm
