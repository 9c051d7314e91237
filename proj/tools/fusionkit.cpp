#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusionkit/fusionkit.hpp"

namespace fk = fusionkit;

namespace {

struct RunConfig {
    long double tolerance = 1e-9L;
    long double classification_tolerance = 1e-6L;
    std::size_t truncation = 800;
    std::string format = "json"; // json | csv | table
    std::string out;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(cfg.out);
        f << text;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

std::string fmt(long double x) {
    std::ostringstream os;
    os << std::setprecision(15) << static_cast<double>(x);
    return os.str();
}

fk::ModularDatum parse_family(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.empty()) throw fk::OutOfRange("empty family spec");
    if (parts[0] == "ising") return fk::build_ising();
    if (parts[0] == "minimal") {
        if (parts.size() != 3) throw fk::OutOfRange("expected minimal:p:q");
        return fk::build_minimal_model(std::stol(parts[1]), std::stol(parts[2]));
    }
    if (parts[0] == "sl2") {
        if (parts.size() != 2) throw fk::OutOfRange("expected sl2:k");
        return fk::build_affine_sl2(std::stol(parts[1]));
    }
    if (parts[0] == "lattice") {
        if (parts.size() != 2) throw fk::OutOfRange("expected lattice:<file>");
        std::ifstream f(parts[1]);
        if (!f) throw fk::OutOfRange("cannot open lattice file " + parts[1]);
        fk::IntMatrix gram;
        std::vector<fk::RationalVector> cosets;
        fk::lattice_from_json(fk::json::parse(f), gram, cosets);
        return fk::build_lattice(gram, cosets);
    }
    throw fk::OutOfRange("unknown family spec: " + spec);
}

fk::GradedSeries parse_character(const std::string& spec, std::size_t N) {
    const auto parts = split(spec, ':');
    if (parts.empty()) throw fk::OutOfRange("empty character spec");
    if (parts[0] == "l1") {
        if (parts.size() != 2) throw fk::OutOfRange("expected l1:n");
        return fk::virasoro_c1_character(std::stol(parts[1]), N);
    }
    if (parts[0] == "eta") {
        if (parts.size() != 2) throw fk::OutOfRange("expected eta:d");
        return fk::eta_quotient_series(std::stol(parts[1]), N);
    }
    if (parts[0] == "generic") return fk::generic_c1_character(N);
    if (parts[0] == "theta") {
        if (parts.size() != 3) throw fk::OutOfRange("expected theta:<file>:<coset index>");
        std::ifstream f(parts[1]);
        if (!f) throw fk::OutOfRange("cannot open lattice file " + parts[1]);
        fk::IntMatrix gram;
        std::vector<fk::RationalVector> cosets;
        fk::lattice_from_json(fk::json::parse(f), gram, cosets);
        const std::size_t i = std::stoul(parts[2]);
        if (i >= cosets.size()) throw fk::OutOfRange("coset index out of range");
        return fk::lattice_theta_series(gram, cosets[i], N);
    }
    throw fk::OutOfRange("unknown character spec: " + spec);
}

fk::FiniteGroupTable parse_group(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) {
        std::string name = spec.substr(8);
        for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return fk::builtin_group(name);
    }
    std::ifstream f(spec);
    if (!f) throw fk::OutOfRange("cannot open group table " + spec);
    return fk::load_group(f);
}

int cmd_family(const RunConfig& cfg, const std::string& spec) {
    const fk::ModularDatum md = parse_family(spec);
    const fk::ValidationReport rep = fk::validate(md, cfg.tolerance);
    if (cfg.format == "csv" || cfg.format == "table") {
        std::ostringstream os;
        os << "label,weight\n";
        for (std::size_t i = 0; i < md.size(); ++i)
            os << md.labels[i] << "," << md.weights[i].str() << "\n";
        os << "check,pass,residual\n";
        for (const auto& c : rep.checks)
            os << c.name << "," << (c.pass ? "1" : "0") << "," << fmt(c.residual) << "\n";
        emit(cfg, os.str());
    } else {
        fk::json j = fk::to_json(md);
        j["validation"] = fk::to_json(rep);
        emit(cfg, j.dump(2));
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_fusion(const RunConfig& cfg, const std::string& spec) {
    const fk::ModularDatum md = parse_family(spec);
    const fk::FusionTensor ft = fk::fusion_from_smatrix(md, cfg.classification_tolerance);
    if (cfg.format == "csv" || cfg.format == "table")
        emit(cfg, fk::csv_fusion(md, ft));
    else
        emit(cfg, fk::to_json(ft).dump(2));
    return 0;
}

int cmd_qdim(const RunConfig& cfg, const std::string& spec) {
    const fk::ModularDatum md = parse_family(spec);
    std::vector<fk::DimensionValue> dims;
    for (std::size_t i = 0; i < md.size(); ++i)
        dims.push_back(fk::qdim_from_smatrix(md, i, cfg.classification_tolerance));
    if (cfg.format == "csv" || cfg.format == "table") {
        emit(cfg, fk::csv_qdim(md, dims));
    } else {
        fk::json j = fk::json::array();
        for (std::size_t i = 0; i < dims.size(); ++i) {
            fk::json row = fk::to_json(dims[i]);
            row["label"] = md.labels[i];
            j.push_back(row);
        }
        emit(cfg, j.dump(2));
    }
    return 0;
}

int cmd_global(const RunConfig& cfg, const std::string& spec) {
    const fk::ModularDatum md = parse_family(spec);
    const fk::GlobalDimension g = fk::global_dimension(md);
    fk::json j;
    j["value"] = static_cast<double>(g.value);
    j["unitary"] = g.unitary;
    if (g.unitary) j["s00_residual"] = static_cast<double>(g.s00_residual);
    j["per_module"] = fk::json::array();
    for (const auto& dv : g.per_module) j["per_module"].push_back(fk::to_json(dv));
    if (cfg.format == "csv" || cfg.format == "table") {
        std::ostringstream os;
        os << "global,unitary\n" << fmt(g.value) << "," << (g.unitary ? 1 : 0) << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, j.dump(2));
    }
    return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& spec, long label) {
    const fk::ModularDatum md = parse_family(spec);
    const fk::FusionTensor ft = fk::fusion_from_smatrix(md, cfg.classification_tolerance);
    std::vector<std::size_t> labels;
    if (label >= 0)
        labels.push_back(static_cast<std::size_t>(label));
    else
        for (std::size_t i = 0; i < md.size(); ++i) labels.push_back(i);
    bool all_ok = true;
    fk::json j = fk::json::array();
    for (std::size_t i : labels) {
        const auto rep = fk::verify_possible_values(md, ft, i, cfg.classification_tolerance);
        all_ok = all_ok && rep.rho_matches && rep.ade_consistent;
        fk::json row;
        row["label"] = md.labels[i];
        row["qdim"] = static_cast<double>(rep.qdim);
        row["tag"] = rep.classified.tag_str();
        row["spectral_radius"] = static_cast<double>(rep.rho);
        row["match_residual"] = static_cast<double>(rep.match_residual);
        row["rho_matches"] = rep.rho_matches;
        row["ade_consistent"] = rep.ade_consistent;
        row["components"] = fk::json::array();
        for (const auto& c : rep.ade.components) row["components"].push_back(c.name());
        j.push_back(row);
    }
    if (cfg.format == "csv" || cfg.format == "table") {
        std::ostringstream os;
        os << "label,qdim,tag,spectral_radius,ok\n";
        for (const auto& row : j)
            os << row["label"].get<std::string>() << "," << fmt(row["qdim"].get<double>()) << ","
               << row["tag"].get<std::string>() << "," << fmt(row["spectral_radius"].get<double>())
               << "," << (row["rho_matches"].get<bool>() && row["ade_consistent"].get<bool>() ? 1 : 0)
               << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, j.dump(2));
    }
    return all_ok ? 0 : 1;
}

int cmd_charlimit(const RunConfig& cfg, const std::string& numer, const std::string& denom) {
    const fk::GradedSeries A = parse_character(numer, cfg.truncation);
    const fk::GradedSeries B = parse_character(denom, cfg.truncation);
    const auto cr = fk::limit_coefficient_ratio(A, B);
    const auto ps = fk::limit_partial_sum_ratio(A, B);
    const auto ab = fk::limit_abel(A, B, fk::default_abel_ys());
    fk::json j = fk::json::array({fk::to_json(cr), fk::to_json(ps), fk::to_json(ab)});
    if (cfg.format == "csv" || cfg.format == "table") {
        std::ostringstream os;
        os << "route,value,converged\n";
        for (const auto* e : {&cr, &ps, &ab})
            os << fk::to_json(*e)["route"].get<std::string>() << "," << fmt(e->value) << ","
               << (e->converged ? 1 : 0) << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, j.dump(2));
    }
    return (cr.converged && ps.converged && ab.converged) ? 0 : 1;
}

int cmd_series(const RunConfig& cfg, const std::string& spec) {
    const fk::GradedSeries s = parse_character(spec, cfg.truncation);
    if (cfg.format == "json") {
        fk::json j;
        j["leading_exponent"] = fk::to_json(s.leading_exponent);
        j["grading_step"] = fk::to_json(s.grading_step);
        j["coefficients"] = fk::json::array();
        for (const auto& c : s.coeff) j["coefficients"].push_back(c.get_str());
        emit(cfg, j.dump(2));
    } else {
        emit(cfg, fk::csv_series(s));
    }
    return 0;
}

int cmd_galois(const RunConfig& cfg, const std::string& spec) {
    const fk::FiniteGroupTable g = parse_group(spec);
    const fk::GaloisReport rep = fk::galois_report(g);
    if (cfg.format == "csv" || cfg.format == "table") {
        std::ostringstream os;
        os << "order,index,normal,galois\n";
        for (const auto& r : rep.rows)
            os << r.order << "," << r.index << "," << (r.normal ? 1 : 0) << ","
               << (r.galois ? 1 : 0) << "\n";
        emit(cfg, os.str());
    } else {
        emit(cfg, fk::to_json(rep).dump(2));
    }
    return 0;
}

int cmd_fixtures(const RunConfig& cfg) {
    const auto results = fk::run_reference_fixtures();
    bool all = true;
    std::ostringstream os;
    for (const auto& r : results) {
        all = all && r.pass;
        os << (r.pass ? "pass" : "FAIL") << "  " << r.key << "  (" << r.detail << ")\n";
    }
    emit(cfg, os.str());
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular data, fusion rules, quantum dimensions and character limits"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("FUSIONKIT_TOL")) cfg.tolerance = std::strtold(env, nullptr);
    double tol_flag = -1, ctol_flag = -1;
    app.add_option("--tol", tol_flag, "validation tolerance");
    app.add_option("--ctol", ctol_flag, "classification tolerance");
    app.add_option("--trunc", cfg.truncation, "series truncation");
    app.add_option("--format", cfg.format, "json | csv | table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--out", cfg.out, "write output to a file instead of stdout");

    std::string family_spec, numer_spec, denom_spec, group_spec, series_spec;
    long classify_label = -1;

    auto* c_family = app.add_subcommand("family", "build and validate a modular datum");
    c_family->add_option("spec", family_spec)->required();
    auto* c_fusion = app.add_subcommand("fusion", "fusion multiplicities by the Verlinde formula");
    c_fusion->add_option("spec", family_spec)->required();
    auto* c_qdim = app.add_subcommand("qdim", "per-label quantum dimensions");
    c_qdim->add_option("spec", family_spec)->required();
    auto* c_global = app.add_subcommand("global", "global dimension");
    c_global->add_option("spec", family_spec)->required();
    auto* c_classify = app.add_subcommand("classify", "spectral/ADE cross-check of dimensions");
    c_classify->add_option("spec", family_spec)->required();
    c_classify->add_option("--label", classify_label, "restrict to one label index");
    auto* c_charlimit = app.add_subcommand("charlimit", "three-route character-ratio limit");
    c_charlimit->add_option("numerator", numer_spec)->required();
    c_charlimit->add_option("denominator", denom_spec)->required();
    auto* c_series = app.add_subcommand("series", "dump a graded series");
    c_series->add_option("spec", series_spec)->required();
    auto* c_galois = app.add_subcommand("galois", "subgroup / fixed-point degree ledger");
    c_galois->add_option("group", group_spec)->required();
    auto* c_fixtures = app.add_subcommand("fixtures", "replay the reference examples");

    // let --format/--trunc/... appear after the subcommand too
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    if (tol_flag > 0) cfg.tolerance = tol_flag;
    if (ctol_flag > 0) cfg.classification_tolerance = ctol_flag;

    try {
        if (c_family->parsed()) return cmd_family(cfg, family_spec);
        if (c_fusion->parsed()) return cmd_fusion(cfg, family_spec);
        if (c_qdim->parsed()) return cmd_qdim(cfg, family_spec);
        if (c_global->parsed()) return cmd_global(cfg, family_spec);
        if (c_classify->parsed()) return cmd_classify(cfg, family_spec, classify_label);
        if (c_charlimit->parsed()) return cmd_charlimit(cfg, numer_spec, denom_spec);
        if (c_series->parsed()) return cmd_series(cfg, series_spec);
        if (c_galois->parsed()) return cmd_galois(cfg, group_spec);
        if (c_fixtures->parsed()) return cmd_fixtures(cfg);
    } catch (const fk::Error& e) {
        fk::json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        fk::json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 2;
}
