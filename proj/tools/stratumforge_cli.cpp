#include "stratumforge/builders.hpp"
#include "stratumforge/checker.hpp"
#include "stratumforge/errors.hpp"
#include "stratumforge/invariants.hpp"
#include "stratumforge/io.hpp"
#include "stratumforge/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using namespace stratumforge;
using nlohmann::json;

namespace {

// 0 ok, 1 io/parse, 2 unbuildable, 3 not realizable, 4 bound exceeded
int exit_code_for(const Error& e) {
    switch (e.code) {
        case Errc::WidthTooSmall:
        case Errc::NoSuchComponent:
            return 2;
        case Errc::BoundExceeded:
            return 4;
        default:
            return 1;
    }
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) std::cout << content;
    else spew(out_path, content);
}

GridSurface load_surface(const std::string& path) {
    std::string text = slurp(path);
    auto nonspace = text.find_first_not_of(" \t\r\n");
    if (nonspace != std::string::npos && text[nonspace] == '{') return read_origami_json(text);
    if (nonspace != std::string::npos && text.compare(nonspace, 2, "d=") == 0)
        return compile_diagram(read_diagram_text(text)).surface;
    return read_origami_text(text);
}

int enumeration_bound(int dflt) {
    if (const char* env = std::getenv("STRATUMFORGE_MAX_CELLS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return dflt;
}

json report_json(const GridSurface& s) {
    json j;
    j["n"] = s.n;
    j["sx"] = rat_str(s.sx);
    j["sy"] = rat_str(s.sy);
    j["volume"] = rat_str(s.volume());
    Stratum st = stratum_of(s);
    j["stratum"] = st.str();
    j["genus"] = s.genus();
    PeriodLattice lat = absolute_period_lattice(s);
    j["lattice"] = {{"unit", lat.is_unit},
                    {"covolume", rat_str(lat.covolume)},
                    {"basis",
                     {{rat_str(lat.basis[0][0]), rat_str(lat.basis[0][1])},
                      {rat_str(lat.basis[1][0]), rat_str(lat.basis[1][1])}}}};
    CylinderDiagram cyl = cylinder_decomposition(s);
    j["cylinders"] = json::array();
    for (auto& c : cyl.cylinders)
        j["cylinders"].push_back({{"circumference", rat_str(c.circumference)},
                                  {"height", rat_str(c.height)},
                                  {"saddle_connections", c.top.size()}});
    if (lat.is_unit && !st.orders.empty()) {
        BranchProfile bp = branch_profile(s);
        json psi = json::array();
        for (auto& cls : bp.zero_classes) psi.push_back((int)cls.size());
        j["psi_class_sizes"] = psi;
        j["branch_points"] = bp.points.size();
    }
    if (s.genus() >= 2) {
        ComponentLabel cl = component_of(s);
        j["component"] = label_str(cl.tag);
        auto invs = involution_search(s);
        json iv = json::array();
        for (auto& f : invs)
            iv.push_back({{"fixed_points", f.fixed_points()}, {"quotient_genus", f.quotient_genus}});
        j["involutions"] = iv;
        if (st.all_even()) j["spin_parity"] = arf_invariant(s);
    }
    return j;
}

std::string report_text(const json& j) {
    std::ostringstream os;
    os << "surface: n=" << j["n"].get<int>() << " sx=" << j["sx"].get<std::string>()
       << " sy=" << j["sy"].get<std::string>() << " volume=" << j["volume"].get<std::string>()
       << "\n";
    os << "stratum: " << j["stratum"].get<std::string>() << "  genus " << j["genus"].get<int>()
       << "\n";
    os << "lattice: " << (j["lattice"]["unit"].get<bool>() ? "Z+iZ" : "proper sublattice")
       << " covolume " << j["lattice"]["covolume"].get<std::string>() << "\n";
    os << "cylinders: " << j["cylinders"].size() << "\n";
    if (j.count("psi_class_sizes")) {
        os << "psi: {";
        for (size_t i = 0; i < j["psi_class_sizes"].size(); ++i)
            os << (i ? "," : "") << j["psi_class_sizes"][i].get<int>();
        os << "}\n";
    }
    if (j.count("component")) os << "component: " << j["component"].get<std::string>() << "\n";
    if (j.count("involutions")) {
        for (auto& f : j["involutions"])
            os << "involution: " << f["fixed_points"].get<int>() << " fixed points, quotient genus "
               << f["quotient_genus"].get<int>() << "\n";
    }
    if (j.count("spin_parity")) os << "spin parity: " << j["spin_parity"].get<int>() << "\n";
    return os.str();
}

// cross-checks behind `verify`: recompute core invariants independently
void verify_consistency(const GridSurface& s) {
    Stratum st = stratum_of(s);
    int total = 0;
    for (int o : st.orders) total += o;
    if (total != 2 * s.genus() - 2) fail(Errc::VerificationFailed, "orders vs genus");
    CylinderDiagram cyl = cylinder_decomposition(s);
    Rat area = 0;
    for (auto& c : cyl.cylinders) area += c.circumference * c.height;
    if (area != s.volume()) fail(Errc::VerificationFailed, "cylinder areas vs volume");
    SymplecticBasis sb = homology_symplectic_basis(s); // asserts the Gram shape
    for (auto& f : involution_search(s)) {
        if ((2 + 2 * s.genus() - f.fixed_points()) % 4 != 0)
            fail(Errc::VerificationFailed, "involution census");
    }
    GridSurface c1 = canonical_form(s);
    GridSurface c2 = canonical_form(c1);
    if (c1.right != c2.right || c1.up != c2.up)
        fail(Errc::VerificationFailed, "canonical form not idempotent");
    (void)sb;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratumforge: grid translation surfaces in prescribed strata components"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string out_path, format = "text";
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for census");

    auto* cmd_build = app.add_subcommand("build", "construct a surface in a component");
    std::string b_stratum, b_label, b_partition;
    int b_d = 0;
    cmd_build->add_option("stratum", b_stratum, "stratum, e.g. H(3,3)")->required();
    cmd_build->add_option("label", b_label, "hyp|even|odd|nonhyp|conn")->required();
    cmd_build->add_option("partition", b_partition, "branch classes, e.g. 1,2|3")->required();
    cmd_build->add_option("d", b_d, "volume (cover degree)")->required();

    auto* cmd_verify = app.add_subcommand("verify", "invariant report for a surface file");
    std::string v_file;
    cmd_verify->add_option("file", v_file)->required();

    auto* cmd_check = app.add_subcommand("check", "decide realizability of a cocycle");
    std::string c_file;
    cmd_check->add_option("file", c_file)->required();

    auto* cmd_census = app.add_subcommand("census", "component census of small origamis");
    int n_census = 0;
    cmd_census->add_option("N", n_census, "cell count")->required();

    auto* cmd_orbit = app.add_subcommand("orbit", "branch-point move orbit of monodromy data");
    std::string o_file;
    cmd_orbit->add_option("file", o_file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_build) {
            Stratum st = parse_stratum(b_stratum);
            auto label = parse_label(b_label);
            if (!label) fail(Errc::ParseError, "unknown label '" + b_label + "'");
            Partition p = parse_partition(b_partition, st.zero_count());
            GridSurface s = build_component(st, *label, p, b_d);
            std::string payload =
                format == "json" ? write_origami_json(s) : write_origami_text(s);
            if (!out_path.empty()) spew(out_path, payload);
            BranchProfile bp = branch_profile(s);
            std::ostringstream rep;
            rep << st.str() << " " << label_str(*label) << " psi={";
            for (size_t i = 0; i < bp.zero_classes.size(); ++i)
                rep << (i ? "," : "") << bp.zero_classes[i].size();
            rep << "} d=" << rat_str(s.volume()) << " lattice=Z+iZ verified\n";
            std::cout << rep.str();
            if (out_path.empty()) std::cout << payload;
            return 0;
        }
        if (*cmd_verify) {
            GridSurface s = load_surface(v_file);
            verify_consistency(s);
            json j = report_json(s);
            emit(out_path, format == "json" ? j.dump(2) + "\n" : report_text(j));
            return 0;
        }
        if (*cmd_check) {
            ExactCocycle chi = read_cocycle_json(slurp(c_file));
            RealizabilityVerdict v = theorem1_check(chi);
            emit(out_path, verdict_json(v, chi.ctx));
            return v.realizable ? 0 : 3;
        }
        if (*cmd_census) {
            int bound = enumeration_bound(8);
            std::ostringstream os;
            os << "stratum,label,N,count\n";
            for (int N = 1; N <= n_census; ++N) {
                auto rows = census(N, jobs, bound);
                for (auto& r : rows)
                    os << r.stratum.str() << "," << label_str(r.label) << "," << N << ","
                       << r.count << "\n";
            }
            emit(out_path, os.str());
            return 0;
        }
        if (*cmd_orbit) {
            MonodromyDatum m = read_monodromy_json(slurp(o_file));
            auto orbit = hurwitz_orbit(m);
            json j;
            j["orbit_size"] = orbit.size();
            std::set<std::string> strata, labels;
            for (auto& dat : orbit) {
                GridSurface s = realize_cover(dat);
                strata.insert(stratum_of(s).str());
                if (s.genus() >= 2) labels.insert(label_str(component_of(s).tag));
            }
            j["strata"] = strata;
            j["components"] = labels;
            emit(out_path, j.dump(2) + "\n");
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
