#include "stratumforge/io.hpp"
#include "stratumforge/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace stratumforge {

using nlohmann::json;

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::string expect_prefix(const std::string& line, const std::string& prefix) {
    if (line.rfind(prefix, 0) != 0)
        fail(Errc::ParseError, "expected '" + prefix + "...' got '" + line + "'");
    return line.substr(prefix.size());
}

Perm parse_images(const std::string& s, int n) {
    Perm p;
    for (auto& tok : split_ws(s)) {
        try {
            p.push_back(std::stoi(tok) - 1);
        } catch (const std::exception&) {
            fail(Errc::ParseError, "bad image list entry '" + tok + "'");
        }
    }
    if ((int)p.size() != n) fail(Errc::ParseError, "image list length differs from n");
    return p;
}

void check_marks(const GridSurface& s, const std::vector<std::pair<int, int>>& marks) {
    if (marks != s.zero_marks)
        fail(Errc::ParseError, "declared marks disagree with the computed singularities");
}

} // namespace

std::string write_origami_text(const GridSurface& s) {
    std::ostringstream os;
    os << "n=" << s.n << " sx=" << rat_str(s.sx) << " sy=" << rat_str(s.sy) << "\n";
    os << "r=" << perm_str(s.right) << "\n";
    os << "u=" << perm_str(s.up) << "\n";
    if (!s.zero_marks.empty()) {
        os << "marks=";
        for (size_t i = 0; i < s.zero_marks.size(); ++i) {
            if (i) os << ",";
            os << s.zero_marks[i].first << ":" << s.zero_marks[i].second;
        }
        os << "\n";
    }
    return os.str();
}

GridSurface read_origami_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(is, line))
        if (!line.empty()) lines.push_back(line);
    if (lines.size() < 3) fail(Errc::ParseError, "origami file needs at least three lines");
    auto head = split_ws(lines[0]);
    if (head.size() != 3) fail(Errc::ParseError, "bad header line");
    int n = std::stoi(expect_prefix(head[0], "n="));
    Rat sx = parse_rat(expect_prefix(head[1], "sx="));
    Rat sy = parse_rat(expect_prefix(head[2], "sy="));
    Perm r = parse_images(expect_prefix(lines[1], "r="), n);
    Perm u = parse_images(expect_prefix(lines[2], "u="), n);
    GridSurface s = make_grid_surface(n, r, u, sx, sy);
    if (lines.size() > 3) {
        std::string ms = expect_prefix(lines[3], "marks=");
        std::vector<std::pair<int, int>> marks;
        std::istringstream mis(ms);
        std::string item;
        while (std::getline(mis, item, ',')) {
            auto colon = item.find(':');
            if (colon == std::string::npos) fail(Errc::ParseError, "bad mark '" + item + "'");
            marks.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        }
        check_marks(s, marks);
    }
    return s;
}

std::string write_origami_json(const GridSurface& s) {
    json j;
    j["n"] = s.n;
    j["sx"] = rat_str(s.sx);
    j["sy"] = rat_str(s.sy);
    json r = json::array(), u = json::array(), marks = json::array();
    for (int i = 0; i < s.n; ++i) {
        r.push_back(s.right[i] + 1);
        u.push_back(s.up[i] + 1);
    }
    for (auto& [v, o] : s.zero_marks) marks.push_back(json::array({v, o}));
    j["r"] = r;
    j["u"] = u;
    j["marks"] = marks;
    return j.dump(2) + "\n";
}

GridSurface read_origami_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::ParseError, e.what());
    }
    try {
        int n = j.at("n").get<int>();
        Rat sx = parse_rat(j.at("sx").get<std::string>());
        Rat sy = parse_rat(j.at("sy").get<std::string>());
        Perm r, u;
        for (auto& x : j.at("r")) r.push_back(x.get<int>() - 1);
        for (auto& x : j.at("u")) u.push_back(x.get<int>() - 1);
        if ((int)r.size() != n || (int)u.size() != n)
            fail(Errc::ParseError, "image list length differs from n");
        GridSurface s = make_grid_surface(n, r, u, sx, sy);
        if (j.count("marks")) {
            std::vector<std::pair<int, int>> marks;
            for (auto& m : j.at("marks")) marks.emplace_back(m.at(0).get<int>(), m.at(1).get<int>());
            check_marks(s, marks);
        }
        return s;
    } catch (const json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
}

std::string write_diagram_text(const SlitTorusDiagram& dg) {
    std::ostringstream os;
    os << "d=" << dg.d << " levels=" << dg.levels << "\n";
    for (int lev = 0; lev < dg.levels; ++lev) {
        bool any = false;
        for (auto& h : dg.hslits) any = any || h.level == lev;
        if (!any) continue;
        os << "line " << lev << ":";
        for (auto& h : dg.hslits)
            if (h.level == lev) os << " slit " << rat_str(h.x0) << "-" << rat_str(h.x1);
        os << "\n";
    }
    for (auto& v : dg.vslits)
        os << "vslit " << rat_str(v.x) << " " << v.level << "-" << (v.level + 1) % dg.levels
           << "\n";
    for (size_t i = 0; i < dg.hslits.size(); ++i)
        os << "glue h" << i + 1 << ".b h" << dg.hpair[i] + 1 << ".t\n";
    for (size_t i = 0; i < dg.vslits.size(); ++i)
        os << "glue v" << i + 1 << ".l v" << dg.vpair[i] + 1 << ".r\n";
    return os.str();
}

SlitTorusDiagram read_diagram_text(const std::string& text) {
    SlitTorusDiagram dg;
    std::istringstream is(text);
    std::string line;
    bool have_head = false;
    std::vector<std::array<std::string, 2>> glues;
    // file slit order must match the struct order for the glue references
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto toks = split_ws(line);
        if (toks[0].rfind("d=", 0) == 0) {
            dg.d = std::stoi(expect_prefix(toks[0], "d="));
            if (toks.size() > 1) dg.levels = std::stoi(expect_prefix(toks[1], "levels="));
            have_head = true;
        } else if (toks[0] == "line") {
            if (toks.size() < 2 || toks.size() % 2 != 0)
                fail(Errc::ParseError, "bad line entry '" + line + "'");
            int lev = std::stoi(toks[1].substr(0, toks[1].find(':')));
            for (size_t t = 2; t + 1 < toks.size(); t += 2) {
                if (toks[t] != "slit") fail(Errc::ParseError, "expected 'slit'");
                auto dash = toks[t + 1].find('-', 1);
                if (dash == std::string::npos) fail(Errc::ParseError, "bad slit range");
                dg.hslits.push_back({lev, parse_rat(toks[t + 1].substr(0, dash)),
                                     parse_rat(toks[t + 1].substr(dash + 1))});
            }
        } else if (toks[0] == "vslit") {
            if (toks.size() != 3) fail(Errc::ParseError, "bad vslit");
            auto dash = toks[2].find('-', 1);
            int lev = std::stoi(toks[2].substr(0, dash));
            dg.vslits.push_back({lev, parse_rat(toks[1])});
        } else if (toks[0] == "glue") {
            if (toks.size() != 3) fail(Errc::ParseError, "bad glue");
            glues.push_back({toks[1], toks[2]});
        } else {
            fail(Errc::ParseError, "unrecognized line '" + line + "'");
        }
    }
    if (!have_head) fail(Errc::ParseError, "missing d= header");
    dg.hpair.assign(dg.hslits.size(), -1);
    dg.vpair.assign(dg.vslits.size(), -1);
    auto side = [&](const std::string& s, char kind, const char* suffix) {
        if (s.empty() || s[0] != kind || s.size() < 4)
            fail(Errc::ParseError, "bad side id '" + s + "'");
        auto dot = s.find('.');
        if (dot == std::string::npos || s.substr(dot + 1) != suffix)
            fail(Errc::ParseError, "bad side id '" + s + "'");
        return std::stoi(s.substr(1, dot - 1)) - 1;
    };
    for (auto& [x, y] : glues) {
        if (x[0] == 'h') {
            int i = side(x, 'h', "b"), j = side(y, 'h', "t");
            if (i < 0 || i >= (int)dg.hslits.size() || j < 0 || j >= (int)dg.hslits.size())
                fail(Errc::UnmatchedSides, "glue references unknown slit");
            dg.hpair[i] = j;
        } else {
            int i = side(x, 'v', "l"), j = side(y, 'v', "r");
            if (i < 0 || i >= (int)dg.vslits.size() || j < 0 || j >= (int)dg.vslits.size())
                fail(Errc::UnmatchedSides, "glue references unknown slit");
            dg.vpair[i] = j;
        }
    }
    for (int x : dg.hpair)
        if (x < 0) fail(Errc::UnmatchedSides, "a bottom side is unglued");
    for (int x : dg.vpair)
        if (x < 0) fail(Errc::UnmatchedSides, "a left side is unglued");
    return dg;
}

namespace {

json scalar_coeffs_json(const Scalar& s, int m) {
    // degree-1 scalars as a coefficient vector over [1, x_1..x_m]
    std::vector<Rat> coeffs(m + 1, Rat(0));
    for (auto& [mon, r] : s.c) {
        if (mon.first != 0) fail(Errc::Internal, "cannot serialize degree-2 scalars as vectors");
        coeffs[mon.second] = r;
    }
    json out = json::array();
    for (auto& r : coeffs) out.push_back(rat_str(r));
    return out;
}

Scalar scalar_from_coeffs(const json& arr, int m) {
    if (!arr.is_array() || (int)arr.size() != m + 1)
        fail(Errc::ParseError, "scalar coefficient vector has the wrong length");
    Scalar s;
    for (int i = 0; i <= m; ++i) {
        Rat r = parse_rat(arr[i].get<std::string>());
        if (r != 0) s.c[{0, i}] = r;
    }
    return s;
}

json vec_json(const Vec2& v, int m) {
    return json::array({scalar_coeffs_json(v.x, m), scalar_coeffs_json(v.y, m)});
}

Vec2 vec_from_json(const json& j, int m) {
    if (!j.is_array() || j.size() != 2) fail(Errc::ParseError, "value must be [x, y]");
    return {scalar_from_coeffs(j[0], m), scalar_from_coeffs(j[1], m)};
}

json scalar_json_full(const Scalar& s, const BasisContext& ctx) {
    json out = json::object();
    auto name = [&](int i) { return i == 0 ? std::string("1") : ctx.reals[i - 1].name; };
    for (auto& [mon, r] : s.c) {
        std::string key = name(mon.second);
        if (mon.first != 0) key = name(mon.first) + "*" + key;
        out[key] = rat_str(r);
    }
    return out;
}

} // namespace

std::string write_cocycle_json(const ExactCocycle& chi) {
    int m = (int)chi.ctx.reals.size();
    json j;
    j["genus"] = chi.g;
    j["orders"] = chi.orders;
    json reals = json::array();
    for (auto& r : chi.ctx.reals) {
        json e;
        e["name"] = r.name;
        e["approx"] = r.approx;
        if (r.square) e["square"] = rat_str(*r.square);
        reals.push_back(e);
    }
    j["basis_reals"] = reals;
    json a = json::array(), b = json::array(), rel = json::array();
    for (auto& v : chi.a) a.push_back(vec_json(v, m));
    for (auto& v : chi.b) b.push_back(vec_json(v, m));
    for (auto& v : chi.rel) rel.push_back(vec_json(v, m));
    j["a"] = a;
    j["b"] = b;
    j["rel"] = rel;
    return j.dump(2) + "\n";
}

ExactCocycle read_cocycle_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::ParseError, e.what());
    }
    try {
        ExactCocycle chi;
        chi.g = j.at("genus").get<int>();
        for (auto& o : j.at("orders")) chi.orders.push_back(o.get<int>());
        if (j.count("basis_reals"))
            for (auto& e : j.at("basis_reals")) {
                BasisReal r;
                r.name = e.at("name").get<std::string>();
                r.approx = e.at("approx").get<std::string>();
                if (e.count("square")) r.square = parse_rat(e.at("square").get<std::string>());
                chi.ctx.reals.push_back(std::move(r));
            }
        int m = (int)chi.ctx.reals.size();
        for (auto& v : j.at("a")) chi.a.push_back(vec_from_json(v, m));
        for (auto& v : j.at("b")) chi.b.push_back(vec_from_json(v, m));
        if (j.count("rel"))
            for (auto& v : j.at("rel")) chi.rel.push_back(vec_from_json(v, m));
        chi.validate();
        return chi;
    } catch (const json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
}

std::string verdict_json(const RealizabilityVerdict& v, const BasisContext& ctx) {
    json j;
    j["realizable"] = v.realizable;
    j["failing_condition"] = v.failing.empty() ? json() : json(v.failing);
    j["volume"] = scalar_json_full(v.vol, ctx);
    j["lattice"] = v.lattice;
    if (v.lattice) {
        j["area"] = scalar_json_full(v.area, ctx);
        j["d"] = v.ratio.str();
        json w = json::array();
        for (auto& cls : v.witness) {
            json c = json::array();
            for (int x : cls) c.push_back(x + 1);
            w.push_back(c);
        }
        j["witness_partition"] = w;
        j["minmax"] = v.minmax.str();
    }
    json psi = json::array();
    for (auto& cls : v.psi) psi.push_back((int)cls.size());
    j["psi_class_sizes"] = psi;
    j["applies_to_all_components"] = true;
    return j.dump(2) + "\n";
}

std::string census_csv(const std::vector<CensusRow>& rows, int N) {
    std::ostringstream os;
    os << "stratum,label,N,count\n";
    for (auto& r : rows)
        os << r.stratum.str() << "," << label_str(r.label) << "," << N << "," << r.count << "\n";
    return os.str();
}

std::string certificate_json(const Certificate& c) {
    json j;
    j["stratum"] = c.stratum.str();
    j["label"] = label_str(c.label);
    j["psi_shape"] = c.psi_shape;
    j["d"] = c.d;
    j["exists"] = c.exists;
    j["tuples_checked"] = c.tuples_checked;
    j["notes"] = c.notes;
    if (c.witness) {
        j["witness_monodromy"] = json::parse(write_monodromy_json(*c.witness));
        GridSurface s = realize_cover(*c.witness);
        j["witness_surface"] = json::parse(write_origami_json(s));
    }
    return j.dump(2) + "\n";
}

std::string write_monodromy_json(const MonodromyDatum& m) {
    json j;
    j["d"] = m.d;
    json r = json::array(), u = json::array(), sig = json::array();
    for (int i = 0; i < m.d; ++i) {
        r.push_back(m.r[i] + 1);
        u.push_back(m.u[i] + 1);
    }
    for (auto& s : m.sigma) {
        json one = json::array();
        for (int i = 0; i < m.d; ++i) one.push_back(s[i] + 1);
        sig.push_back(one);
    }
    j["r"] = r;
    j["u"] = u;
    j["sigma"] = sig;
    return j.dump(2) + "\n";
}

MonodromyDatum read_monodromy_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::ParseError, e.what());
    }
    try {
        MonodromyDatum m;
        m.d = j.at("d").get<int>();
        for (auto& x : j.at("r")) m.r.push_back(x.get<int>() - 1);
        for (auto& x : j.at("u")) m.u.push_back(x.get<int>() - 1);
        for (auto& s : j.at("sigma")) {
            Perm p;
            for (auto& x : s) p.push_back(x.get<int>() - 1);
            m.sigma.push_back(std::move(p));
        }
        m.validate();
        return m;
    } catch (const json::exception& e) {
        fail(Errc::ParseError, e.what());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void spew(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(Errc::ParseError, "cannot write '" + path + "'");
    f << content;
}

} // namespace stratumforge
