// brauer: command line front end. Exit codes: 0 success, 1 an invariant check
// failed, 2 malformed input.
#include "acceptance.hpp"

#include "brauer/line_geometry.hpp"
#include "brauer/local_invariant.hpp"
#include "brauer/residue_symbols.hpp"
#include "brauer/surface_lab.hpp"
#include "brauer/weyl_d5.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace brauer;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kViolation = 1, kMalformed = 2;

// malformed input, reported with exit code 2
struct Malformed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Malformed("cannot read " + path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Malformed(path + ": " + e.what());
    }
}

Subgroup read_group(const std::string& path) {
    try {
        return Subgroup::generated_by(parse_generators(read_file(path)));
    } catch (const std::invalid_argument& e) {
        throw Malformed(path + ": " + e.what());
    }
}

std::string orbits_str(const std::vector<SOrbit>& os) {
    std::ostringstream s;
    for (std::size_t i = 0; i < os.size(); ++i) {
        s << (i ? " " : "") << "{";
        for (std::size_t j = 0; j < os[i].indices.size(); ++j) s << (j ? "," : "") << os[i].indices[j];
        s << "}" << (os[i].split ? "s" : "n");
    }
    return s.str();
}

bool kills_by_4(const FinAbGroup& g) { return g.free_rank == 0 && (g.torsion.empty() || 4 % g.torsion.back() == 0); }

int two_rank(const FinAbGroup& g) {
    int r = static_cast<int>(g.free_rank);
    for (const Int& t : g.torsion) r += (t % 2 == 0);
    return r;
}

// ------------------------------------------------------------ commands

int cmd_classify(const std::string& csv_path) {
    std::unique_ptr<std::ofstream> csv;
    if (!csv_path.empty()) {
        csv = std::make_unique<std::ofstream>(csv_path);
        if (!*csv) throw Malformed("cannot write " + csv_path);
        *csv << "class,order,class_size,maximal,h1,two_rank,four_torsion,generators\n";
    }
    int bad = 0;
    std::cout << std::setw(5) << "class" << std::setw(7) << "order" << std::setw(6) << "size" << std::setw(5) << "max"
              << "  " << std::left << std::setw(14) << "H^1" << std::setw(4) << "e" << "4-torsion" << std::right << "\n";
    for (const auto& c : subgroup_conjugacy_classes()) {
        FinAbGroup h = h1_full(c.rep).group;
        int e = two_rank(h1_two_torsion(c.rep).group);
        std::string t = to_string(classify_4torsion(c.rep));
        if (!kills_by_4(h) || e != two_rank(h)) ++bad;
        std::cout << std::setw(5) << c.index << std::setw(7) << c.rep.order() << std::setw(6) << c.class_size
                  << std::setw(5) << (c.maximal ? "*" : "") << "  " << std::left << std::setw(14) << h.str()
                  << std::setw(4) << e << t << std::right << "\n";
        if (csv)
            *csv << c.index << ',' << c.rep.order() << ',' << c.class_size << ',' << c.maximal << ',' << h.str() << ','
                 << e << ',' << t << ",\"" << c.rep.str() << "\"\n";
    }
    std::cout << subgroup_conjugacy_classes().size() << " classes\n";
    if (bad) std::cerr << bad << " classes fail 4 H^1 = 0 or the 2-rank count\n";
    return bad ? kViolation : kOk;
}

int cmd_cohomology(const std::string& path) {
    Subgroup g = read_group(path);
    PicModule pm = pic_module(g);
    PicH1 h = h1_full(g);
    TwoTorsion t = h1_two_torsion(g);
    FinAbGroup crossed = h1_generators(pm.module).group();
    std::cout << "generators   " << g.str() << "\n"
              << "order        " << g.order() << "\n"
              << "class        " << class_index(g) << "\n"
              << "S-orbits     " << orbits_str(s_orbits(g)) << "\n"
              << "H^1(G, P)    " << h.group.str() << "\n"
              << "2-torsion    " << t.group.str() << " from orbits\n"
              << "crossed hom  " << crossed.str() << "\n";
    bool ok = crossed == h.group && kills_by_4(h.group) && two_rank(t.group) == two_rank(h.group);
    if (g.order() <= 32) {
        FinAbGroup cochain = h1_cochain(pm.module).group();
        std::cout << "cochains     " << cochain.str() << "\n";
        ok = ok && cochain == h.group;
    }
    std::cout << "4-torsion    " << to_string(classify_4torsion(g)) << "\n";
    if (!ok) std::cerr << "the H^1 computations disagree\n";
    return ok ? kOk : kViolation;
}

int cmd_lines(const std::string& path) {
    Subgroup g = read_group(path);
    LineAction act = line_action_from_signed(g);
    LinesPic lp = pic_from_lines(act);
    const int n = lp.module.group().order();
    std::vector<bool> seen_l(kLines), seen_q(kQuads);
    int line_orbits = 0, quad_orbits = 0;
    for (int l = 0; l < kLines; ++l)
        if (!seen_l[l]) {
            ++line_orbits;
            for (int s = 0; s < n; ++s) seen_l[act.perm[s][l]] = true;
        }
    for (int q = 0; q < kQuads; ++q)
        if (!seen_q[q]) {
            ++quad_orbits;
            for (int s = 0; s < n; ++s) seen_q[lp.quad_perm[s][q]] = true;
        }
    int with_conic = 0;
    for (const auto& q : quadrilaterals()) with_conic += q.contains_conic();
    FinAbGroup from_lines = h1_generators(lp.module).group();
    FinAbGroup from_p = h1_full(g).group;
    std::cout << "quadrilaterals  " << quadrilaterals().size() << " (" << with_conic << " with the conic)\n"
              << "orbits          " << line_orbits << " on lines, " << quad_orbits << " on quadrilaterals\n"
              << "Pic U           " << lp.coker.group.str() << "\n"
              << "H^1 from lines  " << from_lines.str() << "\n"
              << "H^1 from P      " << from_p.str() << "\n";
    bool ok = lp.coker.group == FinAbGroup::free(5) && from_lines == from_p;
    if (g.order() <= 32) {
        FinAbGroup c = h1_cochain(lp.module).group();
        std::cout << "cochains        " << c.str() << "\n";
        ok = ok && c == from_p;
    }
    if (!ok) std::cerr << "the two models of Pic U disagree\n";
    return ok ? kOk : kViolation;
}

int cmd_lift(const std::string& path, const std::string& cls) {
    Subgroup g = read_group(path);
    LineAction act = line_action_from_signed(g);
    LinesPic lp = pic_from_lines(act);
    H1Gen h = h1_generators(lp.module);
    Vec x;
    {
        std::stringstream s(cls);
        std::string tok;
        while (std::getline(s, tok, ',')) {
            try {
                std::size_t used = 0;
                long v = std::stol(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                x.push_back(v);
            } catch (const std::exception&) {
                throw Malformed("--class takes comma separated integers, got \"" + cls + "\"");
            }
        }
    }
    if (x.size() != h.group().ngens())
        throw Malformed("H^1 = " + h.group().str() + " needs " + std::to_string(h.group().ngens()) + " coordinates");
    x = h.group().reduce(x);
    Cochain1 phi = h.cocycle_of(x);
    DivisorLift d = lift_cocycle_to_divisors(lp, act, phi);
    const int n = lp.module.group().order();
    const auto& grp = lp.module.group();
    std::cout << "H^1 = " << h.group().str() << ", class (";
    for (std::size_t i = 0; i < x.size(); ++i) std::cout << (i ? "," : "") << x[i];
    std::cout << ")\n";
    for (int s : grp.gens()) {
        std::cout << "  phi~(" << WeylD5::get().element(pic_module(g).embed[s]).str() << ") =";
        for (const Int& v : d.phi_div[s]) std::cout << ' ' << v;
        std::cout << "\n";
    }
    long q_bad = 0, nonzero = 0, delta_bad = 0;
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (quad_matrix() * d.psi[s * n + t] != d.dphi[s * n + t]) ++q_bad;
            if (d.psi[s * n + t] != Vec(kQuads)) ++nonzero;
        }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            for (int u = 0; u < n; ++u)
                if (divisor_of_coboundary(lp, act, d.psi, s, t, u) != Vec(kLines)) ++delta_bad;
    std::cout << "psi nonzero on " << nonzero << " of " << n * n << " pairs\n"
              << "q(psi) = d(phi~)  " << (q_bad ? "FAILED" : "ok") << "\n"
              << "q(d psi) = 0      " << (delta_bad ? "FAILED" : "ok") << " (" << long(n) * n * n << " triples)\n";
    return q_bad || delta_bad ? kViolation : kOk;
}

// The local data document is one of
//   {"quadratic": {"a": "3", "p": 5}}
//   {"tame": {"qk": 3, "f": 4, "e": 2, "base_log": 0}}
//   {"explicit": {"table": [[...]], "generators": [...], "frobenius": 1, "qk": 3,
//                 "f": 2, "e": 1, "ex": [...], "dlog_pi": [...], "dlog_base": 0}}
// and the cocycle document one of
//   {"standard": true}, {"cyclic_algebra": {"sigma": 1, "b": "3/2"}},
//   {"values": [[valuation, log], ...]}
// with an optional "torsion" bound for the tame engine.
mpq_class parse_rational(const json& j) {
    mpq_class q;
    try {
        if (j.is_number_integer()) return mpq_class(j.get<long>());
        if (!j.is_string() || q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) throw std::exception();
    } catch (const std::exception&) {
        throw Malformed("expected a rational number, got " + j.dump());
    }
    q.canonicalize();
    return q;
}

struct LocalInput {
    bool wild = false;
    LocalExtensionData tame;
    WildExtensionData wild_data;
};

LocalInput parse_local_data(const json& j, bool wild) {
    LocalInput in;
    in.wild = wild;
    if (j.contains("quadratic")) {
        const json& q = j["quadratic"];
        mpq_class a = parse_rational(q.at("a"));
        long p = q.value("p", 2L);
        if (a == 0 || !is_prime(p)) throw Malformed("quadratic data needs a nonzero a and a prime p");
        if (wild)
            in.wild_data = quadratic_wild(a, p);
        else if (p == 2)
            throw Malformed("p = 2 is wild; pass --wild");
        else
            in.tame = quadratic_tame(a, p);
        return in;
    }
    if (wild) throw Malformed("the wild engine takes quadratic data only");
    if (j.contains("tame")) {
        const json& t = j["tame"];
        in.tame = tame_fixture(t.at("qk").get<long>(), t.at("f").get<int>(), t.at("e").get<int>(),
                               t.value("base_log", 0L));
        return in;
    }
    if (j.contains("explicit")) {
        const json& t = j["explicit"];
        LocalExtensionData& d = in.tame;
        d.group = FiniteGroup(t.at("table").get<std::vector<std::vector<int>>>(), t.at("generators").get<std::vector<int>>());
        d.frobenius = t.at("frobenius").get<int>();
        d.qk = t.at("qk").get<long>();
        d.f = t.at("f").get<int>();
        d.e = t.at("e").get<int>();
        d.q = 1;
        for (int i = 0; i < d.f; ++i) d.q *= d.qk;
        d.ex = t.at("ex").get<std::vector<int>>();
        d.dlog_pi = t.at("dlog_pi").get<std::vector<long>>();
        d.dlog_base = t.value("dlog_base", 0L);
        validate(d);
        return in;
    }
    throw Malformed("local data needs one of \"quadratic\", \"tame\", \"explicit\"");
}

int cmd_localinv(const std::string& data_path, const std::string& cocycle_path, bool wild, int n) {
    json dj = read_json(data_path), cj = read_json(cocycle_path);
    LocalInput in;
    try {
        in = parse_local_data(dj, wild);
    } catch (const json::exception& e) {
        throw Malformed(data_path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw Malformed(data_path + ": " + e.what());
    }
    const FiniteGroup& grp = wild ? in.wild_data.group : in.tame.group;
    try {
        if (wild) {
            if (!cj.contains("cyclic_algebra")) throw Malformed("the wild engine takes cyclic_algebra cocycles");
            const json& ca = cj["cyclic_algebra"];
            mpq_class b = parse_rational(ca.at("b"));
            if (b == 0) throw Malformed("b must be nonzero");
            int sigma = ca.value("sigma", grp.order() > 1 ? 1 : 0);
            WildCocycle c = cocycle_from_cyclic_algebra(grp, sigma, wild_value(in.wild_data, b));
            WildResult r = invariant_wild_auto(in.wild_data, c, n, std::max(n, 6));
            if (!r.invariant) {
                std::cerr << "precision guard still active at n = " << std::max(n, 6) << "\n";
                return kViolation;
            }
            std::cout << "invariant " << frac_str(*r.invariant) << "\nn " << r.n << "\n";
            return kOk;
        }
        LocalCocycle c;
        if (cj.contains("standard")) {
            c = standard_cocycle(in.tame);
        } else if (cj.contains("cyclic_algebra")) {
            const json& ca = cj["cyclic_algebra"];
            mpq_class b = parse_rational(ca.at("b"));
            if (b == 0) throw Malformed("b must be nonzero");
            int sigma = ca.value("sigma", grp.order() > 1 ? 1 : 0);
            c = cocycle_from_cyclic_algebra(grp, sigma, tame_value(in.tame, b));
        } else if (cj.contains("values")) {
            for (const auto& v : cj["values"]) {
                if (!v.is_array() || v.size() != 2) throw Malformed("cocycle values are pairs [valuation, log]");
                c.push_back(Vec{Int(v[0].get<long>()), Int(v[1].get<long>())});
            }
            if (c.size() != static_cast<std::size_t>(grp.order()) * grp.order())
                throw Malformed("expected " + std::to_string(grp.order() * grp.order()) + " cocycle values");
        } else {
            throw Malformed("cocycle needs one of \"standard\", \"cyclic_algebra\", \"values\"");
        }
        int torsion = cj.value("torsion", 4);
        std::cout << "invariant " << frac_str(invariant_tame(in.tame, c, torsion)) << "\n";
        return kOk;
    } catch (const json::exception& e) {
        throw Malformed(cocycle_path + ": " + e.what());
    } catch (const Malformed&) {
        throw;
    } catch (const std::exception& e) {
        // not a cocycle, not torsion, no multiplier: the input is well formed
        // but fails a check of the engine
        std::cerr << e.what() << "\n";
        return kViolation;
    }
}

Place parse_place(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "real") return Place::real();
    try {
        std::size_t used = 0;
        long p = std::stol(s, &used);
        if (used == s.size() && is_prime(p)) return Place::prime(p);
    } catch (const std::exception&) {
    }
    throw Malformed("--place takes a prime or inf, got \"" + s + "\"");
}

std::string tally_str(const std::map<mpq_class, long>& m) {
    if (m.empty()) return "-";
    std::ostringstream s;
    bool first = true;
    for (const auto& [v, n] : m) {
        s << (first ? "" : ", ") << frac_str(v) << ": " << n;
        first = false;
    }
    return s.str();
}

int cmd_evaluate(const std::string& surface_path, const std::string& place, long height, const std::string& name,
                 bool list) {
    PencilSurface s;
    try {
        s = parse_surface(read_file(surface_path));
    } catch (const std::invalid_argument& e) {
        throw Malformed(surface_path + ": " + e.what());
    }
    if (s.fixture.empty()) throw Malformed("recipes belong to fixtures; the surface document needs a \"fixture\" id");
    const Fixture& f = fixture(s.fixture);
    if (s.q1.c != f.surface.q1.c || s.q2.c != f.surface.q2.c)
        throw Malformed("the quadrics differ from those of fixture " + f.id);
    const Recipe* r = nullptr;
    for (const Recipe& x : f.recipes)
        if (x.name == name) r = &x;
    if (!r) {
        std::string names;
        for (const Recipe& x : f.recipes) names += " " + x.name;
        throw Malformed("fixture " + f.id + " has the recipes" + names);
    }
    Place v = parse_place(place);
    if (height < 1) throw Malformed("--height must be positive");

    std::vector<Point> pts = find_points(s, height);
    int listed = 0;
    for (const Point& x : f.listed_points)
        if (std::find(pts.begin(), pts.end(), x) == pts.end()) {
            pts.push_back(x);
            ++listed;
        }
    EvalReport rep = audit(*r, pts, {v});
    const PlaceSummary& ps = rep.places.at(0);
    std::cout << "surface    " << f.id << ", recipe " << r->name << "\n"
              << "points     " << pts.size() << " (height " << height << ", " << listed << " listed points added)\n"
              << "skipped    " << rep.skipped << "\n"
              << "place      " << v.str() << "\n"
              << "local      " << tally_str(ps.local) << "\n"
              << "integral   " << tally_str(ps.integral) << "\n";
    if (ps.violation()) {
        std::cout << "missed     ";
        bool first = true;
        for (const auto& [val, cnt] : ps.local)
            if (!ps.integral.count(val)) {
                std::cout << (first ? "" : ", ") << frac_str(val);
                first = false;
            }
        std::cout << " (taken locally, by no integral point)\n";
    }
    if (list)
        for (const PointEval& row : rep.rows) {
            std::cout << "  " << point_str(row.x);
            for (const auto& [w, val] : row.values) std::cout << ' ' << w.str() << '=' << frac_str(val);
            std::cout << "\n";
        }
    std::cout << "reciprocity failures " << rep.reciprocity_failures << " of " << rep.rows.size() << "\n";
    return rep.reciprocity_failures ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algebraic Brauer groups of open degree four del Pezzo surfaces"};
    app.require_subcommand(1);

    std::string csv, group, data, cocycle, surface, place, rec, cls;
    long height = 60;
    int n = 2;
    bool wild = false, list = false;
    std::vector<int> only;

    auto* classify = app.add_subcommand("classify", "the 197 subgroup classes of W(D5) with H^1 and 4-torsion type");
    classify->add_option("--csv", csv, "also write the table as CSV");
    auto* cohom = app.add_subcommand("cohomology", "H^1(G, P) for a group given by generators");
    cohom->add_option("--group", group, "JSON list of signed permutations")->required();
    auto* lines = app.add_subcommand("lines", "Pic U from the 16 lines and the H^1 cross-check");
    lines->add_option("--group", group, "JSON list of signed permutations")->required();
    auto* lift = app.add_subcommand("lift-cocycle", "lift a class of H^1 to divisors on the lines");
    lift->add_option("--group", group, "JSON list of signed permutations")->required();
    lift->add_option("--class", cls, "coordinates in the H^1 generators, e.g. 1,0")->required();
    auto* local = app.add_subcommand("localinv", "local invariant of a 2-cocycle");
    local->add_option("--data", data, "local extension data (JSON)")->required();
    local->add_option("--cocycle", cocycle, "cocycle (JSON)")->required();
    local->add_flag("--wild", wild, "use the wild engine on O_l / m^n");
    local->add_option("--n", n, "starting precision for --wild")->check(CLI::Range(1, 12));
    auto* eval = app.add_subcommand("evaluate", "local evaluation of a fixture class on searched points");
    eval->add_option("--surface", surface, "surface document (JSON)")->required();
    eval->add_option("--place", place, "a prime or inf")->required();
    eval->add_option("--height", height, "search height, max |X_i|")->required();
    eval->add_option("--recipe", rec, "recipe name of the fixture")->required();
    eval->add_flag("--list", list, "print every point with its values");
    auto* self = app.add_subcommand("selfcheck", "run the acceptance criteria");
    self->add_option("--only", only, "criteria to run")->delimiter(',')->check(CLI::Range(1, 10));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        if (*classify) return cmd_classify(csv);
        if (*cohom) return cmd_cohomology(group);
        if (*lines) return cmd_lines(group);
        if (*lift) return cmd_lift(group, cls);
        if (*local) return cmd_localinv(data, cocycle, wild, n);
        if (*eval) return cmd_evaluate(surface, place, height, rec, list);
        if (*self) {
            auto res = acceptance::run(only, std::cout);
            bool ok = std::all_of(res.begin(), res.end(), [](const auto& o) { return o.pass; });
            return ok ? kOk : kViolation;
        }
    } catch (const Malformed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}
