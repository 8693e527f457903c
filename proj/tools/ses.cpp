#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "ses/census.hpp"
#include "ses/constructions.hpp"
#include "ses/io.hpp"

using namespace ses;
using nlohmann::json;

namespace {

struct Output {
    std::string path;
    std::ostringstream buf;

    void flush() {
        if (path.empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(path);
            if (!f) throw InvalidInput("cannot write " + path);
            f << buf.str();
        }
    }
};

std::vector<std::uint64_t> parse_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw InvalidInput("empty list");
    return out;
}

int run_irreducibles(std::uint64_t p, unsigned n, const std::string& format, Output& out) {
    FieldSpec F = FieldSpec::prime(p);
    const auto& polys = enumerate_monic_irreducibles(F, n);
    if (format == "json") {
        json j{{"schema_version", kSchemaVersion}, {"p", p}, {"n", n},
               {"count", polys.size()}};
        json list = json::array();
        for (const auto& f : polys) list.push_back(poly_to_string(f));
        j["polynomials"] = std::move(list);
        out.buf << j.dump(2) << "\n";
    } else if (format == "csv") {
        out.buf << "p,n,polynomial\n";
        for (const auto& f : polys)
            out.buf << p << "," << n << ",\"" << poly_to_string(f) << "\"\n";
    } else {
        for (const auto& f : polys) out.buf << poly_to_string(f) << "\n";
        out.buf << "count " << polys.size() << "\n";
    }
    return 0;
}

int run_orbits(std::uint64_t p, unsigned n, const std::string& family,
               const std::string& format, Output& out) {
    FieldSpec F = FieldSpec::prime(p);
    FormFamily fam = family == "all"       ? FormFamily::All
                     : family == "primary" ? FormFamily::PrimaryNoLinearBase
                                           : FormFamily::Irreducible;
    auto members = enumerate_form_family(F, n, fam);
    std::set<FormIdeal> visited;
    std::vector<std::pair<std::string, std::size_t>> orbits;
    for (const auto& f : members) {
        if (visited.count(f)) continue;
        auto orb = orbit_of(f, GroupKind::GammaL, F);
        std::string rep = form_to_string(orb.front().to_form());
        std::size_t in_family = 0;
        for (auto& x : orb) {
            if (std::binary_search(members.begin(), members.end(), x)) ++in_family;
            visited.insert(std::move(x));
        }
        orbits.emplace_back(std::move(rep), in_family);
    }
    if (format == "json") {
        json j{{"schema_version", kSchemaVersion}, {"p", p}, {"n", n},
               {"family", family}, {"orbit_count", orbits.size()}};
        json list = json::array();
        for (auto& [rep, size] : orbits)
            list.push_back({{"representative", rep}, {"size", size}});
        j["orbits"] = std::move(list);
        out.buf << j.dump(2) << "\n";
    } else if (format == "csv") {
        out.buf << "p,n,representative,size\n";
        for (auto& [rep, size] : orbits)
            out.buf << p << "," << n << ",\"" << rep << "\"," << size << "\n";
    } else {
        for (auto& [rep, size] : orbits)
            out.buf << rep << "  (orbit size " << size << ")\n";
        out.buf << "orbits " << orbits.size() << "\n";
    }
    return 0;
}

int run_stabilizer(std::uint64_t p, const std::string& poly, bool strict,
                   const std::string& format, Output& out) {
    FieldSpec F = FieldSpec::prime(p);
    UniPoly f = parse_poly(poly, F, strict);
    FormIdeal ideal = FormIdeal::from_poly(f, F);
    auto stab = stabilizer_gl(ideal, F);
    if (format == "json") {
        json j{{"schema_version", kSchemaVersion}, {"p", p},
               {"polynomial", poly_to_string(f)}, {"order", stab.size()}};
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "stabilizer order " << stab.size() << "\n";
    }
    return 0;
}

int run_pfaffian(const std::string& file, std::size_t isotropic,
                 const std::string& format, Output& out) {
    AltPencil P = load_pencil(file);
    HomForm pf = pfaffian(P);
    bool ses_d = is_ses_direct(P);
    bool ses_p = is_ses_pfaffian(P);
    CentroidBasis C = centroid(P);
    bool field = centroid_is_field(P, C);
    std::uint64_t corder = 1;
    for (std::size_t i = 0; i < C.dim(); ++i) corder *= P.F.q();
    std::optional<std::size_t> gen;
    if (field && P.dimW % C.dim() == 0) gen = P.dimW / C.dim();
    std::optional<std::uint64_t> iso;
    if (isotropic > 0) iso = count_totally_isotropic(P, isotropic);
    if (format == "json") {
        json j{{"schema_version", kSchemaVersion},
               {"pfaffian", form_to_string(pf)},
               {"ses_direct", ses_d},
               {"ses_pfaffian", ses_p},
               {"centroid_dim", C.dim()},
               {"centroid_is_field", field},
               {"centroid_order", corder}};
        if (gen) j["genus"] = *gen;
        if (iso) {
            j["isotropic_dim"] = isotropic;
            j["isotropic_count"] = *iso;
        }
        out.buf << j.dump(2) << "\n";
    } else {
        out.buf << "pfaffian " << form_to_string(pf) << "\n"
                << "ses_direct " << (ses_d ? "true" : "false") << "\n"
                << "ses_pfaffian " << (ses_p ? "true" : "false") << "\n"
                << "centroid order " << corder
                << (field ? " (field)" : " (not a field)") << "\n";
        if (gen) out.buf << "genus " << *gen << "\n";
        if (iso)
            out.buf << "totally isotropic " << isotropic << "-subspaces: " << *iso
                    << "\n";
    }
    return 0;
}

std::vector<std::vector<Scalar>> parse_subspace(const std::string& text,
                                                const FieldSpec& F,
                                                std::size_t ambient, bool strict) {
    std::vector<std::vector<Scalar>> rows;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        UniPoly f = parse_poly(item, F, strict);
        if (static_cast<std::size_t>(f.degree()) >= ambient)
            throw InvalidInput("subspace vector degree out of range");
        std::vector<Scalar> v(ambient);
        for (std::size_t i = 0; i < ambient; ++i) v[i] = f.coeff(i);
        rows.push_back(std::move(v));
    }
    return rows;
}

int run_construct(const std::string& kind, std::uint64_t p, unsigned k,
                  const std::string& poly, unsigned c, std::size_t m,
                  std::size_t n, const std::string& subspace, bool strict,
                  Output& out) {
    FieldSpec F = FieldSpec::prime(p);
    std::optional<AltPencil> P;
    if (kind == "heisenberg") {
        UniPoly a = parse_poly(poly.empty() ? "x" : poly, F, strict);
        P = heisenberg_pencil(make_local_algebra(F, a, c));
    } else if (kind == "quotient") {
        if (poly.empty()) throw InvalidInput("quotient needs --poly");
        LocalAlgebra A = make_local_algebra(F, parse_poly(poly, F, strict), c);
        SubspaceBasis S = make_subspace(F, A.dim, parse_subspace(subspace, F, A.dim, strict));
        P = quotient_pencil(A, S);
    } else if (kind == "hflat") {
        P = hflat_pencil(F, m);
    } else if (kind == "companion") {
        if (poly.empty()) throw InvalidInput("companion needs --poly");
        P = companion_pencil(parse_poly(poly, F, strict), c, F);
    } else if (kind == "genus1") {
        P = genus1_pencil(FieldSpec::make(p, k), n);
    } else {
        throw InvalidInput("unknown construct kind: " + kind);
    }
    out.buf << pencil_to_json(*P).dump(2) << "\n";
    return 0;
}

int run_census(const std::string& ps, const std::string& exps,
               const std::string& format, Output& out) {
    auto primes = parse_list(ps);
    auto exponents = parse_list(exps);
    std::vector<ClassCountReport> reports;
    for (auto p : primes)
        for (auto e : exponents)
            reports.push_back(classes_bruteforce(p, static_cast<unsigned>(e)));
    if (format == "json") {
        json j{{"schema_version", kSchemaVersion}};
        json list = json::array();
        for (const auto& r : reports) {
            json strata = json::array();
            for (const auto& s : r.breakdown)
                strata.push_back({{"stratum", s.label}, {"count", s.count}});
            list.push_back({{"p", r.p},
                            {"order_exponent", r.order_exponent},
                            {"closed_form", r.closed_form},
                            {"brute_force", r.brute_force},
                            {"breakdown", std::move(strata)}});
        }
        j["reports"] = std::move(list);
        out.buf << j.dump(2) << "\n";
    } else if (format == "csv") {
        out.buf << "p,order_exponent,stratum,count,method\n";
        for (const auto& r : reports) {
            for (const auto& s : r.breakdown)
                out.buf << r.p << "," << r.order_exponent << ",\"" << s.label
                        << "\"," << s.count << ",brute\n";
            out.buf << r.p << "," << r.order_exponent << ",total,"
                    << r.brute_force << ",brute\n";
            out.buf << r.p << "," << r.order_exponent << ",total,"
                    << r.closed_form << ",closed\n";
        }
    } else {
        for (const auto& r : reports) {
            out.buf << "p=" << r.p << " order p^" << r.order_exponent
                    << ": closed " << r.closed_form << ", brute "
                    << r.brute_force << " (";
            for (std::size_t i = 0; i < r.breakdown.size(); ++i)
                out.buf << (i ? ", " : "") << r.breakdown[i].label << " "
                        << r.breakdown[i].count;
            out.buf << ")\n";
        }
    }
    return 0;
}

struct Verifier {
    Output& out;
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        out.buf << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) out.buf << "  [" << detail << "]";
        out.buf << "\n";
        if (!ok) ++failures;
    }
};

void verify_formulas(Verifier& v, std::uint64_t max_p) {
    for (std::uint64_t p = 2; p <= std::min<std::uint64_t>(max_p, 13); ++p) {
        if (!is_prime_u64(p)) continue;
        FieldSpec F = FieldSpec::prime(p);
        for (unsigned n = 2; n <= 4; ++n)
            v.check("orbit count p=" + std::to_string(p) + " n=" + std::to_string(n),
                    count_orbits(F, n, FormFamily::Irreducible) == N_closed(p, n));
        if (p <= 7)
            v.check("orbit count p=" + std::to_string(p) + " n=5",
                    count_orbits(F, 5, FormFamily::Irreducible) == N_closed(p, 5));
    }
    for (std::uint64_t p : {2, 3, 5}) {
        if (p > max_p) continue;
        for (unsigned e : {6u, 8u, 10u, 12u}) {
            bool ok = true;
            try {
                classes_bruteforce(p, e);
            } catch (const Error&) {
                ok = false;
            }
            v.check("class count p=" + std::to_string(p) + " exp=" + std::to_string(e), ok);
        }
    }
    for (std::uint64_t p = 3; p <= std::min<std::uint64_t>(max_p, 11); ++p) {
        if (!is_prime_u64(p)) continue;
        v.check("quad+quad orbits p=" + std::to_string(p),
                decomposable_pair_orbits(p, "quad+quad") ==
                    decomposable_pair_closed(p, "quad+quad"));
    }
    for (std::uint64_t p = 2; p <= std::min<std::uint64_t>(max_p, 7); ++p) {
        if (!is_prime_u64(p)) continue;
        v.check("quad+cubic orbits p=" + std::to_string(p),
                decomposable_pair_orbits(p, "quad+cubic") ==
                    decomposable_pair_closed(p, "quad+cubic"));
    }
}

void verify_lemmas(Verifier& v, std::uint64_t max_p) {
    for (std::uint64_t p = 2; p <= std::min<std::uint64_t>(max_p, 13); ++p) {
        if (!is_prime_u64(p)) continue;
        FieldSpec F = FieldSpec::prime(p);
        const auto& quads = enumerate_monic_irreducibles(F, 2);
        bool ok = true;
        for (const auto& f : quads)
            ok = ok && stabilizer_gl(FormIdeal::from_poly(f, F), F).size() ==
                           2 * (p * p - 1);
        v.check("quadratic stabilizer order 2(p^2-1), p=" + std::to_string(p), ok);
        const auto& cubics = enumerate_monic_irreducibles(F, 3);
        v.check("cubic stabilizer order 3(p-1), p=" + std::to_string(p),
                stabilizer_gl(FormIdeal::from_poly(cubics.front(), F), F).size() ==
                    3 * (p - 1));
    }
    for (std::uint64_t p : {3, 5, 7, 11}) {
        if (p > max_p) continue;
        DihedralCensus dc = dihedral_census(p);
        v.check("dihedral orbits (p-1)/2, p=" + std::to_string(p),
                dc.delta_size == (p * p - p) / 2 && dc.orbit_count == (p - 1) / 2);
    }
    for (std::uint64_t p : {5, 11}) {
        if (p > max_p) continue;
        v.check("Sylow-3 bijection p=" + std::to_string(p), sylow3_bijection_check(p));
    }
}

void verify_examples(Verifier& v, const std::string& fixtures) {
    FieldSpec F5 = FieldSpec::prime(5);
    AltPencil H = load_pencil(fixtures + "/genus_h.json");
    AltPencil G = load_pencil(fixtures + "/genus_g.json");
    HomForm target(2, 4);
    target.set({4, 0}, F5.one());
    target.set({2, 2}, F5.from_int(4));
    target.set({0, 4}, F5.from_int(4));
    v.check("H pfaffian is (X^2+2Y^2)^2", pfaffian(H) == target);
    v.check("G pfaffian matches H", pfaffian(G) == target);
    auto CH = centroid(H);
    auto CG = centroid(G);
    v.check("H centroid order 5", CH.dim() == 1 && centroid_is_field(H, CH));
    v.check("G centroid order 25", CG.dim() == 2 && centroid_is_field(G, CG));
    v.check("H genus 2, G genus 1", genus(H) == 2 && genus(G) == 1);
    FormIdeal quad = FormIdeal::from_poly(
        parse_poly("x^2+2", F5, true), F5);
    HomForm qf = quad.to_form();
    FormIdeal square = FormIdeal::from_form(form_mul(qf, qf, F5), F5);
    v.check("multiset {f,f} differs from {f^2}",
            !multiset_equivalent({quad, quad}, {square}, GroupKind::GL, F5).equivalent);

    FieldSpec F3 = FieldSpec::prime(3);
    AltPencil P1 = load_pencil(fixtures + "/same_pfaffian_split.json");
    AltPencil P2 = load_pencil(fixtures + "/same_pfaffian_twisted.json");
    v.check("same-Pfaffian pair agrees", pfaffian(P1) == pfaffian(P2));
    HomForm cubic(3, 3);
    cubic.set({3, 0, 0}, F3.one());
    cubic.set({2, 1, 0}, F3.one());
    cubic.set({1, 2, 0}, F3.one());
    cubic.set({1, 0, 2}, F3.from_int(2));
    cubic.set({0, 3, 0}, F3.from_int(2));
    cubic.set({0, 2, 1}, F3.from_int(2));
    cubic.set({0, 0, 3}, F3.one());
    v.check("same-Pfaffian value", pfaffian(P1) == cubic);
    std::uint64_t i1 = count_totally_isotropic(P1, 3);
    std::uint64_t i2 = count_totally_isotropic(P2, 3);
    v.check("isotropic 3-subspaces separate the pair", i1 >= 2 && i2 == 1,
            std::to_string(i1) + " vs " + std::to_string(i2));
}

int run_verify(const std::string& suite, std::uint64_t max_p,
               const std::string& fixtures, Output& out) {
    Verifier v{out};
    if (suite == "all" || suite == "formulas") verify_formulas(v, max_p);
    if (suite == "all" || suite == "lemmas") verify_lemmas(v, max_p);
    if (suite == "all" || suite == "examples") verify_examples(v, fixtures);
    out.buf << (v.failures ? "FAILED " + std::to_string(v.failures) + " checks"
                           : "all checks passed")
            << "\n";
    return v.failures ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating bimap pencils, binary-form orbits and"
                 " semi-extraspecial class counts"};
    app.require_subcommand(1);
    unsigned workers = 1;
    app.add_option("--workers", workers,
                   "worker count; results are identical for any value");

    std::uint64_t p = 3;
    unsigned n = 2, k = 1, c = 1;
    std::size_t m = 1, nvec = 1, iso = 0;
    std::string format = "text", out_path, poly, family = "irreducible";
    std::string pencil_file, kind, subspace, plist = "3", elist = "8";
    std::string suite = "all", fixtures = "fixtures";
    std::uint64_t max_p = 7;
    bool strict = false;

    auto add_common = [&](CLI::App* sub) {
        sub->fallthrough();  // let --workers reach the parent app
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", out_path);
    };

    auto* irr = app.add_subcommand("irreducibles", "list monic irreducibles");
    irr->add_option("--p", p)->required();
    irr->add_option("--n", n)->required();
    add_common(irr);

    auto* orb = app.add_subcommand("orbits", "GammaL(2,p) orbits of form ideals");
    orb->add_option("--p", p)->required();
    orb->add_option("--n", n)->required();
    orb->add_option("--family", family)
        ->check(CLI::IsMember({"irreducible", "primary", "all"}));
    add_common(orb);

    auto* stab = app.add_subcommand("stabilizer", "GL(2,p) stabilizer of an ideal");
    stab->add_option("--p", p)->required();
    stab->add_option("--poly", poly)->required();
    stab->add_flag("--strict", strict);
    add_common(stab);

    auto* pfc = app.add_subcommand("pfaffian", "analyze a pencil file");
    pfc->add_option("file", pencil_file)->required();
    pfc->add_option("--isotropic", iso, "also count totally isotropic subspaces");
    add_common(pfc);

    auto* con = app.add_subcommand("construct", "emit a pencil file");
    con->add_option("kind", kind)->required()
        ->check(CLI::IsMember({"heisenberg", "quotient", "hflat", "companion", "genus1"}));
    con->add_option("--p", p)->required();
    con->add_option("--k", k);
    con->add_option("--poly", poly);
    con->add_option("--c", c);
    con->add_option("--m", m);
    con->add_option("--n", nvec);
    con->add_option("--subspace", subspace);
    con->add_flag("--strict", strict);
    add_common(con);

    auto* cen = app.add_subcommand("census", "class counts, closed and brute force");
    cen->add_option("--p", plist)->required();
    cen->add_option("--exp", elist)->required();
    add_common(cen);

    auto* ver = app.add_subcommand("verify", "run the cross-validation suites");
    ver->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "formulas", "examples", "lemmas"}));
    ver->add_option("--max-p", max_p);
    ver->add_option("--fixtures", fixtures);
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    Output out{out_path, {}};
    int rc = 1;
    try {
        if (irr->parsed()) rc = run_irreducibles(p, n, format, out);
        else if (orb->parsed()) rc = run_orbits(p, n, family, format, out);
        else if (stab->parsed()) rc = run_stabilizer(p, poly, strict, format, out);
        else if (pfc->parsed()) rc = run_pfaffian(pencil_file, iso, format, out);
        else if (con->parsed())
            rc = run_construct(kind, p, k, poly, c, m, nvec, subspace, strict, out);
        else if (cen->parsed()) rc = run_census(plist, elist, format, out);
        else if (ver->parsed()) rc = run_verify(suite, max_p, fixtures, out);
        out.flush();
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
