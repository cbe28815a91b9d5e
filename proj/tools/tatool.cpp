// Command-line surface over the library: parameter admissibility, file
// verification, the constructions, ordering searches, enumeration pipelines,
// canonical forms, and the affine-plane reformulations.
//
// Exit codes: 0 success, 1 meaningful negative (no solution / not verified),
// 2 usage or data error.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ta/affine.hpp"
#include "ta/arrays.hpp"
#include "ta/canonical.hpp"
#include "ta/catalog.hpp"
#include "ta/constructions.hpp"
#include "ta/enumerate.hpp"
#include "ta/geometry.hpp"
#include "ta/io.hpp"
#include "ta/ordering.hpp"

using namespace ta;

namespace {

void print_params(const ArrayParams& p) {
    std::cout << "r " << p.r << " c " << p.c << " v " << p.v << '\n'
              << "e " << p.e << " lambda_rc " << p.lambda_rc << " lambda_rr " << p.lambda_rr
              << " lambda_cc " << p.lambda_cc << " lambda_rrc " << p.lambda_rrc << " k " << p.k
              << '\n'
              << "admissible ta " << (p.ta_admissible ? "yes" : "no") << " quad "
              << (p.quad_admissible ? "yes" : "no") << " resolvable "
              << (p.resolvable_admissible ? "yes" : "no") << '\n';
}

int cmd_params(long long r, long long c, long long v) {
    ArrayParams p = params_for(r, c, v);
    print_params(p);
    return p.ta_admissible ? 0 : 1;
}

int cmd_verify(const std::string& path, int base) {
    AnyObject obj = read_any_file(path, base);
    bool ok = false;
    std::string what = kind_name(obj);
    if (auto* d = std::get_if<BlockDesign>(&obj)) {
        auto p = verify_two_design(*d);
        ok = p.has_value();
        if (p)
            std::cout << "2-(" << p->v << "," << p->b << "," << p->r << "," << p->k << ","
                      << p->lambda << ") design" << (is_symmetric(*d) ? ", symmetric" : "") << '\n';
    } else if (auto* res = std::get_if<Resolution>(&obj)) {
        ok = verify_two_design(res->design).has_value() && verify_resolution(*res);
        if (ok) std::cout << "resolution with " << res->classes.size() << " parallel classes\n";
    } else if (auto* u = std::get_if<UnorderedTripleArray>(&obj)) {
        ok = verify_uta(*u);
        if (ok) {
            std::cout << "(" << u->r() << "x" << u->c() << "," << u->v << ") unordered triple array";
            if (detect_resolution(*u))
                std::cout << ", resolvable";
            else if (is_quad(*u))
                std::cout << ", quad";
            std::cout << '\n';
        }
    } else if (auto* t = std::get_if<TripleArray>(&obj)) {
        ok = verify_ta(*t);
        if (ok) {
            std::cout << "(" << t->r << "x" << t->c << "," << t->v << ") triple array";
            if (detect_resolution(underlying(*t)))
                std::cout << ", resolvable";
            else if (is_quad(*t))
                std::cout << ", quad";
            std::cout << '\n';
        }
    }
    if (!ok) {
        std::cout << what << ": verification failed\n";
        return 1;
    }
    return 0;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triple array toolkit"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "pipeline parallelism (default 1, bit-reproducible)");

    // params r c v
    auto* sc_params = app.add_subcommand("params", "derived parameters and admissibility flags");
    long long pr, pc, pv;
    sc_params->add_option("r", pr)->required();
    sc_params->add_option("c", pc)->required();
    sc_params->add_option("v", pv)->required();

    // verify <file>
    auto* sc_verify = app.add_subcommand("verify", "verify a design/resolution/uta/ta file");
    std::string vfile;
    int vbase = 0;
    sc_verify->add_option("file", vfile)->required();
    sc_verify->add_option("--base", vbase, "symbol base used in the file");

    // canon / aut
    auto* sc_canon = app.add_subcommand("canon", "canonical key of an object (hex)");
    auto* sc_aut = app.add_subcommand("aut", "automorphism group order of an object");
    std::string cfile;
    int cbase = 0;
    for (auto* sc : {sc_canon, sc_aut}) {
        sc->add_option("file", cfile)->required();
        sc->add_option("--base", cbase);
    }

    // construct <which> ...
    auto* sc_con = app.add_subcommand("construct", "run a construction");
    std::string which, in1, in2, out;
    int sigma = 0, cq = 0, cn = 2, ca = 0, cb2 = 0;
    sc_con->add_option("which", which, "agrawal|ruta|paley|family-ag|family-hadamard|family-pg3")
        ->required();
    sc_con->add_option("--design", in1, "symmetric design file");
    sc_con->add_option("--resolution", in2, "resolution file");
    sc_con->add_option("--sigma", sigma, "fixed point for agrawal");
    sc_con->add_option("--q", cq);
    sc_con->add_option("--n", cn);
    sc_con->add_option("--a", ca);
    sc_con->add_option("--b", cb2);
    sc_con->add_option("-o,--out", out, "output file (default stdout)");

    // order <uta file>
    auto* sc_order = app.add_subcommand("order", "find one ordering of an unordered triple array");
    std::string ofile, oout;
    uint64_t obudget = 0;
    int obase = 0;
    sc_order->add_option("file", ofile)->required();
    sc_order->add_option("--budget", obudget, "node budget (0 = unlimited)");
    sc_order->add_option("--base", obase);
    sc_order->add_option("-o,--out", oout);

    // enumerate <pipeline>
    auto* sc_enum = app.add_subcommand("enumerate", "run an enumeration pipeline");
    std::string pipeline, edesigns, edesign, eres, euta;
    uint64_t ebudget = 0;
    int ebase = 0;
    sc_enum->add_option("pipeline", pipeline, "extremal|ruta|orderings|resolvable-71535")->required();
    sc_enum->add_option("--designs", edesigns, "design list file (extremal)");
    sc_enum->add_option("--design", edesign, "symmetric design file (ruta)");
    sc_enum->add_option("--resolution", eres, "resolution file (ruta)");
    sc_enum->add_option("--uta", euta, "uta file (orderings)");
    sc_enum->add_option("--budget", ebudget);
    sc_enum->add_option("--base", ebase);

    // scan-quad --emax N
    auto* sc_scan = app.add_subcommand("scan-quad", "parameter sets quad-admissible in both orientations");
    long long emax = 1000;
    bool one_orientation = false;
    sc_scan->add_option("--emax", emax);
    sc_scan->add_flag("--one-orientation", one_orientation, "list single-orientation quad-admissible sets");

    // derange q [--plane file] [--count]
    auto* sc_der = app.add_subcommand("derange", "affine-plane derangement assignment");
    int dq = 0;
    std::string dplane;
    bool dcount = false;
    sc_der->add_option("q", dq)->required();
    sc_der->add_option("--plane", dplane, "affine plane design file (default AG(2,q))");
    sc_der->add_flag("--count", dcount, "count all assignments");

    // fixtures
    auto* sc_fix = app.add_subcommand("fixtures", "list bundled fixtures");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sc_params) return cmd_params(pr, pc, pv);
        if (*sc_verify) return cmd_verify(vfile, vbase);
        if (*sc_canon || *sc_aut) {
            AnyObject obj = read_any_file(cfile, cbase);
            CanonicalForm cf;
            if (auto* d = std::get_if<BlockDesign>(&obj))
                cf = canonical_form(*d);
            else if (auto* r = std::get_if<Resolution>(&obj))
                cf = canonical_form(*r);
            else if (auto* u = std::get_if<UnorderedTripleArray>(&obj))
                cf = canonical_form(*u);
            else
                cf = canonical_form(std::get<TripleArray>(obj));
            if (*sc_canon)
                std::cout << key_to_hex(cf.key) << '\n';
            else
                std::cout << cf.aut_order << '\n';
            return 0;
        }
        if (*sc_con) {
            UnorderedTripleArray u;
            if (which == "agrawal") {
                u = agrawal(read_design_file(in1), sigma);
            } else if (which == "ruta") {
                BlockDesign s = read_design_file(in1);
                Resolution res = read_resolution_file(in2);
                std::vector<int> ident(s.v);
                for (int i = 0; i < s.v; ++i) ident[i] = i;
                u = ruta(s, res, ident);
            } else if (which == "paley") {
                TripleArray t = paley({cq, ca, cb2});
                emit(out, write_ta(t));
                return verify_ta(t) ? 0 : 1;
            } else if (which == "family-ag") {
                u = family_ag(cq, cn);
            } else if (which == "family-hadamard") {
                u = family_hadamard(read_design_file(in1));
            } else if (which == "family-pg3") {
                if (in2.empty() && cq != 2)
                    throw std::runtime_error("family-pg3: only q=2 has a bundled packing");
                Resolution packing = in2.empty()
                                         ? read_resolution_file(data_path("parades/parade_1b.txt"))
                                         : read_resolution_file(in2);
                u = family_pg3(cq, packing);
            } else {
                throw CLI::ValidationError("unknown construction " + which);
            }
            emit(out, write_uta(u));
            return verify_uta(u) ? 0 : 1;
        }
        if (*sc_order) {
            UnorderedTripleArray u = read_uta_file(ofile, obase);
            if (!verify_uta(u)) {
                std::cerr << "input is not a valid unordered triple array\n";
                return 2;
            }
            bool exhausted = false;
            auto t = order_uta(u, obudget, &exhausted);
            if (!t) {
                std::cout << (exhausted ? "budget exhausted, undecided\n" : "no ordering exists\n");
                return 1;
            }
            emit(oout, write_ta(*t));
            return 0;
        }
        if (*sc_enum) {
            if (pipeline == "extremal") {
                auto designs = ingest_designs(edesigns);
                EnumerationReport rep = enumerate_extremal_utas(designs, threads);
                std::cout << rep.to_text();
                return rep.checks_passed ? 0 : 1;
            }
            if (pipeline == "ruta") {
                EnumerationReport rep =
                    enumerate_rutas(read_design_file(edesign), read_resolution_file(eres), threads);
                std::cout << rep.to_text();
                return rep.checks_passed ? 0 : 1;
            }
            if (pipeline == "orderings") {
                EnumerationReport rep = enumerate_tas(read_uta_file(euta, ebase), ebudget);
                std::cout << rep.to_text();
                return rep.checks_passed ? 0 : 1;
            }
            if (pipeline == "resolvable-71535") {
                Resolvable71535Result res = enumerate_resolvable_71535(load_parades(), threads);
                std::cout << res.to_text();
                return res.checks_passed ? 0 : 1;
            }
            throw CLI::ValidationError("unknown pipeline " + pipeline);
        }
        if (*sc_scan) {
            auto sets = one_orientation ? scan_quad_admissible(emax) : scan_quad_transpose(emax);
            for (const auto& p : sets)
                std::cout << p.r << "x" << p.c << " " << p.v << " e " << p.e << " lambda_rrc "
                          << p.lambda_rrc << " k " << p.k << '\n';
            std::cout << "total " << sets.size() << '\n';
            return 0;
        }
        if (*sc_der) {
            AffinePlaneContext ctx =
                dplane.empty() ? affine_context(dq) : affine_context(read_design_file(dplane));
            if (ctx.q != dq) throw std::runtime_error("plane order does not match q");
            if (dcount) {
                std::cout << count_derangement_solutions(ctx) << '\n';
                return 0;
            }
            auto d = solve_derangements(ctx);
            if (!d) {
                std::cout << "no assignment exists\n";
                return 1;
            }
            for (const auto& sigma : d->sigma) {
                for (size_t i = 0; i < sigma.size(); ++i)
                    std::cout << (i ? " " : "") << sigma[i] + 1; // one-line form, 1-based
                std::cout << '\n';
            }
            return 0;
        }
        if (*sc_fix) {
            for (const auto& f : list_fixtures()) std::cout << f.id << " " << f.kind << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
