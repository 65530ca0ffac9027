// Command-line front end. Every subcommand is a thin shell over the library
// headers; all output is deterministic (ordered containers throughout).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arbor/bck.hpp"
#include "arbor/cocycle.hpp"
#include "arbor/elem.hpp"
#include "arbor/forest.hpp"
#include "arbor/linalg.hpp"
#include "arbor/mindex.hpp"
#include "arbor/poly.hpp"
#include "arbor/printing.hpp"
#include "arbor/roughnum.hpp"
#include "arbor/suites.hpp"
#include "arbor/tables.hpp"

namespace {

using nlohmann::ordered_json;
using namespace arbor;

std::string fmt_forest_vec(const ForestVec& v) {
    return format_lincomb(v, [](const Forest& f) { return format_forest(f); });
}

std::string fmt_forest_tens(const ForestTens& t) {
    return format_tensor2(t, [](const Forest& f) { return format_forest(f); });
}

std::string fmt_midx_vec(const MIdxVec& v) {
    return format_lincomb(v, [](const MIdx& b) { return format_midx(b); });
}

MForest parse_m(const std::string& text, bool shorthand) {
    return shorthand ? parse_mforest_shorthand(text) : parse_mforest(text);
}

SparseRow coordinates(const MVec& v, const std::vector<MForest>& basis) {
    SparseRow r;
    for (const auto& [f, c] : v.terms()) {
        auto it = std::find(basis.begin(), basis.end(), f);
        if (it == basis.end()) throw std::invalid_argument("vector leaves the graded basis");
        r[static_cast<int>(it - basis.begin())] = c;
    }
    return r;
}

/* Kernel of the degree-split component map on the degree-d basis. */
std::vector<SparseRow> split_kernel(int d, int m, int n) {
    const auto& basis = mforest_basis(d);
    std::map<std::pair<MForest, MForest>, SparseRow> rows;
    for (size_t j = 0; j < basis.size(); ++j) {
        const MTens comp = reduced_component(basis[j], m, n);
        for (const auto& [key, c] : comp.terms()) rows[key][static_cast<int>(j)] = c;
    }
    std::vector<SparseRow> mat;
    for (auto& [key, row] : rows) mat.push_back(std::move(row));
    return kernel_of(mat, static_cast<int>(basis.size()));
}

struct CocycleRun {
    std::vector<CocycleStage> stages;
    bool feasible = false;
    int obstruction = -1;
    std::string certificate;
};

template <class E>
CocycleRun run_cocycle(const HopfOracle<E>& oracle, int max_degree) {
    auto rep = cocycle_solve(oracle, max_degree);
    CocycleRun out;
    out.stages = rep.stages;
    out.feasible = rep.unit_nonzero_feasible;
    out.obstruction = rep.obstruction_degree;
    std::string cert;
    auto unknown_name = [&](int col) {
        const auto& [u, t] = rep.unknowns[static_cast<size_t>(col)];
        return "L(" + oracle.format(u) + ") -> " + oracle.format(t);
    };
    if (rep.unit_nonzero_feasible) {
        cert += "affine solution family (homogeneous system, particular solution = 0)\n";
        cert += "kernel basis, dimension " + std::to_string(rep.kernel_basis.size()) + "\n";
        for (size_t i = 0; i < rep.kernel_basis.size(); ++i) {
            cert += "  basis vector " + std::to_string(i) + ":\n";
            for (const auto& [col, c] : rep.kernel_basis[i])
                cert += "    " + unknown_name(col) + " = " + to_string(c) + "\n";
        }
    } else {
        cert += "obstruction witness: a linear combination of the equations that\n";
        cert += "equals the bare unit coefficient, so that coefficient must vanish\n";
        for (const auto& [row_id, c] : rep.obstruction_witness) {
            const auto& [u, a, b] = rep.equations[static_cast<size_t>(row_id)];
            cert += "  " + to_string(c) + " x [source " + oracle.format(u) + ", component " +
                    oracle.format(a) + " (x) " + oracle.format(b) + "]\n";
        }
    }
    out.certificate = cert;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for rooted-forest and multi-index Hopf algebras"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- expr ------------------------------------------------------------
    auto* expr = app.add_subcommand("expr", "parse an expression and print its canonical form");
    auto expr_alg = std::make_shared<std::string>("m");
    auto expr_text = std::make_shared<std::string>();
    auto expr_short = std::make_shared<bool>(false);
    expr->add_option("algebra", *expr_alg, "bck or m")->required()->check(CLI::IsMember({"bck", "m"}));
    expr->add_option("text", *expr_text, "expression")->required();
    expr->add_flag("--shorthand", *expr_short, "read run-together multi-index letters");
    expr->callback([=]() {
        if (*expr_alg == "bck")
            std::cout << format_forest(parse_forest(*expr_text)) << "\n";
        else
            std::cout << format_mforest(parse_m(*expr_text, *expr_short)) << "\n";
    });

    // ---- coprod ----------------------------------------------------------
    auto* coprod = app.add_subcommand("coprod", "coproducts");
    coprod->require_subcommand(1);
    {
        auto* cb = coprod->add_subcommand("bck", "forest coproduct");
        auto text = std::make_shared<std::string>();
        cb->add_option("forest", *text, "forest expression")->required();
        cb->callback([=]() { std::cout << fmt_forest_tens(coproduct_bck(parse_forest(*text))) << "\n"; });

        auto* cm = coprod->add_subcommand("m", "multi-index coproduct");
        auto mtext = std::make_shared<std::string>();
        auto msh = std::make_shared<bool>(false);
        cm->add_option("mforest", *mtext, "multi-index forest")->required();
        cm->add_flag("--shorthand", *msh, "read run-together letters");
        cm->callback([=]() { std::cout << format_mtens(coproduct_m(parse_m(*mtext, *msh))) << "\n"; });

        auto* cr = coprod->add_subcommand("reduced", "one degree split of the reduced coproduct");
        auto rm = std::make_shared<int>(0);
        auto rn = std::make_shared<int>(0);
        auto rtext = std::make_shared<std::string>();
        auto rsh = std::make_shared<bool>(false);
        cr->add_option("left", *rm, "left degree")->required();
        cr->add_option("right", *rn, "right degree")->required();
        cr->add_option("mforest", *rtext, "multi-index forest")->required();
        cr->add_flag("--shorthand", *rsh, "read run-together letters");
        cr->callback([=]() {
            std::cout << format_mtens(reduced_component(parse_m(*rtext, *rsh), *rm, *rn)) << "\n";
        });
    }

    // ---- prod ------------------------------------------------------------
    auto* prod = app.add_subcommand("prod", "products");
    prod->require_subcommand(1);
    {
        auto* pf = prod->add_subcommand("forest", "commutative juxtaposition");
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        auto alg = std::make_shared<std::string>("bck");
        pf->add_option("a", *a)->required();
        pf->add_option("b", *b)->required();
        pf->add_option("--algebra", *alg, "bck or m")->check(CLI::IsMember({"bck", "m"}));
        pf->callback([=]() {
            if (*alg == "bck")
                std::cout << format_forest(forest_mul(parse_forest(*a), parse_forest(*b))) << "\n";
            else
                std::cout << format_mforest(mforest_mul(parse_mforest(*a), parse_mforest(*b))) << "\n";
        });

        auto* pg = prod->add_subcommand("graft", "graft one tree onto another, one term per vertex");
        auto ga = std::make_shared<std::string>(), gb = std::make_shared<std::string>();
        pg->add_option("sigma", *ga)->required();
        pg->add_option("tau", *gb)->required();
        pg->callback([=]() {
            std::cout << fmt_forest_vec(graft(parse_tree(*ga), parse_tree(*gb))) << "\n";
        });

        auto* ps = prod->add_subcommand("sgraft", "simultaneous grafting of a forest onto a forest");
        auto sa = std::make_shared<std::string>(), sb = std::make_shared<std::string>();
        ps->add_option("source", *sa)->required();
        ps->add_option("target", *sb)->required();
        ps->callback([=]() {
            std::cout << fmt_forest_vec(simultaneous_graft(parse_forest(*sa), parse_forest(*sb)))
                      << "\n";
        });

        auto* pl = prod->add_subcommand("gl", "composition product on forests");
        auto la = std::make_shared<std::string>(), lb = std::make_shared<std::string>();
        pl->add_option("a", *la)->required();
        pl->add_option("b", *lb)->required();
        pl->callback([=]() {
            std::cout << fmt_forest_vec(gl_forest(parse_forest(*la), parse_forest(*lb))) << "\n";
        });

        auto* pm = prod->add_subcommand("star-m", "multi-index product dual to the coproduct");
        auto ma = std::make_shared<std::string>(), mb = std::make_shared<std::string>();
        pm->add_option("a", *ma)->required();
        pm->add_option("b", *mb)->required();
        pm->callback([=]() {
            std::cout << format_mvec(star_m_forest(parse_mforest(*ma), parse_mforest(*mb))) << "\n";
        });
    }

    // ---- pair ------------------------------------------------------------
    auto* pair = app.add_subcommand("pair", "symmetry-weighted pairings");
    pair->require_subcommand(1);
    {
        auto* pb = pair->add_subcommand("bck", "forest pairing");
        auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
        pb->add_option("a", *a)->required();
        pb->add_option("b", *b)->required();
        pb->callback([=]() {
            ForestVec va, vb;
            va.add(parse_forest(*a), 1);
            vb.add(parse_forest(*b), 1);
            std::cout << to_string(pairing_bck(va, vb)) << "\n";
        });

        auto* pm = pair->add_subcommand("m", "multi-index pairing");
        auto ma = std::make_shared<std::string>(), mb = std::make_shared<std::string>();
        pm->add_option("a", *ma)->required();
        pm->add_option("b", *mb)->required();
        pm->callback([=]() {
            MVec va, vb;
            va.add(parse_mforest(*ma), 1);
            vb.add(parse_mforest(*mb), 1);
            std::cout << to_string(pairing_m(va, vb)) << "\n";
        });
    }

    // ---- dbar ------------------------------------------------------------
    auto* db = app.add_subcommand("dbar", "division-free derivation on multi-indices");
    auto db_text = std::make_shared<std::string>();
    auto db_pow = std::make_shared<int>(1);
    db->add_option("midx", *db_text, "single multi-index")->required();
    db->add_option("--power", *db_pow, "apply the derivation this many times");
    db->callback([=]() {
        std::cout << fmt_midx_vec(dbar_pow(parse_midx(*db_text), *db_pow)) << "\n";
    });

    // ---- phi -------------------------------------------------------------
    auto* ph = app.add_subcommand("phi", "fertility projection from forests to multi-indices");
    auto ph_text = std::make_shared<std::string>();
    auto ph_tr = std::make_shared<bool>(false);
    ph->add_option("expr", *ph_text, "forest (or multi-index forest with --transpose)")->required();
    ph->add_flag("--transpose", *ph_tr, "weighted preimage of a multi-index forest");
    ph->callback([=]() {
        if (*ph_tr)
            std::cout << fmt_forest_vec(phi_transpose(parse_mforest(*ph_text))) << "\n";
        else
            std::cout << format_mforest(phi(parse_forest(*ph_text))) << "\n";
    });

    // ---- cocycle ---------------------------------------------------------
    auto* coc = app.add_subcommand("cocycle", "one-cocycle equation tools");
    coc->require_subcommand(1);
    {
        auto* cs = coc->add_subcommand("solve", "staged exact solve of the cocycle equation");
        auto alg = std::make_shared<std::string>();
        auto maxd = std::make_shared<int>(4);
        auto as_json = std::make_shared<bool>(false);
        auto cert = std::make_shared<std::string>();
        cs->add_option("--algebra", *alg, "mindex or bck")
            ->required()
            ->check(CLI::IsMember({"mindex", "bck"}));
        cs->add_option("--max-degree", *maxd, "largest source degree");
        cs->add_flag("--json", *as_json, "machine-readable report");
        cs->add_option("--certificate", *cert, "write the certificate to this file");
        cs->callback([=]() {
            CocycleRun run = (*alg == "mindex") ? run_cocycle(mindex_oracle(), *maxd)
                                                : run_cocycle(bck_oracle(), *maxd);
            if (*as_json) {
                ordered_json out;
                out["algebra"] = *alg;
                out["max_degree"] = *maxd;
                out["stages"] = ordered_json::array();
                for (const auto& st : run.stages)
                    out["stages"].push_back({{"degree", st.degree},
                                             {"num_unknowns", st.num_unknowns},
                                             {"num_equations", st.num_equations},
                                             {"solution_dim", st.solution_dim},
                                             {"unit_coeff_forced_zero", st.unit_coeff_forced_zero}});
                out["unit_nonzero_feasible"] = run.feasible;
                out["obstruction_degree"] = run.obstruction;
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& st : run.stages)
                    std::cout << "degree " << st.degree << ": unknowns " << st.num_unknowns
                              << ", equations " << st.num_equations << ", solution dim "
                              << st.solution_dim << ", unit coeff forced zero: "
                              << (st.unit_coeff_forced_zero ? "yes" : "no") << "\n";
                if (run.feasible)
                    std::cout << "L(unit) can remain nonzero through degree " << *maxd << "\n";
                else
                    std::cout << "L(unit) forced to 0; obstruction at degree " << run.obstruction
                              << "\n";
            }
            if (!cert->empty()) {
                std::ofstream f(*cert);
                if (!f) throw std::runtime_error("cannot write certificate file " + *cert);
                f << run.certificate;
            }
        });

        auto* cv = coc->add_subcommand("verify", "check a candidate map against the equation");
        auto valg = std::make_shared<std::string>();
        auto vmap = std::make_shared<std::string>();
        auto vmaxd = std::make_shared<int>(5);
        cv->add_option("--algebra", *valg, "mindex or bck")
            ->required()
            ->check(CLI::IsMember({"mindex", "bck"}));
        cv->add_option("--map", *vmap, "bplus, zero, or mult-z0")
            ->required()
            ->check(CLI::IsMember({"bplus", "zero", "mult-z0"}));
        cv->add_option("--max-degree", *vmaxd, "largest source degree");
        cv->callback([=, &rc]() {
            bool ok = false;
            std::string witness;
            if (*valg == "bck") {
                if (*vmap == "mult-z0")
                    throw std::runtime_error("map mult-z0 is only defined on the multi-index side");
                auto L = (*vmap == "bplus") ? bck_bplus_map() : zero_map<Forest>();
                auto [good, bad] = verify_cocycle(bck_oracle(), L, *vmaxd);
                ok = good;
                if (bad) witness = format_forest(*bad);
            } else {
                if (*vmap == "bplus")
                    throw std::runtime_error("map bplus is only defined on the forest side");
                auto L = (*vmap == "zero") ? zero_map<MForest>() : mindex_mult_z0_map();
                auto [good, bad] = verify_cocycle(mindex_oracle(), L, *vmaxd);
                ok = good;
                if (bad) witness = format_mforest(*bad);
            }
            if (ok) {
                std::cout << "cocycle identity verified through degree " << *vmaxd << "\n";
            } else {
                std::cout << "cocycle identity fails; first failing source: " << witness << "\n";
                rc = 1;
            }
        });

        auto* ck = coc->add_subcommand("kernels", "kernels of the reduced-coproduct splits");
        auto kdeg = std::make_shared<int>(4);
        ck->add_option("--degree", *kdeg, "homogeneous degree");
        ck->callback([=, &rc]() {
            int d = *kdeg;
            const auto& basis = mforest_basis(d);
            int nb = static_cast<int>(basis.size());
            std::cout << "degree " << d << " basis, " << nb << " elements:";
            for (const auto& f : basis) std::cout << " " << format_mforest(f);
            std::cout << "\n";
            std::map<std::pair<int, int>, std::vector<SparseRow>> kernels;
            for (int mm = 1; mm <= d - 1; ++mm) {
                int nn = d - mm;
                auto ker = split_kernel(d, mm, nn);
                std::cout << "kernel of split (" << mm << "," << nn
                          << "): dimension " << ker.size() << "\n";
                kernels[{mm, nn}] = std::move(ker);
            }
            if (d != 4) return;
            bool all_ok = true;
            std::vector<SparseRow> v_span;
            for (int i = 1; i <= 4; ++i) v_span.push_back(coordinates(kernel4_v(i), basis));
            bool v_ok = span_equal(kernels[{3, 1}], v_span, nb);
            std::cout << "split (3,1) kernel matches the spanning set v1..v4: "
                      << (v_ok ? "yes" : "no") << "\n";
            all_ok = all_ok && v_ok && kernels[{3, 1}].size() == 4;

            auto meet = intersect_spans(kernels[{2, 2}], kernels[{3, 1}], nb);
            std::vector<SparseRow> w_span;
            for (int i = 1; i <= 2; ++i) w_span.push_back(coordinates(kernel4_w(i), basis));
            bool w_ok = span_equal(meet, w_span, nb);
            std::cout << "meet of splits (2,2) and (3,1): dimension " << meet.size()
                      << ", matches w1, w2: " << (w_ok ? "yes" : "no") << "\n";
            all_ok = all_ok && w_ok && meet.size() == 2;

            auto show = [&](const char* name, const MVec& v) {
                std::string got = format_mtens(reduced_coproduct_m(v));
                bool same = got == kernel4_reduced_display(name);
                std::cout << "reduced coproduct of " << name << ": " << got
                          << (same ? "  [matches]" : "  [MISMATCH]") << "\n";
                all_ok = all_ok && same;
            };
            show("w1", kernel4_w(1));
            show("w2", kernel4_w(2));
            show("nu_mu", kernel4_nu_mu());
            show("nu_lambda", kernel4_nu_lambda());
            if (!all_ok) rc = 1;
        });
    }

    // ---- props -----------------------------------------------------------
    auto* props = app.add_subcommand("props", "randomized identity suites");
    auto* pr = props->add_subcommand("run", "run one suite");
    props->require_subcommand(1);
    {
        auto suite = std::make_shared<std::string>();
        auto seed = std::make_shared<std::uint64_t>(1);
        auto cases = std::make_shared<int>(100);
        auto maxs = std::make_shared<int>(4);
        auto as_json = std::make_shared<bool>(false);
        pr->add_option("--suite", *suite, "graft, compose, hom, leibniz, transported, or phi")
            ->required()
            ->check(CLI::IsMember(suite_names()));
        pr->add_option("--seed", *seed, "base seed");
        pr->add_option("--cases", *cases, "number of cases");
        pr->add_option("--max-size", *maxs, "size bound on drawn inputs");
        pr->add_flag("--json", *as_json, "machine-readable per-case report");
        pr->callback([=, &rc]() {
            auto res = run_suite(*suite, *seed, *cases, *maxs);
            if (*as_json) {
                ordered_json out;
                out["suite"] = res.name;
                out["seed"] = *seed;
                out["cases"] = res.cases;
                out["failures"] = res.failures;
                out["record"] = ordered_json::array();
                for (const auto& c : res.record)
                    out["record"].push_back(
                        {{"case", c.index}, {"pass", c.pass}, {"inputs", c.inputs}});
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "suite " << res.name << ": " << (res.cases - res.failures) << "/"
                          << res.cases << " cases pass (seed " << *seed << ")\n";
                for (const auto& c : res.record)
                    if (!c.pass) std::cout << "  case " << c.index << " FAILED: " << c.inputs << "\n";
            }
            if (res.failures > 0) rc = 1;
        });
    }

    // ---- tables ----------------------------------------------------------
    auto* tab = app.add_subcommand("tables", "regenerate the reduced-coproduct tables and diff");
    tab->callback([&rc]() {
        int checked = 0, bad = 0;
        for (const auto& table : golden_tables()) {
            std::cout << table.name << "\n";
            for (const auto& row : table.rows) {
                MForest from_short = parse_mforest_shorthand(row.shorthand);
                MForest from_label = parse_mforest(row.label);
                std::string got =
                    format_mtens(reduced_component(from_label, row.left_degree, row.right_degree));
                bool ok = from_short == from_label && got == row.expected;
                ++checked;
                if (!ok) ++bad;
                std::cout << "  " << row.label << " (" << row.left_degree << ","
                          << row.right_degree << "): " << got << (ok ? "" : "  [MISMATCH, expected ")
                          << (ok ? "" : row.expected) << (ok ? "" : "]") << "\n";
            }
        }
        std::string worked = format_mtens(coproduct_m(parse_mforest(worked_coproduct_input())));
        bool worked_ok = worked == worked_coproduct_expected();
        ++checked;
        if (!worked_ok) ++bad;
        std::cout << "full coproduct of " << worked_coproduct_input() << ": " << worked
                  << (worked_ok ? "" : "  [MISMATCH]") << "\n";
        if (bad == 0) {
            std::cout << "all " << checked << " entries match the embedded references\n";
        } else {
            std::cout << bad << " of " << checked << " entries mismatch\n";
            rc = 1;
        }
    });

    // ---- rde -------------------------------------------------------------
    auto* rde = app.add_subcommand("rde", "driven-equation stepper");
    auto* demo = rde->add_subcommand("demo", "step a scalar equation with a built-in driver");
    rde->require_subcommand(1);
    {
        auto driver = std::make_shared<std::string>("poly");
        auto field = std::make_shared<std::string>("y");
        auto order = std::make_shared<int>(3);
        auto steps = std::make_shared<int>(8);
        auto y0 = std::make_shared<double>(1.0);
        auto as_json = std::make_shared<bool>(false);
        auto csv = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(0.0);
        demo->add_option("--driver", *driver, "poly or trig")
            ->check(CLI::IsMember({"poly", "trig"}));
        demo->add_option("--field", *field,
                         "semicolon-separated polynomials in y, one per driver component")
            ->required();
        demo->add_option("--order", *order, "expansion truncation");
        demo->add_option("--steps", *steps, "number of steps over [0,1]");
        demo->add_option("--y0", *y0, "initial value");
        demo->add_flag("--json", *as_json, "machine-readable output");
        demo->add_option("--csv", *csv, "write (s,t,forest,value) lift samples to this file");
        demo->add_option("--tol", *tol,
                         "when nonzero, check the window-splitting identity of the lift to this"
                         " tolerance before stepping; defects beyond it fail the run");
        demo->callback([=, &rc]() {
            Driver drv = (*driver == "poly") ? poly_driver() : trig_driver();
            VectorField f;
            {
                std::string rest = *field;
                while (true) {
                    auto cut = rest.find(';');
                    f.push_back({parse_poly1(rest.substr(0, cut))});
                    if (cut == std::string::npos) break;
                    rest = rest.substr(cut + 1);
                }
            }
            if (field_count(f) != drv.dim)
                throw std::runtime_error("driver has " + std::to_string(drv.dim) +
                                         " components; supply that many fields");
            RoughLift lift(drv);
            if (*tol > 0.0) {
                ChenReport chen = check_chen(lift, 0.0, 0.5, 1.0, std::min(*order, 3), *tol);
                if (!chen.pass) {
                    std::cerr << "window-splitting defect " << chen.max_defect
                              << " exceeds tolerance " << *tol << "\n";
                    rc = 1;
                    return;
                }
            }
            std::vector<double> y = {*y0};
            std::vector<std::pair<double, double>> traj = {{0.0, y[0]}};
            for (int i = 0; i < *steps; ++i) {
                double s = static_cast<double>(i) / *steps;
                double t = static_cast<double>(i + 1) / *steps;
                y = rde_step(y, lift, f, s, t, *order);
                traj.emplace_back(t, y[0]);
            }
            if (*as_json) {
                ordered_json out;
                out["driver"] = *driver;
                out["order"] = *order;
                out["steps"] = *steps;
                out["trajectory"] = ordered_json::array();
                for (const auto& [t, v] : traj) out["trajectory"].push_back({{"t", t}, {"y", v}});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& [t, v] : traj) std::printf("t = %-10.6f y = %.12f\n", t, v);
            }
            if (!csv->empty()) {
                std::ofstream cf(*csv);
                if (!cf) throw std::runtime_error("cannot write csv file " + *csv);
                cf << "s,t,forest,value\n";
                auto labels = label_vec(drv.dim);
                for (int i = 0; i < *steps; ++i) {
                    double s = static_cast<double>(i) / *steps;
                    double t = static_cast<double>(i + 1) / *steps;
                    for (int n = 1; n <= *order; ++n)
                        for (const auto& h : forests_of_size(n, labels)) {
                            char buf[64];
                            std::snprintf(buf, sizeof buf, "%.12g", lift.eval(s, t, h));
                            cf << s << "," << t << ",\"" << format_forest(h) << "\"," << buf
                               << "\n";
                        }
                }
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
