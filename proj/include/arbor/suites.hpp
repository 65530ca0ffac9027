#ifndef ARBOR_SUITES_HPP
#define ARBOR_SUITES_HPP

#include <string>
#include <vector>

#include "arbor/elem.hpp"
#include "arbor/printing.hpp"

namespace arbor {

/* Randomized identity suites.  Each case draws its inputs from a per-case
 * SplitMix64 stream so runs are reproducible from (seed, case index). */

inline Poly random_poly(SplitMix64& rng, int nvars, int maxdeg) {
    Poly out;
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    while (true) {
        Rational c = rng.small_rational(2, 1);
        if (c != 0) out.add_term(e, c);
        // odometer over exponent vectors with bounded total degree
        size_t i = 0;
        for (; i < e.size(); ++i) {
            e[i] += 1;
            int total = 0;
            for (int v : e) total += v;
            if (total <= maxdeg) break;
            e[i] = 0;
        }
        if (i == e.size()) break;
    }
    return out;
}

inline std::vector<Poly> random_tuple(SplitMix64& rng, int nvars, int maxdeg, int count) {
    std::vector<Poly> out;
    for (int i = 0; i < count; ++i) out.push_back(random_poly(rng, nvars, maxdeg));
    return out;
}

inline VectorField random_field(SplitMix64& rng, int d, int m, int maxdeg) {
    VectorField f(static_cast<size_t>(d));
    for (auto& comp : f) comp = random_tuple(rng, m, maxdeg, m);
    return f;
}

inline std::vector<Rational> random_point(SplitMix64& rng, int m) {
    std::vector<Rational> y;
    for (int i = 0; i < m; ++i) y.push_back(rng.small_rational(2, 2));
    return y;
}

inline Tree random_tree(SplitMix64& rng, int max_size, const std::vector<int>& labels) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
    const auto& pool = trees_of_size(n, labels);
    return pool[rng.below(pool.size())];
}

inline Forest random_forest(SplitMix64& rng, int max_size, const std::vector<int>& labels) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size)));
    const auto& pool = forests_of_size(n, labels);
    return pool[rng.below(pool.size())];
}

inline MForest random_mforest(SplitMix64& rng, int max_degree) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
    const auto& pool = mforest_basis(n);
    return pool[rng.below(pool.size())];
}

struct SuiteCase {
    int index = 0;
    bool pass = false;
    std::string inputs;  // printable description of the drawn case
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<SuiteCase> record;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"graft",   "compose",     "hom",
                                                   "leibniz", "transported", "phi"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t seed, int cases,
                             int max_size) {
    SuiteResult res;
    res.name = name;
    res.cases = cases;
    auto two = label_vec(2);
    auto one = label_vec(1);
    for (int i = 0; i < cases; ++i) {
        SplitMix64 rng(seed * 1000003ull + static_cast<std::uint64_t>(i));
        SuiteCase sc;
        sc.index = i;
        if (name == "graft") {
            Forest sigma = random_forest(rng, max_size, two);
            Tree tau = random_tree(rng, max_size, two);
            VectorField f = random_field(rng, 2, 2, 2);
            auto y = random_point(rng, 2);
            sc.pass = check_graft_morphism(sigma, tau, f, y);
            sc.inputs = "sigma=" + format_forest(sigma) + " tau=" + format_tree(tau);
        } else if (name == "compose") {
            VectorField f = {{random_poly(rng, 1, 2)}};
            auto y = random_point(rng, 1);
            TreeCharacter z1 = random_tree_character(rng, 4, one);
            TreeCharacter z2 = random_tree_character(rng, 4, one);
            bool bck_ok = check_composition_bck(z1, z2, f, y, 4);
            MCharacter m1 = random_m_character(rng, 4);
            MCharacter m2 = random_m_character(rng, 4);
            bool m_ok = check_composition_m(m1, m2, f[0][0], y[0], 4);
            sc.pass = bck_ok && m_ok;
            sc.inputs = std::string("f=") + format_poly(f[0][0], {"y"}) +
                        " y=" + to_string(y[0]) + (bck_ok ? "" : " [forest side failed]") +
                        (m_ok ? "" : " [multi-index side failed]");
        } else if (name == "hom") {
            Forest u = random_forest(rng, std::min(max_size, 3), two);
            Forest v = random_forest(rng, std::min(max_size, 3), two);
            VectorField f = random_field(rng, 2, 2, 2);
            auto psi = random_tuple(rng, 2, 2, 2);
            auto y = random_point(rng, 2);
            sc.pass = check_homomorphism(u, v, f, psi, y);
            sc.inputs = "u=" + format_forest(u) + " v=" + format_forest(v);
        } else if (name == "leibniz") {
            Forest u = random_forest(rng, max_size, two);
            VectorField f = random_field(rng, 2, 2, 2);
            auto phi = random_tuple(rng, 2, 2, 2);
            auto psi = random_tuple(rng, 2, 2, 2);
            auto y = random_point(rng, 2);
            sc.pass = check_leibniz(u, f, phi, psi, y);
            sc.inputs = "u=" + format_forest(u);
        } else if (name == "transported") {
            MForest u = random_mforest(rng, std::min(max_size, 3));
            MForest v = random_mforest(rng, std::min(max_size, 3));
            Poly f = random_poly(rng, 1, 4);
            Poly phi = random_poly(rng, 1, 3);
            Poly psi = random_poly(rng, 1, 3);
            Rational y = rng.small_rational(2, 2);
            bool prod_ok = check_transported_product(u, v, f, phi, y);
            bool leib_ok = check_transported_leibniz(u, f, phi, psi, y);
            sc.pass = prod_ok && leib_ok;
            sc.inputs = "u=" + format_mforest(u) + " v=" + format_mforest(v) +
                        (prod_ok ? "" : " [product identity failed]") +
                        (leib_ok ? "" : " [split identity failed]");
        } else if (name == "phi") {
            Tree tau = random_tree(rng, std::min(max_size, 4), one);
            Poly f = random_poly(rng, 1, 4);
            Rational y = rng.small_rational(2, 2);
            sc.pass = check_phi_intertwines(tau, f, y);
            sc.inputs = "tau=" + format_tree(tau) + " f=" + format_poly(f, {"y"});
        } else {
            throw std::invalid_argument("run_suite: unknown suite " + name);
        }
        if (!sc.pass) ++res.failures;
        res.record.push_back(std::move(sc));
    }
    return res;
}

}  // namespace arbor

#endif
