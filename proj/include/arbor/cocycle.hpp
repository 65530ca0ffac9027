#ifndef ARBOR_COCYCLE_HPP
#define ARBOR_COCYCLE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arbor/bck.hpp"
#include "arbor/lincomb.hpp"
#include "arbor/linalg.hpp"
#include "arbor/mindex.hpp"

namespace arbor {

/* Degree-by-degree solver for the cocycle equation
 *     Delta L(u) = (id (x) L) Delta(u) + L(u) (x) 1
 * over a graded Hopf algebra given by an oracle. Unknowns are the coefficients
 * x[(u, t)] of L(u) on the full degree-(|u|+1) basis; the equations for source
 * degree d are linear in the unknowns of degrees <= d, so the system grows by
 * stages and every stage's report describes the accumulated system. */

template <class E>
struct HopfOracle {
    std::string name;
    E unit;
    std::function<std::vector<E>(int)> basis;  // canonical degree-d basis
    std::function<Tensor2<E>(const E&)> coproduct;
    std::function<int(const E&)> degree;
    std::function<std::string(const E&)> format;
};

struct CocycleStage {
    int degree = 0;
    long num_unknowns = 0;   // columns allocated through this stage
    long num_equations = 0;  // nonzero rows contributed by this stage alone
    long solution_dim = 0;
    bool unit_coeff_forced_zero = false;
};

template <class E>
struct CocycleReport {
    std::vector<CocycleStage> stages;
    bool unit_nonzero_feasible = true;
    int obstruction_degree = -1;  // first stage at which L(unit) is forced to 0

    std::vector<std::pair<E, E>> unknowns;        // column -> (source, target)
    std::vector<std::tuple<E, E, E>> equations;   // row -> (source, key left, key right)
    std::vector<SparseRow> kernel_basis;          // general solution of the final system
    std::vector<int> unit_columns;                // columns of the unit source
    SparseRow obstruction_witness;                // row combination equal to e_{unit column 0}
};

template <class E>
CocycleReport<E> cocycle_solve(const HopfOracle<E>& H, int max_degree) {
    CocycleReport<E> rep;
    std::map<std::pair<E, E>, int> col_of;
    Rref rref(0, true);

    auto column = [&](const E& u, const E& t) { return col_of.at(std::make_pair(u, t)); };

    for (int d = 0; d <= max_degree; ++d) {
        std::vector<E> sources = H.basis(d);
        std::vector<E> targets = H.basis(d + 1);
        for (const E& u : sources)
            for (const E& t : targets) {
                col_of.emplace(std::make_pair(u, t), static_cast<int>(rep.unknowns.size()));
                if (d == 0) rep.unit_columns.push_back(static_cast<int>(rep.unknowns.size()));
                rep.unknowns.emplace_back(u, t);
            }
        rref.extend_cols(static_cast<int>(rep.unknowns.size()));

        for (const E& u : sources) {
            std::map<std::pair<E, E>, SparseRow> coeffs;
            for (const E& t : targets) {
                int col = column(u, t);
                const Tensor2<E> dt = H.coproduct(t);
                for (const auto& [key, c] : dt.terms()) coeffs[key][col] += c;
                coeffs[std::make_pair(t, H.unit)][col] -= 1;
            }
            const Tensor2<E> du = H.coproduct(u);
            for (const auto& [key, c] : du.terms()) {
                const auto& [a, b] = key;
                for (const E& t : H.basis(H.degree(b) + 1))
                    coeffs[std::make_pair(a, t)][column(b, t)] -= c;
            }
            for (auto& [key, row] : coeffs) {
                for (auto it = row.begin(); it != row.end();)
                    it = (it->second == 0) ? row.erase(it) : std::next(it);
                if (row.empty()) continue;
                rep.equations.emplace_back(u, key.first, key.second);
                rref.add_row(row);
            }
        }

        CocycleStage st;
        st.degree = d;
        st.num_unknowns = static_cast<long>(rep.unknowns.size());
        st.num_equations = rref.rows_added();
        for (const auto& prev : rep.stages) st.num_equations -= prev.num_equations;
        st.solution_dim = st.num_unknowns - rref.rank();
        st.unit_coeff_forced_zero = true;
        for (int c : rep.unit_columns)
            if (!rref.forced_zero(c)) st.unit_coeff_forced_zero = false;
        if (st.unit_coeff_forced_zero && rep.obstruction_degree < 0)
            rep.obstruction_degree = d;
        rep.stages.push_back(st);
    }

    rep.unit_nonzero_feasible = !rep.stages.back().unit_coeff_forced_zero;
    if (rep.unit_nonzero_feasible)
        rep.kernel_basis = rref.kernel();
    else
        rep.obstruction_witness = rref.witness_for(rep.unit_columns.front());
    return rep;
}

// ---------------------------------------------------------------------------
// direct verification of a candidate map on every basis element

template <class E>
std::pair<bool, std::optional<E>> verify_cocycle(const HopfOracle<E>& H,
                                                 const std::function<LinComb<E>(const E&)>& L,
                                                 int max_degree) {
    for (int d = 0; d <= max_degree; ++d)
        for (const E& u : H.basis(d)) {
            const LinComb<E> lu = L(u);
            Tensor2<E> lhs;
            for (const auto& [t, c] : lu.terms()) {
                Tensor2<E> dt = H.coproduct(t);
                dt *= c;
                lhs += dt;
            }
            Tensor2<E> rhs;
            const Tensor2<E> du = H.coproduct(u);
            for (const auto& [key, c] : du.terms()) {
                const LinComb<E> lr = L(key.second);
                for (const auto& [t, c2] : lr.terms()) rhs.add({key.first, t}, c * c2);
            }
            for (const auto& [t, c] : lu.terms()) rhs.add({t, H.unit}, c);
            if (lhs != rhs) return {false, u};
        }
    return {true, std::nullopt};
}

/* The morphism determined by a cocycle: unit to unit, multiplicative over the
 * forest product, and Lambda(B+_a f) = L_a(Lambda f). */
template <class E>
LinComb<E> lambda_from_cocycle(const E& unit, const std::function<E(const E&, const E&)>& product,
                               const std::function<LinComb<E>(int, const E&)>& L,
                               const Forest& f) {
    LinComb<E> out(unit);
    for (const Tree& t : f) {
        LinComb<E> lch = lambda_from_cocycle(unit, product, L, t.children);
        LinComb<E> lt;
        for (const auto& [e, c] : lch.terms()) {
            LinComb<E> img = L(t.label, e);
            img *= c;
            lt += img;
        }
        LinComb<E> next;
        for (const auto& [a, ca] : out.terms())
            for (const auto& [b, cb] : lt.terms()) next.add(product(a, b), ca * cb);
        out = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// ready-made oracles

inline HopfOracle<MForest> mindex_oracle() {
    HopfOracle<MForest> H;
    H.name = "mindex";
    H.unit = MForest{};
    H.basis = [](int d) { return mforest_basis(d); };
    H.coproduct = [](const MForest& f) { return coproduct_m(f); };
    H.degree = [](const MForest& f) { return fdeg(f); };
    H.format = [](const MForest& f) { return format_mforest(f); };
    return H;
}

inline HopfOracle<Forest> bck_oracle(std::vector<int> labels = {0}) {
    HopfOracle<Forest> H;
    H.name = "bck";
    H.unit = Forest{};
    H.basis = [labels](int d) { return forests_of_size(d, labels); };
    H.coproduct = [](const Forest& f) { return coproduct_bck(f); };
    H.degree = [](const Forest& f) { return forest_size(f); };
    H.format = [](const Forest& f) { return format_forest(f); };
    return H;
}

// named candidate maps for the verification subcommand
inline std::function<LinComb<Forest>(const Forest&)> bck_bplus_map(int label = 0) {
    return [label](const Forest& u) { return LinComb<Forest>(Forest{bplus(label, u)}); };
}

template <class E>
std::function<LinComb<E>(const E&)> zero_map() {
    return [](const E&) { return LinComb<E>(); };
}

// multiplication by the primitive z_0; fails the cocycle equation in degree 1
inline std::function<LinComb<MForest>(const MForest&)> mindex_mult_z0_map() {
    return [](const MForest& u) {
        return LinComb<MForest>(mforest_mul(u, MForest{MIdx{1}}));
    };
}

}  // namespace arbor

#endif
