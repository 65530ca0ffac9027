#ifndef ARBOR_BCK_HPP
#define ARBOR_BCK_HPP

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "arbor/forest.hpp"
#include "arbor/lincomb.hpp"

namespace arbor {

/* Butcher-Connes-Kreimer Hopf algebra on decorated forests. The coproduct is
 * defined by the cocycle recursion
 *     Delta(1) = 1 (x) 1
 *     Delta(B+_a u) = (id (x) B+_a) Delta(u) + B+_a(u) (x) 1
 * extended multiplicatively over the forest product. An admissible-cut
 * enumeration lives alongside it as an independent cross-check. */

using ForestVec = LinComb<Forest>;
using ForestTens = Tensor2<Forest>;

inline Tree bplus(int label, const Forest& f) { return node(label, f); }

namespace detail {

inline ForestTens tensor_mul_forest(const ForestTens& t1, const ForestTens& t2) {
    ForestTens out;
    for (const auto& [k1, c1] : t1.terms())
        for (const auto& [k2, c2] : t2.terms())
            out.add({forest_mul(k1.first, k2.first), forest_mul(k1.second, k2.second)}, c1 * c2);
    return out;
}

}  // namespace detail

inline const ForestTens& coproduct_bck(const Forest& f) {
    static std::map<Forest, ForestTens> cache;
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    ForestTens out;
    out.add({Forest{}, Forest{}}, 1);
    for (const Tree& t : f) {
        const ForestTens& dch = coproduct_bck(t.children);
        ForestTens dt;
        for (const auto& [key, c] : dch.terms())
            dt.add({key.first, Forest{node(t.label, key.second)}}, c);
        dt.add({Forest{t}, Forest{}}, 1);
        out = detail::tensor_mul_forest(out, dt);
    }
    return cache.emplace(f, std::move(out)).first->second;
}

inline ForestTens reduced_coproduct_bck(const Forest& f) {
    ForestTens out = coproduct_bck(f);
    out.add({Forest{}, f}, -1);
    out.add({f, Forest{}}, -1);
    return out;
}

// ---------------------------------------------------------------------------
// admissible cuts: every edge subset with at most one cut on each root path

namespace detail {

inline std::vector<std::pair<Forest, Tree>> admissible_cuts(const Tree& t) {
    std::vector<std::pair<Forest, std::vector<Tree>>> states{{Forest{}, {}}};
    for (const Tree& c : t.children) {
        std::vector<std::pair<Forest, std::vector<Tree>>> next;
        auto subs = admissible_cuts(c);
        for (const auto& [pruned, kept] : states) {
            next.emplace_back(forest_mul(pruned, Forest{c}), kept);
            for (const auto& [p2, trunk2] : subs) {
                std::vector<Tree> kept2 = kept;
                kept2.push_back(trunk2);
                next.emplace_back(forest_mul(pruned, p2), std::move(kept2));
            }
        }
        states = std::move(next);
    }
    std::vector<std::pair<Forest, Tree>> out;
    out.reserve(states.size());
    for (auto& [p, kept] : states) out.emplace_back(std::move(p), node(t.label, std::move(kept)));
    return out;
}

}  // namespace detail

inline ForestTens coproduct_cuts(const Forest& f) {
    ForestTens out;
    out.add({Forest{}, Forest{}}, 1);
    for (const Tree& t : f) {
        ForestTens dt;
        for (const auto& [pruned, trunk] : detail::admissible_cuts(t))
            dt.add({pruned, Forest{trunk}}, 1);
        dt.add({Forest{t}, Forest{}}, 1);
        out = detail::tensor_mul_forest(out, dt);
    }
    return out;
}

// ---------------------------------------------------------------------------
// unshuffle: trees are primitive, multiplicative over the forest product

inline std::vector<std::tuple<Forest, Forest, Integer>> unshuffle_splits(const Forest& f) {
    std::vector<std::pair<Tree, int>> items;
    for (const Tree& t : f) {
        if (!items.empty() && items.back().first == t)
            ++items.back().second;
        else
            items.emplace_back(t, 1);
    }
    std::vector<std::tuple<Forest, Forest, Integer>> out;
    std::vector<int> take(items.size(), 0);
    while (true) {
        Forest lf, rf;
        Integer mult = 1;
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (int j = 0; j < take[i]; ++j) lf.push_back(items[i].first);
            for (int j = take[i]; j < items[i].second; ++j) rf.push_back(items[i].first);
            mult *= binomial(items[i].second, take[i]);
        }
        out.emplace_back(std::move(lf), std::move(rf), std::move(mult));
        std::size_t k = 0;
        while (k < items.size() && ++take[k] > items[k].second) take[k++] = 0;
        if (k == items.size()) break;
    }
    return out;
}

inline ForestTens unshuffle(const Forest& f) {
    ForestTens out;
    for (const auto& [a, b, m] : unshuffle_splits(f)) out.add({a, b}, Rational(m));
    return out;
}

// ---------------------------------------------------------------------------
// grafting

// one grafted tree per vertex of tau, duplicates kept
inline std::vector<Tree> graft_positions(const Tree& sigma, const Tree& tau) {
    std::vector<Tree> out;
    {
        Forest ch = tau.children;
        ch.push_back(sigma);
        out.push_back(node(tau.label, std::move(ch)));
    }
    for (std::size_t i = 0; i < tau.children.size(); ++i)
        for (const Tree& g : graft_positions(sigma, tau.children[i])) {
            Forest ch = tau.children;
            ch[i] = g;
            out.push_back(node(tau.label, std::move(ch)));
        }
    return out;
}

inline ForestVec graft(const Tree& sigma, const Tree& tau) {
    ForestVec out;
    for (const Tree& g : graft_positions(sigma, tau)) out.add(Forest{g}, 1);
    return out;
}

namespace detail {

// vertex address: index of the tree in the forest + child path from its root
using VertexPath = std::vector<int>;
using AttachMap = std::map<VertexPath, std::vector<Tree>>;

inline void collect_vertices(const Tree& t, int ti, VertexPath& path,
                             std::vector<std::pair<int, VertexPath>>& out) {
    out.emplace_back(ti, path);
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        path.push_back(static_cast<int>(i));
        collect_vertices(t.children[i], ti, path, out);
        path.pop_back();
    }
}

inline Tree attach_at(const Tree& t, const AttachMap& amap, VertexPath& path) {
    std::vector<Tree> ch;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        path.push_back(static_cast<int>(i));
        ch.push_back(attach_at(t.children[i], amap, path));
        path.pop_back();
    }
    if (auto it = amap.find(path); it != amap.end())
        for (const Tree& s : it->second) ch.push_back(s);
    return node(t.label, std::move(ch));
}

}  // namespace detail

/* Simultaneous grafting: one vertex of the original target forest is chosen
 * independently for each source tree, and all attachments happen at once. */
inline ForestVec simultaneous_graft(const Forest& src, const Forest& tgt) {
    ForestVec out;
    std::vector<std::pair<int, detail::VertexPath>> verts;
    {
        detail::VertexPath path;
        for (std::size_t ti = 0; ti < tgt.size(); ++ti)
            detail::collect_vertices(tgt[ti], static_cast<int>(ti), path, verts);
    }
    if (src.empty()) {
        out.add(tgt, 1);
        return out;
    }
    if (verts.empty()) return out;
    std::vector<std::size_t> choice(src.size(), 0);
    while (true) {
        std::map<int, detail::AttachMap> amaps;
        for (std::size_t s = 0; s < src.size(); ++s) {
            const auto& [ti, path] = verts[choice[s]];
            amaps[ti][path].push_back(src[s]);
        }
        Forest res;
        static const detail::AttachMap no_attach;
        for (std::size_t ti = 0; ti < tgt.size(); ++ti) {
            auto it = amaps.find(static_cast<int>(ti));
            detail::VertexPath path;
            res.push_back(detail::attach_at(tgt[ti], it == amaps.end() ? no_attach : it->second, path));
        }
        std::sort(res.begin(), res.end());
        out.add(res, 1);
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == verts.size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Grossman-Larson product: split off a bystander part, graft the rest

inline ForestVec gl_forest(const Forest& f1, const Forest& f2) {
    ForestVec out;
    for (const auto& [aside, grafted, mult] : unshuffle_splits(f1)) {
        const ForestVec planted = simultaneous_graft(grafted, f2);
        for (const auto& [g, c] : planted.terms())
            out.add(forest_mul(aside, g), Rational(mult) * c);
    }
    return out;
}

inline ForestVec gl_product(const ForestVec& v1, const ForestVec& v2) {
    ForestVec out;
    for (const auto& [f1, c1] : v1.terms())
        for (const auto& [f2, c2] : v2.terms()) {
            const ForestVec prod = gl_forest(f1, f2);
            for (const auto& [g, c] : prod.terms()) out.add(g, c1 * c2 * c);
        }
    return out;
}

// ---------------------------------------------------------------------------
// pairing: diagonal, weighted by the symmetry factor

inline Rational pairing_bck(const ForestVec& v1, const ForestVec& v2) {
    Rational out = 0;
    for (const auto& [f, c] : v1.terms()) {
        Rational c2 = v2.coeff(f);
        if (c2 != 0) out += c * c2 * Rational(symmetry_factor(f));
    }
    return out;
}

}  // namespace arbor

#endif
