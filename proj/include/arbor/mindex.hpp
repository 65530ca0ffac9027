#ifndef ARBOR_MINDEX_HPP
#define ARBOR_MINDEX_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arbor/bck.hpp"
#include "arbor/forest.hpp"
#include "arbor/lincomb.hpp"

namespace arbor {

/* Multi-index Hopf algebra. A multi-index is the exponent vector of a monomial
 * in the variables z_0, z_1, ...: entry k is the exponent of z_k, trailing
 * zeros trimmed so equal monomials have equal representations. The empty
 * vector is z^0 = 1. A multi-index forest is a sorted multiset of populated
 * multi-indices; its unit is the empty multiset.
 *
 * Degree |beta| = sum beta(k) counts variables; the population
 * [beta] = sum (1-k) beta(k) must equal 1 on every forest component. The
 * coproduct is
 *     Delta z^beta = z^0 (x) z^beta + z^beta (x) z^0
 *                  + sum (1/S_ext) (prod z^{beta_i}) (x) Dbar^n z^{beta-hat}
 * over unordered multisets {beta_1..beta_n} of populated nonzero
 * sub-multi-indices with componentwise sum <= beta, beta-hat the remainder,
 * extended multiplicatively to forests. Dbar is used division-free:
 *     Dbar z^b = sum_{k>=1, b(k)>=1} k (b(k-1)+1) z^{b - e_k + e_{k-1}},
 * the 1/b(k) of the raw formula cancelling against the derivative. */

using MIdx = std::vector<int>;     // invariant: no trailing zeros
using MForest = std::vector<MIdx>; // invariant: sorted
using MIdxVec = LinComb<MIdx>;
using MVec = LinComb<MForest>;
using MTens = Tensor2<MForest>;

inline MIdx midx_trim(MIdx b) {
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

inline MIdx midx_add(const MIdx& a, const MIdx& b) {
    MIdx out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return midx_trim(std::move(out));
}

inline std::optional<MIdx> midx_sub(const MIdx& a, const MIdx& b) {
    MIdx out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
        if (out[i] < 0) return std::nullopt;
    }
    return midx_trim(std::move(out));
}

inline int degree(const MIdx& b) {
    int out = 0;
    for (int v : b) out += v;
    return out;
}

inline int population(const MIdx& b) {
    int out = 0;
    for (std::size_t k = 0; k < b.size(); ++k) out += (1 - static_cast<int>(k)) * b[k];
    return out;
}

inline bool populated(const MIdx& b) { return population(b) == 1; }

inline int fdeg(const MForest& f) {
    int out = 0;
    for (const MIdx& b : f) out += degree(b);
    return out;
}

inline int fcomponents(const MForest& f) { return static_cast<int>(f.size()); }

inline MForest mforest_mul(const MForest& a, const MForest& b) {
    MForest out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// symmetry factors and pairing

inline Integer symmetry_m_single(const MIdx& b) {
    Integer out = 1;
    for (std::size_t k = 0; k < b.size(); ++k) {
        Integer fk = factorial(static_cast<int>(k));
        for (int v = 0; v < b[k]; ++v) out *= fk;
    }
    return out;
}

inline Integer symmetry_m(const MForest& f) {
    Integer out = 1;
    std::size_t i = 0;
    while (i < f.size()) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i]) ++j;
        int r = static_cast<int>(j - i);
        Integer s = symmetry_m_single(f[i]);
        out *= factorial(r);
        for (int p = 0; p < r; ++p) out *= s;
        i = j;
    }
    return out;
}

// extra factor counting permutations of equal forest components only
inline Integer symmetry_ext(const MForest& f) {
    Integer out = 1;
    std::size_t i = 0;
    while (i < f.size()) {
        std::size_t j = i;
        while (j < f.size() && f[j] == f[i]) ++j;
        out *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

inline Rational pairing_m(const MVec& v1, const MVec& v2) {
    Rational out = 0;
    for (const auto& [f, c] : v1.terms()) {
        Rational c2 = v2.coeff(f);
        if (c2 != 0) out += c * c2 * Rational(symmetry_m(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dbar

inline MIdxVec dbar(const MIdx& b) {
    MIdxVec out;
    for (std::size_t k = 1; k < b.size(); ++k) {
        if (b[k] < 1) continue;
        MIdx nb = b;
        nb[k] -= 1;
        nb[k - 1] += 1;
        out.add(midx_trim(std::move(nb)), Rational(static_cast<int>(k) * (b[k - 1] + 1)));
    }
    return out;
}

inline MIdxVec dbar_pow(const MIdx& b, int n) {
    MIdxVec v(b);
    for (int i = 0; i < n; ++i) {
        MIdxVec next;
        for (const auto& [x, c] : v.terms()) {
            const MIdxVec dx = dbar(x);
            for (const auto& [y, c2] : dx.terms()) next.add(y, c * c2);
        }
        v = std::move(next);
    }
    return v;
}

// ---------------------------------------------------------------------------
// coproduct

namespace detail {

inline std::vector<MIdx> populated_subs(const MIdx& b) {
    std::vector<MIdx> out;
    MIdx g(b.size(), 0);
    while (true) {
        MIdx t = midx_trim(g);
        if (!t.empty() && populated(t)) out.push_back(std::move(t));
        std::size_t k = 0;
        while (k < g.size() && ++g[k] > b[k]) g[k++] = 0;
        if (k == g.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// multisets {beta_1 <= ... <= beta_n} of populated parts with sum <= b, n >= 1
inline void populated_partitions(const MIdx& b,
                                 std::vector<std::pair<MForest, MIdx>>& out) {
    std::vector<MIdx> cands = populated_subs(b);
    MForest acc;
    auto rec = [&](auto&& self, const MIdx& rem, std::size_t start) -> void {
        for (std::size_t i = start; i < cands.size(); ++i) {
            auto r2 = midx_sub(rem, cands[i]);
            if (!r2) continue;
            acc.push_back(cands[i]);
            out.emplace_back(acc, *r2);
            self(self, *r2, i);
            acc.pop_back();
        }
    };
    rec(rec, b, 0);
}

inline MTens tensor_mul_m(const MTens& t1, const MTens& t2) {
    MTens out;
    for (const auto& [k1, c1] : t1.terms())
        for (const auto& [k2, c2] : t2.terms())
            out.add({mforest_mul(k1.first, k2.first), mforest_mul(k1.second, k2.second)}, c1 * c2);
    return out;
}

}  // namespace detail

inline MTens coproduct_m_single(const MIdx& b) {
    MTens out;
    out.add({MForest{}, MForest{b}}, 1);
    out.add({MForest{b}, MForest{}}, 1);
    std::vector<std::pair<MForest, MIdx>> parts;
    detail::populated_partitions(b, parts);
    for (const auto& [left, rem] : parts) {
        MIdxVec dv = dbar_pow(rem, static_cast<int>(left.size()));
        if (dv.empty()) continue;
        Rational inv_sext = Rational(1) / Rational(symmetry_ext(left));
        for (const auto& [rb, c] : dv.terms()) out.add({left, MForest{rb}}, c * inv_sext);
    }
    return out;
}

inline const MTens& coproduct_m(const MForest& f) {
    static std::map<MForest, MTens> cache;
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    MTens out;
    out.add({MForest{}, MForest{}}, 1);
    for (const MIdx& b : f) out = detail::tensor_mul_m(out, coproduct_m_single(b));
    return cache.emplace(f, std::move(out)).first->second;
}

inline MTens reduced_coproduct_m(const MForest& f) {
    MTens out = coproduct_m(f);
    out.add({MForest{}, f}, -1);
    out.add({f, MForest{}}, -1);
    return out;
}

inline MTens reduced_coproduct_m(const MVec& v) {
    MTens out;
    for (const auto& [f, c] : v.terms()) {
        MTens r = reduced_coproduct_m(f);
        r *= c;
        out += r;
    }
    return out;
}

// terms of the reduced coproduct with left degree m and right degree n
inline MTens reduced_component(const MForest& f, int m, int n) {
    MTens out;
    const MTens red = reduced_coproduct_m(f);
    for (const auto& [ab, c] : red.terms())
        if (fdeg(ab.first) == m && fdeg(ab.second) == n) out.add(ab, c);
    return out;
}

// ---------------------------------------------------------------------------
// graded basis

inline const std::vector<MIdx>& populated_singles(int d) {
    static std::map<int, std::vector<MIdx>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // multisets {k_1..k_d} with sum k_i = d-1 give populated beta of degree d
    std::vector<MIdx> out;
    MIdx counts;
    auto rec = [&](auto&& self, int slots, int rem, int maxk) -> void {
        if (slots == 0) {
            if (rem == 0) out.push_back(midx_trim(counts));
            return;
        }
        for (int k = std::min(maxk, rem); k >= 0; --k) {
            if (static_cast<std::size_t>(k) >= counts.size()) counts.resize(k + 1, 0);
            ++counts[k];
            self(self, slots - 1, rem - k, k);
            --counts[k];
        }
    };
    if (d >= 1) rec(rec, d, d - 1, d - 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return cache.emplace(d, std::move(out)).first->second;
}

inline const std::vector<MForest>& mforest_basis(int d) {
    static std::map<int, std::vector<MForest>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<MForest> out;
    if (d == 0) {
        out.push_back(MForest{});
    } else {
        MForest acc;
        auto rec = [&](auto&& self, int rem, int maxdeg) -> void {
            if (rem == 0) {
                MForest f = acc;
                std::sort(f.begin(), f.end());
                out.push_back(std::move(f));
                return;
            }
            for (int j = std::min(maxdeg, rem); j >= 1; --j)
                for (const MIdx& s : populated_singles(j)) {
                    if (!acc.empty() && j == degree(acc.back()) && s > acc.back()) continue;
                    acc.push_back(s);
                    self(self, rem - j, j);
                    acc.pop_back();
                }
        };
        rec(rec, d, d);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return cache.emplace(d, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// graded-dual product: <a *_M b, c> = <a (x) b, Delta c>

inline MVec star_m_forest(const MForest& a, const MForest& b) {
    MVec out;
    int dc = fdeg(a) + fdeg(b);
    for (const MForest& c : mforest_basis(dc)) {
        Rational cc = coproduct_m(c).coeff({a, b});
        if (cc != 0)
            out.add(c, cc * Rational(symmetry_m(a)) * Rational(symmetry_m(b)) /
                           Rational(symmetry_m(c)));
    }
    return out;
}

inline MVec star_m(const MVec& v1, const MVec& v2) {
    MVec out;
    for (const auto& [a, c1] : v1.terms())
        for (const auto& [b, c2] : v2.terms()) {
            const MVec prod = star_m_forest(a, b);
            for (const auto& [c, cc] : prod.terms()) out.add(c, c1 * c2 * cc);
        }
    return out;
}

// unshuffle on multi-index forests: components are primitive
inline std::vector<std::tuple<MForest, MForest, Integer>> unshuffle_splits_m(const MForest& f) {
    std::vector<std::pair<MIdx, int>> items;
    for (const MIdx& b : f) {
        if (!items.empty() && items.back().first == b)
            ++items.back().second;
        else
            items.emplace_back(b, 1);
    }
    std::vector<std::tuple<MForest, MForest, Integer>> out;
    std::vector<int> take(items.size(), 0);
    while (true) {
        MForest lf, rf;
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

// ---------------------------------------------------------------------------
// the forgetful morphism from trees: each vertex contributes z_{child count}

inline MIdx phi_tree(const Tree& t) {
    MIdx out(t.children.size() + 1, 0);
    out[t.children.size()] = 1;
    out = midx_trim(std::move(out));
    for (const Tree& c : t.children) out = midx_add(out, phi_tree(c));
    return out;
}

inline MForest phi(const Forest& f) {
    MForest out;
    for (const Tree& t : f) out.push_back(phi_tree(t));
    std::sort(out.begin(), out.end());
    return out;
}

// transpose under the weighted pairings: sum over preimage forests
inline ForestVec phi_transpose(const MForest& x) {
    ForestVec out;
    Rational sx(symmetry_m(x));
    for (const Forest& f : forests_of_size(fdeg(x)))
        if (phi(f) == x) out.add(f, sx / Rational(symmetry_factor(f)));
    return out;
}

// ---------------------------------------------------------------------------
// text form. Canonical spelling lists variables by descending index with
// exponents, components joined by "*": "z2z1z0^2", "z0*z1z0". The unit is "1".

inline std::string format_midx(const MIdx& b) {
    if (degree(b) == 0) return "1";
    std::string out;
    for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k) {
        if (b[k] == 0) continue;
        out += "z" + std::to_string(k);
        if (b[k] > 1) out += "^" + std::to_string(b[k]);
    }
    return out;
}

inline std::string format_mforest(const MForest& f) {
    if (f.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += "*";
        out += format_midx(f[i]);
    }
    return out;
}

namespace detail {

// letters of one component: (index, exponent) pairs in written order
inline std::vector<std::pair<int, int>> z_tokens(const std::string& s, std::size_t& pos) {
    std::vector<std::pair<int, int>> out;
    auto skip_ws = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start)
            throw std::invalid_argument("expected integer at position " + std::to_string(pos));
        return std::stoi(s.substr(start, pos - start));
    };
    skip_ws();
    while (pos < s.size() && s[pos] == 'z') {
        ++pos;
        int k = read_int();
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            e = read_int();
            if (e < 1) throw std::invalid_argument("exponent must be positive");
        }
        out.emplace_back(k, e);
        skip_ws();
    }
    return out;
}

inline MIdx midx_from_tokens(const std::vector<std::pair<int, int>>& toks) {
    MIdx b;
    for (const auto& [k, e] : toks) {
        if (static_cast<std::size_t>(k) >= b.size()) b.resize(k + 1, 0);
        b[k] += e;
    }
    return midx_trim(std::move(b));
}

}  // namespace detail

// Explicit grammar: components joined by "*", each a run of zK or zK^E tokens.
inline MForest parse_mforest(const std::string& s, bool require_populated = true) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos < s.size() && s[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != s.size()) throw std::invalid_argument("trailing input after unit");
        return MForest{};
    }
    MForest out;
    while (true) {
        auto toks = detail::z_tokens(s, pos);
        if (toks.empty())
            throw std::invalid_argument("expected z-token at position " + std::to_string(pos));
        MIdx b = detail::midx_from_tokens(toks);
        if (require_populated && !populated(b))
            throw std::invalid_argument("component " + format_midx(b) + " is not populated");
        out.push_back(std::move(b));
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos != s.size())
        throw std::invalid_argument("trailing input at position " + std::to_string(pos));
    std::sort(out.begin(), out.end());
    return out;
}

inline MIdx parse_midx(const std::string& s, bool require_populated = false) {
    MForest f = parse_mforest(s, false);
    if (f.empty()) return MIdx{};
    if (f.size() != 1) throw std::invalid_argument("expected a single multi-index");
    if (require_populated && !populated(f[0]))
        throw std::invalid_argument("multi-index is not populated");
    return f[0];
}

/* Shorthand: a bare letter string like "z0z1z0" with the component boundaries
 * omitted. A segmentation is valid when every segment is non-increasing in the
 * variable index and populated; the parse succeeds only if exactly one
 * segmentation is valid. */
inline MForest parse_mforest_shorthand(const std::string& s) {
    std::size_t pos = 0;
    auto toks = detail::z_tokens(s, pos);
    if (pos != s.size())
        throw std::invalid_argument("trailing input at position " + std::to_string(pos));
    if (toks.empty()) {
        std::size_t p2 = 0;
        while (p2 < s.size() && (s[p2] == ' ' || s[p2] == '\t')) ++p2;
        if (p2 < s.size() && s[p2] == '1') return MForest{};
        throw std::invalid_argument("expected z-letters");
    }
    std::vector<int> letters;
    for (const auto& [k, e] : toks)
        for (int i = 0; i < e; ++i) letters.push_back(k);

    std::vector<MForest> results;
    MForest acc;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (start == letters.size()) {
            MForest f = acc;
            std::sort(f.begin(), f.end());
            results.push_back(std::move(f));
            return;
        }
        MIdx b;
        for (std::size_t end = start; end < letters.size(); ++end) {
            if (end > start && letters[end] > letters[end - 1]) break;  // must be non-increasing
            int k = letters[end];
            if (static_cast<std::size_t>(k) >= b.size()) b.resize(k + 1, 0);
            ++b[k];
            if (population(b) == 1) {
                acc.push_back(midx_trim(b));
                self(self, end + 1);
                acc.pop_back();
            }
        }
    };
    rec(rec, 0);
    std::sort(results.begin(), results.end());
    results.erase(std::unique(results.begin(), results.end()), results.end());
    if (results.empty()) throw std::invalid_argument("no populated segmentation of " + s);
    if (results.size() > 1) throw std::invalid_argument("ambiguous shorthand " + s);
    return results[0];
}

}  // namespace arbor

#endif
