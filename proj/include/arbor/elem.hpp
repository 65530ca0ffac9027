#ifndef ARBOR_ELEM_HPP
#define ARBOR_ELEM_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "arbor/bck.hpp"
#include "arbor/mindex.hpp"
#include "arbor/poly.hpp"

namespace arbor {

/* Truncated power series in one grading parameter h, kept to a fixed order.
 * Arithmetic drops every coefficient beyond that order. */
struct Jet {
    std::vector<Rational> a;  // a[k] multiplies h^k

    Jet() : a(1, Rational(0)) {}
    explicit Jet(int order, const Rational& c0 = Rational(0))
        : a(static_cast<size_t>(order) + 1, Rational(0)) {
        a[0] = c0;
    }

    int order() const { return static_cast<int>(a.size()) - 1; }

    Jet& operator+=(const Jet& o) {
        if (o.a.size() != a.size()) throw std::invalid_argument("Jet: order mismatch");
        for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
        return *this;
    }

    Jet operator*(const Jet& o) const {
        if (o.a.size() != a.size()) throw std::invalid_argument("Jet: order mismatch");
        Jet r(order());
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; i + j < a.size(); ++j) r.a[i + j] += a[i] * o.a[j];
        }
        return r;
    }

    Jet& operator*=(const Rational& c) {
        for (auto& v : a) v *= c;
        return *this;
    }

    /* Multiplication by h^k. */
    Jet shifted(int k) const {
        Jet r(order());
        for (size_t i = 0; i + static_cast<size_t>(k) < a.size(); ++i)
            r.a[i + static_cast<size_t>(k)] = a[i];
        return r;
    }

    bool operator==(const Jet&) const = default;
};

inline std::vector<Jet> jet_point(const std::vector<Rational>& y, int order) {
    std::vector<Jet> out;
    out.reserve(y.size());
    for (const auto& v : y) out.emplace_back(order, v);
    return out;
}

/* A family of d polynomial vector fields on R^m: f[alpha][b] is component b
 * of field alpha, a polynomial in the coordinates x0..x_{m-1}. */
using VectorField = std::vector<std::vector<Poly>>;

inline int field_count(const VectorField& f) { return static_cast<int>(f.size()); }

inline int space_dim(const VectorField& f) {
    if (f.empty()) throw std::invalid_argument("VectorField: no fields");
    return static_cast<int>(f[0].size());
}

namespace detail {

/* Enumerate all assignments in {0..m-1}^n. */
inline bool advance_digits(std::vector<int>& digits, int m) {
    for (size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < m) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace detail

/* Elementary differential of a single tree, one polynomial per component.
 * A vertex with label alpha and children t1..tk contributes the k-th
 * derivative of f_alpha contracted against the children's differentials. */
inline std::vector<Poly> upsilon_poly(const Tree& t, const VectorField& f) {
    int d = field_count(f);
    int m = space_dim(f);
    if (t.label < 0 || t.label >= d)
        throw std::invalid_argument("upsilon_poly: vertex label outside field family");
    std::vector<std::vector<Poly>> kid;
    kid.reserve(t.children.size());
    for (const auto& c : t.children) kid.push_back(upsilon_poly(c, f));
    int k = static_cast<int>(t.children.size());
    std::vector<Poly> out(static_cast<size_t>(m));
    for (int b = 0; b < m; ++b) {
        std::vector<int> digits(static_cast<size_t>(k), 0);
        do {
            Poly p = f[static_cast<size_t>(t.label)][static_cast<size_t>(b)];
            for (int i = 0; i < k; ++i) p = p.partial(digits[static_cast<size_t>(i)]);
            if (p.is_zero()) continue;
            for (int i = 0; i < k; ++i)
                p = p * kid[static_cast<size_t>(i)][static_cast<size_t>(digits[static_cast<size_t>(i)])];
            out[static_cast<size_t>(b)] += p;
        } while (k > 0 && detail::advance_digits(digits, m));
    }
    return out;
}

/* Forest acting as a differential operator on an m-tuple of test polynomials:
 * the empty forest acts as the identity, and each extra tree contracts one
 * more derivative of psi. */
inline std::vector<Poly> upsilon_op_poly(const Forest& u, const VectorField& f,
                                         const std::vector<Poly>& psi) {
    int m = space_dim(f);
    if (static_cast<int>(psi.size()) != m)
        throw std::invalid_argument("upsilon_op_poly: test tuple has wrong arity");
    int n = static_cast<int>(u.size());
    std::vector<std::vector<Poly>> kid;
    kid.reserve(u.size());
    for (const auto& t : u) kid.push_back(upsilon_poly(t, f));
    std::vector<Poly> out(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
        std::vector<int> digits(static_cast<size_t>(n), 0);
        do {
            Poly p = psi[static_cast<size_t>(a)];
            for (int i = 0; i < n; ++i) p = p.partial(digits[static_cast<size_t>(i)]);
            if (p.is_zero()) continue;
            for (int i = 0; i < n; ++i)
                p = p * kid[static_cast<size_t>(i)][static_cast<size_t>(digits[static_cast<size_t>(i)])];
            out[static_cast<size_t>(a)] += p;
        } while (n > 0 && detail::advance_digits(digits, m));
    }
    return out;
}

/* Pointwise elementary differential of a forest: nonzero only on single
 * trees, zero on the empty forest and on products. */
inline std::vector<Rational> upsilon(const Forest& u, const VectorField& f,
                                     const std::vector<Rational>& y) {
    int m = space_dim(f);
    if (static_cast<int>(y.size()) != m)
        throw std::invalid_argument("upsilon: point has wrong dimension");
    std::vector<Rational> out(static_cast<size_t>(m), Rational(0));
    if (u.size() != 1) return out;
    auto polys = upsilon_poly(u[0], f);
    for (int b = 0; b < m; ++b) out[static_cast<size_t>(b)] = polys[static_cast<size_t>(b)].eval(y);
    return out;
}

inline std::vector<Rational> upsilon_vf(const Forest& u, const VectorField& f,
                                        const std::vector<Poly>& psi,
                                        const std::vector<Rational>& y) {
    auto polys = upsilon_op_poly(u, f, psi);
    std::vector<Rational> out(polys.size());
    for (size_t b = 0; b < polys.size(); ++b) out[b] = polys[b].eval(y);
    return out;
}

inline std::vector<Rational> upsilon_vf_lin(const ForestVec& v, const VectorField& f,
                                            const std::vector<Poly>& psi,
                                            const std::vector<Rational>& y) {
    std::vector<Rational> out(static_cast<size_t>(space_dim(f)), Rational(0));
    for (const auto& [g, c] : v.terms()) {
        auto vals = upsilon_vf(g, f, psi, y);
        for (size_t b = 0; b < out.size(); ++b) out[b] += c * vals[b];
    }
    return out;
}

/* Multi-index analogues in one scalar dimension.  f is a polynomial in x0,
 * a single component beta contributes prod_k (f^(k))^{beta(k)}, and a forest
 * with n components differentiates the test function n times. */
inline Poly upsilon_m_poly(const MIdx& b, const Poly& f) {
    Poly out = Poly::constant(1);
    for (size_t k = 0; k < b.size(); ++k)
        for (int r = 0; r < b[k]; ++r) out = out * poly_deriv(f, 0, static_cast<int>(k));
    return out;
}

inline Rational upsilon_m(const MForest& x, const Poly& f, const Rational& y) {
    Rational out = 1;
    for (const auto& b : x) out *= upsilon_m_poly(b, f).eval({y});
    return out;
}

inline Poly upsilon_m_op_poly(const MForest& x, const Poly& f, const Poly& phi) {
    Poly out = poly_deriv(phi, 0, static_cast<int>(x.size()));
    for (const auto& b : x) out = out * upsilon_m_poly(b, f);
    return out;
}

inline Rational upsilon_m_vf(const MForest& x, const Poly& f, const Poly& phi,
                             const Rational& y) {
    return upsilon_m_op_poly(x, f, phi).eval({y});
}

/* Multiplicative functionals on forests, determined by their tree values;
 * absent trees count as zero, the empty forest maps to one. */
struct TreeCharacter {
    std::map<Tree, Rational> values;

    Rational operator()(const Tree& t) const {
        auto it = values.find(t);
        return it == values.end() ? Rational(0) : it->second;
    }
    Rational operator()(const Forest& u) const {
        Rational r = 1;
        for (const auto& t : u) r *= (*this)(t);
        return r;
    }
};

inline Rational convolve_bck(const TreeCharacter& z1, const TreeCharacter& z2,
                             const Forest& h) {
    Rational out = 0;
    for (const auto& [ab, c] : coproduct_bck(h).terms())
        out += c * z1(ab.first) * z2(ab.second);
    return out;
}

struct MCharacter {
    std::map<MIdx, Rational> values;

    Rational operator()(const MIdx& b) const {
        auto it = values.find(b);
        return it == values.end() ? Rational(0) : it->second;
    }
    Rational operator()(const MForest& x) const {
        Rational r = 1;
        for (const auto& b : x) r *= (*this)(b);
        return r;
    }
};

inline Rational convolve_m(const MCharacter& z1, const MCharacter& z2, const MForest& x) {
    Rational out = 0;
    for (const auto& [ab, c] : coproduct_m(x).terms())
        out += c * z1(ab.first) * z2(ab.second);
    return out;
}

inline std::vector<int> label_vec(int d) {
    std::vector<int> out;
    for (int i = 0; i < d; ++i) out.push_back(i);
    return out;
}

/* Series expansion indexed by decorated trees, truncated at a tree size. */
inline std::vector<Rational> bseries(const std::vector<Rational>& y, const TreeCharacter& z,
                                     const VectorField& f, int order) {
    auto labels = label_vec(field_count(f));
    std::vector<Rational> out = y;
    for (int n = 1; n <= order; ++n)
        for (const auto& t : trees_of_size(n, labels)) {
            Rational w = z(t);
            if (w == 0) continue;
            w /= Rational(symmetry_factor(t));
            auto vals = upsilon(forest_of(t), f, y);
            for (size_t b = 0; b < out.size(); ++b) out[b] += w * vals[b];
        }
    return out;
}

/* Same series with the tree size tracked as a power of the grading
 * parameter, so compositions can be compared order by order. */
inline std::vector<Jet> bseries_jet(const std::vector<Jet>& y, const TreeCharacter& z,
                                    const VectorField& f, int order) {
    auto labels = label_vec(field_count(f));
    int jorder = y.empty() ? 0 : y[0].order();
    Jet zero(jorder), one(jorder, 1);
    std::vector<Jet> out = y;
    for (int n = 1; n <= order && n <= jorder; ++n)
        for (const auto& t : trees_of_size(n, labels)) {
            Rational w = z(t);
            if (w == 0) continue;
            w /= Rational(symmetry_factor(t));
            auto polys = upsilon_poly(t, f);
            for (size_t b = 0; b < out.size(); ++b) {
                Jet term = polys[b].eval<Jet>(y, zero, one).shifted(n);
                term *= w;
                out[b] += term;
            }
        }
    return out;
}

/* Scalar series indexed by populated single multi-indices. */
inline Rational bseries_m(const Rational& y, const MCharacter& z, const Poly& f, int order) {
    Rational out = y;
    for (int n = 1; n <= order; ++n)
        for (const auto& b : populated_singles(n)) {
            Rational w = z(b);
            if (w == 0) continue;
            w /= Rational(symmetry_m_single(b));
            out += w * upsilon_m_poly(b, f).eval({y});
        }
    return out;
}

inline Jet bseries_m_jet(const Jet& y, const MCharacter& z, const Poly& f, int order) {
    int jorder = y.order();
    Jet zero(jorder), one(jorder, 1);
    Jet out = y;
    std::vector<Jet> pt = {y};
    for (int n = 1; n <= order && n <= jorder; ++n)
        for (const auto& b : populated_singles(n)) {
            Rational w = z(b);
            if (w == 0) continue;
            w /= Rational(symmetry_m_single(b));
            Jet term = upsilon_m_poly(b, f).eval<Jet>(pt, zero, one).shifted(n);
            term *= w;
            out += term;
        }
    return out;
}

/* Identity checks used by the randomized property suites.  Each check
 * evaluates both sides exactly and compares. */

/* Grafting a forest onto a tree matches the derivative expansion of the
 * tree's differential against the forest's differentials. */
inline bool check_graft_morphism(const Forest& sigma, const Tree& tau, const VectorField& f,
                                 const std::vector<Rational>& y) {
    int m = space_dim(f);
    auto grafted = simultaneous_graft(sigma, forest_of(tau));
    std::vector<Rational> lhs(static_cast<size_t>(m), Rational(0));
    for (const auto& [g, c] : grafted.terms()) {
        auto vals = upsilon(g, f, y);
        for (int b = 0; b < m; ++b) lhs[static_cast<size_t>(b)] += c * vals[static_cast<size_t>(b)];
    }
    auto rhs = upsilon_vf(sigma, f, upsilon_poly(tau, f), y);
    return lhs == rhs;
}

/* The forest product transported through upsilon composes the operators. */
inline bool check_homomorphism(const Forest& u, const Forest& v, const VectorField& f,
                               const std::vector<Poly>& psi, const std::vector<Rational>& y) {
    auto lhs = upsilon_vf_lin(gl_forest(u, v), f, psi, y);
    auto rhs = upsilon_vf(u, f, upsilon_op_poly(v, f, psi), y);
    return lhs == rhs;
}

/* Deconcatenation with multiplicities against the product of test functions. */
inline bool check_leibniz(const Forest& u, const VectorField& f, const std::vector<Poly>& phi,
                          const std::vector<Poly>& psi, const std::vector<Rational>& y) {
    int m = space_dim(f);
    std::vector<Poly> prod(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a)
        prod[static_cast<size_t>(a)] = phi[static_cast<size_t>(a)] * psi[static_cast<size_t>(a)];
    auto rhs = upsilon_vf(u, f, prod, y);
    std::vector<Rational> lhs(static_cast<size_t>(m), Rational(0));
    for (const auto& [left, right, mult] : unshuffle_splits(u)) {
        auto lv = upsilon_vf(left, f, phi, y);
        auto rv = upsilon_vf(right, f, psi, y);
        for (int a = 0; a < m; ++a)
            lhs[static_cast<size_t>(a)] += Rational(mult) * lv[static_cast<size_t>(a)] * rv[static_cast<size_t>(a)];
    }
    return lhs == rhs;
}

/* Composition law: running one series from the endpoint of another equals
 * the single series of the convolution character. */
inline bool check_composition_bck(const TreeCharacter& z1, const TreeCharacter& z2,
                                  const VectorField& f, const std::vector<Rational>& y,
                                  int order) {
    auto labels = label_vec(field_count(f));
    auto start = jet_point(y, order);
    auto inner = bseries_jet(start, z1, f, order);
    auto lhs = bseries_jet(inner, z2, f, order);
    TreeCharacter z12;
    for (int n = 1; n <= order; ++n)
        for (const auto& t : trees_of_size(n, labels))
            z12.values[t] = convolve_bck(z1, z2, forest_of(t));
    auto rhs = bseries_jet(start, z12, f, order);
    return lhs == rhs;
}

inline bool check_composition_m(const MCharacter& z1, const MCharacter& z2, const Poly& f,
                                const Rational& y, int order) {
    Jet start(order, y);
    Jet inner = bseries_m_jet(start, z1, f, order);
    Jet lhs = bseries_m_jet(inner, z2, f, order);
    MCharacter z12;
    for (int n = 1; n <= order; ++n)
        for (const auto& b : populated_singles(n))
            z12.values[b] = convolve_m(z1, z2, MForest{b});
    Jet rhs = bseries_m_jet(start, z12, f, order);
    return lhs == rhs;
}

/* Transported product identity in the scalar multi-index picture. */
inline bool check_transported_product(const MForest& u, const MForest& v, const Poly& f,
                                      const Poly& phi, const Rational& y) {
    MVec prod = star_m_forest(u, v);
    Rational lhs = 0;
    for (const auto& [g, c] : prod.terms()) lhs += c * upsilon_m_vf(g, f, phi, y);
    Rational rhs = upsilon_m_op_poly(u, f, upsilon_m_op_poly(v, f, phi)).eval({y});
    return lhs == rhs;
}

/* Transported deconcatenation identity in the scalar multi-index picture. */
inline bool check_transported_leibniz(const MForest& u, const Poly& f, const Poly& phi,
                                      const Poly& psi, const Rational& y) {
    Rational rhs = upsilon_m_vf(u, f, phi * psi, y);
    Rational lhs = 0;
    for (const auto& [left, right, mult] : unshuffle_splits_m(u))
        lhs += Rational(mult) * upsilon_m_vf(left, f, phi, y) * upsilon_m_vf(right, f, psi, y);
    return lhs == rhs;
}

/* The fertility projection intertwines the two elementary differentials in
 * one scalar dimension. */
inline bool check_phi_intertwines(const Tree& tau, const Poly& f, const Rational& y) {
    VectorField ff = {{f}};
    Rational lhs = upsilon_m(MForest{phi_tree(tau)}, f, y);
    Rational rhs = upsilon(forest_of(tau), ff, {y})[0];
    return lhs == rhs;
}

inline TreeCharacter random_tree_character(SplitMix64& rng, int max_size,
                                           const std::vector<int>& labels) {
    TreeCharacter z;
    for (int n = 1; n <= max_size; ++n)
        for (const auto& t : trees_of_size(n, labels)) z.values[t] = rng.small_rational(3, 2);
    return z;
}

inline MCharacter random_m_character(SplitMix64& rng, int max_degree) {
    MCharacter z;
    for (int n = 1; n <= max_degree; ++n)
        for (const auto& b : populated_singles(n)) z.values[b] = rng.small_rational(3, 2);
    return z;
}

}  // namespace arbor

#endif
