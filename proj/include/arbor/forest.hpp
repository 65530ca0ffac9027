#ifndef ARBOR_FOREST_HPP
#define ARBOR_FOREST_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/* Non-planar decorated rooted trees. A tree is a root label plus a multiset of
 * child subtrees; the multiset is stored as a sorted vector so that equal trees
 * compare equal and every tree has exactly one stored form. A forest is a
 * sorted vector of trees (the commutative juxtaposition product); the empty
 * forest is the unit. */

struct Tree {
    int label = 0;
    std::vector<Tree> children;  // invariant: sorted

    friend bool operator==(const Tree& a, const Tree& b) {
        return a.label == b.label && a.children == b.children;
    }
    friend bool operator<(const Tree& a, const Tree& b) {
        if (a.label != b.label) return a.label < b.label;
        return std::lexicographical_compare(a.children.begin(), a.children.end(),
                                            b.children.begin(), b.children.end());
    }
    friend bool operator>(const Tree& a, const Tree& b) { return b < a; }
    friend bool operator<=(const Tree& a, const Tree& b) { return !(b < a); }
    friend bool operator>=(const Tree& a, const Tree& b) { return !(a < b); }
};

using Forest = std::vector<Tree>;  // invariant: sorted

inline Tree node(int label, Forest children = {}) {
    std::sort(children.begin(), children.end());
    return Tree{label, std::move(children)};
}

inline Forest forest_of(std::vector<Tree> trees) {
    std::sort(trees.begin(), trees.end());
    return trees;
}

inline Forest forest_of(const Tree& t) { return Forest{t}; }

inline Forest forest_mul(const Forest& a, const Forest& b) {
    Forest out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

inline int tree_size(const Tree& t) {
    int n = 1;
    for (const auto& c : t.children) n += tree_size(c);
    return n;
}

inline int forest_size(const Forest& f) {
    int n = 0;
    for (const auto& t : f) n += tree_size(t);
    return n;
}

inline int forest_card(const Forest& f) { return static_cast<int>(f.size()); }

/* Symmetry factor: the number of vertex permutations fixing the tree (forest).
 * For a tree it is the product over classes of equal child subtrees of
 * r! * S(child)^r; a forest gets the same extra r! factors for repeated trees. */
inline Integer symmetry_factor(const Tree& t);

inline Integer symmetry_factor_children(const std::vector<Tree>& kids) {
    Integer out = 1;
    std::size_t i = 0;
    while (i < kids.size()) {
        std::size_t j = i;
        while (j < kids.size() && kids[j] == kids[i]) ++j;
        int r = static_cast<int>(j - i);
        Integer s = symmetry_factor(kids[i]);
        out *= factorial(r);
        for (int p = 0; p < r; ++p) out *= s;
        i = j;
    }
    return out;
}

inline Integer symmetry_factor(const Tree& t) { return symmetry_factor_children(t.children); }

inline Integer symmetry_factor(const Forest& f) { return symmetry_factor_children(f); }

// ---------------------------------------------------------------------------
// text form:  tree := "[" label ":" tree* "]",  forest := tree ("*" tree)*

inline std::string format_tree(const Tree& t) {
    std::string out = "[" + std::to_string(t.label) + ":";
    for (const auto& c : t.children) out += format_tree(c);
    out += "]";
    return out;
}

inline std::string format_forest(const Forest& f) {
    if (f.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += "*";
        out += format_tree(f[i]);
    }
    return out;
}

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(pos));
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }
};

inline Tree parse_tree_at(Cursor& c) {
    if (!c.eat('[')) c.fail("expected '['");
    int label = c.integer();
    if (!c.eat(':')) c.fail("expected ':'");
    std::vector<Tree> kids;
    c.skip_ws();
    while (c.pos < c.s.size() && c.s[c.pos] == '[') {
        kids.push_back(parse_tree_at(c));
        c.skip_ws();
    }
    if (!c.eat(']')) c.fail("expected ']'");
    return node(label, std::move(kids));
}

}  // namespace detail

inline Tree parse_tree(const std::string& s) {
    detail::Cursor c{s};
    Tree t = detail::parse_tree_at(c);
    c.skip_ws();
    if (c.pos != s.size()) c.fail("trailing input");
    return t;
}

inline Forest parse_forest(const std::string& s) {
    detail::Cursor c{s};
    c.skip_ws();
    if (c.pos < s.size() && s[c.pos] == '1' && s.find('[', c.pos) == std::string::npos) return {};
    std::vector<Tree> trees;
    trees.push_back(detail::parse_tree_at(c));
    while (c.eat('*')) trees.push_back(detail::parse_tree_at(c));
    c.skip_ws();
    if (c.pos != s.size()) c.fail("trailing input");
    return forest_of(std::move(trees));
}

// ---------------------------------------------------------------------------
// enumeration in canonical order, cached per label alphabet

inline const std::vector<Tree>& trees_of_size(int n, const std::vector<int>& labels = {0});
inline const std::vector<Forest>& forests_of_size(int n, const std::vector<int>& labels = {0});

namespace detail {

struct EnumCache {
    std::map<int, std::vector<Tree>> trees;
    std::map<int, std::vector<Forest>> forests;
};

inline EnumCache& enum_cache(const std::vector<int>& labels) {
    static std::map<std::vector<int>, EnumCache> caches;
    return caches[labels];
}

inline void build_up_to(int n, const std::vector<int>& labels) {
    EnumCache& cache = enum_cache(labels);
    if (cache.forests.count(n)) return;
    if (cache.forests.empty()) cache.forests[0] = {Forest{}};
    for (int k = static_cast<int>(cache.trees.size()) + 1; k <= n; ++k) {
        std::vector<Tree> ts;
        for (int lab : labels)
            for (const Forest& f : cache.forests.at(k - 1)) ts.push_back(node(lab, f));
        std::sort(ts.begin(), ts.end());
        cache.trees[k] = std::move(ts);

        // forests of size k: smallest tree first, remainder no smaller than it
        std::vector<Forest> fs;
        for (int first = 1; first <= k; ++first) {
            for (const Tree& t : cache.trees.at(first)) {
                if (first == k) {
                    fs.push_back(Forest{t});
                    continue;
                }
                for (const Forest& rest : cache.forests.at(k - first)) {
                    if (!rest.empty() && rest.front() < t) continue;
                    Forest f{t};
                    f.insert(f.end(), rest.begin(), rest.end());
                    fs.push_back(std::move(f));
                }
            }
        }
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        cache.forests[k] = std::move(fs);
    }
}

}  // namespace detail

inline const std::vector<Tree>& trees_of_size(int n, const std::vector<int>& labels) {
    detail::build_up_to(n, labels);
    return detail::enum_cache(labels).trees.at(n);
}

inline const std::vector<Forest>& forests_of_size(int n, const std::vector<int>& labels) {
    detail::build_up_to(std::max(n, 1), labels);
    return detail::enum_cache(labels).forests.at(n);
}

}  // namespace arbor

#endif
