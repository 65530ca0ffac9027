#ifndef ARBOR_LINCOMB_HPP
#define ARBOR_LINCOMB_HPP

#include <map>
#include <utility>

#include "arbor/rational.hpp"

namespace arbor {

// Finitely supported rational linear combination of basis keys K. Zero
// coefficients are erased eagerly so that operator== is equality of vectors.
template <class K>
class LinComb {
  public:
    using map_type = std::map<K, Rational>;

    LinComb() = default;
    explicit LinComb(const K& k) { coeffs_[k] = 1; }
    LinComb(const K& k, const Rational& c) {
        if (c != 0) coeffs_[k] = c;
    }

    const map_type& terms() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }

    Rational coeff(const K& k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add(const K& k, const Rational& c) {
        if (c == 0) return;
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            coeffs_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.coeffs_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [k, c] : coeffs_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }

    bool operator==(const LinComb& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LinComb& o) const { return coeffs_ != o.coeffs_; }

  private:
    map_type coeffs_;
};

// Rank-two tensors are linear combinations over ordered pairs of keys.
template <class K>
using Tensor2 = LinComb<std::pair<K, K>>;

template <class K>
Tensor2<K> tensor(const K& a, const K& b, const Rational& c = 1) {
    return Tensor2<K>(std::make_pair(a, b), c);
}

// (v (x) w) as a rank-two tensor
template <class K>
Tensor2<K> tensor_of(const LinComb<K>& v, const LinComb<K>& w) {
    Tensor2<K> out;
    for (const auto& [a, ca] : v.terms())
        for (const auto& [b, cb] : w.terms()) out.add({a, b}, ca * cb);
    return out;
}

// Contract a rank-two tensor against per-leg pairings: sum of
// c * left_pair(a) * right_pair(b) over the terms c * (a (x) b).
template <class K, class PairL, class PairR>
Rational tensor_contract(const Tensor2<K>& t, PairL left_pair, PairR right_pair) {
    Rational out = 0;
    for (const auto& [ab, c] : t.terms()) out += c * left_pair(ab.first) * right_pair(ab.second);
    return out;
}

// Keep only the terms whose keys have the prescribed grade.
template <class K, class GradeFn>
LinComb<K> grade_project(const LinComb<K>& v, GradeFn grade, int n) {
    LinComb<K> out;
    for (const auto& [k, c] : v.terms())
        if (grade(k) == n) out.add(k, c);
    return out;
}

template <class K, class GradeFn>
Tensor2<K> grade_project2(const Tensor2<K>& t, GradeFn grade, int m, int n) {
    Tensor2<K> out;
    for (const auto& [ab, c] : t.terms())
        if (grade(ab.first) == m && grade(ab.second) == n) out.add(ab, c);
    return out;
}

// Apply a linear map given on basis keys to each leg of a combination.
template <class K, class Fn>
auto apply_linear(const LinComb<K>& v, Fn on_basis) -> decltype(on_basis(std::declval<K>())) {
    decltype(on_basis(std::declval<K>())) out;
    for (const auto& [k, c] : v.terms()) {
        auto img = on_basis(k);
        img *= c;
        out += img;
    }
    return out;
}

}  // namespace arbor

#endif
