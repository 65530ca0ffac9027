#ifndef ARBOR_POLY_HPP
#define ARBOR_POLY_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/* Sparse multivariate polynomial over the rationals.  Keys are exponent
 * vectors with trailing zeros trimmed, so the same term has one key no
 * matter how many variables are nominally in scope. */
class Poly {
  public:
    using Expo = std::vector<int>;

    Poly() = default;

    static Poly constant(const Rational& c) {
        Poly p;
        if (c != 0) p.terms_[{}] = c;
        return p;
    }

    static Poly var(int i) {
        Poly p;
        Expo e(static_cast<size_t>(i) + 1, 0);
        e[static_cast<size_t>(i)] = 1;
        p.terms_[e] = 1;
        return p;
    }

    const std::map<Expo, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Expo e, const Rational& c) {
        while (!e.empty() && e.back() == 0) e.pop_back();
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Expo e(std::max(e1.size(), e2.size()), 0);
                for (size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
                for (size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
                r.add_term(std::move(e), c1 * c2);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    Poly operator*(const Rational& c) const { Poly r = *this; r *= c; return r; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly partial(int i) const {
        Poly r;
        auto ui = static_cast<size_t>(i);
        for (const auto& [e, c] : terms_) {
            if (ui >= e.size() || e[ui] == 0) continue;
            Expo d = e;
            d[ui] -= 1;
            r.add_term(std::move(d), c * e[ui]);
        }
        return r;
    }

    /* Evaluation over any commutative ring R with R+=R, R*R, R*=Rational.
     * zero and one fix the shape of the result (truncation order and such). */
    template <class R>
    R eval(const std::vector<R>& x, const R& zero, const R& one) const {
        R out = zero;
        for (const auto& [e, c] : terms_) {
            if (e.size() > x.size())
                throw std::invalid_argument("Poly::eval: point has too few coordinates");
            R t = one;
            for (size_t i = 0; i < e.size(); ++i)
                for (int p = 0; p < e[i]; ++p) t = t * x[i];
            t *= c;
            out += t;
        }
        return out;
    }

    Rational eval(const std::vector<Rational>& x) const {
        return eval<Rational>(x, Rational(0), Rational(1));
    }

    double eval_double(const std::vector<double>& x) const {
        double out = 0.0;
        for (const auto& [e, c] : terms_) {
            if (e.size() > x.size())
                throw std::invalid_argument("Poly::eval_double: point has too few coordinates");
            double t = c.convert_to<double>();
            for (size_t i = 0; i < e.size(); ++i)
                for (int p = 0; p < e[i]; ++p) t *= x[i];
            out += t;
        }
        return out;
    }

  private:
    std::map<Expo, Rational> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

/* Iterated derivative in one fixed variable. */
inline Poly poly_deriv(Poly p, int var, int times) {
    for (int k = 0; k < times; ++k) p = p.partial(var);
    return p;
}

/* Parse a univariate polynomial such as "y^2 - 3/2 y + 1" or "2*y^3".
 * Terms are signed; a coefficient is an integer or integer ratio and comes
 * before the variable. */
inline Poly parse_poly1(const std::string& s, char var = 'y') {
    Poly out;
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("polynomial parse error at position " + std::to_string(i) +
                                 ": " + what);
    };
    auto integer = [&]() -> Integer {
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return Integer(s.substr(start, i - start));
    };
    skip();
    if (i == s.size()) fail("empty polynomial");
    bool first = true;
    while (i < s.size()) {
        skip();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        Rational coef = sign;
        bool saw_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            Integer num = integer();
            Integer den = 1;
            skip();
            if (i < s.size() && s[i] == '/') {
                ++i;
                skip();
                den = integer();
                if (den == 0) fail("zero denominator");
            }
            coef *= Rational(num) / Rational(den);
            saw_coef = true;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            }
        }
        int expo = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            expo = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                expo = static_cast<int>(integer().convert_to<long>());
            }
        } else if (!saw_coef) {
            fail(std::string("expected a coefficient or '") + var + "'");
        }
        out.add_term({expo}, coef);
        first = false;
    }
    return out;
}

inline std::string format_poly(const Poly& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c < 0 ? Rational(-c) : c;
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += mono;
        }
        first = false;
    }
    return out;
}

}  // namespace arbor

#endif
