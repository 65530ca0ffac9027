#ifndef ARBOR_PRINTING_HPP
#define ARBOR_PRINTING_HPP

#include <string>

#include "arbor/lincomb.hpp"

namespace arbor {

/* Deterministic text form of linear combinations and tensors: terms in key
 * order, every coefficient printed, signs folded into the separators. */

inline std::string coeff_prefix(const Rational& c, bool first) {
    Rational a = c < 0 ? Rational(-c) : c;
    std::string sep = first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    return sep + to_string(a) + " ";
}

template <class K, class Fmt>
std::string format_lincomb(const LinComb<K>& v, Fmt fmt) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : v.terms()) {
        out += coeff_prefix(c, first) + fmt(k);
        first = false;
    }
    return out;
}

template <class K, class Fmt>
std::string format_tensor2(const Tensor2<K>& t, Fmt fmt) {
    if (t.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [ab, c] : t.terms()) {
        out += coeff_prefix(c, first) + fmt(ab.first) + " (x) " + fmt(ab.second);
        first = false;
    }
    return out;
}

}  // namespace arbor

#endif
