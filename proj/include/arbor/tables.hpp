#ifndef ARBOR_TABLES_HPP
#define ARBOR_TABLES_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "arbor/mindex.hpp"
#include "arbor/printing.hpp"

namespace arbor {

/* Frozen reference data for the reduced-coproduct tables and the primitive
 * combinations used by the degree-4 kernel analysis.  Row labels are kept in
 * both the run-together letter form and the explicit grammar; the two must
 * parse to the same basis element. */

struct TableRow {
    const char* shorthand;  // run-together letter form, e.g. "z2z1z0z0"
    const char* label;      // explicit grammar, e.g. "z2z1z0^2"
    int left_degree;
    int right_degree;
    const char* expected;   // canonical tensor text, "0" when the split is empty
};

struct GoldenTable {
    const char* name;
    std::vector<TableRow> rows;
};

inline const std::vector<GoldenTable>& golden_tables() {
    static const std::vector<GoldenTable> tables = {
        {"degree 2, split (1,1)",
         {
             {"z0z0", "z0*z0", 1, 1, "2 z0 (x) z0"},
             {"z1z0", "z1z0", 1, 1, "1 z0 (x) z0"},
         }},
        {"degree 3, splits (1,2) and (2,1)",
         {
             {"z0z0z0", "z0*z0*z0", 1, 2, "3 z0 (x) z0*z0"},
             {"z0z0z0", "z0*z0*z0", 2, 1, "3 z0*z0 (x) z0"},
             {"z0z1z0", "z0*z1z0", 1, 2, "1 z0 (x) z0*z0 + 1 z0 (x) z1z0"},
             {"z0z1z0", "z0*z1z0", 2, 1, "1 z0*z0 (x) z0 + 1 z1z0 (x) z0"},
             {"z1z1z0", "z1^2z0", 1, 2, "1 z0 (x) z1z0"},
             {"z1z1z0", "z1^2z0", 2, 1, "1 z1z0 (x) z0"},
             {"z2z0z0", "z2z0^2", 1, 2, "2 z0 (x) z1z0"},
             {"z2z0z0", "z2z0^2", 2, 1, "1 z0*z0 (x) z0"},
         }},
        {"degree 4, splits (1,3) and (2,2)",
         {
             {"z0z0z0z0", "z0*z0*z0*z0", 1, 3, "4 z0 (x) z0*z0*z0"},
             {"z0z0z0z0", "z0*z0*z0*z0", 2, 2, "6 z0*z0 (x) z0*z0"},
             {"z0z0z1z0", "z0*z0*z1z0", 1, 3,
              "1 z0 (x) z0*z0*z0 + 2 z0 (x) z0*z1z0"},
             {"z0z0z1z0", "z0*z0*z1z0", 2, 2,
              "2 z0*z0 (x) z0*z0 + 1 z0*z0 (x) z1z0 + 1 z1z0 (x) z0*z0"},
             {"z0z1z1z0", "z0*z1^2z0", 1, 3,
              "1 z0 (x) z0*z1z0 + 1 z0 (x) z1^2z0"},
             {"z0z1z1z0", "z0*z1^2z0", 2, 2,
              "1 z0*z0 (x) z1z0 + 1 z1z0 (x) z0*z0"},
             {"z0z2z0z0", "z0*z2z0^2", 1, 3,
              "2 z0 (x) z0*z1z0 + 1 z0 (x) z2z0^2"},
             {"z0z2z0z0", "z0*z2z0^2", 2, 2,
              "1 z0*z0 (x) z0*z0 + 2 z0*z0 (x) z1z0"},
             {"z1z0z1z0", "z1z0*z1z0", 1, 3, "2 z0 (x) z0*z1z0"},
             {"z1z0z1z0", "z1z0*z1z0", 2, 2,
              "1 z0*z0 (x) z0*z0 + 2 z1z0 (x) z1z0"},
             {"z1z1z1z0", "z1^3z0", 1, 3, "1 z0 (x) z1^2z0"},
             {"z1z1z1z0", "z1^3z0", 2, 2, "1 z1z0 (x) z1z0"},
             {"z2z1z0z0", "z2z1z0^2", 1, 3,
              "4 z0 (x) z1^2z0 + 2 z0 (x) z2z0^2"},
             {"z2z1z0z0", "z2z1z0^2", 2, 2,
              "3 z0*z0 (x) z1z0 + 2 z1z0 (x) z1z0"},
             {"z3z0z0z0", "z3z0^3", 1, 3, "3 z0 (x) z2z0^2"},
             {"z3z0z0z0", "z3z0^3", 2, 2, "3 z0*z0 (x) z1z0"},
         }},
        {"degree 4, split (3,1)",
         {
             {"z0z0z0z0", "z0*z0*z0*z0", 3, 1, "4 z0*z0*z0 (x) z0"},
             {"z0z0z1z0", "z0*z0*z1z0", 3, 1,
              "1 z0*z0*z0 (x) z0 + 2 z0*z1z0 (x) z0"},
             {"z0z1z1z0", "z0*z1^2z0", 3, 1,
              "1 z0*z1z0 (x) z0 + 1 z1^2z0 (x) z0"},
             {"z0z2z0z0", "z0*z2z0^2", 3, 1,
              "1 z0*z0*z0 (x) z0 + 1 z2z0^2 (x) z0"},
             {"z1z0z1z0", "z1z0*z1z0", 3, 1, "2 z0*z1z0 (x) z0"},
             {"z1z1z1z0", "z1^3z0", 3, 1, "1 z1^2z0 (x) z0"},
             {"z2z1z0z0", "z2z1z0^2", 3, 1,
              "2 z0*z1z0 (x) z0 + 1 z2z0^2 (x) z0"},
             {"z3z0z0z0", "z3z0^3", 3, 1, "1 z0*z0*z0 (x) z0"},
         }},
    };
    return tables;
}

/* Fully worked coproduct of z2z1z0^2, every term of the unreduced expansion. */
inline const char* worked_coproduct_input() { return "z2z1z0^2"; }
inline const char* worked_coproduct_expected() {
    return "1 1 (x) z2z1z0^2 + 4 z0 (x) z1^2z0 + 2 z0 (x) z2z0^2"
           " + 3 z0*z0 (x) z1z0 + 2 z0*z1z0 (x) z0 + 2 z1z0 (x) z1z0"
           " + 1 z2z0^2 (x) z0 + 1 z2z1z0^2 (x) 1";
}

inline MVec mvec_of(std::initializer_list<std::pair<long long, const char*>> terms) {
    MVec v;
    for (const auto& [c, s] : terms) v.add(parse_mforest(s), Rational(c));
    return v;
}

/* Spanning sets for the degree-4 kernels of the (1,3) and (3,1) splits and
 * the distinguished primitive combinations built from them. */

inline MVec kernel4_v(int i) {
    switch (i) {
        case 1:
            return mvec_of({{1, "z0*z0*z0*z0"}, {-4, "z3z0^3"}});
        case 2:
            return mvec_of({{1, "z0*z0*z1z0"}, {-1, "z1z0*z1z0"}, {-1, "z3z0^3"}});
        case 3:
            return mvec_of({{2, "z0*z1^2z0"}, {-1, "z1z0*z1z0"}, {-2, "z1^3z0"}});
        case 4:
            return mvec_of({{1, "z0*z2z0^2"},
                            {1, "z1z0*z1z0"},
                            {-1, "z2z1z0^2"},
                            {-1, "z3z0^3"}});
        default:
            throw std::invalid_argument("kernel4_v: index must be 1..4");
    }
}

inline MVec kernel4_w(int i) {
    switch (i) {
        case 1:
            return mvec_of({{1, "z0*z0*z0*z0"},
                            {-3, "z0*z2z0^2"},
                            {-3, "z1z0*z1z0"},
                            {3, "z2z1z0^2"},
                            {-1, "z3z0^3"}});
        case 2:
            return mvec_of({{3, "z0*z0*z0*z0"},
                            {-12, "z0*z0*z1z0"},
                            {12, "z0*z1^2z0"},
                            {6, "z1z0*z1z0"},
                            {-12, "z1^3z0"}});
        default:
            throw std::invalid_argument("kernel4_w: index must be 1..2");
    }
}

inline MVec kernel4_nu_mu() {
    return mvec_of({{-1, "z0*z0*z0*z0"},
                    {6, "z0*z0*z1z0"},
                    {-6, "z1z0*z1z0"},
                    {-2, "z3z0^3"}});
}

inline MVec kernel4_nu_lambda() {
    return mvec_of({{-1, "z0*z0*z0*z0"}, {6, "z0*z2z0^2"}, {-2, "z3z0^3"}});
}

/* Reduced coproducts of the combinations above, frozen as display text. */
inline const char* kernel4_reduced_display(const char* which) {
    std::string w = which;
    if (w == "w1")
        return "4 z0 (x) z0*z0*z0 - 12 z0 (x) z0*z1z0 + 12 z0 (x) z1^2z0";
    if (w == "w2") return "0";
    if (w == "nu_mu")
        return "2 z0 (x) z0*z0*z0 - 6 z0 (x) z2z0^2 + 6 z1z0 (x) z0*z0"
               " - 12 z1z0 (x) z1z0";
    if (w == "nu_lambda")
        return "-4 z0 (x) z0*z0*z0 + 12 z0 (x) z0*z1z0 + 6 z0*z0 (x) z1z0"
               " + 6 z2z0^2 (x) z0";
    throw std::invalid_argument("kernel4_reduced_display: unknown name");
}

inline std::string format_mvec(const MVec& v) {
    return format_lincomb(v, [](const MForest& f) { return format_mforest(f); });
}

inline std::string format_mtens(const MTens& t) {
    return format_tensor2(t, [](const MForest& f) { return format_mforest(f); });
}

}  // namespace arbor

#endif
