#ifndef ARBOR_LINALG_HPP
#define ARBOR_LINALG_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arbor/rational.hpp"

namespace arbor {

/* Exact sparse linear algebra over the rationals. Rows are maps from column
 * index to a nonzero coefficient. The accumulator keeps a fully reduced
 * echelon basis (each pivot is 1 and appears in no other stored row) so rank,
 * kernels, and membership queries stay valid as rows stream in. Pivoting rule:
 * first nonzero column in the fixed basis order. */

using SparseRow = std::map<int, Rational>;

inline void row_axpy(SparseRow& dst, const Rational& c, const SparseRow& src) {
    if (c == 0) return;
    for (const auto& [j, v] : src) {
        auto it = dst.find(j);
        if (it == dst.end()) {
            dst.emplace(j, c * v);
        } else {
            it->second += c * v;
            if (it->second == 0) dst.erase(it);
        }
    }
}

inline void row_scale(SparseRow& r, const Rational& c) {
    for (auto& [j, v] : r) v *= c;
}

class Rref {
  public:
    explicit Rref(int ncols = 0, bool track_combos = false)
        : ncols_(ncols), track_(track_combos) {}

    int ncols() const { return ncols_; }
    void extend_cols(int ncols) {
        if (ncols > ncols_) ncols_ = ncols;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    long rows_added() const { return rows_added_; }

    // pivot column -> (reduced row, combination of original rows forming it)
    const std::map<int, std::pair<SparseRow, SparseRow>>& rows() const { return rows_; }

    /* Reduce a row against the stored basis. Returns the residual and, when
     * tracking, the combination c of original rows with
     * residual = row - sum_j c_j * (original row j). */
    std::pair<SparseRow, SparseRow> reduce(SparseRow row) const {
        SparseRow combo;
        while (!row.empty()) {
            auto it = rows_.find(row.begin()->first);
            if (it == rows_.end()) break;
            Rational mu = row.begin()->second;
            row_axpy(row, -mu, it->second.first);
            if (track_) row_axpy(combo, mu, it->second.second);
        }
        // the leading entry escaped every pivot; later entries may still hit one
        if (!row.empty()) {
            SparseRow rest(std::next(row.begin()), row.end());
            SparseRow lead(row.begin(), std::next(row.begin()));
            while (!rest.empty()) {
                auto it = rows_.find(rest.begin()->first);
                if (it == rows_.end()) {
                    lead.insert(*rest.begin());
                    rest.erase(rest.begin());
                    continue;
                }
                Rational mu = rest.begin()->second;
                row_axpy(rest, -mu, it->second.first);
                if (track_) row_axpy(combo, mu, it->second.second);
            }
            row = std::move(lead);
        }
        return {std::move(row), std::move(combo)};
    }

    // returns the pivot column claimed by the row, or -1 if it was dependent
    int add_row(const SparseRow& row) {
        int id = static_cast<int>(rows_added_++);
        for (const auto& [j, v] : row)
            if (j >= ncols_) throw std::invalid_argument("column index out of range");
        auto [res, combo] = reduce(row);
        if (track_) {
            SparseRow self{{id, Rational(1)}};
            row_axpy(self, Rational(-1), combo);
            combo = std::move(self);
        }
        if (res.empty()) return -1;
        int pc = res.begin()->first;
        Rational inv = Rational(1) / res.begin()->second;
        row_scale(res, inv);
        if (track_) row_scale(combo, inv);
        for (auto& [p, rc] : rows_) {
            auto it = rc.first.find(pc);
            if (it == rc.first.end()) continue;
            Rational f = it->second;
            row_axpy(rc.first, -f, res);
            if (track_) row_axpy(rc.second, -f, combo);
        }
        rows_.emplace(pc, std::make_pair(std::move(res), std::move(combo)));
        return pc;
    }

    // e_col lies in the row space iff the homogeneous system forces x_col = 0
    bool forced_zero(int col) const {
        SparseRow e{{col, Rational(1)}};
        return reduce(std::move(e)).first.empty();
    }

    // with tracking: the functional y over original rows with sum y_j row_j = e_col
    SparseRow witness_for(int col) const {
        SparseRow e{{col, Rational(1)}};
        auto [res, combo] = reduce(std::move(e));
        if (!res.empty()) throw std::logic_error("coordinate is not forced to zero");
        return combo;
    }

    std::vector<SparseRow> kernel() const {
        std::vector<SparseRow> out;
        for (int fc = 0; fc < ncols_; ++fc) {
            if (rows_.count(fc)) continue;
            SparseRow vec{{fc, Rational(1)}};
            for (const auto& [pc, rc] : rows_) {
                auto it = rc.first.find(fc);
                if (it != rc.first.end()) vec[pc] = -it->second;
            }
            out.push_back(std::move(vec));
        }
        return out;
    }

  private:
    int ncols_;
    bool track_;
    long rows_added_ = 0;
    std::map<int, std::pair<SparseRow, SparseRow>> rows_;
};

inline std::vector<SparseRow> kernel_of(const std::vector<SparseRow>& rows, int ncols) {
    Rref r(ncols);
    for (const auto& row : rows) r.add_row(row);
    return r.kernel();
}

// canonical reduced basis of the span; equal spans give equal output
inline std::vector<SparseRow> rref_span(const std::vector<SparseRow>& vectors, int ncols) {
    Rref r(ncols);
    for (const auto& v : vectors) r.add_row(v);
    std::vector<SparseRow> out;
    for (const auto& [pc, rc] : r.rows()) out.push_back(rc.first);
    return out;
}

inline bool span_equal(const std::vector<SparseRow>& a, const std::vector<SparseRow>& b,
                       int ncols) {
    return rref_span(a, ncols) == rref_span(b, ncols);
}

/* Basis of span(U) meet span(V): solve sum a_i u_i = sum b_j v_j, one equation
 * per ambient coordinate, and map each kernel vector back through the a-part. */
inline std::vector<SparseRow> intersect_spans(const std::vector<SparseRow>& U,
                                              const std::vector<SparseRow>& V, int ncols) {
    for (const auto& v : U)
        for (const auto& [j, c] : v)
            if (j >= ncols) throw std::invalid_argument("dimension mismatch");
    for (const auto& v : V)
        for (const auto& [j, c] : v)
            if (j >= ncols) throw std::invalid_argument("dimension mismatch");
    int nu = static_cast<int>(U.size());
    int nv = static_cast<int>(V.size());
    std::map<int, SparseRow> eq;  // ambient coordinate -> row over (a, b) unknowns
    for (int i = 0; i < nu; ++i)
        for (const auto& [j, c] : U[i]) eq[j][i] = c;
    for (int i = 0; i < nv; ++i)
        for (const auto& [j, c] : V[i]) {
            auto& row = eq[j];
            auto it = row.find(nu + i);
            Rational nc = (it == row.end() ? Rational(0) : it->second) - c;
            if (nc == 0)
                row.erase(nu + i);
            else
                row[nu + i] = nc;
        }
    Rref r(nu + nv);
    for (const auto& [coord, row] : eq) r.add_row(row);
    std::vector<SparseRow> out;
    for (const SparseRow& k : r.kernel()) {
        SparseRow w;
        for (const auto& [col, c] : k)
            if (col < nu) row_axpy(w, c, U[col]);
        if (!w.empty()) out.push_back(std::move(w));
    }
    return rref_span(out, ncols);
}

}  // namespace arbor

#endif
