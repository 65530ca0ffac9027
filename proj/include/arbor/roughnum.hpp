#ifndef ARBOR_ROUGHNUM_HPP
#define ARBOR_ROUGHNUM_HPP

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arbor/elem.hpp"
#include "arbor/forest.hpp"

namespace arbor {

/* A smooth driving path given by component values and derivatives. */
struct Driver {
    int dim = 0;
    std::function<double(int, double)> value;
    std::function<double(int, double)> deriv;
};

inline Driver poly_driver() {
    return {1, [](int, double t) { return t; }, [](int, double) { return 1.0; }};
}

inline Driver trig_driver() {
    return {2,
            [](int a, double t) { return a == 0 ? std::cos(t) : std::sin(t); },
            [](int a, double t) { return a == 0 ? -std::sin(t) : std::cos(t); }};
}

namespace detail {

inline constexpr double kGlNode[4] = {-0.8611363115940526, -0.3399810435848563,
                                      0.3399810435848563, 0.8611363115940526};
inline constexpr double kGlWeight[4] = {0.34785484513745385, 0.6521451548625461,
                                        0.6521451548625461, 0.34785484513745385};

/* P[j][k] = integral of the k-th Lagrange basis over [-1, node_j], used to
 * read partial cell integrals off the stored node values. */
inline const std::array<std::array<double, 4>, 4>& gl_partial() {
    static const auto table = [] {
        std::array<std::array<double, 4>, 4> out{};
        for (int k = 0; k < 4; ++k) {
            double coef[4] = {1.0, 0.0, 0.0, 0.0};
            int deg = 0;
            double denom = 1.0;
            for (int l = 0; l < 4; ++l) {
                if (l == k) continue;
                double next[4] = {0.0, 0.0, 0.0, 0.0};
                for (int p = 0; p <= deg; ++p) {
                    next[p + 1] += coef[p];
                    next[p] -= kGlNode[l] * coef[p];
                }
                ++deg;
                for (int p = 0; p < 4; ++p) coef[p] = next[p];
                denom *= kGlNode[k] - kGlNode[l];
            }
            for (int j = 0; j < 4; ++j) {
                double acc = 0.0;
                for (int p = 0; p < 4; ++p) {
                    double hi = std::pow(kGlNode[j], p + 1);
                    double lo = std::pow(-1.0, p + 1);
                    acc += coef[p] / denom * (hi - lo) / (p + 1);
                }
                out[j][k] = acc;
            }
        }
        return out;
    }();
    return table;
}

}  // namespace detail

/* Iterated integrals of a driver over [s, t], one value per forest.  Each
 * evaluation lays a uniform grid over the window, runs composite 4-point
 * Gauss-Legendre per cell, and memoizes per-tree node values so shared
 * subtrees are integrated once. */
class RoughLift {
  public:
    explicit RoughLift(Driver drv, int cells = 64) : drv_(std::move(drv)), cells_(cells) {
        if (cells_ < 1) throw std::invalid_argument("RoughLift: needs at least one cell");
    }

    int dim() const { return drv_.dim; }
    const Driver& driver() const { return drv_; }

    double eval(double s, double t, const Forest& h) const {
        if (!(t >= s)) throw std::invalid_argument("RoughLift::eval: needs s <= t");
        if (h.empty()) return 1.0;
        if (t == s) return 0.0;
        for (const auto& tr : h) check_labels(tr);
        Session sess(drv_, s, t, cells_);
        double out = 1.0;
        for (const auto& tr : h) out *= sess.full(tr);
        return out;
    }

  private:
    void check_labels(const Tree& t) const {
        if (t.label < 0 || t.label >= drv_.dim)
            throw std::invalid_argument("RoughLift::eval: decoration outside driver components");
        for (const auto& c : t.children) check_labels(c);
    }

    struct Session {
        const Driver& drv;
        int m;
        double dx;
        std::vector<double> times;  // 4 per cell
        struct Entry {
            std::vector<double> node_value;  // F at every quadrature node
            std::vector<double> prefix;      // integral of the integrand up to each cell edge
        };
        std::map<Tree, Entry> memo;

        Session(const Driver& d, double s, double t, int cells)
            : drv(d), m(cells), dx((t - s) / cells) {
            times.resize(static_cast<size_t>(4 * m));
            for (int i = 0; i < m; ++i) {
                double mid = s + (i + 0.5) * dx;
                for (int j = 0; j < 4; ++j)
                    times[static_cast<size_t>(4 * i + j)] = mid + 0.5 * dx * detail::kGlNode[j];
            }
        }

        const Entry& ensure(const Tree& t) {
            auto it = memo.find(t);
            if (it != memo.end()) return it->second;
            for (const auto& c : t.children) ensure(c);
            std::vector<double> g(times.size());
            for (size_t idx = 0; idx < times.size(); ++idx) {
                double v = drv.deriv(t.label, times[idx]);
                for (const auto& c : t.children) v *= memo.at(c).node_value[idx];
                g[idx] = v;
            }
            Entry e;
            e.prefix.assign(static_cast<size_t>(m) + 1, 0.0);
            for (int i = 0; i < m; ++i) {
                double ci = 0.0;
                for (int j = 0; j < 4; ++j)
                    ci += detail::kGlWeight[j] * g[static_cast<size_t>(4 * i + j)];
                e.prefix[static_cast<size_t>(i) + 1] =
                    e.prefix[static_cast<size_t>(i)] + 0.5 * dx * ci;
            }
            const auto& part = detail::gl_partial();
            e.node_value.resize(times.size());
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < 4; ++j) {
                    double acc = 0.0;
                    for (int k = 0; k < 4; ++k)
                        acc += part[static_cast<size_t>(j)][static_cast<size_t>(k)] *
                               g[static_cast<size_t>(4 * i + k)];
                    e.node_value[static_cast<size_t>(4 * i + j)] =
                        e.prefix[static_cast<size_t>(i)] + 0.5 * dx * acc;
                }
            return memo.emplace(t, std::move(e)).first->second;
        }

        double full(const Tree& t) { return ensure(t).prefix[static_cast<size_t>(m)]; }
    };

    Driver drv_;
    int cells_;
};

/* Multiplicative splitting of the lift over an intermediate time. */
struct ChenRow {
    Forest forest;
    double whole, split, defect;
};

struct ChenReport {
    std::vector<ChenRow> rows;
    double max_defect = 0.0;
    double tol = 0.0;
    bool pass = true;
};

inline ChenReport check_chen(const RoughLift& x, double s, double u, double t, int max_size,
                             double tol = 1e-8) {
    ChenReport rep;
    rep.tol = tol;
    auto labels = label_vec(x.dim());
    for (int n = 1; n <= max_size; ++n)
        for (const auto& h : forests_of_size(n, labels)) {
            double whole = x.eval(s, t, h);
            double split = 0.0;
            for (const auto& [ab, c] : coproduct_bck(h).terms())
                split += c.convert_to<double>() * x.eval(s, u, ab.first) * x.eval(u, t, ab.second);
            double defect = std::fabs(whole - split);
            rep.rows.push_back({h, whole, split, defect});
            rep.max_defect = std::max(rep.max_defect, defect);
        }
    rep.pass = rep.max_defect <= tol;
    return rep;
}

/* Size-scaled increment bounds over a uniform grid of windows. */
struct HoelderRow {
    Forest forest;
    double ratio;
};

inline std::vector<HoelderRow> check_hoelder(const RoughLift& x, double gamma, int max_size,
                                             double t0 = 0.0, double t1 = 1.0, int grid = 8) {
    std::vector<HoelderRow> rows;
    auto labels = label_vec(x.dim());
    for (int n = 1; n <= max_size; ++n)
        for (const auto& h : forests_of_size(n, labels)) {
            double best = 0.0;
            for (int i = 0; i < grid; ++i)
                for (int j = i + 1; j <= grid; ++j) {
                    double s = t0 + (t1 - t0) * i / grid;
                    double t = t0 + (t1 - t0) * j / grid;
                    double v = std::fabs(x.eval(s, t, h));
                    best = std::max(best, v / std::pow(t - s, gamma * n));
                }
            rows.push_back({h, best});
        }
    return rows;
}

/* One truncated-expansion step of y' = sum_a f_a(y) dX^a. */
inline std::vector<double> rde_step(const std::vector<double>& y, const RoughLift& x,
                                    const VectorField& f, double s, double t, int order) {
    if (field_count(f) != x.dim())
        throw std::invalid_argument("rde_step: field family does not match driver dimension");
    auto labels = label_vec(x.dim());
    std::vector<double> out = y;
    for (int n = 1; n <= order; ++n)
        for (const auto& tr : trees_of_size(n, labels)) {
            double w = x.eval(s, t, forest_of(tr)) /
                       symmetry_factor(tr).convert_to<double>();
            auto polys = upsilon_poly(tr, f);
            for (size_t b = 0; b < out.size(); ++b) out[b] += w * polys[b].eval_double(y);
        }
    return out;
}

/* Dense reference solution of the same equation by classical fourth-order
 * Runge-Kutta on a fine fixed grid. */
class ReferencePath {
  public:
    ReferencePath(const Driver& drv, const VectorField& f, std::vector<double> y0, double t1,
                  int steps)
        : dt_(t1 / steps) {
        ys_.reserve(static_cast<size_t>(steps) + 1);
        ys_.push_back(std::move(y0));
        auto rhs = [&](double t, const std::vector<double>& y) {
            std::vector<double> v(y.size(), 0.0);
            for (int a = 0; a < field_count(f); ++a) {
                double w = drv.deriv(a, t);
                for (size_t b = 0; b < y.size(); ++b)
                    v[b] += w * f[static_cast<size_t>(a)][b].eval_double(y);
            }
            return v;
        };
        for (int i = 0; i < steps; ++i) {
            double t = i * dt_;
            const auto& y = ys_.back();
            auto k1 = rhs(t, y);
            auto k2 = rhs(t + dt_ / 2, shifted(y, k1, dt_ / 2));
            auto k3 = rhs(t + dt_ / 2, shifted(y, k2, dt_ / 2));
            auto k4 = rhs(t + dt_, shifted(y, k3, dt_));
            std::vector<double> next = y;
            for (size_t b = 0; b < y.size(); ++b)
                next[b] += dt_ / 6 * (k1[b] + 2 * k2[b] + 2 * k3[b] + k4[b]);
            ys_.push_back(std::move(next));
        }
    }

    const std::vector<double>& at(double t) const {
        double idx = t / dt_;
        auto i = static_cast<long>(std::llround(idx));
        if (i < 0 || i >= static_cast<long>(ys_.size()) || std::fabs(idx - i) > 1e-9)
            throw std::invalid_argument("ReferencePath::at: time off the stored grid");
        return ys_[static_cast<size_t>(i)];
    }

  private:
    static std::vector<double> shifted(const std::vector<double>& y,
                                       const std::vector<double>& k, double h) {
        std::vector<double> out = y;
        for (size_t b = 0; b < y.size(); ++b) out[b] += h * k[b];
        return out;
    }

    double dt_;
    std::vector<std::vector<double>> ys_;
};

/* Remainder decay of the truncated expansion around a moving basepoint.
 * Row h compares the h-component at time t against the transported
 * components at time s; the remainder should shrink like the window to the
 * power (order - |h|) for a smooth driver. */
struct ControlledRow {
    std::string label;
    int size = 0;
    double slope = 0.0;
    double required = 0.0;
    bool pass = false;
    std::vector<double> remainders;
};

struct ControlledReport {
    std::vector<ControlledRow> rows;
    bool pass = true;
};

namespace detail {

inline double fit_slope(const std::vector<double>& dts, const std::vector<double>& rs) {
    std::vector<std::pair<double, double>> pts;
    for (size_t i = 0; i < dts.size(); ++i)
        if (rs[i] > 1e-13) pts.emplace_back(std::log2(dts[i]), std::log2(rs[i]));
    if (pts.size() < 2) return 99.0;  // remainder at noise floor everywhere
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [px, py] : pts) {
        sx += px;
        sy += py;
        sxx += px * px;
        sxy += px * py;
    }
    double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace detail

inline ControlledReport check_controlled(const RoughLift& x, const VectorField& f,
                                         const std::vector<double>& y0, int order,
                                         double tol = 0.3, double gamma = 1.0) {
    auto labels = label_vec(x.dim());
    ReferencePath ref(x.driver(), f, y0, 1.0, 4096);
    const double s = 0.25;
    std::vector<double> dts;
    for (int k = 2; k <= 7; ++k) dts.push_back(std::pow(2.0, -k));
    const auto& ys = ref.at(s);

    std::vector<Forest> heads = {Forest{}};
    std::vector<Forest> expansion;
    for (int n = 1; n <= order - 1; ++n)
        for (const auto& tr : trees_of_size(n, labels)) {
            heads.push_back(forest_of(tr));
            expansion.push_back(forest_of(tr));
        }

    auto ups_at = [&](const Forest& g, const std::vector<double>& y) {
        auto polys = upsilon_poly(g[0], f);
        std::vector<double> out(y.size());
        for (size_t b = 0; b < y.size(); ++b) out[b] = polys[b].eval_double(y);
        return out;
    };

    ControlledReport rep;
    for (const auto& h : heads) {
        ControlledRow row;
        row.label = format_forest(h);
        row.size = forest_size(h);
        std::vector<double> rs;
        for (double dt : dts) {
            double t = s + dt;
            const auto& yt = ref.at(t);
            std::vector<double> r(y0.size(), 0.0);
            if (h.empty()) {
                for (size_t b = 0; b < r.size(); ++b) r[b] = yt[b] - ys[b];
                for (const auto& g : expansion) {
                    double w = x.eval(s, t, g) / symmetry_factor(g[0]).convert_to<double>();
                    auto v = ups_at(g, ys);
                    for (size_t b = 0; b < r.size(); ++b) r[b] -= w * v[b];
                }
            } else {
                double sh = symmetry_factor(h[0]).convert_to<double>();
                auto v = ups_at(h, yt);
                for (size_t b = 0; b < r.size(); ++b) r[b] = v[b] / sh;
                for (const auto& g : expansion) {
                    double transport = 0.0;
                    for (const auto& [ab, c] : coproduct_bck(g).terms())
                        if (ab.second == h)
                            transport += c.convert_to<double>() * x.eval(s, t, ab.first);
                    if (transport == 0.0) continue;
                    double sg = symmetry_factor(g[0]).convert_to<double>();
                    auto v0 = ups_at(g, ys);
                    for (size_t b = 0; b < r.size(); ++b) r[b] -= transport * v0[b] / sg;
                }
            }
            double norm = 0.0;
            for (double v : r) norm = std::max(norm, std::fabs(v));
            rs.push_back(norm);
        }
        row.remainders = rs;
        row.slope = detail::fit_slope(dts, rs);
        row.required = (order - row.size) * gamma - tol;
        row.pass = row.slope >= row.required;
        rep.rows.push_back(row);
        rep.pass = rep.pass && row.pass;
    }
    return rep;
}

}  // namespace arbor

#endif
