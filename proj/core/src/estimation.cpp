#include "ewg/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "detail.hpp"
#include "ewg/special_functions.hpp"

namespace ewg {

namespace {

constexpr double kThetaFloor = 1e-8; // logit pin for theta during optimization
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

} // namespace

DataSample::DataSample(std::vector<double> v) : values(std::move(v)) {
    if (values.size() < 5)
        throw std::invalid_argument("DataSample: need at least 5 observations (parameters + 1)");
    for (double y : values)
        if (!(std::isfinite(y) && y > 0.0))
            throw std::domain_error("DataSample: every value must be positive and finite");
}

double log_likelihood(const EwgParams& p, const DataSample& d) {
    double sum = 0.0, comp = 0.0;
    for (double y : d.values) {
        const double t = log_pdf(p, y) - comp; // shared kernel: l == sum log pdf exactly
        const double s = sum + t;
        comp = (s - sum) - t;
        sum = s;
    }
    return sum;
}

Vec4 score(const EwgParams& p, const DataSample& d) {
    const double n = static_cast<double>(d.n());
    const double a = p.alpha, b = p.beta, g = p.gamma_shape, th = p.theta;
    double sum_logE_w = 0.0;  // sum log E (1 + 2 theta E^a / D)
    double sum_u = 0.0;
    double sum_w1 = 0.0;      // sum u e^{-u} / E
    double sum_w2 = 0.0;      // sum u e^{-u} E^{a-1} / D
    double dg_acc = 0.0;      // sum log(by) [1 - u + (a-1) u e^{-u}/E + 2 theta a u e^{-u} E^{a-1}/D]
    double sum_ea_over_d = 0.0;
    for (double y : d.values) {
        const detail::DistKernel k = detail::eval_dist_kernel(p, y);
        const double log_u = g * std::log(b * y); // log of (by)^g, exact even when u over/underflows
        const double ea_over_d = std::exp(a * k.log_e) / k.denom;
        const double w1 = detail::exp_or_zero(log_u - k.u - k.log_e);
        const double w2 = detail::exp_or_zero(log_u - k.u + (a - 1.0) * k.log_e) / k.denom;
        const double u = std::isfinite(k.u) ? k.u : kInf;
        sum_logE_w += k.log_e * (1.0 + 2.0 * th * ea_over_d);
        sum_u += u;
        sum_w1 += w1;
        sum_w2 += w2;
        dg_acc += std::log(b * y) * (1.0 - u + (a - 1.0) * w1 + 2.0 * th * a * w2);
        sum_ea_over_d += ea_over_d;
    }
    Vec4 u_vec;
    u_vec[0] = n / a + sum_logE_w;
    u_vec[1] = (g / b) * (n - sum_u + (a - 1.0) * sum_w1 + 2.0 * th * a * sum_w2);
    u_vec[2] = n / g + dg_acc;
    u_vec[3] = -n / (1.0 - th) + 2.0 * sum_ea_over_d;
    return u_vec;
}

Mat4 observed_information(const EwgParams& p, const DataSample& d) {
    const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    const Vec4 theta_vec{p.alpha, p.beta, p.gamma_shape, p.theta};
    Mat4 jac{};
    for (int c = 0; c < 4; ++c) {
        double h = h0 * (1.0 + std::abs(theta_vec[c]));
        Vec4 up = theta_vec, dn = theta_vec;
        if (c == 3) {
            up[3] = std::min(theta_vec[3] + h, 1.0 - 1e-12);
            dn[3] = std::max(theta_vec[3] - h, 0.0);
        } else {
            up[c] += h;
            dn[c] = std::max(theta_vec[c] - h, 0.25 * theta_vec[c]);
        }
        const double spread = up[c] - dn[c];
        const Vec4 s_up = score(EwgParams(up[0], up[1], up[2], up[3]), d);
        const Vec4 s_dn = score(EwgParams(dn[0], dn[1], dn[2], dn[3]), d);
        for (int r = 0; r < 4; ++r) jac[r][c] = (s_up[r] - s_dn[r]) / spread;
    }
    Mat4 info{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) info[r][c] = -0.5 * (jac[r][c] + jac[c][r]);
    return info;
}

namespace {

// --- small dense linear algebra on the free-coordinate block ---

using Matrix = std::vector<std::vector<double>>;

bool cholesky(const Matrix& a, Matrix& l) {
    const std::size_t n = a.size();
    l.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (i == j) {
                if (!(s > 0.0)) return false;
                l[i][i] = std::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    return true;
}

// Inverse through the Cholesky factor; requires cholesky() succeeded.
Matrix cholesky_inverse(const Matrix& l) {
    const std::size_t n = l.size();
    Matrix inv(n, std::vector<double>(n, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<double> e(n, 0.0);
        e[col] = 1.0;
        std::vector<double> z(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double s = e[i];
            for (std::size_t k = 0; k < i; ++k) s -= l[i][k] * z[k];
            z[i] = s / l[i][i];
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = z[ii];
            for (std::size_t k = ii + 1; k < n; ++k) s -= l[k][ii] * inv[k][col];
            inv[ii][col] = s / l[ii][ii];
        }
    }
    return inv;
}

bool solve_linear(Matrix a, std::vector<double> rhs, std::vector<double>& x) {
    const std::size_t n = a.size();
    x.assign(n, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) return false;
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return true;
}

// --- transformed parameterization ---
// free alpha, beta, gamma live on the log scale; free theta on the logit
// scale, pinned inside [kThetaFloor, 1 - kThetaFloor].

struct Transform {
    std::array<bool, 4> mask;
    Vec4 pinned; // full parameter vector template holding pinned values

    int dim() const {
        int k = 0;
        for (bool b : mask) k += b ? 1 : 0;
        return k;
    }

    std::vector<double> to_free(const Vec4& theta) const {
        std::vector<double> phi;
        for (int i = 0; i < 4; ++i) {
            if (!mask[i]) continue;
            if (i == 3) {
                const double t = clamp(theta[3], kThetaFloor, 1.0 - kThetaFloor);
                phi.push_back(std::log(t / (1.0 - t)));
            } else {
                phi.push_back(std::log(theta[i]));
            }
        }
        return phi;
    }

    Vec4 to_full(const std::vector<double>& phi) const {
        Vec4 theta = pinned;
        int k = 0;
        for (int i = 0; i < 4; ++i) {
            if (!mask[i]) continue;
            if (i == 3) {
                const double q = clamp(phi[k], -19.0, 19.0);
                theta[3] = 1.0 / (1.0 + std::exp(-q));
            } else {
                theta[i] = std::exp(clamp(phi[k], -40.0, 40.0));
            }
            ++k;
        }
        return theta;
    }

    // dTheta_i/dphi_k diagonal, evaluated at the full vector.
    std::vector<double> jacobian_diag(const Vec4& theta) const {
        std::vector<double> jd;
        for (int i = 0; i < 4; ++i) {
            if (!mask[i]) continue;
            jd.push_back(i == 3 ? theta[3] * (1.0 - theta[3]) : theta[i]);
        }
        return jd;
    }
};

EwgParams params_from(const Vec4& t) { return EwgParams(t[0], t[1], t[2], t[3]); }

struct Eval {
    double f = kInf;            // -loglik
    std::vector<double> g;      // gradient of -loglik in phi
    Vec4 score_orig{};          // original-scale score
};

// Fused likelihood + score evaluation over cached log y. The optimizer calls
// this thousands of times per fit; one pass over the data computes both.
struct Objective {
    const DataSample& data;
    const Transform& tf;
    std::vector<double> log_y;

    Objective(const DataSample& d, const Transform& t) : data(d), tf(t) {
        log_y.reserve(d.values.size());
        for (double y : d.values) log_y.push_back(std::log(y));
    }

    Eval eval(const std::vector<double>& phi) const {
        const Vec4 t = tf.to_full(phi);
        const double a = t[0], b = t[1], g = t[2], th = t[3];
        const double log_b = std::log(b);
        const double n = static_cast<double>(data.n());

        double ll = 0.0;
        double s_logE_w = 0.0, s_u = 0.0, s_w1 = 0.0, s_w2 = 0.0, s_dg = 0.0, s_ead = 0.0;
        for (std::size_t i = 0; i < data.values.size(); ++i) {
            const double lby = log_b + log_y[i];
            const double log_u = g * lby;
            const double u = std::exp(log_u); // IEEE under/overflow to 0/inf is fine here
            const double logE = u > 0.0 ? detail::log1mexp(u) : log_u;
            const double ea = std::exp(a * logE);
            const double one_minus_ea = -std::expm1(a * logE);
            const double denom = (1.0 - th) + th * one_minus_ea;
            const double ea_over_d = ea / denom;
            const double w1 = detail::exp_or_zero(log_u - u - logE);
            const double w2 = detail::exp_or_zero(log_u - u + (a - 1.0) * logE) / denom;

            ll += (g - 1.0) * log_y[i] - u + (a - 1.0) * logE - 2.0 * std::log(denom);
            s_logE_w += logE * (1.0 + 2.0 * th * ea_over_d);
            s_u += u;
            s_w1 += w1;
            s_w2 += w2;
            s_dg += lby * (1.0 - u + (a - 1.0) * w1 + 2.0 * th * a * w2);
            s_ead += ea_over_d;
        }
        ll += n * (std::log(a) + std::log(g) + g * log_b + std::log1p(-th));

        Eval e;
        e.f = std::isfinite(ll) ? -ll : kInf;
        e.score_orig[0] = n / a + s_logE_w;
        e.score_orig[1] = (g / b) * (n - s_u + (a - 1.0) * s_w1 + 2.0 * th * a * s_w2);
        e.score_orig[2] = n / g + s_dg;
        e.score_orig[3] = -n / (1.0 - th) + 2.0 * s_ead;
        const std::vector<double> jd = tf.jacobian_diag(t);
        e.g.resize(jd.size());
        int k = 0;
        for (int i = 0; i < 4; ++i) {
            if (!tf.mask[i]) continue;
            e.g[k] = -e.score_orig[i] * jd[k];
            ++k;
        }
        return e;
    }
};

double inf_norm_free(const Vec4& u, const std::array<bool, 4>& mask) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i)
        if (mask[i]) m = std::max(m, std::abs(u[i]));
    return m;
}

struct StartResult {
    std::vector<double> phi;
    double neg_loglik = kInf;
    double score_norm = kInf;
    bool converged = false;
    int iterations = 0;
};

// Quasi-Newton (BFGS, inverse-Hessian form) with Armijo backtracking,
// followed by a damped Newton polish on the transformed gradient. The
// polish is what actually reaches the score tolerance: near the optimum the
// likelihood differences fall below double rounding while the analytic
// gradient is still perfectly informative.
StartResult optimize_one(const Objective& obj, std::vector<double> phi, int max_iterations,
                         double score_tol, double n_obs) {
    const std::size_t k = phi.size();
    StartResult out;
    Eval cur = obj.eval(phi);
    if (!std::isfinite(cur.f)) {
        out.phi = phi;
        return out;
    }

    auto tolerance_met = [&] {
        const double tol = score_tol * std::max(1.0, std::abs(-cur.f) / n_obs);
        return inf_norm_free(cur.score_orig, obj.tf.mask) <= tol;
    };

    // identity seeded inverse Hessian
    Matrix h(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) h[i][i] = 1.0;

    int iter = 0;
    for (; iter < max_iterations; ++iter) {
        if (tolerance_met()) break;
        std::vector<double> dir(k, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) dir[i] -= h[i][j] * cur.g[j];
        double slope = 0.0;
        for (std::size_t i = 0; i < k; ++i) slope += dir[i] * cur.g[i];
        if (!(slope < 0.0)) { // reset to steepest descent
            for (std::size_t i = 0; i < k; ++i) {
                std::fill(h[i].begin(), h[i].end(), 0.0);
                h[i][i] = 1.0;
                dir[i] = -cur.g[i];
            }
            slope = -std::inner_product(cur.g.begin(), cur.g.end(), cur.g.begin(), 0.0);
            if (slope == 0.0) break;
        }
        // Once the predicted decrease drops below likelihood rounding noise the
        // line search can no longer measure progress; the Newton polish on the
        // analytic gradient takes over from here.
        if (-slope <= 1e-10 * std::max(1.0, std::abs(cur.f))) break;
        double step = 1.0;
        std::vector<double> phi_new(k);
        Eval next;
        bool accepted = false;
        for (int bt = 0; bt < 45; ++bt) {
            for (std::size_t i = 0; i < k; ++i) phi_new[i] = phi[i] + step * dir[i];
            next = obj.eval(phi_new);
            if (next.f <= cur.f + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break; // line search exhausted; hand over to the polish
        // BFGS update
        std::vector<double> s(k), yv(k);
        for (std::size_t i = 0; i < k; ++i) {
            s[i] = phi_new[i] - phi[i];
            yv[i] = next.g[i] - cur.g[i];
        }
        double sy = std::inner_product(s.begin(), s.end(), yv.begin(), 0.0);
        double ss = std::sqrt(std::inner_product(s.begin(), s.end(), s.begin(), 0.0));
        double yy = std::sqrt(std::inner_product(yv.begin(), yv.end(), yv.begin(), 0.0));
        if (sy > 1e-12 * ss * yy) {
            std::vector<double> hy(k, 0.0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) hy[i] += h[i][j] * yv[j];
            const double yhy = std::inner_product(yv.begin(), yv.end(), hy.begin(), 0.0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    h[i][j] += ((sy + yhy) * s[i] * s[j]) / (sy * sy) -
                               (hy[i] * s[j] + s[i] * hy[j]) / sy;
        }
        phi = phi_new;
        cur = next;
    }

    // Damped Newton polish on the gradient system.
    for (int polish = 0; polish < 40 && !tolerance_met(); ++polish) {
        Matrix jac(k, std::vector<double>(k, 0.0));
        for (std::size_t c = 0; c < k; ++c) {
            const double h_fd = 3e-6 * (1.0 + std::abs(phi[c]));
            std::vector<double> up = phi, dn = phi;
            up[c] += h_fd;
            dn[c] -= h_fd;
            const Eval eu = obj.eval(up);
            const Eval ed = obj.eval(dn);
            for (std::size_t r = 0; r < k; ++r) jac[r][c] = (eu.g[r] - ed.g[r]) / (2.0 * h_fd);
        }
        std::vector<double> delta;
        std::vector<double> neg_g(k);
        for (std::size_t i = 0; i < k; ++i) neg_g[i] = -cur.g[i];
        if (!solve_linear(jac, neg_g, delta)) break;
        const double g_norm =
            std::sqrt(std::inner_product(cur.g.begin(), cur.g.end(), cur.g.begin(), 0.0));
        bool improved = false;
        double damp = 1.0;
        for (int half = 0; half < 12; ++half) {
            std::vector<double> phi_try(k);
            for (std::size_t i = 0; i < k; ++i) phi_try[i] = phi[i] + damp * delta[i];
            const Eval trial = obj.eval(phi_try);
            if (std::isfinite(trial.f)) {
                const double trial_norm = std::sqrt(
                    std::inner_product(trial.g.begin(), trial.g.end(), trial.g.begin(), 0.0));
                if (trial_norm < g_norm) {
                    phi = phi_try;
                    cur = trial;
                    improved = true;
                    break;
                }
            }
            damp *= 0.5;
        }
        ++iter;
        if (!improved) break;
    }

    out.phi = phi;
    out.neg_loglik = cur.f;
    out.score_norm = inf_norm_free(cur.score_orig, obj.tf.mask);
    out.converged = tolerance_met();
    out.iterations = iter;
    return out;
}

// Weibull probability-plot initializer: regress log(-log(1 - p_i)) on
// log y_(i) with Benard plotting positions; slope estimates gamma, intercept
// gamma log beta.
void weibull_plot_init(const DataSample& d, double& gamma0, double& beta0) {
    std::vector<double> ys = d.values;
    std::sort(ys.begin(), ys.end());
    const std::size_t n = ys.size();
    double sx = 0.0, sz = 0.0, sxx = 0.0, sxz = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double p = (static_cast<double>(i) + 0.7) / (static_cast<double>(n) + 0.4);
        const double x = std::log(ys[i]);
        const double z = std::log(-std::log1p(-p));
        sx += x;
        sz += z;
        sxx += x * x;
        sxz += x * z;
    }
    const double denom = n * sxx - sx * sx;
    double slope = denom > 0.0 ? (n * sxz - sx * sz) / denom : 1.0;
    slope = clamp(slope, 0.05, 20.0);
    const double intercept = (sz - slope * sx) / static_cast<double>(n);
    gamma0 = slope;
    beta0 = clamp(std::exp(intercept / slope), 1e-8, 1e8);
}

} // namespace

FitResult fit_mle(const DataSample& d, const FitOptions& opts) {
    if (!(opts.level > 0.0 && opts.level < 1.0))
        throw std::domain_error("fit_mle: level must be in (0,1)");
    Transform tf;
    tf.mask = free_mask(opts.kind);
    {
        FreeParams probe; // pinned values via make_submodel with unit frees
        if (tf.mask[0]) probe.alpha = 1.0;
        probe.beta = 1.0;
        if (tf.mask[2]) probe.gamma_shape = 1.0;
        if (tf.mask[3]) probe.theta = 0.5;
        const EwgParams pinned = make_submodel(opts.kind, probe);
        tf.pinned = {pinned.alpha, pinned.beta, pinned.gamma_shape, pinned.theta};
    }

    double gamma0 = 1.0, beta0 = 1.0;
    weibull_plot_init(d, gamma0, beta0);
    const Vec4 base{1.0, beta0, gamma0, 0.5};

    // base start plus four deterministic +-0.5 log-scale perturbation patterns
    static const double patterns[4][4] = {{+0.5, +0.5, +0.5, +0.5},
                                          {-0.5, -0.5, -0.5, -0.5},
                                          {+0.5, -0.5, +0.5, -0.5},
                                          {-0.5, +0.5, -0.5, +0.5}};
    std::vector<std::vector<double>> starts;
    starts.push_back(tf.to_free(base));
    for (const auto& pattern : patterns) {
        std::vector<double> phi = tf.to_free(base);
        int k = 0;
        for (int i = 0; i < 4; ++i) {
            if (!tf.mask[i]) continue;
            phi[k] += pattern[i];
            ++k;
        }
        starts.push_back(std::move(phi));
    }

    const Objective obj(d, tf);
    StartResult best;
    int best_index = -1;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        StartResult r = optimize_one(obj, starts[i], opts.max_iterations, opts.score_tol,
                                     static_cast<double>(d.n()));
        // Converged beats unconverged; converged ties break on likelihood;
        // unconverged partial states compare by score norm (a runaway ridge
        // can carry an absurd likelihood, so likelihood is no measure there).
        bool better = false;
        if (best_index < 0 || (r.converged && !best.converged)) {
            better = true;
        } else if (r.converged == best.converged) {
            better = r.converged ? r.neg_loglik < best.neg_loglik
                                 : r.score_norm < best.score_norm;
        }
        if (better) {
            best = r;
            best_index = static_cast<int>(i);
        }
    }

    const Vec4 theta_hat = tf.to_full(best.phi);
    FitResult fit;
    fit.params = params_from(theta_hat);
    fit.kind = opts.kind;
    fit.loglik = log_likelihood(fit.params, d); // reported through the shared pdf path
    fit.score_inf_norm = best.score_norm;
    fit.converged = best.converged;
    fit.iterations = best.iterations;
    fit.multistart_index = best_index;
    fit.level = opts.level;
    fit.at_boundary = tf.mask[3] && (fit.params.theta <= 2.0 * kThetaFloor ||
                                     fit.params.theta >= 1.0 - 2.0 * kThetaFloor);
    fit.observed_info = observed_information(fit.params, d);

    // free-coordinate block -> covariance -> standard errors
    std::vector<int> free_idx;
    for (int i = 0; i < 4; ++i)
        if (tf.mask[i]) free_idx.push_back(i);
    Matrix block(free_idx.size(), std::vector<double>(free_idx.size(), 0.0));
    for (std::size_t r = 0; r < free_idx.size(); ++r)
        for (std::size_t c = 0; c < free_idx.size(); ++c)
            block[r][c] = fit.observed_info[free_idx[r]][free_idx[c]];
    Matrix chol;
    if (fit.converged && cholesky(block, chol)) {
        const Matrix cov = cholesky_inverse(chol);
        fit.ci_available = true;
        for (std::size_t r = 0; r < free_idx.size(); ++r) {
            if (!(cov[r][r] > 0.0)) {
                fit.ci_available = false;
                break;
            }
            fit.std_errors[free_idx[r]] = std::sqrt(cov[r][r]);
        }
    }
    if (fit.ci_available) {
        fit.ci = confidence_intervals(fit, opts.level);
    } else {
        const Vec4 t{fit.params.alpha, fit.params.beta, fit.params.gamma_shape, fit.params.theta};
        for (int i = 0; i < 4; ++i) fit.ci[i] = {t[i], t[i]}; // degenerate point intervals
    }
    return fit;
}

std::array<Interval, 4> confidence_intervals(const FitResult& f, double level) {
    if (!(level > 0.0 && level < 1.0))
        throw std::domain_error("confidence_intervals: level must be in (0,1)");
    if (!f.converged || !f.ci_available)
        throw std::runtime_error(
            "confidence_intervals: fit not converged or information not positive definite");
    const double z = normal_quantile(1.0 - 0.5 * (1.0 - level));
    const Vec4 t{f.params.alpha, f.params.beta, f.params.gamma_shape, f.params.theta};
    std::array<Interval, 4> ci;
    for (int i = 0; i < 4; ++i) {
        const double half = z * f.std_errors[i];
        double lo = t[i] - half, hi = t[i] + half;
        lo = std::max(lo, 0.0); // alpha, beta, gamma, theta all live above 0
        if (i == 3) hi = std::min(hi, 1.0 - 1e-12);
        ci[i] = {lo, hi};
    }
    return ci;
}

} // namespace ewg
