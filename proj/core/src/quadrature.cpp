#include "ewg/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "ewg/errors.hpp"

namespace ewg {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
    double a, b;
    double value;
    double error;
    long id; // deterministic tie-break in the heap
};

struct PanelLess {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.id > y.id;
    }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, long id) {
    const double center = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const double fc = f(center);

    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = hl * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

    const double value = resk * hl;
    resabs *= std::abs(hl);
    resasc *= std::abs(hl);
    double err = std::abs((resk - resg) * hl);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        err = std::max(eps50 * resabs, err);
    return Panel{a, b, value, err, id};
}

QuadratureResult run_adaptive(const std::function<double(double)>& f,
                              const std::vector<double>& breaks,
                              const QuadratureOptions& opts) {
    std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
    long next_id = 0;
    int evals = 0;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        Panel p = evaluate_panel(f, breaks[i], breaks[i + 1], next_id++);
        evals += 15;
        total += p.value;
        total_err += p.error;
        heap.push(p);
    }
    auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (total_err > tolerance() && static_cast<int>(heap.size()) < opts.max_intervals) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { // interval at machine resolution
            heap.push(worst);
            break;
        }
        Panel left = evaluate_panel(f, worst.a, mid, next_id++);
        Panel right = evaluate_panel(f, mid, worst.b, next_id++);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    QuadratureResult r;
    r.value = total;
    r.error_estimate = total_err;
    r.evaluations = evals;
    r.converged = total_err <= tolerance();
    return r;
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
    return integrate(f, std::vector<double>{a, b}, opts);
}

QuadratureResult integrate(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints,
                           const QuadratureOptions& opts) {
    if (breakpoints.size() < 2) throw std::invalid_argument("integrate: need at least two breakpoints");
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw std::invalid_argument("integrate: breakpoints must be strictly increasing");
    return run_adaptive(f, breakpoints, opts);
}

QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureOptions& opts) {
    QuadratureResult total;
    double lo = a;
    double width = std::max(1.0, 0.5 * std::abs(a));
    int quiet_panels = 0;
    double prev_contrib = std::numeric_limits<double>::infinity();
    int growth_streak = 0;
    for (int panel = 0; panel < 80; ++panel) {
        QuadratureResult piece = run_adaptive(f, {lo, lo + width}, opts);
        total.value += piece.value;
        total.error_estimate += piece.error_estimate;
        total.evaluations += piece.evaluations;
        const double contrib = std::abs(piece.value);
        const double floor = std::max(opts.abs_tol,
                                      0.01 * opts.rel_tol * std::abs(total.value)) +
                             1e-300;
        if (contrib <= floor) {
            if (++quiet_panels >= 2) {
                total.converged = true;
                return total;
            }
        } else {
            quiet_panels = 0;
        }
        growth_streak = (contrib > prev_contrib && contrib > 1.0) ? growth_streak + 1 : 0;
        if (growth_streak >= 6 || !std::isfinite(total.value))
            throw DivergenceError("integrate_to_infinity: panel contributions keep growing");
        prev_contrib = contrib;
        lo += width;
        width *= 2.0;
    }
    throw QuadratureError("integrate_to_infinity: tail did not settle within panel budget",
                          total.value, total.error_estimate);
}

} // namespace ewg
