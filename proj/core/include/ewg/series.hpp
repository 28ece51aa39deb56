#ifndef EWG_SERIES_HPP
#define EWG_SERIES_HPP

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace ewg {

/// Truncation policy shared by every infinite-series evaluation in the
/// library. A summation stops once `consecutive_small` successive terms fall
/// below rel_tol * |partial sum| + abs_tol (several in a row, because
/// alternating binomial series can produce transient small terms).
struct SeriesControl {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    long max_terms = 100000;
    int consecutive_small = 3;

    void validate() const {
        if (!(rel_tol > 0.0)) throw std::domain_error("SeriesControl: rel_tol must be > 0");
        if (!(abs_tol >= 0.0)) throw std::domain_error("SeriesControl: abs_tol must be >= 0");
        if (max_terms < 1) throw std::domain_error("SeriesControl: max_terms must be >= 1");
        if (consecutive_small < 1) throw std::domain_error("SeriesControl: consecutive_small must be >= 1");
    }

    static SeriesControl defaults() { return SeriesControl{}; }
};

/// Kahan-compensated accumulator implementing the SeriesControl stop rule.
///
///   SeriesAccumulator acc(ctrl);
///   while (acc.want_more()) acc.add(next_term());
///   if (!acc.converged()) ...  // hit max_terms
class SeriesAccumulator {
public:
    explicit SeriesAccumulator(const SeriesControl& ctrl) : ctrl_(ctrl) { ctrl_.validate(); }

    void add(double term) {
        const double y = term - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
        ++terms_;
        last_term_ = term;
        if (std::abs(term) <= ctrl_.rel_tol * std::abs(sum_) + ctrl_.abs_tol)
            ++small_streak_;
        else
            small_streak_ = 0;
        if (small_streak_ >= ctrl_.consecutive_small) converged_ = true;
    }

    bool want_more() const noexcept { return !converged_ && terms_ < ctrl_.max_terms; }
    bool converged() const noexcept { return converged_; }
    double sum() const noexcept { return sum_; }
    long terms() const noexcept { return terms_; }
    double last_term() const noexcept { return last_term_; }

private:
    SeriesControl ctrl_;
    double sum_ = 0.0;
    double comp_ = 0.0;
    double last_term_ = 0.0;
    long terms_ = 0;
    int small_streak_ = 0;
    bool converged_ = false;
};

/// Reads EWG_SERIES_TOL from the environment, if set, into a fresh default
/// control. Used by the CLI front-end; library callers pass controls
/// explicitly.
inline SeriesControl series_control_from_env() {
    SeriesControl ctrl;
    if (const char* s = std::getenv("EWG_SERIES_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(s, &end);
        if (end != s && v > 0.0 && std::isfinite(v)) ctrl.rel_tol = v;
    }
    return ctrl;
}

} // namespace ewg

#endif
