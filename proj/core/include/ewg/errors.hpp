#ifndef EWG_ERRORS_HPP
#define EWG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ewg {

/// Thrown when an infinite series hits its term cap before meeting the
/// requested tolerance. Carries the partial sum accumulated so far.
class SeriesTruncationError : public std::runtime_error {
public:
    SeriesTruncationError(const std::string& what, double partial_sum, long terms_used)
        : std::runtime_error(what), partial_sum_(partial_sum), terms_used_(terms_used) {}

    double partial_sum() const noexcept { return partial_sum_; }
    long terms_used() const noexcept { return terms_used_; }

private:
    double partial_sum_;
    long terms_used_;
};

/// Thrown when adaptive quadrature cannot reach its error target.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double best_value, double error_estimate)
        : std::runtime_error(what), best_value_(best_value), error_estimate_(error_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_value_;
    double error_estimate_;
};

/// Thrown when a series is detected to diverge (terms growing without bound).
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when two evaluation routes that must agree (a sub-model's own
/// series vs the general engine) disagree beyond tolerance.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ewg

#endif
