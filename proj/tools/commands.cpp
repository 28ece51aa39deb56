#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "data_io.hpp"
#include "ewg/entropy.hpp"
#include "ewg/errors.hpp"
#include "ewg/estimation.hpp"
#include "ewg/moments.hpp"
#include "ewg/order_statistics.hpp"
#include "ewg/residual_life.hpp"
#include "ewg/sampling.hpp"
#include "ewg/submodels.hpp"
#include "model_document.hpp"

namespace ewg::cli {

namespace {

EwgParams params_from_flags(const ParamFlags& f) {
    if (!f.alpha || !f.beta || !f.gamma_shape || !f.theta)
        throw std::invalid_argument("all of --alpha --beta --gamma --theta are required");
    return EwgParams(*f.alpha, *f.beta, *f.gamma_shape, *f.theta);
}

const char* kParamNames[4] = {"alpha", "beta", "gamma", "theta"};

} // namespace

int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<double> values;
    try {
        values = read_data_file(args.data_file);
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    FitOptions opts;
    ModelDocument doc;
    try {
        opts.kind = parse_submodel_kind(args.kind);
        opts.level = args.level;
        DataSample d(std::move(values));
        const FitResult fit = fit_mle(d, opts);

        doc.kind = opts.kind;
        doc.params = fit.params;
        doc.fit = summarize(fit, d.n());
        doc.provenance.input = args.data_file;
        doc.provenance.timestamp = file_mtime_utc(args.data_file);
        doc.provenance.seed = args.seed;

        out << "fitted EWG model (kind=" << to_string(opts.kind) << ", n=" << d.n() << ")\n";
        out << std::setprecision(10);
        out << "  log-likelihood  " << fit.loglik << "\n";
        out << "  AIC             " << doc.fit->aic << "\n";
        out << "  converged       " << (fit.converged ? "yes" : "NO") << "  (|score|_inf = "
            << std::scientific << std::setprecision(3) << fit.score_inf_norm
            << std::defaultfloat << std::setprecision(10) << ", iterations " << fit.iterations
            << ", start " << fit.multistart_index << ")\n";
        if (fit.at_boundary)
            out << "  warning: theta-hat sits at the boundary; Wald intervals are unreliable\n";
        if (!fit.ci_available)
            out << "  warning: observed information not positive definite; intervals withheld\n";
        const auto mask = free_mask(opts.kind);
        const double est[4] = {fit.params.alpha, fit.params.beta, fit.params.gamma_shape,
                               fit.params.theta};
        out << "  parameter      estimate        std.err         " << std::setprecision(0)
            << std::fixed << 100.0 * args.level << "% CI\n"
            << std::defaultfloat << std::setprecision(10);
        for (int i = 0; i < 4; ++i) {
            out << "  " << std::left << std::setw(13) << kParamNames[i] << std::right << " "
                << std::setw(15) << est[i];
            if (mask[i] && fit.ci_available)
                out << " " << std::setw(15) << fit.std_errors[i] << "  [" << fit.ci[i].lower
                    << ", " << fit.ci[i].upper << "]";
            else if (!mask[i])
                out << "  (pinned by kind)";
            out << "\n";
        }

        if (!args.out.empty()) {
            std::ofstream f(args.out);
            if (!f) {
                err << "error: cannot write " << args.out << "\n";
                return exit_input_error;
            }
            f << doc.to_json();
        }
        return fit.converged ? exit_ok : exit_no_convergence;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
    try {
        const EwgParams p = params_from_flags(args.params);
        if (args.n < 1) throw std::invalid_argument("--n must be >= 1");
        if (args.out.empty()) throw std::invalid_argument("--out is required");
        SampleSpec spec;
        spec.size = args.n;
        spec.seed = args.seed;
        spec.method = parse_sample_method(args.method);
        write_data_file(args.out, sample(p, spec));
        out << "wrote " << args.n << " draws (" << args.method << ", seed " << args.seed
            << ") to " << args.out << "\n";
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
    try {
        EwgParams p{1.0, 1.0, 1.0, 0.0};
        if (args.model) {
            std::ifstream f(*args.model);
            if (!f) throw std::invalid_argument("cannot open model document: " + *args.model);
            std::stringstream buf;
            buf << f.rdbuf();
            p = ModelDocument::from_json(buf.str()).params;
        } else {
            p = params_from_flags(args.params);
        }
        if (!(args.min < args.max) || args.points < 2)
            throw std::invalid_argument("grid requires --min < --max and --points >= 2");
        static const char* fns[] = {"pdf", "cdf", "survival", "hazard", "mrl"};
        bool known = false;
        for (const char* f : fns) known = known || args.fn == f;
        if (!known) throw std::invalid_argument("unknown --fn: " + args.fn);

        std::ofstream file;
        if (!args.out.empty()) {
            file.open(args.out);
            if (!file) throw std::invalid_argument("cannot write " + args.out);
        }
        std::ostream& table = args.out.empty() ? out : file;

        table << "# y\t" << args.fn << "\n";
        if (args.fn == "hazard")
            table << "# shape: " << to_string(classify_hazard_shape(p)) << "\n";
        table << std::setprecision(12);
        for (int i = 0; i < args.points; ++i) {
            const double y =
                args.min + (args.max - args.min) * static_cast<double>(i) / (args.points - 1);
            double v = 0.0;
            if (args.fn == "pdf") v = pdf(p, y);
            else if (args.fn == "cdf") v = cdf(p, y);
            else if (args.fn == "survival") v = survival(p, y);
            else if (args.fn == "hazard") v = hazard(p, y);
            else v = residual_moment_quadrature(p, ResidualSpec(y, 1)).value;
            table << y << "\t" << v << "\n";
        }
        return exit_ok;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
    EwgParams p{1.0, 1.0, 1.0, 0.0};
    try {
        p = params_from_flags(args.params);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    const SeriesControl ctrl = series_control_from_env();
    int requested = 0, succeeded = 0;
    out << std::setprecision(12);

    auto item = [&](const std::string& label, auto&& compute) {
        ++requested;
        try {
            compute();
            ++succeeded;
        } catch (const std::exception& e) {
            out << label << "  error: " << e.what() << "\n";
        }
    };

    if (args.mean)
        item("mean", [&] {
            const MomentResult m = raw_moment_quadrature(p, 1);
            out << "mean              " << m.value << "  engine=" << to_string(m.engine)
                << " err<=" << m.truncation_estimate << "\n";
        });
    if (args.variance)
        item("variance", [&] {
            out << "variance          " << variance(p, ctrl) << "  engine=quadrature\n";
        });
    for (int k : args.moments)
        item("moment", [&] {
            const MomentResult m = raw_moment_quadrature(p, k);
            out << "moment k=" << k << "        " << m.value << "  engine=" << to_string(m.engine)
                << " err<=" << m.truncation_estimate << "\n";
        });
    for (double r : args.renyi)
        item("renyi", [&] {
            EntropyResult e;
            try {
                e = renyi_entropy(p, r, ctrl);
            } catch (const std::domain_error&) {
                e = renyi_entropy_quadrature(p, r); // series gamma argument out of range
            }
            out << "renyi r=" << r << "         " << e.value << "  method=" << to_string(e.method)
                << " terms=" << e.terms_used << "\n";
        });
    if (args.shannon)
        item("shannon", [&] {
            const EntropyResult e = shannon_entropy(p, ctrl);
            out << "shannon           " << e.value << "  method=" << to_string(e.method) << "\n";
        });
    for (const std::string& spec : args.order_moments)
        item("order-moment", [&] {
            int r = 0, n = 0, k = 0;
            if (std::sscanf(spec.c_str(), "%d,%d,%d", &r, &n, &k) != 3)
                throw std::invalid_argument("--order-moment wants R,N,K, got '" + spec + "'");
            const MomentResult m = order_stat_moment_quadrature(p, OrderStatSpec(n, r), k);
            out << "order-moment r=" << r << " n=" << n << " k=" << k << "  " << m.value
                << "  engine=" << to_string(m.engine) << " err<=" << m.truncation_estimate << "\n";
        });
    for (const std::string& spec : args.residuals)
        item("residual", [&] {
            double t = 0.0;
            int r = 0;
            if (std::sscanf(spec.c_str(), "%lf,%d", &t, &r) != 2)
                throw std::invalid_argument("--residual wants T,R, got '" + spec + "'");
            const MomentResult m = residual_moment_quadrature(p, ResidualSpec(t, r));
            out << "residual t=" << t << " r=" << r << "  " << m.value
                << "  engine=" << to_string(m.engine) << " err<=" << m.truncation_estimate << "\n";
        });

    if (requested == 0) {
        err << "error: no statistics requested\n";
        return exit_input_error;
    }
    return succeeded > 0 ? exit_ok : exit_input_error;
}

} // namespace ewg::cli
