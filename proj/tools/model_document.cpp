#include "model_document.hpp"

#include <ctime>
#include <stdexcept>
#include <sys/stat.h>

#include <json.hpp>

namespace ewg::cli {

using nlohmann::json;

std::string ModelDocument::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["kind"] = to_string(kind);
    j["params"] = {{"alpha", params.alpha},
                   {"beta", params.beta},
                   {"gamma", params.gamma_shape},
                   {"theta", params.theta}};
    if (fit) {
        static const char* names[4] = {"alpha", "beta", "gamma", "theta"};
        json se, ci;
        for (int i = 0; i < 4; ++i) {
            se[names[i]] = fit->std_errors[i];
            ci[names[i]] = {fit->ci[i].lower, fit->ci[i].upper};
        }
        j["fit"] = {{"loglik", fit->loglik},
                    {"aic", fit->aic},
                    {"n", fit->n},
                    {"level", fit->level},
                    {"converged", fit->converged},
                    {"at_boundary", fit->at_boundary},
                    {"ci_available", fit->ci_available},
                    {"score_inf_norm", fit->score_inf_norm},
                    {"iterations", fit->iterations},
                    {"multistart_index", fit->multistart_index},
                    {"std_errors", se},
                    {"ci", ci}};
    }
    j["provenance"] = {{"input", provenance.input},
                       {"timestamp", provenance.timestamp},
                       {"seed", provenance.seed}};
    return j.dump(2) + "\n";
}

ModelDocument ModelDocument::from_json(const std::string& text) {
    const json j = json::parse(text);
    ModelDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1")
        throw std::runtime_error("ModelDocument: unsupported schema_version " +
                                 doc.schema_version);
    doc.kind = parse_submodel_kind(j.at("kind").get<std::string>());
    const json& p = j.at("params");
    doc.params = EwgParams(p.at("alpha").get<double>(), p.at("beta").get<double>(),
                           p.at("gamma").get<double>(), p.at("theta").get<double>());
    if (j.contains("fit")) {
        const json& f = j.at("fit");
        FitSummary s;
        s.loglik = f.at("loglik").get<double>();
        s.aic = f.at("aic").get<double>();
        s.n = f.at("n").get<std::size_t>();
        s.level = f.at("level").get<double>();
        s.converged = f.at("converged").get<bool>();
        s.at_boundary = f.at("at_boundary").get<bool>();
        s.ci_available = f.at("ci_available").get<bool>();
        s.score_inf_norm = f.at("score_inf_norm").get<double>();
        s.iterations = f.at("iterations").get<int>();
        s.multistart_index = f.at("multistart_index").get<int>();
        static const char* names[4] = {"alpha", "beta", "gamma", "theta"};
        for (int i = 0; i < 4; ++i) {
            s.std_errors[i] = f.at("std_errors").at(names[i]).get<double>();
            const auto& pair = f.at("ci").at(names[i]);
            s.ci[i] = {pair.at(0).get<double>(), pair.at(1).get<double>()};
        }
        doc.fit = s;
    }
    const json& prov = j.at("provenance");
    doc.provenance.input = prov.at("input").get<std::string>();
    doc.provenance.timestamp = prov.at("timestamp").get<std::string>();
    doc.provenance.seed = prov.at("seed").get<std::uint64_t>();
    return doc;
}

ModelDocument::FitSummary summarize(const FitResult& fit, std::size_t n) {
    ModelDocument::FitSummary s;
    s.loglik = fit.loglik;
    s.aic = 2.0 * free_param_count(fit.kind) - 2.0 * fit.loglik;
    s.n = n;
    s.level = fit.level;
    s.converged = fit.converged;
    s.at_boundary = fit.at_boundary;
    s.ci_available = fit.ci_available;
    s.score_inf_norm = fit.score_inf_norm;
    s.iterations = fit.iterations;
    s.multistart_index = fit.multistart_index;
    s.std_errors = fit.std_errors;
    s.ci = fit.ci;
    return s;
}

std::string file_mtime_utc(const std::string& path) {
    struct stat st {};
    if (::stat(path.c_str(), &st) != 0) return "unknown";
    std::tm tm_utc {};
    gmtime_r(&st.st_mtime, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

} // namespace ewg::cli
