#ifndef EWG_TOOLS_MODEL_DOCUMENT_HPP
#define EWG_TOOLS_MODEL_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ewg/estimation.hpp"
#include "ewg/submodels.hpp"

namespace ewg::cli {

/// Self-describing persisted model: parameters, optional fit summary, and
/// provenance. Serialized as canonical JSON (sorted keys) so identical fits
/// produce identical bytes; the provenance timestamp is derived from the
/// input file's modification time for the same reason.
struct ModelDocument {
    std::string schema_version = "1";
    SubmodelKind kind = SubmodelKind::full;
    EwgParams params{1.0, 1.0, 1.0, 0.0};

    struct FitSummary {
        double loglik = 0.0;
        double aic = 0.0;
        std::size_t n = 0;
        double level = 0.95;
        bool converged = false;
        bool at_boundary = false;
        bool ci_available = false;
        double score_inf_norm = 0.0;
        int iterations = 0;
        int multistart_index = 0;
        Vec4 std_errors{};
        std::array<Interval, 4> ci{};
    };
    std::optional<FitSummary> fit;

    struct Provenance {
        std::string input;
        std::string timestamp;
        std::uint64_t seed = 0;
    };
    Provenance provenance;

    std::string to_json() const;
    static ModelDocument from_json(const std::string& text);
};

/// Fit summary assembled from a FitResult (AIC = 2k - 2 loglik with k the
/// restriction's free-parameter count).
ModelDocument::FitSummary summarize(const FitResult& fit, std::size_t n);

/// ISO-8601 UTC string of a file's mtime.
std::string file_mtime_utc(const std::string& path);

} // namespace ewg::cli

#endif
