#ifndef EWG_TOOLS_COMMANDS_HPP
#define EWG_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ewg::cli {

// Stable exit-code contract: 0 success, 2 input error, 3 non-convergence.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_no_convergence = 3;

struct ParamFlags {
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> gamma_shape;
    std::optional<double> theta;
};

struct FitArgs {
    std::string data_file;
    std::string kind = "full";
    double level = 0.95;
    std::string out;
    std::uint64_t seed = 0;
};

struct SimulateArgs {
    ParamFlags params;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string method = "inversion";
    std::string out;
};

struct EvalArgs {
    std::optional<std::string> model;
    ParamFlags params;
    std::string fn = "pdf";
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    std::string out; // empty -> stdout
};

struct StatsArgs {
    ParamFlags params;
    bool mean = false;
    bool variance = false;
    std::vector<int> moments;
    std::vector<double> renyi;
    bool shannon = false;
    std::vector<std::string> order_moments; // "r,n,k"
    std::vector<std::string> residuals;     // "t,r"
};

int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int cmd_stats(const StatsArgs& args, std::ostream& out, std::ostream& err);

} // namespace ewg::cli

#endif
