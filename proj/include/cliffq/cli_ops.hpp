#pragma once

#include <string>

namespace cliffq {
namespace cli {

// Exit codes: 0 success, 2 usage/parse error, 3 domain error (not-rigid,
// superluminal, inexact without --approx, singular when the inverse was
// demanded). Failures put a machine-readable JSON object on stderr.
struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_table(const std::string& signature_text, const std::string& format);
CliResult run_census(const std::string& signature_text);
CliResult run_rep(const std::string& signature_text, const std::string& target);
CliResult run_rotate(const std::string& scene_json_text, bool approx, double tol);
CliResult run_boost(const std::string& events_json_text, const std::string& beta_text, bool approx,
                    double tol);
CliResult run_invert(const std::string& multivector_json_text);

}  // namespace cli
}  // namespace cliffq
