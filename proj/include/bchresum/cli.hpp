#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bchresum::cli {

enum class Format { Text, Json, Latex, Dot };

struct RunConfig {
    std::string subcommand;
    int max_order = 5;
    int trunc_degree = 8;
    int order = 1;       // pi, diagrams
    int bernoulli_max = 10;
    Format format = Format::Text;
    std::string output_path; // empty: stdout
    std::string out_dir;     // diagrams only
    bool report_json = false;
    int threads = 1;
};

/// Exit codes: 0 success or match, 1 mismatch or nonzero residual, 2 usage
/// error. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace bchresum::cli
