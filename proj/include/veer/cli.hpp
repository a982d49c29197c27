#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "veer/facemin.hpp"

namespace veer {

struct CompileLine {
    long index = 0;
    std::string sig;
    double value = 0;
    long extra = 0;  // Euler characteristic for b1 = 1, gcd of ray norms for b1 = 2

    std::string format() const;
    static CompileLine parse(std::string_view line);
};

std::string format_compile_line(const DilatationReport& r, long index, std::string_view sig);

struct InputItem {
    long index = 0;
    std::string sig;
};

/// One "sig" or "index sig" per line; '#' starts a comment. Missing indices default to the 1-based entry number.
std::vector<InputItem> read_sig_list(std::istream& in);

struct BatchResult {
    InputItem item;
    bool ok = false;
    DilatationReport report;
    std::string error;
};

/// Dilatation pipeline chosen by b1; results in input order.
std::vector<BatchResult> run_batch(const std::vector<InputItem>& items, int jobs, const DilatationOptions& opt);

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace veer
