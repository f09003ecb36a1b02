#pragma once

#include "qjf/analytic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qjf::verify {

struct Options {
    std::uint64_t seed = 12345;
    double tol = 1e-8; // analytic residual tolerance (tighter per-check bounds stay fixed)
    int n_q = 30;
    int n_z = 20;

    NumericContext context() const
    {
        NumericContext ctx;
        ctx.n_q = n_q;
        ctx.n_z = n_z;
        ctx.tolerance = tol;
        return ctx;
    }
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<double> residual;
};

enum class Suite { Identities, Stability, Associativity, Dimensions, Analytic, All };

std::optional<Suite> suite_from_name(std::string_view name);
std::string suite_name(Suite s);

// Run every check of the suite; results come back sorted by name so the
// report is independent of evaluation order. Deterministic for a fixed
// seed and context.
std::vector<CheckResult> run_suite(Suite s, const Options& opt = {});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace qjf::verify
