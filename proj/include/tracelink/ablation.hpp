#pragma once

#include <span>
#include <vector>

#include "tracelink/metrics.hpp"
#include "tracelink/pipeline.hpp"

namespace tracelink::eval {

struct ModeReport {
    pipeline::Mode mode;
    pipeline::RunResult run;
    EvalReport report;
};

// Runs each mode over shared preprocessing. Throws Config on an empty mode set
// and Evaluation when the dataset has no source-target oracle.
std::vector<ModeReport> run_ablation(const pipeline::Prepared& prepared, std::span<const pipeline::Mode> modes,
                                     const pipeline::RunParameters& params);

}  // namespace tracelink::eval
