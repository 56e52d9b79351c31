#include "tracelink/ablation.hpp"

#include "tracelink/error.hpp"

namespace tracelink::eval {

std::vector<ModeReport> run_ablation(const pipeline::Prepared& prepared, std::span<const pipeline::Mode> modes,
                                     const pipeline::RunParameters& params) {
    if (modes.empty()) throw Error(ErrorKind::Config, "no ablation modes given");
    if (prepared.dataset.oracle_st.empty()) {
        throw Error(ErrorKind::Config, "dataset has no source-target oracle");
    }
    std::vector<ModeReport> out;
    out.reserve(modes.size());
    for (const auto& mode : modes) {
        ModeReport r{mode, pipeline::run(prepared, mode, params), {}};
        try {
            r.report = evaluate(r.run.adjusted, prepared.dataset.oracle_st);
        } catch (const Error& e) {
            throw e.with_context("mode '" + mode.name() + "'");
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace tracelink::eval
