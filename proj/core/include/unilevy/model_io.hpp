#ifndef UNILEVY_MODEL_IO_HPP
#define UNILEVY_MODEL_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "unilevy/asym.hpp"
#include "unilevy/catalog.hpp"

namespace unilevy {

/// Model spec object: {"name": ..., "dim": d, "family": ..., "params": {...},
/// "rv_index_zero"?: a, "rv_index_inf"?: a}. Unknown fields are rejected.
ProcessModel model_from_json(const nlohmann::json& spec, const QuadratureConfig& cfg);

/// Accepts a path to a JSON spec file or an inline shortcut of the form
/// "family:key=val,key=val" (e.g. "stable:alpha=0.7,dim=3").
ProcessModel load_model(const std::string& path_or_shortcut, const QuadratureConfig& cfg);

nlohmann::json report_to_json(const ConvergenceReport& report);

} // namespace unilevy

#endif
