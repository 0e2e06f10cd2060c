#pragma once

#include <string>

#include "json.hpp"

#include "ddmol/geometry.hpp"
#include "ddmol/physics.hpp"
#include "ddmol/register.hpp"
#include "ddmol/schedule.hpp"

namespace ddmol {

using Json = nlohmann::json;

Json to_json(const ScheduleProgram& program);
/// Throws ConfigError on malformed input.
ScheduleProgram program_from_json(const Json& j);

Json to_json(const Rotation& r);
Rotation rotation_from_json(const Json& j);

/// Amplitudes as [[re, im], ...].
Json to_json(const EncodedRegisterState& state);
EncodedRegisterState state_from_json(const Json& j);

Json to_json(const Violation& v);
Json to_json(const MeasurementRecord& m);

Json to_json(const LayoutGeometry& g);
LayoutGeometry geometry_from_json(const Json& j);

Json to_json(const MoleculeParams& p);
MoleculeParams params_from_json(const Json& j);

} // namespace ddmol
