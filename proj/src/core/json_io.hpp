// Copyright 2026 The coherence-toolkit developers
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>

#include <json.hpp>

#include "core/coherence.hpp"
#include "core/density.hpp"
#include "core/matrix.hpp"
#include "core/measurements.hpp"
#include "core/operator_basis.hpp"

namespace coh {

// Matrix wire format: {"dim": d, "matrix": [[[re, im], ...], ...]},
// row-major, every entry a two-element array of finite doubles.

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// Parses and validates all density matrix invariants.
DensityMatrix density_from_json(const nlohmann::json& j);

// Measurement envelope: {"kind": "mum"|"gsm"|"mub"|"sic", "dim": d,
// "params": {...}, "elements": [...]}. MUM elements are flattened band by
// band; MUB bases are flattened as rows of 1 x d vector matrices. Loading
// re-validates the family's defining conditions.

nlohmann::json measurement_to_json(const Measurement& m);
Measurement measurement_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CoherenceReport& report);

/// Flat list of the partitioned basis operators with 1-based grid metadata:
/// [{"dim":..., "matrix":..., "n":..., "b":...}, ...].
nlohmann::json basis_export_json(const PartitionedBasis& partition);

nlohmann::json family_report_to_json(const FamilyReport& report);

/// Wraps nlohmann parse errors into ParseError with position diagnostics.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace coh
