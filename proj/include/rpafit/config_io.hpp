// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "rpafit/criteria.hpp"
#include "rpafit/csv.hpp"
#include "rpafit/synth.hpp"

namespace rpafit {

/// JSON loaders for the three declarative inputs. Unknown keys are rejected
/// so typos fail loudly. All throw ConfigError on bad content and
/// FileNotFoundError for missing files.

AssessmentConfig parse_assessment_config(const std::string& json_text);
AssessmentConfig load_assessment_config(const std::filesystem::path& path);

ColumnMapping parse_column_mapping(const std::string& json_text);
ColumnMapping load_column_mapping(const std::filesystem::path& path);

SynthSpec parse_synth_spec(const std::string& json_text);
SynthSpec load_synth_spec(const std::filesystem::path& path);

}  // namespace rpafit
