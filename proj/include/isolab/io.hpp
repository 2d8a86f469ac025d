// Copyright 2026 The isolab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ISOLAB_IO_HPP
#define ISOLAB_IO_HPP

#include <json.hpp>
#include <string>

#include "isolab/channels.hpp"

namespace isolab {

using Json = nlohmann::ordered_json;

/// States accept {"re": [[4x4]], "im": [[4x4]]} (row-major) or
/// {"a": [3], "b": [3], "T": [[3x3]]}.
DensityMatrix4 state_from_json(const Json& j);
Json state_to_json(const DensityMatrix4& rho);

/// {"class": "Kinf", "axis": [0,1,0], "pi_axis": [0,0,1]};
/// K2 carries "frame": [[3],[3],[3]] (rows are the three axes).
SubgroupDescriptor descriptor_from_json(const Json& j);
Json descriptor_to_json(const SubgroupDescriptor& d);

/// Channels accept {"kraus": [{"re": [[2x2]], "im": [[2x2]]}, ...]} or
/// {"lambda": [[3x3]], "t": [3]}.
QubitChannelPTM channel_from_json(const Json& j);
Json channel_to_json(const QubitChannelPTM& ch);

Json report_to_json(const IsotropyReport& rep);

Json load_json_file(const std::string& path);

}  // namespace isolab

#endif  // ISOLAB_IO_HPP
