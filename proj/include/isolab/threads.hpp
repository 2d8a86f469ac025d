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

#ifndef ISOLAB_THREADS_HPP
#define ISOLAB_THREADS_HPP

namespace isolab {

/// Worker count for the parallel kernels: an explicit request wins,
/// then the ISOLAB_THREADS environment cap, then the OpenMP default.
int effective_threads(int requested);

}  // namespace isolab

#endif  // ISOLAB_THREADS_HPP
