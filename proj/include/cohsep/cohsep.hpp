// Copyright 2026 The cohsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHSEP_COHSEP_HPP
#define COHSEP_COHSEP_HPP

#include "cohsep/error.hpp"
#include "cohsep/linalg.hpp"
#include "cohsep/random.hpp"
#include "cohsep/states.hpp"
#include "cohsep/ggm.hpp"
#include "cohsep/coherence.hpp"
#include "cohsep/criteria.hpp"
#include "cohsep/tripartite.hpp"
#include "cohsep/families.hpp"
#include "cohsep/io.hpp"
#include "cohsep/batch.hpp"

#endif  // COHSEP_COHSEP_HPP
