// Copyright 2026 The popmatch Authors.
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

#ifndef POPMATCH_POPMATCH_HPP_
#define POPMATCH_POPMATCH_HPP_

#include "popmatch/elections.hpp"
#include "popmatch/gale_shapley.hpp"
#include "popmatch/instance.hpp"
#include "popmatch/json_io.hpp"
#include "popmatch/level_graph.hpp"
#include "popmatch/min_cost.hpp"
#include "popmatch/oracles.hpp"
#include "popmatch/popular_edge.hpp"
#include "popmatch/rotations.hpp"
#include "popmatch/unstable_popular.hpp"
#include "popmatch/verify.hpp"

#endif  // POPMATCH_POPMATCH_HPP_
