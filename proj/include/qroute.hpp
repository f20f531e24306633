// Copyright 2026 The qroute developers
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

// Umbrella header: the full placement-and-routing library, minus the JSON
// record helpers (include qroute/records_io.hpp separately for those).

#pragma once

#include "qroute/bench.hpp"
#include "qroute/circuit.hpp"
#include "qroute/coupling_graph.hpp"
#include "qroute/layering.hpp"
#include "qroute/linear_paths.hpp"
#include "qroute/matching.hpp"
#include "qroute/placement.hpp"
#include "qroute/qasm.hpp"
#include "qroute/random_circuit.hpp"
#include "qroute/rng.hpp"
#include "qroute/router.hpp"
#include "qroute/transpile.hpp"
#include "qroute/verifier.hpp"
