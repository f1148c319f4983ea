// Copyright 2026 The qubit-bundle Authors
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

#pragma once

// Umbrella header.

#include <qubit_bundle/bundle_charts.hpp>
#include <qubit_bundle/class_extremes.hpp>
#include <qubit_bundle/dynamics.hpp>
#include <qubit_bundle/entanglement.hpp>
#include <qubit_bundle/error.hpp>
#include <qubit_bundle/linalg.hpp>
#include <qubit_bundle/sampling.hpp>
#include <qubit_bundle/tolerances.hpp>
