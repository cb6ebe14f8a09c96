// Copyright 2026 The enwit Authors
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

#ifndef ENWIT_ENWIT_HPP_
#define ENWIT_ENWIT_HPP_

#include "enwit/errors.hpp"
#include "enwit/hamiltonian.hpp"
#include "enwit/measurement.hpp"
#include "enwit/operator_core.hpp"
#include "enwit/random.hpp"
#include "enwit/robustness.hpp"
#include "enwit/sep_energy.hpp"
#include "enwit/thermal.hpp"
#include "enwit/witness.hpp"

#endif  // ENWIT_ENWIT_HPP_
