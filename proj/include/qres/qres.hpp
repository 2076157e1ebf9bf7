// Copyright 2026 The qres authors
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

#include "qres/fixtures.hpp"
#include "qres/gauss1d.hpp"
#include "qres/hamio.hpp"
#include "qres/jordan_wigner.hpp"
#include "qres/lcu_sim.hpp"
#include "qres/linalg.hpp"
#include "qres/measure.hpp"
#include "qres/pauli.hpp"
#include "qres/recovery.hpp"
#include "qres/trajectory.hpp"
#include "qres/types.hpp"
