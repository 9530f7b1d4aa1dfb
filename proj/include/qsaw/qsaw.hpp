// Copyright 2026 The qsawtooth authors
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

#include "qsaw/analysis.hpp"
#include "qsaw/apply.hpp"
#include "qsaw/circuit_builder.hpp"
#include "qsaw/classical.hpp"
#include "qsaw/config.hpp"
#include "qsaw/disorder.hpp"
#include "qsaw/error_model.hpp"
#include "qsaw/exact_engine.hpp"
#include "qsaw/experiments.hpp"
#include "qsaw/gates.hpp"
#include "qsaw/husimi.hpp"
#include "qsaw/io.hpp"
#include "qsaw/lattice.hpp"
#include "qsaw/linfit.hpp"
#include "qsaw/params.hpp"
#include "qsaw/register.hpp"
#include "qsaw/rng.hpp"
#include "qsaw/routing.hpp"
