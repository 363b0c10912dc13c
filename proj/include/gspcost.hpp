/*
 * Copyright (c) 2026 The gspcost Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once
#pragma once

#include "gspcost/acceptability.hpp"
#include "gspcost/booster.hpp"
#include "gspcost/data.hpp"
#include "gspcost/error.hpp"
#include "gspcost/fermion.hpp"
#include "gspcost/hamiltonian_io.hpp"
#include "gspcost/pauli.hpp"
#include "gspcost/pipeline.hpp"
#include "gspcost/resources.hpp"
#include "gspcost/spa.hpp"
#include "gspcost/spectral.hpp"
