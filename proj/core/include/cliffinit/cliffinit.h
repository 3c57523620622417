// Copyright 2026 The cliffinit Authors
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

#ifndef CLIFFINIT_CLIFFINIT_H
#define CLIFFINIT_CLIFFINIT_H

#include "cliffinit/ansatz.h"
#include "cliffinit/baselines.h"
#include "cliffinit/error.h"
#include "cliffinit/forest.h"
#include "cliffinit/hamiltonian.h"
#include "cliffinit/magic.h"
#include "cliffinit/objective.h"
#include "cliffinit/pauli_string.h"
#include "cliffinit/rng.h"
#include "cliffinit/search.h"
#include "cliffinit/search_space.h"
#include "cliffinit/statevector.h"
#include "cliffinit/tableau.h"
#include "cliffinit/trace_io.h"

#endif
