// Copyright 2026 The braidtrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "braidtrace/braid.hpp"
#include "braidtrace/dqc1.hpp"
#include "braidtrace/jones_wenzl.hpp"
#include "braidtrace/jw_encoding.hpp"
#include "braidtrace/numeric.hpp"
#include "braidtrace/oracle.hpp"
#include "braidtrace/path_encoding.hpp"
#include "braidtrace/path_model.hpp"
#include "braidtrace/sparse_state.hpp"
#include "braidtrace/threading.hpp"
#include "braidtrace/verify.hpp"
