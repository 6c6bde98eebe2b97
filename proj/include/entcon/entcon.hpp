// Copyright 2026 The entcon Authors
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

#pragma once

#include "entcon/catalog.hpp"
#include "entcon/convexroof.hpp"
#include "entcon/entarray.hpp"
#include "entcon/entcore.hpp"
#include "entcon/errors.hpp"
#include "entcon/io.hpp"
#include "entcon/partition.hpp"
#include "entcon/qstate.hpp"
#include "entcon/rng.hpp"
#include "entcon/tgx.hpp"
