// Copyright 2026 The Leadlag Authors. - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header: the whole library.

#pragma once

#define LEADLAG_VERSION_MAJOR 0
#define LEADLAG_VERSION_MINOR 1
#define LEADLAG_VERSION_PATCH 0

#include "leadlag/errors.hpp"
#include "leadlag/granger.hpp"
#include "leadlag/indicator.hpp"
#include "leadlag/panel.hpp"
#include "leadlag/panel_io.hpp"
#include "leadlag/rmt.hpp"
#include "leadlag/rng.hpp"
#include "leadlag/stats.hpp"
#include "leadlag/synth.hpp"
