// Copyright 2026 The eghz Authors
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

#include "eghz/classify.hpp"
#include "eghz/errors.hpp"
#include "eghz/explore.hpp"
#include "eghz/hull_oracle.hpp"
#include "eghz/io.hpp"
#include "eghz/numerics.hpp"
#include "eghz/random.hpp"
#include "eghz/separability.hpp"
#include "eghz/states.hpp"
#include "eghz/twirl.hpp"
