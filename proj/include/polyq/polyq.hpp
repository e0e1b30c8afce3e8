// Copyright 2026 The Authors.
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

#ifndef POLYQ_POLYQ_HPP_
#define POLYQ_POLYQ_HPP_

#include "polyq/activity.hpp"
#include "polyq/constructions.hpp"
#include "polyq/core_model.hpp"
#include "polyq/corpus.hpp"
#include "polyq/document.hpp"
#include "polyq/error.hpp"
#include "polyq/geometry.hpp"
#include "polyq/polynomial.hpp"
#include "polyq/report.hpp"
#include "polyq/structure.hpp"
#include "polyq/subset.hpp"
#include "polyq/tutte.hpp"
#include "polyq/verify.hpp"

#endif  // POLYQ_POLYQ_HPP_
