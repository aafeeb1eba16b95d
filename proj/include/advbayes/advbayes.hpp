// Copyright 2026 The advbayes Authors
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

#ifndef ADVBAYES_ADVBAYES_HPP_
#define ADVBAYES_ADVBAYES_HPP_

#include "advbayes/catalog.hpp"
#include "advbayes/certify.hpp"
#include "advbayes/commands.hpp"
#include "advbayes/conditions.hpp"
#include "advbayes/config.hpp"
#include "advbayes/density.hpp"
#include "advbayes/errors.hpp"
#include "advbayes/intervals.hpp"
#include "advbayes/polynomial.hpp"
#include "advbayes/risk.hpp"
#include "advbayes/serialize.hpp"
#include "advbayes/solver.hpp"

#endif  // ADVBAYES_ADVBAYES_HPP_
