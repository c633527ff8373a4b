// Copyright 2026 The fdcert Authors
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

#ifndef FDCERT_FDCERT_HPP_
#define FDCERT_FDCERT_HPP_

#include "fdcert/certify.hpp"
#include "fdcert/estimate.hpp"
#include "fdcert/gates.hpp"
#include "fdcert/geometry.hpp"
#include "fdcert/linalg.hpp"
#include "fdcert/moments.hpp"
#include "fdcert/sampling.hpp"

#endif  // FDCERT_FDCERT_HPP_
