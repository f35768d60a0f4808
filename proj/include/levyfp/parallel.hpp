// This file is part of levyfp, a spectral toolkit for the radial Levy
// Fokker--Planck operator and the fractional heat equation.
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

#ifndef LEVYFP_PARALLEL_HPP
#define LEVYFP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace levyfp {

// Worker count: LEVYFP_THREADS if set, else the hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, n); grid points are independent so any
// partition is fine. Exceptions from workers are rethrown in the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace levyfp

#endif  // LEVYFP_PARALLEL_HPP
