// Copyright 2026 The lexmine Authors.
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

#ifndef LEXMINE_PARALLEL_H_
#define LEXMINE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace lexmine {

// Number of hardware threads, at least 1.
int DefaultThreads();

// Splits [0, n) into contiguous chunks and runs body(begin, end) on up to
// `threads` workers. The first exception thrown by any worker is rethrown
// on the calling thread after all workers have joined.
void ParallelFor(size_t n, int threads,
                 const std::function<void(size_t begin, size_t end)> &body);

}  // namespace lexmine

#endif  // LEXMINE_PARALLEL_H_
