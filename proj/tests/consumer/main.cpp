// Copyright 2026 The Strength Authors
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

#include <cstdio>

#include "strength/families.hpp"
#include "strength/oracle.hpp"

int main() {
  const auto r = strength::exact_strength(strength::hypercube(3));
  std::printf("str(Q3) = %d\n", r.value);
  return r.value == 11 ? 0 : 1;
}
