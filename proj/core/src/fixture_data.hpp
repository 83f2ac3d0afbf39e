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

#ifndef STRENGTH_SRC_FIXTURE_DATA_HPP_
#define STRENGTH_SRC_FIXTURE_DATA_HPP_

#include <string_view>
#include <vector>

namespace strength::detail {

struct EmbeddedFixture {
  std::string_view name;
  std::string_view json;
};

const std::vector<EmbeddedFixture>& embedded_fixtures();
// Contents of data/CHECKSUMS at build time.
std::string_view embedded_checksums();

}  // namespace strength::detail

#endif  // STRENGTH_SRC_FIXTURE_DATA_HPP_
