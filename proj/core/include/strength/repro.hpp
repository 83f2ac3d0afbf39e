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

#ifndef STRENGTH_REPRO_HPP_
#define STRENGTH_REPRO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace strength {

struct ReproCheck {
  std::string id;
  std::vector<std::string> tags;
  std::string description;
  std::string expected;
  std::string actual;
  bool passed = false;
  std::string error;  // set when the check threw
  double seconds = 0;
};

struct ReproOptions {
  // Keep checks whose id contains the filter or that carry it as a tag.
  std::optional<std::string> filter;
  // Read fixtures (and their CHECKSUMS) from here instead of the copies
  // compiled into the library.
  std::optional<std::filesystem::path> fixture_dir;
};

struct ReproReport {
  std::vector<ReproCheck> checks;
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0; }
};

// Re-derives every published value the library covers and compares it with
// the printed one.
ReproReport run_repro(const ReproOptions& options = {});

}  // namespace strength

#endif  // STRENGTH_REPRO_HPP_
