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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "strength/errors.hpp"
#include "strength/families.hpp"
#include "strength/fixtures.hpp"
#include "strength/graph_io.hpp"
#include "strength/labeling.hpp"
#include "test_support.hpp"

namespace strength {
namespace {

namespace fs = std::filesystem;

StrengthCertificate FromFixture(const Fixture& fx, int lower, std::string bound) {
  StrengthCertificate c;
  c.graph = fx.graph;
  c.witness = fx.numbering.labels();
  c.claimed = fx.strength;
  c.lower_bound_name = std::move(bound);
  c.lower_bound_value = lower;
  return c;
}

TEST(Fixtures, NamesAndEmbeddedCopies) {
  EXPECT_EQ(fixture_names(),
            (std::vector<std::string>{"Q5", "Q6", "example21", "example22"}));
  for (const auto& name : fixture_names()) {
    const Fixture fx = load_fixture(name);
    EXPECT_EQ(fx.source, "embedded");
    EXPECT_EQ(strength_of(fx.graph, fx.numbering), fx.strength) << name;
  }
  EXPECT_THROW(load_fixture("Q9"), ParameterError);
}

TEST(Fixtures, DirectoryMatchesEmbedded) {
  for (const auto& name : fixture_names()) {
    const Fixture a = load_fixture(name);
    const Fixture b = load_fixture(name, testing::fixture_dir());
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.numbering, b.numbering);
  }
}

TEST(Fixtures, HypercubeTables) {
  const Fixture q5 = load_fixture("Q5");
  EXPECT_EQ(q5.graph, hypercube(5));
  EXPECT_EQ(q5.strength, 40);
  EXPECT_EQ(q5.printed_strength, 40);
  const Fixture q6 = load_fixture("Q6");
  EXPECT_EQ(q6.graph, hypercube(6));
  EXPECT_EQ(q6.strength, 79);
  for (const auto& d : q5.divergences) EXPECT_NE(d.printed, d.computed);
}

TEST(Fixtures, ExampleGraphs) {
  const Fixture a = load_fixture("example21");
  EXPECT_EQ(a.graph.order(), 12);
  EXPECT_EQ(a.strength, 14);
  EXPECT_EQ(min_degree(a.graph), 2);
  const Fixture b = load_fixture("example22");
  EXPECT_EQ(b.graph.order(), 15);
  EXPECT_EQ(b.strength, 17);
  EXPECT_EQ(b.sequences.size(), 3U);
}

TEST(Fixtures, ChecksumMismatchIsAnIntegrityError) {
  EXPECT_THROW(load_fixture("Q5", testing::data_dir() / "corrupted_fixtures"), IntegrityError);
  EXPECT_NO_THROW(load_fixture("Q6", testing::data_dir() / "corrupted_fixtures"));
}

TEST(Fixtures, StrengthMismatchIsAnIntegrityError) {
  // Checksums aside, the parser itself recomputes the printed strength.
  std::string text = read_text_file(testing::data_dir() / "corrupted_fixtures" / "Q5.json");
  EXPECT_THROW(parse_fixture("Q5", text), IntegrityError);
  EXPECT_THROW(parse_fixture("Q5", "{"), Error);
  EXPECT_THROW(parse_fixture("Q5", "{}"), Error);
}

TEST(Fixtures, MissingDirectoryEntry) {
  const fs::path dir = fs::temp_directory_path() / "strength_fixture_missing";
  fs::create_directories(dir);
  std::ofstream(dir / "CHECKSUMS") << "";
  EXPECT_THROW(load_fixture("Q5", dir), Error);
  fs::remove_all(dir);
}

TEST(Fixtures, Fnv1a) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(NegativeControl, VerifyRejectsCorruptedWitness) {
  for (const auto& name : fixture_names()) {
    const Fixture fx = load_fixture(name);
    const auto good = FromFixture(fx, fx.graph.order() + min_degree(fx.graph), "p+delta");
    ASSERT_NE(verify_certificate(good).status, VerdictStatus::kInvalid) << name;

    auto duplicated = good;
    duplicated.witness[1] = duplicated.witness[0];
    EXPECT_EQ(verify_certificate(duplicated).status, VerdictStatus::kInvalid) << name;

    // Swap the labels 1 and p: a bijection again, but the claim no longer
    // matches the witness.
    auto swapped = good;
    auto& w = swapped.witness;
    const auto lo = std::find(w.begin(), w.end(), 1);
    const auto hi = std::find(w.begin(), w.end(), static_cast<int>(w.size()));
    std::iter_swap(lo, hi);
    if (strength_of(fx.graph, Numbering(w)) != good.claimed) {
      EXPECT_EQ(verify_certificate(swapped).status, VerdictStatus::kInvalid) << name;
    }

    auto overclaimed = good;
    overclaimed.lower_bound_value = good.claimed + 1;
    EXPECT_EQ(verify_certificate(overclaimed).status, VerdictStatus::kInvalid) << name;
  }
}

}  // namespace
}  // namespace strength
