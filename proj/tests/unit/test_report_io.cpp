#include "doctest.h"

#include <cstring>
#include <random>
#include <sstream>

#include "casimir/report_io.hpp"
#include "casimir/stack.hpp"

using namespace casimir;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

StackConfig random_stack(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto k = codata_constants();
  StackConfig c;
  c.layers = 1 + static_cast<std::int64_t>(u(rng) * 1e7);
  c.disk_diameter = 0.01 + u(rng);
  c.gap = 1e-9 + 50e-9 * u(rng);
  c.spacer = SpacerMaterial::create(1.0 + u(rng));
  c.mirror = MirrorMaterial::create(50e-9 + 200e-9 * u(rng), k);
  c.layer_pitch = c.gap + 100e-9 * u(rng) + 1e-9;
  c.g = 20.0 * u(rng);
  c.reduction_override = 0.01 + 0.9 * u(rng);
  c.declared_total_thickness = 0.05 + u(rng);
  c.references.push_back({"other", 1e-18 + 1e-15 * u(rng)});
  return c;
}

}  // namespace

TEST_CASE("force report json round trip is bit exact") {
  const auto k = codata_constants();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto rep = stack_force(random_stack(rng), k);
    const std::string text = json(rep).dump();
    const auto back = json::parse(text).get<ForceReport>();
    CHECK(same_bits(back.force_total, rep.force_total));
    CHECK(same_bits(back.force_per_layer, rep.force_per_layer));
    CHECK(same_bits(back.eta_used, rep.eta_used));
    CHECK(same_bits(back.optical_gap, rep.optical_gap));
    CHECK(same_bits(back.area, rep.area));
    CHECK(same_bits(back.config.gap, rep.config.gap));
    CHECK(same_bits(back.config.mirror.plasma_frequency, rep.config.mirror.plasma_frequency));
    CHECK(same_bits(*back.config.reduction_override, *rep.config.reduction_override));
    CHECK(back.config.layers == rep.config.layers);
    CHECK(same_bits(back.constants.pi_sq_hbar_c_over_240, rep.constants.pi_sq_hbar_c_over_240));
    CHECK(back.notes == rep.notes);
    CHECK(back.reference_comparisons.size() == rep.reference_comparisons.size());
    CHECK(json(back).dump() == text);
  }
}

TEST_CASE("lifshitz report with optional fields round trips") {
  const auto k = codata_constants();
  StackConfig c;
  c.layers = 10;
  c.disk_diameter = 0.1;
  c.gap = 5e-9;
  c.layer_pitch = 1e-7;
  c.mirror = MirrorMaterial::aluminium(k);
  const auto rep = stack_force(c, k);
  const std::string text = json(rep).dump();
  const auto back = json::parse(text).get<ForceReport>();
  CHECK(json(back).dump() == text);
  CHECK_FALSE(back.config.reduction_override.has_value());
  CHECK(same_bits(*back.eta_physical_gap, *rep.eta_physical_gap));
  CHECK(json::parse(text).at("direction") == "outward");
}

TEST_CASE("number formatting is lossless") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> e(-300.0, 300.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::pow(10.0, e(rng)) * (i % 2 ? -1.0 : 1.0);
    CHECK(same_bits(std::stod(io::format_number(v)), v));
  }
}

TEST_CASE("flatten uses dotted paths") {
  const json doc = {{"a", {{"b", 1.5}, {"c", {1, 2}}}}, {"d", "x"}, {"e", nullptr}};
  const auto row = io::flatten(doc);
  REQUIRE(row.size() == 5);
  CHECK(row[0].first == "a.b");
  CHECK(row[1].first == "a.c.0");
  CHECK(row[2].first == "a.c.1");
  CHECK(row[3].first == "d");
  CHECK(row[4].first == "e");
}

TEST_CASE("csv and json carry the same numbers") {
  const auto k = codata_constants();
  std::mt19937_64 rng(3);
  std::vector<io::FlatRow> rows;
  std::vector<json> docs;
  for (int i = 0; i < 20; ++i) {
    docs.push_back(json(stack_force(random_stack(rng), k)));
    rows.push_back(io::flatten(docs.back()));
  }
  std::stringstream ss;
  io::write_csv(ss, rows);
  const auto table = io::read_csv(ss);
  REQUIRE(table.size() == rows.size() + 1);
  const auto& header = table[0];
  std::size_t numeric = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [key, value] : rows[r]) {
      const auto col = std::find(header.begin(), header.end(), key) - header.begin();
      REQUIRE(static_cast<std::size_t>(col) < header.size());
      const std::string& cell = table[r + 1][col];
      if (value.is_number()) {
        CHECK(same_bits(std::stod(cell), value.get<double>()));
        ++numeric;
      } else if (value.is_string()) {
        CHECK(cell == value.get<std::string>());
      }
    }
  }
  CHECK(numeric > 100);
}

TEST_CASE("table output") {
  std::stringstream ss;
  io::write_table(ss, {io::flatten(json{{"force", 1.25}, {"label", "x"}})});
  const std::string s = ss.str();
  CHECK(s.find("force") != std::string::npos);
  CHECK(s.find("1.25") != std::string::npos);
}
