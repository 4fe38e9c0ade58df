#include <doctest.h>

#include <json.hpp>

#include "bergfan/catalog.hpp"
#include "bergfan/io.hpp"
#include "bergfan/moduli.hpp"

using namespace bergfan;
using nlohmann::json;

namespace {

SplitMask S(std::initializer_list<int> ends) { return split_from_elements(ends); }

}  // namespace

TEST_CASE("flats and lattice documents") {
  const Graph k4 = named_graph("k4");
  const auto doc = json::parse(flats_to_json(k4, enumerate_flats(k4)));
  CHECK(doc["schema"] == 1);
  CHECK(doc["graph"]["vertices"] == json::array({2, 3, 4, 5}));
  CHECK(doc["flats"].size() == 15);
  CHECK(doc["flats"][1]["edges"] == json::array({"2-3"}));
  CHECK(doc["flats"][1]["rank"] == 1);
  CHECK(doc["flats"][14]["blocks"] == json::array({json::array({2, 3, 4, 5})}));

  const auto lattice = flats_lattice(k4);
  const auto ldoc = json::parse(lattice_to_json(k4, lattice));
  CHECK(ldoc["covers"].size() == lattice.covers.size());
  const std::string dot = lattice_to_dot(k4, lattice);
  CHECK(dot.rfind("digraph flats {", 0) == 0);
  CHECK(dot.find("f0 -> f1;") != std::string::npos);
}

TEST_CASE("fan document") {
  const Fan fan = bergman_fan(named_graph("k4"));
  const auto doc = json::parse(fan_to_json(fan, is_balanced(fan)));
  CHECK(doc["schema"] == 1);
  CHECK(doc["ambient"].size() == 6);
  CHECK(doc["flats"].size() == 15);
  CHECK(doc["rays"].size() == 13);
  CHECK(doc["cones"].size() == 32);
  CHECK(doc["balanced"] == true);
  CHECK_FALSE(doc.contains("failing_face"));
  for (const auto& c : doc["cones"]) {
    CHECK(c["weight"] == 1);
    REQUIRE(c["provenance"].size() == 1);
    CHECK(c["provenance"][0].size() == c["rays"].size());
  }
  // Ray vectors are canonical: last coordinate 0.
  for (const auto& r : doc["rays"]) CHECK(r.back() == 0);
  CHECK_FALSE(json::parse(fan_to_json(fan)).contains("balanced"));
}

TEST_CASE("type, radial and chain documents") {
  const auto t = TropicalType::from_splits(5, {S({2, 3}), S({4, 5})});
  const auto doc = json::parse(type_to_json(t));
  CHECK(doc["ends"] == 5);
  CHECK(doc["edges"] == json::array({json::array({0, 1}), json::array({0, 2})}));
  CHECK(doc["ends_at"]["1"] == 0);
  CHECK(doc["ends_at"]["3"] == 1);
  CHECK(doc["ends_at"]["5"] == 2);

  const RadialType r{t, {0, 1, 1}};
  CHECK(json::parse(radial_to_json(r))["levels"] == json::array({json::array({1, 2})}));

  const Graph k4 = ambient_complete(5);
  const ChainOfFlats chain = psi_radial_to_cof(r);
  CHECK(json::parse(chain_to_json(k4, chain)) == json::array({json::array({"2-3", "4-5"})}));
}

TEST_CASE("moduli document and byte stability") {
  const auto m = moduli_fan_rad(5, named_graph("k4-minus-e35-e45"));
  const std::string text = moduli_to_json(m);
  CHECK(text == moduli_to_json(moduli_fan_rad(5, named_graph("k4-minus-e35-e45"))));
  const auto doc = json::parse(text);
  CHECK(doc["n"] == 5);
  CHECK(doc["radial_types"] == 20);
  CHECK(doc["complex"]["rays"].size() == 9);
  CHECK(doc["image"]["rays"].size() == 8);
  CHECK(doc["bijective"] == false);
  CHECK(doc["identified"] == false);
  // Image provenance indexes the flats of K4.
  CHECK(doc["image"]["flats"].size() == 15);
}
