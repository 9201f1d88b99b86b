#pragma once

// JSON views of the main result types. Every document carries "schema": 1.

#include <json.hpp>

#include "schmidt/characterize.hpp"
#include "schmidt/endo.hpp"
#include "schmidt/semigroup.hpp"
#include "schmidt/symbolic.hpp"

namespace schmidt {

  using Json = nlohmann::ordered_json;

  inline constexpr int kJsonSchema = 1;

  // Polynomials are coefficient arrays, constant term first.
  Json poly_to_json(PolyModP const& f);

  // maps, composition table (row s, column t -> index of "s then t"), flags.
  Json endo_monoid_to_json(EndoMonoid const& m);

  // Reads the "composition" table of an endo_monoid_to_json document.
  FiniteSemigroup semigroup_from_json(Json const& doc);

  Json params_to_json(std::optional<SchmidtParams> const& params);
  Json verdict_to_json(SchmidtVerdict const& v);
  Json report_to_json(CharacterizationReport const& r);
  Json model_to_json(SymbolicModel const& model, bool with_table = true);

}  // namespace schmidt
