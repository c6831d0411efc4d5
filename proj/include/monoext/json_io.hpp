// JSON input and output: monoids (tables and builder descriptions),
// representations with rationals written as strings, and Ext reports.
//
// Output objects use insertion-ordered keys, so a report serializes to the
// same bytes on every run.
#pragma once

#include <string>

#include <json.hpp>

#include "monoext/ext.hpp"
#include "monoext/monoid.hpp"
#include "monoext/rep.hpp"

namespace monoext {

  using Json = nlohmann::ordered_json;

  // Accepts {"size", "identity", "table", "labels"} or a builder object
  // with "type" one of transformations, full_tn, matrix_monoid, affine,
  // crossed, opposite, semilattice, nilpotent, band, cyclic.
  FiniteMonoid monoid_from_json(Json const& j, MonoidOptions const& options = {});
  Json monoid_to_json(FiniteMonoid const& m);

  // Reads a file, or parses the text itself when it starts with '{' or '['.
  Json read_json(std::string const& path_or_text);

  // {"dim", "field", "matrices": {"<element index>": [[...]]}}.  Matrices
  // may be given for a generating subset only; the rest are filled in by
  // multiplying out, and the result is validated.
  MonRep monrep_from_json(Json const& j, std::shared_ptr<FiniteMonoid const> m, Field const& field);
  Json monrep_to_json(MonRep const& v);

  // Keys of "matrices" are monoid element indices of the embedded group
  // elements.
  GroupRep grouprep_from_json(Json const& j, std::shared_ptr<GroupTable const> g, Field const& field);
  Json grouprep_to_json(GroupRep const& v);

  // {"method", "dims": {"<n>": d}, "assumptions_checked": {...}, "valid_through",
  // "notes"}.
  Json ext_report_to_json(ExtReport const& r);

}  // namespace monoext
