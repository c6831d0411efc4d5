// Shipped rational irreducible representations of small groups, matched to
// a given group table by an explicit isomorphism.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoext/modules.hpp"

namespace monoext {

  struct NamedRep {
    std::string name;
    GroupRep rep;
  };

  struct IrrepSet {
    std::string fixture;  // name of the matching fixture group
    std::vector<NamedRep> irreps;
  };

  // Fixture group names in matching order.
  std::vector<std::string> fixture_groups();

  // Irreducible representations of the first fixture group isomorphic to g,
  // transported to g and reduced into f.  Empty when nothing matches.
  std::optional<IrrepSet> fixture_irreps(GroupPtr g, Field const& f);

  // One fixture irrep by name; throws kInvalidArgument when absent.
  GroupRep fixture_irrep(GroupPtr g, Field const& f, std::string const& name);

}  // namespace monoext
