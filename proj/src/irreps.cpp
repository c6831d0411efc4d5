#include "monoext/irreps.hpp"

#include <map>
#include <string_view>

#include "json.hpp"
#include "monoext/error.hpp"

namespace monoext {

  // Defined in the file generated from fixtures/irreps at configure time.
  extern std::vector<std::string_view> const kIrrepFixtureJson;

  namespace {

    using Perm = std::vector<std::uint32_t>;

    Matrix parse_matrix(Field const& f, std::vector<std::vector<std::string>> const& rows) {
      std::size_t n = rows.size();
      Matrix m(f, n, n);
      for (std::size_t i = 0; i < n; ++i) {
        require(rows[i].size() == n, ErrorCode::kSchema, "fixture matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
          m.set(i, j, f.parse_scalar(rows[i][j]));
        }
      }
      return m;
    }

    struct Parsed {
      std::string name;
      std::vector<Perm> gens;
      std::vector<std::pair<std::string, std::vector<std::vector<std::vector<std::string>>>>> irreps;
    };

    std::vector<Parsed> const& parsed_fixtures() {
      static std::vector<Parsed> const all = [] {
        std::vector<Parsed> out;
        for (auto text : kIrrepFixtureJson) {
          auto j = nlohmann::json::parse(text);
          Parsed p;
          p.name = j.at("group").get<std::string>();
          p.gens = j.at("generators").get<std::vector<Perm>>();
          for (auto const& ir : j.at("irreps")) {
            p.irreps.emplace_back(ir.at("name").get<std::string>(),
                                  ir.at("generator_images").get<std::vector<std::vector<std::vector<std::string>>>>());
          }
          out.push_back(std::move(p));
        }
        return out;
      }();
      return all;
    }

    // Matrices of every element, in the breadth-first order used by
    // GroupTable::from_permutations.
    std::vector<Matrix> expand(Field const& f, std::vector<Perm> const& gens, std::vector<Matrix> const& images) {
      std::size_t degree = gens[0].size();
      Perm id(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        id[i] = static_cast<std::uint32_t>(i);
      }
      std::vector<Perm> elems{id};
      std::vector<Matrix> mats{Matrix::identity(f, images[0].rows())};
      std::map<Perm, std::uint32_t> index{{id, 0}};
      for (std::size_t k = 0; k < elems.size(); ++k) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          Perm p(degree);
          for (std::size_t i = 0; i < degree; ++i) {
            p[i] = elems[k][gens[gi][i]];
          }
          if (index.emplace(p, static_cast<std::uint32_t>(elems.size())).second) {
            elems.push_back(p);
            mats.push_back(mats[k] * images[gi]);
          }
        }
      }
      return mats;
    }

  }  // namespace

  std::vector<std::string> fixture_groups() {
    std::vector<std::string> out;
    for (auto const& p : parsed_fixtures()) {
      out.push_back(p.name);
    }
    return out;
  }

  std::optional<IrrepSet> fixture_irreps(GroupPtr g, Field const& f) {
    for (auto const& p : parsed_fixtures()) {
      GroupTable table = GroupTable::from_permutations(p.gens);
      if (table.size() != g->size()) {
        continue;
      }
      auto iso = find_isomorphism(table, *g);
      if (!iso) {
        continue;
      }
      IrrepSet set;
      set.fixture = p.name;
      for (auto const& [name, gen_images] : p.irreps) {
        std::vector<Matrix> images;
        for (auto const& rows : gen_images) {
          images.push_back(parse_matrix(f, rows));
        }
        auto mats = expand(f, p.gens, images);
        std::vector<Matrix> rho(g->size());
        for (std::uint32_t x = 0; x < table.size(); ++x) {
          rho[(*iso)[x]] = mats[x];
        }
        std::size_t dim = images[0].rows();
        set.irreps.push_back(NamedRep{name, GroupRep::make(g, f, dim, std::move(rho))});
      }
      return set;
    }
    return std::nullopt;
  }

  GroupRep fixture_irrep(GroupPtr g, Field const& f, std::string const& name) {
    auto set = fixture_irreps(g, f);
    require(set.has_value(), ErrorCode::kInvalidArgument,
            "no irreducible representation fixture for a group of order " + std::to_string(g->size()));
    for (auto& r : set->irreps) {
      if (r.name == name) {
        return r.rep;
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "fixture " + set->fixture + " has no representation named " + name);
  }

}  // namespace monoext
