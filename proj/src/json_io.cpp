#include "monoext/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "monoext/builders.hpp"
#include "monoext/error.hpp"

namespace monoext {

  namespace {

    template <class T>
    T get_field(Json const& j, char const* key) {
      require(j.is_object() && j.contains(key), ErrorCode::kSchema, std::string("missing key \"") + key + "\"");
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const& ex) {
        throw Error(ErrorCode::kSchema, std::string("bad value for \"") + key + "\": " + ex.what());
      }
    }

    Rational parse_entry(Json const& x, Field const& f) {
      if (x.is_string()) {
        return f.parse_scalar(x.get<std::string>());
      }
      if (x.is_number_integer()) {
        return f.from_int(x.get<long>());
      }
      throw Error(ErrorCode::kSchema, "matrix entries must be strings or integers");
    }

    Matrix parse_matrix(Json const& rows, std::size_t dim, Field const& f) {
      require(rows.is_array() && rows.size() == dim, ErrorCode::kSchema, "matrix has the wrong number of rows");
      Matrix m(f, dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        require(rows[i].is_array() && rows[i].size() == dim, ErrorCode::kSchema,
                "matrix row has the wrong length");
        for (std::size_t k = 0; k < dim; ++k) {
          m.set(i, k, parse_entry(rows[i][k], f));
        }
      }
      return m;
    }

    Json matrix_to_json(Matrix const& m) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
          row.push_back(m.field().scalar_to_string(m.at(i, k)));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    }

    void check_field(Json const& j, Field const& f) {
      if (!j.contains("field")) {
        return;
      }
      Field stored = Field::parse(get_field<std::string>(j, "field"));
      // Rational data may be reduced into any field it makes sense in.
      require(stored == f || stored.is_rational(), ErrorCode::kFieldMismatch,
              "representation is over " + stored.to_string() + ", requested " + f.to_string());
    }

    // Given matrices for some elements, fills in all products by closure.
    // mul(a, b) is the product in the index set of size n.
    std::vector<Matrix> close_matrices(std::map<std::uint32_t, Matrix> given,
                                       std::size_t n,
                                       std::size_t dim,
                                       Field const& f,
                                       std::function<std::uint32_t(std::uint32_t, std::uint32_t)> const& mul) {
      std::vector<Matrix> rho(n);
      std::vector<char> known(n, 0);
      rho[0] = Matrix::identity(f, dim);
      known[0] = 1;
      std::vector<std::uint32_t> gens;
      for (auto& [idx, mat] : given) {
        require(idx < n, ErrorCode::kSchema, "matrix key out of range: " + std::to_string(idx));
        gens.push_back(idx);
        rho[idx] = mat;
        known[idx] = 1;
      }
      std::vector<std::uint32_t> queue;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (known[i]) {
          queue.push_back(i);
        }
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t a = queue[head];
        for (auto g : gens) {
          std::uint32_t p = mul(g, a);
          if (!known[p]) {
            rho[p] = rho[g] * rho[a];
            known[p] = 1;
            queue.push_back(p);
          }
        }
      }
      require(queue.size() == n, ErrorCode::kSchema, "the given matrices do not generate the whole action");
      return rho;
    }

    std::map<std::uint32_t, Matrix> parse_matrices(Json const& j, std::size_t dim, Field const& f) {
      require(j.contains("matrices") && j.at("matrices").is_object(), ErrorCode::kSchema,
              "representation needs a \"matrices\" object");
      std::map<std::uint32_t, Matrix> out;
      for (auto const& [key, value] : j.at("matrices").items()) {
        std::uint32_t idx = 0;
        try {
          std::size_t used = 0;
          idx = static_cast<std::uint32_t>(std::stoul(key, &used));
          require(used == key.size(), ErrorCode::kSchema, "bad matrix key " + key);
        } catch (std::logic_error const&) {
          throw Error(ErrorCode::kSchema, "bad matrix key " + key);
        }
        out.emplace(idx, parse_matrix(value, dim, f));
      }
      return out;
    }

    std::vector<std::vector<std::uint32_t>> int_lists(Json const& j, char const* key) {
      return get_field<std::vector<std::vector<std::uint32_t>>>(j, key);
    }

  }  // namespace

  Json read_json(std::string const& path_or_text) {
    std::string text;
    auto first = path_or_text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (path_or_text[first] == '{' || path_or_text[first] == '[')) {
      text = path_or_text;
    } else {
      std::ifstream in(path_or_text);
      require(in.good(), ErrorCode::kInvalidArgument, "cannot read " + path_or_text);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    try {
      return Json::parse(text);
    } catch (nlohmann::json::exception const& ex) {
      throw Error(ErrorCode::kSchema, std::string("invalid JSON: ") + ex.what());
    }
  }

  FiniteMonoid monoid_from_json(Json const& j, MonoidOptions const& options) {
    require(j.is_object(), ErrorCode::kSchema, "a monoid must be a JSON object");
    if (!j.contains("type")) {
      auto table = int_lists(j, "table");
      auto size = get_field<std::size_t>(j, "size");
      require(table.size() == size, ErrorCode::kSchema, "table has the wrong number of rows");
      for (auto const& row : table) {
        require(row.size() == size, ErrorCode::kSchema, "table row has the wrong length");
      }
      Element identity = j.contains("identity") ? get_field<Element>(j, "identity") : 0;
      std::vector<std::string> labels;
      if (j.contains("labels")) {
        labels = get_field<std::vector<std::string>>(j, "labels");
      }
      require(size <= options.size_cap, ErrorCode::kSizeCap, "monoid exceeds the size cap");
      return FiniteMonoid::from_table(table, identity, labels, options);
    }
    auto type = get_field<std::string>(j, "type");
    if (type == "transformations") {
      return transformation_monoid(get_field<std::size_t>(j, "degree"), int_lists(j, "generators"), options);
    }
    if (type == "full_tn") {
      return full_transformation_monoid(get_field<std::size_t>(j, "n"), options);
    }
    if (type == "matrix_monoid") {
      return matrix_monoid(get_field<std::size_t>(j, "n"), get_field<std::uint32_t>(j, "q"), options);
    }
    if (type == "affine") {
      return affine_monoid(get_field<std::size_t>(j, "n"), get_field<std::uint32_t>(j, "q"), options);
    }
    if (type == "opposite") {
      require(j.contains("of"), ErrorCode::kSchema, "missing key \"of\"");
      return monoid_from_json(j.at("of"), options).opposite();
    }
    if (type == "semilattice") {
      return two_element_semilattice();
    }
    if (type == "nilpotent") {
      return nilpotent_monoid();
    }
    if (type == "band") {
      return rectangular_band_monoid();
    }
    if (type == "cyclic") {
      return cyclic_group_monoid(get_field<std::size_t>(j, "n"));
    }
    if (type == "crossed") {
      require(j.contains("M") && j.contains("N"), ErrorCode::kSchema, "crossed product needs \"M\" and \"N\"");
      FiniteMonoid base = monoid_from_json(j.at("M"), options);
      FiniteMonoid acting = monoid_from_json(j.at("N"), options);
      auto alpha = int_lists(j, "alpha");
      auto sys = CrossedSystem::semidirect(std::move(base), std::move(acting), std::move(alpha));
      if (j.contains("c")) {
        auto c = int_lists(j, "c");
        std::size_t sn = sys.acting.size();
        require(c.size() == sn, ErrorCode::kSchema, "cocycle must be |N| x |N|");
        for (std::size_t a = 0; a < sn; ++a) {
          require(c[a].size() == sn, ErrorCode::kSchema, "cocycle must be |N| x |N|");
          for (std::size_t b = 0; b < sn; ++b) {
            sys.cocycle[a * sn + b] = c[a][b];
          }
        }
      }
      return crossed_product(sys, options);
    }
    throw Error(ErrorCode::kSchema, "unknown monoid type \"" + type + "\"");
  }

  Json monoid_to_json(FiniteMonoid const& m) {
    Json j;
    j["size"] = m.size();
    j["identity"] = 0;
    j["table"] = m.table_rows();
    j["labels"] = m.labels();
    return j;
  }

  MonRep monrep_from_json(Json const& j, std::shared_ptr<FiniteMonoid const> m, Field const& field) {
    check_field(j, field);
    auto dim = get_field<std::size_t>(j, "dim");
    auto given = parse_matrices(j, dim, field);
    auto rho = close_matrices(std::move(given), m->size(), dim, field,
                              [&](std::uint32_t a, std::uint32_t b) { return m->mul(a, b); });
    return MonRep::make(std::move(m), field, dim, std::move(rho));
  }

  Json monrep_to_json(MonRep const& v) {
    Json j;
    j["dim"] = v.dim();
    j["field"] = v.field().to_string();
    Json mats = Json::object();
    for (Element m = 0; m < v.monoid().size(); ++m) {
      mats[std::to_string(m)] = matrix_to_json(v.rho(m));
    }
    j["matrices"] = std::move(mats);
    return j;
  }

  GroupRep grouprep_from_json(Json const& j, std::shared_ptr<GroupTable const> g, Field const& field) {
    require(g->has_embedding(), ErrorCode::kInvalidArgument, "group has no embedding into a monoid");
    check_field(j, field);
    auto dim = get_field<std::size_t>(j, "dim");
    std::map<std::uint32_t, Matrix> given;
    for (auto& [elem, mat] : parse_matrices(j, dim, field)) {
      auto idx = g->index_of(elem);
      require(idx.has_value(), ErrorCode::kGroupMismatch,
              "element " + std::to_string(elem) + " is not in the maximal subgroup");
      given.emplace(*idx, std::move(mat));
    }
    auto rho = close_matrices(std::move(given), g->size(), dim, field,
                              [&](std::uint32_t a, std::uint32_t b) { return g->mul(a, b); });
    return GroupRep::make(std::move(g), field, dim, std::move(rho));
  }

  Json grouprep_to_json(GroupRep const& v) {
    Json j;
    j["dim"] = v.dim();
    j["field"] = v.field().to_string();
    Json mats = Json::object();
    for (std::uint32_t g = 0; g < v.group().size(); ++g) {
      std::uint32_t key = v.group().has_embedding() ? v.group().embedding()[g] : g;
      mats[std::to_string(key)] = matrix_to_json(v.rho(g));
    }
    j["matrices"] = std::move(mats);
    return j;
  }

  Json ext_report_to_json(ExtReport const& r) {
    Json j;
    j["method"] = r.method;
    Json dims = Json::object();
    for (std::size_t k = 0; k < r.dims.size(); ++k) {
      dims[std::to_string(r.lo + static_cast<int>(k))] = r.dims[k];
    }
    j["dims"] = std::move(dims);
    Json assumptions = Json::object();
    for (auto const& [key, value] : r.assumptions) {
      assumptions[key] = value;
    }
    j["assumptions_checked"] = std::move(assumptions);
    j["valid_through"] = r.valid_through;
    j["notes"] = r.notes;
    return j;
  }

}  // namespace monoext
