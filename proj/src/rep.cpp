#include "monoext/rep.hpp"

#include "monoext/error.hpp"
#include "monoext/linalg.hpp"

namespace monoext {

  namespace {

    void check_shapes(std::vector<Matrix> const& rho, std::size_t count, std::size_t dim,
                      Field const& field) {
      require(rho.size() == count, ErrorCode::kDimensionMismatch,
              "representation needs one matrix per element");
      for (auto const& m : rho) {
        require(m.rows() == dim && m.cols() == dim, ErrorCode::kDimensionMismatch,
                "representation matrix has the wrong size");
        require(m.field() == field, ErrorCode::kFieldMismatch,
                "representation matrix over the wrong field");
      }
    }

  }  // namespace

  GroupRep GroupRep::make(std::shared_ptr<GroupTable const> group,
                          Field field,
                          std::size_t dim,
                          std::vector<Matrix> rho) {
    require(group != nullptr, ErrorCode::kInvalidArgument, "group representation without group");
    check_shapes(rho, group->size(), dim, field);
    require(rho[0].is_identity(), ErrorCode::kNotHomomorphism,
            "group identity does not act as the identity matrix");
    for (std::uint32_t a = 0; a < group->size(); ++a) {
      for (std::uint32_t b = 0; b < group->size(); ++b) {
        require(rho[a] * rho[b] == rho[group->mul(a, b)], ErrorCode::kNotHomomorphism,
                "group representation is not multiplicative");
      }
    }
    GroupRep r;
    r._group = std::move(group);
    r._field = field;
    r._dim = dim;
    r._rho = std::move(rho);
    return r;
  }

  GroupRep GroupRep::trivial(std::shared_ptr<GroupTable const> group, Field field) {
    std::vector<Matrix> rho(group->size(), Matrix::identity(field, 1));
    return make(std::move(group), field, 1, std::move(rho));
  }

  GroupRep GroupRep::permutation(std::shared_ptr<GroupTable const> group,
                                 Field field,
                                 std::vector<std::vector<std::uint32_t>> const& perm) {
    require(perm.size() == group->size(), ErrorCode::kDimensionMismatch,
            "permutation action needs one permutation per group element");
    std::size_t n = perm.empty() ? 0 : perm[0].size();
    std::vector<Matrix> rho;
    rho.reserve(perm.size());
    for (auto const& p : perm) {
      require(p.size() == n, ErrorCode::kDimensionMismatch, "permutations of different sizes");
      Matrix m(field, n, n);
      for (std::size_t x = 0; x < n; ++x) {
        m.set(p[x], x, 1);
      }
      rho.push_back(std::move(m));
    }
    return make(std::move(group), field, n, std::move(rho));
  }

  MonRep MonRep::make(std::shared_ptr<FiniteMonoid const> monoid,
                      Field field,
                      std::size_t dim,
                      std::vector<Matrix> rho) {
    require(monoid != nullptr, ErrorCode::kInvalidArgument, "module without monoid");
    check_shapes(rho, monoid->size(), dim, field);
    require(rho[0].is_identity(), ErrorCode::kNotHomomorphism,
            "monoid identity does not act as the identity matrix");
    std::size_t n = monoid->size();
    std::vector<Element> left;
    if (n <= kExhaustiveCheckLimit) {
      for (Element a = 0; a < n; ++a) {
        left.push_back(a);
      }
    } else {
      left = monoid->generators();
    }
    for (Element a : left) {
      for (Element b = 0; b < n; ++b) {
        require(rho[a] * rho[b] == rho[monoid->mul(a, b)], ErrorCode::kNotHomomorphism,
                "monoid representation is not multiplicative");
      }
    }
    MonRep r;
    r._monoid = std::move(monoid);
    r._field = field;
    r._dim = dim;
    r._rho = std::move(rho);
    return r;
  }

  bool MonRep::is_invertible() const {
    for (auto const& m : _rho) {
      if (rank(m) != _dim) {
        return false;
      }
    }
    return true;
  }

}  // namespace monoext
