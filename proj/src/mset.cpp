#include "monoext/mset.hpp"

#include <algorithm>

#include "monoext/error.hpp"

namespace monoext {

  namespace {

    std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
      if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
          labels.push_back(std::to_string(i));
        }
      }
      require(labels.size() == n, ErrorCode::kSchema, "M-set labels have the wrong length");
      return labels;
    }

    // Right multipliers used in the compatibility check.  Generators suffice
    // by induction on word length; small monoids are checked on all pairs.
    std::vector<Element> check_set(FiniteMonoid const& m) {
      if (m.size() <= 64) {
        std::vector<Element> all(m.size());
        for (Element a = 0; a < m.size(); ++a) {
          all[a] = a;
        }
        return all;
      }
      return m.generators();
    }

  }  // namespace

  RightMSet RightMSet::make(FiniteMonoid const& m,
                            std::size_t size,
                            std::vector<std::uint32_t> act,
                            std::vector<std::string> labels) {
    std::size_t ms = m.size();
    require(act.size() == size * ms, ErrorCode::kSchema, "right action table has the wrong size");
    for (auto v : act) {
      require(v < size, ErrorCode::kSchema, "right action value out of range");
    }
    RightMSet x;
    x._size = size;
    x._msize = ms;
    x._act = std::move(act);
    x._labels = default_labels(size, std::move(labels));
    auto checks = check_set(m);
    for (std::uint32_t p = 0; p < size; ++p) {
      require(x.apply(p, 0) == p, ErrorCode::kNotIdentity, "identity does not fix the M-set");
      for (Element a = 0; a < ms; ++a) {
        for (Element b : checks) {
          require(x.apply(x.apply(p, a), b) == x.apply(p, m.mul(a, b)), ErrorCode::kNotAssociative,
                  "right action is not compatible with the product");
        }
      }
    }
    return x;
  }

  LeftMSet LeftMSet::make(FiniteMonoid const& m,
                          std::size_t size,
                          std::vector<std::uint32_t> act,
                          std::vector<std::string> labels) {
    std::size_t ms = m.size();
    require(act.size() == size * ms, ErrorCode::kSchema, "left action table has the wrong size");
    for (auto v : act) {
      require(v < size, ErrorCode::kSchema, "left action value out of range");
    }
    LeftMSet x;
    x._size = size;
    x._msize = ms;
    x._act = std::move(act);
    x._labels = default_labels(size, std::move(labels));
    auto checks = check_set(m);
    for (std::uint32_t p = 0; p < size; ++p) {
      require(x.apply(0, p) == p, ErrorCode::kNotIdentity, "identity does not fix the M-set");
      for (Element b = 0; b < ms; ++b) {
        for (Element a : checks) {
          require(x.apply(a, x.apply(b, p)) == x.apply(m.mul(a, b), p), ErrorCode::kNotAssociative,
                  "left action is not compatible with the product");
        }
      }
    }
    return x;
  }

  RightMSet right_point(FiniteMonoid const& m) {
    return RightMSet::make(m, 1, std::vector<std::uint32_t>(m.size(), 0), {"*"});
  }

  LeftMSet left_point(FiniteMonoid const& m) {
    return LeftMSet::make(m, 1, std::vector<std::uint32_t>(m.size(), 0), {"*"});
  }

  RightMSet right_regular(FiniteMonoid const& m) {
    std::size_t n = m.size();
    std::vector<std::uint32_t> act(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element a = 0; a < n; ++a) {
        act[x * n + a] = m.mul(x, a);
      }
    }
    return RightMSet::make(m, n, std::move(act), m.labels());
  }

  LeftMSet left_regular(FiniteMonoid const& m) {
    std::size_t n = m.size();
    std::vector<std::uint32_t> act(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element a = 0; a < n; ++a) {
        act[x * n + a] = m.mul(a, x);
      }
    }
    return LeftMSet::make(m, n, std::move(act), m.labels());
  }

  RightMSet right_ideal_mset(FiniteMonoid const& m, std::vector<Element> const& elements) {
    require(std::is_sorted(elements.begin(), elements.end()), ErrorCode::kInvalidArgument,
            "ideal elements must be sorted");
    std::size_t n = m.size();
    std::vector<std::uint32_t> pos(n, UINT32_MAX);
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
      require(elements[i] < n, ErrorCode::kInvalidArgument, "ideal element out of range");
      pos[elements[i]] = i;
    }
    std::vector<std::uint32_t> act(elements.size() * n);
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i < elements.size(); ++i) {
      labels.push_back(m.label(elements[i]));
      for (Element a = 0; a < n; ++a) {
        auto y = pos[m.mul(elements[i], a)];
        require(y != UINT32_MAX, ErrorCode::kNotInvariant, "subset is not a right ideal");
        act[i * n + a] = y;
      }
    }
    return RightMSet::make(m, elements.size(), std::move(act), std::move(labels));
  }

  RightMSet right_via(FiniteMonoid const& m, FiniteMonoid const& n, std::vector<Element> const& phi) {
    require(is_homomorphism(m, n, phi), ErrorCode::kNotHomomorphism, "map is not a homomorphism");
    std::vector<std::uint32_t> act(n.size() * m.size());
    for (Element x = 0; x < n.size(); ++x) {
      for (Element a = 0; a < m.size(); ++a) {
        act[x * m.size() + a] = n.mul(x, phi[a]);
      }
    }
    return RightMSet::make(m, n.size(), std::move(act), n.labels());
  }

  LeftMSet left_via(FiniteMonoid const& m, FiniteMonoid const& n, std::vector<Element> const& phi) {
    require(is_homomorphism(m, n, phi), ErrorCode::kNotHomomorphism, "map is not a homomorphism");
    std::vector<std::uint32_t> act(n.size() * m.size());
    for (Element x = 0; x < n.size(); ++x) {
      for (Element a = 0; a < m.size(); ++a) {
        act[x * m.size() + a] = n.mul(phi[a], x);
      }
    }
    return LeftMSet::make(m, n.size(), std::move(act), n.labels());
  }

  RightMSet quotient_mset(FiniteMonoid const& m,
                          RightMSet const& x,
                          std::vector<std::uint32_t> const& class_of) {
    require(class_of.size() == x.size(), ErrorCode::kDimensionMismatch,
            "class map has the wrong length");
    std::uint32_t classes = 0;
    for (auto c : class_of) {
      classes = std::max(classes, c + 1);
    }
    std::size_t ms = m.size();
    std::vector<std::uint32_t> act(static_cast<std::size_t>(classes) * ms, UINT32_MAX);
    std::vector<std::string> labels(classes);
    for (std::uint32_t p = 0; p < x.size(); ++p) {
      auto c = class_of[p];
      if (labels[c].empty()) {
        labels[c] = x.labels()[p];
      }
      for (Element a = 0; a < ms; ++a) {
        auto target = class_of[x.apply(p, a)];
        auto& slot = act[c * ms + a];
        require(slot == UINT32_MAX || slot == target, ErrorCode::kNotInvariant,
                "action is not well defined on the classes");
        slot = target;
      }
    }
    for (auto v : act) {
      require(v != UINT32_MAX, ErrorCode::kInvalidArgument, "class map is not onto a dense range");
    }
    return RightMSet::make(m, classes, std::move(act), std::move(labels));
  }

  bool is_invariant(RightMSet const& x, std::vector<char> const& subset) {
    for (std::uint32_t p = 0; p < x.size(); ++p) {
      if (!subset[p]) {
        continue;
      }
      for (Element a = 0; a < x.monoid_size(); ++a) {
        if (!subset[x.apply(p, a)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_invariant(LeftMSet const& x, std::vector<char> const& subset) {
    for (std::uint32_t p = 0; p < x.size(); ++p) {
      if (!subset[p]) {
        continue;
      }
      for (Element a = 0; a < x.monoid_size(); ++a) {
        if (!subset[x.apply(a, p)]) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace monoext
