// monoext command line interface.  Every subcommand prints one JSON report
// (to stdout, or to --out) and exits with 0 on success, 2 when the
// hypotheses of the requested method do not hold, and 1 on errors.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "monoext/builders.hpp"
#include "monoext/error.hpp"
#include "monoext/ext.hpp"
#include "monoext/green.hpp"
#include "monoext/irreps.hpp"
#include "monoext/json_io.hpp"
#include "monoext/modules.hpp"
#include "monoext/poset.hpp"
#include "monoext/simplicial.hpp"

using namespace monoext;

namespace {

  constexpr char const* kVersion = "0.1.0";

  struct Options {
    std::string monoid;
    std::string target;
    std::string phi;
    std::string field = "q";
    std::string degrees = "0..3";
    Element e = 0;
    std::string v = "trivial";
    std::string w = "trivial";
    std::string method = "topological";
    std::string poset = "omega-singular";
    std::string x = "point";
    std::string y = "point";
    std::string out;
    std::size_t cap = kDefaultCellCap;
    int max_degree = -1;
    bool no_verify = false;
  };

  // Raised for results whose hypotheses fail; the report is still printed.
  struct Inapplicable {
    Json report;
  };

  Json header(std::string const& command) {
    Json j;
    j["tool"] = "monoext";
    j["version"] = kVersion;
    j["command"] = command;
    return j;
  }

  std::pair<int, int> parse_degrees(std::string const& text) {
    auto pos = text.find("..");
    try {
      if (pos == std::string::npos) {
        int d = std::stoi(text);
        require(d >= 0, ErrorCode::kInvalidArgument, "degrees must be nonnegative");
        return {d, d};
      }
      int lo = std::stoi(text.substr(0, pos));
      int hi = std::stoi(text.substr(pos + 2));
      require(lo >= 0 && lo <= hi, ErrorCode::kInvalidArgument, "degree range must satisfy 0 <= A <= B");
      return {lo, hi};
    } catch (std::logic_error const&) {
      throw Error(ErrorCode::kInvalidArgument, "degrees must look like A..B");
    }
  }

  MonoidPtr load_monoid(std::string const& spec) {
    require(!spec.empty(), ErrorCode::kInvalidArgument, "--monoid is required");
    return std::make_shared<FiniteMonoid const>(monoid_from_json(read_json(spec)));
  }

  MonRep load_v(std::string const& spec, MonoidPtr const& m, Field const& f) {
    if (spec == "trivial") {
      return trivial_module(m, f);
    }
    if (spec == "kG") {
      return trivial_of_units(m, f);
    }
    return monrep_from_json(read_json(spec), m, f);
  }

  // A fixture irrep name or a representation file for G_e.
  GroupRep load_w(std::string const& spec, GroupPtr const& g, Field const& f) {
    std::ifstream probe(spec);
    if (!probe.good() && spec.find_first_of("{/.") == std::string::npos) {
      if (spec == "trivial") {
        return GroupRep::trivial(g, f);
      }
      return fixture_irrep(g, f, spec);
    }
    return grouprep_from_json(read_json(spec), g, f);
  }

  Json class_lists(std::vector<std::vector<Element>> const& classes) {
    Json out = Json::array();
    for (auto const& c : classes) {
      out.push_back(c);
    }
    return out;
  }

  Json flags_json(StructuralFlags const& s) {
    Json j;
    j["regular"] = s.regular;
    j["dedekind_finite"] = s.dedekind_finite;
    j["right_pp"] = s.right_pp;
    j["left_pp"] = s.left_pp;
    return j;
  }

  struct PosetChoice {
    Poset poset;
    std::vector<std::string> generators;
  };

  // omega-singular: Omega(S) with S the non-units; omega-regular: M/R;
  // omega-re: Omega(R(e)).
  PosetChoice choose_poset(std::string const& kind, FiniteMonoid const& m, Element e) {
    std::vector<Element> elems;
    if (kind == "omega-regular") {
      for (Element x = 0; x < m.size(); ++x) {
        elems.push_back(x);
      }
    } else if (kind == "omega-singular") {
      for (Element x = 0; x < m.size(); ++x) {
        if (!m.is_unit(x)) {
          elems.push_back(x);
        }
      }
    } else if (kind == "omega-re") {
      require(e < m.size() && m.is_idempotent(e), ErrorCode::kNotIdempotent, "--e must be an idempotent");
      elems = ideal_data(m, e).r_minus;
      std::sort(elems.begin(), elems.end());
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown poset \"" + kind + "\"");
    }
    PosetChoice out;
    if (elems.empty()) {
      out.poset = Poset::make({}, {});
      return out;
    }
    auto omega = omega_poset(right_ideal_mset(m, elems));
    out.poset = omega.poset;
    for (auto g : omega.generator) {
      out.generators.push_back(m.label(elems[g]));
    }
    return out;
  }

  Json run_build(Options const& o) {
    auto m = load_monoid(o.monoid);
    Json j = header("build");
    j["assumptions_checked"] = Json{{"associative", true}, {"identity", 0}};
    j["monoid"] = monoid_to_json(*m);
    return j;
  }

  Json run_green(Options const& o) {
    auto m = load_monoid(o.monoid);
    auto g = green_structure(*m);
    Json j = header("green");
    j["assumptions_checked"] = Json::object();
    j["r_classes"] = class_lists(g.r_classes);
    j["l_classes"] = class_lists(g.l_classes);
    j["h_classes"] = class_lists(g.h_classes);
    j["j_classes"] = class_lists(g.j_classes);
    Json order = Json::array();
    for (std::size_t a = 0; a < g.num_j(); ++a) {
      for (std::size_t b = 0; b < g.num_j(); ++b) {
        if (a != b && g.j_leq[a][b]) {
          order.push_back(Json::array({a, b}));
        }
      }
    }
    j["j_order"] = std::move(order);
    Json reg = Json::array();
    for (auto r : g.regular_j) {
      reg.push_back(r != 0);
    }
    j["regular_j"] = std::move(reg);
    j["idempotents"] = g.idempotents;
    return j;
  }

  Json run_flags(Options const& o) {
    auto m = load_monoid(o.monoid);
    Json j = header("flags");
    j["assumptions_checked"] = Json::object();
    j["flags"] = flags_json(structural_flags(*m));
    return j;
  }

  Json run_sandwich(Options const& o) {
    auto m = load_monoid(o.monoid);
    Field f = Field::parse(o.field);
    auto g = green_structure(*m);
    Json j = header("sandwich");
    j["field"] = f.to_string();
    j["assumptions_checked"] = Json::object();
    Json list = Json::array();
    for (std::uint32_t c = 0; c < g.num_j(); ++c) {
      if (!g.regular_j[c]) {
        continue;
      }
      auto sd = sandwich_matrix(*m, g, c);
      std::vector<std::vector<std::int64_t>> p(sd.b_classes.size(), std::vector<std::int64_t>(sd.a_classes.size()));
      for (std::size_t b = 0; b < p.size(); ++b) {
        for (std::size_t a = 0; a < sd.a_classes.size(); ++a) {
          p[b][a] = sd.entry(b, a);
        }
      }
      Json item;
      item["j"] = c;
      item["e"] = sd.e;
      item["group_order"] = sd.group.size();
      item["a"] = sd.a_classes.size();
      item["b"] = sd.b_classes.size();
      item["matrix"] = p;
      item["right_invertible"] = group_algebra_right_inverse(p, sd.group, f).has_value();
      list.push_back(std::move(item));
    }
    j["sandwich"] = std::move(list);
    return j;
  }

  Json run_gcompletion(Options const& o) {
    auto m = load_monoid(o.monoid);
    auto gc = group_completion(*m);
    Json j = header("gcompletion");
    j["assumptions_checked"] = Json::object();
    j["order"] = gc.group.size();
    j["psi"] = gc.psi;
    j["e"] = gc.e;
    return j;
  }

  Json run_poset(Options const& o) {
    auto m = load_monoid(o.monoid);
    auto pc = choose_poset(o.poset, *m, o.e);
    Json j = header("poset");
    j["assumptions_checked"] = Json{{"poset", o.poset}};
    j["elements"] = pc.generators;
    Json pairs = Json::array();
    for (std::size_t a = 0; a < pc.poset.size(); ++a) {
      for (std::size_t b = 0; b < pc.poset.size(); ++b) {
        if (pc.poset.less(a, b)) {
          pairs.push_back(Json::array({a, b}));
        }
      }
    }
    j["leq_pairs"] = std::move(pairs);
    j["components"] = path_components(pc.poset);
    return j;
  }

  Json run_homology(Options const& o) {
    auto m = load_monoid(o.monoid);
    Field f = Field::parse(o.field);
    auto pc = choose_poset(o.poset, *m, o.e);
    auto delta = order_complex(pc.poset);
    auto chains = simplicial_chains(delta, nullptr, f, true);
    int top = std::max(delta.dimension(), 0);
    auto h = homology(chains.complex, -1, top);
    Json j = header("homology");
    j["field"] = f.to_string();
    j["assumptions_checked"] = Json{{"poset", o.poset}, {"reduced", true}};
    Json dims = Json::object();
    Json summary = Json::object();
    for (int d = -1; d <= top; ++d) {
      if (d >= 0 || h.at(d) != 0) {
        dims[std::to_string(d)] = h.at(d);
      }
      Json s;
      s["basis_size"] = chains.complex.dim(d);
      s["rank"] = h.ranks[static_cast<std::size_t>(d + 1)].rank;
      s["homology_dim"] = h.at(d);
      summary[std::to_string(d)] = std::move(s);
    }
    j["dims"] = std::move(dims);
    j["complex"] = std::move(summary);
    return j;
  }

  Json with_report(std::string const& command, Field const& f, ExtReport const& r) {
    Json j = header(command);
    j["field"] = f.to_string();
    Json body = ext_report_to_json(r);
    for (auto& [key, value] : body.items()) {
      j[key] = value;
    }
    return j;
  }

  Json run_ext(Options const& o) {
    auto m = load_monoid(o.monoid);
    Field f = Field::parse(o.field);
    auto [lo, hi] = parse_degrees(o.degrees);
    if (o.max_degree >= 0) {
      hi = std::min(hi, o.max_degree);
      require(lo <= hi, ErrorCode::kInvalidArgument, "--max-degree is below the requested range");
    }
    ExtOptions opt{o.cap};
    require(o.e < m->size() && m->is_idempotent(o.e), ErrorCode::kNotIdempotent, "--e must be an idempotent");
    RLData rl = ideal_data(*m, o.e);
    auto g = std::make_shared<GroupTable const>(rl.group);
    MonRep v = load_v(o.v, m, f);
    GroupRep w = load_w(o.w, g, f);
    ExtReport r;
    if (o.method == "topological") {
      r = ext_topological(v, o.e, w, lo, hi, opt);
    } else if (o.method == "oracle") {
      r = ext_oracle(v, coinduce(m, rl, w), lo, hi, opt);
      r.assumptions.emplace_back("target", "Coind_e(W)");
    } else if (o.method == "ext1") {
      r = ext1_fast(v, o.e, w);
    } else if (o.method == "induced") {
      r = ext_from_induced(v, o.e, w, lo, hi, opt);
      r.assumptions.emplace_back("source", "Ind_e(W)");
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown method \"" + o.method + "\"");
    }
    r.assumptions.emplace_back("e", std::to_string(o.e));
    return with_report("ext", f, r);
  }

  Json run_cohomology(Options const& o) {
    auto m = load_monoid(o.monoid);
    Field f = Field::parse(o.field);
    auto [lo, hi] = parse_degrees(o.degrees);
    auto r = monoid_cohomology(load_v(o.v, m, f), lo, hi, ExtOptions{o.cap});
    return with_report("cohomology", f, r);
  }

  RightMSet right_choice(std::string const& kind, FiniteMonoid const& m) {
    if (kind == "point") {
      return right_point(m);
    }
    require(kind == "regular", ErrorCode::kInvalidArgument, "--x must be point or regular");
    return right_regular(m);
  }

  LeftMSet left_choice(std::string const& kind, FiniteMonoid const& m) {
    if (kind == "point") {
      return left_point(m);
    }
    require(kind == "regular", ErrorCode::kInvalidArgument, "--y must be point or regular");
    return left_regular(m);
  }

  Json run_tor(Options const& o) {
    auto m = load_monoid(o.monoid);
    Field f = Field::parse(o.field);
    auto [lo, hi] = parse_degrees(o.degrees);
    auto dims = tor_bar(m, right_choice(o.x, *m), left_choice(o.y, *m), f, hi, ExtOptions{o.cap});
    Json j = header("tor");
    j["field"] = f.to_string();
    j["assumptions_checked"] = Json{{"x", o.x}, {"y", o.y}, {"complex", "normalized two-sided bar"}};
    Json d = Json::object();
    for (int n = lo; n <= hi; ++n) {
      d[std::to_string(n)] = dims[static_cast<std::size_t>(n)];
    }
    j["dims"] = std::move(d);
    j["valid_through"] = hi;
    return j;
  }

  Json run_homepi(Options const& o) {
    Json src = read_json(o.monoid);
    auto m = std::make_shared<FiniteMonoid const>(monoid_from_json(src));
    Field f = Field::parse(o.field);
    auto [lo, hi] = parse_degrees(o.degrees);
    int d = std::max(hi, 1);
    MonoidPtr n;
    MonoidPtr base;
    std::vector<Element> phi;
    std::string how;
    std::string type = src.contains("type") ? src.at("type").get<std::string>() : "";
    if (!o.phi.empty()) {
      require(!o.target.empty(), ErrorCode::kInvalidArgument, "--phi needs --target");
      n = load_monoid(o.target);
      phi = read_json(o.phi).get<std::vector<Element>>();
      how = "given";
    } else if (type == "affine") {
      auto nn = src.at("n").get<std::size_t>();
      auto q = src.at("q").get<std::uint32_t>();
      n = std::make_shared<FiniteMonoid const>(matrix_monoid(nn, q));
      phi = affine_linear_part(nn, q);
      how = "linear part";
    } else if (type == "crossed") {
      auto base_m = monoid_from_json(src.at("M"));
      auto acting = monoid_from_json(src.at("N"));
      auto sys = CrossedSystem::semidirect(base_m, acting, src.at("alpha").get<std::vector<std::vector<Element>>>());
      if (src.contains("c")) {
        auto c = src.at("c").get<std::vector<std::vector<Element>>>();
        for (std::size_t a = 0; a < c.size(); ++a) {
          for (std::size_t b = 0; b < c[a].size(); ++b) {
            sys.cocycle[a * acting.size() + b] = c[a][b];
          }
        }
      }
      phi = crossed_projection(sys);
      n = std::make_shared<FiniteMonoid const>(acting);
      base = std::make_shared<FiniteMonoid const>(base_m);
      how = "crossed projection";
    } else {
      throw Error(ErrorCode::kInvalidArgument, "homepi needs --target and --phi unless the monoid is affine or crossed");
    }
    auto verdict = homological_epi_check(m, n, phi, f, d, base, ExtOptions{o.cap});
    Json j = header("homepi");
    j["field"] = f.to_string();
    j["assumptions_checked"] = Json{{"map", how}, {"epi_status", verdict.epi_status}};
    Json tor = Json::object();
    for (int i = 1; i <= d; ++i) {
      tor[std::to_string(i)] = verdict.tor_dims[static_cast<std::size_t>(i - 1)];
    }
    j["surjective"] = verdict.surjective;
    j["tor_dims"] = std::move(tor);
    j["homological_epi_up_to"] = verdict.homological_epi_up_to_d ? d : 0;
    j["verdict"] = verdict.homological_epi_up_to_d;
    if (verdict.crossed_prediction) {
      Json pred = Json::object();
      for (int i = 1; i <= d; ++i) {
        pred[std::to_string(i)] = (*verdict.crossed_prediction)[static_cast<std::size_t>(i - 1)];
      }
      j["crossed_prediction"] = std::move(pred);
    }
    return j;
  }

  Json run_gldim(Options const& o) {
    auto m = load_monoid(o.monoid);
    Field f = Field::parse(o.field);
    auto b = global_dimension_bound(*m, f);
    Json j = header("gldim-bound");
    j["field"] = f.to_string();
    j["assumptions_checked"] = Json{{"regular", b.regular}};
    j["applicable"] = b.applicable;
    if (b.applicable) {
      j["bound"] = b.bound;
    }
    Json classes = Json::array();
    for (auto const& w : b.witnesses) {
      Json c;
      c["j"] = w.j;
      c["e"] = w.e;
      c["group_order"] = w.group_order;
      c["good_characteristic"] = w.good_characteristic;
      c["right_invertible"] = w.right_invertible;
      classes.push_back(std::move(c));
    }
    j["j_classes"] = std::move(classes);
    j["reasons"] = b.reasons;
    if (!b.applicable) {
      throw Inapplicable{j};
    }
    return j;
  }

  Json run_resolution(Options const& o) {
    auto m = load_monoid(o.monoid);
    Field f = Field::parse(o.field);
    auto r = standard_resolution(m, f, !o.no_verify);
    Json j = header("resolution");
    j["field"] = f.to_string();
    auto bound = global_dimension_bound(*m, f);
    j["assumptions_checked"] = Json{{"gldim_hypotheses", bound.applicable}, {"verified", !o.no_verify}};
    j["length"] = r.length;
    Json dims = Json::object();
    Json exact = Json::object();
    for (std::size_t k = 0; k < r.dims.size(); ++k) {
      dims[std::to_string(static_cast<int>(k) - 1)] = r.dims[k];
      exact[std::to_string(static_cast<int>(k) - 1)] = static_cast<bool>(r.exact[k]);
    }
    j["dims"] = std::move(dims);
    j["exact"] = std::move(exact);
    j["equivariant"] = r.equivariant;
    j["cellular"] = r.cellular;
    if (r.projectivity_checked) {
      Json proj = Json::object();
      for (std::size_t q = 0; q < r.projective.size(); ++q) {
        proj[std::to_string(q)] = static_cast<bool>(r.projective[q]);
      }
      j["projective"] = std::move(proj);
    }
    Json layers = Json::array();
    for (auto const& l : r.layers) {
      Json x;
      x["layer"] = l.layer;
      x["degree"] = l.degree;
      x["e"] = l.e;
      x["accepted"] = l.accepted;
      x["points"] = l.points;
      layers.push_back(std::move(x));
    }
    j["layers"] = std::move(layers);
    return j;
  }

  Json run_simples(Options const& o) {
    auto m = load_monoid(o.monoid);
    Field f = Field::parse(o.field);
    auto simples = simple_modules_coind(m, f);
    Json j = header("simples");
    j["field"] = f.to_string();
    j["assumptions_checked"] = Json{{"gldim_hypotheses", true}};
    Json list = Json::array();
    for (auto const& s : simples) {
      Json x;
      x["j"] = s.j;
      x["e"] = s.e;
      x["irrep"] = s.name;
      x["dim"] = s.module.dim();
      list.push_back(std::move(x));
    }
    j["simples"] = std::move(list);
    return j;
  }

  void emit(Json const& j, std::string const& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out);
      require(f.good(), ErrorCode::kInvalidArgument, "cannot write " + out);
      f << text;
    }
  }

  bool is_inapplicable(ErrorCode c) {
    return c == ErrorCode::kBadCharacteristic || c == ErrorCode::kHypothesis || c == ErrorCode::kMinimalIdeal ||
           c == ErrorCode::kNotRegular;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ext, Tor and cohomology of finite monoid algebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--monoid", o.monoid, "monoid JSON file (table or builder) or inline JSON");
    sub->add_option("--field", o.field, "q or p:P")->capture_default_str();
    sub->add_option("--out", o.out, "write the report to this file");
  };
  auto add_degrees = [&](CLI::App* sub) {
    sub->add_option("--degrees", o.degrees, "degree range A..B")->capture_default_str();
    sub->add_option("--cap", o.cap, "largest chain group size")->capture_default_str();
    sub->add_option("--max-degree", o.max_degree, "clip the degree range");
  };

  std::map<std::string, std::function<Json(Options const&)>> handlers = {
      {"build", run_build},       {"green", run_green},   {"flags", run_flags},
      {"sandwich", run_sandwich}, {"gcompletion", run_gcompletion},
      {"poset", run_poset},       {"homology", run_homology},
      {"ext", run_ext},           {"cohomology", run_cohomology},
      {"tor", run_tor},           {"homepi", run_homepi},
      {"gldim-bound", run_gldim}, {"resolution", run_resolution},
      {"simples", run_simples}};
  std::map<std::string, std::string> help = {
      {"build", "build a monoid and print its table"},
      {"green", "Green's relations"},
      {"flags", "regular, Dedekind-finite, right and left p.p."},
      {"sandwich", "sandwich matrices and right invertibility over KG"},
      {"gcompletion", "group completion"},
      {"poset", "poset of cyclic right ideals"},
      {"homology", "reduced homology of the order complex of a poset"},
      {"ext", "Ext^n(V, Coind_e(W)) or Ext^n(Ind_e(W), V)"},
      {"cohomology", "monoid cohomology H^n(M, V)"},
      {"tor", "Tor over KM of two permutation modules"},
      {"homepi", "homological epimorphism check"},
      {"gldim-bound", "global dimension bound for regular monoids"},
      {"resolution", "standard projective resolution of the trivial module"},
      {"simples", "simple modules by coinduction"}};

  for (auto const& [name, fn] : handlers) {
    auto* sub = app.add_subcommand(name, help[name]);
    add_common(sub);
    if (name == "ext" || name == "cohomology" || name == "tor" || name == "homepi") {
      add_degrees(sub);
    }
    if (name == "ext" || name == "cohomology") {
      sub->add_option("--V", o.v, "trivial, kG or a representation JSON file")->capture_default_str();
    }
    if (name == "ext" || name == "poset" || name == "homology") {
      sub->add_option("--e", o.e, "idempotent (element index)")->capture_default_str();
    }
    if (name == "ext") {
      sub->add_option("--W", o.w, "fixture irrep name or representation JSON of G_e")->capture_default_str();
      sub->add_option("--method", o.method, "topological, oracle, ext1 or induced")->capture_default_str();
    }
    if (name == "poset" || name == "homology") {
      sub->add_option("--poset", o.poset, "omega-singular, omega-regular or omega-re")->capture_default_str();
    }
    if (name == "tor") {
      sub->add_option("--x", o.x, "right M-set: point or regular")->capture_default_str();
      sub->add_option("--y", o.y, "left M-set: point or regular")->capture_default_str();
    }
    if (name == "homepi") {
      sub->add_option("--target", o.target, "target monoid");
      sub->add_option("--phi", o.phi, "JSON list of images");
    }
    if (name == "resolution") {
      sub->add_flag("--no-verify", o.no_verify, "skip projectivity and layer checks");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& ex) {
    return app.exit(ex) == 0 ? 0 : 1;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    emit(handlers.at(command)(o), o.out);
    return 0;
  } catch (Inapplicable const& in) {
    emit(in.report, o.out);
    return 2;
  } catch (Error const& ex) {
    Json j = header(command);
    j["error"] = Json{{"code", ex.code_name()}, {"message", ex.what()}};
    emit(j, o.out);
    return is_inapplicable(ex.code()) ? 2 : 1;
  } catch (std::exception const& ex) {
    Json j = header(command);
    j["error"] = Json{{"code", "internal"}, {"message", ex.what()}};
    emit(j, o.out);
    return 1;
  }
}
