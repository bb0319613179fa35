#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "factorum/catenary.hpp"
#include "factorum/distances.hpp"
#include "factorum/divisibility.hpp"
#include "factorum/factorizations.hpp"
#include "factorum/matrix.hpp"
#include "factorum/presentation.hpp"
#include "factorum/regression.hpp"
#include "factorum/semigroup.hpp"
#include "factorum/transfer.hpp"
#include "factorum/zerosum.hpp"

using namespace factorum;
using Json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::optional<int> budget_len;
  std::optional<std::size_t> budget_ball;
  std::string format = "table";
};

struct Output {
  Json body = Json::object();
  int status = 0;

  void incomplete_if(bool truncated) {
    if (truncated) status = 2;
  }
  void cert(Cert c) {
    body["cert"] = to_string(c);
    incomplete_if(c != Cert::Exact);
  }
};

Json factorization_json(SemigroupHandle& h, const Factorization& z) { return Json(factorization_strings(h, z)); }

Json factorization_list(SemigroupHandle& h, const std::vector<Factorization>& zs) {
  Json a = Json::array();
  for (const Factorization& z : zs) a.push_back(factorization_json(h, z));
  return a;
}

Json element_list(SemigroupHandle& h, const std::vector<ElemId>& xs) {
  Json a = Json::array();
  for (ElemId x : xs) a.push_back(h.show(x));
  return a;
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_table(const Json& body) {
  for (const auto& [key, value] : body.items()) {
    if (key == "schema") continue;
    if (value.is_array() && !value.empty() && (value.front().is_object() || value.size() > 8)) {
      std::cout << key << ":\n";
      for (const Json& v : value) std::cout << "  " << scalar(v) << "\n";
    } else if (value.is_object() && !value.empty()) {
      std::cout << key << ":\n";
      for (const auto& [k, v] : value.items()) std::cout << "  " << k << ": " << scalar(v) << "\n";
    } else {
      std::cout << key << ": " << scalar(value) << "\n";
    }
  }
}

struct App {
  Globals g;
  std::string file;

  Presentation load() {
    Presentation p = load_presentation(file);
    if (g.budget_len) p.budget.max_word_length = *g.budget_len;
    if (g.budget_ball) p.budget.max_ball_size = *g.budget_ball;
    p.validate_budget(p.budget);
    return p;
  }

  Json budget_json(const Budget& b) { return {{"max_word_length", b.max_word_length}, {"max_ball_size", b.max_ball_size}}; }

  void header(Output& out, const std::string& invariant) {
    out.body["schema"] = "factorum/1";
    out.body["invariant"] = invariant;
  }

  void warnings(Output& out, const PresentationSemigroup& s) {
    Json w = Json::array();
    for (const std::string& x : s.warnings()) w.push_back(x);
    out.body["warnings"] = w;
  }

  ElemId require_element(PresentationSemigroup& s, const std::string& text, Output& out) {
    ElemId x = s.parse(text);
    out.incomplete_if(!s.certified(x));
    return x;
  }
};

void add_file(CLI::App* sub, App& app) { sub->add_option("file", app.file, "presentation file")->required()->check(CLI::ExistingFile); }

int classify(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::InstanceTooLarge:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"factorum: factorization invariants of semigroups, block monoids and integer matrices"};
  cli.require_subcommand(1);
  App app;
  cli.add_option("--budget-len", app.g.budget_len, "maximum word length explored")->check(CLI::PositiveNumber);
  cli.add_option("--budget-ball", app.g.budget_ball, "maximum congruence class size")->check(CLI::PositiveNumber);
  cli.add_option("--format", app.g.format, "output format")->check(CLI::IsMember({"table", "json"}));

  Output out;
  std::function<void()> action;

  // parse
  auto* parse = cli.add_subcommand("parse", "parse a presentation and report its structure");
  add_file(parse, app);
  parse->callback([&] {
    action = [&] {
      Presentation p = app.load();
      PresentationSemigroup s(p);
      app.header(out, "presentation");
      out.body["generators"] = p.generators;
      Json rels = Json::array();
      for (const Relation& r : p.relations) rels.push_back(p.show(r.lhs) + " = " + p.show(r.rhs));
      out.body["relations"] = rels;
      out.body["budget"] = app.budget_json(p.budget);
      out.body["adyan"] = check_adyan(p).is_adyan;
      out.body["length_preserving"] = p.length_preserving();
      app.warnings(out, s);
    };
  });

  // adyan
  auto* adyan = cli.add_subcommand("adyan", "left and right graphs of the presentation");
  add_file(adyan, app);
  adyan->callback([&] {
    action = [&] {
      Presentation p = app.load();
      AdyanReport r = check_adyan(p);
      app.header(out, "adyan");
      auto edges = [&](const std::vector<std::pair<int, int>>& es) {
        Json a = Json::array();
        for (auto [u, v] : es) a.push_back(p.letter(u) + "-" + p.letter(v));
        return a;
      };
      out.body["left_edges"] = edges(r.left_edges);
      out.body["right_edges"] = edges(r.right_edges);
      out.body["left_forest"] = r.left_forest;
      out.body["right_forest"] = r.right_forest;
      out.body["value"] = r.is_adyan;
    };
  });

  // elements
  int seed_len = 4;
  auto* elements = cli.add_subcommand("elements", "elements with a representative of bounded length");
  add_file(elements, app);
  elements->add_option("--max-len", seed_len, "length of seed words")->check(CLI::NonNegativeNumber);
  elements->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      bool complete = true;
      std::vector<ElemId> xs = s.enumerate_elements(seed_len, &complete);
      Json a = Json::array();
      bool closed = complete;
      for (ElemId x : xs) {
        a.push_back({{"element", s.show(x)}, {"class_size", s.info(x).members.size()}, {"closed", s.info(x).closed}});
        closed = closed && s.info(x).closed;
      }
      app.header(out, "elements");
      out.body["count"] = xs.size();
      out.body["elements"] = a;
      out.cert(closed ? Cert::Exact : Cert::LowerBound);
      app.warnings(out, s);
    };
  });

  // atoms
  auto* atoms = cli.add_subcommand("atoms", "atoms of the semigroup");
  add_file(atoms, app);
  atoms->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      bool complete = true;
      std::vector<ElemId> xs = s.enumerate_atoms(&complete);
      app.header(out, "atoms");
      out.body["value"] = element_list(s, xs);
      out.cert(complete ? Cert::Exact : Cert::Unknown);
      app.warnings(out, s);
    };
  });

  // factorize
  std::string element_text;
  auto* factorize = cli.add_subcommand("factorize", "rigid and permutable factorizations of an element");
  add_file(factorize, app);
  factorize->add_option("--element", element_text, "element word")->required();
  factorize->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      ElemId x = app.require_element(s, element_text, out);
      const FactorizationSet& fs = rigid_factorizations(s, x);
      PermSet ps = permutable_factorizations(s, x);
      app.header(out, "factorizations");
      out.body["element"] = s.show(x);
      out.body["rigid"] = factorization_list(s, fs.items);
      Json perm = Json::array();
      for (const PermFactorization& z : ps.items) perm.push_back(show_perm(s, z));
      out.body["permutable"] = perm;
      out.cert(fs.complete && ps.complete && s.certified(x) ? Cert::Exact : Cert::LowerBound);
      app.warnings(out, s);
    };
  });

  // lengths
  auto* lengths = cli.add_subcommand("lengths", "set of lengths, delta set and elasticity");
  add_file(lengths, app);
  lengths->add_option("--element", element_text, "element word")->required();
  lengths->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      ElemId x = app.require_element(s, element_text, out);
      LengthSet l = length_profile(s, x);
      app.header(out, "lengths");
      out.body["element"] = s.show(x);
      out.body["lengths"] = l.lengths;
      out.body["delta"] = l.delta;
      out.body["elasticity"] = l.elasticity.str();
      out.cert(l.complete && s.certified(x) ? Cert::Exact : Cert::LowerBound);
      app.warnings(out, s);
    };
  });

  // distance
  std::string kind_text = "perm";
  std::size_t zi = 0, zj = 1;
  auto* dist = cli.add_subcommand("distance", "distance between two factorizations of an element");
  add_file(dist, app);
  dist->add_option("--kind", kind_text, "len, perm or rigid");
  dist->add_option("--element", element_text, "element word")->required();
  dist->add_option("--z", zi, "index of the first rigid factorization");
  dist->add_option("--zprime", zj, "index of the second rigid factorization");
  dist->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      DistanceKind kind = parse_distance_kind(kind_text);
      ElemId x = app.require_element(s, element_text, out);
      const FactorizationSet& fs = rigid_factorizations(s, x);
      if (zi >= fs.items.size() || zj >= fs.items.size()) {
        throw Error(ErrorKind::InvalidArgument, "factorization index out of range (" + std::to_string(fs.items.size()) + " found)");
      }
      const Factorization& z = fs.items[zi];
      const Factorization& zp = fs.items[zj];
      app.header(out, std::string("distance_") + to_string(kind));
      out.body["element"] = s.show(x);
      out.body["z"] = factorization_json(s, z);
      out.body["zprime"] = factorization_json(s, zp);
      out.body["value"] = distance(s, kind, z, zp);
      if (kind == DistanceKind::Rigid) {
        Alignment al = rigid_alignment(z, zp);
        Json blocks = Json::array();
        for (const Block& b : al.blocks) {
          Factorization common(z.begin() + b.start_z, z.begin() + b.start_z + b.length);
          blocks.push_back({{"z_start", b.start_z}, {"zprime_start", b.start_zp}, {"atoms", factorization_json(s, common)}});
        }
        out.body["gap_costs"] = al.gap_costs;
        out.body["alignment"] = blocks;
      }
      out.cert(Cert::Exact);
    };
  });

  // catenary
  std::string variant_text = "plain";
  bool all = false;
  int all_len = 4;
  auto* cat = cli.add_subcommand("catenary", "catenary degree of an element or of the explored semigroup");
  add_file(cat, app);
  cat->add_option("--kind", kind_text, "len, perm or rigid");
  cat->add_option("--variant", variant_text, "plain, equal, adjacent, monotone or in_fibers");
  cat->add_option("--element", element_text, "element word");
  cat->add_flag("--all", all, "maximum over elements with a representative of length <= --max-len");
  cat->add_option("--max-len", all_len, "seed length for --all");
  cat->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      DistanceKind kind = parse_distance_kind(kind_text);
      Variant v = parse_variant(variant_text);
      app.header(out, std::string("catenary_") + to_string(kind));
      CatenaryReport r;
      if (all) {
        bool complete = true;
        std::vector<ElemId> xs = s.enumerate_elements(all_len, &complete);
        r = semigroup_catenary(s, xs, kind, v);
        out.incomplete_if(!complete);
        out.body["elements_checked"] = xs.size();
      } else {
        if (element_text.empty()) throw Error(ErrorKind::InvalidArgument, "--element or --all is required");
        r = catenary_variant(s, app.require_element(s, element_text, out), kind, v);
      }
      out.body["variant"] = to_string(r.variant);
      out.body["element"] = s.show(r.element);
      if (r.infinite) {
        out.body["value"] = "infinity";
      } else {
        out.body["value"] = r.value;
      }
      out.body["factorizations"] = r.factorizations;
      out.body["chain"] = factorization_list(s, r.chain);
      if (r.blocking) out.body["blocking"] = factorization_list(s, {r.blocking->first, r.blocking->second});
      out.cert(r.cert);
      if (all && r.cert == Cert::LowerBound && out.status == 2) out.status = 0;
      app.warnings(out, s);
    };
  });

  // omega
  std::string divisor_text;
  bool nonunits = false;
  int max_factors = 4;
  auto* omega_cmd = cli.add_subcommand("omega", "omega_p(a, b), or omega'_p with --nonunits");
  add_file(omega_cmd, app);
  omega_cmd->add_option("--element", element_text, "element a")->required();
  omega_cmd->add_option("--divisor", divisor_text, "divisor b")->required();
  omega_cmd->add_flag("--nonunits", nonunits, "decompositions into non-units");
  omega_cmd->add_option("--max-factors", max_factors, "factor cap for --nonunits");
  omega_cmd->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      ElemId a = app.require_element(s, element_text, out);
      ElemId b = app.require_element(s, divisor_text, out);
      OmegaReport r = nonunits ? omega_nonunits(s, a, b, max_factors) : omega(s, a, b);
      app.header(out, nonunits ? "omega_prime_p" : "omega_p");
      out.body["element"] = s.show(a);
      out.body["divisor"] = s.show(b);
      out.body["divides"] = r.applicable;
      out.body["value"] = r.value;
      out.body["decomposition"] = element_list(s, r.decomposition);
      out.body["subproduct"] = element_list(s, r.subproduct);
      out.cert(r.cert);
      app.warnings(out, s);
    };
  });

  // tame
  std::vector<std::string> pattern_text;
  auto* tame = cli.add_subcommand("tame", "permutable tame degree of an element with respect to an atom pattern");
  add_file(tame, app);
  tame->add_option("--element", element_text, "element word")->required();
  tame->add_option("--pattern", pattern_text, "atoms of the pattern")->required();
  tame->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      ElemId a = app.require_element(s, element_text, out);
      Factorization pat;
      for (const std::string& t : pattern_text) pat.push_back(s.parse(t));
      TameReport r = tame_degree(s, a, perm_class(s, pat));
      app.header(out, "tame_p");
      out.body["element"] = s.show(a);
      out.body["pattern_divides"] = r.pattern_divides;
      out.body["value"] = r.value;
      if (r.pattern_divides) {
        out.body["worst"] = show_perm(s, r.worst);
        out.body["nearest"] = show_perm(s, r.nearest);
      }
      out.cert(r.cert);
      app.warnings(out, s);
    };
  });

  // primelike
  std::string atom_text;
  auto* prime = cli.add_subcommand("primelike", "almost prime-like and prime-like tests for an atom");
  add_file(prime, app);
  prime->add_option("--atom", atom_text, "atom q")->required();
  prime->add_option("--max-len", seed_len, "seed length of the explored elements");
  prime->callback([&] {
    action = [&] {
      PresentationSemigroup s(app.load());
      ElemId q = app.require_element(s, atom_text, out);
      bool complete = true;
      std::vector<ElemId> xs = s.enumerate_elements(seed_len, &complete);
      PrimeLikeReport r = almost_prime_like(s, q, xs);
      app.header(out, "prime_like");
      out.body["atom"] = s.show(q);
      out.body["elements_checked"] = r.elements_checked;
      out.body["almost_prime_like"] = !r.counterexample;
      if (r.counterexample) {
        out.body["counterexample"] = s.show(r.element);
        out.body["with_q"] = factorization_json(s, r.with_q);
        out.body["without_q"] = factorization_json(s, r.without_q);
      } else {
        PrimeLikeVerdict v = is_prime_like(s, q, xs);
        out.body["prime_like"] = v.prime_like;
        if (!v.prime_like) {
          out.body["valuation_witness"] = s.show(v.witness);
          out.body["valuations"] = v.witness_values.values;
        }
      }
      out.cert(r.counterexample ? Cert::Exact : (complete ? r.cert : Cert::LowerBound));
      app.warnings(out, s);
    };
  });

  // abelianize
  auto* abel = cli.add_subcommand("abelianize", "relations of the abelianization");
  add_file(abel, app);
  abel->callback([&] {
    action = [&] {
      Presentation p = abelian_presentation(app.load());
      app.header(out, "abelianization");
      out.body["generators"] = p.generators;
      Json rels = Json::array();
      for (const Relation& r : p.relations) rels.push_back(p.show(r.lhs) + " = " + p.show(r.rhs));
      out.body["relations"] = rels;
    };
  });

  // check-wth
  int wth_len = 4;
  auto* wth = cli.add_subcommand("check-wth", "weak transfer criteria for the abelianization and the length map");
  add_file(wth, app);
  wth->add_option("--max-len", wth_len, "seed length of the explored elements");
  wth->callback([&] {
    action = [&] {
      Presentation p = app.load();
      PresentationSemigroup s(p);
      AbelianSemigroup ab(p, p.budget);
      ExwtReport r = check_exwt(s, ab, wth_len);
      app.header(out, "weak_transfer");
      out.body["value"] = r.pass;
      out.body["elements"] = r.elements;
      out.body["related_pairs"] = r.related_pairs;
      Json ces = Json::array();
      for (const ExwtCounterexample& c : r.counterexamples) {
        ces.push_back({{"a", s.show(c.a)}, {"b", s.show(c.b)}, {"unmatched", factorization_json(s, c.unmatched)}});
      }
      out.body["counterexamples"] = ces;
      out.body["transitive"] = r.transitive;
      if (!r.transitive) out.body["transitivity_witness"] = element_list(s, r.transitivity_witness);
      out.body["length_obstruction"] = r.length_obstruction;
      if (r.length_obstruction) {
        out.body["obstruction"] = {{"a", s.show(r.obstruction_a)},
                                   {"b", s.show(r.obstruction_b)},
                                   {"L(a)", length_profile(s, r.obstruction_a).lengths},
                                   {"L(b)", length_profile(s, r.obstruction_b).lengths}};
      }
      out.body["cancellative_within_budget"] = r.cancellative_within_budget;
      out.body["assumptions"] = r.assumptions;
      LengthMapReport lm = length_map(s, wth_len);
      out.body["length_map"] = {{"exists", lm.exists}, {"t1", lm.t1}, {"t2", lm.t2}, {"counterexample", lm.counterexample}};
      out.cert(r.cert);
      app.warnings(out, s);
    };
  });

  // zss
  std::string group_text;
  int zss_len = 0;
  auto* zss = cli.add_subcommand("zss", "zero-sum sequences over a finite abelian group");
  zss->add_option("--group", group_text, "invariant orders, e.g. 3 or 2,2")->required();
  zss->require_subcommand(1);
  auto* zss_atoms = zss->add_subcommand("atoms", "minimal zero-sum sequences");
  auto* zss_dav = zss->add_subcommand("davenport", "Davenport constant");
  auto* zss_cat = zss->add_subcommand("catenary", "catenary degree of the block monoid");
  zss_cat->add_option("--max-len", zss_len, "longest sequence explored (default 2 D(G))");
  auto* zss_ob = zss->add_subcommand("order-bound", "catenary bound for maximal orders with class group G");
  auto order_bound = [&] {
    FiniteAbelianGroup grp = FiniteAbelianGroup::parse(group_text);
    OrderBoundReport r = maximal_order_bound(grp);
    app.header(out, "order_bound");
    out.body["group"] = grp.name();
    out.body["invariant_factors"] = r.invariant_factors;
    out.body["value"] = r.bound;
    out.body["computed"] = r.computed;
    out.body["classification"] = r.classification;
    out.body["cert"] = to_string(r.cert);
  };
  zss_atoms->callback([&] {
    action = [&] {
      FiniteAbelianGroup grp = FiniteAbelianGroup::parse(group_text);
      Json a = Json::array();
      for (const Sequence& s : block_atoms(grp)) a.push_back(show_sequence(grp, s));
      app.header(out, "block_atoms");
      out.body["group"] = grp.name();
      out.body["count"] = a.size();
      out.body["value"] = a;
      out.cert(Cert::Exact);
    };
  });
  zss_dav->callback([&] {
    action = [&] {
      FiniteAbelianGroup grp = FiniteAbelianGroup::parse(group_text);
      app.header(out, "davenport");
      out.body["group"] = grp.name();
      out.body["value"] = davenport(grp);
      out.cert(Cert::Exact);
    };
  });
  zss_cat->callback([&] {
    action = [&] {
      FiniteAbelianGroup grp = FiniteAbelianGroup::parse(group_text);
      BlockCatenaryReport r = block_catenary(grp, {}, zss_len);
      BlockMonoid b(grp);
      app.header(out, "block_catenary_p");
      out.body["group"] = grp.name();
      out.body["value"] = r.catenary.value;
      out.body["max_length"] = r.max_length;
      out.body["davenport"] = r.davenport;
      out.body["elements_checked"] = r.elements_checked;
      out.body["witness"] = show_sequence(grp, r.witness);
      CatenaryReport w = catenary(b, b.element(r.witness), DistanceKind::Permutable);
      if (w.blocking) {
        Json pair = Json::array();
        for (const Factorization* z : {&w.blocking->first, &w.blocking->second}) {
          Json f = Json::array();
          for (ElemId u : *z) f.push_back(b.show(u));
          pair.push_back(f);
        }
        out.body["blocking"] = pair;
      }
      out.body["cert"] = "lower-bound";
      out.incomplete_if(r.truncated);
    };
  });
  zss_ob->callback([&] { action = order_bound; });

  auto* ob = cli.add_subcommand("order-bound", "catenary bound for maximal orders with class group G");
  ob->add_option("--group", group_text, "invariant orders, e.g. 3 or 2,2")->required();
  ob->callback([&] { action = order_bound; });

  // tri / mat
  std::string matrix_text, matrix_action;
  auto* tri = cli.add_subcommand("tri", "upper triangular integer matrices");
  tri->add_option("--matrix", matrix_text, "rows separated by ';', entries by spaces")->required();
  tri->add_option("action", matrix_action, "factorize, atom or delta")->required()->check(CLI::IsMember({"factorize", "atom", "delta"}));
  tri->callback([&] {
    action = [&] {
      IntMatrix m = IntMatrix::parse(matrix_text);
      TriangularSemigroup h(m.n);
      ElemId x = h.element(m);
      app.header(out, "tri_" + matrix_action);
      out.body["matrix"] = m.str();
      if (matrix_action == "factorize") {
        const FactorizationSet& fs = rigid_factorizations(h, x);
        out.body["rigid"] = factorization_list(h, fs.items);
        PermSet ps = permutable_factorizations(h, x);
        Json perm = Json::array();
        for (const PermFactorization& z : ps.items) perm.push_back(show_perm(h, z));
        out.body["permutable"] = perm;
        out.body["lengths"] = length_profile(h, x).lengths;
      } else if (matrix_action == "atom") {
        std::optional<AtomProfile> p = tri_is_atom(m);
        out.body["value"] = p.has_value();
        if (p) {
          NormalForm nf = tri_associate_normal_form(m);
          out.body["position"] = p->m;
          out.body["prime"] = p->p;
          out.body["normal_form"] = nf.form.str();
        }
      } else {
        out.body["value"] = delta_map(m);
      }
      out.cert(Cert::Exact);
    };
  });
  auto* mat = cli.add_subcommand("mat", "integer matrices with nonzero determinant");
  mat->add_option("--matrix", matrix_text, "rows separated by ';', entries by spaces")->required();
  mat->add_option("action", matrix_action, "snf, atom or lengths")->required()->check(CLI::IsMember({"snf", "atom", "lengths"}));
  mat->callback([&] {
    action = [&] {
      IntMatrix m = IntMatrix::parse(matrix_text);
      app.header(out, "mat_" + matrix_action);
      out.body["matrix"] = m.str();
      if (matrix_action == "snf") {
        SnfResult r = snf(m);
        out.body["u"] = r.u.str();
        out.body["c"] = r.c.str();
        out.body["v"] = r.v.str();
      } else if (matrix_action == "atom") {
        out.body["value"] = full_is_atom(m);
        out.body["det"] = m.det();
      } else {
        FullMatrixSemigroup h(m.n);
        LengthSet l = length_profile(h, h.element(m));
        out.body["lengths"] = l.lengths;
        out.body["delta"] = l.delta;
      }
      out.cert(Cert::Exact);
    };
  });

  // regression
  std::vector<std::string> cases;
  unsigned seed = RegressionOptions{}.seed;
  auto* reg = cli.add_subcommand("regression", "run the worked-example regression suite");
  reg->add_option("--case", cases, "case id or number (repeatable)");
  reg->add_option("--seed", seed, "random seed for sampled checks");
  reg->callback([&] {
    action = [&] {
      RegressionOptions opts;
      opts.budget_len = app.g.budget_len;
      opts.budget_ball = app.g.budget_ball;
      opts.seed = seed;
      if (cases.empty()) {
        for (const CaseInfo& c : regression_cases()) cases.push_back(c.id);
      }
      app.header(out, "regression");
      Json rows = Json::array();
      bool fail = false, incomplete = false;
      for (const std::string& id : cases) {
        CaseResult r = run_case(id, opts);
        Json checks = Json::array();
        for (const Check& c : r.checks) {
          checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"ok", c.ok},
                            {"cert", c.certified ? "exact" : "lower-bound"}});
        }
        rows.push_back({{"case", r.number}, {"id", r.id}, {"status", to_string(r.status)}, {"checks", checks}});
        fail = fail || r.status == CaseStatus::Fail;
        incomplete = incomplete || r.status == CaseStatus::Incomplete;
        if (app.g.format == "table") {
          std::printf("%-3d %-18s %s\n", r.number, r.id.c_str(), to_string(r.status));
          for (const Check& c : r.checks) {
            std::printf("      %s %s: expected %s, computed %s%s\n", c.ok ? "ok  " : "MISS", c.name.c_str(), c.expected.c_str(),
                        c.computed.c_str(), c.certified ? "" : " [lower-bound]");
          }
        }
      }
      out.body["cases"] = rows;
      out.status = fail ? 1 : (incomplete ? 2 : 0);
      if (app.g.format == "table") out.body = Json::object();
    };
  });

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return cli.exit(e) == 0 ? 0 : 1;
  }

  try {
    action();
  } catch (const Error& e) {
    Json err = {{"schema", "factorum/1"}, {"error", to_string(e.kind())}, {"message", e.what()}};
    if (app.g.format == "json") {
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    }
    return classify(e);
  }
  if (app.g.format == "json") {
    std::cout << out.body.dump(2) << "\n";
  } else {
    print_table(out.body);
  }
  return out.status;
}
