#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sexp/discovery.hpp"
#include "sexp/error.hpp"
#include "sexp/expansion.hpp"
#include "sexp/geometry.hpp"
#include "sexp/json_io.hpp"
#include "sexp/report.hpp"
#include "sexp/structure.hpp"

using namespace sexp;
using io::json;

namespace {

  constexpr int kOk = 0;
  constexpr int kSemantic = 1;
  constexpr int kParse = 2;

  // Semantic failure reported by a command, carried to the exit code.
  struct Failure {
    std::string message;
  };

  bool is_file(std::string const& arg) {
    std::error_code ec;
    return std::filesystem::is_regular_file(arg, ec);
  }

  LieAlgebra load_algebra(std::string const& arg) {
    LieAlgebra l = is_file(arg) ? io::algebra_from_json(io::read_file(arg)) : standard_algebra(arg);
    require_valid(l);
    return l;
  }

  Semigroup load_semigroup(std::string const& arg) {
    if (!is_file(arg)) {
      return named_semigroup(arg);
    }
    auto doc = io::semigroup_from_json(io::read_file(arg));
    auto report = validate_semigroup(doc.table, doc.name);
    if (!report.ok) {
      throw Error(ErrorCode::NotSemigroup, report.message);
    }
    return *report.semigroup;
  }

  std::string triple(InertiaSignature const& s) {
    std::ostringstream os;
    os << s;
    return os.str();
  }

  std::uint64_t effective_seed(std::uint64_t flag, bool flag_given) {
    if (flag_given) {
      return flag;
    }
    if (char const* env = std::getenv("SEXP_SEED")) {
      try {
        return std::stoull(env);
      } catch (std::exception const&) {
        throw Error(ErrorCode::ParseError, std::string("SEXP_SEED is not an integer: ") + env);
      }
    }
    return kDefaultSeed;
  }

  void write_text(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    }
    out << text;
  }

  int cmd_validate(std::string const& path) {
    json const doc = io::read_file(path);
    if (io::detect_kind(doc) == io::DocumentKind::Semigroup) {
      auto const sdoc = io::semigroup_from_json(doc);
      auto const report = validate_semigroup(sdoc.table, sdoc.name);
      if (!report.ok) {
        std::cout << "invalid semigroup: " << report.message << "\n";
        return kSemantic;
      }
      std::cout << "ok: semigroup '" << sdoc.name << "' of order " << sdoc.table.size() << "\n";
      return kOk;
    }
    LieAlgebra const l = io::algebra_from_json(doc);
    auto const report = validate_algebra(l);
    if (!report.ok) {
      std::cout << "invalid algebra: " << report.message << "\n";
      return kSemantic;
    }
    std::cout << "ok: algebra '" << l.name() << "' of dimension " << l.dim() << "\n";
    return kOk;
  }

  struct ExpandArgs {
    std::string semigroup, algebra, out;
    bool reduce_zero = false;
    std::size_t axiom_samples = 0;
    bool check_invariance = false;
    std::uint64_t seed = kDefaultSeed;
    bool seed_given = false;
  };

  int cmd_expand(ExpandArgs const& a) {
    Semigroup const s = load_semigroup(a.semigroup);
    LieAlgebra const l = load_algebra(a.algebra);
    ExpandedAlgebra const e = s_expand(s, l);
    LieAlgebra const result = a.reduce_zero ? zero_reduce(e) : e.algebra();
    auto const report = validate_algebra(result);
    if (!report.ok) {
      throw Failure{"expanded algebra fails validation: " + report.message};
    }
    auto const inertia = exact_inertia(killing_form(result));
    std::cout << "algebra: " << result.name() << "\n"
              << "dim: " << result.dim() << "\n"
              << "killing inertia: " << triple(inertia) << "\n"
              << "chi: " << inertia.character() << "\n";
    int code = kOk;
    if (a.axiom_samples > 0) {
      std::uint64_t const seed = effective_seed(a.seed, a.seed_given);
      auto const ax = verify_inner_product_axioms(e, a.axiom_samples, seed);
      std::cout << "inner-product axioms: " << ax.checks - ax.failures << "/" << ax.checks
                << " checks passed (seed " << seed << ")\n";
      if (!ax.ok()) {
        std::cout << "  first failure: " << ax.first_failure << "\n";
        code = kSemantic;
      }
    }
    if (a.check_invariance) {
      auto const inv = verify_ad_invariance(e);
      std::cout << "ad-invariance: " << (inv.ok() ? "holds" : "FAILS") << " on "
                << inv.triples_checked << " basis triples\n";
      if (!inv.ok()) {
        std::cout << "  " << inv.first_failure << "\n";
        code = kSemantic;
      }
    }
    if (!a.out.empty()) {
      io::ExpansionNote note{s.name(), l.name(), a.reduce_zero};
      write_text(a.out, io::dump(io::algebra_to_json(result, note)));
      std::cout << "wrote " << a.out << "\n";
    }
    return code;
  }

  int cmd_killing(std::string const& arg, bool as_json) {
    LieAlgebra const l = load_algebra(arg);
    RatMatrix const g = killing_form(l);
    auto const inertia = exact_inertia(g);
    if (as_json) {
      json doc = {{"algebra", l.name()},
                  {"killing", io::matrix_to_json(g)},
                  {"inertia", {inertia.n_plus, inertia.n_minus, inertia.n_zero}},
                  {"chi", inertia.character()},
                  {"class", to_string(classify(inertia))}};
      std::cout << io::dump(doc);
      return kOk;
    }
    std::cout << g << "inertia: " << triple(inertia) << "\nchi: " << inertia.character()
              << "\nclass: " << to_string(classify(inertia)) << "\n";
    return kOk;
  }

  int cmd_mk(std::string const& arg) {
    Semigroup const s = load_semigroup(arg);
    auto const mk = mk_matrix(s);
    auto const profile = semigroup_profile(s);
    std::cout << render_table(s) << "\nM_K:\n" << mk.to_rational()
              << "inertia: " << triple(profile.inertia) << "\n"
              << "P = " << s.order() << ", H = " << profile.H() << ", Q = " << profile.Q() << "\n";
    auto const off = diagonality_test(s);
    std::cout << "diagonal: " << (off.empty() ? "yes" : "no");
    for (auto const& [i, j] : off) {
      std::cout << " (l" << i + 1 << ",l" << j + 1 << ")";
    }
    std::cout << "\nmagnitude factors:";
    for (std::size_t a = 0; a < s.order(); ++a) {
      std::cout << " sqrt(" << magnitude_factor(s, a) << ")";
    }
    std::cout << "\n";
    return kOk;
  }

  struct PredictArgs {
    std::string algebra, semigroup;
    long chi = 0;
    std::size_t p = 0, h = 0, q = 0;
    bool counts_given = false;
  };

  int cmd_predict(PredictArgs const& a) {
    if (a.counts_given) {
      std::cout << "chi_exp = " << predict_character(a.chi, a.p, a.h, a.q) << "\n";
      return kOk;
    }
    if (a.algebra.empty() || a.semigroup.empty()) {
      throw Error(ErrorCode::ParseError, "predict needs --algebra and --semigroup, or --chi and --P");
    }
    LieAlgebra const l = load_algebra(a.algebra);
    Semigroup const s = load_semigroup(a.semigroup);
    auto const n = signature_profile(l);
    auto const sp = semigroup_profile(s);
    auto const pred = predict_expanded_signature(n, sp);
    std::cout << "algebra inertia: " << triple(n.inertia) << "\n"
              << "M_K inertia: " << triple(sp.inertia) << "\n"
              << "predicted: " << triple(pred.inertia) << "\n"
              << "rank: " << pred.rank << "\nchi: " << pred.chi << "\n";
    if (!pred.summed_form_agrees()) {
      std::cout << "note: n*s0 + P*n0 = " << pred.summed_n_zero << " differs from N0 = "
                << pred.inertia.n_zero << "\n";
    }
    return kOk;
  }

  struct DiscoverArgs {
    std::string source, target;
    std::size_t p_max = 4;
    std::size_t order_max = 4;
    std::string format = "md";
    bool labeled = false;
    bool well_defined = false;
  };

  int cmd_discover(DiscoverArgs const& a) {
    Format const f = parse_format(a.format);
    LieAlgebra const src = load_algebra(a.source);
    LieAlgebra const tgt = load_algebra(a.target);
    auto const sp = signature_profile(src);
    auto const tp = signature_profile(tgt);
    auto const plans = solve_phq(sp, tp, a.p_max);
    if (plans.empty()) {
      throw Failure{"no (P, H, Q) plan with P <= " + std::to_string(a.p_max)};
    }
    bool const md = f == Format::Markdown;
    if (md) {
      std::cout << "# " << src.name() << " -> " << tgt.name() << "\n\n## Plans\n\n"
                << "| P | H | Q | predicted |\n|---|---|---|---|\n";
    } else {
      std::cout << "kind,P,H,Q,semigroup,mk_inertia,expanded_inertia,verified,catalog\n";
    }
    for (auto const& p : plans) {
      if (md) {
        std::cout << "| " << p.P << " | " << p.H << " | " << p.Q << " | "
                  << triple(p.predicted.inertia) << " |\n";
      } else {
        std::cout << "plan," << p.P << "," << p.H << "," << p.Q << ",,,,,\n";
      }
    }
    DiscoveryOptions opts;
    opts.up_to_iso = !a.labeled;
    opts.well_defined_only = a.well_defined;
    opts.max_order = a.order_max;
    auto const& best = plans.front();
    if (best.P > a.order_max) {
      if (md) {
        std::cout << "\nPlan (" << best.P << "," << best.H << "," << best.Q
                  << ") exceeds the enumeration bound " << a.order_max
                  << "; candidates not enumerated.\n";
      }
      return kOk;
    }
    auto const result = find_semigroups(best, src, tp, opts);
    if (md) {
      std::cout << "\n## Candidates for (" << best.P << "," << best.H << "," << best.Q << ")\n\n"
                << result.enumerated << " semigroups enumerated.\n";
    }
    for (auto const* list : {&result.verified, &result.rejected}) {
      for (auto const& c : *list) {
        std::string const cat = c.witness ? c.witness->name : "";
        if (md) {
          std::cout << "\n" << (c.verified ? "signature-verified" : "rejected")
                    << (cat.empty() ? "" : " (" + cat + ")") << ", M_K inertia "
                    << triple(c.mk_inertia) << ", expansion " << triple(c.expanded_inertia)
                    << "\n\n```\n" << render_table(c.semigroup) << "```\n";
        } else {
          std::cout << "candidate," << best.P << "," << best.H << "," << best.Q << ","
                    << compact_table(c.semigroup) << ",\"" << triple(c.mk_inertia) << "\",\""
                    << triple(c.expanded_inertia) << "\"," << (c.verified ? "yes" : "no") << ","
                    << cat << "\n";
        }
      }
    }
    return kOk;
  }

  int cmd_enumerate(std::size_t order, bool labeled, std::string const& format) {
    if (format == "json") {
      json list = json::array();
      for_each_semigroup(order, !labeled, [&](Semigroup const& s) {
        list.push_back(io::table_to_json(s.table(), ""));
        return true;
      });
      std::cout << io::dump({{"order", order}, {"labeled", labeled}, {"count", list.size()},
                             {"semigroups", list}});
      return kOk;
    }
    Format const f = parse_format(format);
    std::size_t count = 0;
    if (f == Format::Csv) {
      std::cout << "index,table,mk_inertia,zero,identity\n";
    }
    for_each_semigroup(order, !labeled, [&](Semigroup const& s) {
      ++count;
      auto const z = zero_element(s);
      auto const id = identity_element(s);
      std::string const zs = z ? "l" + std::to_string(*z + 1) : "-";
      std::string const is = id ? "l" + std::to_string(*id + 1) : "-";
      auto const inertia = semigroup_profile(s).inertia;
      if (f == Format::Csv) {
        std::cout << count << "," << compact_table(s) << ",\"" << triple(inertia) << "\"," << zs
                  << "," << is << "\n";
      } else {
        std::cout << "### " << count << "\n\nM_K inertia " << triple(inertia) << ", zero " << zs
                  << ", identity " << is << "\n\n```\n" << render_table(s) << "```\n\n";
      }
      return true;
    });
    if (f == Format::Markdown) {
      std::cout << "total: " << count << "\n";
    }
    return kOk;
  }

  ResonantDecomposition load_decomposition(std::string const& path) {
    json const doc = io::read_file(path);
    ResonantDecomposition d;
    try {
      d.g_partition = doc.at("g_partition").get<std::vector<std::vector<std::size_t>>>();
      for (auto const& part : doc.at("s_partition")) {
        std::vector<std::size_t> p;
        for (auto const& v : part) {
          std::size_t const label = v.get<std::size_t>();
          if (label == 0) {
            throw Error(ErrorCode::ParseError, "s_partition uses 1-based labels");
          }
          p.push_back(label - 1);
        }
        d.s_partition.push_back(std::move(p));
      }
      if (doc.contains("bracket_targets")) {
        for (auto const& t : doc.at("bracket_targets")) {
          d.bracket_targets[{t.at("p").get<std::size_t>(), t.at("q").get<std::size_t>()}] =
              t.at("targets").get<std::vector<std::size_t>>();
        }
      }
    } catch (json::exception const& e) {
      throw Error(ErrorCode::ParseError, std::string("decomposition: ") + e.what());
    }
    return d;
  }

  int cmd_resonant(std::string const& sg, std::string const& alg, std::string const& decomp,
                   std::string const& out) {
    Semigroup const s = load_semigroup(sg);
    LieAlgebra const l = load_algebra(alg);
    auto const d = load_decomposition(decomp);
    auto const check = check_resonance(s, l, d);
    if (!check.ok) {
      std::cout << "not resonant: " << check.message << "\n";
      return kSemantic;
    }
    auto const sub = resonant_subalgebra(s, l, d);
    auto const report = validate_algebra(sub.algebra);
    std::cout << "resonant subalgebra: dim " << sub.algebra.dim() << "\ngenerators:";
    for (auto const& n : sub.algebra.generator_names()) {
      std::cout << " " << n;
    }
    std::cout << "\njacobi: " << (report.ok ? "ok" : report.message) << "\n";
    if (!out.empty()) {
      write_text(out, io::dump(io::algebra_to_json(sub.algebra)));
      std::cout << "wrote " << out << "\n";
    }
    return report.ok ? kOk : kSemantic;
  }

  int cmd_certify(std::string const& sg, std::string const& alg) {
    Semigroup const s = load_semigroup(sg);
    LieAlgebra const l = load_algebra(alg);
    auto const cert = ideal_certificate(s, l);
    std::size_t passed = 0;
    for (auto const& c : cert.transcript) {
      passed += c.inside ? 1 : 0;
    }
    std::cout << "construction: " << cert.construction << "\n"
              << "ideal dimension: " << cert.basis.size() << " of " << cert.ambient_dim << "\n"
              << "bracket checks: " << passed << "/" << cert.transcript.size() << "\n"
              << "verified: " << (cert.verified ? "yes" : "no") << "\nbasis:\n";
    for (auto const& v : cert.basis) {
      std::cout << " ";
      for (auto const& x : v) {
        std::cout << " " << x;
      }
      std::cout << "\n";
    }
    if (s.order() >= 2) {
      auto const split = split_direct_sum(s, l);
      std::cout << "split: " << split.message << "\n";
      for (auto const& part : split.parts) {
        std::cout << "  part";
        for (auto const& x : part.element) {
          std::cout << " " << x;
        }
        std::cout << ": " << (part.copy_of_base ? "copy of " + l.name() : "abelian")
                  << ", inertia " << triple(part.inertia) << "\n";
      }
    }
    return cert.verified ? kOk : kSemantic;
  }

  int cmd_report(std::string const& suite, std::string const& format, bool labeled,
                 std::size_t max_order) {
    Format const f = parse_format(format);
    if (suite == "table1") {
      std::cout << render_table_one(generate_table_one(), f);
      return kOk;
    }
    if (suite == "signature-matrix") {
      auto const rows = signature_matrix(signature_suite_algebras(), max_order, !labeled);
      std::cout << render_signature_matrix(rows, f);
      for (auto const& r : rows) {
        if (!r.match || !r.killing_identity) {
          return kSemantic;
        }
      }
      return kOk;
    }
    if (suite == "case-study") {
      std::cout << case_study(f);
      return kOk;
    }
    throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "'");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semigroup expansions of Lie algebras in exact arithmetic"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check an algebra or semigroup JSON file");
  validate->add_option("path", path)->required();

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Build the S-expanded algebra");
  expand->add_option("semigroup", ex.semigroup, "semigroup file or name")->required();
  expand->add_option("algebra", ex.algebra, "algebra file or name")->required();
  expand->add_flag("--reduce-zero", ex.reduce_zero, "drop the zero element's generators");
  expand->add_option("--out", ex.out, "write the result as JSON");
  expand->add_option("--check-axioms", ex.axiom_samples,
                     "random samples for the inner-product axiom check");
  expand->add_flag("--check-invariance", ex.check_invariance, "check ad-invariance of Killing");
  auto* seed_opt = expand->add_option("--seed", ex.seed, "sampling seed (default: $SEXP_SEED)");

  std::string alg;
  bool killing_json = false;
  auto* killing = app.add_subcommand("killing", "Killing form, inertia and character");
  killing->add_option("algebra", alg)->required();
  killing->add_flag("--json", killing_json);

  std::string sg;
  auto* mk = app.add_subcommand("mk", "M_K matrix and its inertia");
  mk->add_option("semigroup", sg)->required();

  PredictArgs pr;
  auto* predict = app.add_subcommand("predict", "Predicted signature or character");
  predict->add_option("--algebra", pr.algebra);
  predict->add_option("--semigroup", pr.semigroup);
  auto* chi_opt = predict->add_option("--chi", pr.chi);
  auto* p_opt = predict->add_option("--P", pr.p);
  predict->add_option("--H", pr.h);
  predict->add_option("--Q", pr.q);

  DiscoverArgs di;
  auto* discover = app.add_subcommand("discover", "Find semigroups taking one algebra to another");
  discover->add_option("--source", di.source)->required();
  discover->add_option("--target", di.target)->required();
  discover->add_option("--p-max", di.p_max);
  discover->add_option("--order-max", di.order_max);
  discover->add_option("--format", di.format)->check(CLI::IsMember({"md", "markdown", "csv"}));
  discover->add_flag("--labeled", di.labeled);
  discover->add_flag("--well-defined", di.well_defined, "require a nonzero M_K diagonal");

  std::size_t order = 2;
  bool labeled = false;
  std::string format = "md";
  auto* enumerate = app.add_subcommand("enumerate", "List commutative semigroups of an order");
  enumerate->add_option("--order", order)->required()->check(CLI::Range(1, 6));
  enumerate->add_flag("--labeled", labeled, "all labeled tables instead of iso classes");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"md", "markdown", "csv", "json"}));

  std::string decomp, out;
  auto* resonant = app.add_subcommand("resonant", "Resonant subalgebra of an expansion");
  resonant->add_option("semigroup", sg)->required();
  resonant->add_option("algebra", alg)->required();
  resonant->add_option("--decomposition", decomp)->required();
  resonant->add_option("--out", out);

  auto* certify = app.add_subcommand("certify-nonsimple", "Ideal certificate and splitting");
  certify->add_option("semigroup", sg)->required();
  certify->add_option("algebra", alg)->required();

  std::string suite;
  std::size_t max_order = 4;
  auto* report = app.add_subcommand("report", "Regenerate tables and walkthroughs");
  report->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"table1", "signature-matrix", "case-study"}));
  report->add_option("--format", format)->check(CLI::IsMember({"md", "markdown", "csv"}));
  report->add_flag("--labeled", labeled);
  report->add_option("--max-order", max_order)->check(CLI::Range(1, 4));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*validate) {
      return cmd_validate(path);
    }
    if (*expand) {
      ex.seed_given = seed_opt->count() > 0;
      return cmd_expand(ex);
    }
    if (*killing) {
      return cmd_killing(alg, killing_json);
    }
    if (*mk) {
      return cmd_mk(sg);
    }
    if (*predict) {
      pr.counts_given = chi_opt->count() > 0 || p_opt->count() > 0;
      return cmd_predict(pr);
    }
    if (*discover) {
      return cmd_discover(di);
    }
    if (*enumerate) {
      return cmd_enumerate(order, labeled, format);
    }
    if (*resonant) {
      return cmd_resonant(sg, alg, decomp, out);
    }
    if (*certify) {
      return cmd_certify(sg, alg);
    }
    if (*report) {
      return cmd_report(suite, format, labeled, max_order);
    }
  } catch (Failure const& f) {
    std::cerr << "error: " << f.message << "\n";
    return kSemantic;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    bool const parse = e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownName;
    return parse ? kParse : kSemantic;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSemantic;
  }
  return kOk;
}
