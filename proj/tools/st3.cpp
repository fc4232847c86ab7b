// st3: catalog, statistics and verification front end.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "st3/catalog.hpp"
#include "st3/harness.hpp"
#include "st3/identify.hpp"
#include "st3/rationality.hpp"
#include "st3/stats.hpp"
#include "st3/verify.hpp"

using namespace st3;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const STGroup& group_or_throw(const std::string& name) {
  const STGroup* g = find_group(extended_catalog(), name);
  if (!g) throw UsageError("unknown group '" + name + "'");
  return *g;
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int report(const std::string& title, const CountReport& r) {
  std::cout << "== " << title << "\n" << r.str();
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sato-Tate groups of abelian threefolds"};
  app.require_subcommand(1);
  int status = 0;

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "build, list or show catalog groups");
  cat_cmd->require_subcommand(1);
  bool extended = false;
  std::string blocks, out;
  auto add_build_opts = [&](CLI::App* c) {
    c->add_flag("--extended", extended, "include groups that are not realizable");
    c->add_option("--blocks", blocks, "genus-2 block file")->check(CLI::ExistingFile);
  };
  auto* build = cat_cmd->add_subcommand("build", "build and verify the catalog");
  add_build_opts(build);
  build->add_option("--out", out, "write the catalog here");
  build->callback([&] {
    BuildOptions opt;
    opt.extended = extended;
    if (!blocks.empty()) opt.blocks_path = blocks;
    opt.quiet = false;
    opt.log = [](const std::string& s) { std::cerr << s << "\n"; };
    auto cat = build_catalog(opt);
    if (!out.empty()) write_or_print(catalog_text(cat), out);
    std::cout << cat.size() << " groups\n";
    if (extended) {
      CountReport r = verify_counts(cat);
      if (!r.ok()) {
        std::cerr << r.str();
        status = 1;
      }
    }
  });
  auto* list = cat_cmd->add_subcommand("list", "one line per group");
  add_build_opts(list);
  list->callback([&] {
    BuildOptions opt;
    opt.extended = extended;
    if (!blocks.empty()) opt.blocks_path = blocks;
    std::cout << "label,type,components,realizable\n";
    for (const auto& g : build_catalog(opt))
      std::cout << g.label << "," << g.abs_type << "," << g.component_count() << ","
                << (g.realizable ? "yes" : "no") << "\n";
  });
  std::string show_label;
  auto* show = cat_cmd->add_subcommand("show", "details of one group");
  show->add_option("label", show_label)->required();
  show->callback([&] {
    const STGroup& g = group_or_throw(show_label);
    std::cout << "label: " << g.label << "\n";
    for (const auto& a : g.aliases) std::cout << "alias: " << a << "\n";
    std::cout << "type: " << g.abs_type << "\nidentity component: " << g.connected.name()
              << "\ncomponents: " << g.component_count()
              << "\nrealizable: " << (g.realizable ? "yes" : "no")
              << "\nprovenance: " << provenance_name(g.provenance)
              << "\ncomponent group: " << g.components.quotient.fingerprint().str()
              << "\nrecord: " << g.record() << "\n";
  });
  std::string blocks_out;
  auto* blk = cat_cmd->add_subcommand("blocks", "write the built-in genus-2 blocks");
  blk->add_option("--out", blocks_out, "output file (default stdout)");
  blk->callback([&] { write_or_print(blocks_text(builtin_genus2_blocks()), blocks_out); });

  // statistics
  std::string group;
  int simplex_m = 12, diag_m = 3;
  auto* mom = app.add_subcommand("moments", "m-simplex of moments as CSV");
  mom->add_option("--group", group)->required();
  mom->add_option("--simplex", simplex_m, "weight bound")->check(CLI::Range(0, 18));
  mom->callback([&] { std::cout << simplex_csv(simplex(group_or_throw(group), simplex_m)); });
  auto* diag = app.add_subcommand("diagonal", "m-diagonal of character norms as CSV");
  diag->add_option("--group", group)->required();
  diag->add_option("-m", diag_m, "box size")->check(CLI::Range(0, 3));
  diag->callback([&] { std::cout << diagonal_csv(diagonal(group_or_throw(group), diag_m)); });
  auto* dens = app.add_subcommand("densities", "point-density matrix Z as CSV");
  dens->add_option("--group", group)->required();
  dens->callback([&] { std::cout << z_csv(densities(group_or_throw(group))); });

  // verification
  bool v_tables = false, v_roots = false, v_chars = false, v_all = false;
  auto* ver = app.add_subcommand("verify", "check against published tables and lists");
  ver->add_flag("--tables", v_tables, "classification counts and connected 3-diagonals");
  ver->add_flag("--roots", v_roots, "roots-of-unity lists");
  ver->add_flag("--characters", v_chars, "characters in terms of a1, a2, a3");
  ver->add_flag("--all", v_all, "all of the above plus coincidences and audits");
  ver->callback([&] {
    if (!(v_tables || v_roots || v_chars || v_all)) throw UsageError("verify needs --tables, --roots, --characters or --all");
    int rc = 0;
    if (v_tables || v_all) {
      const auto& cat = extended_catalog();
      rc |= report("classification counts", verify_counts(cat));
      rc |= report("connected 3-diagonals", verify_connected_diagonals(cat));
    }
    if (v_roots || v_all) rc |= report("roots of unity", verify_roots());
    if (v_chars || v_all) rc |= report("characters", verify_characters());
    if (v_all) {
      const auto& cat = extended_catalog();
      rc |= report("N(U(3))", verify_nu3(cat));
      rc |= report("coincidences", verify_coincidences(cat));
      rc |= report("key audits", verify_audits(cat));
    }
    status = rc;
  });

  std::string mode;
  auto* roots = app.add_subcommand("roots", "roots-of-unity triples");
  roots->add_option("--mode", mode)->required()->check(CLI::IsMember({"single", "cyclic", "verify"}));
  roots->callback([&] {
    if (mode == "verify") {
      status = report("roots of unity", verify_roots());
      return;
    }
    for (const auto& t : mode == "single" ? single_integrality_classes() : cyclic_integrality_classes())
      std::cout << t.str() << "\n";
  });

  // empirical
  std::vector<std::string> inputs;
  std::string variant = "b";
  double tol = 0;
  auto* mat = app.add_subcommand("match", "heuristic lookup of L-polynomial data");
  mat->add_option("--input", inputs, "files of 'p c1 c2 c3' lines")->required()->check(CLI::ExistingFile);
  mat->add_option("--variant", variant)->check(CLI::IsMember({"a", "b", "c"}));
  mat->add_option("--tol", tol, "absolute tolerance")->required()->check(CLI::NonNegativeNumber);
  mat->callback([&] {
    KeyVariant v = parse_variant(variant);
    EmpiricalProfile prof = ingest_files(inputs);
    std::cout << "# heuristic match, variant " << variant << ", " << prof.count << " primes\n";
    std::cout << "label,deviation\n";
    for (const auto& m : match_empirical(prof.key(v), tol, v)) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g", m.deviation);
      std::cout << m.label << "," << buf << "\n";
    }
  });

  long n = 1000;
  std::uint64_t seed = 1;
  auto* smp = app.add_subcommand("sample", "Haar samples of normalized (a1,a2,a3)");
  smp->add_option("--group", group)->required();
  smp->add_option("-n", n)->check(CLI::PositiveNumber);
  smp->add_option("--seed", seed);
  smp->callback([&] {
    Sampler s(group_or_throw(group), seed);
    std::cout << "a1,a2,a3\n";
    char buf[96];
    for (long i = 0; i < n; ++i) {
      auto a = s.next();
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", a[0], a[1], a[2]);
      std::cout << buf;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedSampler& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IngestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}
