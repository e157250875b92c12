#include "nilp2/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "nilp2/acceptance.hpp"
#include "nilp2/io.hpp"
#include "nilp2/report.hpp"

namespace nilp2::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_element(const Element& x) {
  std::string out = format_vector(x.v());
  out += " |";
  if (x.w().size() > 0) out += " " + format_vector(x.w());
  return out;
}

std::string format_generators(const ElementTable& t, const Subgroup& s) {
  std::string out;
  for (ElementId id : s.generators) {
    if (!out.empty()) out += ", ";
    out += "(" + format_element(t.element(id)) + ")";
  }
  return out.empty() ? "none" : out;
}

std::uint64_t resolve_max_order(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NILP2_MAX_ORDER"); env && *env) {
    std::uint64_t v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("NILP2_MAX_ORDER must be a nonnegative integer");
    }
    return v;
  }
  return kDefaultMaxOrder;
}

int cmd_inspect(const std::string& path, std::ostream& out) {
  const auto g = load_group(path);
  const auto z = center(g);
  out << "p = " << g.p() << "\n"
      << "n = " << g.n() << "\n"
      << "m = " << g.m() << "\n"
      << "order = " << g.p() << "^" << g.order_exponent() << "\n"
      << "abelian = " << (g.is_abelian() ? "true" : "false") << "\n"
      << "center_equals_derived = " << (z.equals_derived ? "true" : "false") << "\n"
      << "center_radical = " << format_basis(z.radical) << "\n"
      << "nonzero_commutators = " << g.nonzero_pairs().size() << "\n";
  for (auto [j, i] : g.nonzero_pairs()) {
    out << "c(" << j + 1 << "," << i + 1 << ") = " << format_vector(g.constant(j, i)) << "\n";
  }
  return kOk;
}

int cmd_capable(const std::string& path, std::uint64_t cap, std::ostream& out) {
  const auto g = load_group(path);
  Report r;
  add_verdict(r, capability_verdict(g, {cap}));
  add_shape(r, g);
  out << r.render();
  return kOk;
}

int cmd_epicentre(const std::string& path, std::ostream& out) {
  const auto g = load_group(path);
  const auto z = epicentre_in_derived(g);
  Report r;
  r.set("verdict", z.is_zero() ? "capable" : "not_capable");
  r.set("method", z.is_zero() ? "epicentre_trivial" : "epicentre_nontrivial");
  add_epicentre(r, z);
  add_shape(r, g);
  out << r.render();
  return kOk;
}

int cmd_rp_check(const std::string& path, std::uint64_t cap, std::ostream& out) {
  const auto g = load_group(path);
  Report r;
  add_shape(r, g);
  add_rp(r, rp_membership(g, {cap}));
  out << r.render();
  return kOk;
}

int cmd_product(const std::string& kind, const std::string& a_path, const std::string& b_path,
                const std::string& id_path, const std::string& out_path, const std::string& map_a,
                const std::string& map_b, std::ostream& out) {
  const auto a = load_group(a_path);
  const auto b = load_group(b_path);
  const bool glued = kind == "central" || kind == "amalgam";
  if (!glued && !id_path.empty()) throw UsageError("--identify applies only to central and amalgam products");
  const Identification ident =
      id_path.empty() ? Identification::empty(a, b) : parse_identification(read_text_file(id_path), a, b);
  std::optional<ProductResult> r;
  if (kind == "direct") r = direct_product(a, b);
  if (kind == "nilpotent2") r = nilpotent2_product(a, b);
  if (kind == "central") r = central_product_identified(a, b, ident);
  if (kind == "amalgam") r = amalgamated_coproduct(a, b, ident);
  write_text_file(out_path, write_group(r->group));
  if (!map_a.empty()) write_text_file(map_a, write_map(r->left));
  if (!map_b.empty()) write_text_file(map_b, write_map(r->right));
  Report rep;
  add_shape(rep, r->group);
  out << rep.render();
  return kOk;
}

int cmd_extend(const std::string& mode, const std::string& path, const std::string& out_path,
               const std::string& report_path, const std::string& map_path, std::ostream& out,
               std::ostream& err) {
  const auto g = load_group(path);
  const auto ext = mode == "capable" ? build_capable_extension(g) : build_noncapable_extension(g);
  write_text_file(out_path, write_group(ext.output));
  if (!map_path.empty()) write_text_file(map_path, write_map(ext.embedding));
  const std::string text = extension_report(ext).render();
  if (!report_path.empty()) write_text_file(report_path, text);
  for (const auto& step : ext.trail) out << "# " << step << "\n";
  out << text;
  const auto check = verify_extension(ext);
  if (!check.passed) {
    for (const auto& claim : check.failed_claims()) err << "verification failed: " << claim << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_verify_embed(const std::string& sub_path, const std::string& big_path, const std::string& map_path,
                     std::uint64_t cap, std::ostream& out, std::ostream& err) {
  const auto sub = load_group(sub_path);
  const auto big = load_group(big_path);
  const auto f = parse_map(read_text_file(map_path), sub, big);
  Report r;
  add_shape(r, big);
  if (!f.consistent()) {
    r.set("embedding_ok", "false");
    out << r.render();
    err << "map does not extend to a homomorphism\n";
    return kVerificationFailed;
  }
  const auto mono = is_monomorphism(f, cap);
  r.set("embedding_ok", mono.status == MonoStatus::injective ? "true" : "false");
  out << r.render();
  if (mono.status == MonoStatus::injective) return kOk;
  if (mono.kernel_witness) err << "kernel contains (" << format_element(*mono.kernel_witness) << ")\n";
  if (mono.status == MonoStatus::undetermined) err << "injectivity undetermined within the order cap\n";
  return kVerificationFailed;
}

int cmd_decompose(const std::string& path, std::uint64_t cap, std::ostream& out, std::ostream& err) {
  const auto g = load_group(path);
  if (!bounded_order(g, cap)) {
    err << "group of order " << g.p() << "^" << g.order_exponent() << " exceeds the cap " << cap << "\n";
    out << "status = order_exceeds_cap\n";
    return kValidation;
  }
  const ElementTable t(g, cap);
  const auto subgroups = enumerate_subgroups(t);
  const auto s = central_decomposition_search(t, subgroups, false);
  out << "subgroups = " << subgroups.size() << "\n";
  if (s.status != SearchStatus::found) {
    out << "status = none_found\n";
    return kOk;
  }
  const auto& w = *s.witness;
  out << "status = found\n"
      << "c_order = " << w.c.order() << "\n"
      << "c_generators = " << format_generators(t, w.c) << "\n"
      << "d_order = " << w.d.order() << "\n"
      << "d_generators = " << format_generators(t, w.d) << "\n"
      << "derived_overlap = " << (w.derived_overlap ? "true" : "false") << "\n";
  return kOk;
}

int cmd_selftest(std::ostream& out) {
  const auto results = run_acceptance();
  out << render_selftest(results);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with p-groups of class two and odd prime exponent", "nilp2"};
  app.require_subcommand(1);

  std::string file, file_b, out_path, id_path, report_path, map_path, map_a, map_b, kind, mode;
  std::optional<std::uint64_t> max_order;

  auto* inspect = app.add_subcommand("inspect", "Summarize a group file");
  inspect->add_option("FILE", file, "group file")->required();

  auto* capable = app.add_subcommand("capable", "Decide capability");
  capable->add_option("FILE", file, "group file")->required();
  capable->add_option("--max-order", max_order, "order cap for brute-force search");

  auto* epicentre = app.add_subcommand("epicentre", "Compute the epicentre (needs Z(G) = [G,G])");
  epicentre->add_option("FILE", file, "group file")->required();

  auto* rp = app.add_subcommand("rp-check", "Check membership in the hard class");
  rp->add_option("FILE", file, "group file")->required();
  rp->add_option("--max-order", max_order, "order cap for brute-force search");

  auto* product = app.add_subcommand("product", "Build a product of two groups");
  product->add_option("--kind", kind, "product kind")
      ->required()
      ->check(CLI::IsMember({"direct", "nilpotent2", "central", "amalgam"}));
  product->add_option("A", file, "left factor")->required();
  product->add_option("B", file_b, "right factor")->required();
  product->add_option("--identify", id_path, "identification file");
  product->add_option("-o", out_path, "output group file")->required();
  product->add_option("--map-a", map_a, "write the embedding of A");
  product->add_option("--map-b", map_b, "write the embedding of B");

  auto* extend = app.add_subcommand("extend", "Embed a group in a capable or non-capable group");
  extend->add_option("--mode", mode, "construction")->required()->check(CLI::IsMember({"capable", "noncapable"}));
  extend->add_option("FILE", file, "group file")->required();
  extend->add_option("-o", out_path, "output group file")->required();
  extend->add_option("--report", report_path, "write the key = value report");
  extend->add_option("--map-out", map_path, "write the embedding map");

  auto* verify = app.add_subcommand("verify-embed", "Check that a map is an embedding");
  verify->add_option("SUB", file, "domain group file")->required();
  verify->add_option("BIG", file_b, "codomain group file")->required();
  verify->add_option("--map", map_path, "map file")->required();
  verify->add_option("--max-order", max_order, "cap for the kernel scan");

  auto* decompose = app.add_subcommand("decompose", "Search for a nontrivial central decomposition");
  decompose->add_option("FILE", file, "group file")->required();
  decompose->add_option("--max-order", max_order, "order cap for subgroup enumeration");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance battery");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (inspect->parsed()) return cmd_inspect(file, out);
    if (capable->parsed()) return cmd_capable(file, resolve_max_order(max_order), out);
    if (epicentre->parsed()) return cmd_epicentre(file, out);
    if (rp->parsed()) return cmd_rp_check(file, resolve_max_order(max_order), out);
    if (product->parsed()) return cmd_product(kind, file, file_b, id_path, out_path, map_a, map_b, out);
    if (extend->parsed()) return cmd_extend(mode, file, out_path, report_path, map_path, out, err);
    if (verify->parsed()) return cmd_verify_embed(file, file_b, map_path, resolve_max_order(max_order), out, err);
    if (decompose->parsed()) return cmd_decompose(file, resolve_max_order(max_order), out, err);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}

}  // namespace nilp2::cli
