#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qg/error.hpp"
#include "qg/report.hpp"
#include "qg/table_io.hpp"

namespace {

using namespace qg;

Quasigroup load(const std::string& path) { return parse_table_file(path); }

Perm parse_perm_arg(unsigned degree, const std::string& text) {
  return Perm::parse(degree, text);
}

int cmd_validate(const std::string& file) {
  Quasigroup q = load(file);
  std::cout << "valid quasigroup of order " << q.order() << "\n";
  if (auto id = q.identity())
    std::cout << "loop with identity " << *id << "\n";
  else {
    if (auto l = q.left_identity()) std::cout << "left identity " << *l << "\n";
    if (auto r = q.right_identity()) std::cout << "right identity " << *r << "\n";
  }
  return 0;
}

int cmd_analyze(const std::string& file, bool json, unsigned max_n) {
  Quasigroup q = load(file);
  AnalysisReport r = analyze(q, max_n);
  std::cout << (json ? report_json(r) + "\n" : report_text(r));
  return 0;
}

int cmd_parastrophe(const std::string& file, const std::string& sigma) {
  Quasigroup q = load(file);
  std::cout << print_table(q.parastrophe(Parastrophy::parse(sigma)));
  return 0;
}

int cmd_isotope(const std::string& file, const std::string& alpha, const std::string& beta,
                const std::string& gamma) {
  Quasigroup q = load(file);
  Isotopy t(parse_perm_arg(q.order(), alpha), parse_perm_arg(q.order(), beta),
            parse_perm_arg(q.order(), gamma));
  std::cout << print_table(apply_isotopy(q, t));
  return 0;
}

int cmd_autotopy(const std::string& file, unsigned max_n, bool list) {
  Quasigroup q = load(file);
  AutotopyGroup avt = autotopy_group(q, max_n);
  std::cout << "order: " << avt.order() << "\n";
  std::cout << "fingerprint: " << avt.fingerprint().to_string() << "\n";
  if (list)
    for (const Isotopy& t : avt.elements())
      std::cout << t.to_string() << "\n";
  return 0;
}

int cmd_nuclei(const std::string& file, unsigned max_n) {
  Quasigroup q = load(file);
  AutotopyGroup avt = autotopy_group(q, max_n);
  for (NucleusSide side : {NucleusSide::left, NucleusSide::right, NucleusSide::middle}) {
    ANucleus nuc = a_nucleus(avt, side);
    std::cout << side_name(side) << " A-nucleus order " << nuc.order() << "\n";
    auto [p1, p2] = nuc.component_positions();
    for (unsigned pos : {p1, p2}) {
      PermGroup comp = nuc.component(pos);
      std::cout << "  component " << pos << ":";
      for (const Perm& p : comp.elements())
        std::cout << " " << p.cycle_string();
      std::cout << "\n  orbits " << pos << ": " << comp.orbits().to_string() << "\n";
    }
    auto g = garrison_nucleus(q, side);
    std::cout << "  Garrison: {";
    for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
    std::cout << "}\n";
  }
  return 0;
}

int cmd_centers(const std::string& file, unsigned max_n) {
  Quasigroup q = load(file);
  AutotopyGroup avt = autotopy_group(q, max_n);
  for (NucleusSide side : {NucleusSide::left, NucleusSide::right, NucleusSide::middle}) {
    ACenter z = a_center(avt, side);
    std::cout << side_name(side) << " A-center order " << z.order() << "\n";
  }
  if (q.is_loop()) {
    auto c = loop_center(q);
    std::cout << "loop center: {";
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? "," : "") << c[i];
    std::cout << "}\n";
  }
  std::cout << "a_nuclear: " << (is_a_nuclear(q, max_n) ? "yes" : "no") << "\n";
  std::cout << "a_central: " << (is_a_central(q, max_n) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_congruence(const std::string& file, const std::string& partition,
                   const std::string& mode) {
  Quasigroup q = load(file);
  Partition p = Partition::parse(q.order(), partition);
  bool ok = congruence_check(q, p, parse_congruence_mode(mode));
  std::cout << mode << ": " << (ok ? "holds" : "fails") << "\n";
  return 0;
}

int cmd_inverse(const std::string& file, const std::string& family, const std::string& j,
                const std::string& p1, const std::string& p2, const std::string& p3,
                long r, long s, long t, long m) {
  Quasigroup q = load(file);
  unsigned n = q.order();

  // Detection families run without a witness.
  bool is_detect = family == "lip" || family == "rip" || family == "ip" || family == "ts" ||
                   ((family == "ci" || family == "wip") && j.empty());
  if (is_detect) {
    auto w = detect_special(q, parse_special_family(family));
    if (w) {
      std::cout << "detected: " << w->to_string() << "\n";
      return 0;
    }
    std::cout << "absent\n";
    return 0;
  }

  InverseWitness w;
  InverseFamily fam = parse_inverse_family(family);
  switch (fam) {
    case InverseFamily::lambda:
    case InverseFamily::rho:
    case InverseFamily::mu:
    case InverseFamily::abc:
      if (p1.empty() || p2.empty() || p3.empty())
        throw Error("family '" + family + "' needs --p1 --p2 --p3");
      w = InverseWitness::triple(fam, parse_perm_arg(n, p1), parse_perm_arg(n, p2),
                                 parse_perm_arg(n, p3));
      break;
    case InverseFamily::rst:
      if (j.empty()) throw Error("family 'rst' needs --J");
      w = InverseWitness::with_j(fam, parse_perm_arg(n, j), r, s, t);
      break;
    case InverseFamily::m_inverse:
      if (j.empty()) throw Error("family 'm' needs --J");
      w = InverseWitness::with_j(fam, parse_perm_arg(n, j), m);
      break;
    default:
      if (j.empty()) throw Error("family '" + family + "' needs --J");
      w = InverseWitness::with_j(fam, parse_perm_arg(n, j));
      break;
  }
  bool direct = check_witness(q, w);
  bool strophe = autostrophy_bridge(q, w);
  std::cout << "witness " << (direct ? "holds" : "fails") << "\n";
  if (direct != strophe)
    std::cout << "INTERNAL_INCONSISTENCY: autostrophy bridge disagrees\n";
  if (direct) {
    try {
      auto rep = nucleus_coincidence_check(q, w);
      for (const auto& line : rep.checked) std::cout << "  ok: " << line << "\n";
      for (const auto& line : rep.failed) std::cout << "  FAILED: " << line << "\n";
    } catch (const SearchBoundExceeded&) {
      std::cout << "  nucleus coincidence skipped (order exceeds the search bound)\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite quasigroup autotopy-nuclear structure"};
  app.require_subcommand(1);

  std::string file, sigma, alpha, beta, gamma, partition, mode, family, j, p1, p2, p3;
  long r = 0, s = 0, t = 0, m = 0;
  bool json = false, list = false;
  unsigned max_n = qg::kDefaultAutotopySearchBound;

  auto* validate = app.add_subcommand("validate", "check a Cayley table file");
  validate->add_option("file", file)->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "full structure report");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_flag("--json", json, "emit the report as JSON");
  analyze_cmd->add_option("--max-n", max_n, "autotopy search bound (default 8)");

  auto* parastrophe = app.add_subcommand("parastrophe", "print a parastrophe table");
  parastrophe->add_option("file", file)->required();
  parastrophe->add_option("--sigma", sigma, "e, 12, 13, 23, 123 or 132")->required();

  auto* isotope = app.add_subcommand("isotope", "apply an isotopy");
  isotope->add_option("file", file)->required();
  isotope->add_option("--alpha", alpha)->required();
  isotope->add_option("--beta", beta)->required();
  isotope->add_option("--gamma", gamma)->required();

  auto* autotopy_cmd = app.add_subcommand("autotopy", "autotopy group order and shape");
  autotopy_cmd->add_option("file", file)->required();
  autotopy_cmd->add_option("--max-n", max_n);
  autotopy_cmd->add_flag("--list", list, "print every autotopy triple");

  auto* nuclei_cmd = app.add_subcommand("nuclei", "A-nuclei, components, orbits, Garrison");
  nuclei_cmd->add_option("file", file)->required();
  nuclei_cmd->add_option("--max-n", max_n);

  auto* centers_cmd = app.add_subcommand("centers", "A-centers and verdicts");
  centers_cmd->add_option("file", file)->required();
  centers_cmd->add_option("--max-n", max_n);

  auto* congruence_cmd = app.add_subcommand("congruence", "test a partition");
  congruence_cmd->add_option("file", file)->required();
  congruence_cmd->add_option("--partition", partition, "blocks, e.g. \"0 1 | 2 4 | 3 5\"")
      ->required();
  congruence_cmd->add_option("--mode", mode,
                             "left_stable|right_stable|middle_stable|left_cancel|"
                             "right_cancel|middle_cancel|normal")
      ->required();

  auto* inverse_cmd = app.add_subcommand("inverse", "inverse-property check or detection");
  inverse_cmd->add_option("file", file)->required();
  inverse_cmd->add_option("--family", family,
                          "lambda|rho|mu|abc|rst|m|wip|ci|lip|rip|ip|ts")
      ->required();
  inverse_cmd->add_option("--J", j, "permutation, e.g. \"2,1,0\" or \"(0 1)\"");
  inverse_cmd->add_option("--p1", p1);
  inverse_cmd->add_option("--p2", p2);
  inverse_cmd->add_option("--p3", p3);
  inverse_cmd->add_option("--r", r);
  inverse_cmd->add_option("--s", s);
  inverse_cmd->add_option("--t", t);
  inverse_cmd->add_option("--m", m);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*analyze_cmd) return cmd_analyze(file, json, max_n);
    if (*parastrophe) return cmd_parastrophe(file, sigma);
    if (*isotope) return cmd_isotope(file, alpha, beta, gamma);
    if (*autotopy_cmd) return cmd_autotopy(file, max_n, list);
    if (*nuclei_cmd) return cmd_nuclei(file, max_n);
    if (*centers_cmd) return cmd_centers(file, max_n);
    if (*congruence_cmd) return cmd_congruence(file, partition, mode);
    if (*inverse_cmd) return cmd_inverse(file, family, j, p1, p2, p3, r, s, t, m);
  } catch (const qg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
