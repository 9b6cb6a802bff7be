#include "qg/report.hpp"

#include <sstream>

#include <json.hpp>

#include "qg/error.hpp"

namespace qg {

AnalysisReport analyze(const Quasigroup& q, unsigned max_n) {
  AnalysisReport r;
  r.order = q.order();
  LocalMaps lm = q.local_maps();
  r.left_loop = lm.left_loop;
  r.right_loop = lm.right_loop;
  r.unipotent = lm.unipotent;
  r.idempotent = lm.idempotent;
  r.left_identity = q.left_identity();
  r.right_identity = q.right_identity();
  r.identity = q.identity();
  r.loop = r.identity.has_value();
  r.commutative = q.is_commutative();
  r.associative = q.is_associative();

  MultiplicationGroups mg = multiplication_groups(q);
  auto record = [&](const char* name, const std::optional<PermGroup>& g) {
    if (g) r.multiplication_group_orders[name] = g->order();
  };
  record("LM", mg.lm);
  record("RM", mg.rm);
  record("PM", mg.pm);
  record("M", mg.m);
  record("FM", mg.fm);

  r.verdicts.medial = identity_check(q, IdentityKind::medial);
  r.verdicts.paramedial = identity_check(q, IdentityKind::paramedial);
  r.verdicts.group_isotope = is_group_isotope(q);
  r.verdicts.abelian_group_isotope = is_abelian_group_isotope(q);

  if (q.order() > max_n) {
    r.autotopy_section = false;
    return r;
  }
  r.autotopy_section = true;

  AutotopyGroup avt = autotopy_group(q, max_n);
  r.avt_order = avt.order();
  r.avt_fingerprint = avt.fingerprint().to_string();
  PermGroup aut = automorphism_group(q, max_n);
  r.aut_order = aut.order();
  r.aut_fingerprint = aut.fingerprint().to_string();

  for (NucleusSide side : {NucleusSide::left, NucleusSide::right, NucleusSide::middle}) {
    SideReport sr;
    sr.side = side_name(side);
    ANucleus nuc = a_nucleus(avt, side);
    sr.nucleus_order = nuc.order();
    auto [p1, p2] = nuc.component_positions();
    for (unsigned pos : {p1, p2}) {
      PermGroup comp = nuc.component(pos);
      std::string key = std::to_string(pos);
      for (const Perm& p : comp.elements())
        sr.components[key].push_back(p.cycle_string());
      sr.orbits[key] = comp.orbits().to_string();
    }
    sr.garrison = garrison_nucleus(q, side);
    sr.center_order = a_center(avt, side).order();
    r.sides.push_back(std::move(sr));
  }

  r.verdicts.a_nuclear = is_a_nuclear(q, max_n);
  r.verdicts.a_central = is_a_central(q, max_n);
  if (r.verdicts.a_nuclear != r.verdicts.group_isotope)
    r.verdicts.inconsistencies.push_back("a_nuclear vs group_isotope");
  if (r.verdicts.a_central != r.verdicts.abelian_group_isotope)
    r.verdicts.inconsistencies.push_back("a_central vs abelian_group_isotope");
  if (r.verdicts.medial && !r.verdicts.abelian_group_isotope)
    r.verdicts.inconsistencies.push_back("medial vs abelian_group_isotope");
  if (r.verdicts.paramedial && !r.verdicts.abelian_group_isotope)
    r.verdicts.inconsistencies.push_back("paramedial vs abelian_group_isotope");

  NormalityReport nr = normality_report(q, max_n);
  r.congruences = nr.equivalences;
  r.garrison_cosets = nr.garrison;

  for (SpecialFamily fam : {SpecialFamily::lip, SpecialFamily::rip, SpecialFamily::ip,
                            SpecialFamily::wip, SpecialFamily::ci, SpecialFamily::ts}) {
    std::string key = special_family_name(fam);
    try {
      auto w = detect_special(q, fam);
      r.inverse_findings[key] = w ? w->to_string() : "absent";
    } catch (const NotALoop&) {
      r.inverse_findings[key] = "n/a (not a loop)";
    }
  }
  return r;
}

namespace {

std::string flag(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "order: " << r.order << "\n";
  os << "loop: " << flag(r.loop);
  if (r.identity) os << " (identity " << *r.identity << ")";
  os << "  left loop: " << flag(r.left_loop) << "  right loop: " << flag(r.right_loop)
     << "\n";
  os << "unipotent: " << flag(r.unipotent) << "  idempotent: " << flag(r.idempotent)
     << "  commutative: " << flag(r.commutative) << "  associative: " << flag(r.associative)
     << "\n";
  os << "multiplication groups:";
  for (const auto& [name, ord] : r.multiplication_group_orders)
    os << " |" << name << "|=" << ord;
  os << "\n";
  if (!r.autotopy_section) {
    os << "autotopy analysis skipped (order exceeds --max-n)\n";
    return os.str();
  }
  os << "|Avt| = " << r.avt_order << "  (" << r.avt_fingerprint << ")\n";
  os << "|Aut| = " << r.aut_order << "  (" << r.aut_fingerprint << ")\n";
  for (const SideReport& sr : r.sides) {
    os << sr.side << " A-nucleus: order " << sr.nucleus_order << "\n";
    for (const auto& [pos, perms] : sr.components) {
      os << "  component " << pos << ": {";
      for (std::size_t i = 0; i < perms.size(); ++i)
        os << (i ? ", " : "") << perms[i];
      os << "}  orbits: " << sr.orbits.at(pos) << "\n";
    }
    os << "  Garrison nucleus: {";
    for (std::size_t i = 0; i < sr.garrison.size(); ++i)
      os << (i ? ", " : "") << sr.garrison[i];
    os << "}\n";
    os << "  A-center order: " << sr.center_order << "\n";
  }
  os << "verdicts: a_nuclear=" << flag(r.verdicts.a_nuclear)
     << " group_isotope=" << flag(r.verdicts.group_isotope)
     << " a_central=" << flag(r.verdicts.a_central)
     << " abelian_group_isotope=" << flag(r.verdicts.abelian_group_isotope)
     << " medial=" << flag(r.verdicts.medial)
     << " paramedial=" << flag(r.verdicts.paramedial) << "\n";
  for (const std::string& s : r.verdicts.inconsistencies)
    os << "INTERNAL_INCONSISTENCY: " << s << "\n";
  os << "nucleus congruences:\n";
  for (const auto& ce : r.congruences) {
    os << "  " << ce.label << ": " << ce.partition.to_string() << "  normal=" << flag(ce.normal);
    os << " [";
    bool first = true;
    for (const auto& [mode, ok] : ce.modes) {
      if (mode == "normal") continue;
      os << (first ? "" : " ") << mode << "=" << flag(ok);
      first = false;
    }
    os << "]\n";
  }
  for (const auto& gc : r.garrison_cosets) {
    os << "  Garrison " << gc.side << " nucleus {";
    for (std::size_t i = 0; i < gc.nucleus.size(); ++i)
      os << (i ? "," : "") << gc.nucleus[i];
    os << "}: two-sided cosets " << flag(gc.two_sided)
       << ", normal congruence " << flag(gc.normal_congruence);
    if (gc.has_witness) {
      os << "  (witness a=" << gc.witness << ": a*N={";
      for (std::size_t i = 0; i < gc.witness_a_n.size(); ++i)
        os << (i ? "," : "") << gc.witness_a_n[i];
      os << "} N*a={";
      for (std::size_t i = 0; i < gc.witness_n_a.size(); ++i)
        os << (i ? "," : "") << gc.witness_n_a[i];
      os << "})";
    }
    os << "\n";
  }
  os << "inverse properties:\n";
  for (const auto& [family, finding] : r.inverse_findings)
    os << "  " << family << ": " << finding << "\n";
  return os.str();
}

std::string report_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["flags"] = {{"loop", r.loop},
                {"left_loop", r.left_loop},
                {"right_loop", r.right_loop},
                {"unipotent", r.unipotent},
                {"idempotent", r.idempotent},
                {"commutative", r.commutative},
                {"associative", r.associative}};
  if (r.identity) j["identity"] = *r.identity;
  if (r.left_identity) j["left_identity"] = *r.left_identity;
  if (r.right_identity) j["right_identity"] = *r.right_identity;
  j["multiplication_group_orders"] = r.multiplication_group_orders;
  j["autotopy_section"] = r.autotopy_section;
  if (r.autotopy_section) {
    j["avt"] = {{"order", r.avt_order}, {"fingerprint", r.avt_fingerprint}};
    j["aut"] = {{"order", r.aut_order}, {"fingerprint", r.aut_fingerprint}};
    nlohmann::ordered_json sides = nlohmann::ordered_json::array();
    for (const SideReport& sr : r.sides) {
      nlohmann::ordered_json js;
      js["side"] = sr.side;
      js["nucleus_order"] = sr.nucleus_order;
      js["components"] = sr.components;
      js["orbits"] = sr.orbits;
      js["garrison"] = sr.garrison;
      js["center_order"] = sr.center_order;
      sides.push_back(std::move(js));
    }
    j["nuclei"] = std::move(sides);
    j["verdicts"] = {{"a_nuclear", r.verdicts.a_nuclear},
                     {"group_isotope", r.verdicts.group_isotope},
                     {"a_central", r.verdicts.a_central},
                     {"abelian_group_isotope", r.verdicts.abelian_group_isotope},
                     {"medial", r.verdicts.medial},
                     {"paramedial", r.verdicts.paramedial}};
    j["inconsistencies"] = r.verdicts.inconsistencies;
    nlohmann::ordered_json congs = nlohmann::ordered_json::array();
    for (const auto& ce : r.congruences) {
      nlohmann::ordered_json jc;
      jc["label"] = ce.label;
      jc["partition"] = ce.partition.to_string();
      jc["modes"] = ce.modes;
      jc["normal"] = ce.normal;
      congs.push_back(std::move(jc));
    }
    j["nucleus_congruences"] = std::move(congs);
    nlohmann::ordered_json garr = nlohmann::ordered_json::array();
    for (const auto& gc : r.garrison_cosets) {
      nlohmann::ordered_json jg;
      jg["side"] = gc.side;
      jg["nucleus"] = gc.nucleus;
      jg["left_cosets_partition"] = gc.left_cosets_partition;
      jg["right_cosets_partition"] = gc.right_cosets_partition;
      jg["two_sided"] = gc.two_sided;
      jg["normal_congruence"] = gc.normal_congruence;
      if (gc.has_witness) {
        jg["witness"] = {{"a", gc.witness},
                         {"a_n", gc.witness_a_n},
                         {"n_a", gc.witness_n_a}};
      }
      garr.push_back(std::move(jg));
    }
    j["garrison_cosets"] = std::move(garr);
    j["inverse_findings"] = r.inverse_findings;
  }
  return j.dump(2);
}

}  // namespace qg
