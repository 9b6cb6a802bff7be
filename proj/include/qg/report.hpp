#ifndef QG_REPORT_HPP
#define QG_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qg/autotopy.hpp"
#include "qg/centers.hpp"
#include "qg/congruence.hpp"
#include "qg/inverse.hpp"
#include "qg/nuclei.hpp"
#include "qg/quasigroup.hpp"

namespace qg {

struct SideReport {
  std::string side;
  std::size_t nucleus_order = 0;
  // position label ("1","2","3") -> component permutations (image lists)
  std::map<std::string, std::vector<std::string>> components;
  std::map<std::string, std::string> orbits;  // position -> partition text
  std::vector<unsigned> garrison;
  std::size_t center_order = 0;
};

struct Verdicts {
  bool a_nuclear = false;
  bool group_isotope = false;
  bool a_central = false;
  bool abelian_group_isotope = false;
  bool medial = false;
  bool paramedial = false;
  // Theorem-equivalent verdict pairs that disagree ("a_nuclear vs
  // group_isotope", ...); any entry is an internal bug.
  std::vector<std::string> inconsistencies;
};

struct AnalysisReport {
  unsigned order = 0;
  bool left_loop = false, right_loop = false, loop = false;
  bool unipotent = false, idempotent = false, commutative = false, associative = false;
  std::optional<unsigned> left_identity, right_identity, identity;

  std::map<std::string, std::size_t> multiplication_group_orders;  // "LM".."FM"

  bool autotopy_section = false;  // false when order exceeded the bound
  std::size_t avt_order = 0;
  std::string avt_fingerprint;
  std::string aut_fingerprint;
  std::size_t aut_order = 0;
  std::vector<SideReport> sides;

  Verdicts verdicts;

  std::vector<NucleusEquivalenceReport> congruences;
  std::vector<GarrisonCosetReport> garrison_cosets;

  std::map<std::string, std::string> inverse_findings;  // family -> witness/"absent"
};

AnalysisReport analyze(const Quasigroup& q, unsigned max_n = kDefaultAutotopySearchBound);

std::string report_text(const AnalysisReport& r);
std::string report_json(const AnalysisReport& r);  // stable key order

}  // namespace qg

#endif
