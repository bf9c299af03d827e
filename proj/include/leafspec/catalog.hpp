#ifndef LEAFSPEC_CATALOG_HPP
#define LEAFSPEC_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "leafspec/spectrum.hpp"

namespace leafspec {

// A worked example: a leaf space of a known foliation of S^n, carrying a
// finite-group model, a Hironaka decomposition, or both, together with the
// dimension and volume ratio it must produce.
struct CatalogEntry {
  std::string name;
  unsigned ambient_n = 1;  // the foliated sphere S^n
  std::optional<HironakaData> hironaka;
  bool has_group = false;
  std::vector<GroupElement> generators;
  unsigned expected_m = 0;
  Rational expected_ratio;
};

// The fixed demonstration set, in a stable order.  get_entry also accepts
// other parameters for the parametrized families.
std::vector<std::string> list_entries();

// Parses names like "B2", "trivial(2)", "clifford(4,2)"; UnknownEntry for
// anything else (including parameters outside a family's range).
CatalogEntry get_entry(const std::string& name);

// Hironaka data when present, otherwise the Molien series of the group.
HilbertSeries entry_series(const CatalogEntry& entry);

std::optional<FiniteMatrixGroup> entry_group(const CatalogEntry& entry);

struct EntryCheck {
  std::string name;
  unsigned m = 0;
  Rational ratio;
  bool ratio_ok = false;        // volume_ratio returned the expected (m, ratio)
  bool consistency_ok = false;  // group and Hironaka series agree (trivially true with one source)
  bool group_order_ok = false;  // finite group: ratio = 1/|G|
  bool divisibility_ok = false; // ratio denominator divides prod d_i (or |G|)
  bool cm_ok = false;           // pole constraints hold
  bool pass = false;
  std::string detail;           // first failure, human-readable
};

EntryCheck check_entry(const CatalogEntry& entry);

// Every entry of list_entries, fanned out across workers; the result order
// matches list_entries regardless of scheduling.
std::vector<EntryCheck> verify_all();

}  // namespace leafspec

#endif
