#ifndef LEAFSPEC_IO_HPP
#define LEAFSPEC_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"
#include "leafspec/catalog.hpp"

namespace leafspec {

// Insertion-ordered JSON keeps every payload byte-stable for a given input.
using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);  // ParseError on anything ill-formed

// Exact numbers travel as "p/q" strings.
std::string rational_str(const Rational& r);
Rational rational_from_json(const Json& j);

Json cyclotomic_json(const CyclotomicElement& x);
CyclotomicElement cyclotomic_from_json(const Json& j, unsigned conductor);

Json ratfunc_json(const RationalFunction<Rational>& f);
RationalFunction<Rational> ratfunc_from_json(const Json& j);

struct GroupDocument {
  unsigned conductor = 1;
  unsigned dim = 1;
  std::optional<unsigned> cap;
  std::vector<GroupElement> generators;
};

GroupDocument group_from_json(const Json& j);
HironakaData hironaka_from_json(const Json& j);

enum class InputKind { Group, Hironaka, RawSeries };

// Top-level keys decide: "generators", "hsop_degrees", or "numerator".
InputKind detect_input(const Json& j);

Json volume_report_json(const VolumeReport& report);
Json cm_report_json(const CMPoleReport& report);
Json weyl_rows_json(const std::vector<WeylRow>& rows);
Json entry_check_json(const EntryCheck& check);

}  // namespace leafspec

#endif
