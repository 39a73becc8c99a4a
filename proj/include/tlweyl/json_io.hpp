#ifndef TLWEYL_JSON_IO_HPP
#define TLWEYL_JSON_IO_HPP

#include <string>
#include <vector>

#include "tlweyl/categorify.hpp"

namespace tlweyl {

// Byte-stable JSON for the annihilator table (2-space indent, sorted keys,
// trailing newline).  The committed golden file is produced by this function.
std::string table_to_json(const std::vector<TableRecord>& records, int n);

struct ParsedTable {
  int rank = 0;
  std::vector<TableRecord> records;
};
ParsedTable table_from_json(const std::string& text);

}  // namespace tlweyl

#endif
