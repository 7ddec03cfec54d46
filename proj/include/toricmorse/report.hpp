#pragma once

#include "toricmorse/bounds.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace toricmorse {

/*
 * CSV emission. Fixed column set
 *   variety,q,k,j,kind,measured,bound_num,bound_den,margin_num,margin_den,verdict
 * with rationals split into canonical numerator/denominator columns (no
 * floats anywhere). Rows carry the verdict of their report group, INFO for
 * purely informational rows. Output is byte-stable: fixed ordering, LF line
 * endings, no padding.
 */
struct CsvRow {
    std::string variety;
    std::string q;  // empty when not applicable
    std::string k;
    std::string j;
    std::string kind;
    Int measured = 0;
    Rat bound = 0;
    Rat margin = 0;
    std::string verdict;
};

extern const char* const kCsvHeader;

std::string toCsvLine(const CsvRow& row);

std::vector<CsvRow> toCsvRows(const VerificationReport& report);
CsvRow toCsvRow(const std::string& variety, const SubadditivityCheck& check, int drawIndex);

/// Parses one CSV line back into a row; inverse of toCsvLine.
CsvRow parseCsvLine(const std::string& line);

void writeCsv(std::ostream& out, const std::vector<CsvRow>& rows);

}  // namespace toricmorse
