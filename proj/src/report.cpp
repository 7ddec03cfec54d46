#include "toricmorse/report.hpp"

#include <ostream>
#include <sstream>

namespace toricmorse {

const char* const kCsvHeader =
    "variety,q,k,j,kind,measured,bound_num,bound_den,margin_num,margin_den,verdict";

std::string toCsvLine(const CsvRow& row) {
    std::ostringstream out;
    out << row.variety << ',' << row.q << ',' << row.k << ',' << row.j << ',' << row.kind << ','
        << row.measured.str() << ',' << ratNumerator(row.bound).str() << ','
        << ratDenominator(row.bound).str() << ',' << ratNumerator(row.margin).str() << ','
        << ratDenominator(row.margin).str() << ',' << row.verdict;
    return out.str();
}

std::vector<CsvRow> toCsvRows(const VerificationReport& report) {
    std::vector<CsvRow> out;
    out.reserve(report.rows.size());
    const std::string verdict = toString(report.verdict);
    for (const BoundRow& row : report.rows) {
        CsvRow csv;
        csv.variety = report.variety;
        csv.q = std::to_string(report.q);
        csv.k = std::to_string(row.k);
        if (row.j) csv.j = std::to_string(*row.j);
        csv.kind = toString(report.kind);
        csv.measured = Int(row.measured);
        csv.bound = row.bound;
        csv.margin = row.margin();
        csv.verdict = verdict;
        out.push_back(std::move(csv));
    }
    return out;
}

CsvRow toCsvRow(const std::string& variety, const SubadditivityCheck& check, int drawIndex) {
    CsvRow csv;
    csv.variety = variety;
    csv.q = std::to_string(check.q);
    csv.k = std::to_string(drawIndex);
    csv.j = std::to_string(check.ray);
    csv.kind = "subadditivity";
    csv.measured = Int(check.chiTotal);
    csv.bound = Rat(check.chiSub) + Rat(check.chiRestriction);
    csv.margin = csv.bound - Rat(csv.measured);
    csv.verdict = check.holds ? "PASS" : "FAIL";
    return csv;
}

CsvRow parseCsvLine(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (line.size() >= 1 && line.back() == ',') fields.push_back("");
    if (fields.size() != 11) throw std::invalid_argument("CSV row does not have 11 fields: " + line);
    CsvRow row;
    row.variety = fields[0];
    row.q = fields[1];
    row.k = fields[2];
    row.j = fields[3];
    row.kind = fields[4];
    row.measured = Int(fields[5]);
    row.bound = Rat(Int(fields[6]), Int(fields[7]));
    row.margin = Rat(Int(fields[8]), Int(fields[9]));
    row.verdict = fields[10];
    return row;
}

void writeCsv(std::ostream& out, const std::vector<CsvRow>& rows) {
    out << kCsvHeader << '\n';
    for (const CsvRow& row : rows) out << toCsvLine(row) << '\n';
}

}  // namespace toricmorse
