#include "snlb/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace snlb {

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

EquivalenceReport EquivalenceReport::make(std::string case_id, std::string name, double lhs,
                                          double rhs, double c_low, double c_high, bool empirical,
                                          double slack) {
    EquivalenceReport r;
    r.case_id = std::move(case_id);
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.c_low = c_low;
    r.c_high = c_high;
    r.empirical = empirical;
    if (rhs > 0.0) {
        r.ratio = lhs / rhs;
        r.pass = r.ratio >= c_low / (1.0 + slack) && r.ratio <= c_high * (1.0 + slack);
    } else {
        r.ratio = 0.0;
        r.pass = lhs <= slack;  // both sides vanish together
    }
    return r;
}

void write_check_csv(const std::filesystem::path& path, std::span<const CheckReport> reports) {
    std::vector<CheckReport> rows(reports.begin(), reports.end());
    std::sort(rows.begin(), rows.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.case_id < b.case_id; });
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_check_csv: cannot open " + path.string());
    os << "case_id,lhs,rhs,constant,pass\n";
    for (const CheckReport& r : rows)
        os << r.case_id << ',' << format_g17(r.lhs) << ',' << format_g17(r.rhs) << ','
           << format_g17(r.constant) << ',' << (r.pass ? 1 : 0) << '\n';
}

void write_equivalence_csv(const std::filesystem::path& path,
                           std::span<const EquivalenceReport> reports) {
    std::vector<EquivalenceReport> rows(reports.begin(), reports.end());
    std::sort(rows.begin(), rows.end(), [](const EquivalenceReport& a, const EquivalenceReport& b) {
        return std::tie(a.case_id, a.name) < std::tie(b.case_id, b.name);
    });
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_equivalence_csv: cannot open " + path.string());
    os << "case_id,name,lhs,rhs,ratio,c_low,c_high,bracket,pass,stable\n";
    for (const EquivalenceReport& r : rows)
        os << r.case_id << ',' << r.name << ',' << format_g17(r.lhs) << ',' << format_g17(r.rhs)
           << ',' << format_g17(r.ratio) << ',' << format_g17(r.c_low) << ','
           << format_g17(r.c_high) << ',' << (r.empirical ? "empirical" : "paper") << ','
           << (r.pass ? 1 : 0) << ',' << (r.stable ? 1 : 0) << '\n';
}

std::vector<EquivalenceReport> read_equivalence_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_equivalence_csv: cannot open " + path.string());
    std::string line;
    std::getline(is, line);
    std::vector<EquivalenceReport> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 10) throw std::runtime_error("read_equivalence_csv: bad row");
        EquivalenceReport r;
        r.case_id = cells[0];
        r.name = cells[1];
        r.lhs = std::stod(cells[2]);
        r.rhs = std::stod(cells[3]);
        r.ratio = std::stod(cells[4]);
        r.c_low = std::stod(cells[5]);
        r.c_high = std::stod(cells[6]);
        r.empirical = cells[7] == "empirical";
        r.pass = cells[8] == "1";
        r.stable = cells[9] == "1";
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace snlb
