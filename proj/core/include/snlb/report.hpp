#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace snlb {

/// One verified inequality: pass iff lhs <= constant * rhs (+ slack).
struct CheckReport {
    std::string case_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 1.0;
    bool pass = false;
};

/// A measured two-sided equivalence. When the source gives explicit
/// bracket constants they land in [c_low, c_high]; otherwise the bracket
/// is empirical and `empirical` is set.
struct EquivalenceReport {
    std::string case_id;
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;  // lhs / rhs when rhs > 0
    double c_low = 0.0;
    double c_high = 0.0;
    bool empirical = false;
    bool pass = false;
    bool stable = true;  // ratio drift under grid refinement within budget

    static EquivalenceReport make(std::string case_id, std::string name, double lhs, double rhs,
                                  double c_low, double c_high, bool empirical, double slack);
};

/// 17 significant digits, locale-independent.
std::string format_g17(double v);

/// Reports sorted by case id before writing; byte-identical for identical
/// inputs.
void write_check_csv(const std::filesystem::path& path, std::span<const CheckReport> reports);
void write_equivalence_csv(const std::filesystem::path& path,
                           std::span<const EquivalenceReport> reports);

std::vector<EquivalenceReport> read_equivalence_csv(const std::filesystem::path& path);

}  // namespace snlb
