#include "snlb/grid_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "snlb/report.hpp"

namespace snlb {

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

}  // namespace

void write_raw(const std::filesystem::path& path, const GridFunction& f) {
    if (!f.is_real()) throw std::invalid_argument("write_raw: only real fields are serialized");
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_raw: cannot open " + path.string());
    os.write("SNLB", 4);
    put_u32(os, 1u);
    put_u32(os, static_cast<std::uint32_t>(f.spec().dim));
    for (int a = 0; a < 3; ++a) put_u32(os, static_cast<std::uint32_t>(f.spec().size[a]));
    put_f64(os, f.spec().length);
    for (const cplx& v : f.samples()) put_f64(os, v.real());
}

GridFunction read_raw(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_raw: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (std::string(magic, 4) != "SNLB") throw std::runtime_error("read_raw: bad magic");
    const std::uint32_t version = get_u32(is);
    if (version != 1) throw std::runtime_error("read_raw: unsupported version");
    GridSpec spec;
    spec.dim = static_cast<int>(get_u32(is));
    for (int a = 0; a < 3; ++a) spec.size[a] = get_u32(is);
    spec.length = get_f64(is);
    spec.validate();
    std::vector<double> samples(spec.total());
    for (double& v : samples) v = get_f64(is);
    if (!is) throw std::runtime_error("read_raw: truncated file");
    return GridFunction(spec, samples);
}

void write_csv(const std::filesystem::path& path, const GridFunction& f) {
    if (!f.is_real()) throw std::invalid_argument("write_csv: only real fields are serialized");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_csv: cannot open " + path.string());
    const GridSpec& s = f.spec();
    const char* headers[3] = {"i1", "i2", "i3"};
    for (int a = 0; a < s.dim; ++a) os << headers[a] << ",";
    os << "value\n";
    for (std::size_t i3 = 0; i3 < s.size[2]; ++i3)
        for (std::size_t i2 = 0; i2 < s.size[1]; ++i2)
            for (std::size_t i1 = 0; i1 < s.size[0]; ++i1) {
                os << i1;
                if (s.dim > 1) os << "," << i2;
                if (s.dim > 2) os << "," << i3;
                os << "," << format_g17(f[s.flat(i1, i2, i3)].real()) << "\n";
            }
}

GridFunction read_grid_csv(const std::filesystem::path& path, const GridSpec& spec) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_grid_csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("read_grid_csv: empty file");
    std::vector<double> samples(spec.total(), 0.0);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != static_cast<std::size_t>(spec.dim) + 1)
            throw std::runtime_error("read_grid_csv: wrong column count");
        std::size_t idx[3] = {0, 0, 0};
        for (int a = 0; a < spec.dim; ++a) idx[a] = std::stoull(cells[a]);
        samples[spec.flat(idx[0], idx[1], idx[2])] = std::stod(cells.back());
    }
    return GridFunction(spec, samples);
}

void write_columns_csv(const std::filesystem::path& path,
                       const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& columns) {
    if (names.size() != columns.size())
        throw std::invalid_argument("write_columns_csv: name/column count mismatch");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_columns_csv: cannot open " + path.string());
    std::size_t rows = 0;
    for (std::size_t c = 0; c < names.size(); ++c) {
        os << names[c] << (c + 1 < names.size() ? ',' : '\n');
        rows = std::max(rows, columns[c].size());
    }
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (r < columns[c].size()) os << format_g17(columns[c][r]);
            os << (c + 1 < columns.size() ? ',' : '\n');
        }
}

std::pair<std::vector<std::string>, std::vector<std::vector<double>>>
read_columns_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_columns_csv: cannot open " + path.string());
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("read_columns_csv: empty file");
    std::vector<std::string> names;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) names.push_back(cell);
    }
    std::vector<std::vector<double>> columns(names.size());
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= columns.size()) throw std::runtime_error("read_columns_csv: extra cell");
            if (!cell.empty()) columns[c].push_back(std::stod(cell));
            ++c;
        }
    }
    return {names, columns};
}

}  // namespace snlb
