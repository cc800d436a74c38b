#include "cglv/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

namespace cglv {

namespace {
constexpr char kMagic[4] = {'C', 'G', 'L', 'F'};
constexpr std::uint32_t kVersion = 1;
}  // namespace

void write_snapshot(const std::filesystem::path& path, const ComplexField& field) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_snapshot: cannot open " + path.string());
    os.write(kMagic, 4);
    const std::uint32_t version = kVersion;
    const std::uint32_t n = static_cast<std::uint32_t>(field.spec().resolution);
    const double L = field.spec().half_extent;
    os.write(reinterpret_cast<const char*>(&version), sizeof version);
    os.write(reinterpret_cast<const char*>(&n), sizeof n);
    os.write(reinterpret_cast<const char*>(&L), sizeof L);
    os.write(reinterpret_cast<const char*>(field.data()),
             static_cast<std::streamsize>(field.spec().size() * sizeof(Complex)));
    if (!os) throw std::runtime_error("write_snapshot: short write to " + path.string());
}

ComplexField read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_snapshot: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("read_snapshot: bad magic in " + path.string());
    std::uint32_t version = 0, n = 0;
    double L = 0.0;
    is.read(reinterpret_cast<char*>(&version), sizeof version);
    is.read(reinterpret_cast<char*>(&n), sizeof n);
    is.read(reinterpret_cast<char*>(&L), sizeof L);
    if (!is || version != kVersion)
        throw std::runtime_error("read_snapshot: unsupported version in " + path.string());
    if (n < 3 || !(L > 0.0)) throw std::runtime_error("read_snapshot: bad header in " + path.string());
    ComplexField field(GridSpec(L, static_cast<int>(n)));
    is.read(reinterpret_cast<char*>(field.data()),
            static_cast<std::streamsize>(field.spec().size() * sizeof(Complex)));
    if (!is) throw std::runtime_error("read_snapshot: truncated data in " + path.string());
    return field;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_field_csv(const std::filesystem::path& path, const ComplexField& field) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_field_csv: cannot open " + path.string());
    os << "x,y,re,im\n";
    const int n = field.spec().resolution;
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix) {
            const Vec2 p = field.spec().node(ix, iy);
            const Complex& v = field.at(ix, iy);
            os << format_double(p.x) << ',' << format_double(p.y) << ','
               << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
        }
}

}  // namespace cglv
