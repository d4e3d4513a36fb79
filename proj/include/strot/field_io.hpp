#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "strot/errors.hpp"
#include "strot/field.hpp"

namespace strot::io {

// Binary field format, little-endian:
//   magic "STRF" | version u32 | n_time u32 | n_space u32 | n_components u32
//   | box_len f64 | period f64 | domain u8 (0 = physical, 1 = spectral)
// followed by interleaved (re, im) float64 pairs in index order
// (k/t, x1, x2, x3, component).

inline constexpr std::uint32_t kFormatVersion = 1;

namespace detail {

template <typename T>
void write_pod(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void read_pod(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw IoError("field file truncated");
}

inline void write_header(std::ostream& os, const GridSpec& g, int ncomp, std::uint8_t domain) {
    os.write("STRF", 4);
    write_pod(os, kFormatVersion);
    write_pod(os, static_cast<std::uint32_t>(g.n_time));
    write_pod(os, static_cast<std::uint32_t>(g.n_space));
    write_pod(os, static_cast<std::uint32_t>(ncomp));
    write_pod(os, g.box_len);
    write_pod(os, g.period);
    write_pod(os, domain);
}

struct Header {
    GridSpec grid;
    int n_components;
    std::uint8_t domain;
};

inline Header read_header(std::istream& is, const std::string& path) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "STRF", 4) != 0)
        throw IoError("not a STRF field file: " + path);
    std::uint32_t version, n_time, n_space, ncomp;
    read_pod(is, version);
    if (version != kFormatVersion)
        throw IoError("unsupported STRF version in " + path);
    read_pod(is, n_time);
    read_pod(is, n_space);
    read_pod(is, ncomp);
    Header h;
    read_pod(is, h.grid.box_len);
    read_pod(is, h.grid.period);
    read_pod(is, h.domain);
    h.grid.n_time = static_cast<int>(n_time);
    h.grid.n_space = static_cast<int>(n_space);
    h.n_components = static_cast<int>(ncomp);
    h.grid.validate();
    if (h.domain > 1) throw IoError("bad domain flag in " + path);
    return h;
}

inline void write_samples(std::ostream& os, const std::vector<cdouble>& data) {
    for (const auto& z : data) {
        write_pod(os, z.real());
        write_pod(os, z.imag());
    }
}

inline void read_samples(std::istream& is, std::vector<cdouble>& data) {
    for (auto& z : data) {
        double re, im;
        read_pod(is, re);
        read_pod(is, im);
        z = {re, im};
    }
}

}  // namespace detail

inline void write_field(const std::string& path, const PhysicalField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    detail::write_header(os, f.grid(), f.n_components(), 0);
    detail::write_samples(os, f.data());
    if (!os) throw IoError("write failed: " + path);
}

inline void write_field(const std::string& path, const SpectralField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    detail::write_header(os, f.grid(), f.n_components(), 1);
    detail::write_samples(os, f.data());
    if (!os) throw IoError("write failed: " + path);
}

inline std::uint8_t peek_domain(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    return detail::read_header(is, path).domain;
}

inline PhysicalField read_physical_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    auto h = detail::read_header(is, path);
    if (h.domain != 0) throw IoError("expected a physical-domain field: " + path);
    PhysicalField f(h.grid, h.n_components);
    detail::read_samples(is, f.data());
    return f;
}

inline SpectralField read_spectral_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open: " + path);
    auto h = detail::read_header(is, path);
    if (h.domain != 1) throw IoError("expected a spectral-domain field: " + path);
    SpectralField f(h.grid, h.n_components);
    detail::read_samples(is, f.data());
    return f;
}

/// Optional JSON sidecar with grid metadata next to a field file.
inline void write_sidecar(const std::string& field_path, const GridSpec& g, int ncomp,
                          bool spectral, const nlohmann::json& extra = {}) {
    nlohmann::json j{{"format", "STRF"},
                     {"version", kFormatVersion},
                     {"n_time", g.n_time},
                     {"n_space", g.n_space},
                     {"n_components", ncomp},
                     {"box_len", g.box_len},
                     {"period", g.period},
                     {"domain", spectral ? "spectral" : "physical"}};
    if (!extra.is_null() && !extra.empty()) j["meta"] = extra;
    std::ofstream os(field_path + ".json");
    if (!os) throw IoError("cannot open sidecar for writing: " + field_path + ".json");
    os << j.dump(2) << "\n";
}

}  // namespace strot::io
