#ifndef MME_IO_HPP
#define MME_IO_HPP

#include <string>

#include "mme/multipoly.hpp"

namespace mme {

/// A parsed instance file: the ring and the coefficient vector.
struct Instance {
    MultiPoly poly;

    bool is_ext() const { return poly.is_ext(); }
    Natural ring_r() const {
        return is_ext() ? poly.ext_ring()->base()->r() : poly.modulus()->r();
    }
    u32 ring_s() const { return is_ext() ? poly.ext_ring()->base()->s() : poly.modulus()->s(); }
};

/// A parsed points file, element encoding matching the instance ring.
struct PointSet {
    std::vector<ModPoint> mod;
    std::vector<ExtPoint> ext;
    bool is_ext = false;
    size_t size() const { return is_ext ? ext.size() : mod.size(); }
};

// JSON schemas (schema_version "1"); all residues are decimal strings since
// r^s and r' exceed any fixed width. Parse errors throw UsageError.
Instance parse_instance(const std::string& json_text);
std::string emit_instance(const Instance& inst);

PointSet parse_points(const std::string& json_text, const Instance& inst);
std::string emit_points(const PointSet& pts, const Instance& inst);

std::string emit_values(const std::vector<Natural>& values);
std::string emit_values_ext(const std::vector<ExtElem>& values);

/// Deterministic instance/point generation (byte-identical per seed).
Instance gen_instance(u64 seed, const Natural& r, u32 s, u32 m, u32 d,
                      const std::vector<Natural>* ext_E);
PointSet gen_points(u64 seed, const Instance& inst, size_t n);

/// Fixed bench CSV schema.
struct BenchRow {
    std::string algo;
    Natural r;
    u32 s = 1;
    u32 e = 1;
    u32 m = 0, d = 1;
    u64 n_points = 0;
    u64 wall_time_ns = 0;
    u64 per_point_ns = 0;
    bool checked = false;
};
extern const char* kBenchCsvHeader;  // algo,r,s,e,m,d,N,wall_time_ns,per_point_ns,checked
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace mme

#endif
