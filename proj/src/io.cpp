#include "mme/io.hpp"

#include <json.hpp>

#include "mme/rng.hpp"

namespace mme {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw UsageError("invalid JSON");
    return j;
}

Natural parse_residue(const json& j, const Natural& bound, const char* what) {
    if (!j.is_string()) throw UsageError(std::string(what) + ": residues must be decimal strings");
    Natural v(j.get<std::string>());
    if (!(v < bound)) throw UsageError(std::string(what) + ": entry " + v.to_string() +
                                       " not reduced below " + bound.to_string());
    return v;
}

ExtElem parse_ext_elem(const json& j, const ExtRingCtx& ring, const char* what) {
    if (!j.is_array() || j.size() != ring.degree())
        throw UsageError(std::string(what) + ": extension elements must be arrays of e residues");
    ExtElem x = ring.zero();
    for (u32 i = 0; i < ring.degree(); ++i) x.c[i] = parse_residue(j[i], ring.base()->n(), what);
    return x;
}

json emit_ext_elem(const ExtElem& x) {
    json j = json::array();
    for (const auto& c : x.c) j.push_back(c.to_string());
    return j;
}

u32 get_u32(const json& j, const char* key, u32 dflt, bool required) {
    if (!j.contains(key)) {
        if (required) throw UsageError(std::string("missing field '") + key + "'");
        return dflt;
    }
    if (!j[key].is_number_unsigned()) throw UsageError(std::string("field '") + key + "' must be a nonnegative integer");
    return j[key].get<u32>();
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
    json j = parse_json(json_text);
    if (!j.is_object()) throw UsageError("instance: top level must be an object");
    if (!j.contains("schema_version") || j["schema_version"] != "1")
        throw UsageError("instance: schema_version must be \"1\"");
    if (!j.contains("r") || !j["r"].is_string()) throw UsageError("instance: r must be a decimal string");
    Natural r(j["r"].get<std::string>());
    if (r < Natural(2)) throw UsageError("instance: r must be >= 2");
    u32 s = get_u32(j, "s", 1, false);
    u32 m = get_u32(j, "m", 0, true);
    u32 d = get_u32(j, "d", 0, true);
    if (d < 1) throw UsageError("instance: d must be >= 1");

    Instance inst;
    size_t want = checked_coeff_count(d, m);
    if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].size() != want)
        throw UsageError("instance: coeffs must be an array of exactly d^m entries");

    if (j.contains("ext")) {
        if (s != 1) throw UsageError("instance: extension rings use s = 1 (the base ring is Z/r)");
        const json& je = j["ext"];
        u32 e = get_u32(je, "e", 0, true);
        if (e < 1) throw UsageError("instance: ext.e must be >= 1");
        if (!je.contains("E") || !je["E"].is_array() || je["E"].size() != e + 1)
            throw UsageError("instance: ext.E must have e+1 coefficients");
        auto base = make_modulus(r, 1);
        std::vector<Natural> E;
        for (const auto& c : je["E"]) E.push_back(parse_residue(c, base->n(), "instance E"));
        if (!E.back().is_one()) throw UsageError("instance: ext.E must be monic");
        auto ring = std::make_shared<const ExtRingCtx>(base, E);
        MultiPoly f = MultiPoly::zero_ext(m, d, ring);
        for (size_t i = 0; i < want; ++i)
            f.set_coeff_ext(i, parse_ext_elem(j["coeffs"][i], *ring, "instance coeffs"));
        inst.poly = std::move(f);
    } else {
        auto mod = make_modulus(r, s);
        MultiPoly f = MultiPoly::zero(m, d, mod);
        for (size_t i = 0; i < want; ++i) {
            Natural v = parse_residue(j["coeffs"][i], mod->n(), "instance coeffs");
            f.set_coeff(i, std::move(v));
        }
        inst.poly = std::move(f);
    }
    return inst;
}

std::string emit_instance(const Instance& inst) {
    json j;
    j["schema_version"] = "1";
    j["r"] = inst.ring_r().to_string();
    j["s"] = inst.ring_s();
    if (inst.is_ext()) {
        const auto& ring = *inst.poly.ext_ring();
        json je;
        je["e"] = ring.degree();
        json E = json::array();
        for (u32 i = 0; i <= ring.degree(); ++i) E.push_back(ring.E().coeff(i).to_string());
        je["E"] = E;
        j["ext"] = je;
    }
    j["m"] = inst.poly.m();
    j["d"] = inst.poly.d();
    json coeffs = json::array();
    if (inst.is_ext())
        for (const auto& c : inst.poly.ext_coeffs()) coeffs.push_back(emit_ext_elem(c));
    else
        for (const auto& c : inst.poly.mod_coeffs()) coeffs.push_back(c.to_string());
    j["coeffs"] = coeffs;
    return j.dump() + "\n";
}

PointSet parse_points(const std::string& json_text, const Instance& inst) {
    json j = parse_json(json_text);
    if (!j.is_object() || !j.contains("schema_version") || j["schema_version"] != "1")
        throw UsageError("points: schema_version must be \"1\"");
    if (!j.contains("points") || !j["points"].is_array())
        throw UsageError("points: missing points array");
    PointSet out;
    out.is_ext = inst.is_ext();
    const u32 m = inst.poly.m();
    for (const auto& jp : j["points"]) {
        if (!jp.is_array() || jp.size() != m)
            throw UsageError("points: every vector must have length m");
        if (out.is_ext) {
            ExtPoint p;
            for (const auto& c : jp) p.push_back(parse_ext_elem(c, *inst.poly.ext_ring(), "points"));
            out.ext.push_back(std::move(p));
        } else {
            ModPoint p;
            for (const auto& c : jp) p.push_back(parse_residue(c, inst.poly.modulus()->n(), "points"));
            out.mod.push_back(std::move(p));
        }
    }
    return out;
}

std::string emit_points(const PointSet& pts, const Instance& inst) {
    (void)inst;
    json j;
    j["schema_version"] = "1";
    json arr = json::array();
    if (pts.is_ext) {
        for (const auto& p : pts.ext) {
            json jp = json::array();
            for (const auto& c : p) jp.push_back(emit_ext_elem(c));
            arr.push_back(jp);
        }
    } else {
        for (const auto& p : pts.mod) {
            json jp = json::array();
            for (const auto& c : p) jp.push_back(c.to_string());
            arr.push_back(jp);
        }
    }
    j["points"] = arr;
    return j.dump() + "\n";
}

std::string emit_values(const std::vector<Natural>& values) {
    json j;
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.to_string());
    j["values"] = arr;
    return j.dump() + "\n";
}

std::string emit_values_ext(const std::vector<ExtElem>& values) {
    json j;
    json arr = json::array();
    for (const auto& v : values) arr.push_back(emit_ext_elem(v));
    j["values"] = arr;
    return j.dump() + "\n";
}

Instance gen_instance(u64 seed, const Natural& r, u32 s, u32 m, u32 d,
                      const std::vector<Natural>* ext_E) {
    DetRng rng(seed);
    Instance inst;
    size_t count = checked_coeff_count(d, m);
    if (ext_E) {
        auto base = make_modulus(r, s);
        auto ring = std::make_shared<const ExtRingCtx>(base, *ext_E);
        MultiPoly f = MultiPoly::zero_ext(m, d, ring);
        for (size_t i = 0; i < count; ++i) {
            ExtElem x = ring->zero();
            for (u32 c = 0; c < ring->degree(); ++c) x.c[c] = rng.below(base->n());
            f.set_coeff_ext(i, std::move(x));
        }
        inst.poly = std::move(f);
    } else {
        auto mod = make_modulus(r, s);
        MultiPoly f = MultiPoly::zero(m, d, mod);
        for (size_t i = 0; i < count; ++i) f.set_coeff(i, rng.below(mod->n()));
        inst.poly = std::move(f);
    }
    return inst;
}

PointSet gen_points(u64 seed, const Instance& inst, size_t n) {
    DetRng rng(seed ^ 0x9e3779b97f4a7c15ull);
    PointSet out;
    out.is_ext = inst.is_ext();
    const u32 m = inst.poly.m();
    for (size_t i = 0; i < n; ++i) {
        if (out.is_ext) {
            const auto& ring = *inst.poly.ext_ring();
            ExtPoint p(m);
            for (u32 j = 0; j < m; ++j) {
                p[j] = ring.zero();
                for (u32 c = 0; c < ring.degree(); ++c) p[j].c[c] = rng.below(ring.base()->n());
            }
            out.ext.push_back(std::move(p));
        } else {
            ModPoint p(m);
            for (u32 j = 0; j < m; ++j) p[j] = rng.below(inst.poly.modulus()->n());
            out.mod.push_back(std::move(p));
        }
    }
    return out;
}

const char* kBenchCsvHeader = "algo,r,s,e,m,d,N,wall_time_ns,per_point_ns,checked";

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = kBenchCsvHeader;
    out += "\n";
    for (const auto& row : rows) {
        out += row.algo + "," + row.r.to_string() + "," + std::to_string(row.s) + "," +
               std::to_string(row.e) + "," + std::to_string(row.m) + "," + std::to_string(row.d) +
               "," + std::to_string(row.n_points) + "," + std::to_string(row.wall_time_ns) + "," +
               std::to_string(row.per_point_ns) + "," + (row.checked ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace mme
