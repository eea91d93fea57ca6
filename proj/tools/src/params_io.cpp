#include "params_io.hpp"

#include <charconv>
#include <fstream>

namespace hz::cli {

namespace {

const std::array<std::pair<const char*, double SystemParams::*>, 2> kScalars{{
    {"g", &SystemParams::g},
    {"chi", &SystemParams::chi},
}};

struct ProbeKey {
    const char* name;
    std::array<double, 2> SystemParams::*field;
    int j;
};
const std::array<ProbeKey, 6> kProbeKeys{{
    {"Gamma1", &SystemParams::gamma_probe, 0},
    {"Gamma2", &SystemParams::gamma_probe, 1},
    {"Lambda1", &SystemParams::lambda_probe, 0},
    {"Lambda2", &SystemParams::lambda_probe, 1},
    {"Omega1", &SystemParams::omega_probe, 0},
    {"Omega2", &SystemParams::omega_probe, 1},
}};

double number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError(where + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ParseError(where + ": not finite");
    return x;
}

Mode mode_key(const std::string& key, const std::string& where) {
    const auto m = mode_from_name(key);
    if (!m) throw ParseError(where + ": unknown mode '" + key + "'");
    return *m;
}

}  // namespace

SystemParams params_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("parameters: expected a JSON object");
    SystemParams p;
    for (const auto& [key, v] : j.items()) {
        bool known = false;
        for (const auto& [name, field] : kScalars)
            if (key == name) {
                p.*field = number(v, key);
                known = true;
            }
        for (const ProbeKey& pk : kProbeKeys)
            if (key == pk.name) {
                (p.*pk.field)[pk.j] = number(v, key);
                known = true;
            }
        if (key == "k") {
            if (!v.is_object()) throw ParseError("k: expected an object");
            for (const auto& [mk, kv] : v.items()) p.k[idx(mode_key(mk, "k"))] = number(kv, "k." + mk);
            known = true;
        } else if (key == "amp") {
            if (!v.is_object()) throw ParseError("amp: expected an object");
            for (const auto& [mk, av] : v.items()) {
                const Mode m = mode_key(mk, "amp");
                if (!av.is_object()) throw ParseError("amp." + mk + ": expected {mag, phase}");
                for (const auto& [field, fv] : av.items()) {
                    if (field == "mag")
                        p.a(m).mag = number(fv, "amp." + mk + ".mag");
                    else if (field == "phase")
                        p.a(m).phase = number(fv, "amp." + mk + ".phase");
                    else
                        throw ParseError("amp." + mk + ": unknown field '" + field + "'");
                }
                if (p.a(m).mag < 0) throw ParseError("amp." + mk + ".mag must be >= 0");
            }
            known = true;
        }
        if (!known) throw ParseError("unknown parameter key '" + key + "'");
    }
    if (p.g < 0 || p.chi < 0) throw ParseError("g and chi must be >= 0");
    return normalized(p);
}

json params_to_json(const SystemParams& p) {
    json j = json::object();
    for (const auto& [name, field] : kScalars) j[name] = p.*field;
    for (const ProbeKey& pk : kProbeKeys) j[pk.name] = (p.*pk.field)[pk.j];
    json k = json::object(), amp = json::object();
    for (Mode m : kAllModes) {
        const std::string name(mode_name(m));
        k[name] = p.kk(m);
        amp[name] = {{"mag", p.a(m).mag}, {"phase", p.a(m).phase}};
    }
    j["k"] = k;
    j["amp"] = amp;
    return j;
}

json load_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(file.string() + ": " + e.what());
    }
}

SystemParams load_params(const std::filesystem::path& file) { return params_from_json(load_json(file)); }

void apply_override(SystemParams& p, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) throw ParseError("override '" + std::string(assignment) + "': expected key=value");
    const std::string key(assignment.substr(0, eq));
    const std::string_view text = assignment.substr(eq + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("override '" + key + "': bad number '" + std::string(text) + "'");

    json j = params_to_json(p);
    json* node = &j;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = key.find('.', start);
        const std::string part = key.substr(start, dot - start);
        if (!node->is_object() || !node->contains(part)) throw ParseError("override: unknown key '" + key + "'");
        node = &(*node)[part];
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    if (!node->is_number()) throw ParseError("override: '" + key + "' is not a scalar");
    *node = value;
    p = params_from_json(j);
}

}  // namespace hz::cli
