#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "csv.hpp"
#include "version.hpp"

namespace hz::cli {

namespace {

bool is_length_axis(Axis a) { return a == Axis::gz || a == Axis::z; }

AxisRange axis_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("axes: expected objects");
    AxisRange r;
    const std::string name = j.value("axis", "");
    const auto a = axis_from_name(name);
    if (!a) throw ParseError("axes: unknown axis '" + name + "'");
    r.axis = *a;
    try {
        r.start = j.at("start").get<double>();
        r.stop = j.at("stop").get<double>();
        r.count = j.at("count").get<int>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("axes: ") + e.what());
    }
    return r;
}

}  // namespace

ZenoFn zeno_evaluator(Evaluator e, ProbeScenario s) {
    if (e == Evaluator::General)
        return [s](const SystemParams& p, double z) { return zeno_general(p, z, s); };
    return [s](const SystemParams& p, double z) { return zeno(p, z, s); };
}

SweepSpec sweep_from_json(const json& j, const std::optional<SystemParams>& fallback) {
    if (!j.is_object()) throw ParseError("sweep spec: expected a JSON object");
    SweepSpec s;
    for (const auto& [key, v] : j.items()) {
        if (key == "scenario") {
            const auto sc = scenario_from_name(v.get<std::string>());
            if (!sc) throw ParseError("unknown scenario '" + v.get<std::string>() + "'");
            s.scenario = *sc;
        } else if (key == "params") {
            s.params = params_from_json(v);
        } else if (key == "z" || key == "gz" || key == "title") {
            continue;
        } else if (key == "axes") {
            if (!v.is_array()) throw ParseError("axes: expected an array");
            for (const json& a : v) s.axes.push_back(axis_from_json(a));
        } else if (key == "outputs") {
            s.zeno = s.stats = false;
            for (const json& o : v) {
                const std::string name = o.get<std::string>();
                if (name == "Z")
                    s.zeno = true;
                else if (name == "D")
                    s.stats = true;
                else
                    throw ParseError("outputs: unknown selection '" + name + "'");
            }
        } else if (key == "evaluator") {
            const std::string e = v.get<std::string>();
            if (e == "closed")
                s.evaluator = Evaluator::Closed;
            else if (e == "general")
                s.evaluator = Evaluator::General;
            else
                throw ParseError("evaluator: expected closed or general");
        } else if (key == "stats_source") {
            const std::string e = v.get<std::string>();
            if (e == "closed")
                s.stat_source = StatSource::ClosedForm;
            else if (e == "expansion")
                s.stat_source = StatSource::Expansion;
            else
                throw ParseError("stats_source: expected closed or expansion");
        } else {
            throw ParseError("sweep spec: unknown key '" + key + "'");
        }
    }
    if (!j.contains("params")) {
        if (!fallback) throw ParseError("sweep spec: no params and no --params file");
        s.params = *fallback;
    }
    if (j.contains("z") && j.contains("gz")) throw ParseError("sweep spec: give z or gz, not both");
    if (j.contains("z")) s.z = j["z"].get<double>();
    if (j.contains("gz")) {
        if (s.params.g == 0) throw ParseError("sweep spec: gz needs g != 0");
        s.z = j["gz"].get<double>() / s.params.g;
    }
    s.title = j.value("title", "");
    check_sweep(s);
    return s;
}

void check_sweep(const SweepSpec& s) {
    int length = 0, other = 0;
    for (std::size_t i = 0; i < s.axes.size(); ++i) {
        const AxisRange& a = s.axes[i];
        if (a.count < 2) throw ParseError("axis " + std::string(axis_name(a.axis)) + ": count must be >= 2");
        if (!std::isfinite(a.start) || !std::isfinite(a.stop))
            throw ParseError("axis " + std::string(axis_name(a.axis)) + ": non-finite range");
        for (std::size_t k = 0; k < i; ++k)
            if (s.axes[k].axis == a.axis) throw ParseError("axes must be distinct");
        (is_length_axis(a.axis) ? length : other)++;
    }
    if (length > 1) throw ParseError("at most one of z / gz may be swept");
    if (other > 2) throw ParseError("at most two non-length axes may be swept");
    if (!s.zeno && !s.stats) throw ParseError("outputs: nothing selected");
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
    std::size_t total = 1;
    for (const AxisRange& a : spec.axes) total *= static_cast<std::size_t>(a.count);
    SweepResult res;
    res.rows.resize(total);
    const ZenoFn zfn = zeno_evaluator(spec.evaluator, spec.scenario);
    const SystemParams base = apply_scenario(spec.params, spec.scenario);

    // Length axes first: the "_z" mismatch axes read the current z.
    std::vector<std::size_t> order(spec.axes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_partition(order.begin(), order.end(),
                          [&](std::size_t i) { return is_length_axis(spec.axes[i].axis); });

    auto eval = [&](std::size_t flat) {
        SweepRow& row = res.rows[flat];
        row.axis_values.resize(spec.axes.size());
        std::size_t rem = flat;
        for (std::size_t i = spec.axes.size(); i-- > 0;) {
            const auto n = static_cast<std::size_t>(spec.axes[i].count);
            row.axis_values[i] = spec.axes[i].at(static_cast<int>(rem % n));
            rem /= n;
        }
        Point at{base, spec.z};
        for (std::size_t i : order) at = set_axis(at, spec.axes[i].axis, row.axis_values[i]);
        row.z = at.z;
        if (spec.zeno) row.Z = zfn(at.params, at.z);
        if (spec.stats)
            row.D = spec.stat_source == StatSource::Expansion ? d_expansion(at.params, at.z)
                                                              : d_closed_form(at.params, at.z);
        return check_validity(at.params, at.z).strength;
    };

    const int workers = std::max(1, std::min<int>(threads, static_cast<int>(total)));
    std::vector<double> strength(static_cast<std::size_t>(workers), 0.0);
    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 64;
    auto work = [&](int w) {
        while (true) {
            const std::size_t begin = next.fetch_add(kChunk);
            if (begin >= total) break;
            const std::size_t end = std::min(total, begin + kChunk);
            for (std::size_t i = begin; i < end; ++i)
                strength[static_cast<std::size_t>(w)] = std::max(strength[static_cast<std::size_t>(w)], eval(i));
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    res.max_strength = *std::max_element(strength.begin(), strength.end());
    return res;
}

std::vector<std::string> sweep_columns(const SweepSpec& spec) {
    std::vector<std::string> c;
    for (const AxisRange& a : spec.axes) c.emplace_back(axis_name(a.axis));
    c.emplace_back("z");
    if (spec.zeno) {
        for (Channel ch : kChannels) c.push_back("Z_" + std::string(channel_name(ch)));
        for (Channel ch : kChannels) c.push_back("effect_" + std::string(channel_name(ch)));
    }
    if (spec.stats) {
        for (StatKey k : kStatKeys) c.push_back("D_" + std::string(stat_name(k)));
        for (StatKey k : kStatKeys) c.push_back("class_" + std::string(stat_name(k)));
    }
    return c;
}

void write_header(std::ostream& out, const std::string& what, const SystemParams& p) {
    CsvWriter w(out);
    w.comment("hzeno " + std::string(kVersion));
    w.comment(what);
    w.comment("params: " + params_to_json(p).dump());
}

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const SweepResult& r) {
    std::string what = "sweep scenario=" + std::string(scenario_name(spec.scenario)) +
                       " evaluator=" + (spec.evaluator == Evaluator::General ? "general" : "closed");
    if (spec.stats) what += " stats=" + std::string(source_name(spec.stat_source));
    if (!spec.title.empty()) what = spec.title + "\n" + what;
    write_header(out, what, spec.params);
    CsvWriter w(out);
    std::string cols = "columns:";
    for (const std::string& c : sweep_columns(spec)) cols += " " + c;
    w.comment(cols + " (row-major over the swept axes, first axis slowest; nan marks a channel that is not applicable)");
    w.columns(sweep_columns(spec));
    for (const SweepRow& row : r.rows) {
        std::vector<Cell> cells(row.axis_values.begin(), row.axis_values.end());
        cells.emplace_back(row.z);
        if (spec.zeno) {
            for (Channel ch : kChannels) {
                const int i = static_cast<int>(ch);
                cells.emplace_back(row.Z.applicable[i] ? row.Z.Z[i] : std::nan(""));
            }
            for (Channel ch : kChannels) cells.emplace_back(std::string(effect_name(row.Z.effect(ch))));
        }
        if (spec.stats) {
            for (StatKey k : kStatKeys) cells.emplace_back(row.D[k]);
            for (StatKey k : kStatKeys) cells.emplace_back(std::string(bunching_name(classify_bunching(row.D[k]))));
        }
        w.row(cells);
    }
}

}  // namespace hz::cli
