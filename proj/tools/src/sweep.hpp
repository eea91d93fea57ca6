#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperzeno/axes.hpp"
#include "hyperzeno/photstat.hpp"
#include "hyperzeno/zeno.hpp"
#include "params_io.hpp"

namespace hz::cli {

struct AxisRange {
    Axis axis = Axis::gz;
    double start = 0.0, stop = 0.0;
    int count = 2;
    double at(int i) const { return start + (stop - start) * i / (count - 1); }
};

enum class Evaluator { Closed, General };

struct SweepSpec {
    ProbeScenario scenario = ProbeScenario::PumpProbe;
    SystemParams params;
    double z = 0.0;  // base length before any length axis is applied
    std::vector<AxisRange> axes;
    bool zeno = true;
    bool stats = false;
    Evaluator evaluator = Evaluator::Closed;
    StatSource stat_source = StatSource::ClosedForm;
    std::string title;  // echoed into the header
};

// Keys: scenario, params (object, optional if `fallback` is given), z or gz,
// axes [{axis, start, stop, count}], outputs ["Z", "D"], evaluator
// ("closed" | "general"), stats_source ("closed" | "expansion").
SweepSpec sweep_from_json(const json& j, const std::optional<SystemParams>& fallback);
void check_sweep(const SweepSpec& s);

struct SweepRow {
    std::vector<double> axis_values;
    double z = 0.0;
    ZenoReport Z;
    StatSet D;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double max_strength = 0.0;  // largest coupling * z met on the grid
};

// Row-major over spec.axes (first axis slowest). Grid points are shared out
// to `threads` workers and reassembled in grid order.
SweepResult run_sweep(const SweepSpec& spec, int threads);

std::vector<std::string> sweep_columns(const SweepSpec& spec);
void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const SweepResult& r);

// Shared header block: tool version plus full parameter echo.
void write_header(std::ostream& out, const std::string& what, const SystemParams& p);

ZenoFn zeno_evaluator(Evaluator e, ProbeScenario s);

}  // namespace hz::cli
