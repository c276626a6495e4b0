#include "vamp/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace vamp {
namespace {

std::string format_ms(double ms) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

std::string format_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

struct Series {
    std::string label;
    std::string color;
    std::string dash;  // empty for solid
    std::vector<std::pair<double, double>> points;  // (size, value)
};

std::string render_chart(const std::string& title, const std::string& y_label,
                         const std::vector<Series>& series) {
    constexpr double kW = 720, kH = 440;
    constexpr double kLeft = 80, kRight = 20, kTop = 40, kBottom = 50;
    double x_min = 0, x_max = 1, y_max = 1;
    bool first = true;
    for (const Series& s : series) {
        for (auto [x, y] : s.points) {
            if (first) {
                x_min = x_max = x;
                first = false;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_max = std::max(y_max, y);
        }
    }
    if (x_max == x_min) x_max = x_min + 1;
    if (y_max <= 0) y_max = 1;
    y_max *= 1.05;
    const auto px = [&](double x) {
        return kLeft + (x - x_min) / (x_max - x_min) * (kW - kLeft - kRight);
    };
    const auto py = [&](double y) { return kH - kBottom - y / y_max * (kH - kTop - kBottom); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"440\" "
           "viewBox=\"0 0 720 440\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"720\" height=\"440\" fill=\"white\"/>\n";
    svg += "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + title +
           "</text>\n";
    svg += "<line x1=\"" + format_coord(kLeft) + "\" y1=\"" + format_coord(kTop) +
           "\" x2=\"" + format_coord(kLeft) + "\" y2=\"" + format_coord(kH - kBottom) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_coord(kLeft) + "\" y1=\"" + format_coord(kH - kBottom) +
           "\" x2=\"" + format_coord(kW - kRight) + "\" y2=\"" +
           format_coord(kH - kBottom) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"20\" y=\"" + format_coord((kTop + kH - kBottom) / 2) +
           "\" font-size=\"12\" transform=\"rotate(-90 20 " +
           format_coord((kTop + kH - kBottom) / 2) + ")\" text-anchor=\"middle\">" +
           y_label + "</text>\n";
    svg += "<text x=\"" + format_coord((kLeft + kW - kRight) / 2) + "\" y=\"" +
           format_coord(kH - 12) + "\" font-size=\"12\" text-anchor=\"middle\">domain "
           "size</text>\n";
    for (int i = 0; i <= 4; ++i) {
        const double y = y_max * i / 4.0;
        svg += "<text x=\"" + format_coord(kLeft - 6) + "\" y=\"" +
               format_coord(py(y) + 4) + "\" font-size=\"10\" text-anchor=\"end\">" +
               format_coord(y) + "</text>\n";
    }

    std::vector<double> xs;
    for (const Series& s : series)
        for (auto [x, _] : s.points) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (double x : xs) {
        svg += "<text x=\"" + format_coord(px(x)) + "\" y=\"" +
               format_coord(kH - kBottom + 16) +
               "\" font-size=\"10\" text-anchor=\"middle\">" +
               std::to_string(static_cast<long long>(x)) + "</text>\n";
    }

    double legend_y = kTop + 10;
    for (const Series& s : series) {
        std::string pts;
        for (auto [x, y] : s.points) {
            if (!pts.empty()) pts += ' ';
            pts += format_coord(px(x)) + "," + format_coord(py(y));
        }
        svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\"";
        if (!s.dash.empty()) svg += " stroke-dasharray=\"" + s.dash + "\"";
        svg += " stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        svg += "<line x1=\"" + format_coord(kW - 190) + "\" y1=\"" +
               format_coord(legend_y - 4) + "\" x2=\"" + format_coord(kW - 160) +
               "\" y2=\"" + format_coord(legend_y - 4) + "\" stroke=\"" + s.color + "\"";
        if (!s.dash.empty()) svg += " stroke-dasharray=\"" + s.dash + "\"";
        svg += " stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + format_coord(kW - 154) + "\" y=\"" + format_coord(legend_y) +
               "\" font-size=\"11\">" + s.label + "</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

const char* method_color(const std::string& method) {
    return method == "baseline" ? "#1f77b4" : "#d62728";
}

}  // namespace

const char* method_name(IndexStrategy s) {
    return s == IndexStrategy::Baseline ? "baseline" : "fpnnt";
}

IndexStrategy method_from_name(const std::string& name) {
    if (name == "baseline") return IndexStrategy::Baseline;
    if (name == "fpnnt") return IndexStrategy::Fpnnt;
    throw InvalidSpec("unknown method: " + name);
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    if (config.trials < 1) throw InvalidSpec("bench: trials must be >= 1");
    if (config.sizes.empty()) throw InvalidSpec("bench: sizes must be non-empty");
    if (!std::is_sorted(config.sizes.begin(), config.sizes.end()))
        throw InvalidSpec("bench: sizes must be ascending");
    if (config.methods.empty()) throw InvalidSpec("bench: methods must be non-empty");

    const RobotSpec robot;
    std::vector<BenchRow> rows;
    for (int size : config.sizes) {
        DomainSpec dspec;
        dspec.kind = config.domain_kind;
        dspec.size = size;
        dspec.hallway_width = config.hallway_width;
        const ProblemInstance instance = generate(dspec, robot);
        for (IndexStrategy method : config.methods) {
            for (int trial = 0; trial < config.trials; ++trial) {
                PlannerConfig pc;
                pc.strategy = method;
                pc.lookback_capacity = config.lookback_capacity;
                BenchRow row;
                row.domain = domain_kind_name(config.domain_kind);
                row.size = size;
                row.method = method_name(method);
                row.lookback_capacity = config.lookback_capacity;
                row.trial = trial;
                try {
                    const PathResult res = relaxed_vamp_search(instance, robot, pc);
                    row.total_ms = res.stats.total_ns / 1e6;
                    row.find_vis_viol_ms = res.stats.find_vis_viol_ns / 1e6;
                    row.insert_ms = res.stats.insert_ns / 1e6;
                    row.nodes_expanded = res.stats.nodes_expanded;
                    row.steps = static_cast<std::int64_t>(res.steps);
                    row.violation_cells = res.total_violation_cells;
                    row.logical_memory = res.stats.logical_memory;
                } catch (const NoPath&) {
                    row.steps = -1;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    if (!config.output_dir.empty()) {
        std::filesystem::create_directories(config.output_dir);
        write_csv(rows, config.output_dir + "/results.csv");
        if (config.emit_svg) emit_plots(rows, config.output_dir);
    }
    return rows;
}

std::string csv_string(const std::vector<BenchRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const BenchRow& r : rows) {
        out += r.domain + "," + std::to_string(r.size) + "," + r.method + "," +
               std::to_string(r.lookback_capacity) + "," + std::to_string(r.trial) + "," +
               format_ms(r.total_ms) + "," + format_ms(r.find_vis_viol_ms) + "," +
               format_ms(r.insert_ms) + "," + std::to_string(r.nodes_expanded) + "," +
               std::to_string(r.steps) + "," + std::to_string(r.violation_cells) + "," +
               std::to_string(r.logical_memory) + "\n";
    }
    return out;
}

std::vector<BenchRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw ParseError("bad CSV header", 1, 1);
    std::vector<BenchRow> rows;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 12) throw ParseError("expected 12 fields", line_no, 1);
        try {
            BenchRow r;
            r.domain = fields[0];
            r.size = std::stoi(fields[1]);
            r.method = fields[2];
            r.lookback_capacity = std::stoi(fields[3]);
            r.trial = std::stoi(fields[4]);
            r.total_ms = std::stod(fields[5]);
            r.find_vis_viol_ms = std::stod(fields[6]);
            r.insert_ms = std::stod(fields[7]);
            r.nodes_expanded = std::stoull(fields[8]);
            r.steps = std::stoll(fields[9]);
            r.violation_cells = std::stoull(fields[10]);
            r.logical_memory = std::stoull(fields[11]);
            rows.push_back(std::move(r));
        } catch (const std::exception&) {
            throw ParseError("bad numeric field", line_no, 1);
        }
    }
    return rows;
}

void write_csv(const std::vector<BenchRow>& rows, const std::string& path) {
    write_text_file(path, csv_string(rows));
}

std::vector<std::string> emit_plots(const std::vector<BenchRow>& rows,
                                    const std::string& out_dir) {
    if (rows.empty()) throw InvalidSpec("emit_plots: no rows");
    std::filesystem::create_directories(out_dir);

    // mean per (domain, method, size), methods kept in first-seen order
    struct Key {
        std::string domain, method;
        int size;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, std::pair<BenchRow, int>> acc;
    std::vector<std::string> domains;
    std::vector<std::string> methods;
    for (const BenchRow& r : rows) {
        auto& [sum, n] = acc[{r.domain, r.method, r.size}];
        if (n == 0) sum = r;
        else {
            sum.total_ms += r.total_ms;
            sum.find_vis_viol_ms += r.find_vis_viol_ms;
            sum.insert_ms += r.insert_ms;
            sum.logical_memory += r.logical_memory;
        }
        ++n;
        if (std::find(domains.begin(), domains.end(), r.domain) == domains.end())
            domains.push_back(r.domain);
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
            methods.push_back(r.method);
    }

    std::vector<std::string> written;
    for (const std::string& domain : domains) {
        std::vector<Series> runtime, memory;
        for (const std::string& method : methods) {
            Series total{method + " total", method_color(method), "", {}};
            Series fvv{method + " find_vis_viol", method_color(method), "6,4", {}};
            Series mem{method, method_color(method), "", {}};
            for (const auto& [key, val] : acc) {
                if (key.domain != domain || key.method != method) continue;
                const auto& [sum, n] = val;
                total.points.push_back({double(key.size), sum.total_ms / n});
                fvv.points.push_back({double(key.size), sum.find_vis_viol_ms / n});
                mem.points.push_back({double(key.size), double(sum.logical_memory) / n});
            }
            if (total.points.empty()) continue;
            runtime.push_back(std::move(total));
            runtime.push_back(std::move(fvv));
            memory.push_back(std::move(mem));
        }
        const std::string run_path = out_dir + "/" + domain + "-runtime.svg";
        const std::string mem_path = out_dir + "/" + domain + "-memory.svg";
        write_text_file(run_path,
                        render_chart(domain + ": runtime", "milliseconds", runtime));
        write_text_file(mem_path,
                        render_chart(domain + ": search tree storage", "logical units",
                                     memory));
        written.push_back(run_path);
        written.push_back(mem_path);
    }
    return written;
}

}  // namespace vamp
