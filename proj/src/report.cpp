#include "nt/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace nt {

json to_json(const SweepReport& r) {
    json j;
    j["suite"] = r.suite;
    j["params"] = r.params;
    j["checks"] = r.checks;
    j["failures"] = r.failures;
    j["max_deviation"] = r.max_deviation;
    j["wall_seconds"] = r.wall_seconds;
    return j;
}

namespace {

void dump_rec(const json& j, std::string& out, int indent, int depth) {
    auto pad = [&](int d) {
        if (indent > 0) {
            out += '\n';
            out.append(static_cast<size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann objects iterate key-sorted
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                out += json(it.key()).dump();
                out += ':';
                if (indent > 0) out += ' ';
                dump_rec(it.value(), out, indent, depth + 1);
            }
            pad(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                dump_rec(v, out, indent, depth + 1);
            }
            pad(depth);
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12e", j.get<double>());
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_json(const json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    if (indent > 0) out += '\n';
    return out;
}

std::string dump_report(const SweepReport& r) { return dump_json(to_json(r), 2); }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace nt
