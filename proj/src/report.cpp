#include "ortholab/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace ortholab::report {

Json Json::array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
}

Json Json::object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
}

void Json::push_back(Json v) {
    if (kind_ != Kind::Array) throw std::runtime_error("Json: not an array");
    array_.push_back(std::move(v));
}

void Json::set(std::string key, Json v) {
    if (kind_ != Kind::Object) throw std::runtime_error("Json: not an object");
    object_.emplace_back(std::move(key), std::move(v));
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void escape_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

} // namespace

void Json::dump_to(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (kind_) {
    case Kind::Null: out += "null"; return;
    case Kind::Bool: out += bool_ ? "true" : "false"; return;
    case Kind::Int: out += std::to_string(int_); return;
    case Kind::Double: out += format_double(double_); return;
    case Kind::String: escape_string(out, string_); return;
    case Kind::Array: {
        if (array_.empty()) {
            out += "[]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < array_.size(); ++i) {
            out += pad_in;
            array_[i].dump_to(out, indent, depth + 1);
            if (i + 1 < array_.size()) out += ',';
            out += '\n';
        }
        out += pad + "]";
        return;
    }
    case Kind::Object: {
        if (object_.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        for (std::size_t i = 0; i < object_.size(); ++i) {
            out += pad_in;
            escape_string(out, object_[i].first);
            out += ": ";
            object_[i].second.dump_to(out, indent, depth + 1);
            if (i + 1 < object_.size()) out += ',';
            out += '\n';
        }
        out += pad + "}";
        return;
    }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    dump_to(out, indent, 0);
    out += '\n';
    return out;
}

Json to_json(const summability::VerificationReport& rep) {
    Json j = Json::object();
    j.set("identity", rep.identity);
    Json computed = Json::object();
    computed.set("re", rep.computed.real());
    computed.set("im", rep.computed.imag());
    j.set("computed", std::move(computed));
    Json expected = Json::object();
    expected.set("re", rep.expected.real());
    expected.set("im", rep.expected.imag());
    j.set("expected", std::move(expected));
    j.set("abs_err", rep.abs_err);
    j.set("rel_err", rep.rel_err);
    j.set("tolerance", rep.tolerance);
    j.set("pass", rep.pass);
    j.set("runtime_ms", rep.runtime_ms);
    return j;
}

Json report_document(const std::string& command, Json config, Json reports,
                     int pass_count, int fail_count, double max_rel_err) {
    Json doc = Json::object();
    doc.set("command", command);
    doc.set("config", std::move(config));
    doc.set("reports", std::move(reports));
    Json summary = Json::object();
    summary.set("pass_count", pass_count);
    summary.set("fail_count", fail_count);
    summary.set("max_rel_err", max_rel_err);
    doc.set("summary", std::move(summary));
    doc.set("tool_version", "ortholab 0.1.0");
    return doc;
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

std::string csv_cell(double v) { return format_double(v); }

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        out += header[i];
        out += (i + 1 < header.size()) ? "," : "";
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += row[i];
            out += (i + 1 < row.size()) ? "," : "";
        }
        out += '\n';
    }
    return out;
}

} // namespace ortholab::report
