#ifndef ORTHOLAB_REPORT_HPP
#define ORTHOLAB_REPORT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ortholab/summability.hpp"

namespace ortholab::report {

// Minimal JSON value with insertion-ordered objects and 17-significant-
// digit doubles, so identical configurations serialize byte-identically.
class Json {
public:
    Json() : kind_(Kind::Null) {}
    Json(bool b) : kind_(Kind::Bool), bool_(b) {}
    Json(int v) : kind_(Kind::Int), int_(v) {}
    Json(long long v) : kind_(Kind::Int), int_(v) {}
    Json(double v) : kind_(Kind::Double), double_(v) {}
    Json(const char* s) : kind_(Kind::String), string_(s) {}
    Json(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

    static Json array();
    static Json object();

    void push_back(Json v);              // array
    void set(std::string key, Json v);   // object (insertion order kept)

    std::string dump(int indent = 2) const;

private:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };
    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    double double_ = 0.0;
    std::string string_;
    std::vector<Json> array_;
    std::vector<std::pair<std::string, Json>> object_;

    void dump_to(std::string& out, int indent, int depth) const;
};

// "%.17g" with non-finite values mapped to null (JSON has no inf/nan).
std::string format_double(double v);

Json to_json(const summability::VerificationReport& rep);

// {command, config, reports[], summary{pass_count, fail_count,
//  max_rel_err}, tool_version}
Json report_document(const std::string& command, Json config, Json reports,
                     int pass_count, int fail_count, double max_rel_err);

// Writes text to path; returns false on I/O failure.
bool write_file(const std::string& path, const std::string& text);

// CSV table: header row plus rows, comma-separated, 17-digit doubles.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows);

std::string csv_cell(double v);

} // namespace ortholab::report

#endif
