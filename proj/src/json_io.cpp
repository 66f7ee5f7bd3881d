#include "qbell/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qbell {

std::string to_string(Space s) {
    return s == Space::Correlation ? "correlation" : "probability";
}

Space space_from_string(const std::string& s) {
    if (s == "correlation") return Space::Correlation;
    if (s == "probability") return Space::Probability;
    throw std::invalid_argument("space must be 'correlation' or 'probability'");
}

void JsonWriter::separate() {
    if (need_comma_) out_ += ',';
    need_comma_ = false;
}

void JsonWriter::begin_object() {
    separate();
    out_ += '{';
}

void JsonWriter::end_object() {
    out_ += '}';
    need_comma_ = true;
}

void JsonWriter::begin_array() {
    separate();
    out_ += '[';
}

void JsonWriter::end_array() {
    out_ += ']';
    need_comma_ = true;
}

void JsonWriter::key(const std::string& k) {
    separate();
    out_ += '"';
    out_ += k;
    out_ += "\":";
}

std::string JsonWriter::format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void JsonWriter::value(double v) {
    separate();
    out_ += format_double(v);
    need_comma_ = true;
}

void JsonWriter::value(int v) { value(static_cast<long long>(v)); }

void JsonWriter::value(long long v) {
    separate();
    out_ += std::to_string(v);
    need_comma_ = true;
}

void JsonWriter::value(unsigned long long v) {
    separate();
    out_ += std::to_string(v);
    need_comma_ = true;
}

void JsonWriter::value(bool v) {
    separate();
    out_ += v ? "true" : "false";
    need_comma_ = true;
}

void JsonWriter::value(const std::string& v) {
    separate();
    out_ += '"';
    for (char c : v) {
        switch (c) {
            case '"': out_ += "\\\""; break;
            case '\\': out_ += "\\\\"; break;
            case '\n': out_ += "\\n"; break;
            case '\t': out_ += "\\t"; break;
            default: out_ += c;
        }
    }
    out_ += '"';
    need_comma_ = true;
}

void JsonWriter::null_value() {
    separate();
    out_ += "null";
    need_comma_ = true;
}

std::string coefficient_file_to_json(const CoefficientFile& file) {
    JsonWriter w;
    w.begin_object();
    w.key("d");
    w.value(file.d);
    w.key("space");
    w.value(to_string(file.space));
    w.key("coefficients");
    w.begin_array();
    for (int ab = 0; ab < 4; ++ab) {
        w.begin_array();
        for (int n = 0; n < file.d; ++n) {
            const cplx& e = file.table[static_cast<std::size_t>(ab) * file.d + n];
            w.begin_array();
            w.value(e.real());
            w.value(e.imag());
            w.end_array();
        }
        w.end_array();
    }
    w.end_array();
    w.end_object();
    return w.str() + "\n";
}

CoefficientFile parse_coefficient_file(const std::string& json_text) {
    const nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object()) throw std::invalid_argument("coefficient file must be a JSON object");
    if (!j.contains("d") || !j["d"].is_number_integer())
        throw std::invalid_argument("coefficient file needs an integer field 'd'");
    if (!j.contains("space") || !j["space"].is_string())
        throw std::invalid_argument("coefficient file needs a string field 'space'");
    if (!j.contains("coefficients") || !j["coefficients"].is_array())
        throw std::invalid_argument("coefficient file needs an array field 'coefficients'");

    CoefficientFile file;
    file.d = j["d"].get<int>();
    if (file.d < 2) throw std::invalid_argument("'d' must be at least 2");
    file.space = space_from_string(j["space"].get<std::string>());

    const auto& blocks = j["coefficients"];
    if (blocks.size() != 4)
        throw std::invalid_argument("'coefficients' must hold 4 (a,b) blocks");
    file.table.reserve(static_cast<std::size_t>(4) * file.d);
    for (const auto& block : blocks) {
        if (!block.is_array() || block.size() != static_cast<std::size_t>(file.d))
            throw std::invalid_argument("each coefficient block must hold d entries");
        for (const auto& entry : block) {
            if (!entry.is_array() || entry.size() != 2 ||
                !entry[0].is_number() || !entry[1].is_number())
                throw std::invalid_argument("each coefficient must be a [re, im] pair");
            file.table.emplace_back(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return file;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

CoefficientFile read_coefficient_file(const std::string& path) {
    return parse_coefficient_file(read_text_file(path));
}

BellCoefficients to_coefficients(const CoefficientFile& file) {
    if (file.space == Space::Correlation)
        return BellCoefficients::from_correlation(file.d, file.table);
    return BellCoefficients::from_probability(file.d, file.table);
}

CoefficientFile to_file(const BellCoefficients& c, Space space) {
    CoefficientFile file;
    file.d = c.d();
    file.space = space;
    file.table = space == Space::Correlation ? c.f_table() : c.epsilon_table();
    return file;
}

std::string lr_result_to_json(const LrBoundResult& r) {
    JsonWriter w;
    w.begin_object();
    w.key("bound");
    w.value(r.bound);
    w.key("maximizer_count");
    w.value(static_cast<long long>(r.maximizers.size()));
    if (r.maximizers.size() <= 4096) {
        w.key("maximizers");
        w.begin_array();
        for (const auto& s : r.maximizers) {
            w.begin_array();
            w.value(s.a1);
            w.value(s.a2);
            w.value(s.b1);
            w.value(s.b2);
            w.end_array();
        }
        w.end_array();
    }
    w.end_object();
    return w.str() + "\n";
}

std::string tightness_to_json(const TightnessVerdict& v) {
    JsonWriter w;
    w.begin_object();
    w.key("tight");
    w.value(v.is_tight);
    w.key("rank");
    w.value(v.rank);
    w.key("h");
    w.value(v.h);
    w.key("maximizer_count");
    w.value(v.maximizer_count);
    w.key("lr_bound");
    w.value(v.lr_bound);
    w.end_object();
    return w.str() + "\n";
}

std::string slk_appendix_to_json(const SlkAppendixReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("d");
    w.value(r.d);
    w.key("delta");
    w.value(r.params.delta);
    w.key("eta1");
    w.value(r.params.eta1);
    w.key("eta2");
    w.value(r.params.eta2);
    w.key("trials");
    w.value(r.trials);
    w.key("seed");
    w.value(static_cast<unsigned long long>(r.seed));
    w.key("max_observed");
    w.value(r.max_observed);
    w.key("bound");
    w.value(r.bound);
    w.key("pass");
    w.value(r.pass);
    w.end_object();
    return w.str() + "\n";
}

std::string scan_to_csv(const std::vector<ScanPoint>& scan) {
    std::string out = "gamma,expectation\n";
    for (const auto& p : scan) {
        out += JsonWriter::format_double(p.gamma);
        out += ',';
        out += JsonWriter::format_double(p.value);
        out += '\n';
    }
    return out;
}

} // namespace qbell
