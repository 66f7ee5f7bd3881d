#pragma once

#include <string>
#include <vector>

#include "qbell/coefficients.hpp"
#include "qbell/local_realism.hpp"
#include "qbell/polytope.hpp"
#include "qbell/quantum.hpp"

namespace qbell {

enum class Space { Correlation, Probability };

std::string to_string(Space s);
Space space_from_string(const std::string& s);

/// On-disk form of a coefficient table: one space, four (a,b) blocks of d
/// [re, im] pairs each, block order 11, 12, 21, 22.
struct CoefficientFile {
    int d = 0;
    Space space = Space::Probability;
    CoeffTable table;
};

/// Serialization is deterministic: fixed field order, floats at 12
/// significant digits.
std::string coefficient_file_to_json(const CoefficientFile& file);

/// Throws std::invalid_argument on schema violations and
/// nlohmann::json::exception on malformed JSON.
CoefficientFile parse_coefficient_file(const std::string& json_text);

CoefficientFile read_coefficient_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

BellCoefficients to_coefficients(const CoefficientFile& file);
CoefficientFile to_file(const BellCoefficients& c, Space space);

/// { "bound": ..., "maximizer_count": n, "maximizers": [[A1,A2,B1,B2],...] };
/// the maximizer list is included only when it has at most 4096 entries.
std::string lr_result_to_json(const LrBoundResult& r);

/// { "tight": ..., "rank": ..., "h": ..., "maximizer_count": ..., "lr_bound": ... }
std::string tightness_to_json(const TightnessVerdict& v);

/// { "d", "delta", "eta1", "eta2", "trials", "seed", "max_observed", "bound", "pass" }
std::string slk_appendix_to_json(const SlkAppendixReport& r);

/// CSV with header `gamma,expectation`, one row per grid point, 12
/// significant digits.
std::string scan_to_csv(const std::vector<ScanPoint>& scan);

/// Minimal deterministic JSON emitter used by every writer above: insertion
/// order preserved, doubles formatted with %.12g.
class JsonWriter {
public:
    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& k);
    void value(double v);
    void value(int v);
    void value(long long v);
    void value(unsigned long long v);
    void value(bool v);
    void value(const std::string& v);
    void null_value();

    const std::string& str() const { return out_; }

    static std::string format_double(double v);

private:
    void separate();

    std::string out_;
    bool need_comma_ = false;
};

} // namespace qbell
