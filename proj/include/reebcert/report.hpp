#ifndef REEBCERT_REPORT_HPP
#define REEBCERT_REPORT_HPP

#include <string>

#include "reebcert/lens.hpp"
#include "reebcert/seifert.hpp"
#include "reebcert/surgery.hpp"

namespace reebcert::report {

enum class Format { Text, Machine };

Format parse_format(const std::string& name);

// Every renderer is a pure function of its inputs; identical inputs give
// byte-identical output in both formats. Machine output is the jsonval
// serialization, text output is ASCII with space-aligned columns.
std::string cfrac_report(const LensSpace& lens, Format format);
std::string lens_count_report(const LensSpace& lens, Format format);
std::string lens_enumerate_report(const LensSpace& lens, Format format);
std::string survey_report(const SurveyReport& survey, bool parallel, Format format);
std::string brieskorn_report(const BrieskornRecord& record, Format format);
std::string diagram_report(const FramedLinkDiagram& diagram, const WeinsteinVerdict& verdict,
                           Format format);

}  // namespace reebcert::report

#endif
