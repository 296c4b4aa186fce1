#ifndef QT_SERIALIZE_HPP
#define QT_SERIALIZE_HPP

#include "qt/measure.hpp"
#include "qt/pade.hpp"
#include "qt/pell.hpp"
#include "qt/quartic.hpp"
#include "qt/thue.hpp"
#include "qt/verify.hpp"

#include "json.hpp"

#include <string>

// JSON and plain-text renderings of every result type. Big integers and
// rationals travel as decimal strings; balls as exact hex midpoint and
// radius plus precision.
namespace qt::io {

using json = nlohmann::ordered_json;

json to_json(const Int& n);
Int int_from_json(const json& j);
json to_json(const RealBall& b);
RealBall ball_from_json(const json& j);
json to_json(const Evidence& e);
Evidence evidence_from_json(const json& j);

json to_json(const pell::PellReport& r);
json to_json(const thue::ThueSolutionSet& s);
json to_json(const quartic::QuarticResult& r);
json to_json(const pade::DefectReport& r);
json to_json(const measure::MeasureCertificate& c);
json to_json(const verify::SuiteReport& r);

pell::PellReport pell_from_json(const json& j);
thue::ThueSolutionSet thue_from_json(const json& j);
quartic::QuarticResult quartic_from_json(const json& j);
pade::DefectReport approx_from_json(const json& j);
measure::MeasureCertificate measure_from_json(const json& j);
verify::SuiteReport suite_from_json(const json& j);

std::string to_text(const pell::PellReport& r);
std::string to_text(const thue::ThueSolutionSet& s);
std::string to_text(const quartic::QuarticResult& r);
std::string to_text(const pade::DefectReport& r);
std::string to_text(const measure::MeasureCertificate& c);
std::string to_text(const verify::SuiteReport& r);

// Two-space indented JSON with a trailing newline.
std::string dump(const json& j);

} // namespace qt::io

#endif
