#ifndef CRMIN_REPORT_HPP
#define CRMIN_REPORT_HPP

#include <string>

#include <json.hpp>

#include "crmin/constancy.hpp"
#include "crmin/finite_type.hpp"
#include "crmin/manifold.hpp"

namespace crmin {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Text, Structured };

// FNV-1a 64-bit over the raw bytes, "fnv1a:xxxxxxxxxxxxxxxx".
std::string input_digest(const std::string& bytes);

Json gaussian_json(const GaussianRational& c);
Json finite_type_json(const FiniteTypeReport& report);
Json certificate_json(const ConstancyCertificate& cert);
Json checks_json(const ModelValidation& validation);

// Structured mode prints the document as indented JSON with stable key
// order; text mode renders the same tree as aligned "key: value" lines.
// Both end with a newline and are byte-deterministic.
std::string render_report(const Json& doc, ReportFormat format);

} // namespace crmin

#endif
