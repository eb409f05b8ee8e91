#include "crmin/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

namespace crmin {

std::string input_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

Json gaussian_json(const GaussianRational& c) {
    return Json{{"re", to_string(c.re)}, {"im", to_string(c.im)}};
}

Json finite_type_json(const FiniteTypeReport& report) {
    Json j;
    j["outcome"] = report.finite_type ? "finite_type" : "undetermined";
    if (report.finite_type)
        j["type_length"] = report.type_length;
    else
        j["max_depth_reached"] = report.max_depth_reached;
    Json ranks = Json::array();
    for (const auto& [depth, rank] : report.span_by_depth)
        ranks.push_back(Json{{"depth", depth}, {"rank", rank}});
    j["ranks"] = ranks;
    if (report.finite_type) {
        Json words = Json::array();
        for (const auto& w : report.spanning_words) words.push_back(w.to_string());
        j["spanning_frame"] = words;
    }
    return j;
}

namespace {

Json wronskian_steps_json(const std::vector<WronskianIdentity>& steps) {
    Json arr = Json::array();
    for (const auto& s : steps) {
        Json j;
        j["label"] = s.label;
        j["residual_empty"] = s.holds();
        if (!s.holds())
            j["witness"] = monomial_string(s.residual.frame(), s.residual.leading_term()->first);
        j["certified_precision"] = s.certified_precision;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace

Json certificate_json(const ConstancyCertificate& cert) {
    Json j;
    j["outcome"] = outcome_name(cert.outcome);
    if (cert.outcome == CertificateOutcome::ConstantFound) {
        j["constant"] = gaussian_json(cert.constant);
        j["is_real"] = cert.is_real;
        j["is_nonzero"] = cert.is_nonzero;
        j["certified_precision"] = cert.certified_precision;
    }
    if (cert.witness) {
        j["witness"] = *cert.witness;
        j["witness_coefficient"] = gaussian_json(cert.witness_coefficient);
    }
    if (cert.outcome == CertificateOutcome::InsufficientPrecision)
        j["failed_stage"] = cert.failure_stage;

    Json steps;
    steps["reality_defect"] =
        Json{{"residual_empty", cert.defect_empty}, {"precision", cert.defect_precision}};
    if (cert.finite_type) steps["finite_type"] = finite_type_json(*cert.finite_type);
    if (!cert.first_order.empty()) steps["first_order"] = wronskian_steps_json(cert.first_order);
    if (!cert.bracket_identities.empty())
        steps["bracket_closure"] = wronskian_steps_json(cert.bracket_identities);
    if (cert.frame_inversion_precision > 0)
        steps["frame_inversion"] = Json{{"precision", cert.frame_inversion_precision}};
    if (!cert.coordinate_identities.empty())
        steps["coordinate_identities"] = wronskian_steps_json(cert.coordinate_identities);
    if (cert.induction.monomials_checked > 0 || cert.induction.mismatch_monomial) {
        Json ind;
        ind["monomials_checked"] = cert.induction.monomials_checked;
        ind["mismatch"] =
            cert.induction.mismatch_monomial ? Json(*cert.induction.mismatch_monomial) : Json();
        if (!cert.induction.steps.empty()) ind["trace"] = cert.induction.steps;
        steps["induction"] = std::move(ind);
    }
    j["steps"] = std::move(steps);
    return j;
}

Json checks_json(const ModelValidation& validation) {
    Json arr = Json::array();
    for (const auto& c : validation.checks) {
        Json j;
        j["name"] = c.name;
        j["status"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty()) j[c.pass ? "note" : "witness"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

namespace {

std::string scalar_to_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
}

void render_text(const Json& v, std::ostringstream& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [key, value] : v.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                render_text(value, out, indent + 1);
            } else {
                out << pad << key << ": " << scalar_to_text(value) << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& item : v) {
            if (item.is_object() || item.is_array()) {
                // Compact one-line objects read better for rank/check rows.
                bool flat = item.is_object() &&
                            std::all_of(item.begin(), item.end(),
                                        [](const Json& x) { return !x.is_structured(); });
                if (flat) {
                    out << pad << "-";
                    for (const auto& [key, value] : item.items())
                        out << " " << key << "=" << scalar_to_text(value);
                    out << "\n";
                } else {
                    out << pad << "-\n";
                    render_text(item, out, indent + 1);
                }
            } else {
                out << pad << "- " << scalar_to_text(item) << "\n";
            }
        }
    } else {
        out << pad << scalar_to_text(v) << "\n";
    }
}

} // namespace

std::string render_report(const Json& doc, ReportFormat format) {
    if (format == ReportFormat::Structured) return doc.dump(2) + "\n";
    std::ostringstream out;
    render_text(doc, out, 0);
    return out.str();
}

} // namespace crmin
