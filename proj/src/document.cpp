#include "circ16/document.hpp"

#include "circ16/witness.hpp"

#include <nlohmann/json.hpp>

namespace circ16 {

std::string int_str(const Int& v) { return v.get_str(); }

Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("sign without digits: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("not a decimal integer: " + s);
    return Int(s[0] == '+' ? s.substr(1) : s);
}

Json json_vector(std::span<const Int> v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(int_str(x));
    return arr;
}

Json json_vector(const Vec16& v) { return json_vector(std::span<const Int>(v.data(), 16)); }

Json json_gaussian(const GaussianInt& g) {
    return Json{{"re", int_str(g.re)}, {"im", int_str(g.im)}};
}

Json json_norms(const NormFactorization& nf) {
    Json j;
    j["n1"] = int_str(nf.n1);
    j["n2"] = int_str(nf.n2);
    j["n4"] = int_str(nf.n4);
    j["n8"] = int_str(nf.n8);
    j["n16"] = int_str(nf.n16);
    j["alpha1"] = json_gaussian(nf.alpha1);
    j["alpha2"] = json_gaussian(nf.alpha2);
    j["b"] = json_vector(std::span<const Int>(nf.transforms.b.data(), 4));
    j["c"] = json_vector(std::span<const Int>(nf.transforms.c.data(), 4));
    Json d = Json::array();
    for (const auto& g : nf.transforms.d) d.push_back(json_gaussian(g));
    j["d"] = d;
    j["e"] = json_vector(std::span<const Int>(nf.transforms.e.data(), 8));
    return j;
}

Json json_verdict(const MembershipVerdict& verdict) {
    Json j;
    j["value"] = int_str(verdict.value);
    j["member"] = verdict.member;
    j["reason_kind"] = reason_name(verdict.reason);
    if (verdict.reason_prime) j["reason_prime"] = int_str(*verdict.reason_prime);
    if (verdict.reason == ReasonKind::Thm41Shape) {
        Json decomp = Json::array();
        for (const auto& entry : verdict.decomposition) {
            Json e;
            e["prime"] = int_str(entry.prime);
            e["exponent"] = std::to_string(entry.exponent);
            e["residue_mod8"] = std::to_string(entry.residue_mod8);
            if (entry.klass)
                e["class"] = *entry.klass == Mod8Class::PM3 ? "PM3" : "PM1";
            decomp.push_back(e);
        }
        j["decomposition"] = decomp;
    }
    return j;
}

Json json_plan(const WitnessPlan& plan) {
    Json j;
    j["kind"] = WitnessPlan::kind_name(plan.kind);
    if (!plan.params.empty()) {
        Json params = Json::array();
        for (const Int& p : plan.params) params.push_back(int_str(p));
        j["params"] = params;
    }
    j["claimed_value"] = int_str(plan.claimed_value);
    if (!plan.children.empty()) {
        Json kids = Json::array();
        for (const auto& child : plan.children) kids.push_back(json_plan(child));
        j["children"] = kids;
    }
    return j;
}

Json json_witness_certificate(const MembershipVerdict& verdict, const Vec16& vec) {
    Json j;
    j["value"] = int_str(verdict.value);
    j["vector"] = json_vector(vec);
    if (verdict.plan) j["plan"] = json_plan(*verdict.plan);
    j["verified"] = true;  // build_witness re-checks before anything is emitted
    return j;
}

Json json_spectrum(const SpectrumReport& report) {
    Json j;
    j["order"] = std::to_string(report.box.n);
    j["lo"] = std::to_string(report.box.lo);
    j["hi"] = std::to_string(report.box.hi);
    j["vectors_visited"] = std::to_string(report.vectors_visited);
    j["distinct_values"] = std::to_string(report.witnesses.size());
    Json values = Json::array();
    Json witnesses = Json::object();
    for (const auto& [value, vec] : report.witnesses) {
        std::string key = value.get_str();
        values.push_back(key);
        Json w = Json::array();
        for (long x : vec) w.push_back(std::to_string(x));
        witnesses[key] = w;
    }
    j["values"] = values;
    j["witnesses"] = witnesses;
    return j;
}

Json json_suites(const std::vector<SuiteResult>& suites) {
    Json arr = Json::array();
    for (const auto& s : suites) {
        Json j;
        j["name"] = s.name;
        j["cases"] = std::to_string(s.cases);
        j["hypothesis_hits"] = std::to_string(s.hypothesis_hits);
        j["violations"] = std::to_string(s.violations);
        j["passed"] = s.passed();
        if (!s.detail.empty()) j["detail"] = s.detail;
        arr.push_back(j);
    }
    return arr;
}

Json make_document(const std::string& command, Json inputs, Json result) {
    Json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["result"] = std::move(result);
    return doc;
}

std::string check_witness_certificate(const Json& doc) {
    const Json* cert = &doc;
    if (doc.contains("result")) cert = &doc["result"];
    if (!cert->contains("value") || !cert->contains("vector"))
        return "certificate lacks value/vector fields";
    Int value = parse_int((*cert)["value"].get<std::string>());
    const Json& vec = (*cert)["vector"];
    if (!vec.is_array() || vec.size() != 16) return "vector must hold 16 integers";
    Vec16 v;
    for (int i = 0; i < 16; ++i) v[i] = parse_int(vec[i].get<std::string>());
    Int det = det_bareiss(v);
    if (det != value)
        return "vector determinant " + det.get_str() + " differs from claimed value " +
               value.get_str();
    if (cert->contains("plan")) {
        Int claimed = parse_int((*cert)["plan"]["claimed_value"].get<std::string>());
        if (claimed != value) return "plan claims a different value than the certificate";
    }
    return {};
}

std::string render(const Json& doc, bool pretty) {
    return pretty ? doc.dump(2) + "\n" : doc.dump() + "\n";
}

}  // namespace circ16
