// circ16 -- exact classifier, witness builder and search oracle for integer
// circulant determinants of order 16. One structured JSON document per
// invocation on stdout; see README for the schema and exit codes.

#include "circ16/document.hpp"
#include "circ16/oracle.hpp"
#include "circ16/properties.hpp"
#include "circ16/witness.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>

namespace {

using circ16::Int;
using circ16::Json;

constexpr int kExitMember = 0;
constexpr int kExitNonMember = 1;
constexpr int kExitError = 2;
constexpr int kExitInvariant = 3;

struct GlobalFlags {
    bool pretty = false;
    std::uint64_t seed = 1;
};

void emit(const Json& doc, const GlobalFlags& flags) {
    std::cout << circ16::render(doc, flags.pretty);
}

int emit_error(const std::string& command, const std::string& kind, const std::string& message,
               const GlobalFlags& flags, int code = kExitError) {
    Json result;
    result["error"] = kind;
    result["message"] = message;
    emit(circ16::make_document(command, Json::object(), std::move(result)), flags);
    return code;
}

int run_classify(const std::string& value_str, const GlobalFlags& flags) {
    Int v;
    try {
        v = circ16::parse_int(value_str);
    } catch (const std::invalid_argument& e) {
        return emit_error("classify", "ParseError", e.what(), flags);
    }
    try {
        circ16::MembershipVerdict verdict = circ16::classify(v, flags.seed);
        circ16::verify_verdict(verdict);
        Json inputs{{"value", circ16::int_str(v)}};
        emit(circ16::make_document("classify", inputs, circ16::json_verdict(verdict)), flags);
        return verdict.member ? kExitMember : kExitNonMember;
    } catch (const circ16::IndeterminateFactorization& e) {
        return emit_error("classify", "IndeterminateFactorization", e.what(), flags);
    }
}

int run_witness(const std::string& value_str, const GlobalFlags& flags) {
    Int v;
    try {
        v = circ16::parse_int(value_str);
    } catch (const std::invalid_argument& e) {
        return emit_error("witness", "ParseError", e.what(), flags);
    }
    try {
        circ16::MembershipVerdict verdict = circ16::classify(v, flags.seed);
        circ16::verify_verdict(verdict);
        Json inputs{{"value", circ16::int_str(v)}};
        if (!verdict.member) {
            // Refusal carries the obstruction certificate.
            Json result;
            result["refused"] = true;
            result["verdict"] = circ16::json_verdict(verdict);
            emit(circ16::make_document("witness", inputs, std::move(result)), flags);
            return kExitNonMember;
        }
        verdict.plan = circ16::plan_for(verdict);
        circ16::Vec16 vec = circ16::realize(*verdict.plan);
        if (circ16::det_bareiss(vec) != v)
            throw circ16::InternalInvariantViolation("witness: final determinant mismatch");
        Json result = circ16::json_witness_certificate(verdict, vec);
        result["verdict"] = circ16::json_verdict(verdict);
        emit(circ16::make_document("witness", inputs, std::move(result)), flags);
        return kExitMember;
    } catch (const circ16::IndeterminateFactorization& e) {
        return emit_error("witness", "IndeterminateFactorization", e.what(), flags);
    }
}

int run_det(const std::vector<std::string>& coeff_strs, const GlobalFlags& flags) {
    circ16::Vec16 v;
    try {
        if (coeff_strs.size() != 16) throw std::invalid_argument("det needs 16 coefficients");
        for (int i = 0; i < 16; ++i) v[i] = circ16::parse_int(coeff_strs[i]);
    } catch (const std::invalid_argument& e) {
        return emit_error("det", "ParseError", e.what(), flags);
    }
    Int by_elimination = circ16::det_bareiss(v);
    circ16::NormFactorization nf = circ16::norms(v);
    Json inputs{{"coefficients", circ16::json_vector(v)}};
    if (nf.product() != by_elimination) {
        // Two independent exact routes disagreeing is a bug, never data.
        Json result;
        result["error"] = "InternalInvariantViolation";
        result["det_bareiss"] = circ16::int_str(by_elimination);
        result["det_via_norms"] = circ16::int_str(nf.product());
        emit(circ16::make_document("det", inputs, std::move(result)), flags);
        return kExitInvariant;
    }
    Json result;
    result["det"] = circ16::int_str(by_elimination);
    result["det_bareiss"] = circ16::int_str(by_elimination);
    result["det_via_norms"] = circ16::int_str(nf.product());
    result["norms"] = circ16::json_norms(nf);
    result["verified"] = true;
    emit(circ16::make_document("det", inputs, std::move(result)), flags);
    return kExitMember;
}

int run_enumerate(int n, long lo, long hi, const std::string& find_str, int jobs, bool force,
                  const GlobalFlags& flags) {
    circ16::SearchBox box{n, lo, hi};
    circ16::EnumerateOptions opts;
    opts.jobs = jobs;
    opts.allow_large = force;
    Json inputs;
    inputs["n"] = std::to_string(n);
    inputs["lo"] = std::to_string(lo);
    inputs["hi"] = std::to_string(hi);
    inputs["jobs"] = std::to_string(jobs);
    try {
        if (!find_str.empty()) {
            Int target = circ16::parse_int(find_str);
            inputs["find"] = circ16::int_str(target);
            auto hit = circ16::find_value(target, box, opts);
            Json result;
            result["found"] = hit.has_value();
            if (hit) {
                Json vec = Json::array();
                for (long x : *hit) vec.push_back(std::to_string(x));
                result["vector"] = vec;
                circ16::CoeffVec coeffs(hit->begin(), hit->end());
                result["verified_det"] = circ16::int_str(circ16::det_bareiss(coeffs));
            }
            emit(circ16::make_document("enumerate", inputs, std::move(result)), flags);
            return hit ? kExitMember : kExitNonMember;
        }
        circ16::SpectrumReport report = circ16::spectrum(box, opts);
        emit(circ16::make_document("enumerate", inputs, circ16::json_spectrum(report)), flags);
        return kExitMember;
    } catch (const circ16::BudgetExceeded& e) {
        return emit_error("enumerate", "BudgetExceeded", e.what(), flags);
    } catch (const std::invalid_argument& e) {
        return emit_error("enumerate", "InvalidBox", e.what(), flags);
    }
}

int run_selftest(bool full, std::uint64_t vectors, int jobs, const GlobalFlags& flags) {
    circ16::PropertyOptions opts;
    opts.vectors = vectors;
    opts.seed = flags.seed == 1 ? opts.seed : flags.seed;
    opts.jobs = jobs;
    std::vector<circ16::SuiteResult> suites =
        full ? circ16::selftest_full(opts) : circ16::selftest_quick(opts);
    bool all_passed = true;
    for (const auto& s : suites) all_passed = all_passed && s.passed();
    Json inputs;
    inputs["level"] = full ? "full" : "quick";
    inputs["vectors"] = std::to_string(vectors);
    Json result;
    result["passed"] = all_passed;
    result["suites"] = circ16::json_suites(suites);
    emit(circ16::make_document("selftest", inputs, std::move(result)), flags);
    return all_passed ? kExitMember : kExitInvariant;
}

int run_verify(const std::string& path, const GlobalFlags& flags) {
    Json doc;
    try {
        if (path == "-") {
            doc = Json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) return emit_error("verify", "ParseError", "cannot open " + path, flags);
            doc = Json::parse(in);
        }
    } catch (const std::exception& e) {
        return emit_error("verify", "ParseError", e.what(), flags);
    }
    std::string failure;
    try {
        failure = circ16::check_witness_certificate(doc);
    } catch (const std::exception& e) {
        failure = e.what();
    }
    Json inputs{{"source", path}};
    Json result;
    result["valid"] = failure.empty();
    if (!failure.empty()) result["failure"] = failure;
    emit(circ16::make_document("verify", inputs, std::move(result)), flags);
    return failure.empty() ? kExitMember : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for order-16 integer circulant determinants"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_flag("--pretty", flags.pretty, "indent the output document");
    app.add_option("--seed", flags.seed, "seed for randomized factorization and selftest");

    std::string value_str;
    auto* classify_cmd = app.add_subcommand("classify", "decide spectrum membership of v");
    classify_cmd->add_option("value", value_str, "decimal integer")->required();

    std::string witness_value;
    auto* witness_cmd = app.add_subcommand("witness", "emit a verified witness vector for v");
    witness_cmd->add_option("value", witness_value, "decimal integer")->required();

    std::vector<std::string> coeffs;
    auto* det_cmd = app.add_subcommand("det", "both determinant routes plus the norm split");
    det_cmd->add_option("coefficients", coeffs, "a0 .. a15")->expected(16);

    int n = 16;
    long lo = 0, hi = 0;
    std::string find_str;
    int jobs = 1;
    bool force = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "bounded exhaustive search");
    enum_cmd->add_option("--n", n, "order: 2, 4, 8 or 16")->required();
    enum_cmd->add_option("--lo", lo, "inclusive lower entry bound")->required();
    enum_cmd->add_option("--hi", hi, "inclusive upper entry bound")->required();
    enum_cmd->add_option("--find", find_str, "early-exit on this determinant value");
    enum_cmd->add_option("--jobs", jobs, "worker count");
    enum_cmd->add_flag("--force", force, "allow order-16 bounds beyond [-2,2]");

    bool full = false;
    std::uint64_t vectors = 10'000;
    int st_jobs = 1;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");
    selftest_cmd->add_flag("--full", full, "include the [-1,1]^16 enumeration evidence");
    selftest_cmd->add_option("--vectors", vectors, "random vectors per suite");
    selftest_cmd->add_option("--jobs", st_jobs, "worker count for enumeration suites");

    std::string cert_path;
    auto* verify_cmd = app.add_subcommand("verify", "re-check a witness certificate document");
    verify_cmd->add_option("certificate", cert_path, "path to a JSON document, or -")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(value_str, flags);
        if (witness_cmd->parsed()) return run_witness(witness_value, flags);
        if (det_cmd->parsed()) return run_det(coeffs, flags);
        if (enum_cmd->parsed()) return run_enumerate(n, lo, hi, find_str, jobs, force, flags);
        if (selftest_cmd->parsed()) return run_selftest(full, vectors, st_jobs, flags);
        if (verify_cmd->parsed()) return run_verify(cert_path, flags);
    } catch (const circ16::InternalInvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
