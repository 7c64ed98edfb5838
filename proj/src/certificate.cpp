#include "gaps/certificate.hpp"

#include <nlohmann/json.hpp>

namespace gaps {

using ordered_json = nlohmann::ordered_json;

CertKind parse_cert_kind(const std::string& name) {
    if (name == "basic") return CertKind::basic;
    if (name == "improved") return CertKind::improved;
    if (name == "discriminant") return CertKind::discriminant;
    if (name == "sparse") return CertKind::sparse;
    throw std::invalid_argument("unknown certificate kind: " + name);
}

std::string cert_kind_name(CertKind kind) {
    switch (kind) {
        case CertKind::basic: return "basic";
        case CertKind::improved: return "improved";
        case CertKind::discriminant: return "discriminant";
        case CertKind::sparse: return "sparse";
    }
    throw std::logic_error("bad kind");
}

Int GapCertificate::target(std::uint64_t j) const {
    if (kind == CertKind::sparse) return y + pow_int(Int(j), static_cast<unsigned>(d));
    return y + j;
}

std::string to_canonical_json(const GapCertificate& cert) {
    ordered_json doc;
    doc["kind"] = cert_kind_name(cert.kind);
    doc["k"] = cert.k;
    ordered_json params = ordered_json::object();
    switch (cert.kind) {
        case CertKind::basic:
            break;
        case CertKind::improved:
            params["level"] = cert.level;
            break;
        case CertKind::discriminant:
            params["D"] = cert.D.str();
            params["r"] = cert.r.str();
            params["t"] = cert.t;
            params["L"] = cert.L.str();
            params["band_coverage_proven"] = cert.band_coverage_proven;
            break;
        case CertKind::sparse:
            params["d"] = cert.d;
            params["d_prime"] = cert.d_prime;
            params["twos_exponent"] = cert.twos_exponent;
            break;
    }
    doc["params"] = std::move(params);
    doc["P"] = cert.P.str();
    doc["y"] = cert.y.str();
    ordered_json conditions = ordered_json::array();
    for (const auto& c : cert.conditions) {
        ordered_json entry;
        entry["p"] = c.p.str();
        entry["beta"] = c.beta;
        entry["residue"] = c.residue.str();
        conditions.push_back(std::move(entry));
    }
    doc["conditions"] = std::move(conditions);
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : cert.witnesses) {
        ordered_json entry;
        entry["j"] = w.j;
        if (w.kind == Witness::Kind::prime_power) {
            entry["type"] = "prime_power";
            entry["p"] = w.p.str();
            entry["gamma"] = w.gamma;
        } else {
            entry["type"] = "dyadic";
            entry["a"] = w.a;
            entry["b"] = w.b;
        }
        witnesses.push_back(std::move(entry));
    }
    doc["witnesses"] = std::move(witnesses);
    return doc.dump(2) + "\n";
}

GapCertificate certificate_from_json(const std::string& json_text) {
    ordered_json doc = ordered_json::parse(json_text);
    GapCertificate cert;
    cert.kind = parse_cert_kind(doc.at("kind").get<std::string>());
    cert.k = doc.at("k").get<std::uint64_t>();
    const auto& params = doc.at("params");
    switch (cert.kind) {
        case CertKind::basic:
            break;
        case CertKind::improved:
            cert.level = params.at("level").get<unsigned>();
            break;
        case CertKind::discriminant:
            cert.D = Int(params.at("D").get<std::string>());
            cert.r = Int(params.at("r").get<std::string>());
            cert.t = params.at("t").get<unsigned>();
            cert.L = Int(params.at("L").get<std::string>());
            cert.band_coverage_proven = params.at("band_coverage_proven").get<bool>();
            break;
        case CertKind::sparse:
            cert.d = params.at("d").get<std::uint64_t>();
            cert.d_prime = params.at("d_prime").get<std::uint64_t>();
            cert.twos_exponent = params.at("twos_exponent").get<unsigned>();
            break;
    }
    cert.P = Int(doc.at("P").get<std::string>());
    cert.y = Int(doc.at("y").get<std::string>());
    for (const auto& entry : doc.at("conditions")) {
        PrimeCondition c;
        c.p = Int(entry.at("p").get<std::string>());
        c.beta = entry.at("beta").get<unsigned>();
        c.residue = Int(entry.at("residue").get<std::string>());
        cert.conditions.push_back(std::move(c));
    }
    for (const auto& entry : doc.at("witnesses")) {
        Witness w;
        w.j = entry.at("j").get<std::uint64_t>();
        std::string type = entry.at("type").get<std::string>();
        if (type == "prime_power") {
            w.kind = Witness::Kind::prime_power;
            w.p = Int(entry.at("p").get<std::string>());
            w.gamma = entry.at("gamma").get<unsigned>();
        } else if (type == "dyadic") {
            w.kind = Witness::Kind::dyadic;
            w.a = entry.at("a").get<unsigned>();
            w.b = entry.at("b").get<std::uint64_t>();
        } else {
            throw std::invalid_argument("unknown witness type: " + type);
        }
        cert.witnesses.push_back(std::move(w));
    }
    return cert;
}

} // namespace gaps
