// Copyright (C) 2026 the qcurve authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "qcurve/io.hpp"

#include <fstream>
#include <sstream>

#ifndef QCURVE_NO_NETWORK
#include <httplib.h>
#endif

namespace qcurve {

static std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else cur += c;
    }
    out.push_back(cur);
    return out;
}

static Rat parse_rat(const std::string& s, long line_no) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), strip(s).c_str(), 10) != 0 || strip(s).empty())
        throw ParseError("bad rational '" + s + "'", line_no);
    r.canonicalize();
    return r;
}

CurveRecord parse_curve_line(const std::string& line, long line_no) {
    auto parts = split(line, '|');
    if (parts.size() != 7)
        throw ParseError("expected 7 '|'-separated fields, got " + std::to_string(parts.size()), line_no);
    CurveRecord rec;
    rec.label = strip(parts[0]);
    for (const auto& cs : split(strip(parts[1]), ',')) {
        Rat c = parse_rat(cs, line_no);
        if (!is_integer(c)) throw ParseError("field polynomial coefficients must be integers", line_no);
        rec.field_poly.push_back(c.get_num());
    }
    while (!rec.field_poly.empty() && rec.field_poly.back() == 0) rec.field_poly.pop_back();
    if (rec.field_poly.size() < 2) throw ParseError("field polynomial must have degree >= 1", line_no);
    size_t n = rec.field_poly.size() - 1;
    for (int i = 0; i < 5; i++) {
        for (const auto& cs : split(strip(parts[2 + i]), ';'))
            rec.ainvs[i].push_back(parse_rat(cs, line_no));
        if (rec.ainvs[i].size() != n)
            throw ParseError("a-invariant " + std::to_string(i + 1) + " has " +
                                 std::to_string(rec.ainvs[i].size()) + " coordinates, field degree is " +
                                 std::to_string(n),
                             line_no);
    }
    return rec;
}

std::vector<CurveRecord> parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open curve file " + path);
    std::vector<CurveRecord> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        out.push_back(parse_curve_line(s, line_no));
    }
    return out;
}

std::string record_to_line(const CurveRecord& rec) {
    std::ostringstream os;
    os << rec.label << " | ";
    for (size_t i = 0; i < rec.field_poly.size(); i++) {
        if (i) os << ",";
        os << rec.field_poly[i].get_str();
    }
    for (const auto& a : rec.ainvs) {
        os << " | ";
        for (size_t i = 0; i < a.size(); i++) {
            if (i) os << ";";
            os << a[i].get_str();
        }
    }
    return os.str();
}

EllipticCurveNF record_to_curve(const CurveRecord& rec) {
    auto K = NumberField::make(rec.field_poly);
    auto el = [&](const std::vector<Rat>& c) { return NFElement(K, c); };
    return EllipticCurveNF(el(rec.ainvs[0]), el(rec.ainvs[1]), el(rec.ainvs[2]),
                           el(rec.ainvs[3]), el(rec.ainvs[4]));
}

static nlohmann::ordered_json qpoly_to_json(const QPoly& f) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : f) a.push_back(Rat(c).get_str());
    return a;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v, const std::string& label) {
    nlohmann::ordered_json j;
    if (!label.empty()) j["label"] = label;
    j["answer"] = Verdict::answer_name(v.answer);
    if (v.reason == Verdict::LocalObstruction && v.obstruction) {
        nlohmann::ordered_json r;
        r["p"] = v.obstruction->p.get_str();
        r["clause"] = v.obstruction->clause;
        j["reason"] = r;
    } else {
        j["reason"] = Verdict::reason_name(v.reason);
    }
    j["rigorous"] = v.rigorous;
    if (v.certificate) {
        nlohmann::ordered_json c;
        const Certificate& cert = *v.certificate;
        c["kind"] = cert.kind == Certificate::CM ? "CM" : "NonCM";
        if (cert.kind == Certificate::CM) {
            c["cm_disc"] = cert.cm_disc.get_str();
        } else {
            c["r"] = cert.r;
            c["rho"] = cert.rho;
            c["level"] = cert.level.get_str();
            c["H"] = qpoly_to_json(cert.central_poly);
        }
        j["certificate"] = c;
    }
    j["bounds_used"] = {v.b1_used, v.b2_used};
    nlohmann::ordered_json w;
    if (!v.model_note.empty()) w["model"] = v.model_note;
    if (v.obstruction) {
        const auto& o = *v.obstruction;
        if (!o.valuations.empty()) w["valuations"] = o.valuations;
        auto ints = [](const std::vector<Int>& xs) {
            nlohmann::ordered_json a = nlohmann::ordered_json::array();
            for (const auto& x : xs) a.push_back(x.get_str());
            return a;
        };
        if (!o.traces.empty()) w["traces"] = ints(o.traces);
        if (!o.norms.empty()) w["norms"] = ints(o.norms);
        if (!o.ss_flags.empty()) w["supersingular"] = o.ss_flags;
        if (!o.sqfree_parts.empty()) w["sqfree_parts"] = ints(o.sqfree_parts);
    }
    if (v.core_report) {
        nlohmann::ordered_json cr;
        nlohmann::ordered_json ds = nlohmann::ordered_json::array();
        for (const auto& d : v.core_report->degree_set) ds.push_back(d.get_str());
        cr["degree_set"] = ds;
        cr["full_core"] = v.core_report->full_core;
        if (v.core_report->min_central_degree_upper > 0)
            cr["central_distance_upper"] = v.core_report->min_central_degree_upper.get_str();
        w["core"] = cr;
    }
    if (!w.empty()) j["witnesses"] = w;
    return j;
}

CurveRecord fetch_lmfdb_curve(const std::string& label, const std::string& cache_dir,
                              bool allow_network) {
    if (label.empty() || label.find('/') != std::string::npos)
        throw NotFound("bad label '" + label + "'");
    std::string cache_path = cache_dir + "/" + label + ".curve";
    {
        std::ifstream in(cache_path);
        if (in) {
            std::string line;
            std::getline(in, line);
            return parse_curve_line(strip(line), 1);
        }
    }
    if (!allow_network) throw NetworkDisabled(label);

    httplib::Client cli("www.lmfdb.org");
    cli.set_follow_location(true);
    auto res = cli.Get(("/api/ec_nfcurves/?_format=json&label=" + label).c_str());
    if (!res || res->status != 200) throw NotFound(label + " (http error)");
    auto body = nlohmann::json::parse(res->body, nullptr, false);
    if (body.is_discarded() || !body.contains("data") || body["data"].empty())
        throw NotFound(label);
    const auto& d = body["data"][0];
    CurveRecord rec;
    rec.label = label;
    // field polynomial coefficients, constant first
    if (!d.contains("field_poly") || !d.contains("ainvs")) throw NotFound(label + " (api shape)");
    for (const auto& c : d["field_poly"]) {
        if (c.is_number_integer()) rec.field_poly.push_back(Int((long)c.get<long long>()));
        else rec.field_poly.push_back(Int(c.get<std::string>()));
    }
    // ainvs: "c0,c1,...;...": five ;-separated coordinate vectors
    std::string ai = d["ainvs"].is_string() ? d["ainvs"].get<std::string>() : d["ainvs"].dump();
    auto parts = split(ai, ';');
    if (parts.size() != 5) throw NotFound(label + " (api ainvs shape)");
    for (int i = 0; i < 5; i++)
        for (const auto& cs : split(parts[i], ','))
            rec.ainvs[i].push_back(parse_rat(cs, 0));
    std::ofstream out(cache_path);
    if (out) out << record_to_line(rec) << "\n";
    return rec;
}

} // namespace qcurve
