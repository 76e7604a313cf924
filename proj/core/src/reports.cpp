#include "wtrunc/reports.hpp"

#include <json.hpp>

#include <sstream>

namespace wtrunc::reports {

namespace {

using json = nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_str(const std::optional<Rat>& r) { return r ? r->str() : ""; }

json check_to_json(const theorems::CheckRow& c) {
    json j;
    j["name"] = c.name;
    j["status"] = c.status;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["note"] = c.note;
    return j;
}

}  // namespace

std::string verification_json(const std::vector<theorems::VerificationEntry>& entries) {
    json arr = json::array();
    for (const auto& e : entries) {
        json je;
        je["theorem"] = e.theorem;
        je["item"] = e.item;
        je["m"] = e.m;
        je["n"] = e.n;
        json checks = json::array();
        for (const auto& c : e.checks) checks.push_back(check_to_json(c));
        je["checks"] = checks;
        arr.push_back(je);
    }
    return arr.dump(2) + "\n";
}

std::string verification_csv(const std::vector<theorems::VerificationEntry>& entries) {
    std::ostringstream os;
    os << "theorem,item,m,n,check,status,lhs,rhs,note\n";
    for (const auto& e : entries)
        for (const auto& c : e.checks)
            os << e.theorem << "," << e.item << "," << e.m << "," << e.n << "," << c.name << ","
               << c.status << "," << csv_escape(c.lhs) << "," << csv_escape(c.rhs) << ","
               << csv_escape(c.note) << "\n";
    return os.str();
}

std::string verification_text(const std::vector<theorems::VerificationEntry>& entries) {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << e.theorem << " item " << e.item << " (m=" << e.m << ", n=" << e.n << ")\n";
        for (const auto& c : e.checks) {
            os << "  [" << c.status << "] " << c.name;
            if (!c.lhs.empty() || !c.rhs.empty()) os << ": " << c.lhs << " vs " << c.rhs;
            if (!c.note.empty()) os << "  (" << c.note << ")";
            os << "\n";
        }
    }
    return os.str();
}

namespace {

json reconcile_item_json(const theorems::ReconcileItem& it) {
    json j;
    j["item"] = it.item;
    j["f"] = it.f.str();
    j["g"] = it.g.str();
    j["h"] = it.h.str();
    j["k"] = opt_str(it.k);
    j["lambda_curve"] = opt_str(it.lambda_curve);
    j["lambda_printed"] = opt_str(it.lambda_printed);
    j["lambda_repair"] = opt_str(it.lambda_repair);
    j["ratio_printed"] = opt_str(it.ratio_printed);
    j["ratio_repair"] = opt_str(it.ratio_repair);
    j["note"] = it.note;
    return j;
}

}  // namespace

std::string reconciliation_json(const std::vector<theorems::ReconciliationReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        json jr;
        jr["m"] = r.m;
        jr["n"] = r.n;
        json items = json::array();
        for (const auto& it : r.items) items.push_back(reconcile_item_json(it));
        jr["items"] = items;
        arr.push_back(jr);
    }
    return arr.dump(2) + "\n";
}

std::string reconciliation_csv(const std::vector<theorems::ReconciliationReport>& reports) {
    std::ostringstream os;
    os << "m,n,item,f,g,h,k,lambda_curve,lambda_printed,lambda_repair,ratio_printed,ratio_repair,"
          "note\n";
    for (const auto& r : reports)
        for (const auto& it : r.items)
            os << r.m << "," << r.n << "," << it.item << "," << it.f.str() << "," << it.g.str()
               << "," << it.h.str() << "," << opt_str(it.k) << "," << opt_str(it.lambda_curve)
               << "," << opt_str(it.lambda_printed) << "," << opt_str(it.lambda_repair) << ","
               << opt_str(it.ratio_printed) << "," << opt_str(it.ratio_repair) << ","
               << csv_escape(it.note) << "\n";
    return os.str();
}

std::string reconciliation_text(const std::vector<theorems::ReconciliationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "coupling reconciliation at (m=" << r.m << ", n=" << r.n << ")\n";
        for (const auto& it : r.items) {
            os << "  item " << it.item << ": f=" << it.f.str() << " g=" << it.g.str()
               << " h=" << it.h.str();
            if (it.k) os << " k=" << it.k->str();
            os << "\n";
            if (!it.note.empty()) {
                os << "    " << it.note << "\n";
                continue;
            }
            os << "    curve " << opt_str(it.lambda_curve) << ", printed "
               << opt_str(it.lambda_printed);
            if (it.ratio_printed)
                os << (*it.ratio_printed == Rat(1) ? " (exact agreement)"
                                                   : " (ratio " + it.ratio_printed->str() + ")");
            os << "\n";
            if (it.lambda_repair) {
                os << "    repair " << it.lambda_repair->str();
                if (it.ratio_repair)
                    os << (*it.ratio_repair == Rat(1) ? " (exact agreement)"
                                                      : " (ratio " + it.ratio_repair->str() + ")");
                os << "\n";
            }
        }
    }
    return os.str();
}

namespace {

std::string param_str(const intersect::ParamValue& p) { return p.str(); }

}  // namespace

std::string intersection_json(const IntersectionReport& rep) {
    json j;
    j["a"] = rep.curve_a;
    j["b"] = rep.curve_b;
    json pts = json::array();
    for (std::size_t i = 0; i < rep.result.points.size(); ++i) {
        const auto& p = rep.result.points[i];
        json jp;
        jp["c"] = p.c ? p.c->str() : "";
        jp["lambda"] = p.lambda ? p.lambda->str() : "";
        jp["preimage_a"] = param_str(p.preimage_a);
        jp["preimage_b"] = param_str(p.preimage_b);
        jp["certified"] = p.certified;
        if (i < rep.records.size())
            jp["status"] = intersect::status_name(rep.records[i].status);
        pts.push_back(jp);
    }
    j["points"] = pts;
    json sp = json::array();
    for (const auto& s : rep.result.spurious) {
        json js;
        js["side"] = std::string(1, s.side);
        js["value"] = s.value.str();
        js["reason"] = s.reason;
        sp.push_back(js);
    }
    j["spurious"] = sp;
    json res;
    res["eliminant_degree"] = rep.result.eliminant.degree();
    res["residual_degree"] = rep.result.residual.degree();
    json brs = json::array();
    for (const auto& b : rep.result.branches) {
        json jb;
        jb["modulus_degree"] = b.modulus.degree();
        jb["gcd_degree"] = b.gcd_degree;
        jb["genuine_degree"] = b.genuine_degree;
        brs.push_back(jb);
    }
    res["branches"] = brs;
    res["constant_gcd"] = rep.result.residual_certificate_constant;
    j["residual"] = res;
    return j.dump(2) + "\n";
}

std::string intersection_csv(const IntersectionReport& rep) {
    std::ostringstream os;
    os << "curve_a,curve_b,preimage_a,preimage_b,c,lambda,status,certified\n";
    for (std::size_t i = 0; i < rep.result.points.size(); ++i) {
        const auto& p = rep.result.points[i];
        os << rep.curve_a << "," << rep.curve_b << "," << csv_escape(param_str(p.preimage_a))
           << "," << csv_escape(param_str(p.preimage_b)) << "," << (p.c ? p.c->str() : "") << ","
           << (p.lambda ? p.lambda->str() : "") << ","
           << (i < rep.records.size() ? intersect::status_name(rep.records[i].status) : "") << ","
           << (p.certified ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string intersection_text(const IntersectionReport& rep) {
    std::ostringstream os;
    os << rep.curve_a << " x " << rep.curve_b << ": " << rep.result.points.size()
       << " intersection point(s)\n";
    for (std::size_t i = 0; i < rep.result.points.size(); ++i) {
        const auto& p = rep.result.points[i];
        os << "  (" << (p.c ? p.c->str() : "?") << ", " << (p.lambda ? p.lambda->str() : "?")
           << ") at a=" << param_str(p.preimage_a) << ", b=" << param_str(p.preimage_b);
        if (i < rep.records.size())
            os << "  [" << intersect::status_name(rep.records[i].status) << "]";
        if (p.certified) os << " certified";
        os << "\n";
    }
    os << "  residual: degree " << rep.result.residual.degree() << ", certificate "
       << (rep.result.residual_certificate_constant ? "constant" : "NOT constant") << "\n";
    return os.str();
}

std::string character_json(const CharacterReport& rep) {
    json j;
    j["n"] = rep.n;
    j["weight"] = rep.weight;
    j["orbifold"] = rep.orbifold.coeffs();
    j["free_even"] = rep.free_even.coeffs();
    if (rep.discrepancy)
        j["first_discrepancy"] = *rep.discrepancy;
    else
        j["first_discrepancy"] = nullptr;
    if (!rep.oracle.empty()) j["oracle"] = rep.oracle;
    j["partial"] = rep.partial;
    if (rep.partial) j["partial_reason"] = rep.partial_reason;
    return j.dump(2) + "\n";
}

std::string character_csv(const CharacterReport& rep) {
    std::ostringstream os;
    os << "weight,orbifold,free_even" << (rep.oracle.empty() ? "" : ",oracle") << "\n";
    for (int w = 0; w <= rep.weight; ++w) {
        os << w << "," << rep.orbifold[w] << "," << rep.free_even[w];
        if (!rep.oracle.empty()) {
            os << ",";
            if (w < static_cast<int>(rep.oracle.size())) os << rep.oracle[static_cast<std::size_t>(w)];
        }
        os << "\n";
    }
    return os.str();
}

std::string character_text(const CharacterReport& rep) {
    std::ostringstream os;
    os << "invariant character, rank " << 2 * rep.n << " (n=" << rep.n
       << "), truncated at weight " << rep.weight << "\n";
    os << "  orbifold:  " << rep.orbifold.str() << "\n";
    os << "  free even: " << rep.free_even.str() << "\n";
    os << "  first discrepancy: "
       << (rep.discrepancy ? std::to_string(*rep.discrepancy) : "NONE") << "\n";
    if (!rep.oracle.empty()) {
        os << "  oracle:    [";
        for (std::size_t i = 0; i < rep.oracle.size(); ++i) {
            if (i) os << ",";
            os << rep.oracle[i];
        }
        os << "]\n";
    }
    if (rep.partial) os << "  PARTIAL: " << rep.partial_reason << "\n";
    return os.str();
}

}  // namespace wtrunc::reports
