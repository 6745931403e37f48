#include "rado/report.hpp"

#include "rado/text.hpp"

#include <stdexcept>

namespace rado {

Json to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

Json to_json(const mpq_class& q) {
    if (q.get_den() == 1) return to_json(mpz_class(q.get_num()));
    return Json(q.get_str());
}

Json to_json(const MultiIndex& alpha) { return Json(alpha.exponents()); }

Json to_json(const Cell& cell) {
    Json j = Json::array();
    for (const auto& a : cell) j.push_back(to_json(a));
    return j;
}

namespace {

Json cells_json(const std::vector<Cell>& cells) {
    Json j = Json::array();
    for (const auto& c : cells) j.push_back(to_json(c));
    return j;
}

Json witness_json(const std::vector<mpq_class>& t) {
    Json j = Json::array();
    for (const auto& x : t) j.push_back(to_json(x));
    return j;
}

const char* status_name(CandidateStatus s) {
    switch (s) {
    case CandidateStatus::Candidate: return "candidate";
    case CandidateStatus::FilteredOut: return "filtered-out";
    case CandidateStatus::Certified: return "certified";
    }
    return "?";
}

const char* inner_name(Coloring::Inner i) { return to_string(i); }

}  // namespace

Json to_json(const OrderedPartition& p) {
    Json j;
    j["cells"] = cells_json(p.cells);
    j["witness"] = witness_json(p.witness);
    return j;
}

Json to_json(const BrauerCertificate& c) {
    Json j;
    j["shift"] = c.shift;
    Json tmpl = Json::array();
    for (const auto& s : c.slots) {
        Json e;
        e["kind"] = s.kind == BrauerSlot::Kind::D ? "D" : "A";
        e["j"] = s.kind == BrauerSlot::Kind::D ? Json(nullptr) : Json(s.j);
        e["e"] = c.shift;
        tmpl.push_back(e);
    }
    j["template"] = tmpl;
    Json checks = Json::array();
    for (const auto& chk : c.checks) {
        Json e;
        e["fact"] = chk.fact;
        e["difference"] = {{"a", chk.difference.a}, {"d", chk.difference.d}, {"constant", chk.difference.constant}};
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

Json to_json(const CandidateFunctional& c) {
    Json j;
    j["kind"] = to_string(c.kind);
    j["order"] = c.order;
    j["cells"] = cells_json(c.cells);
    j["offsets"] = c.offsets;
    j["witness"] = witness_json(c.witness);
    j["status"] = status_name(c.status);
    if (!c.filter_reason.empty()) j["filter_reason"] = c.filter_reason;
    if (c.certificate) j["certificate"] = to_json(*c.certificate);
    return j;
}

Json to_json(const FilterResult& f) {
    Json j;
    j["pass"] = f.pass;
    j["rules"] = f.rules;
    if (!f.pass) j["reason"] = f.reason;
    return j;
}

Json to_json(const MonovariatePoly& q) {
    Json j;
    j["text"] = q.to_string();
    Json c = Json::array();
    for (const auto& x : q.coefficients()) c.push_back(to_json(x));
    j["coefficients"] = c;
    return j;
}

Json to_json(const PadicApprox& a) {
    return Json{{"p", a.p}, {"k", a.k}, {"residue", to_json(a.residue)}};
}

Json to_json(const MaximalEntry& e) {
    Json j;
    j["q"] = e.q;
    j["status"] = to_string(e.status);
    j["candidates_examined"] = e.candidates_examined;
    if (e.candidate) {
        j["candidate"] = to_json(*e.candidate);
        j["weighted"] = to_json(e.weighted);
    }
    return j;
}

Json to_json(const MinimalEntry& e) {
    Json j;
    j["prime"] = e.prime;
    j["status"] = to_string(e.status);
    j["candidates_examined"] = e.candidates_examined;
    if (e.root) j["root"] = to_json(*e.root);
    if (e.candidate) {
        j["candidate"] = to_json(*e.candidate);
        j["weighted"] = to_json(e.weighted);
    }
    if (e.witness) j["witness"] = to_json(*e.witness);
    return j;
}

Json to_json(const FamilyResult& f) {
    Json j;
    j["matched"] = f.match.has_value();
    if (f.match) {
        const auto& m = *f.match;
        j["family"] = to_string(m.family);
        j["a"] = m.a;
        j["b"] = m.b;
        j["c"] = m.c;
        j["variables"] = m.variables;
        j["sign"] = m.sign;
        j["partition_regular"] = m.partition_regular;
        j["reason"] = m.reason;
    }
    j["open_problem"] = f.open_problem;
    j["note"] = f.note;
    return j;
}

Json to_json(const AnalysisConfig& c) {
    return Json{{"qmax", c.q_max}, {"pmax", c.p_max}, {"dmax", c.d_max},
                {"jmax", c.j_max}, {"emin", c.e_lo},  {"emax", c.e_hi}};
}

Json to_json(const Verdict& v) {
    Json j;
    Json routes = Json::array();
    for (auto r : v.routes) routes.push_back(to_string(r));
    j["verdict"] = {{"outcome", to_string(v.outcome)}, {"routes", routes}};
    j["family"] = to_json(v.family);
    Json maximal = Json::array();
    for (const auto& e : v.maximal) maximal.push_back(to_json(e));
    j["maximal"] = maximal;
    Json minimal;
    minimal["applicable"] = v.minimal_definitive.has_value();
    if (v.minimal_definitive) minimal["definitive_failure"] = *v.minimal_definitive;
    Json primes = Json::array();
    for (const auto& e : v.minimal) primes.push_back(to_json(e));
    minimal["primes"] = primes;
    j["minimal"] = minimal;
    Json certs = Json::array();
    for (const auto& c : v.certified) certs.push_back(to_json(c));
    j["certificates"] = certs;
    j["warnings"] = v.warnings;
    j["notes"] = v.notes;
    j["config"] = to_json(v.config);
    return j;
}

Json to_json(const Coloring& c) {
    Json j;
    switch (c.kind()) {
    case Coloring::Kind::Explicit:
        j["kind"] = "explicit";
        j["colors"] = c.explicit_table();
        break;
    case Coloring::Kind::Residue:
        j["kind"] = "residue";
        j["modulus"] = c.parameter();
        break;
    case Coloring::Kind::LastNonzeroDigit:
        j["kind"] = "last-nonzero-digit";
        j["base"] = c.parameter();
        break;
    case Coloring::Kind::DigitCount:
        j["kind"] = "digit-count";
        j["base"] = c.parameter();
        j["colors"] = c.color_count();
        break;
    case Coloring::Kind::Pullback:
        j["kind"] = "pullback";
        j["inner"] = inner_name(c.inner());
        j["outer"] = to_json(c.outer());
        break;
    }
    j["color_count"] = c.color_count();
    return j;
}

Coloring coloring_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "explicit") return Coloring::explicit_colors(j.at("colors").get<std::vector<int>>());
        if (kind == "residue") return Coloring::residue(j.at("modulus").get<long>());
        if (kind == "last-nonzero-digit") return Coloring::last_nonzero_digit(j.at("base").get<long>());
        if (kind == "digit-count") return Coloring::digit_count(j.at("base").get<long>(), j.at("colors").get<int>());
        if (kind == "pullback") {
            const std::string inner = j.at("inner").get<std::string>();
            Coloring outer = coloring_from_json(j.at("outer"));
            if (inner == "square") return Coloring::pullback(Coloring::Inner::Square, std::move(outer));
            if (inner == "cube") return Coloring::pullback(Coloring::Inner::Cube, std::move(outer));
            if (inner == "omega") return Coloring::pullback(Coloring::Inner::Omega, std::move(outer));
            throw std::invalid_argument("unknown pullback function '" + inner + "'");
        }
        throw std::invalid_argument("unknown colouring kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed colouring rule: ") + e.what());
    }
}

Json to_json(const SolutionInstance& s) {
    return Json{{"assignment", s.assignment}, {"values", s.values}, {"trivial", s.trivial}};
}

Json to_json(const ConfigWitness& w) {
    Json el = Json::array();
    for (const auto& e : w.elements) el.push_back(to_json(e));
    return Json{{"x", to_json(w.x)}, {"y", to_json(w.y)}, {"elements", el}, {"color", w.color}};
}

Json report_envelope(const std::string& command, const std::string& source, const IntPolynomial* p) {
    Json j;
    j["schema"] = kReportSchema;
    j["tool"] = {{"name", "rado-lab"}, {"version", kToolVersion}};
    j["command"] = command;
    if (p) {
        j["input"] = {{"source", source}, {"polynomial", to_string(*p)}, {"arity", p->arity()}};
    }
    return j;
}

}  // namespace rado
