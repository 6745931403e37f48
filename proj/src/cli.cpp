#include "rado/cli.hpp"

#include "rado/conditions.hpp"
#include "rado/report.hpp"
#include "rado/roots.hpp"
#include "rado/text.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rado::cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer for " + what + ", got '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("expected an integer for " + what + ", got '" + s + "'");
    return v;
}

std::pair<long, long> parse_range(const std::string& s, const std::string& what) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument(what + " must be LO:HI, got '" + s + "'");
    const long lo = parse_long(s.substr(0, colon), what), hi = parse_long(s.substr(colon + 1), what);
    if (lo > hi) throw std::invalid_argument(what + " is empty: " + s);
    return {lo, hi};
}

std::vector<long> parse_list(const std::string& s, const std::string& what) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_long(trim(item), what));
    if (out.empty()) throw std::invalid_argument(what + " must be a comma-separated list of integers");
    return out;
}

std::string join(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return "(" + s + ")";
}

std::string cell_text(const Cell& cell) {
    std::string s = "{";
    for (std::size_t i = 0; i < cell.size(); ++i) s += (i ? " " : "") + to_string(cell[i]);
    return s + "}";
}

std::string describe(const CandidateFunctional& c) {
    std::string s = std::string(to_string(c.kind)) + " order " + std::to_string(c.order) + ":";
    for (std::size_t i = 0; i < c.cells.size(); ++i) s += " J" + std::to_string(i) + "=" + cell_text(c.cells[i]);
    if (!c.offsets.empty()) {
        s += " offsets";
        for (std::size_t i = 0; i < c.offsets.size(); ++i) s += (i ? "," : " ") + std::to_string(c.offsets[i]);
    }
    s += " t=(";
    const auto t = scale_to_integers(c.witness);
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].get_str();
    return s + ")";
}

std::string describe(const BrauerCertificate& b) {
    std::string s = "e=" + std::to_string(b.shift) + " template (";
    for (std::size_t i = 0; i < b.slots.size(); ++i) {
        s += i ? ", " : "";
        s += b.slots[i].kind == BrauerSlot::Kind::D ? std::string("d") : "a+" + std::to_string(b.slots[i].j) + "d";
    }
    return s + ")";
}

void print_list(std::ostream& out, const char* title, const std::vector<std::string>& items) {
    if (items.empty()) return;
    out << title << ":\n";
    for (const auto& s : items) out << "  - " << s << "\n";
}

struct Options {
    std::string polynomial;
    bool json = false;
    std::string config_path;
    unsigned long seed = 0;
    AnalysisConfig analysis;
    int colors = 2;
    long long bound = 0;
    std::string coloring;
    bool exclude_trivial = false;
    bool distinct = false;
    std::string kind = "both";
    bool all = false;
    std::string shape = "A";
    std::string p_text = "y";
    std::string q_text;
    std::string d_text = "0";
    long min_value = 2;
    std::string family;
    std::string a_list;
    long ea = 0, eb = 0, ec = 0;
    std::string r_range = "1:10";
    std::string s_range = "1:10";
    std::size_t limit = 50;
};

SolutionOptions solution_options(const Options& o) {
    SolutionOptions s;
    s.allow_repeats = !o.distinct;
    s.exclude_trivial = o.exclude_trivial;
    return s;
}

Json config_json(const Options& o) {
    Json j = to_json(o.analysis);
    j["seed"] = o.seed;
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_analyze(const Options& o, const ParsedInput& in, std::ostream& out) {
    const Verdict v = analyze(in.polynomial, o.analysis);
    const int code = v.outcome == Outcome::Inconclusive ? kExitInconclusive : kExitOk;
    if (o.json) {
        Json j = report_envelope("analyze", in.source, &in.polynomial);
        j["config"] = config_json(o);
        j["result"] = to_json(v);
        j["exit_code"] = code;
        emit(out, j);
        return code;
    }
    out << "polynomial: " << to_string(in.polynomial) << "\n";
    out << "verdict: " << to_string(v.outcome);
    if (!v.routes.empty()) {
        out << " (route:";
        for (auto r : v.routes) out << " " << to_string(r);
        out << ")";
    }
    out << "\n";
    if (v.family.match)
        out << "family: " << to_string(v.family.match->family) << " a=" << v.family.match->a
            << " b=" << v.family.match->b << " c=" << v.family.match->c << " -> "
            << (v.family.match->partition_regular ? "partition regular" : "not partition regular") << " ("
            << v.family.match->reason << ")\n";
    out << "maximal condition:\n";
    for (const auto& e : v.maximal) {
        out << "  q=" << e.q << ": " << to_string(e.status);
        if (e.candidate) out << " via " << describe(*e.candidate) << ", Q(w) = " << e.weighted.to_string();
        out << "\n";
    }
    if (v.minimal_definitive) {
        out << "minimal condition: definitive failure " << (*v.minimal_definitive ? "yes" : "no") << "\n";
        for (const auto& e : v.minimal) {
            out << "  p=" << e.prime << ": " << to_string(e.status);
            if (e.candidate)
                out << " at a=" << e.root->get_str() << " via " << describe(*e.candidate)
                    << ", Q(w) = " << e.weighted.to_string();
            if (e.witness) out << ", unit root " << e.witness->residue.get_str() << " mod " << e.prime << "^" << e.witness->k;
            out << "\n";
        }
    }
    if (!v.certified.empty()) {
        out << "certified functionals:\n";
        for (const auto& c : v.certified) out << "  - " << describe(c) << " [" << describe(*c.certificate) << "]\n";
    }
    print_list(out, "warnings", v.warnings);
    print_list(out, "notes", v.notes);
    return code;
}

int cmd_maximal(const Options& o, const ParsedInput& in, std::ostream& out) {
    std::vector<long> qs;
    for (long q = 2; q <= o.analysis.q_max; ++q) qs.push_back(q);
    if (qs.empty()) throw std::invalid_argument("--qmax must be at least 2");
    const auto entries = check_maximal(in.polynomial, qs, o.analysis.d_max);
    const bool definitive = std::any_of(entries.begin(), entries.end(),
                                        [](const auto& e) { return e.status == MaximalStatus::FailsDefinitively; });
    const bool bounded = std::any_of(entries.begin(), entries.end(),
                                     [](const auto& e) { return e.status == MaximalStatus::FailsWithinBounds; });
    const int code = (bounded && !definitive) ? kExitInconclusive : kExitOk;
    const char* summary = definitive ? "fails definitively" : bounded ? "fails within bounds" : "holds";
    if (o.json) {
        Json j = report_envelope("maximal", in.source, &in.polynomial);
        j["config"] = config_json(o);
        Json rows = Json::array();
        for (const auto& e : entries) rows.push_back(to_json(e));
        j["result"] = {{"summary", summary}, {"entries", rows}};
        j["exit_code"] = code;
        emit(out, j);
        return code;
    }
    out << "maximal condition for " << to_string(in.polynomial) << ": " << summary << "\n";
    for (const auto& e : entries) {
        out << "  q=" << e.q << ": " << to_string(e.status) << " (" << e.candidates_examined << " candidates)";
        if (e.candidate) out << " via " << describe(*e.candidate) << ", Q(w) = " << e.weighted.to_string();
        out << "\n";
    }
    return code;
}

int cmd_minimal(const Options& o, const ParsedInput& in, std::ostream& out) {
    const IntPolynomial& p = in.polynomial;
    std::string inapplicable;
    const MonovariatePoly diag = diagonal(p);
    if (p.is_zero() || diag.is_zero())
        inapplicable = "the diagonal vanishes: every constant tuple is a solution";
    else if (p.constant_term() != 0)
        inapplicable = "nonzero constant term: the minimal condition is not applicable";
    else if (!integer_roots(diag).splits_linearly)
        inapplicable = "the diagonal does not split over Z";
    if (!inapplicable.empty()) {
        if (o.json) {
            Json j = report_envelope("minimal", in.source, &p);
            j["config"] = config_json(o);
            j["result"] = {{"applicable", false}, {"reason", inapplicable}};
            j["exit_code"] = kExitInconclusive;
            emit(out, j);
        } else {
            out << "minimal condition not applicable: " << inapplicable << "\n";
        }
        return kExitInconclusive;
    }
    const bool definitive = definitive_minimal_failure(p, o.analysis.d_max);
    const auto entries = check_minimal(p, primes_up_to(o.analysis.p_max), o.analysis.d_max);
    const bool all_hold = std::all_of(entries.begin(), entries.end(),
                                      [](const auto& e) { return e.status == MinimalStatus::Holds; });
    const int code = (definitive || all_hold) ? kExitOk : kExitInconclusive;
    const char* summary = definitive ? "fails definitively" : all_hold ? "holds" : "fails within bounds";
    if (o.json) {
        Json j = report_envelope("minimal", in.source, &p);
        j["config"] = config_json(o);
        Json rows = Json::array();
        for (const auto& e : entries) rows.push_back(to_json(e));
        j["result"] = {{"applicable", true}, {"summary", summary}, {"definitive_failure", definitive}, {"primes", rows}};
        j["exit_code"] = code;
        emit(out, j);
        return code;
    }
    out << "minimal condition for " << to_string(p) << ": " << summary << "\n";
    for (const auto& e : entries) {
        out << "  p=" << e.prime << ": " << to_string(e.status);
        if (e.candidate)
            out << " at a=" << e.root->get_str() << " via " << describe(*e.candidate)
                << ", Q(w) = " << e.weighted.to_string();
        if (e.witness) out << ", unit root " << e.witness->residue.get_str() << " mod " << e.prime << "^" << e.witness->k;
        out << "\n";
    }
    return code;
}

int cmd_functionals(const Options& o, const ParsedInput& in, std::ostream& out) {
    std::vector<FunctionalKind> kinds;
    if (o.kind == "lower" || o.kind == "both") kinds.push_back(FunctionalKind::Lower);
    if (o.kind == "upper" || o.kind == "both") kinds.push_back(FunctionalKind::Upper);
    if (kinds.empty()) throw std::invalid_argument("--kind must be lower, upper or both");
    Json rows = Json::array();
    std::size_t certified = 0;
    std::ostringstream text;
    for (auto kind : kinds) {
        auto cands = o.all ? candidate_functionals(in.polynomial, kind, o.analysis.d_max)
                           : surviving_candidates(in.polynomial, kind, o.analysis.d_max);
        text << to_string(kind) << " candidates (" << cands.size() << "):\n";
        for (auto& c : cands) {
            const FilterResult f = necessary_filter(c);
            if (!f.pass) {
                c.status = CandidateStatus::FilteredOut;
                c.filter_reason = f.reason;
            } else if (auto cert = brauer_certificate(c, o.analysis.j_max, o.analysis.e_lo, o.analysis.e_hi)) {
                c.certificate = std::move(cert);
                c.status = CandidateStatus::Certified;
                ++certified;
            }
            rows.push_back(to_json(c));
            text << "  " << describe(c);
            if (c.status == CandidateStatus::FilteredOut) text << "  filtered: " << c.filter_reason;
            if (c.certificate) text << "  certified [" << describe(*c.certificate) << "]";
            text << "\n";
        }
    }
    if (o.json) {
        Json j = report_envelope("functionals", in.source, &in.polynomial);
        j["config"] = config_json(o);
        j["result"] = {{"candidates", rows}, {"certified_count", certified}};
        j["exit_code"] = kExitOk;
        emit(out, j);
    } else {
        out << text.str() << "certified: " << certified << "\n";
    }
    return kExitOk;
}

int cmd_search_coloring(const Options& o, const ParsedInput& in, std::ostream& out) {
    const long long n = o.bound > 0 ? o.bound : 10;
    const AvoidingResult r = find_avoiding_coloring(in.polynomial, o.colors, n, solution_options(o));
    if (o.json) {
        Json j = report_envelope("search-coloring", in.source, &in.polynomial);
        j["config"] = {{"colors", o.colors}, {"bound", n}, {"exclude_trivial", o.exclude_trivial},
                       {"distinct", o.distinct}, {"seed", o.seed}};
        Json res = {{"found", r.coloring.has_value()}, {"nodes", r.nodes}, {"hyperedges", r.hyperedges}};
        if (r.coloring) res["coloring"] = *r.coloring;
        j["result"] = res;
        j["exit_code"] = kExitOk;
        emit(out, j);
        return kExitOk;
    }
    if (!r.coloring) {
        out << "none: every " << o.colors << "-colouring of [1, " << n << "] has a monochromatic solution ("
            << r.nodes << " nodes)\n";
        return kExitOk;
    }
    out << "found " << o.colors << "-colouring of [1, " << n << "] avoiding monochromatic solutions:";
    for (int c : *r.coloring) out << " " << c;
    out << "\n";
    return kExitOk;
}

int cmd_check_coloring(const Options& o, const ParsedInput& in, std::ostream& out) {
    if (o.coloring.empty()) throw std::invalid_argument("--coloring is required");
    const Coloring c = parse_coloring_rule(o.coloring);
    const long long n = o.bound > 0 ? o.bound : 100;
    const ColoringCheck r = check_coloring_avoids(in.polynomial, c, n, solution_options(o));
    if (o.json) {
        Json j = report_envelope("check-coloring", in.source, &in.polynomial);
        j["config"] = {{"coloring", to_json(c)}, {"bound", n}, {"exclude_trivial", o.exclude_trivial},
                       {"distinct", o.distinct}, {"seed", o.seed}};
        Json res = {{"avoids", r.avoids}};
        if (r.violation) res["violation"] = to_json(*r.violation);
        j["result"] = res;
        j["exit_code"] = kExitOk;
        emit(out, j);
        return kExitOk;
    }
    if (r.avoids) {
        out << "avoids: " << c.describe() << " has no monochromatic solution in [1, " << n << "]\n";
    } else {
        out << "violated: monochromatic solution " << join(r.violation->assignment) << " under " << c.describe()
            << "\n";
    }
    return kExitOk;
}

int cmd_find_config(const Options& o, std::ostream& out) {
    if (o.coloring.empty()) throw std::invalid_argument("--coloring is required");
    const Coloring c = parse_coloring_rule(o.coloring);
    ConfigFamily f;
    if (o.shape == "A" || o.shape == "a")
        f.shape = ConfigFamily::Shape::A;
    else if (o.shape == "B" || o.shape == "b")
        f.shape = ConfigFamily::Shape::B;
    else
        throw std::invalid_argument("--shape must be A or B");
    f.p = parse_univariate(o.p_text);
    if (!o.q_text.empty()) f.q = parse_univariate(o.q_text);
    try {
        f.d = mpq_class(o.d_text);
        f.d.canonicalize();
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("--d must be a rational number, got '" + o.d_text + "'");
    }
    const long bound = o.bound > 0 ? static_cast<long>(o.bound) : 10;
    const auto w = find_config_witness(c, f, bound, o.min_value);
    const int code = w ? kExitOk : kExitInconclusive;
    if (o.json) {
        Json j = report_envelope("find-config", "", nullptr);
        j["config"] = {{"coloring", to_json(c)},
                       {"shape", f.shape == ConfigFamily::Shape::A ? "A" : "B"},
                       {"p", to_json(f.p)},
                       {"q", f.q ? to_json(*f.q) : Json()},
                       {"d", to_json(f.d)},
                       {"bound", bound},
                       {"min_value", o.min_value}};
        Json res = {{"found", w.has_value()}};
        if (w) res["witness"] = to_json(*w);
        j["result"] = res;
        j["exit_code"] = code;
        emit(out, j);
        return code;
    }
    if (!w) {
        out << "none within bound " << bound << "\n";
        return code;
    }
    out << "witness x=" << w->x.get_str() << " y=" << w->y.get_str() << " colour " << w->color << ": {";
    for (std::size_t i = 0; i < w->elements.size(); ++i) out << (i ? ", " : "") << w->elements[i].get_str();
    out << "}\n";
    return code;
}

int cmd_solutions(const Options& o, const ParsedInput* in, std::ostream& out) {
    std::vector<SolutionInstance> sols;
    IntPolynomial poly;
    std::string source;
    Json config;
    if (!o.family.empty()) {
        ParametrizedFamily f;
        if (o.family == "example-pr") {
            f.kind = ParametrizedFamily::Kind::ExamplePR;
            f.a = parse_list(o.a_list.empty() ? "1,1" : o.a_list, "--a");
        } else if (o.family == "equation2") {
            f.kind = ParametrizedFamily::Kind::Equation2;
            f.ea = o.ea;
            f.eb = o.eb;
            f.ec = o.ec;
        } else {
            throw std::invalid_argument("--family must be example-pr or equation2");
        }
        const auto [r_lo, r_hi] = parse_range(o.r_range, "--r");
        const auto [s_lo, s_hi] = parse_range(o.s_range, "--s");
        auto res = parametrized_solutions(f, r_lo, r_hi, s_lo, s_hi);
        poly = std::move(res.polynomial);
        sols = std::move(res.solutions);
        source = to_string(poly);
        config = {{"family", o.family}, {"r", o.r_range}, {"s", o.s_range}};
    } else {
        if (!in) throw std::invalid_argument("a polynomial or --family is required");
        poly = in->polynomial;
        source = in->source;
        const long long n = o.bound > 0 ? o.bound : 20;
        sols = enumerate_solutions(poly, n, solution_options(o));
        config = {{"bound", n}, {"exclude_trivial", o.exclude_trivial}, {"distinct", o.distinct}};
    }
    config["seed"] = o.seed;
    const std::size_t shown = std::min(sols.size(), o.limit);
    if (o.json) {
        Json j = report_envelope("solutions", source, &poly);
        j["config"] = config;
        Json rows = Json::array();
        for (std::size_t i = 0; i < shown; ++i) rows.push_back(to_json(sols[i]));
        j["result"] = {{"count", sols.size()}, {"solutions", rows}, {"truncated", shown < sols.size()}};
        j["exit_code"] = kExitOk;
        emit(out, j);
        return kExitOk;
    }
    out << sols.size() << " solution(s) of " << to_string(poly) << " = 0\n";
    for (std::size_t i = 0; i < shown; ++i) out << "  " << join(sols[i].assignment) << "\n";
    if (shown < sols.size()) out << "  ... (" << sols.size() - shown << " more; raise --limit)\n";
    return kExitOk;
}

// Finds --config FILE / --config=FILE before parsing so its values can be
// placed ahead of the real flags, which then override them.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty() || args.empty()) return args;
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::vector<std::string> out{args.front()};
    for (const auto& [k, v] : parse_config(f)) out.push_back("--" + k + "=" + v);
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

// A polynomial such as "-x3 + x1*x2" would be read as a short option; a
// leading space hides it from the option parser and is trimmed later.
void shield_negative_polynomials(std::vector<std::string>& args) {
    for (auto& a : args) {
        if (a == "--") return;
        if (a.size() > 1 && a[0] == '-' && a[1] != '-' &&
            std::any_of(a.begin(), a.end(), [](unsigned char c) { return std::isalpha(c); }))
            a.insert(a.begin(), ' ');
    }
}

// Input errors in --json mode still produce a report.
void json_error(std::ostream& out, const std::string& command, const std::string& message,
                std::optional<std::size_t> offset) {
    Json j = report_envelope(command, "", nullptr);
    j["error"] = {{"message", message}};
    if (offset) j["error"]["offset"] = *offset;
    j["exit_code"] = kExitInputError;
    out << j.dump(2) << "\n";
}

}  // namespace

Coloring parse_coloring_rule(const std::string& text) {
    const std::string rule = trim(text);
    for (const auto& [name, inner] : {std::pair{"square", Coloring::Inner::Square},
                                      std::pair{"cube", Coloring::Inner::Cube},
                                      std::pair{"omega", Coloring::Inner::Omega}}) {
        const std::string prefix = std::string(name) + "(";
        if (rule.rfind(prefix, 0) == 0) {
            if (rule.back() != ')') throw std::invalid_argument("unbalanced parentheses in colouring '" + rule + "'");
            return Coloring::pullback(inner, parse_coloring_rule(rule.substr(prefix.size(), rule.size() - prefix.size() - 1)));
        }
    }
    const auto colon = rule.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("unknown colouring rule '" + rule + "'");
    const std::string head = rule.substr(0, colon), rest = rule.substr(colon + 1);
    if (head == "residue") return Coloring::residue(parse_long(rest, "residue modulus"));
    if (head == "lnd") return Coloring::last_nonzero_digit(parse_long(rest, "digit base"));
    if (head == "digits") {
        const auto c2 = rest.find(':');
        if (c2 == std::string::npos) throw std::invalid_argument("digits rule must be digits:BASE:K");
        return Coloring::digit_count(parse_long(rest.substr(0, c2), "digit base"),
                                     static_cast<int>(parse_long(rest.substr(c2 + 1), "colour count")));
    }
    if (head == "explicit") {
        std::vector<int> colors;
        for (long c : parse_list(rest, "explicit colours")) colors.push_back(static_cast<int>(c));
        return Coloring::explicit_colors(std::move(colors));
    }
    throw std::invalid_argument("unknown colouring rule '" + rule + "'");
}

MonovariatePoly parse_univariate(const std::string& text) {
    const IntPolynomial p = parse_polynomial(text).polynomial;
    std::optional<std::size_t> var;
    for (const auto& [alpha, c] : p.terms())
        for (std::size_t i = 0; i < alpha.arity(); ++i)
            if (alpha[i] != 0) {
                if (var && *var != i) throw std::invalid_argument("expected a polynomial in one variable: " + text);
                var = i;
            }
    std::vector<mpz_class> coeffs;
    for (const auto& [alpha, c] : p.terms()) {
        const std::size_t e = var ? alpha[*var] : 0;
        if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
        coeffs[e] += c;
    }
    return MonovariatePoly(std::move(coeffs));
}

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(n) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (key.empty()) throw std::invalid_argument("config line " + std::to_string(n) + ": empty key");
        out[key] = value;
    }
    return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Partition regularity toolkit for polynomial equations", "rado-lab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    auto common = [&](CLI::App* s, bool needs_polynomial) {
        auto* opt = s->add_option("polynomial", o.polynomial, "Polynomial, e.g. \"x + y - 3z\"");
        if (needs_polynomial) opt->required();
        s->add_flag("--json", o.json, "Emit a JSON report");
        s->add_option("--config", o.config_path, "key = value file; flags override its values");
        s->add_option("--seed", o.seed, "Seed echoed into reports");
    };
    auto analysis = [&](CLI::App* s) {
        s->add_option("--qmax", o.analysis.q_max, "Largest q for the maximal condition")->capture_default_str();
        s->add_option("--pmax", o.analysis.p_max, "Largest prime for the minimal condition")->capture_default_str();
        s->add_option("--dmax", o.analysis.d_max, "Largest functional offset")->capture_default_str();
        s->add_option("--jmax", o.analysis.j_max, "Largest template index for certificates")->capture_default_str();
        s->add_option("--emin", o.analysis.e_lo, "Smallest certificate shift")->capture_default_str();
        s->add_option("--emax", o.analysis.e_hi, "Largest certificate shift")->capture_default_str();
    };
    auto solution_flags = [&](CLI::App* s) {
        s->add_flag("--exclude-trivial", o.exclude_trivial, "Ignore constant solutions");
        s->add_flag("--distinct", o.distinct, "Only solutions with pairwise distinct entries");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Decide or probe partition regularity");
    common(analyze_cmd, true);
    analysis(analyze_cmd);
    auto* functionals_cmd = app.add_subcommand("functionals", "Enumerate and certify candidate Rado functionals");
    common(functionals_cmd, true);
    analysis(functionals_cmd);
    functionals_cmd->add_option("--kind", o.kind, "lower, upper or both")->capture_default_str();
    functionals_cmd->add_flag("--all", o.all, "Include candidates rejected by the necessary filter");
    auto* maximal_cmd = app.add_subcommand("maximal", "Check the maximal Rado condition");
    common(maximal_cmd, true);
    analysis(maximal_cmd);
    auto* minimal_cmd = app.add_subcommand("minimal", "Check the minimal Rado condition");
    common(minimal_cmd, true);
    analysis(minimal_cmd);
    auto* search_cmd = app.add_subcommand("search-coloring", "Exhaustive search for an avoiding colouring");
    common(search_cmd, true);
    solution_flags(search_cmd);
    search_cmd->add_option("--colors", o.colors, "Number of colours")->capture_default_str();
    search_cmd->add_option("--bound", o.bound, "Colour [1, N] (default 10)");
    auto* check_cmd = app.add_subcommand("check-coloring", "Check that a colouring avoids monochromatic solutions");
    common(check_cmd, true);
    solution_flags(check_cmd);
    check_cmd->add_option("--coloring", o.coloring, "Colouring rule, e.g. lnd:5 or omega(lnd:5)")->required();
    check_cmd->add_option("--bound", o.bound, "Check [1, N] (default 100)");
    auto* config_cmd = app.add_subcommand("find-config", "Search a monochromatic polynomial configuration");
    common(config_cmd, false);
    config_cmd->add_option("--coloring", o.coloring, "Colouring rule")->required();
    config_cmd->add_option("--shape", o.shape, "A: {x, x+p(y), x+q(y), xy}; B: {x+p(y), x+q(y), xy+x+dy}")
        ->capture_default_str();
    config_cmd->add_option("--p", o.p_text, "p(y), vanishing at 0")->capture_default_str();
    config_cmd->add_option("--q", o.q_text, "q(y), vanishing at 0 (omit to drop x + q(y))");
    config_cmd->add_option("--d", o.d_text, "Rational d (shape B)")->capture_default_str();
    config_cmd->add_option("--bound", o.bound, "Largest x and y (default 10)");
    config_cmd->add_option("--min", o.min_value, "Smallest x and y")->capture_default_str();
    auto* solutions_cmd = app.add_subcommand("solutions", "List positive solutions");
    common(solutions_cmd, false);
    solution_flags(solutions_cmd);
    solutions_cmd->add_option("--bound", o.bound, "Search [1, N]^n (default 20)");
    solutions_cmd->add_option("--limit", o.limit, "Maximum number of solutions printed")->capture_default_str();
    solutions_cmd->add_option("--family", o.family, "Parametrized family: example-pr or equation2");
    solutions_cmd->add_option("--a", o.a_list, "example-pr coefficients a_0,...,a_d");
    solutions_cmd->add_option("--ea", o.ea, "equation2 parameter a");
    solutions_cmd->add_option("--eb", o.eb, "equation2 parameter b");
    solutions_cmd->add_option("--ec", o.ec, "equation2 parameter c");
    solutions_cmd->add_option("--r", o.r_range, "Parameter range LO:HI")->capture_default_str();
    solutions_cmd->add_option("--s", o.s_range, "Parameter range LO:HI")->capture_default_str();

    try {
        std::vector<std::string> args = expand_config(raw_args);
        shield_negative_polynomials(args);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    std::string command;
    for (const auto* sub : app.get_subcommands()) command = sub->get_name();
    auto fail = [&](const std::string& message, std::optional<std::size_t> offset = std::nullopt) {
        err << "error: " << message << "\n";
        if (o.json) json_error(out, command, message, offset);
        return kExitInputError;
    };
    try {
        std::optional<ParsedInput> in;
        o.polynomial = trim(o.polynomial);
        if (!o.polynomial.empty()) in = parse_polynomial(o.polynomial);
        if (analyze_cmd->parsed()) return cmd_analyze(o, *in, out);
        if (functionals_cmd->parsed()) return cmd_functionals(o, *in, out);
        if (maximal_cmd->parsed()) return cmd_maximal(o, *in, out);
        if (minimal_cmd->parsed()) return cmd_minimal(o, *in, out);
        if (search_cmd->parsed()) return cmd_search_coloring(o, *in, out);
        if (check_cmd->parsed()) return cmd_check_coloring(o, *in, out);
        if (config_cmd->parsed()) return cmd_find_config(o, out);
        if (solutions_cmd->parsed()) return cmd_solutions(o, in ? &*in : nullptr, out);
    } catch (const ParseError& e) {
        return fail(e.what(), e.offset());
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    }
    return kExitInputError;
}

}  // namespace rado::cli
