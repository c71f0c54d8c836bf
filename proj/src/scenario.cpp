#include "charp/scenario.hpp"

#include "charp/errors.hpp"
#include "charp/parse.hpp"
#include "charp/util.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace charp {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Split at separators outside parentheses; every piece must be nonempty.
std::vector<std::string> split_top(const std::string& s, char sep, int line) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    for (const auto& part : out)
        if (part.empty()) throw ParseError("empty list entry", line, 1);
    return out;
}

bool parse_bool(const std::string& s, int line) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError("expected true or false, got '" + s + "'", line, 1);
}

std::int64_t parse_int(const std::string& s, int line) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != s.size()) throw ParseError("expected an integer, got '" + s + "'", line, 1);
    return v;
}

Polynomial parse_poly_at(const std::string& text, const Ring& ring, int line) {
    try {
        return parse_polynomial(text, ring);
    } catch (const ParseError& e) {
        throw ParseError("in '" + text + "': " + e.what(), line, 1);
    }
}

Ideal parse_ideal_at(const std::string& text0, const Ring& ring, int line) {
    const std::string text = trim(text0);
    if (text == "m") {
        std::vector<std::size_t> idxs(ring->nvars());
        for (std::size_t i = 0; i < idxs.size(); ++i) idxs[i] = i;
        return Ideal::of_variables(ring, idxs);
    }
    if (text == "0") return Ideal::zero(ring);
    if (text == "R" || text == "1") return Ideal::unit(ring);
    if (!text.empty() && text.front() == '(' && text.back() == ')') {
        const std::string inner = trim(text.substr(1, text.size() - 2));
        if (inner.empty() || inner == "0") return Ideal::zero(ring);
        std::vector<Polynomial> gens;
        for (const auto& part : split_top(inner, ',', line))
            gens.push_back(parse_poly_at(part, ring, line));
        return Ideal(ring, std::move(gens));
    }
    throw ParseError("unreadable ideal literal '" + text + "'", line, 1);
}

MultSet parse_multset_at(const std::string& text0, const Ring& ring, int line) {
    const std::string text = trim(text0);
    if (text == "RCirc") return MultSet::r_circ();
    if (text == "One") return MultSet::one();
    if (text.rfind("powers(", 0) == 0 && text.back() == ')')
        return MultSet::powers(parse_poly_at(text.substr(7, text.size() - 8), ring, line));
    if (text.rfind("complement(", 0) == 0 && text.back() == ')') {
        const std::string inner = trim(text.substr(11, text.size() - 12));
        std::vector<Ideal> primes;
        if (!inner.empty())
            for (const auto& part : split_top(inner, ';', line))
                primes.push_back(parse_ideal_at(part, ring, line));
        return MultSet::complement(std::move(primes));
    }
    throw ParseError("unknown multiplicative set '" + text + "'", line, 1);
}

const std::map<std::string, std::set<std::string>>& task_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"fpure-check", {"expect_fpure", "expect_u"}},
        {"special-ideals",
         {"expect_member_count", "expect_primes", "expect_primes_contain",
          "expect_members_contain", "expect_exhaustive"}},
        {"s-test-ideal", {"S", "expect"}},
        {"realize", {"target", "expect_kind", "expect_avoid"}},
        {"tight-closure",
         {"r", "a_test", "S", "levels", "expect", "expect_certificate",
          "expect_witness_level"}},
        {"chain", {"max_steps", "expect_chain"}},
        {"skewmod-crosscheck",
         {"a_test", "S", "levels", "degree_cap", "expect_contains", "expect_dimension"}},
    };
    return keys;
}

struct Entry {
    std::string value;
    int line;
};

std::optional<Entry> find_key(const ScenarioTask& t, const std::string& key) {
    for (const auto& [k, v, ln] : t.entries)
        if (k == key) return Entry{v, ln};
    return std::nullopt;
}

Entry need_key(const ScenarioTask& t, const std::string& key, const std::string& source) {
    if (auto e = find_key(t, key)) return *e;
    throw DomainError("[" + t.kind + "] requires '" + key + "' (" + source + " line " +
                      std::to_string(t.line) + ")");
}

struct Checks {
    json arr = json::array();
    bool ok = true;
    void add(const std::string& name, const std::string& expected, const std::string& got) {
        const bool good = expected == got;
        arr.push_back({{"name", name}, {"expected", expected}, {"got", got}, {"ok", good}});
        ok = ok && good;
    }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Canonical text for a set of ideals: sorted labels, "; "-joined.
std::string ideal_set_text(std::vector<Ideal> set) {
    std::sort(set.begin(), set.end(), [](const Ideal& a, const Ideal& b) {
        return compare(a, b) == std::strong_ordering::less;
    });
    std::vector<std::string> labels;
    for (const auto& q : set) labels.push_back(q.label());
    return join(labels, "; ");
}

json strip_volatile(const json& j) {
    if (j.is_object()) {
        json out = json::object();
        for (const auto& [k, v] : j.items()) {
            if (k == "time_ms" || k == "digest") continue;
            out[k] = strip_volatile(v);
        }
        return out;
    }
    if (j.is_array()) {
        json out = json::array();
        for (const auto& v : j) out.push_back(strip_volatile(v));
        return out;
    }
    return j;
}

} // namespace

Scenario parse_scenario(const std::string& text, const std::string& source_name) {
    Scenario sc;
    sc.source = source_name;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    ScenarioTask* cur = nullptr;
    std::set<std::string> seen_header;
    bool have_p = false, have_vars = false, have_a = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("unterminated section header", lineno, static_cast<int>(line.size()));
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (task_keys().find(name) == task_keys().end())
                throw ParseError("unknown task '" + name + "'", lineno, 1);
            sc.tasks.push_back(ScenarioTask{name, lineno, {}});
            cur = &sc.tasks.back();
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", lineno, 1);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", lineno, 1);
        if (cur == nullptr) {
            if (!seen_header.insert(key).second)
                throw ParseError("duplicate header key '" + key + "'", lineno, 1);
            if (key == "title") {
                sc.title = val;
            } else if (key == "p") {
                sc.p = parse_int(val, lineno);
                have_p = true;
            } else if (key == "vars") {
                for (const auto& v : split_top(val, ',', lineno)) sc.vars.push_back(v);
                have_vars = true;
            } else if (key == "a") {
                sc.a_text = val;
                sc.a_line = lineno;
                have_a = true;
            } else if (key == "a_prime") {
                sc.a_prime = parse_bool(val, lineno);
            } else if (key == "a_radical") {
                sc.check_radical = parse_bool(val, lineno);
            } else if (key == "seeds") {
                for (const auto& v : split_top(val, ';', lineno)) {
                    sc.seed_texts.push_back(v);
                    sc.seed_lines.push_back(lineno);
                }
            } else {
                throw ParseError("unknown header key '" + key + "'", lineno, 1);
            }
        } else {
            const auto& allowed = task_keys().at(cur->kind);
            if (allowed.find(key) == allowed.end())
                throw ParseError("unknown key '" + key + "' in [" + cur->kind + "]", lineno, 1);
            if (find_key(*cur, key))
                throw ParseError("duplicate key '" + key + "' in [" + cur->kind + "]", lineno, 1);
            cur->entries.emplace_back(key, val, lineno);
        }
    }
    if (!have_p) throw ParseError("missing required header 'p'", lineno, 1);
    if (!have_vars) throw ParseError("missing required header 'vars'", lineno, 1);
    if (!have_a) throw ParseError("missing required header 'a'", lineno, 1);
    return sc;
}

std::string report_digest(const nlohmann::json& report) {
    const std::uint64_t h = fnv1a(strip_volatile(report).dump());
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

nlohmann::json run_scenario(const Scenario& sc, const RunOptions& opt) {
    const Ring ring = make_ring(sc.p, sc.vars);
    Ideal a = parse_ideal_at(sc.a_text, ring, sc.a_line);
    if (sc.a_prime) a = a.with_prime_flag(true);
    PresentationOptions popt;
    popt.check_radical = sc.check_radical;
    for (std::size_t i = 0; i < sc.seed_texts.size(); ++i)
        popt.seeds.push_back(parse_ideal_at(
            sc.seed_texts[i], ring,
            i < sc.seed_lines.size() ? sc.seed_lines[i] : 1));
    RingPresentation pres(ring, a, popt);

    json report = json::object();
    {
        json scen = json::object();
        scen["source"] = sc.source;
        if (!sc.title.empty()) scen["title"] = sc.title;
        scen["p"] = sc.p;
        scen["vars"] = sc.vars;
        scen["a"] = pres.defining_ideal().label();
        report["scenario"] = scen;
    }
    {
        json notes = json::array();
        notes.push_back("complete local rings are proxied by graded polynomial presentations; "
                        "the bundled data is homogeneous, so lattices and chains agree with the "
                        "complete case");
        if (!pres.defining_ideal().is_zero() && !pres.defining_ideal().is_monomial())
            notes.push_back("coefficients are reported over the prime field F_" +
                            std::to_string(sc.p));
        for (const auto& w : pres.warnings()) notes.push_back(w);
        report["notes"] = notes;
    }

    std::optional<SpecialIdealLattice> lat_store;
    auto lattice = [&]() -> const SpecialIdealLattice& {
        if (!lat_store) lat_store.emplace(special_ideal_lattice(pres));
        return *lat_store;
    };

    // Ideal literals in tasks describe ideals of the quotient ring, so every
    // parse folds in the defining ideal; "0" names the defining ideal itself.
    auto qideal = [&](const std::string& text, int line) {
        return (parse_ideal_at(text, ring, line) + pres.defining_ideal()).canonical();
    };

    bool all_ok = true;
    json tasks = json::array();
    for (const auto& task : sc.tasks) {
        const auto t0 = std::chrono::steady_clock::now();
        json jt = json::object();
        jt["kind"] = task.kind;
        json result = json::object();
        Checks checks;

        if (task.kind == "fpure-check") {
            result["fpure"] = pres.is_f_pure();
            result["colon"] = pres.colon_ideal().label();
            if (pres.certificate()) result["u"] = pres.certificate()->to_string();
            if (auto e = find_key(task, "expect_fpure"))
                checks.add("fpure", bool_text(parse_bool(e->value, e->line)),
                           bool_text(pres.is_f_pure()));
            if (auto e = find_key(task, "expect_u")) {
                const Polynomial want = parse_poly_at(e->value, ring, e->line);
                checks.add("u", want.to_string(),
                           pres.certificate() ? pres.certificate()->to_string() : "-");
            }
        } else if (task.kind == "special-ideals") {
            const auto& lat = lattice();
            result["member_count"] = lat.members.size();
            result["edge_count"] = lat.edges.size();
            result["exhaustive"] = lat.exhaustive;
            json mm = json::array();
            for (const auto& b : lat.members) mm.push_back(display_label(pres, b));
            result["members"] = mm;
            json pp = json::array();
            for (const auto& q : lat.primes) pp.push_back(display_label(pres, q));
            result["primes"] = pp;
            if (!lat.warnings.empty()) result["warnings"] = lat.warnings;
            checks.add("lattice_invariants", "clean", [&] {
                const auto v = verify_lattice(pres, lat);
                return v.empty() ? std::string("clean") : join(v, "; ");
            }());
            if (auto e = find_key(task, "expect_member_count"))
                checks.add("member_count", std::to_string(parse_int(e->value, e->line)),
                           std::to_string(lat.members.size()));
            if (auto e = find_key(task, "expect_primes")) {
                std::vector<Ideal> want;
                for (const auto& part : split_top(e->value, ';', e->line))
                    want.push_back(qideal(part, e->line));
                checks.add("primes", ideal_set_text(std::move(want)), ideal_set_text(lat.primes));
            }
            if (auto e = find_key(task, "expect_primes_contain"))
                for (const auto& part : split_top(e->value, ';', e->line)) {
                    const Ideal q = qideal(part, e->line);
                    const bool hit = std::any_of(lat.primes.begin(), lat.primes.end(),
                                                 [&](const Ideal& b) { return b.equals(q); });
                    checks.add("prime present: " + q.label(), "present",
                               hit ? "present" : "missing");
                }
            if (auto e = find_key(task, "expect_members_contain"))
                for (const auto& part : split_top(e->value, ';', e->line)) {
                    const Ideal q = qideal(part, e->line);
                    const bool hit = std::any_of(lat.members.begin(), lat.members.end(),
                                                 [&](const Ideal& b) { return b.equals(q); });
                    checks.add("member present: " + q.label(), "present",
                               hit ? "present" : "missing");
                }
            if (auto e = find_key(task, "expect_exhaustive"))
                checks.add("exhaustive", bool_text(parse_bool(e->value, e->line)),
                           bool_text(lat.exhaustive));
        } else if (task.kind == "s-test-ideal") {
            const Entry se = need_key(task, "S", sc.source);
            const MultSet s = parse_multset_at(se.value, ring, se.line);
            const Ideal t = s_test_ideal(pres, lattice(), s);
            result["S"] = s.to_string();
            result["ideal"] = display_label(pres, t);
            if (auto e = find_key(task, "expect")) {
                const Ideal want = qideal(e->value, e->line);
                checks.add("ideal", display_label(pres, want), display_label(pres, t));
            }
        } else if (task.kind == "realize") {
            const Entry te = need_key(task, "target", sc.source);
            const Ideal target = qideal(te.value, te.line);
            const MultSet s = realize_as_s_test_ideal(pres, lattice(), target);
            const bool is_one = s.kind() == MultSet::Kind::one;
            result["kind"] = is_one ? "One" : "complement";
            result["S"] = s.to_string();
            if (!is_one) {
                json av = json::array();
                for (const auto& q : s.avoided_primes()) av.push_back(display_label(pres, q));
                result["avoid"] = av;
            }
            if (auto e = find_key(task, "expect_kind"))
                checks.add("kind", e->value, is_one ? "One" : "complement");
            if (auto e = find_key(task, "expect_avoid")) {
                std::vector<Ideal> want;
                for (const auto& part : split_top(e->value, ';', e->line))
                    want.push_back(qideal(part, e->line));
                checks.add("avoid", ideal_set_text(std::move(want)),
                           is_one ? "-" : ideal_set_text(s.avoided_primes()));
            }
        } else if (task.kind == "tight-closure") {
            const Entry re = need_key(task, "r", sc.source);
            const Entry ae = need_key(task, "a_test", sc.source);
            const Polynomial r = parse_poly_at(re.value, ring, re.line);
            const Ideal at = qideal(ae.value, ae.line);
            MultSet s = MultSet::r_circ();
            if (auto e = find_key(task, "S")) s = parse_multset_at(e->value, ring, e->line);
            int levels = opt.levels;
            if (auto e = find_key(task, "levels"))
                levels = static_cast<int>(parse_int(e->value, e->line));
            const MembershipVerdict v = tight_closure_membership(pres, lattice(), r, at, s, levels);
            result["S"] = s.to_string();
            result["r"] = r.to_string();
            result["a_test"] = at.label();
            result["status"] = to_string(v.status);
            result["reason"] = v.reason;
            if (v.witness_level >= 0) result["witness_level"] = v.witness_level;
            if (v.bound >= 0) result["bound"] = v.bound;
            if (v.certificate) result["certificate"] = v.certificate->to_string();
            if (auto e = find_key(task, "expect"))
                checks.add("status", e->value, to_string(v.status));
            if (auto e = find_key(task, "expect_certificate"))
                checks.add("certificate", parse_poly_at(e->value, ring, e->line).to_string(),
                           v.certificate ? v.certificate->to_string() : "-");
            if (auto e = find_key(task, "expect_witness_level"))
                checks.add("witness_level", std::to_string(parse_int(e->value, e->line)),
                           std::to_string(v.witness_level));
        } else if (task.kind == "chain") {
            int max_steps = 16;
            if (auto e = find_key(task, "max_steps"))
                max_steps = static_cast<int>(parse_int(e->value, e->line));
            const IdealChain c = test_ideal_chain(pres, lattice(), max_steps);
            result["chain"] = render_chain(c);
            json nn = json::array();
            for (const auto& n : c.notes) nn.push_back(n);
            result["notes"] = nn;
            if (auto e = find_key(task, "expect_chain"))
                checks.add("chain", e->value, render_chain(c));
        } else if (task.kind == "skewmod-crosscheck") {
            const Entry ae = need_key(task, "a_test", sc.source);
            const Ideal at = qideal(ae.value, ae.line);
            MultSet s = MultSet::r_circ();
            if (auto e = find_key(task, "S")) s = parse_multset_at(e->value, ring, e->line);
            int levels = 4;
            if (auto e = find_key(task, "levels"))
                levels = static_cast<int>(parse_int(e->value, e->line));
            int cap = opt.degree_cap;
            if (auto e = find_key(task, "degree_cap"))
                cap = static_cast<int>(parse_int(e->value, e->line));
            const SkewTruncation t(pres, at, levels, cap);
            const DeltaResult d = delta_s_truncated(t, lattice(), s);
            result["S"] = s.to_string();
            result["certificate"] = d.certificate.to_string();
            result["delta_dimension"] = d.space.dimension();
            result["level0_dimension"] = t.level_basis(0).size();
            if (auto e = find_key(task, "expect_contains"))
                for (const auto& part : split_top(e->value, ';', e->line)) {
                    const Polynomial h = parse_poly_at(part, ring, e->line);
                    checks.add("contains " + h.to_string(), "true",
                               bool_text(contains(t, 0, d.space, h)));
                }
            if (auto e = find_key(task, "expect_dimension"))
                checks.add("delta_dimension", std::to_string(parse_int(e->value, e->line)),
                           std::to_string(d.space.dimension()));
            // Elementwise agreement with the membership routine over the whole
            // capped level-0 space, when that space is small enough to walk.
            const auto& basis = t.level_basis(0);
            std::size_t span = 1;
            bool small = true;
            for (std::size_t i = 0; i < basis.size() && small; ++i) {
                span *= static_cast<std::size_t>(sc.p);
                if (span > 1024) small = false;
            }
            if (small) {
                std::vector<int> digits(basis.size(), 0);
                std::size_t total = 0, matched = 0;
                while (true) {
                    std::vector<Term> ts;
                    for (std::size_t i = 0; i < basis.size(); ++i)
                        if (digits[i] != 0) ts.push_back(Term{basis[i], digits[i]});
                    const Polynomial h = Polynomial::from_terms(ring, std::move(ts));
                    const MembershipVerdict v =
                        tight_closure_membership(pres, lattice(), h, at, s, levels);
                    const bool member = v.status != MembershipStatus::non_member;
                    const bool held = contains(t, 0, d.space, h);
                    ++total;
                    if (member == held) ++matched;
                    std::size_t i = 0;
                    while (i < digits.size()) {
                        if (++digits[i] < sc.p) break;
                        digits[i] = 0;
                        ++i;
                    }
                    if (i == digits.size()) break;
                }
                json agree = json::object();
                agree["classes"] = total;
                agree["matched"] = matched;
                result["agreement"] = agree;
                checks.add("delta_matches_membership", std::to_string(total),
                           std::to_string(matched));
            } else {
                result["agreement"] = "skipped: level-0 space too large to enumerate";
            }
        } else {
            throw DomainError("unknown task kind '" + task.kind + "'");
        }

        const auto t1 = std::chrono::steady_clock::now();
        jt["result"] = result;
        jt["checks"] = checks.arr;
        jt["ok"] = checks.ok;
        jt["time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        all_ok = all_ok && checks.ok;
        tasks.push_back(jt);
    }
    report["tasks"] = tasks;

    if (opt.alt_u) {
        const Polynomial u = parse_poly_at(*opt.alt_u, ring, 1);
        LatticeOptions lo;
        lo.single_u = u;
        const SpecialIdealLattice alt = special_ideal_lattice(pres, lo);
        const SpecialIdealLattice& base = lattice();
        auto missing = [&](const std::vector<Ideal>& from, const std::vector<Ideal>& in) {
            json out = json::array();
            for (const auto& b : from)
                if (!std::any_of(in.begin(), in.end(),
                                 [&](const Ideal& c) { return c.equals(b); }))
                    out.push_back(display_label(pres, b));
            return out;
        };
        json diff = json::object();
        diff["u"] = u.to_string();
        diff["member_count"] = alt.members.size();
        diff["added"] = missing(alt.members, base.members);
        diff["removed"] = missing(base.members, alt.members);
        report["alt_u"] = diff;
    }

    report["ok"] = all_ok;
    report["digest"] = report_digest(report);
    return report;
}

std::string render_text(const nlohmann::json& report) {
    std::ostringstream out;
    const auto& scen = report.at("scenario");
    out << "scenario " << scen.at("source").get<std::string>();
    if (scen.contains("title")) out << "  (" << scen.at("title").get<std::string>() << ")";
    out << "\n";
    out << "p = " << scen.at("p").get<std::int64_t>() << ", a = "
        << scen.at("a").get<std::string>() << "\n";
    for (const auto& n : report.at("notes")) out << "note: " << n.get<std::string>() << "\n";
    for (const auto& jt : report.at("tasks")) {
        out << "[" << jt.at("kind").get<std::string>() << "]  "
            << (jt.at("ok").get<bool>() ? "ok" : "FALSIFIED") << "  ("
            << jt.at("time_ms").get<std::int64_t>() << " ms)\n";
        for (const auto& [k, v] : jt.at("result").items()) {
            out << "  " << k << ": ";
            if (v.is_string()) out << v.get<std::string>();
            else out << v.dump();
            out << "\n";
        }
        for (const auto& c : jt.at("checks").items()) {
            const auto& chk = c.value();
            out << "  check " << chk.at("name").get<std::string>() << ": ";
            if (chk.at("ok").get<bool>())
                out << "ok (" << chk.at("got").get<std::string>() << ")";
            else
                out << "MISMATCH expected=" << chk.at("expected").get<std::string>()
                    << " got=" << chk.at("got").get<std::string>();
            out << "\n";
        }
    }
    if (report.contains("alt_u")) {
        const auto& d = report.at("alt_u");
        out << "alt-u " << d.at("u").get<std::string>() << ": " << d.at("member_count")
            << " members, added " << d.at("added").dump() << ", removed "
            << d.at("removed").dump() << "\n";
    }
    out << "result: " << (report.at("ok").get<bool>() ? "OK" : "FALSIFIED") << "\n";
    out << "digest: " << report.at("digest").get<std::string>() << "\n";
    return out.str();
}

} // namespace charp
