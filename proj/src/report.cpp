#include "esfrac/report.hpp"

#include <charconv>
#include <sstream>

namespace esfrac::report {

Json integer(u128 v) {
    if (v <= kU64Max) return Json(static_cast<std::uint64_t>(v));
    return Json(to_string(v));
}

std::string join(std::span<const u128> values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += to_string(values[i]);
    }
    return out;
}

Json to_json(const decompose::Decomposition& d) {
    Json arr = Json::array();
    for (u128 x : d.denominators) arr.push_back(integer(x));
    return arr;
}

Json to_json(const parametric::TypeIWitness& w) {
    Json j;
    j["a"] = w.a;
    j["d"] = w.d;
    j["f"] = w.f;
    j["e"] = integer(w.e);
    j["c"] = integer(w.c);
    j["b"] = integer(w.b);
    return j;
}

Json to_json(const parametric::TypeIIWitness& w) {
    Json j;
    j["a"] = w.a;
    j["b"] = w.b;
    j["e"] = w.e;
    j["c"] = w.c;
    j["d"] = w.d;
    return j;
}

Json to_json(const ntheory::DivisorProfile& p) {
    Json j;
    j["n"] = integer(p.n);
    j["tau"] = p.tau;
    j["tau1"] = p.tau1;
    j["tau2"] = p.tau2;
    j["tau3"] = p.tau3;
    j["tau6"] = p.tau6;
    return j;
}

Json to_json(const sieve::ExceptionList& list) {
    Json j;
    j["m"] = list.m;
    j["limit"] = list.limit;
    j["count"] = list.count();
    j["exceptions"] = list.entries;
    return j;
}

Json to_json(const sieve::CoverageReport& r) {
    Json j;
    j["m"] = r.m;
    j["N"] = r.N;
    j["primes_total"] = r.primes_total;
    j["type1_covered"] = r.type1_covered;
    j["type2_covered"] = r.type2_covered;
    j["uncovered"] = r.uncovered;
    j["bound_rhs"] = r.bound_rhs;
    j["uncovered_primes"] = r.uncovered_primes;
    return j;
}

Json to_json(const sieve::FinalThoughtsRow& row) {
    Json j;
    j["m"] = row.m;
    j["m_over_m_plus_1_representable"] = row.m_over_m_plus_1_representable;
    j["short_interval_prime"] = row.short_interval_prime ? Json(*row.short_interval_prime) : Json(nullptr);
    j["by_interval_criterion"] = row.by_interval_criterion;
    return j;
}

Json to_json(const bounds::BoundReport& r) {
    Json j;
    j["m"] = r.m;
    j["N"] = r.N;
    // Q = N/(m-2) as a double; the exact ratio sits alongside
    j["Q"] = r.Q.value();
    j["T"] = r.T ? integer(*r.T) : Json(nullptr);
    j["T1_coarse"] = r.T1_coarse;
    j["T2_coarse"] = r.T2_coarse;
    j["T1_precise"] = r.T1_precise;
    j["T2_precise"] = r.T2_precise;
    j["prime_lower"] = r.prime_lower;
    j["verdict"] = r.verdict;
    j["Q_exact"] = {{"num", r.Q.num}, {"den", r.Q.den}};
    return j;
}

Json to_json(const bounds::ScanRow& row) {
    Json j;
    j["m"] = row.m;
    j["bound"] = row.bound;
    j["prime_lower"] = row.prime_lower;
    j["verdict"] = row.verdict;
    return j;
}

Json to_json(const bounds::DivisorBoundTable& t) {
    Json j;
    j["search_limit"] = t.search_limit;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row;
        row["name"] = r.name;
        row["kappa"] = r.kappa;
        row["empirical_sup"] = r.empirical_sup;
        row["witness_n"] = r.witness_n;
        row["holds"] = r.holds;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["structured_u"] = t.structured_u;
    j["structured_tau"] = t.structured_tau;
    j["structured_ratio"] = t.structured_ratio;
    j["all_hold"] = t.all_hold;
    return j;
}

Json to_json(const bounds::PrimeCountCheck& c) {
    Json j;
    j["x"] = c.x;
    j["count"] = c.count;
    j["lower"] = c.lower;
    j["holds"] = c.holds;
    return j;
}

Json to_json(const bounds::PartialSumAudit& a) {
    Json j;
    j["lhs"] = a.lhs;
    j["rhs"] = a.rhs;
    j["ok"] = a.ok;
    return j;
}

std::string csv_row(const sieve::ExceptionList& list) {
    std::ostringstream os;
    os << list.m << ',' << list.limit << ',' << list.count() << ',';
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
        if (i) os << ';';
        os << list.entries[i];
    }
    return os.str();
}

namespace {

u64 parse_u64(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    u64 v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw DomainError("bad integer in CSV: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

sieve::ExceptionList parse_csv_row(const std::string& line) {
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (int i = 0; i < 3; ++i) {
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw DomainError("CSV row needs four fields");
        fields.push_back(rest.substr(0, comma));
        rest.remove_prefix(comma + 1);
    }
    sieve::ExceptionList out;
    out.m = parse_u64(fields[0]);
    out.limit = parse_u64(fields[1]);
    const u64 count = parse_u64(fields[2]);
    while (!rest.empty() && (rest.back() == '\r' || rest.back() == '\n')) rest.remove_suffix(1);
    while (!rest.empty()) {
        const auto semi = rest.find(';');
        out.entries.push_back(parse_u64(rest.substr(0, semi)));
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
    }
    if (out.entries.size() != count) throw DomainError("CSV row count does not match its list");
    return out;
}

}  // namespace esfrac::report
