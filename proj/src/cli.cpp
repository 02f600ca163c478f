#include "esfrac/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "esfrac/report.hpp"

namespace esfrac::cli {
namespace {

using report::Json;

struct Result {
    Json doc;
    Json table;  // array of flat objects for CSV; empty -> doc as one row
    int exit = kOk;
};

using Handler = std::function<Result()>;

std::string cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += cell(v[i]);
        }
        return s;
    }
    return v.dump();
}

// Nested objects flatten to dotted column names.
void flatten(const Json& obj, const std::string& prefix, Json& into) {
    for (const auto& [k, v] : obj.items()) {
        if (v.is_object()) {
            flatten(v, prefix + k + ".", into);
        } else {
            into[prefix + k] = v;
        }
    }
}

std::string render_csv(const Result& r) {
    Json rows = Json::array();
    if (r.table.is_array()) {
        for (const auto& row : r.table) {
            Json flat = Json::object();
            flatten(row, "", flat);
            rows.push_back(std::move(flat));
        }
    } else {
        Json flat = Json::object();
        flatten(r.doc, "", flat);
        rows.push_back(std::move(flat));
    }
    std::ostringstream os;
    if (rows.empty()) return "";
    bool first = true;
    for (const auto& [k, v] : rows[0].items()) {
        os << (first ? "" : ",") << k;
        first = false;
    }
    os << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [k, v] : row.items()) {
            os << (first ? "" : ",") << cell(v);
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

std::string render_text(const Json& doc) {
    std::ostringstream os;
    for (const auto& [k, v] : doc.items()) {
        if (v.is_array() && !v.empty() && v[0].is_object()) {
            os << k << ":\n";
            for (const auto& row : v) os << "  " << row.dump() << '\n';
        } else {
            os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    }
    return os.str();
}

u64 default_square(u64 m, u64 factor) { return narrow_u64(checked_mul(checked_mul(factor, m), m)); }

bool prime_fast_path(u64 m, u64 n) { return ntheory::is_prime(n) && m % n != 0; }

Json triple_or_null(const std::optional<decompose::Decomposition>& d) {
    return d ? report::to_json(*d) : Json(nullptr);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

// Golden rows: CSV as written by `sieve --format csv`, header lines skipped.
std::optional<sieve::ExceptionList> golden_row(const std::string& path, u64 m) {
    for (const auto& line : read_lines(path)) {
        if (line.empty() || line[0] < '0' || line[0] > '9') continue;
        auto row = report::parse_csv_row(line);
        if (row.m == m) return row;
    }
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Unit-fraction decompositions of m/n: searches, sieves and bound audits", "esfrac"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string output;
    std::size_t chunk = 256;
    app.add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", output, "write here instead of standard output");
    app.add_option("--chunk", chunk, "items per worker hand-out in parallel scans")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));

    Handler handler;
    std::ostream* errp = &err;
    auto scan_options = [&] { return sieve::ScanOptions{0, chunk}; };

    // decompose
    {
        auto* sub = app.add_subcommand("decompose", "find one representation of m/n with j unit fractions");
        auto m = std::make_shared<u64>(), n = std::make_shared<u64>(), min_den = std::make_shared<u64>(1);
        auto j = std::make_shared<unsigned>(3);
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{1}, kU64Max));
        sub->add_option("--n", *n)->required()->check(CLI::Range(u64{1}, kU64Max));
        sub->add_option("--j", *j)->check(CLI::Range(1u, decompose::kMaxTerms));
        sub->add_option("--min-den", *min_den)->check(CLI::Range(u64{1}, kU64Max));
        sub->callback([=, &handler] {
            handler = [=] {
                const auto d = decompose::find_decomposition(*m, *n, *j, *min_den);
                Result r;
                r.doc["m"] = *m;
                r.doc["n"] = *n;
                r.doc["j"] = *j;
                r.doc["found"] = d.has_value();
                r.doc["denominators"] = triple_or_null(d);
                return r;
            };
        });
    }

    // enumerate
    {
        auto* sub = app.add_subcommand("enumerate", "list representations of m/n in lexicographic order");
        auto m = std::make_shared<u64>(), n = std::make_shared<u64>();
        auto j = std::make_shared<unsigned>(3);
        auto cap = std::make_shared<std::size_t>(1000);
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{1}, kU64Max));
        sub->add_option("--n", *n)->required()->check(CLI::Range(u64{1}, kU64Max));
        sub->add_option("--j", *j)->check(CLI::Range(1u, decompose::kMaxTerms));
        sub->add_option("--cap", *cap)->check(CLI::Range(std::size_t{1}, std::size_t{10'000'000}));
        sub->callback([=, &handler] {
            handler = [=] {
                const auto e = decompose::enumerate_decompositions(*m, *n, *j, *cap);
                Result r;
                r.doc["m"] = *m;
                r.doc["n"] = *n;
                r.doc["j"] = *j;
                r.doc["cap"] = *cap;
                r.doc["count"] = e.solutions.size();
                r.doc["truncated"] = e.truncated;
                Json sols = Json::array();
                r.table = Json::array();
                for (const auto& s : e.solutions) {
                    sols.push_back(report::to_json(s));
                    r.table.push_back({{"denominators", report::to_json(s)}});
                }
                r.doc["solutions"] = std::move(sols);
                return r;
            };
        });
    }

    // classify
    {
        auto* sub = app.add_subcommand("classify", "Type I / Type II pattern of a triple for m/n");
        auto m = std::make_shared<u64>(), n = std::make_shared<u64>();
        auto triple = std::make_shared<std::vector<u64>>();
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{1}, kU64Max));
        sub->add_option("--n", *n)->required()->check(CLI::Range(u64{1}, kU64Max));
        sub->add_option("--triple", *triple, "x y z")->required()->expected(3)->check(CLI::Range(u64{1}, kU64Max));
        sub->callback([=, &handler] {
            handler = [=] {
                const std::array<u128, 3> t{(*triple)[0], (*triple)[1], (*triple)[2]};
                Result r;
                r.doc["m"] = *m;
                r.doc["n"] = *n;
                r.doc["triple"] = *triple;
                r.doc["type"] = decompose::to_string(decompose::classify_triple(*m, *n, t));
                return r;
            };
        });
    }

    // type1 / type2
    auto add_witness_cmd = [&](const char* name, bool first_kind) {
        auto* sub = app.add_subcommand(name, first_kind ? "first Type I witness (a, d, f) for m/n"
                                                        : "first Type II witness (a, b, e) for m/n");
        auto m = std::make_shared<u64>(), n = std::make_shared<u64>();
        auto general = std::make_shared<bool>(false);
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{4}, kU64Max));
        sub->add_option("--n", *n)->required()->check(CLI::Range(u64{2}, kU64Max));
        sub->add_flag("--coprime", *general, "enforce the coprimality condition even for prime n");
        sub->callback([=, &handler] {
            handler = [=] {
                const bool rc = *general || !prime_fast_path(*m, *n);
                Result r;
                r.doc["m"] = *m;
                r.doc["n"] = *n;
                r.doc["require_coprime"] = rc;
                if (first_kind) {
                    const auto w = parametric::type1_search(*m, *n, rc);
                    r.doc["found"] = w.has_value();
                    r.doc["witness"] = w ? report::to_json(*w) : Json(nullptr);
                    r.doc["mad"] = w ? report::integer(w->mad(*m)) : Json(nullptr);
                    r.doc["triple"] = w ? report::to_json(parametric::type1_triple(*m, *n, *w)) : Json(nullptr);
                } else {
                    const auto w = parametric::type2_search(*m, *n, rc);
                    r.doc["found"] = w.has_value();
                    r.doc["witness"] = w ? report::to_json(*w) : Json(nullptr);
                    r.doc["mab"] = w ? report::integer(w->mab(*m)) : Json(nullptr);
                    r.doc["triple"] = w ? report::to_json(parametric::type2_triple(*m, *n, *w)) : Json(nullptr);
                }
                return r;
            };
        });
    };
    add_witness_cmd("type1", true);
    add_witness_cmd("type2", false);

    // type1-bound
    {
        auto* sub = app.add_subcommand("type1-bound", "largest m a d over Type I witnesses with a <= b");
        auto m = std::make_shared<u64>(), p = std::make_shared<u64>();
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{4}, kU64Max));
        sub->add_option("--p", *p)->required()->check(CLI::Range(u64{2}, kU64Max));
        sub->callback([=, &handler] {
            handler = [=] {
                const u128 worst = parametric::type1_bound_check(*m, *p);
                const u128 limit = checked_add(checked_mul(2, *p), 1);
                Result r;
                r.doc["m"] = *m;
                r.doc["p"] = *p;
                r.doc["max_mad"] = report::integer(worst);
                r.doc["limit"] = report::integer(limit);
                r.doc["holds"] = worst <= limit;
                r.exit = worst <= limit ? kOk : kClaimViolated;
                return r;
            };
        });
    }

    // sieve
    {
        auto* sub = app.add_subcommand("sieve", "every n <= limit with m/n not a sum of three unit fractions");
        auto m = std::make_shared<u64>(), limit = std::make_shared<u64>();
        auto golden = std::make_shared<std::string>();
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{4}, kU64Max));
        sub->add_option("--limit", *limit)->required()->check(CLI::Range(u64{1}, sieve::kMaxLimit));
        sub->add_option("--golden", *golden, "CSV file of expected rows; mismatch exits 1");
        sub->callback([=, &handler] {
            handler = [=] {
                const auto list = sieve::exceptions_up_to(*m, *limit, scan_options());
                Result r;
                r.doc = report::to_json(list);
                if (!golden->empty()) {
                    const auto expected = golden_row(*golden, *m);
                    if (!expected) throw DomainError("golden file has no row for m = " + std::to_string(*m));
                    std::vector<u64> want;
                    for (u64 e : expected->entries) {
                        if (e <= *limit) want.push_back(e);
                    }
                    if (want != list.entries) {
                        *errp << "esfrac: sieve result differs from golden row for m = " << *m << '\n';
                        r.exit = kClaimViolated;
                    }
                }
                return r;
            };
        });
    }

    // exception-prime
    {
        auto* sub = app.add_subcommand("exception-prime", "smallest non-representable prime in (lo, hi)");
        auto m = std::make_shared<u64>();
        auto lo = std::make_shared<u64>(0), hi = std::make_shared<u64>(0);
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{4}, u64{1} << 31));
        sub->add_option("--lo", *lo, "default m^2");
        sub->add_option("--hi", *hi, "default 2 m^2");
        sub->callback([=, &handler] {
            handler = [=] {
                const u64 a = *lo ? *lo : default_square(*m, 1);
                const u64 b = *hi ? *hi : default_square(*m, 2);
                const auto p = sieve::exceptional_prime_in(*m, a, b);
                Result r;
                r.doc["m"] = *m;
                r.doc["lo"] = a;
                r.doc["hi"] = b;
                r.doc["found"] = p.has_value();
                r.doc["prime"] = p ? Json(*p) : Json(nullptr);
                return r;
            };
        });
    }

    // coverage
    {
        auto* sub = app.add_subcommand("coverage", "Type I / Type II coverage of the primes in (N/2, N]");
        auto m = std::make_shared<u64>(), N = std::make_shared<u64>(0);
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{4}, u64{1} << 31));
        sub->add_option("--N", *N, "default 2 m^2");
        sub->callback([=, &handler] {
            handler = [=] {
                const u64 n = *N ? *N : default_square(*m, 2);
                Result r;
                r.doc = report::to_json(sieve::coverage_counts(*m, n, scan_options()));
                return r;
            };
        });
    }

    // bounds and its modes
    {
        auto* bounds_cmd = app.add_subcommand("bounds", "Type II count T and its upper bounds");
        bounds_cmd->require_subcommand(1);
        bounds_cmd->fallthrough();

        auto add_mN = [](CLI::App* sub, std::shared_ptr<u64> m, std::shared_ptr<u64> N) {
            sub->add_option("--m", *m)->required()->check(CLI::Range(u64{4}, u64{1} << 31));
            sub->add_option("--N", *N, "default 2 m^2");
        };

        {
            auto* sub = bounds_cmd->add_subcommand("t-exact", "exact T(m, N)");
            auto m = std::make_shared<u64>(), N = std::make_shared<u64>(0);
            add_mN(sub, m, N);
            sub->callback([=, &handler] {
                handler = [=] {
                    const u64 n = *N ? *N : default_square(*m, 2);
                    Result r;
                    r.doc["m"] = *m;
                    r.doc["N"] = n;
                    r.doc["T"] = report::integer(bounds::t_exact(*m, n));
                    return r;
                };
            });
        }
        {
            auto* sub = bounds_cmd->add_subcommand("coarse", "closed-form T1 + T2 at N = 2 m^2");
            auto m = std::make_shared<u64>();
            sub->add_option("--m", *m)->required()->check(CLI::Range(u64{18}, u64{1} << 31));
            sub->callback([=, &handler] {
                handler = [=] {
                    const u64 n = default_square(*m, 2);
                    const auto [t1, t2] = bounds::t1_t2_coarse(*m);
                    const double lower = bounds::prime_lower(n);
                    Result r;
                    r.doc["m"] = *m;
                    r.doc["N"] = n;
                    r.doc["T1"] = t1;
                    r.doc["T2"] = t2;
                    r.doc["prime_lower"] = lower;
                    r.doc["verdict"] = (t1 + t2) * (1.0 + bounds::kCompareEps) < lower;
                    return r;
                };
            });
        }
        {
            auto* sub = bounds_cmd->add_subcommand("precise", "partial-sum T1 + T2");
            auto m = std::make_shared<u64>(), N = std::make_shared<u64>(0);
            add_mN(sub, m, N);
            sub->callback([=, &handler] {
                handler = [=] {
                    const u64 n = *N ? *N : default_square(*m, 2);
                    const auto [t1, t2] = bounds::t1_t2_precise(*m, n);
                    const double lower = bounds::prime_lower(n);
                    Result r;
                    r.doc["m"] = *m;
                    r.doc["N"] = n;
                    r.doc["T1"] = t1;
                    r.doc["T2"] = t2;
                    r.doc["prime_lower"] = lower;
                    r.doc["verdict"] = (t1 + t2) * (1.0 + bounds::kCompareEps) < lower;
                    return r;
                };
            });
        }
        {
            auto* sub = bounds_cmd->add_subcommand("scan", "bound versus N/(2 log N) over a range of m");
            auto m_lo = std::make_shared<u64>(), m_hi = std::make_shared<u64>();
            auto mode = std::make_shared<std::string>("precise");
            auto require = std::make_shared<bool>(false);
            sub->add_option("--m-lo", *m_lo)->required()->check(CLI::Range(u64{4}, u64{1} << 31));
            sub->add_option("--m-hi", *m_hi)->required()->check(CLI::Range(u64{4}, u64{1} << 31));
            sub->add_option("--mode", *mode)->check(CLI::IsMember({"coarse", "precise", "exact"}));
            sub->add_flag("--require", *require, "exit 1 unless every verdict is true");
            sub->callback([=, &handler] {
                handler = [=] {
                    const auto md = *mode == "coarse"   ? bounds::Mode::coarse
                                    : *mode == "exact" ? bounds::Mode::exact
                                                       : bounds::Mode::precise;
                    const auto rows = bounds::type2_threshold_scan(*m_lo, *m_hi, md);
                    Result r;
                    r.doc["mode"] = bounds::to_string(md);
                    r.doc["m_lo"] = *m_lo;
                    r.doc["m_hi"] = *m_hi;
                    bool all = true;
                    r.table = Json::array();
                    for (const auto& row : rows) {
                        all = all && row.verdict;
                        r.table.push_back(report::to_json(row));
                    }
                    r.doc["all_true"] = all;
                    r.doc["rows"] = r.table;
                    if (*require && !all) r.exit = kClaimViolated;
                    return r;
                };
            });
        }
        {
            auto* sub = bounds_cmd->add_subcommand("report", "full bound report for one m");
            auto m = std::make_shared<u64>(), N = std::make_shared<u64>(0);
            add_mN(sub, m, N);
            sub->callback([=, &handler] {
                handler = [=] {
                    Result r;
                    r.doc = report::to_json(bounds::bound_report(*m, *N ? std::optional<u64>(*N) : std::nullopt));
                    return r;
                };
            });
        }
        {
            auto* sub = bounds_cmd->add_subcommand("prime-count", "primes in (x/2, x] against x/(2 log x)");
            auto x = std::make_shared<u64>();
            sub->add_option("--x", *x)->required()->check(CLI::Range(u64{3299}, u64{1'000'000'000}));
            sub->callback([=, &handler] {
                handler = [=] {
                    Result r;
                    const auto c = bounds::prime_count_check(*x);
                    r.doc = report::to_json(c);
                    r.exit = c.holds ? kOk : kClaimViolated;
                    return r;
                };
            });
        }
        {
            auto* sub = bounds_cmd->add_subcommand("partial-sum", "sum over n = r (mod k), n <= x, of n^(-alpha) or n^alpha");
            auto k = std::make_shared<u64>(), rr = std::make_shared<u64>();
            auto x = std::make_shared<double>(), alpha = std::make_shared<double>();
            auto form = std::make_shared<std::string>("negative");
            sub->add_option("--k", *k)->required()->check(CLI::Range(u64{1}, u64{1} << 40));
            sub->add_option("--r", *rr)->required()->check(CLI::Range(u64{1}, u64{1} << 40));
            sub->add_option("--x", *x)->required();
            sub->add_option("--alpha", *alpha)->required();
            sub->add_option("--form", *form)->check(CLI::IsMember({"negative", "positive"}));
            sub->callback([=, &handler] {
                handler = [=] {
                    const auto f = *form == "positive" ? bounds::PartialSumForm::positive_power
                                                       : bounds::PartialSumForm::negative_power;
                    const auto a = bounds::partial_sum_audit(*k, *rr, *x, *alpha, f);
                    Result r;
                    r.doc["k"] = *k;
                    r.doc["r"] = *rr;
                    r.doc["x"] = *x;
                    r.doc["alpha"] = *alpha;
                    r.doc["form"] = *form;
                    r.doc["lhs"] = a.lhs;
                    r.doc["rhs"] = a.rhs;
                    r.doc["ok"] = a.ok;
                    r.exit = a.ok ? kOk : kClaimViolated;
                    return r;
                };
            });
        }
    }

    // verify-constants
    {
        auto* sub = app.add_subcommand("verify-constants", "audit the divisor-bound constants up to a limit");
        auto limit = std::make_shared<u64>(1'000'000);
        sub->add_option("--limit", *limit)->check(CLI::Range(u64{10'000}, u64{200'000'000}));
        sub->callback([=, &handler] {
            handler = [=] {
                const auto t = bounds::divisor_constant_audit(*limit, false);
                Result r;
                r.doc = report::to_json(t);
                r.table = r.doc["rows"];
                r.exit = t.all_hold ? kOk : kClaimViolated;
                return r;
            };
        });
    }

    // vaughan-f
    {
        auto* sub = app.add_subcommand("vaughan-f", "residue-class count f_m(p)");
        auto m = std::make_shared<u64>(), p = std::make_shared<u64>();
        sub->add_option("--m", *m)->required()->check(CLI::Range(u64{4}, kU64Max));
        sub->add_option("--p", *p)->required()->check(CLI::Range(u64{2}, kU64Max));
        sub->callback([=, &handler] {
            handler = [=] {
                Result r;
                r.doc["m"] = *m;
                r.doc["p"] = *p;
                r.doc["f"] = bounds::vaughan_f(*m, *p);
                return r;
            };
        });
    }

    // jk-scan
    {
        auto* sub = app.add_subcommand("jk-scan", "which m/(k m + 1) are sums of j unit fractions");
        auto j = std::make_shared<unsigned>();
        auto m_limit = std::make_shared<u64>();
        auto k = std::make_shared<u64>();
        sub->add_option("--j", *j)->required()->check(CLI::Range(1u, decompose::kMaxTerms));
        sub->add_option("--k", *k)->required()->check(CLI::Range(u64{1}, u64{1} << 20));
        sub->add_option("--m-limit", *m_limit)->required()->check(CLI::Range(u64{1}, u64{1} << 20));
        sub->callback([=, &handler] {
            handler = [=] {
                const auto s = decompose::jk_threshold_scan(*j, *k, *m_limit);
                Result r;
                r.doc["j"] = s.j;
                r.doc["k"] = s.k;
                r.doc["m_limit"] = *m_limit;
                r.doc["largest_representable"] =
                    s.largest_representable ? Json(*s.largest_representable) : Json(nullptr);
                r.table = Json::array();
                for (const auto& row : s.rows) {
                    r.table.push_back({{"m", row.m}, {"representable", row.representable}});
                }
                r.doc["rows"] = r.table;
                return r;
            };
        });
    }

    // final-thoughts
    {
        auto* sub = app.add_subcommand("final-thoughts", "m/(m+1) and short-interval primes for a range of m");
        auto m_lo = std::make_shared<u64>(), m_hi = std::make_shared<u64>();
        sub->add_option("--m-lo", *m_lo)->required()->check(CLI::Range(u64{2}, u64{10'000}));
        sub->add_option("--m-hi", *m_hi)->required()->check(CLI::Range(u64{2}, u64{10'000}));
        sub->callback([=, &handler] {
            handler = [=] {
                Result r;
                r.doc["m_lo"] = *m_lo;
                r.doc["m_hi"] = *m_hi;
                r.table = Json::array();
                for (const auto& row : sieve::final_thoughts_scan(*m_lo, *m_hi)) {
                    r.table.push_back(report::to_json(row));
                }
                r.doc["rows"] = r.table;
                return r;
            };
        });
    }

    // threshold
    {
        auto* sub = app.add_subcommand("threshold", "least m beyond which (m^2, 2m^2) must hold an exceptional prime");
        auto c = std::make_shared<double>(698.1);
        sub->add_option("--c", *c)->check(CLI::PositiveNumber);
        sub->callback([=, &handler] {
            handler = [=] {
                const u64 m = bounds::exceptional_prime_threshold(*c);
                Result r;
                r.doc["c"] = *c;
                r.doc["m"] = m;
                r.doc["N"] = report::integer(checked_mul(checked_mul(2, m), m));
                return r;
            };
        });
    }

    // small number-theory helpers
    {
        auto* sub = app.add_subcommand("primes", "count the primes in [lo, hi]");
        auto lo = std::make_shared<u64>(), hi = std::make_shared<u64>();
        sub->add_option("--lo", *lo)->required();
        sub->add_option("--hi", *hi)->required();
        sub->callback([=, &handler] {
            handler = [=] {
                if (*lo > *hi) throw DomainError("primes needs lo <= hi");
                Result r;
                r.doc["lo"] = *lo;
                r.doc["hi"] = *hi;
                r.doc["count"] = ntheory::count_primes(*lo, *hi);
                return r;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("profile", "tau and the 2-3 split divisor counts of n");
        auto n = std::make_shared<u64>();
        sub->add_option("--n", *n)->required()->check(CLI::Range(u64{1}, kU64Max));
        sub->callback([=, &handler] {
            handler = [=] {
                Result r;
                r.doc = report::to_json(ntheory::divisor_profile(*n));
                return r;
            };
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "esfrac: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "esfrac: " << e.what() << '\n';
        return kUsage;
    }
    if (!handler) {
        err << "esfrac: no subcommand\n";
        return kUsage;
    }

    Result result;
    try {
        result = handler();
    } catch (const OverflowError& e) {
        err << "esfrac: overflow: " << e.what() << '\n';
        return kOverflow;
    } catch (const LimitError& e) {
        err << "esfrac: limit: " << e.what() << '\n';
        return kOverflow;
    } catch (const ClaimViolation& e) {
        err << "esfrac: claim violated: " << e.what() << '\n';
        return kClaimViolated;
    } catch (const Error& e) {  // DomainError, InvalidWitness
        err << "esfrac: " << e.what() << '\n';
        return kUsage;
    } catch (const std::bad_alloc&) {
        err << "esfrac: out of memory\n";
        return kOverflow;
    }

    std::string text;
    if (format == "csv") {
        text = render_csv(result);
    } else if (format == "text") {
        text = render_text(result.doc);
    } else {
        text = result.doc.dump() + "\n";
    }
    if (output.empty()) {
        out << text;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            err << "esfrac: cannot write " << output << '\n';
            return kUsage;
        }
        file << text;
    }
    return result.exit;
}

}  // namespace esfrac::cli
