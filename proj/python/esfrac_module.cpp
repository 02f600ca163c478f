#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "esfrac/cli.hpp"
#include "esfrac/report.hpp"

namespace py = pybind11;
using namespace esfrac;

namespace {

// Structured results cross the boundary as plain dicts / lists, built from
// the same JSON the CLI prints so both surfaces agree field for field.
py::object from_json(const report::Json& j) {
    // no static handle: it would be released after the interpreter shuts down
    return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ py_int(u128 v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

u128 to_u128(const py::int_& v) {
    const std::string s = py::str(v);
    if (s.empty() || s[0] == '-') throw py::value_error("expected a nonnegative integer");
    u128 out = 0;
    for (char c : s) out = checked_add(checked_mul(out, 10), static_cast<u128>(c - '0'));
    return out;
}

std::vector<u128> to_u128s(const std::vector<py::int_>& xs) {
    std::vector<u128> out;
    for (const auto& x : xs) out.push_back(to_u128(x));
    return out;
}

py::object decomposition(const std::optional<decompose::Decomposition>& d) {
    if (!d) return py::none();
    py::list out;
    for (u128 x : d->denominators) out.append(py_int(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_esfrac, m) {
    m.doc() = "Unit-fraction decompositions of m/n: exact searches, exception sieves and bound audits";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<OverflowError>(m, "OverflowError", base.ptr());
    py::register_exception<LimitError>(m, "LimitError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<InvalidWitness>(m, "InvalidWitness", base.ptr());
    py::register_exception<ClaimViolation>(m, "ClaimViolation", base.ptr());

    // ntheory
    m.def("is_prime", &ntheory::is_prime, py::arg("n"));
    m.def("count_primes", &ntheory::count_primes, py::arg("lo"), py::arg("hi"),
          "number of primes in [lo, hi]");
    m.def("factorize", [](u64 n) {
        py::list out;
        for (const auto& pp : ntheory::factorize(n)) out.append(py::make_tuple(pp.prime, pp.exponent));
        return out;
    }, py::arg("n"));
    m.def("divisor_profile", [](u64 n) { return from_json(report::to_json(ntheory::divisor_profile(n))); },
          py::arg("n"));

    // decompose
    m.def("find_decomposition", [](u64 mm, u64 n, unsigned j, const py::int_& min_den) {
        return decomposition(decompose::find_decomposition(mm, n, j, to_u128(min_den)));
    }, py::arg("m"), py::arg("n"), py::arg("j") = 3, py::arg("min_denominator") = py::int_(1));
    m.def("sums_to", [](u64 mm, u64 n, const std::vector<py::int_>& dens) {
        const auto v = to_u128s(dens);
        return decompose::sums_to(mm, n, v);
    }, py::arg("m"), py::arg("n"), py::arg("denominators"));
    m.def("enumerate_decompositions", [](u64 mm, u64 n, unsigned j, std::size_t cap) {
        const auto e = decompose::enumerate_decompositions(mm, n, j, cap);
        py::list sols;
        for (const auto& s : e.solutions) sols.append(decomposition(s));
        return py::make_tuple(sols, e.truncated);
    }, py::arg("m"), py::arg("n"), py::arg("j") = 3, py::arg("cap") = 1000,
       "(solutions, truncated)");
    m.def("classify_triple", [](u64 mm, u64 n, const std::vector<py::int_>& triple) {
        if (triple.size() != 3) throw DomainError("classify_triple needs three denominators");
        const auto v = to_u128s(triple);
        return std::string(decompose::to_string(decompose::classify_triple(mm, n, {v[0], v[1], v[2]})));
    }, py::arg("m"), py::arg("n"), py::arg("triple"));
    m.def("jk_threshold_scan", [](unsigned j, u64 k, u64 m_limit) {
        const auto s = decompose::jk_threshold_scan(j, k, m_limit);
        py::list rows;
        for (const auto& r : s.rows) rows.append(py::make_tuple(r.m, r.representable));
        py::dict out;
        out["j"] = s.j;
        out["k"] = s.k;
        out["rows"] = rows;
        out["largest_representable"] = s.largest_representable ? py::object(py::int_(*s.largest_representable))
                                                               : py::none();
        return out;
    }, py::arg("j"), py::arg("k"), py::arg("m_limit"));

    // parametric
    m.def("type1_search", [](u64 mm, u64 n, bool rc) -> py::object {
        const auto w = parametric::type1_search(mm, n, rc);
        return w ? from_json(report::to_json(*w)) : py::none();
    }, py::arg("m"), py::arg("n"), py::arg("require_coprime") = false);
    m.def("type2_search", [](u64 mm, u64 n, bool rc) -> py::object {
        const auto w = parametric::type2_search(mm, n, rc);
        return w ? from_json(report::to_json(*w)) : py::none();
    }, py::arg("m"), py::arg("n"), py::arg("require_coprime") = false);
    m.def("type1_triple", [](u64 mm, u64 n, u64 a, u64 d, u64 f) {
        const auto w = parametric::make_type1_witness(mm, n, a, d, f);
        if (!w) throw InvalidWitness("(a, d, f) fails the Type I divisibility conditions");
        return decomposition(parametric::type1_triple(mm, n, *w));
    }, py::arg("m"), py::arg("n"), py::arg("a"), py::arg("d"), py::arg("f"));
    m.def("type2_triple", [](u64 mm, u64 n, u64 a, u64 b, u64 e) {
        const auto w = parametric::make_type2_witness(mm, n, a, b, e);
        if (!w) throw InvalidWitness("(a, b, e) fails the Type II divisibility conditions");
        return decomposition(parametric::type2_triple(mm, n, *w));
    }, py::arg("m"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("e"));

    // sieve
    m.def("exceptions_up_to", [](u64 mm, u64 limit) {
        sieve::ExceptionList list;
        {
            py::gil_scoped_release release;
            list = sieve::exceptions_up_to(mm, limit);
        }
        return from_json(report::to_json(list));
    }, py::arg("m"), py::arg("limit"));
    m.def("exceptional_prime_in", &sieve::exceptional_prime_in, py::arg("m"), py::arg("lo"), py::arg("hi"));
    m.def("coverage_counts", [](u64 mm, u64 N) {
        sieve::CoverageReport r;
        {
            py::gil_scoped_release release;
            r = sieve::coverage_counts(mm, N);
        }
        return from_json(report::to_json(r));
    }, py::arg("m"), py::arg("N"));

    // bounds
    m.def("t_exact", [](u64 mm, u64 N) { return py_int(bounds::t_exact(mm, N)); }, py::arg("m"), py::arg("N"));
    m.def("bound_report", [](u64 mm, std::optional<u64> N) {
        return from_json(report::to_json(bounds::bound_report(mm, N)));
    }, py::arg("m"), py::arg("N") = py::none());
    m.def("divisor_constant_audit", [](u64 limit) {
        return from_json(report::to_json(bounds::divisor_constant_audit(limit, false)));
    }, py::arg("search_limit") = 1'000'000);
    m.def("exceptional_prime_threshold", &bounds::exceptional_prime_threshold, py::arg("c") = 698.1);
    m.def("vaughan_f", &bounds::vaughan_f, py::arg("m"), py::arg("p"));

    // The command-line front end, in process: (exit code, stdout, stderr).
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
