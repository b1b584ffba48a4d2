#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "grasscoh/catalog.hpp"
#include "grasscoh/schur.hpp"
#include "grasscoh/table_io.hpp"
#include "grasscoh/verify.hpp"

namespace py = pybind11;
using namespace grasscoh;

namespace {

std::string family_tag(RingFamily f) {
    switch (f) {
        case RingFamily::Hpq: return "hpq";
        case RingFamily::HpqE: return "hpq+e";
        case RingFamily::SquarefreeC: return "squarefree-C";
        case RingFamily::SquarefreeD: return "squarefree-D";
        case RingFamily::Exterior: return "exterior";
    }
    return "?";
}

RingMode parse_mode(const std::string& mode) {
    if (mode == "graded") return RingMode::Graded;
    if (mode == "clifford") return RingMode::Clifford;
    throw range_error("mode must be 'graded' or 'clifford'");
}

/// Exactness is kept by exchanging all scalars as "num/den" strings.
struct RingHandle {
    SpaceSpec spec;
    RingMode mode;
    BuiltRing ring;

    RingHandle(SpaceSpec s, RingMode m) : spec(std::move(s)), mode(m),
                                          ring(build_ring(spec, mode)) {}

    size_t dim() const {
        return std::visit([](const auto& d) { return d->dim(); }, ring);
    }
    std::vector<std::string> basis() const {
        return std::visit([](const auto& d) { return d->basis_labels(); }, ring);
    }
    std::string poincare() const {
        return std::visit(
            [](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, RingDescriptorPtr>)
                    return univariate_str(poincare_polynomial(*d));
                else if constexpr (std::is_same_v<T, SquarefreeDescriptorPtr>)
                    return univariate_str(poincare_sf(*d));
                else
                    return univariate_str(poincare_ext(*d));
            },
            ring);
    }
    std::string normal_form_str(const std::string& text) const {
        return std::visit(
            [&](const auto& d) -> std::string {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, RingDescriptorPtr>) {
                    Polynomial x = Polynomial::parse(text, d->p, "r");
                    return normal_form(d, x).str();
                } else if constexpr (std::is_same_v<T, SquarefreeDescriptorPtr>) {
                    Polynomial x = Polynomial::parse(text, d->generator_count(), "r");
                    return normal_form_sf(d, x).str();
                } else {
                    throw unsupported_case_error(
                        "normal_form: exterior elements have no polynomial form");
                }
            },
            ring);
    }
    const TableModel& full_table() const {
        if (!table_cache_) table_cache_ = multiplication_table(ring);
        return *table_cache_;
    }
    std::string multiply(size_t i, size_t j) const {
        const TableModel& t = full_table();
        if (i >= t.basis.size() || j >= t.basis.size())
            throw range_error("multiply: basis index out of range");
        return t.entries[i][j];
    }
    std::string table(const std::string& format) const {
        return emit(full_table(), parse_format(format));
    }
    std::vector<std::string> idempotent_strings() const {
        const auto* d = std::get_if<RingDescriptorPtr>(&ring);
        if (!d || !spec.deformation || mode != RingMode::Clifford)
            throw precondition_error("idempotents need a deformed hpq ring");
        std::vector<std::string> out;
        for (const auto& pr : idempotents(*d, *spec.deformation)) out.push_back(pr.str());
        return out;
    }
    std::string descriptor() const { return descriptor_json(ring); }

private:
    mutable std::optional<TableModel> table_cache_;
};

py::dict spec_dict(const SpaceSpec& s) {
    py::dict d;
    d["name"] = s.name;
    d["field"] = field_name(s.field);
    d["symmetric_space"] = s.symmetric_space;
    d["family"] = family_tag(s.family);
    d["p"] = s.p;
    d["q"] = s.q;
    d["n"] = s.n;
    d["weight"] = s.weight;
    d["supports_clifford"] = s.supports_clifford;
    d["exterior_degrees"] = s.exterior_degrees;
    d["euler_characteristic"] = euler_characteristic(s);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact models of Grassmannian cohomology rings and their Clifford deformations";

    py::register_exception<range_error>(m, "RangeError", PyExc_ValueError);
    py::register_exception<shape_error>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<unsupported_case_error>(m, "UnsupportedCaseError", PyExc_ValueError);
    py::register_exception<lookup_error>(m, "LookupError", PyExc_KeyError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<invariant_violation>(m, "InvariantViolation", PyExc_RuntimeError);

    py::class_<RingHandle>(m, "Ring")
        .def_property_readonly("name", [](const RingHandle& r) { return r.spec.name; })
        .def_property_readonly("mode",
                               [](const RingHandle& r) {
                                   return r.mode == RingMode::Clifford ? "clifford" : "graded";
                               })
        .def_property_readonly("dim", &RingHandle::dim)
        .def("basis", &RingHandle::basis)
        .def("poincare", &RingHandle::poincare,
             "Poincare polynomial as a string (graded mode only)")
        .def("normal_form", &RingHandle::normal_form_str,
             "normal form of a polynomial in the generators, e.g. 'r1^5'")
        .def("multiply", &RingHandle::multiply, py::arg("i"), py::arg("j"),
             "product of the i-th and j-th basis elements, canonical string")
        .def("table", &RingHandle::table, py::arg("format") = "json",
             "full multiplication table in the given format")
        .def("idempotents", &RingHandle::idempotent_strings,
             "primitive idempotents of a deformed hpq ring")
        .def("descriptor", &RingHandle::descriptor, "presentation data as JSON");

    m.def("lookup", [](const std::string& name) { return spec_dict(lookup(name)); },
          py::arg("name"), "resolve a space name to its catalog data");
    m.def(
        "build_ring",
        [](const std::string& name, const std::string& mode) {
            return RingHandle(lookup(name), parse_mode(mode));
        },
        py::arg("name"), py::arg("mode") = "graded");
    m.def("list_spaces", [] {
        py::list out;
        for (const auto& r : catalog_rows()) {
            py::dict d;
            d["pattern"] = r.pattern;
            d["field"] = r.field;
            d["symmetric_space"] = r.symmetric_space;
            d["family"] = r.family;
            d["supports_clifford"] = r.supports_clifford;
            d["example"] = r.example;
            out.append(d);
        }
        return out;
    });

    m.def(
        "gaussian_binomial",
        [](int p, int q, int w) { return univariate_str(gaussian_binomial(p, q, w)); },
        py::arg("p"), py::arg("q"), py::arg("w") = 2);

    m.def(
        "jacobi_trudi",
        [](const std::string& lam, int p, int q) {
            return jacobi_trudi(Partition::parse(lam), p, q).str("r");
        },
        py::arg("partition"), py::arg("p"), py::arg("q"));
    m.def(
        "schur_multiply",
        [](const std::string& lam, const std::string& mu, int p, int q) {
            auto d = RingDescriptor::make(p, q, std::vector<Rational>(p + q, Rational(0)), 2);
            py::dict out;
            for (const auto& [nu, c] : schur_multiply(Partition::parse(lam),
                                                      Partition::parse(mu), d))
                out[py::str(nu.str())] = c.str();
            return out;
        },
        py::arg("lam"), py::arg("mu"), py::arg("p"), py::arg("q"));
    m.def(
        "pieri",
        [](const std::string& lam, int k, int p, int q) {
            py::dict out;
            for (const auto& [nu, c] : pieri_oracle(Partition::parse(lam), k, p, q))
                out[py::str(nu.str())] = c.str();
            return out;
        },
        py::arg("lam"), py::arg("k"), py::arg("p"), py::arg("q"));

    m.def(
        "shuffles",
        [](int p, int q) {
            std::vector<std::vector<int>> out;
            for (const auto& sh : enumerate_shuffles(p, q)) out.push_back(sh.positions);
            return out;
        },
        py::arg("p"), py::arg("q"));

    auto parse_case = [](const std::string& name) {
        if (name == "complex") return DeformationCase::ComplexGrassmannian;
        if (name == "quaternion") return DeformationCase::QuaternionGrassmannian;
        if (name == "real-even-even") return DeformationCase::RealGrassmannianEvenEven;
        if (name == "real-even-odd") return DeformationCase::RealGrassmannianEvenOdd;
        if (name == "real-odd-odd") return DeformationCase::RealGrassmannianOddOdd;
        if (name == "lagrangian-C") return DeformationCase::LagrangianC;
        if (name == "lagrangian-D") return DeformationCase::LagrangianD;
        throw range_error("unknown deformation case '" + name + "'");
    };
    m.def(
        "rho_vector",
        [parse_case](const std::string& name, int p, int q) {
            std::vector<std::string> out;
            for (const auto& x : rho_vector(parse_case(name), p, q)) out.push_back(x.str());
            return out;
        },
        py::arg("case_name"), py::arg("p"), py::arg("q") = 0,
        "deformation point; cases: complex, quaternion, real-even-even, real-even-odd, "
        "real-odd-odd, lagrangian-C, lagrangian-D");
    m.def(
        "deformation_parameters",
        [parse_case](const std::string& name, int p, int q) {
            std::vector<std::string> out;
            for (const auto& x : deformation_parameters(parse_case(name), p, q))
                out.push_back(x.str());
            return out;
        },
        py::arg("case_name"), py::arg("p"), py::arg("q") = 0);

    m.def(
        "verify",
        [](const std::string& suite, int max_size, int trials, uint64_t seed) {
            VerifyOptions opt;
            opt.max_size = max_size;
            opt.trials = trials;
            opt.seed = seed;
            py::list out;
            for (const auto& r : run_suite(suite, opt)) {
                py::dict d;
                d["suite"] = r.suite;
                d["check"] = r.name;
                d["pass"] = r.pass;
                d["cases"] = r.cases;
                d["witness"] = r.witness;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("max_size") = 3, py::arg("trials") = 100,
        py::arg("seed") = 20240901);
}
