// Python bindings for the hull toolkit: fields, linear codes, constructions,
// maximal-hull search, EAQEC derivation, and the code-file format.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hullforge/acceptance.hpp"
#include "hullforge/constructions.hpp"
#include "hullforge/eaqec.hpp"
#include "hullforge/hull_analysis.hpp"
#include "hullforge/io.hpp"

namespace py = pybind11;
namespace hf = hullforge;

namespace {

hf::GFMatrix to_matrix(const hf::Field& f, const std::vector<std::vector<uint32_t>>& rows,
                       size_t n_hint = 0) {
    size_t n = rows.empty() ? n_hint : rows[0].size();
    hf::GFMatrix m(f, rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

std::vector<std::vector<uint32_t>> from_matrix(const hf::GFMatrix& m) {
    std::vector<std::vector<uint32_t>> rows;
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rows;
}

hf::LinearCode make_code(const hf::Field& f, const std::vector<std::vector<uint32_t>>& rows,
                         size_t n) {
    if (rows.empty()) return hf::LinearCode::zero_code(f, n);
    return hf::LinearCode::from_generator(to_matrix(f, rows));
}

}  // namespace

PYBIND11_MODULE(_hullforge, m) {
    m.doc() = "exact linear-code hull computations over small finite fields";

    static py::exception<hf::Error> base_exc(m, "HullforgeError");
    py::register_exception<hf::ParseError>(m, "ParseError", base_exc);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const hf::ParseError&) {
            throw;  // handled by the registered ParseError binding
        } catch (const hf::Error& e) {
            PyErr_SetString(base_exc.ptr(), (e.name() + ": " + e.what()).c_str());
        }
    });

    py::enum_<hf::Kind>(m, "Kind")
        .value("euclidean", hf::Kind::euclidean)
        .value("hermitian", hf::Kind::hermitian);

    py::enum_<hf::Predicate>(m, "Predicate")
        .value("lcd", hf::Predicate::lcd)
        .value("self_dual", hf::Predicate::self_dual)
        .value("self_orthogonal", hf::Predicate::self_orthogonal)
        .value("hermitian_lcd", hf::Predicate::hermitian_lcd)
        .value("hermitian_self_dual", hf::Predicate::hermitian_self_dual)
        .value("hermitian_self_orthogonal", hf::Predicate::hermitian_self_orthogonal);

    py::class_<hf::Field, std::unique_ptr<hf::Field, py::nodelete>>(m, "Field")
        .def_static("get", [](int p, int mm) { return &hf::Field::get(p, mm); },
                    py::return_value_policy::reference, py::arg("p"), py::arg("m") = 1)
        .def_static("get_with_modulus",
                    [](int p, int mm, const std::vector<int>& mod) {
                        return &hf::Field::get(p, mm, mod);
                    },
                    py::return_value_policy::reference)
        .def_property_readonly("p", &hf::Field::p)
        .def_property_readonly("m", &hf::Field::m)
        .def_property_readonly("q", &hf::Field::q)
        .def_property_readonly("modulus", &hf::Field::modulus)
        .def_property_readonly("has_hermitian", &hf::Field::has_hermitian)
        .def_property_readonly("q0", &hf::Field::q0)
        .def("add", &hf::Field::add)
        .def("sub", &hf::Field::sub)
        .def("neg", &hf::Field::neg)
        .def("mul", &hf::Field::mul)
        .def("inv", &hf::Field::inv)
        .def("div", &hf::Field::div)
        .def("pow", &hf::Field::pow)
        .def("conj", &hf::Field::conj)
        .def("sqrt", &hf::Field::sqrt)
        .def("order", &hf::Field::order)
        .def("generator", &hf::Field::generator)
        .def("__repr__", [](const hf::Field& f) {
            return "Field(GF(" + std::to_string(f.q()) + "))";
        });

    py::class_<hf::LinearCode>(m, "LinearCode")
        .def_static("from_rows", &make_code, py::arg("field"), py::arg("rows"),
                    py::arg("n") = 0)
        .def_static("zero",
                    [](const hf::Field& f, size_t n) { return hf::LinearCode::zero_code(f, n); })
        .def_static("full",
                    [](const hf::Field& f, size_t n) { return hf::LinearCode::full_space(f, n); })
        .def_property_readonly("field", &hf::LinearCode::field,
                               py::return_value_policy::reference)
        .def_property_readonly("n", &hf::LinearCode::n)
        .def_property_readonly("k", &hf::LinearCode::k)
        .def_property_readonly("generator",
                               [](const hf::LinearCode& c) { return from_matrix(c.generator()); })
        .def("dual",
             [](const hf::LinearCode& c, hf::Kind kind) { return c.dual(kind); },
             py::arg("kind") = hf::Kind::euclidean)
        .def("hull_dim", &hf::LinearCode::hull_dim, py::arg("kind") = hf::Kind::euclidean)
        .def("distance", &hf::LinearCode::distance)
        .def("dual_distance", &hf::LinearCode::dual_distance)
        .def("weight_distribution",
             [](const hf::LinearCode& c) { return c.weight_distribution().counts; })
        .def("predicate", &hf::LinearCode::predicate)
        .def("scale", &hf::LinearCode::scale)
        .def("shorten", &hf::LinearCode::shorten)
        .def("full_weight_codeword", &hf::LinearCode::full_weight_codeword)
        .def("contains", &hf::LinearCode::contains)
        .def("contains_word", &hf::LinearCode::contains_word)
        .def(py::self == py::self)
        .def("__repr__", [](const hf::LinearCode& c) {
            return "LinearCode([" + std::to_string(c.n()) + ", " + std::to_string(c.k()) +
                   "] over GF(" + std::to_string(c.field().q()) + "))";
        });

    m.def("schur_product", &hf::schur_product);
    m.def("macwilliams_selfdual_check",
          [](const std::vector<uint64_t>& counts, uint32_t q) {
              return hf::macwilliams_selfdual_check({counts}, q);
          });

    // constructions
    m.def("cyclotomic_coset", &hf::cyclotomic_coset);
    m.def("minimal_poly", [](const hf::Field& f, uint64_t n, uint64_t i) {
        return hf::minimal_poly(f, n, i).coeffs();
    });
    m.def("bch_generator", [](const hf::Field& f, uint64_t n, uint64_t delta, uint64_t b) {
        return hf::bch_generator(f, n, delta, b).coeffs();
    }, py::arg("field"), py::arg("n"), py::arg("delta"), py::arg("b") = 1);
    m.def("constacyclic_code",
          [](const hf::Field& f, const std::vector<uint32_t>& g, uint32_t lambda, size_t n) {
              return hf::constacyclic_code(hf::Poly(f, g), lambda, n);
          });
    m.def("constacyclic_dual_generator",
          [](const hf::Field& f, const std::vector<uint32_t>& g, uint32_t lambda, size_t n) {
              return hf::constacyclic_dual_generator(hf::Poly(f, g), lambda, n).coeffs();
          });
    m.def("rs", &hf::rs);
    m.def("grs", [](const hf::Field& f, const std::vector<uint32_t>& points,
                    const std::vector<uint32_t>& multipliers, size_t k) {
        return hf::grs({&f, points, multipliers, k});
    });
    m.def("rs_dual_vector", &hf::rs_dual_vector);
    m.def("grs_with_hull", [](const hf::Field& f, const std::vector<uint32_t>& points, size_t k,
                              size_t l) {
        hf::HullCodeWitness r = hf::grs_with_hull(f, points, k, l);
        return py::make_tuple(r.code, r.witness_v);
    });
    m.def("multiplicative_subgroup", &hf::multiplicative_subgroup);
    m.def("trs", [](const hf::Field& f, const std::vector<uint32_t>& subgroup, uint32_t eta,
                    size_t k) { return hf::trs({&f, subgroup, eta, k}); });
    m.def("trs_with_hull", [](const hf::Field& f, const std::vector<uint32_t>& subgroup,
                              uint32_t eta, size_t k, size_t l) {
        hf::HullCodeWitness r = hf::trs_with_hull({&f, subgroup, eta, k}, l);
        return py::make_tuple(r.code, r.witness_v);
    });
    m.def("selfdual_to_hull", [](const hf::LinearCode& c, size_t h, hf::Kind kind) {
        hf::ScaledCodeWitness r = hf::selfdual_to_hull(c, h, kind);
        return py::make_tuple(r.code, r.witness_v, r.perm, r.lambda);
    }, py::arg("code"), py::arg("h"), py::arg("kind") = hf::Kind::euclidean);
    m.def("lambda_disturb", [](const hf::LinearCode& c, int position) {
        hf::LambdaDisturbResult r = position >= 0
                                        ? hf::lambda_disturb(c, static_cast<size_t>(position))
                                        : hf::lambda_disturb_search(c);
        return py::make_tuple(r.code, r.lambda, r.position);
    }, py::arg("code"), py::arg("position") = -1);

    // hull analysis
    auto report_tuple = [](const hf::MaxHullReport& r) {
        return py::make_tuple(r.best_h, r.witness_v, r.exhaustive, r.candidates_tried);
    };
    m.def("max_hull_exhaustive",
          [report_tuple](const hf::LinearCode& c, hf::Kind kind) {
              return report_tuple(hf::max_hull_exhaustive(c, kind));
          },
          py::arg("code"), py::arg("kind") = hf::Kind::euclidean);
    m.def("max_hull_randomized",
          [report_tuple](const hf::LinearCode& c, hf::Kind kind, uint64_t trials, uint64_t seed) {
              return report_tuple(hf::max_hull_randomized(c, kind, trials, seed));
          },
          py::arg("code"), py::arg("kind") = hf::Kind::euclidean, py::arg("trials") = 1000,
          py::arg("seed") = 1);
    m.def("schur_lower_bound", &hf::schur_lower_bound, py::arg("code"), py::arg("subcode"),
          py::arg("kind") = hf::Kind::euclidean);
    m.def("dim1_max_hull", &hf::dim1_max_hull);

    // eaqec
    py::class_<hf::EaqecParams>(m, "EaqecParams")
        .def(py::init<>())
        .def_readwrite("n", &hf::EaqecParams::n)
        .def_readwrite("k", &hf::EaqecParams::k)
        .def_readwrite("d", &hf::EaqecParams::d)
        .def_readwrite("c", &hf::EaqecParams::c)
        .def_readwrite("q", &hf::EaqecParams::q)
        .def_readwrite("d_is_lower_bound", &hf::EaqecParams::d_is_lower_bound)
        .def(py::self == py::self)
        .def("__repr__", [](const hf::EaqecParams& p) {
            return "[[" + std::to_string(p.n) + ", " + std::to_string(p.k) + ", " +
                   std::string(p.d_is_lower_bound ? ">=" : "") + std::to_string(p.d) + ", " +
                   std::to_string(p.c) + "]]_" + std::to_string(p.q);
        });

    m.def("css_from_hull",
          [](size_t n, size_t k, size_t d, size_t d_dual, size_t h, uint32_t q) {
              return hf::css_from_hull(n, k, d, d_dual, h, q);
          });
    m.def("css_from_code", [](const hf::LinearCode& c, hf::Kind kind) {
        return hf::css_from_hull(c, kind);
    }, py::arg("code"), py::arg("kind") = hf::Kind::euclidean);
    m.def("singleton_k_max", &hf::singleton_k_max);
    m.def("classify",
          [](const hf::EaqecParams& p) { return std::string(hf::to_string(hf::classify(p))); });
    m.def("table_emit", [](const std::vector<std::tuple<size_t, size_t, size_t, uint32_t>>& rows,
                           bool symbolic) {
        std::vector<hf::TableRow> rs;
        for (auto [n, k, d, q0] : rows) rs.push_back({n, k, d, q0});
        return hf::table_emit(rs, symbolic);
    });
    m.def("family_params", [](const std::string& family, size_t n, size_t k, size_t h, unsigned s) {
        if (family != "cor72" && family != "cor73")
            throw hf::PreconditionFailed("family must be cor72 or cor73");
        return hf::family_params(family == "cor72" ? hf::Family::cor72 : hf::Family::cor73, n, k,
                                 h, s);
    });

    // io
    m.def("parse_code_file", &hf::parse_code_file);
    m.def("serialize_code_file", &hf::serialize_code_file);

    // acceptance
    m.def("run_acceptance", [](const std::string& data_dir) {
        py::list out;
        for (const hf::CriterionResult& r : hf::run_acceptance(data_dir))
            out.append(py::make_tuple(r.id, r.name, r.passed, r.detail));
        return out;
    });
}
