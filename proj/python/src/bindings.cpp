#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "weilden/aggregate.hpp"
#include "weilden/error.hpp"
#include "weilden/gsp_oracle.hpp"
#include "weilden/localdensity.hpp"
#include "weilden/report.hpp"
#include "weilden/validate.hpp"
#include "weilden/weilpoly.hpp"

namespace py = pybind11;
using namespace weilden;

namespace {

// Big integers cross the boundary as Python ints, rationals as fractions.Fraction.
py::object to_py(const BigInt& z) { return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10)); }

py::object to_py(const BigRational& r) {
  static const auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_py(BigInt(r.get_num())), to_py(BigInt(r.get_den())));
}

BigInt from_py(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

std::vector<BigInt> from_py(const std::vector<py::int_>& vs) {
  std::vector<BigInt> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(from_py(v));
  return out;
}

py::list to_py(const std::vector<BigInt>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

py::object to_py(const Json& j) {
  static const auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

py::dict local_factor_dict(const LocalFactor& lf) {
  py::dict d;
  d["ell"] = lf.ell;
  d["shape"] = shape_label(lf.shape.kind);
  d["nu_f"] = to_py(lf.nu_f);
  d["nu_K"] = to_py(lf.nu_K);
  d["matched"] = lf.matched;
  return d;
}

ProductOptions make_options(std::uint64_t exact_cutoff, long precision, unsigned threads, std::uint64_t seed,
                            const std::string& source) {
  ProductOptions o;
  o.exact_cutoff = exact_cutoff;
  o.precision = precision;
  o.threads = threads;
  o.seed = seed;
  o.source = parse_factor_source(source);
  return o;
}

}  // namespace

PYBIND11_MODULE(_weilden, m) {
  m.doc() = "Local densities of q-Weil polynomials and the Euler product for h_K / (omega_K h_K+)";

  // Leaked on purpose: Python objects must not be released after interpreter shutdown.
  static const auto* error_type = new py::exception<Error>(m, "WeildenError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(*error_type)(std::string(to_string(e.code())), e.detail());
      PyErr_SetObject(error_type->ptr(), inst.ptr());
    }
  });

  py::class_<WeilPolynomial>(m, "WeilPolynomial")
      .def(py::init([](const std::vector<py::int_>& coeffs, const py::int_& q) {
             return parse_weil(from_py(coeffs), from_py(q));
           }),
           py::arg("coeffs"), py::arg("q"))
      .def_property_readonly("coeffs", [](const WeilPolynomial& f) { return to_py(f.coeffs()); })
      .def_property_readonly("q", [](const WeilPolynomial& f) { return to_py(f.q()); })
      .def_property_readonly("p", [](const WeilPolynomial& f) { return to_py(f.p()); })
      .def_property_readonly("g", &WeilPolynomial::g)
      .def("real_weil", [](const WeilPolynomial& f) { return to_py(real_weil(f).coeffs); })
      .def("conductor", [](const WeilPolynomial& f) { return to_py(conductor(f)); })
      .def("order_discriminant", [](const WeilPolynomial& f) { return to_py(order_discriminant(f)); })
      .def("__repr__", &WeilPolynomial::to_string)
      .def(py::self == py::self);

  m.def("validate", [](const WeilPolynomial& f, std::uint64_t prime_bound, bool assume_maximal) {
    return to_py(to_json(validate_conditions(f, prime_bound, assume_maximal)));
  }, py::arg("f"), py::arg("prime_bound") = 200, py::arg("assume_maximal") = false);

  m.def("archimedean", [](const WeilPolynomial& f, long precision) {
    return to_py(to_json(archimedean_report(f, precision)));
  }, py::arg("f"), py::arg("precision") = 128);

  m.def("nu_infinity", [](const WeilPolynomial& f, long precision) {
    return nu_infinity(f, precision).value.to_double();
  }, py::arg("f"), py::arg("precision") = 128);

  m.def("nu_ell", [](const WeilPolynomial& f, std::uint64_t ell, std::uint64_t seed) {
    return local_factor_dict(nu_ell(f, ell, seed));
  }, py::arg("f"), py::arg("ell"), py::arg("seed") = 0x5eed);

  m.def("nu_p", [](const WeilPolynomial& f, std::uint64_t seed) { return to_py(nu_p(f, seed)); },
        py::arg("f"), py::arg("seed") = 0x5eed);

  m.def("local_table", [](const WeilPolynomial& f, const std::vector<std::uint64_t>& ells, std::uint64_t seed,
                          unsigned threads) {
    py::list out;
    for (const auto& row : local_table(f, ells, seed, threads)) out.append(to_py(to_json(row)));
    return out;
  }, py::arg("f"), py::arg("ells"), py::arg("seed") = 0x5eed, py::arg("threads") = 1);

  m.def("centralizer_order", [](const std::string& shape, std::uint64_t ell, unsigned g) {
    return to_py(centralizer_order(parse_shape(shape), ell, g));
  }, py::arg("shape"), py::arg("ell"), py::arg("g"));

  m.def("gsp_order", [](unsigned g, std::uint64_t ell) { return to_py(gsp_order(g, ell)); }, py::arg("g"),
        py::arg("ell"));

  m.def("centralizer_matrix", [](unsigned g, const std::vector<std::uint64_t>& ells) {
    py::list out;
    for (const auto& cell : centralizer_matrix(g, ells)) out.append(to_py(to_json(cell)));
    return out;
  }, py::arg("g") = 3, py::arg("ells") = std::vector<std::uint64_t>{2, 3, 5});

  m.def("census", [](unsigned g, std::uint64_t ell, std::uint64_t seed, unsigned threads) {
    CharPolyCensus c;
    {
      py::gil_scoped_release release;
      c = enumerate_group(g, ell, seed, threads);
    }
    return to_py(to_json(summarize_census(c)));
  }, py::arg("g") = 3, py::arg("ell") = 2, py::arg("seed") = 1, py::arg("threads") = 1);

  m.def("partial_product", [](const WeilPolynomial& f, std::uint64_t bound, const std::string& label,
                              std::optional<std::string> resume, std::uint64_t exact_cutoff, long precision,
                              unsigned threads, std::uint64_t seed, const std::string& source) {
    std::optional<ProductCheckpoint> prior;
    if (resume) prior = checkpoint_from_json(*resume);
    const ProductOptions opts = make_options(exact_cutoff, precision, threads, seed, source);
    ProductCheckpoint c;
    {
      py::gil_scoped_release release;
      c = partial_product(f, bound, label, prior, opts);
    }
    return checkpoint_to_json(c);
  }, py::arg("f"), py::arg("bound"), py::arg("label"), py::arg("resume") = py::none(),
     py::arg("exact_cutoff") = 10000, py::arg("precision") = 128, py::arg("threads") = 1,
     py::arg("seed") = 0x5eed, py::arg("source") = "centralizer",
     "Returns the checkpoint as a JSON string; pass it back as `resume` to continue.");

  m.def("checkpoint_product", [](const std::string& checkpoint) {
    const ProductCheckpoint c = checkpoint_from_json(checkpoint);
    py::dict d;
    d["bound"] = c.bound;
    d["value"] = c.product().to_double();
    d["exact"] = c.exact_product ? to_py(*c.exact_product) : py::object(py::none());
    return d;
  }, py::arg("checkpoint"));

  m.def("load_fixtures", [](const std::string& path) {
    py::list out;
    for (const auto& fx : load_fixtures(path)) {
      py::dict d;
      d["label"] = fx.label;
      d["coeffs"] = to_py(fx.coeffs);
      d["q"] = to_py(fx.q);
      d["h_K"] = to_py(fx.h_K);
      d["h_Kplus"] = to_py(fx.h_Kplus);
      d["omega_K"] = to_py(fx.omega_K);
      d["reference"] = to_py(fx.reference());
      d["provenance"] = fx.provenance;
      out.append(d);
    }
    return out;
  }, py::arg("path"));

  m.def("compare", [](const std::string& fixtures_path, const std::string& label, const std::string& checkpoint,
                      long precision) {
    const auto all = load_fixtures(fixtures_path);
    const ReferenceFixture& fx = find_fixture(all, label);
    const WeilPolynomial f = parse_weil(fx.coeffs, fx.q);
    return to_py(to_json(compare(f, checkpoint_from_json(checkpoint), fx, precision)));
  }, py::arg("fixtures_path"), py::arg("label"), py::arg("checkpoint"), py::arg("precision") = 128);
}
