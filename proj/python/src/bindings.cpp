#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sexp/discovery.hpp"
#include "sexp/error.hpp"
#include "sexp/json_io.hpp"
#include "sexp/structure.hpp"

namespace py = pybind11;
using namespace sexp;

namespace {

  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

  Triple as_tuple(InertiaSignature const& s) {
    return {s.n_plus, s.n_minus, s.n_zero};
  }

  Semigroup semigroup_of(RawTable const& table) {
    return Semigroup::from_table(table);
  }

  std::vector<std::vector<long>> mk_of(RawTable const& table) {
    return mk_matrix(semigroup_of(table)).rows();
  }

  std::string expand_json(RawTable const& table, std::string const& algebra, bool reduce_zero) {
    auto const s = semigroup_of(table);
    auto const l = standard_algebra(algebra);
    auto const e = s_expand(s, l);
    io::ExpansionNote note{s.name(), l.name(), reduce_zero};
    return io::dump(io::algebra_to_json(reduce_zero ? zero_reduce(e) : e.algebra(), note));
  }

  py::dict certify(RawTable const& table, std::string const& algebra) {
    auto const s = semigroup_of(table);
    auto const l = standard_algebra(algebra);
    auto const cert = ideal_certificate(s, l);
    py::dict out;
    out["construction"] = cert.construction;
    out["ideal_dim"] = cert.basis.size();
    out["ambient_dim"] = cert.ambient_dim;
    out["verified"] = cert.verified;
    if (s.order() >= 2) {
      auto const split = split_direct_sum(s, l);
      out["full_split"] = split.full_split;
      out["isomorphism_verified"] = split.isomorphism_verified;
    }
    return out;
  }

}  // namespace

PYBIND11_MODULE(_sexp, m) {
  m.doc() = "Semigroup expansions of Lie algebras with exact arithmetic";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("enumerate_semigroups",
        [](std::size_t order, bool up_to_iso) {
          std::vector<RawTable> out;
          for (auto const& s : enumerate_semigroups(order, up_to_iso)) {
            out.push_back(s.table());
          }
          return out;
        },
        py::arg("order"), py::arg("up_to_iso") = true,
        "Commutative semigroup tables of the given order, 0-based.");
  m.def("is_semigroup", [](RawTable const& t) { return validate_semigroup(t).ok; }, py::arg("table"));
  m.def("mk_matrix", &mk_of, py::arg("table"));
  m.def("killing_inertia",
        [](std::string const& name) { return as_tuple(exact_inertia(killing_form(standard_algebra(name)))); },
        py::arg("algebra"));
  m.def("expanded_inertia",
        [](RawTable const& t, std::string const& name) {
          return as_tuple(exact_inertia(expanded_killing(s_expand(semigroup_of(t), standard_algebra(name)))));
        },
        py::arg("table"), py::arg("algebra"));
  m.def("predict_signature",
        [](std::string const& name, RawTable const& t) {
          auto const p = predict_expanded_signature(signature_profile(standard_algebra(name)),
                                                    semigroup_profile(semigroup_of(t)));
          return as_tuple(p.inertia);
        },
        py::arg("algebra"), py::arg("table"));
  m.def("predict_character", &predict_character, py::arg("chi"), py::arg("P"), py::arg("H"),
        py::arg("Q"));
  m.def("expand_json", &expand_json, py::arg("table"), py::arg("algebra"),
        py::arg("reduce_zero") = false);
  m.def("solve_phq",
        [](std::string const& source, std::string const& target, std::size_t p_max) {
          std::vector<Triple> out;
          for (auto const& p : solve_phq(signature_profile(standard_algebra(source)),
                                         signature_profile(standard_algebra(target)), p_max)) {
            out.emplace_back(p.P, p.H, p.Q);
          }
          return out;
        },
        py::arg("source"), py::arg("target"), py::arg("p_max") = 4);
  m.def("discover",
        [](std::string const& source, std::string const& target, std::size_t p_max) {
          auto const src = standard_algebra(source);
          auto const tp = signature_profile(standard_algebra(target));
          std::vector<RawTable> out;
          for (auto const& plan : solve_phq(signature_profile(src), tp, p_max)) {
            if (plan.P > 4) {
              continue;
            }
            for (auto const& c : find_semigroups(plan, src, tp).verified) {
              out.push_back(c.semigroup.table());
            }
          }
          return out;
        },
        py::arg("source"), py::arg("target"), py::arg("p_max") = 4,
        "Verified semigroup tables over all plans with order at most 4.");
  m.def("table_one",
        [] {
          std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>> out;
          for (auto const& r : generate_table_one()) {
            out.emplace_back(r.n, r.m, r.P, r.H, r.Q);
          }
          return out;
        });
  m.def("certify_nonsimple", &certify, py::arg("table"), py::arg("algebra"));
}
