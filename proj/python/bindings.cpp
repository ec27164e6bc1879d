#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobext/extcalc.hpp"
#include "frobext/kan.hpp"
#include "frobext/oracle.hpp"
#include "frobext/partition.hpp"
#include "frobext/symchar.hpp"

namespace py = pybind11;
using namespace frobext;

namespace {

Partition to_partition(const std::vector<int>& parts) {
    return Partition(parts);
}

py::tuple from_partition(const Partition& p) {
    py::tuple t(p.length());
    for (int n = 0; n < p.length(); ++n) t[n] = p.parts()[n];
    return t;
}

py::list poincare_pairs(const PoincarePoly& poly) {
    py::list out;
    for (auto& [deg, coeff] : poly.pairs()) {
        py::list pair;
        pair.append(deg);
        pair.append(coeff);
        out.append(pair);
    }
    return out;
}

py::dict shift_dict(const ShiftSpec& s) {
    py::dict out;
    if (s.is_symbolic()) {
        py::list syms;
        for (auto& sym : s.symbols()) {
            py::list entry;
            entry.append(sym.i);
            entry.append(sym.k);
            syms.append(entry);
        }
        out["symbolic"] = s.symbols().size() == 1 ? syms[0] : syms;
        if (s.offset() != 0) out["value"] = s.offset();
    } else {
        out["value"] = s.offset();
    }
    return out;
}

py::dict answer_dict(const ExtAnswer& a) {
    py::dict out;
    out["poincare"] = poincare_pairs(a.poincare);
    out["dimension"] = a.poincare.dimension();
    out["shift"] = shift_dict(a.shift);
    if (a.specht_label.has_value())
        out["label"] = "Specht[" + (a.specht_label->empty()
                                        ? ""
                                        : a.specht_label->to_string()) + "]";
    else
        out["label"] = py::none();
    out["provenance"] = a.provenance;
    out["text"] = a.poincare.to_string();
    return out;
}

}  // namespace

PYBIND11_MODULE(_frobext, m) {
    m.doc() = "Exact Ext computations for Frobenius-twisted polynomial functors";

    m.def("conjugate",
          [](const std::vector<int>& parts) {
              return from_partition(conjugate(to_partition(parts)));
          },
          py::arg("partition"));

    m.def("specht_dim",
          [](const std::vector<int>& parts) {
              return specht_dim(to_partition(parts));
          },
          py::arg("partition"));

    m.def("partitions_of", [](int d) {
        py::list out;
        for (auto& p : partitions_of(d)) out.append(from_partition(p));
        return out;
    }, py::arg("d"));

    m.def("p_core_quotient",
          [](const std::vector<int>& parts, int p, int runner_offset) {
              PQuotientData q = p_core_quotient(to_partition(parts), p, runner_offset);
              py::dict out;
              out["core"] = from_partition(q.core);
              py::list quotient;
              for (auto& comp : q.quotient) quotient.append(from_partition(comp));
              out["quotient"] = quotient;
              out["p"] = q.p;
              return out;
          },
          py::arg("partition"), py::arg("p"), py::arg("runner_offset") = 0);

    m.def("from_core_quotient",
          [](const std::vector<int>& core,
             const std::vector<std::vector<int>>& quotient, int p,
             int runner_offset) {
              PQuotientData q;
              q.p = p;
              q.core = to_partition(core);
              for (auto& comp : quotient) q.quotient.push_back(to_partition(comp));
              return from_partition(from_core_quotient(q, runner_offset));
          },
          py::arg("core"), py::arg("quotient"), py::arg("p"),
          py::arg("runner_offset") = 0);

    m.def("f_k",
          [](const std::vector<int>& parts, int p, int k, int i) {
              return from_partition(
                  f_k_iterated(to_partition(parts), p, k, i));
          },
          py::arg("partition"), py::arg("p"), py::arg("k"), py::arg("i") = 1);

    m.def("lr_coefficients",
          [](const std::vector<int>& mu, const std::vector<int>& nu) {
              py::dict out;
              for (auto& [lambda, coeff] :
                   lr_coefficients(to_partition(mu), to_partition(nu)))
                  out[from_partition(lambda)] = coeff;
              return out;
          },
          py::arg("mu"), py::arg("nu"));

    m.def("character",
          [](const std::vector<int>& lambda, const std::vector<int>& rho) {
              return character(to_partition(lambda),
                               CycleType(to_partition(rho)));
          },
          py::arg("lambda_"), py::arg("rho"));

    m.def("character_table", [](int d) {
        CharacterTable t = character_table(d);
        py::dict out;
        py::list classes;
        for (auto& rho : t.classes) classes.append(from_partition(rho.cycles()));
        out["classes"] = classes;
        py::dict rows;
        for (size_t r = 0; r < t.rows.size(); ++r)
            rows[from_partition(t.rows[r])] = t.values[r];
        out["rows"] = rows;
        return out;
    }, py::arg("d"));

    m.def("a_space", [](int p, int i) {
        return poincare_pairs(a_space(p, i).poincare);
    }, py::arg("p"), py::arg("i"));

    m.def("s_space", [](int p, int i) {
        return poincare_pairs(s_space(p, i).poincare);
    }, py::arg("p"), py::arg("i"));

    m.def("ext_weyl_schur",
          [](const std::vector<int>& mu, const std::vector<int>& lambda, int p,
             int i) {
              return answer_dict(
                  ext_weyl_schur_twisted(to_partition(mu), to_partition(lambda), p, i));
          },
          py::arg("mu"), py::arg("lambda_"), py::arg("p"), py::arg("i"));

    m.def("ext_divided",
          [](const std::vector<int>& lambda, const std::string& functor, int p,
             int i) {
              return answer_dict(ext_divided_vs_twisted(
                  to_partition(lambda), FunctorExpr::parse(functor, p), p, i));
          },
          py::arg("lambda_"), py::arg("functor"), py::arg("p"), py::arg("i"));

    m.def("ext_fk",
          [](const std::vector<int>& lambda, int p, int i, int k) {
              return answer_dict(ext_untwisted_from_fk(to_partition(lambda), p, i, k));
          },
          py::arg("lambda_"), py::arg("p"), py::arg("i"), py::arg("k"));

    m.def("ext_weyl_fk",
          [](const std::vector<int>& mu, const std::vector<int>& lambda, int p,
             int i, int j, int k) {
              return answer_dict(ext_weyl_vs_fk_schur(
                  to_partition(mu), to_partition(lambda), p, i, j, k));
          },
          py::arg("mu"), py::arg("lambda_"), py::arg("p"), py::arg("i"),
          py::arg("j"), py::arg("k"));

    m.def("kan_normalize",
          [](const std::string& expr, int p) {
              NormalizeResult r = normalize(FunctorExpr::parse(expr, p), p);
              py::dict out;
              out["normal_form"] = r.expr.to_string();
              py::list trace;
              for (auto& step : r.trace) {
                  py::dict s;
                  s["rule"] = step.rule;
                  s["before"] = step.before;
                  s["after"] = step.after;
                  trace.append(s);
              }
              out["trace"] = trace;
              return out;
          },
          py::arg("expr"), py::arg("p"));

    m.def("evaluate_ext",
          [](const std::string& expr, int p) {
              return answer_dict(evaluate_ext_query(FunctorExpr::parse(expr, p), p));
          },
          py::arg("expr"), py::arg("p"));

    m.attr("__version__") = "1.0.0";
}
