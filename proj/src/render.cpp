#include "frobext/render.hpp"

#include <sstream>
#include <stdexcept>

namespace frobext {
namespace render {

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "latex") return Format::Latex;
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected text, json, or latex)");
}

nlohmann::json poincare_json(const PoincarePoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [deg, coeff] : p.pairs())
        arr.push_back(nlohmann::json::array({deg, coeff}));
    return arr;
}

nlohmann::json shift_json(const ShiftSpec& s) {
    nlohmann::json out = nlohmann::json::object();
    if (!s.is_symbolic()) {
        out["value"] = s.offset();
        return out;
    }
    if (s.symbols().size() == 1) {
        out["symbolic"] = nlohmann::json::array(
            {s.symbols()[0].i, s.symbols()[0].k});
    } else {
        nlohmann::json syms = nlohmann::json::array();
        for (auto& sym : s.symbols())
            syms.push_back(nlohmann::json::array({sym.i, sym.k}));
        out["symbolic"] = syms;
    }
    if (s.offset() != 0) out["value"] = s.offset();
    return out;
}

nlohmann::json partition_json(const Partition& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

namespace {

std::string value_text(const ExtAnswer& a, bool latex) {
    const ShiftSpec& s = a.shift;
    PoincarePoly poly = a.poincare;
    // numeric offsets fold into the polynomial
    if (s.offset() != 0) {
        if (s.offset() < 0)
            throw std::domain_error("negative shift cannot be folded into a "
                                    "Poincare polynomial");
        poly = PoincarePoly(
            poly.poly().shifted(static_cast<int>(s.offset())));
    }
    std::string body = latex ? poly.to_latex() : poly.to_string();
    if (!s.is_symbolic()) return body;

    std::ostringstream os;
    for (auto& sym : s.symbols()) {
        if (latex)
            os << "t^{h^{" << sym.i << "}_{" << sym.k << "}} \\cdot ";
        else
            os << "t^{h(" << sym.i << "," << sym.k << ")} * ";
    }
    if (latex)
        os << "\\left(" << body << "\\right)";
    else
        os << "(" << body << ")";
    return os.str();
}

}  // namespace

std::string answer_value_text(const ExtAnswer& a) { return value_text(a, false); }
std::string answer_value_latex(const ExtAnswer& a) { return value_text(a, true); }

std::string label_text(const ExtAnswer& a) {
    if (!a.specht_label.has_value()) return "";
    const Partition& p = *a.specht_label;
    return "Specht[" + (p.empty() ? "" : p.to_string()) + "]";
}

}  // namespace render
}  // namespace frobext
