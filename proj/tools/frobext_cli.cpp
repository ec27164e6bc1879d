#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frobext/extcalc.hpp"
#include "frobext/kan.hpp"
#include "frobext/oracle.hpp"
#include "frobext/partition.hpp"
#include "frobext/render.hpp"
#include "frobext/symchar.hpp"

namespace {

using frobext::CycleType;
using frobext::ExtAnswer;
using frobext::FunctorExpr;
using frobext::Int;
using frobext::Partition;
using frobext::PQuotientData;
using json = nlohmann::json;
using frobext::render::Format;

int runner_offset_from_env() {
    const char* raw = std::getenv("FROBEXT_RUNNER_OFFSET");
    if (raw == nullptr || *raw == '\0') return 0;
    try {
        return std::stoi(raw);
    } catch (const std::exception&) {
        throw std::invalid_argument(
            "FROBEXT_RUNNER_OFFSET must be an integer, got '" +
            std::string(raw) + "'");
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct ExtCommandOutput {
    std::string query;
    ExtAnswer answer;
    json parameters;  // command-specific fields merged into the JSON object
};

std::string render_ext(const ExtCommandOutput& out, Format format) {
    if (format == Format::Json) {
        json j;
        j["query"] = out.query;
        j["poincare"] = frobext::render::poincare_json(out.answer.poincare);
        j["shift"] = frobext::render::shift_json(out.answer.shift);
        std::string label = frobext::render::label_text(out.answer);
        j["label"] = label.empty() ? json(nullptr) : json(label);
        j["provenance"] = out.answer.provenance;
        for (auto& [key, value] : out.parameters.items()) j[key] = value;
        return dump(j);
    }
    std::ostringstream os;
    if (format == Format::Latex)
        os << "Ext = $" << frobext::render::answer_value_latex(out.answer) << "$\n";
    else
        os << "Ext = " << frobext::render::answer_value_text(out.answer) << "\n";
    std::string label = frobext::render::label_text(out.answer);
    if (!label.empty()) os << "label: " << label << "\n";
    os << "provenance: " << out.answer.provenance << "\n";
    return os.str();
}

std::string partition_text(const Partition& p) { return p.to_string(); }

struct Options {
    std::string mu;
    std::string lambda;
    std::string nu;
    std::string functor;
    std::string expr;
    int p = 2;
    int i = 1;
    int j = 0;
    int k = 0;
    int d = 1;
    std::optional<Int> shift_override;
    std::string format = "text";
};

void apply_shift_override(ExtAnswer& answer, const Options& opt) {
    if (opt.shift_override.has_value())
        answer.shift = answer.shift.with_override_all(*opt.shift_override);
}

std::string run_ext_weyl_schur(const Options& opt, Format format) {
    Partition mu = Partition::parse(opt.mu);
    Partition lambda = Partition::parse(opt.lambda);
    ExtAnswer answer = frobext::ext_weyl_schur_twisted(mu, lambda, opt.p, opt.i);
    Options o = opt;
    apply_shift_override(answer, o);
    json params;
    params["p"] = opt.p;
    params["i"] = opt.i;
    params["j"] = nullptr;
    params["k"] = nullptr;
    params["mu"] = frobext::render::partition_json(mu);
    params["lambda"] = frobext::render::partition_json(lambda);
    return render_ext({"ext-weyl-schur", answer, params}, format);
}

std::string run_ext_divided(const Options& opt, Format format) {
    Partition lambda = Partition::parse(opt.lambda);
    FunctorExpr f = FunctorExpr::parse(opt.functor, opt.p);
    ExtAnswer answer = frobext::ext_divided_vs_twisted(lambda, f, opt.p, opt.i);
    json params;
    params["p"] = opt.p;
    params["i"] = opt.i;
    params["j"] = nullptr;
    params["k"] = nullptr;
    params["mu"] = nullptr;
    params["lambda"] = frobext::render::partition_json(lambda);
    params["functor"] = f.to_string();
    return render_ext({"ext-divided", answer, params}, format);
}

std::string run_ext_fk(const Options& opt, Format format) {
    Partition lambda = Partition::parse(opt.lambda);
    ExtAnswer answer = frobext::ext_untwisted_from_fk(lambda, opt.p, opt.i, opt.k);
    apply_shift_override(answer, opt);
    json params;
    params["p"] = opt.p;
    params["i"] = opt.i;
    params["j"] = nullptr;
    params["k"] = opt.k;
    params["mu"] = nullptr;
    params["lambda"] = frobext::render::partition_json(lambda);
    return render_ext({"ext-fk", answer, params}, format);
}

std::string run_ext_weyl_fk(const Options& opt, Format format) {
    Partition mu = Partition::parse(opt.mu);
    Partition lambda = Partition::parse(opt.lambda);
    ExtAnswer answer =
        frobext::ext_weyl_vs_fk_schur(mu, lambda, opt.p, opt.i, opt.j, opt.k);
    apply_shift_override(answer, opt);
    json params;
    params["p"] = opt.p;
    params["i"] = opt.i;
    params["j"] = opt.j;
    params["k"] = opt.k;
    params["mu"] = frobext::render::partition_json(mu);
    params["lambda"] = frobext::render::partition_json(lambda);
    return render_ext({"ext-weyl-fk", answer, params}, format);
}

std::string run_kan_normalize(const Options& opt, Format format) {
    FunctorExpr input = FunctorExpr::parse(opt.expr, opt.p);
    frobext::NormalizeResult result = frobext::normalize(input, opt.p);

    std::vector<std::string> rules;
    for (auto& step : result.trace)
        if (std::find(rules.begin(), rules.end(), step.rule) == rules.end())
            rules.push_back(step.rule);
    std::string provenance;
    for (size_t n = 0; n < rules.size(); ++n)
        provenance += (n ? ", " : "") + rules[n];
    if (provenance.empty()) provenance = "already normal";

    if (format == Format::Json) {
        json j;
        j["query"] = "kan-normalize";
        j["p"] = opt.p;
        j["input"] = input.to_string();
        j["normal_form"] = result.expr.to_string();
        json trace = json::array();
        for (auto& step : result.trace) {
            json s;
            s["rule"] = step.rule;
            s["before"] = step.before;
            s["after"] = step.after;
            trace.push_back(s);
        }
        j["trace"] = trace;
        j["provenance"] = provenance;
        return dump(j);
    }
    std::ostringstream os;
    os << "input: " << input.to_string() << "\n";
    os << "normal form: " << result.expr.to_string() << "\n";
    os << "trace:\n";
    for (size_t n = 0; n < result.trace.size(); ++n)
        os << "  " << (n + 1) << ". [" << result.trace[n].rule << "] "
           << result.trace[n].before << " -> " << result.trace[n].after << "\n";
    os << "provenance: " << provenance << "\n";
    return os.str();
}

json quotient_json(const PQuotientData& q) {
    json arr = json::array();
    for (auto& part : q.quotient)
        arr.push_back(frobext::render::partition_json(part));
    return arr;
}

std::string run_core_quotient(const Options& opt, Format format) {
    Partition lambda = Partition::parse(opt.lambda);
    int offset = runner_offset_from_env();
    PQuotientData q = frobext::p_core_quotient(lambda, opt.p, offset);
    if (format == Format::Json) {
        json j;
        j["query"] = "partition-core-quotient";
        j["lambda"] = frobext::render::partition_json(lambda);
        j["p"] = opt.p;
        j["runner_offset"] = offset;
        j["core"] = frobext::render::partition_json(q.core);
        j["quotient"] = quotient_json(q);
        j["provenance"] = "Prop 3.7";
        return dump(j);
    }
    std::ostringstream os;
    os << "lambda: " << partition_text(lambda) << "\n";
    os << "p: " << opt.p << "\n";
    if (offset != 0) os << "runner offset: " << offset << "\n";
    os << "core: " << partition_text(q.core) << "\n";
    for (size_t n = 0; n < q.quotient.size(); ++n)
        os << "quotient[" << n << "]: " << partition_text(q.quotient[n]) << "\n";
    int quotient_weight = 0;
    for (auto& part : q.quotient) quotient_weight += part.weight();
    os << "weight: " << lambda.weight() << " = " << q.core.weight() << " + "
       << opt.p << "*" << quotient_weight << "\n";
    os << "provenance: Prop 3.7\n";
    return os.str();
}

std::string run_partition_fk(const Options& opt, Format format) {
    Partition lambda = Partition::parse(opt.lambda);
    int offset = runner_offset_from_env();
    Partition result =
        frobext::f_k_iterated(lambda, opt.p, opt.k, opt.i, offset);
    PQuotientData certificate = frobext::p_core_quotient(result, opt.p, offset);
    if (format == Format::Json) {
        json j;
        j["query"] = "partition-fk";
        j["lambda"] = frobext::render::partition_json(lambda);
        j["p"] = opt.p;
        j["k"] = opt.k;
        j["i"] = opt.i;
        j["runner_offset"] = offset;
        j["result"] = frobext::render::partition_json(result);
        j["core"] = frobext::render::partition_json(certificate.core);
        j["quotient"] = quotient_json(certificate);
        j["provenance"] = "Prop 3.7";
        return dump(j);
    }
    std::ostringstream os;
    os << "lambda: " << partition_text(lambda) << "\n";
    os << "p: " << opt.p << ", k: " << opt.k << ", i: " << opt.i << "\n";
    if (offset != 0) os << "runner offset: " << offset << "\n";
    os << "result: " << partition_text(result) << "\n";
    os << "certificate: core " << partition_text(certificate.core);
    for (size_t n = 0; n < certificate.quotient.size(); ++n)
        if (!certificate.quotient[n].empty())
            os << ", quotient[" << n
               << "] = " << partition_text(certificate.quotient[n]);
    os << "\n";
    os << "provenance: Prop 3.7\n";
    return os.str();
}

std::string run_char_table(const Options& opt, Format format) {
    frobext::CharacterTable table = frobext::character_table(opt.d);
    if (format == Format::Json) {
        json j;
        j["query"] = "char-table";
        j["d"] = opt.d;
        json classes = json::array();
        for (auto& rho : table.classes)
            classes.push_back(frobext::render::partition_json(rho.cycles()));
        j["classes"] = classes;
        json rows = json::array();
        for (size_t r = 0; r < table.rows.size(); ++r) {
            json row;
            row["lambda"] = frobext::render::partition_json(table.rows[r]);
            row["values"] = table.values[r];
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["provenance"] = "Cor 3.5";
        return dump(j);
    }
    std::ostringstream os;
    os << "d: " << opt.d << "\n";
    os << "classes:";
    for (auto& rho : table.classes) os << " " << rho.cycles().to_string();
    os << "\n";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        os << "[" << table.rows[r].to_string() << "]:";
        for (Int v : table.values[r]) os << " " << v;
        os << "\n";
    }
    os << "provenance: Cor 3.5\n";
    return os.str();
}

int run_oracle_check() {
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    // character recursion vs explicit polytabloid matrices
    for (int d = 1; d <= 4; ++d) {
        bool ok = true;
        for (auto& lambda : frobext::partitions_of(d)) {
            frobext::oracle::ExplicitModule m = frobext::oracle::specht_module(lambda);
            for (auto& rho : frobext::cycle_types_of(d)) {
                Int expected = frobext::character(lambda, rho);
                Int actual =
                    frobext::oracle::character_from_module(m, rho).coefficient(0);
                if (expected != actual) ok = false;
            }
        }
        report("characters match polytabloid traces, d = " + std::to_string(d), ok);
    }

    // character-sum evaluation vs two-sided projector traces
    for (int d = 1; d <= 2; ++d) {
        bool ok = true;
        frobext::GradedSpace u = frobext::a_space(2, 1);
        for (auto& mu : frobext::partitions_of(d))
            for (auto& lambda : frobext::partitions_of(d)) {
                auto direct = frobext::ext_weyl_schur_twisted(mu, lambda, 2, 1);
                auto traced =
                    frobext::oracle::graded_isotypic_trace(mu, lambda, u, d);
                if (!(direct.poincare == traced)) ok = false;
            }
        report("character sums match projector traces, d = " + std::to_string(d), ok);
    }

    std::cout << "provenance: polytabloid and projector oracles\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ext computations for Frobenius-twisted polynomial functors"};
    app.require_subcommand(0, 1);

    // `char table <d>` is accepted as an alias for `char-table <d>`
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() >= 2 && args[0] == "char" && args[1] == "table") {
        args.erase(args.begin());
        args[0] = "char-table";
    }

    Options opt;
    std::string format_name = "text";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format: text, json, latex")
            ->default_val("text");
    };
    auto add_shift = [&](CLI::App* cmd) {
        cmd->add_option("--shift", [&opt](const CLI::results_t& res) {
            opt.shift_override = std::stoll(res[0]);
            return true;
        }, "Fold symbolic shifts with this explicit value");
    };

    CLI::App* ews = app.add_subcommand(
        "ext-weyl-schur", "Ext between twisted Weyl and Schur functors");
    ews->add_option("--mu", opt.mu, "Weyl diagram, e.g. 2,1")->required();
    ews->add_option("--lambda", opt.lambda, "Schur diagram")->required();
    ews->add_option("--p", opt.p, "characteristic (prime)")->required();
    ews->add_option("--i", opt.i, "twist level")->required();
    add_format(ews);
    add_shift(ews);

    CLI::App* ed = app.add_subcommand(
        "ext-divided", "Ext from a twisted divided-power product into a twisted functor");
    ed->add_option("--lambda", opt.lambda, "multidegree diagram")->required();
    ed->add_option("--functor", opt.functor, "functor expression, e.g. I or Schur[2,1]")
        ->required();
    ed->add_option("--p", opt.p, "characteristic (prime)")->required();
    ed->add_option("--i", opt.i, "twist level")->required();
    add_format(ed);

    CLI::App* efk = app.add_subcommand(
        "ext-fk", "Ext from the twisted tensor power into the F_k-family Schur functor");
    efk->add_option("--lambda", opt.lambda, "diagram")->required();
    efk->add_option("--p", opt.p, "characteristic (prime)")->required();
    efk->add_option("--i", opt.i, "twist level")->required();
    efk->add_option("--k", opt.k, "runner index")->required();
    add_format(efk);
    add_shift(efk);

    CLI::App* ewfk = app.add_subcommand(
        "ext-weyl-fk", "Ext between a twisted Weyl functor and a twisted F_k-family Schur functor");
    ewfk->add_option("--mu", opt.mu, "Weyl diagram")->required();
    ewfk->add_option("--lambda", opt.lambda, "diagram")->required();
    ewfk->add_option("--p", opt.p, "characteristic (prime)")->required();
    ewfk->add_option("--i", opt.i, "inner twist level")->required();
    ewfk->add_option("--j", opt.j, "outer twist level")->required();
    ewfk->add_option("--k", opt.k, "runner index")->required();
    add_format(ewfk);
    add_shift(ewfk);

    CLI::App* kan = app.add_subcommand("kan-normalize",
                                       "Normalize a functor expression, with trace");
    kan->add_option("--expr", opt.expr, "expression")->required();
    kan->add_option("--p", opt.p, "characteristic (prime)")->required();
    add_format(kan);

    CLI::App* pcq = app.add_subcommand("partition-core-quotient",
                                       "p-core and p-quotient of a partition");
    pcq->add_option("--lambda", opt.lambda, "partition")->required();
    pcq->add_option("--p", opt.p, "p >= 2")->required();
    add_format(pcq);

    CLI::App* pfk = app.add_subcommand(
        "partition-fk", "F_k^i(lambda) with its core/quotient certificate");
    pfk->add_option("--lambda", opt.lambda, "partition")->required();
    pfk->add_option("--p", opt.p, "p >= 2")->required();
    pfk->add_option("--k", opt.k, "runner index")->required();
    pfk->add_option("--i", opt.i, "iterations")->default_val(1);
    add_format(pfk);

    CLI::App* ct = app.add_subcommand("char-table",
                                      "character table of the symmetric group");
    ct->add_option("d", opt.d, "degree d >= 1")->required();
    add_format(ct);

    CLI::App* oc = app.add_subcommand("oracle-check",
                                      "reproduce the certification runs");
    oc->group("");  // hidden

    try {
        std::reverse(args.begin(), args.end());  // CLI11 takes reversed args
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (app.get_subcommands().empty()) {
        std::cerr << app.help() << std::flush;
        return 2;
    }

    try {
        Format format = frobext::render::parse_format(format_name);
        std::string out;
        if (ews->parsed()) out = run_ext_weyl_schur(opt, format);
        else if (ed->parsed()) out = run_ext_divided(opt, format);
        else if (efk->parsed()) out = run_ext_fk(opt, format);
        else if (ewfk->parsed()) out = run_ext_weyl_fk(opt, format);
        else if (kan->parsed()) out = run_kan_normalize(opt, format);
        else if (pcq->parsed()) out = run_core_quotient(opt, format);
        else if (pfk->parsed()) out = run_partition_fk(opt, format);
        else if (ct->parsed()) out = run_char_table(opt, format);
        else if (oc->parsed()) return run_oracle_check();
        std::cout << out << std::flush;
        return 0;
    } catch (const frobext::unsupported_functor& e) {
        std::cerr << "unsupported functor family: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
