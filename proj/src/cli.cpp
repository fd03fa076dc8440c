#include "bchresum/cli.hpp"

#include "bchresum/diagrams.hpp"
#include "bchresum/errors.hpp"
#include "bchresum/json_io.hpp"
#include "bchresum/kernel.hpp"
#include "bchresum/oracle.hpp"
#include "bchresum/resummation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace bchresum::cli {

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
// keeps runs at desk scale and far below the word-length limit
constexpr int kMaxDegree = 24;

std::string latex_scalar(const Scalar &c)
{
    if (c.denominator() == 1)
        return c.numerator().get_str();
    return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

std::string to_latex(const NCPoly &p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[w, c] : p.terms()) {
        Scalar mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const std::string word = w.length == 0 ? "1" : w.to_string(p.alphabet());
        if (mag == Scalar(1))
            os << word;
        else if (w.length == 0)
            os << latex_scalar(mag);
        else
            os << latex_scalar(mag) << "\\," << word;
    }
    return os.str();
}

void validate(const RunConfig &cfg)
{
    if (cfg.max_order < 1)
        throw ConfigError("--max-order must be >= 1");
    if (cfg.trunc_degree < 1 || cfg.trunc_degree > kMaxDegree)
        throw ConfigError("--degree must lie in 1.." + std::to_string(kMaxDegree));
    if (cfg.order < 1)
        throw ConfigError("--order must be >= 1");
    if (cfg.threads < 1)
        throw ConfigError("--threads must be >= 1");
    if (cfg.subcommand == "verify" && cfg.max_order < cfg.trunc_degree)
        throw ConfigError("verify needs --max-order >= --degree: q_m has u-degree m, so words of length D "
                          "receive contributions from every q_m with m <= D");
    if (cfg.subcommand == "bernoulli" && cfg.bernoulli_max < 0)
        throw ConfigError("--max must be >= 0");
    if (cfg.subcommand == "diagrams" && cfg.format != Format::Dot && cfg.format != Format::Text)
        throw ConfigError("diagrams supports --format dot|text");
    if (cfg.subcommand == "pi" && cfg.format != Format::Json && cfg.format != Format::Text)
        throw ConfigError("pi supports --format text|json");
    if (cfg.subcommand == "qseries" && cfg.format == Format::Dot)
        throw ConfigError("qseries supports --format text|json|latex");
}

int cmd_qseries(const RunConfig &cfg, std::ostream &out)
{
    const auto g = psi_via_descendants(cfg.max_order, cfg.trunc_degree, {cfg.threads});
    const auto q = q_series(g);
    switch (cfg.format) {
    case Format::Json: {
        nlohmann::ordered_json j;
        j["max_order"] = cfg.max_order;
        j["trunc_degree"] = cfg.trunc_degree;
        j["q"] = nlohmann::ordered_json::array();
        for (std::size_t m = 0; m < q.size(); ++m) {
            nlohmann::ordered_json entry;
            entry["m"] = m + 1;
            const auto body = to_json(q[m]);
            for (const auto &[k, v] : body.items())
                entry[k] = v;
            j["q"].push_back(entry);
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Latex:
        out << "\\begin{align*}\n";
        for (std::size_t m = 0; m < q.size(); ++m)
            out << "q_{" << m + 1 << "} &= " << to_latex(q[m]) << (m + 1 < q.size() ? " \\\\\n" : "\n");
        out << "\\end{align*}\n";
        break;
    default:
        for (std::size_t m = 0; m < q.size(); ++m)
            out << "q_" << m + 1 << " = " << q[m].to_text() << '\n';
    }
    return 0;
}

int cmd_pi(const RunConfig &cfg, std::ostream &out)
{
    const auto g = psi_via_descendants(cfg.order, cfg.trunc_degree, {cfg.threads});
    const TSeries &pi = g.part(cfg.order);
    if (cfg.format == Format::Json) {
        nlohmann::ordered_json j;
        j["order"] = cfg.order;
        const auto body = to_json(pi);
        for (const auto &[k, v] : body.items())
            j[k] = v;
        out << j.dump(2) << '\n';
    } else {
        out << "pi_" << cfg.order << " = " << pi.to_text() << '\n';
    }
    return 0;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out)
{
    const auto report = verify(cfg.max_order, cfg.trunc_degree, cfg.threads);
    if (cfg.report_json) {
        out << report.to_json().dump(2) << '\n';
    } else {
        out << "degree " << report.trunc_degree << ", max order " << report.max_order << ": "
            << (report.matched ? "matched" : "MISMATCH") << '\n';
        if (report.first_discrepancy)
            out << "first discrepancy at word '" << report.first_discrepancy->word << "': expected "
                << report.first_discrepancy->expected << ", got " << report.first_discrepancy->actual << '\n';
    }
    return report.matched ? 0 : kExitMismatch;
}

int cmd_residual(const RunConfig &cfg, std::ostream &out)
{
    const auto g = psi_via_descendants(cfg.max_order, cfg.trunc_degree, {cfg.threads});
    const auto report = ode_residual(g);
    out << "psi(0) = " << report.initial_value.to_text() << '\n';
    out << "residual = " << report.residual.to_text() << '\n';
    return report.vanishes() ? 0 : kExitMismatch;
}

int cmd_diagrams(const RunConfig &cfg, std::ostream &out)
{
    const auto doc = pi_diagrams(cfg.order);
    if (!cfg.out_dir.empty())
        std::filesystem::create_directories(cfg.out_dir);
    for (std::size_t i = 0; i < doc.entries.size(); ++i) {
        const auto &e = doc.entries[i];
        const std::string name = "pi" + std::to_string(cfg.order) + "_" + std::to_string(i + 1);
        std::string body = cfg.format == Format::Dot ? tree_to_dot(e.tree, e.weight, name)
                                                     : tree_to_text(e.tree, e.weight) + '\n';
        if (cfg.out_dir.empty()) {
            out << body;
        } else {
            auto path = std::filesystem::path(cfg.out_dir) / (name + (cfg.format == Format::Dot ? ".dot" : ".txt"));
            std::ofstream f(path);
            if (!f)
                throw std::runtime_error("cannot write " + path.string());
            f << body;
        }
    }
    return 0;
}

int cmd_bernoulli(const RunConfig &cfg, std::ostream &out)
{
    const auto table = bernoulli_table(cfg.bernoulli_max);
    for (std::size_t n = 0; n < table.size(); ++n)
        out << n << ": " << table[n].to_string() << '\n';
    return 0;
}

int dispatch(const RunConfig &cfg, std::ostream &out)
{
    static const std::map<std::string, int (*)(const RunConfig &, std::ostream &)> commands = {
        {"qseries", cmd_qseries}, {"pi", cmd_pi},           {"verify", cmd_verify},
        {"residual", cmd_residual}, {"diagrams", cmd_diagrams}, {"bernoulli", cmd_bernoulli},
    };
    return commands.at(cfg.subcommand)(cfg, out);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Resummed Baker-Campbell-Hausdorff series in powers of x+y"};
    app.name("bchresum");
    app.require_subcommand(1, 1);

    const std::map<std::string, Format> formats = {
        {"text", Format::Text}, {"json", Format::Json}, {"latex", Format::Latex}, {"dot", Format::Dot}};

    auto add_common = [&](CLI::App *sub, bool with_order_degree) {
        if (with_order_degree) {
            sub->add_option("--max-order", cfg.max_order, "highest k-order N")->capture_default_str();
            sub->add_option("--degree", cfg.trunc_degree, "truncation degree D (word length)")
                ->capture_default_str();
        }
        sub->add_option("--threads", cfg.threads, "worker threads for tree evaluation");
        sub->add_option("--out", cfg.output_path, "write output to this file instead of stdout");
    };
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", cfg.format, "output format")->transform(CLI::CheckedTransformer(formats));
        sub->add_flag_callback("--json", [&] { cfg.format = Format::Json; });
        sub->add_flag_callback("--latex", [&] { cfg.format = Format::Latex; });
        sub->add_flag_callback("--text", [&] { cfg.format = Format::Text; });
    };

    auto *qseries = app.add_subcommand("qseries", "print q_1 .. q_N");
    add_common(qseries, true);
    add_format(qseries);

    auto *pi = app.add_subcommand("pi", "print pi_n with explicit powers of t");
    add_common(pi, false);
    pi->add_option("--order", cfg.order, "n")->required();
    pi->add_option("--degree", cfg.trunc_degree, "truncation degree D")->capture_default_str();
    add_format(pi);

    auto *verify_cmd = app.add_subcommand("verify", "compare against log(exp(x) exp(y))");
    add_common(verify_cmd, true);
    verify_cmd->add_option_function<std::string>(
        "--report",
        [&](const std::string &v) {
            if (v != "json")
                throw CLI::ValidationError("--report", "only 'json' is supported");
            cfg.report_json = true;
        },
        "report format (json)");

    auto *residual = app.add_subcommand("residual", "check the flow equation for psi");
    add_common(residual, true);

    auto *diagrams = app.add_subcommand("diagrams", "emit the diagrams of pi_n");
    add_common(diagrams, false);
    diagrams->add_option("--order", cfg.order, "n")->required();
    diagrams->add_option("--format", cfg.format, "dot or text")->transform(CLI::CheckedTransformer(formats));
    diagrams->add_option("--out-dir", cfg.out_dir, "write one file per diagram");

    auto *bern = app.add_subcommand("bernoulli", "print B_0 .. B_N");
    bern->add_option("--max", cfg.bernoulli_max, "largest index")->capture_default_str();
    bern->add_option("--out", cfg.output_path, "write output to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.subcommand == "diagrams" && diagrams->count("--format") == 0)
        cfg.format = Format::Dot;

    try {
        validate(cfg);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (cfg.output_path.empty())
            return dispatch(cfg, out);
        std::ofstream f(cfg.output_path);
        if (!f) {
            err << "error: cannot open " << cfg.output_path << '\n';
            return kExitUsage;
        }
        return dispatch(cfg, f);
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace bchresum::cli
