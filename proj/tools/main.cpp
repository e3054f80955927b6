#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "reebcert/diagram_io.hpp"
#include "reebcert/errors.hpp"
#include "reebcert/lens.hpp"
#include "reebcert/report.hpp"
#include "reebcert/seifert.hpp"
#include "reebcert/surgery.hpp"

namespace {

using namespace reebcert;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitFile = 3;
constexpr int kExitInternal = 4;

Int parse_int(const std::string& text, const std::string& what) {
    if (text.empty()) throw InputError(what + " must be an integer");
    std::size_t start = text[0] == '-' ? 1 : 0;
    if (start == text.size()) throw InputError(what + " must be an integer");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw InputError(what + " must be an integer, got '" + text + "'");
    return Int(text);
}

struct Cli {
    std::string format = "text";
    std::string p, q, pmax, n, path;
    std::string parallel = "off";
};

int run(int argc, char** argv) {
    CLI::App app{"exact Weinstein-conjecture certificates from contact surgery data"};
    app.fallthrough();
    app.require_subcommand(1);
    Cli cli;
    app.add_option("--format", cli.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    CLI::App* cmd_cfrac = app.add_subcommand(
        "cfrac", "negative continued fraction expansion of -p/q with the q-sequence");
    cmd_cfrac->add_option("p", cli.p, "numerator, p > q")->required();
    cmd_cfrac->add_option("q", cli.q, "denominator, q >= 1 and coprime to p")->required();

    CLI::App* cmd_lens = app.add_subcommand("lens", "tight contact structures on L(p,q)");
    cmd_lens->require_subcommand(1);
    CLI::App* cmd_lens_enumerate = cmd_lens->add_subcommand(
        "enumerate", "list the tight structures with their Reeb-link classes");
    cmd_lens_enumerate->add_option("p", cli.p)->required();
    cmd_lens_enumerate->add_option("q", cli.q)->required();
    CLI::App* cmd_lens_count =
        cmd_lens->add_subcommand("count", "number of tight structures up to isotopy");
    cmd_lens_count->add_option("p", cli.p)->required();
    cmd_lens_count->add_option("q", cli.q)->required();

    CLI::App* cmd_survey = app.add_subcommand(
        "survey", "check every L(p,q) with p <= pmax: counts, classes, and proof bounds");
    cmd_survey->add_option("pmax,--pmax", cli.pmax, "largest p to survey")->required();
    cmd_survey->add_option("--parallel", cli.parallel, "evaluate cells concurrently")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();

    CLI::App* cmd_diagram =
        app.add_subcommand("diagram", "Weinstein-conjecture verdict for a surgery diagram file");
    cmd_diagram->add_option("path", cli.path, "diagram file")->required();

    CLI::App* cmd_brieskorn = app.add_subcommand(
        "brieskorn", "certified record for the Brieskorn sphere Sigma(2,3,6n-1)");
    cmd_brieskorn->add_option("n", cli.n, "index n >= 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInput;
    }

    const report::Format format = report::parse_format(cli.format);

    if (cmd_cfrac->parsed()) {
        LensSpace lens = make_lens_space(parse_int(cli.p, "p"), parse_int(cli.q, "q"));
        std::cout << report::cfrac_report(lens, format);
        return kExitOk;
    }
    if (cmd_lens->parsed()) {
        LensSpace lens = make_lens_space(parse_int(cli.p, "p"), parse_int(cli.q, "q"));
        if (cmd_lens_enumerate->parsed())
            std::cout << report::lens_enumerate_report(lens, format);
        else
            std::cout << report::lens_count_report(lens, format);
        return kExitOk;
    }
    if (cmd_survey->parsed()) {
        Int pmax = parse_int(cli.pmax, "pmax");
        if (pmax < 2) throw InputError("survey needs pmax >= 2");
        SurveyOptions options;
        options.parallel = cli.parallel == "on";
        SurveyReport result = survey(pmax, options);
        std::cout << report::survey_report(result, options.parallel, format);
        return kExitOk;
    }
    if (cmd_diagram->parsed()) {
        FramedLinkDiagram diagram = load_diagram(cli.path);
        auto violations = validate_diagram(diagram);
        if (!violations.empty()) {
            std::cerr << "error: invalid diagram" << std::endl;
            for (const auto& v : violations) std::cerr << "  " << v << std::endl;
            return kExitInput;
        }
        WeinsteinVerdict verdict = weinstein_verdict(diagram);
        std::cout << report::diagram_report(diagram, verdict, format);
        return kExitOk;
    }
    if (cmd_brieskorn->parsed()) {
        BrieskornRecord record = brieskorn(parse_int(cli.n, "n"));
        std::cout << report::brieskorn_report(record, format);
        return kExitOk;
    }
    std::cerr << "error: no command given" << std::endl;
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInput;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitFile;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return kExitInternal;
    }
}
