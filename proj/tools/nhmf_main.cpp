#include <CLI11.hpp>

#include "nhmf/errors.hpp"
#include "nhmf/json_io.hpp"
#include "nhmf/nearly.hpp"
#include "nhmf/sl2rep.hpp"
#include "nhmf/structure.hpp"

#include <complex>
#include <cstdio>
#include <iostream>
#include <iterator>
#include <regex>
#include <string>

namespace {

using nhmf::Json;

void print_error(const char* kind, const std::string& message) {
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

std::string read_stdin() {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

nhmf::NearlyForm form_from_stdin() {
    return nhmf::form_from_json(nhmf::parse_json(read_stdin()));
}

// "a+bi" with plain decimal a and b (no exponents), e.g. "0.3+1.2i".
std::complex<double> parse_tau(const std::string& s) {
    static const std::regex pattern(R"(^([+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+))([+-](?:[0-9]+\.?[0-9]*|\.[0-9]+))i$)");
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw nhmf::ParseError("tau must have the form \"a+bi\" with decimal a, b");
    return {std::stod(m[1].str()), std::stod(m[2].str())};
}

std::string format_significant(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nearly holomorphic modular forms of level one (exact arithmetic)"};
    app.require_subcommand(1);

    int weight = 0;
    int degree = 0;
    long prec = 0;
    bool cuspidal = false;
    std::string op;
    long lambda = 0;
    long depth = 0;
    int v = 0;
    std::string tau_text;

    CLI::App* cmd_basis = app.add_subcommand("basis", "Emit spanning-set generators as JSON lines");
    cmd_basis->add_option("--weight", weight)->required();
    cmd_basis->add_option("--degree", degree)->required();
    cmd_basis->add_option("--prec", prec)->required();
    cmd_basis->add_flag("--cuspidal", cuspidal);

    CLI::App* cmd_apply = app.add_subcommand("apply", "Apply an operator to the form on standard input");
    cmd_apply->add_option("--op", op)->required()->check(CLI::IsMember({"raise", "lower", "casimir"}));

    CLI::App* cmd_decompose = app.add_subcommand("decompose", "Decompose the form on standard input");
    cmd_decompose->add_option("--degree", degree)->required();

    CLI::App* cmd_dim = app.add_subcommand("dim", "Dimension of the space of the given weight and degree bound");
    cmd_dim->add_option("--weight", weight)->required();
    cmd_dim->add_option("--degree", degree)->required();

    CLI::App* cmd_pconst = app.add_subcommand("pconst", "Petersson ladder constant");
    cmd_pconst->add_option("--weight", weight)->required();
    cmd_pconst->add_option("--v", v)->required();

    CLI::App* cmd_verma = app.add_subcommand("verma", "Verma module report");
    cmd_verma->add_option("--lambda", lambda)->required();
    cmd_verma->add_option("--depth", depth)->required();

    CLI::App* cmd_eval = app.add_subcommand("eval", "Evaluate the form on standard input at tau");
    cmd_eval->add_option("--tau", tau_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        print_error("ParseError", e.what());
        return 3;
    }

    try {
        if (cmd_basis->parsed()) {
            nhmf::SpanningSet s = cuspidal ? nhmf::cuspidal_spanning_set(weight, degree, prec)
                                           : nhmf::spanning_set(weight, degree, prec);
            for (const nhmf::SpanningGenerator& g : s.generators)
                std::cout << nhmf::form_to_json(g.form).dump() << "\n";
        } else if (cmd_apply->parsed()) {
            nhmf::NearlyForm f = form_from_stdin();
            nhmf::NearlyForm out = op == "raise"   ? nhmf::raise(f)
                                   : op == "lower" ? nhmf::lower(f)
                                                   : nhmf::casimir(f);
            std::cout << nhmf::form_to_json(out).dump() << "\n";
        } else if (cmd_decompose->parsed()) {
            nhmf::NearlyForm f = form_from_stdin();
            std::cout << nhmf::decomposition_to_json(nhmf::decompose(f, degree)).dump() << "\n";
        } else if (cmd_dim->parsed()) {
            std::cout << Json(nhmf::dim_N(weight, degree)).dump() << "\n";
        } else if (cmd_pconst->parsed()) {
            std::cout << Json(nhmf::rational_to_string(nhmf::petersson_constant(weight, v))).dump() << "\n";
        } else if (cmd_verma->parsed()) {
            nhmf::WeightModule m = nhmf::verma_module(lambda, depth);
            Json report{{"lambda", lambda},
                        {"depth", depth},
                        {"weights", m.weights},
                        {"singular_weights", nhmf::singular_weights(lambda, depth)},
                        {"casimir_scalar", nhmf::rational_to_string(nhmf::casimir_scalar(lambda))},
                        {"commutation_ok", nhmf::commutator_residuals(m).all_zero()}};
            std::cout << report.dump() << "\n";
        } else if (cmd_eval->parsed()) {
            std::complex<double> tau = parse_tau(tau_text);
            nhmf::NearlyForm f = form_from_stdin();
            if (tau.imag() < nhmf::kEvalWarnFloor)
                std::cerr << Json{{"warning", "low-imaginary-part"},
                                  {"message", "results may be unreliable for Im(tau) < 0.5"}}
                                 .dump()
                          << "\n";
            std::complex<double> value = nhmf::evaluate(f, tau);
            std::cout << Json::array({format_significant(value.real()), format_significant(value.imag())}).dump()
                      << "\n";
        }
    } catch (const nhmf::TruncationTooSmall& e) {
        print_error("TruncationTooSmall", e.what());
        return 2;
    } catch (const nhmf::ParseError& e) {
        print_error("ParseError", e.what());
        return 3;
    } catch (const nhmf::NotInSpace& e) {
        print_error("NotInSpace", e.what());
        return 4;
    } catch (const nhmf::DomainError& e) {
        print_error("DomainError", e.what());
        return 5;
    } catch (const std::exception& e) {
        print_error("Internal", e.what());
        return 1;
    }
    return 0;
}
