// Command-line front end: builds K-type multiplicity tables of Langlands
// quotients from multisegment data and certifies the genericity criterion.
//
// Exit codes: 0 all checks pass, 1 theorem-check failure, 2 usage error,
// 3 internal consistency error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ktype/errors.hpp"
#include "ktype/pipeline.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitTheoremFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::pair<int, int> parse_window(const std::string& text, int n) {
    if (text.empty()) return {0, n};
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ktype::usage_error("window must look like \"lo:hi\", got '" + text + "'");
    try {
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ktype::usage_error("window must look like \"lo:hi\", got '" + text + "'");
    }
}

void report_line_check(const ktype::LineProductCheck& check) {
    std::cerr << "line-product check: full sign multiplicity " << check.full_multiplicity << " vs";
    for (const auto& [line, mult] : check.per_line)
        std::cerr << " line" << line << "=" << mult;
    std::cerr << " -> " << (check.consistent ? "consistent" : "INCONSISTENT") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-type multiplicity tables and genericity certification for GL_n multisegments"};
    app.require_subcommand(1);

    std::string segments_text, q_text = "3", format_text = "text", output = "-", window_text;
    int n_opt = 0, jobs = 1;
    bool check_lines = false, allow_n5 = false;

    auto* cmd_table = app.add_subcommand("table", "K-type multiplicity table of a Langlands quotient");
    cmd_table->add_option("--segments", segments_text, "multisegment, e.g. \"[0,1];[3,3];[0,0]@1\"")
        ->required();
    cmd_table->add_option("--n", n_opt, "rank; must match the total segment length when given");
    cmd_table->add_option("--q", q_text, "deformation parameter (rational, default 3)");
    cmd_table->add_option("--format", format_text, "text|json|csv");
    cmd_table->add_option("--output", output, "destination path, or - for stdout");
    cmd_table->add_flag("--lines", check_lines, "also run the per-line product cross-check (n <= 4)");

    auto* cmd_certify = app.add_subcommand("certify", "theorem check for one multisegment");
    cmd_certify->add_option("--segments", segments_text, "multisegment")->required();
    cmd_certify->add_option("--n", n_opt, "rank; must match the total segment length when given");
    cmd_certify->add_option("--q", q_text, "deformation parameter");
    cmd_certify->add_option("--format", format_text, "text|json|csv");
    cmd_certify->add_option("--output", output, "destination path, or - for stdout");
    cmd_certify->add_flag("--lines", check_lines, "also run the per-line product cross-check (n <= 4)");

    auto* cmd_sweep = app.add_subcommand("sweep", "certify every multisegment of total size n");
    cmd_sweep->add_option("--n", n_opt, "total segment size")->required();
    cmd_sweep->add_option("--window", window_text, "endpoint window lo:hi (default 0:n)");
    cmd_sweep->add_option("--q", q_text, "deformation parameter");
    cmd_sweep->add_option("--jobs", jobs, "worker threads (default 1)");
    cmd_sweep->add_option("--format", format_text, "text|json|csv");
    cmd_sweep->add_option("--output", output, "destination path, or - for stdout");
    cmd_sweep->add_flag("--allow-n5", allow_n5, "opt in to the expensive n=5 sweep");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the relation/property suites");
    cmd_selftest->add_option("--q", q_text, "deformation parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitUsage : kExitPass;
    }

    try {
        const ktype::Rational q = ktype::Rational::parse(q_text);

        if (cmd_table->parsed() || cmd_certify->parsed()) {
            const ktype::Multisegment m = ktype::parse_multisegment(segments_text);
            if (n_opt != 0 && n_opt != m.total())
                throw ktype::usage_error("--n does not match the total segment length");
            const ktype::EmitFormat format = ktype::parse_format(format_text);

            bool pass = true;
            if (cmd_table->parsed()) {
                const ktype::MultiplicityTable table = ktype::ktype_table(m, q);
                ktype::write_output(ktype::render_table(table, format), output);
                const bool generic = ktype::is_generic(table.multisegment);
                const long sign_mult = table.at(ktype::min_label(table.n));
                pass = generic ? sign_mult == 1 : sign_mult == 0;
            } else {
                const ktype::Certificate cert = ktype::certify(m, q);
                ktype::write_output(ktype::render_certificate(cert, m.total(), q, format), output);
                pass = cert.pass;
            }
            if (check_lines) {
                const auto check = ktype::line_product_check(m, q);
                report_line_check(check);
                pass = pass && check.consistent;
            }
            return pass ? kExitPass : kExitTheoremFail;
        }

        if (cmd_sweep->parsed()) {
            auto [lo, hi] = parse_window(window_text, n_opt);
            const int cap = allow_n5 ? 5 : 4;
            const ktype::SweepResult result = ktype::sweep(n_opt, lo, hi, q, jobs, cap);
            ktype::write_output(ktype::render_sweep(result, ktype::parse_format(format_text)), output);
            return result.all_pass() ? kExitPass : kExitTheoremFail;
        }

        if (cmd_selftest->parsed()) {
            return ktype::selftest(q, std::cout) ? kExitPass : kExitInternal;
        }
    } catch (const ktype::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ktype::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ktype::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ktype::internal_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
