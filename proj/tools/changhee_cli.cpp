// Command-line front end: polynomial/coefficient tables, series expansion,
// and identity verification with machine-readable JSON output.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "changhee/changhee.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 1;

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(kExitUsage);
}

changhee::OutputFormat format_or_die(const std::string& name) {
    const auto f = changhee::parse_format(name);
    if (!f) usage_error("unknown format '" + name + "' (expected csv, json or latex)");
    return *f;
}

int run_table(const std::string& family_name, unsigned max, const std::optional<std::string>& method_name,
              const std::string& format_name) {
    const auto family = changhee::parse_family(family_name);
    if (!family)
        usage_error("unknown family '" + family_name +
                    "' (expected changhee, euler, stirling1, stirling2 or coeffs)");
    const auto format = format_or_die(format_name);
    auto method = changhee::CoeffMethod::recurrence;
    if (method_name) {
        if (*family != changhee::TableFamily::coeffs)
            usage_error("--method applies only to the coeffs family");
        const auto m = changhee::parse_method(*method_name);
        if (!m) usage_error("unknown method '" + *method_name + "' (expected recurrence or closed)");
        method = *m;
    }
    std::cout << changhee::render_table(changhee::build_table(*family, max, method), *family, format);
    return 0;
}

int run_expand(const std::string& target, unsigned order, const std::string& format_name) {
    const auto format = format_or_die(format_name);
    if (target != "F" && target != "2F") usage_error("unknown target '" + target + "' (expected F or 2F)");
    const auto series =
        target == "F" ? changhee::changhee_kernel(order) : changhee::changhee_gf(order);
    std::cout << changhee::render_series(series, format);
    return 0;
}

int run_verify(const std::string& suite, unsigned n_max, unsigned k_max, unsigned order,
               const std::optional<std::string>& variant_name) {
    const bool known = suite == "all" || suite == "thm21" || suite == "thm22" || suite == "stirling" ||
                       suite == "shift" || suite == "composition";
    if (!known)
        usage_error("unknown suite '" + suite +
                    "' (expected all, thm21, thm22, stirling, shift or composition)");
    if (variant_name && suite != "thm22") usage_error("--variant applies only to the thm22 suite");
    std::optional<changhee::ExpansionVariant> variant;
    if (variant_name) {
        if (*variant_name == "corrected")
            variant = changhee::ExpansionVariant::corrected;
        else if (*variant_name == "printed")
            variant = changhee::ExpansionVariant::printed;
        else
            usage_error("unknown variant '" + *variant_name + "' (expected corrected or printed)");
    }
    if ((suite == "all" || suite == "thm21") && order < n_max + 2)
        usage_error("thm21 requires --order >= --n-max + 2");

    std::vector<changhee::VerificationReport> reports;
    if (suite == "all" || suite == "thm21") reports.push_back(changhee::verify_kernel_ode(n_max, order));
    if (suite == "thm22")
        reports.push_back(variant ? changhee::verify_changhee_expansion(k_max, n_max, *variant)
                                  : changhee::verify_changhee_expansion(k_max, n_max));
    if (suite == "all") reports.push_back(changhee::verify_changhee_expansion(k_max, n_max));
    if (suite == "all" || suite == "stirling")
        reports.push_back(changhee::verify_stirling_transforms(n_max));
    if (suite == "all" || suite == "shift")
        reports.push_back(changhee::verify_derivative_shift(n_max, k_max));
    if (suite == "all" || suite == "composition")
        reports.push_back(changhee::verify_gf_composition(order));

    changhee::Json out = changhee::Json::array();
    bool all_passed = true;
    for (const auto& report : reports) {
        for (const auto& check : report.checks) out.push_back(changhee::to_json(check));
        all_passed = all_passed && report.all_passed();
        std::cerr << report.suite << ": " << report.summary << "\n";
    }
    std::cout << out.dump() << "\n";
    return all_passed ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic tables, expansions and identity checks for the Changhee polynomial family"};
    app.require_subcommand(1);

    std::string family, suite, target;
    std::string format = "json";
    std::optional<std::string> method, variant;
    unsigned max = 0, order = 16, n_max = 8, k_max = 8;

    auto* table = app.add_subcommand("table", "Emit a polynomial or number triangle");
    table->add_option("family", family, "changhee | euler | stirling1 | stirling2 | coeffs")->required();
    table->add_option("--max", max, "Largest index to emit")->required();
    table->add_option("--method", method, "coeffs route: recurrence | closed");
    table->add_option("--format", format, "csv | json | latex");

    auto* verify = app.add_subcommand("verify", "Run identity checks and emit a JSON report");
    verify->add_option("suite", suite, "all | thm21 | thm22 | stirling | shift | composition")->required();
    verify->add_option("--n-max", n_max, "Largest derivative/family index");
    verify->add_option("--k-max", k_max, "Largest shift/expansion index");
    verify->add_option("--order", order, "Series truncation order");
    verify->add_option("--variant", variant, "thm22 exponent variant: corrected | printed");

    auto* expand = app.add_subcommand("expand", "Emit series coefficients of the kernel F or of 2F");
    expand->add_option("target", target, "F | 2F")->required();
    expand->add_option("--order", order, "Truncation order")->required();
    expand->add_option("--format", format, "csv | json | latex");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) return run_table(family, max, method, format);
        if (expand->parsed()) return run_expand(target, order, format);
        return run_verify(suite, n_max, k_max, order, variant);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
