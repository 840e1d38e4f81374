#include "bunq/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bunq/errors.hpp"
#include "bunq/graded.hpp"
#include "bunq/jsonout.hpp"
#include "bunq/mapping.hpp"
#include "bunq/oracle.hpp"
#include "bunq/selftest.hpp"
#include "bunq/series.hpp"
#include "bunq/space.hpp"
#include "bunq/weyl.hpp"

namespace bunq {

namespace {

const char* command_name(Command c)
{
    switch (c) {
    case Command::Series: return "series";
    case Command::Factors: return "factors";
    case Command::Homotopy: return "homotopy";
    case Command::Cohomology: return "cohomology";
    case Command::Hodge: return "hodge";
    case Command::Selftest: return "selftest";
    }
    throw InternalError("unknown command");
}

// exact value degree/2: an integer for even degrees, "d/2" for odd ones
std::string weight_string(int degree)
{
    if (degree % 2 == 0)
        return fmt::format("{}", degree / 2);
    return fmt::format("{}/2", degree);
}

std::string factor_string(const EMFactor& f)
{
    if (f.rank == 1)
        return fmt::format("K(Z, {})", f.degree);
    return fmt::format("K(Z^{}, {})", f.rank, f.degree);
}

void series_payload(JsonOut& json, const TruncatedSeries& s)
{
    json.begin_object();
    json.key("coefficients");
    json.begin_array();
    for (const Int& c : s.coeffs())
        json.value(c);
    json.end_array();
    json.end_object();
}

void factor_list(JsonOut& json, const std::vector<EMFactor>& factors)
{
    json.begin_array();
    for (const auto& f : factors) {
        json.begin_object();
        json.key("q");
        json.value(f.q);
        json.key("invariant_degree");
        json.value(f.invariant_degree);
        json.key("degree");
        json.value(f.degree);
        json.key("rank");
        json.value(f.rank);
        json.end_object();
    }
    json.end_array();
}

std::string render_series_text(const Request& req, const TruncatedSeries& s)
{
    std::string out = fmt::format("series  group={}  space={}  max-degree={}\n", req.group,
                                  req.space, req.max_degree);
    for (int k = 0; k <= s.cutoff(); ++k)
        out += fmt::format("  {}: {}\n", k, s.coeff(k).str());
    return out;
}

std::string render_factors_text(const Request& req, const EMFactorization& f)
{
    std::string out = fmt::format("factors  group={}  space={}\n", req.group, req.space);
    out += "positive factors:\n";
    if (f.positive_factors.empty())
        out += "  (none)\n";
    for (const auto& x : f.positive_factors)
        out += fmt::format("  {}  q={}  n_i={}\n", factor_string(x), x.q, x.invariant_degree);
    out += "degree-zero factors:\n";
    if (f.degree_zero_factors.empty())
        out += "  (none)\n";
    for (const auto& x : f.degree_zero_factors)
        out += fmt::format("  {}  q={}  n_i={}\n", factor_string(x), x.q, x.invariant_degree);
    return out;
}

std::string render_homotopy_text(const Request& req, const std::vector<long long>& ranks)
{
    std::string out = fmt::format("homotopy  group={}  space={}  max-degree={}\n", req.group,
                                  req.space, req.max_degree);
    for (size_t i = 0; i < ranks.size(); ++i)
        out += fmt::format("  k={}: {}\n", i + 1, ranks[i]);
    return out;
}

std::string render_cohomology_text(const Request& req, const GeneratorSet& gs,
                                   const TruncatedSeries& hilbert)
{
    std::string out = fmt::format("cohomology  group={}  space={}{}\n", req.group, req.space,
                                  gs.conjectural ? "  [conjectural]" : "");
    out += "generators:\n";
    if (gs.generators.empty())
        out += "  (none)\n";
    for (const auto& g : gs.generators)
        out += fmt::format("  degree={}  {}  multiplicity={}  twist={}\n", g.degree,
                           g.parity() == Parity::Even ? "even" : "odd", g.multiplicity, g.twist);
    out += fmt::format("hilbert series up to degree {}:\n", hilbert.cutoff());
    for (int k = 0; k <= hilbert.cutoff(); ++k)
        out += fmt::format("  {}: {}\n", k, hilbert.coeff(k).str());
    return out;
}

std::string render_hodge_text(const Request& req, const HodgeTateTable& table)
{
    std::string out = fmt::format("hodge  group={}  space={}  max-degree={}{}\n", req.group,
                                  req.space, req.max_degree,
                                  table.conjectural ? "  [conjectural]" : "");
    for (const auto& row : table.rows)
        out += fmt::format("  degree={}  weight={}  dim={}\n", row.degree,
                           weight_string(row.degree), row.dimension.str());
    return out;
}

std::string render_selftest_text(const std::vector<SuiteResult>& suites)
{
    std::string out = "selftest\n";
    size_t passed = 0;
    for (const auto& s : suites) {
        passed += s.passed ? 1 : 0;
        out += fmt::format("  {}  {}  ({})\n", s.passed ? "PASS" : "FAIL", s.name, s.detail);
    }
    out += fmt::format("{}/{} suites passed\n", passed, suites.size());
    return out;
}

std::string render_machine(const Request& req,
                           const std::function<void(JsonOut&)>& payload)
{
    JsonOut json;
    json.begin_object();
    json.key("format_version");
    json.value(1);
    json.key("command");
    json.value(command_name(req.command));
    json.key("group");
    if (req.command == Command::Selftest)
        json.value_null();
    else
        json.value(req.group);
    json.key("space");
    if (req.command == Command::Selftest)
        json.value_null();
    else
        json.value(req.space);
    json.key("max_degree");
    json.value(req.max_degree);
    json.key("conjectural");
    json.value(req.conjectural);
    json.key("payload");
    payload(json);
    json.end_object();
    std::string out = json.str();
    out += '\n';
    return out;
}

} // namespace

RunResult run(const Request& req)
{
    RunResult result;
    try {
        const bool machine = req.output == OutputMode::Machine;
        std::string out;

        if (req.command == Command::Selftest) {
            const auto suites = run_selftest();
            const bool all_passed =
                std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) {
                    return s.passed;
                });
            if (machine)
                out = render_machine(req, [&](JsonOut& json) {
                    json.begin_object();
                    json.key("suites");
                    json.begin_array();
                    for (const auto& s : suites) {
                        json.begin_object();
                        json.key("name");
                        json.value(s.name);
                        json.key("passed");
                        json.value(s.passed);
                        json.key("detail");
                        json.value(s.detail);
                        json.end_object();
                    }
                    json.end_array();
                    json.key("passed");
                    json.value(all_passed);
                    json.end_object();
                });
            else
                out = render_selftest_text(suites);
            result.out = out;
            result.exit_code = all_passed ? 0 : 1;
            return result;
        }

        if (req.max_degree < 0)
            throw DomainError(fmt::format("max degree must be >= 0, got {}", req.max_degree));
        const GroupSpec g = parse_group(req.group);
        SpaceModel x = parse_space(req.space);
        if (req.assume_even_cells) {
            for (int q = 1; q <= x.dim(); q += 2)
                if (x.betti_at(q) != 0)
                    throw DomainError(fmt::format(
                        "cannot assume an even-cell structure: b_{} = {} is nonzero", q,
                        x.betti_at(q)));
            x.even_cells_only = true;
        }

        switch (req.command) {
        case Command::Series: {
            const auto s = poincare_series(x, g, req.max_degree);
            out = machine ? render_machine(req, [&](JsonOut& j) { series_payload(j, s); })
                          : render_series_text(req, s);
            break;
        }
        case Command::Factors: {
            const auto f = thom_factorization(x, g);
            out = machine ? render_machine(req,
                                           [&](JsonOut& j) {
                                               j.begin_object();
                                               j.key("positive");
                                               factor_list(j, f.positive_factors);
                                               j.key("degree_zero");
                                               factor_list(j, f.degree_zero_factors);
                                               j.end_object();
                                           })
                          : render_factors_text(req, f);
            break;
        }
        case Command::Homotopy: {
            std::vector<long long> ranks;
            for (int k = 1; k <= req.max_degree; ++k)
                ranks.push_back(homotopy_rank(x, g, k));
            out = machine ? render_machine(req,
                                           [&](JsonOut& j) {
                                               j.begin_object();
                                               j.key("ranks");
                                               j.begin_array();
                                               for (long long r : ranks)
                                                   j.value(r);
                                               j.end_array();
                                               j.end_object();
                                           })
                          : render_homotopy_text(req, ranks);
            break;
        }
        case Command::Cohomology: {
            const auto gs = component_cohomology(x, g, req.conjectural);
            const auto hilbert = free_gca_hilbert(gs, req.max_degree);
            out = machine
                      ? render_machine(req,
                                       [&](JsonOut& j) {
                                           j.begin_object();
                                           j.key("generators");
                                           j.begin_array();
                                           for (const auto& gen : gs.generators) {
                                               j.begin_object();
                                               j.key("degree");
                                               j.value(gen.degree);
                                               j.key("parity");
                                               j.value(gen.parity() == Parity::Even ? "even"
                                                                                    : "odd");
                                               j.key("multiplicity");
                                               j.value(gen.multiplicity);
                                               j.key("twist");
                                               j.value(gen.twist);
                                               j.end_object();
                                           }
                                           j.end_array();
                                           j.key("hilbert_series");
                                           j.begin_array();
                                           for (const Int& c : hilbert.coeffs())
                                               j.value(c);
                                           j.end_array();
                                           j.end_object();
                                       })
                      : render_cohomology_text(req, gs, hilbert);
            break;
        }
        case Command::Hodge: {
            const auto gs = component_cohomology(x, g, req.conjectural);
            const auto table = hodge_tate_table(gs, req.max_degree);
            out = machine ? render_machine(req,
                                           [&](JsonOut& j) {
                                               j.begin_object();
                                               j.key("rows");
                                               j.begin_array();
                                               for (const auto& row : table.rows) {
                                                   j.begin_object();
                                                   j.key("degree");
                                                   j.value(row.degree);
                                                   j.key("weight");
                                                   j.value(weight_string(row.degree));
                                                   j.key("dimension");
                                                   j.value(row.dimension);
                                                   j.end_object();
                                               }
                                               j.end_array();
                                               j.end_object();
                                           })
                          : render_hodge_text(req, table);
            break;
        }
        case Command::Selftest:
            throw InternalError("unreachable");
        }

        result.out = out;
        result.exit_code = 0;
    } catch (const ParseError& e) {
        result = {2, "", fmt::format("error: {}\n", e.what())};
    } catch (const HypothesisError& e) {
        result = {3, "", fmt::format("error: {}\n", e.what())};
    } catch (const InternalError& e) {
        result = {4, "", fmt::format("internal error: {}\n", e.what())};
    } catch (const Error& e) { // usage and domain errors: a malformed request
        result = {2, "", fmt::format("error: {}\n", e.what())};
    } catch (const std::exception& e) {
        result = {4, "", fmt::format("internal error: {}\n", e.what())};
    }
    return result;
}

RunResult run_cli(const std::vector<std::string>& args)
{
    CLI::App app{"rational homotopy invariants of moduli of principal G-bundles", "bunq"};
    app.require_subcommand(1);

    Request req;
    std::string output = "text";

    const auto add_common = [&](CLI::App* sub, bool needs_specs) {
        if (needs_specs) {
            sub->add_option("--group,-g", req.group, "group spec, e.g. A1 or A2xG2")->required();
            sub->add_option("--space,-x", req.space,
                            "space spec: point | sphere:m | curve:g | proj:k | hyp:k,d | "
                            "betti:b0,b1,... | prod(S;S)")
                ->required();
            sub->add_option("--max-degree,-N", req.max_degree,
                            "top degree of the output (default 20)");
        }
        sub->add_option("--output,-o", output, "output format: text or machine")
            ->check(CLI::IsMember({"text", "machine"}));
    };
    const auto add_mode_flags = [&](CLI::App* sub) {
        sub->add_flag("--conjectural", req.conjectural,
                      "admit odd-degree generators (conjectural presentation)");
        sub->add_flag("--assume-even-cells", req.assume_even_cells,
                      "assert that the space has a CW structure without odd cells");
    };

    CLI::App* series = app.add_subcommand("series", "Poincare series of Map(X, BG)");
    add_common(series, true);
    CLI::App* factors =
        app.add_subcommand("factors", "Eilenberg-MacLane factorization of Map(X, BG)");
    add_common(factors, true);
    CLI::App* homotopy =
        app.add_subcommand("homotopy", "ranks of the rational homotopy groups of Map(X, BG)");
    add_common(homotopy, true);
    CLI::App* cohomology = app.add_subcommand(
        "cohomology", "free graded-commutative presentation of a component's cohomology");
    add_common(cohomology, true);
    add_mode_flags(cohomology);
    CLI::App* hodge = app.add_subcommand("hodge", "Hodge-Tate weight table of a component");
    add_common(hodge, true);
    add_mode_flags(hodge);
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in invariant suites");
    add_common(selftest, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        return {code, out.str(), err.str()};
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        app.exit(e, out, err);
        return {2, out.str(), err.str()};
    }

    if (series->parsed())
        req.command = Command::Series;
    else if (factors->parsed())
        req.command = Command::Factors;
    else if (homotopy->parsed())
        req.command = Command::Homotopy;
    else if (cohomology->parsed())
        req.command = Command::Cohomology;
    else if (hodge->parsed())
        req.command = Command::Hodge;
    else
        req.command = Command::Selftest;
    req.output = output == "machine" ? OutputMode::Machine : OutputMode::Text;

    return run(req);
}

} // namespace bunq
