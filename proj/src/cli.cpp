#include "nefkit/cli.hpp"

#include "embedded_data.hpp"
#include "nefkit/chern.hpp"
#include "nefkit/cones.hpp"
#include "nefkit/diagonal.hpp"
#include "nefkit/report.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>

#ifndef NEFKIT_DEFAULT_DATA_DIR
#define NEFKIT_DEFAULT_DATA_DIR "data"
#endif

namespace nefkit::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr long kMaxDimension = 64;
constexpr long kMaxDegree = 64;
constexpr long kMaxCodimension = 16;

void require_range(const char* flag, long value, long lo, long hi)
{
    if (value < lo || value > hi)
        throw std::invalid_argument(std::string(flag) + ": " + std::to_string(value)
                                    + " is outside [" + std::to_string(lo) + ", "
                                    + std::to_string(hi) + "]");
}

CIType parse_ci(long dim, const std::vector<long>& degrees)
{
    require_range("--dim", dim, 1, kMaxDimension);
    if (static_cast<long>(degrees.size()) > kMaxCodimension)
        throw std::invalid_argument("--degrees: at most " + std::to_string(kMaxCodimension)
                                    + " degrees are accepted");
    for (long d : degrees)
        require_range("--degrees", d, 1, kMaxDegree);
    return CIType(degrees, dim);
}

json ci_inputs(const CIType& ci)
{
    return json{{"degrees", ci.degrees()}, {"dim", ci.dimension()}};
}

json exact_list(const std::vector<ExactInt>& v)
{
    json arr = json::array();
    for (const auto& x : v)
        arr.push_back(exact_to_json(x));
    return arr;
}

CycleDataset resolve_dataset(const std::string& name)
{
    const fs::path given(name);
    if (fs::exists(given))
        return load_dataset_file(given);
    fs::path dir = NEFKIT_DEFAULT_DATA_DIR;
    if (const char* env = std::getenv("NEFKIT_DATA"); env && *env)
        dir = env;
    if (!given.is_absolute() && fs::exists(dir / given))
        return load_dataset_file(dir / given);
    const auto file = given.filename().string();
    if (file == "gw2c5.json")
        return load_dataset(embedded::gw2c5_json());
    if (file == "g2c5.json")
        return load_dataset(embedded::g2c5_json());
    throw SchemaError("dataset " + name + " not found (looked in " + dir.string() + ")");
}

Report euler_ci_report(const CIType& ci)
{
    const ExactInt chi = euler_ci_formula(ci);
    const bool agree = chi == euler_ci_series(ci) && chi == euler_ci_recursive(ci);
    if (!agree)
        throw std::logic_error("Euler characteristic routes disagree for " + ci.to_string());
    Report r;
    r.command = "euler ci";
    r.inputs = ci_inputs(ci);
    r.result = {{"value", exact_to_json(chi)}, {"routes_agree", agree}};
    r.provenance = {"deg c_n from the binomial / complete homogeneous sum",
                    "cross-checked against the Chern series quotient and the degree recursion"};
    return r;
}

Report euler_weighted_report(const std::vector<long>& weights, long degree)
{
    if (weights.size() < 5)
        throw std::invalid_argument("--weights: at least 5 weights are required");
    if (static_cast<long>(weights.size()) > kMaxDimension + 2)
        throw std::invalid_argument("--weights: too many weights");
    for (long a : weights)
        require_range("--weights", a, 1, kMaxDegree);
    require_range("--degree", degree, 1, kMaxDegree);
    const WeightedHypersurface wh(weights, degree);
    Report r;
    r.command = "euler weighted";
    r.inputs = {{"weights", weights}, {"degree", degree}};
    r.result = {{"value", exact_to_json(to_integer(euler_weighted(wh)))},
                {"dimension", wh.dimension()}};
    r.provenance = {"deg c_{m-1} = sum e_{m-1-i}(a) (-d)^i times deg h^{m-1} = d / prod(a)"};
    return r;
}

Report chern_ci_report(const CIType& ci)
{
    Report r;
    r.command = "chern ci";
    r.inputs = ci_inputs(ci);
    r.result = {{"chern_degrees", exact_list(chern_degrees_ci(ci))}};
    r.provenance = {"deg(c_k . h^(n-k)) = prod(d) [t^k] (1+t)^(n+r+1) / prod(1 + d_j t)"};
    return r;
}

Report betti_ci_report(const CIType& ci)
{
    const auto table = betti_ci(ci);
    Report r;
    r.command = "betti ci";
    r.inputs = ci_inputs(ci);
    r.result = {{"betti", exact_list(table.betti)},
                {"poincare", exact_list(poincare_polynomial_ci(ci))},
                {"euler", exact_to_json(table.euler_characteristic())}};
    r.provenance = {"Lefschetz pattern: b_i(X) = b_i(P^n) for i != n, middle from deg c_n",
                    "poincare lists coefficients of sum b_i (-t)^i by increasing degree"};
    return r;
}

Report verdict_report(std::string command, json inputs, const Verdict& v, bool nef_big)
{
    Report r;
    r.command = std::move(command);
    r.inputs = std::move(inputs);
    r.result = verdict_to_json(v);
    r.result["nef_and_big"] = nef_big;
    r.provenance = {v.criterion};
    return r;
}

Report cone_dual_report(const std::string& dataset, long codim)
{
    const auto ds = resolve_dataset(dataset);
    require_range("--codim", codim, 0, ds.dimension());
    const auto cones = cones_in_codim(ds, codim);
    json nef = json::array();
    json nef_vectors = json::array();
    for (const auto& g : cones.nef.generators) {
        nef.push_back(format_combination(cones.basis, g));
        nef_vectors.push_back(exact_list(g));
    }
    json eff = json::array();
    for (const auto& g : cones.effective.generators)
        eff.push_back(format_combination(cones.basis, g));
    Report r;
    r.command = "cone dual";
    r.inputs = {{"dataset", ds.variety()}, {"codim", codim}};
    r.result = {{"basis", cones.basis},
                {"nef", nef},
                {"nef_vectors", nef_vectors},
                {"effective", eff},
                {"nef_full_dimensional", cones.nef.full_dimensional},
                {"nef_equals_effective", cones.nef.generators == cones.effective.generators}};
    r.provenance = {"nef cone = dual of the complementary effective cone under the pairing",
                    "effective cone spanned by the dataset's orbit-closure classes"};
    return r;
}

Report cone_check_report(const std::string& dataset)
{
    const auto ds = resolve_dataset(dataset);
    const auto v = spherical_nef_diagonal_check(ds);
    return verdict_report("cone check", {{"dataset", ds.variety()}}, v, false);
}

Report scan_report(const ScanReport& s)
{
    Report r;
    r.command = "scan ci";
    r.inputs = {{"max_dim", s.options.max_dimension},
                {"max_degree", s.options.max_degree},
                {"max_r", s.options.max_codimension},
                {"max_quadric_r", s.options.max_quadric_codimension}};
    r.result = {{"varieties", s.varieties},
                {"verdicts", s.verdict_counts},
                {"laws", s.law_checks},
                {"violations", s.violations}};
    r.provenance = {"exhaustive scan over canonical complete intersection types"};
    return r;
}

Report table_delpezzo_report()
{
    json rows = json::array();
    for (const auto& row : delpezzo_table()) {
        std::string dims = "n >= " + std::to_string(row.min_dimension);
        if (row.max_dimension)
            dims = row.min_dimension == *row.max_dimension
                       ? "n = " + std::to_string(row.min_dimension)
                       : std::to_string(row.min_dimension)
                             + " <= n <= " + std::to_string(*row.max_dimension);
        if (row.degree == 6)
            dims = "n = 3 or 4";
        rows.push_back({{"degree", row.degree}, {"dimensions", dims},
                        {"description", row.description}});
    }
    Report r;
    r.command = "table delpezzo";
    r.result = {{"rows", rows}};
    r.provenance = {"classification of smooth del Pezzo varieties of dimension n >= 3 by degree"};
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"nefkit: Euler characteristics, nef-diagonal verdicts and cycle cones"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    long dim = 0;
    std::vector<long> degrees;
    auto add_ci_flags = [&](CLI::App* sub) {
        sub->add_option("--dim", dim, "Dimension n")->required();
        sub->add_option("--degrees", degrees, "Hypersurface degrees, comma separated")
            ->delimiter(',');
    };

    auto* euler = app.add_subcommand("euler", "Top Chern class degree")->require_subcommand(1);
    auto* euler_ci = euler->add_subcommand("ci", "Complete intersection");
    add_ci_flags(euler_ci);
    std::vector<long> weights;
    long weighted_degree = 0;
    auto* euler_weighted_cmd = euler->add_subcommand("weighted", "Weighted hypersurface");
    euler_weighted_cmd->add_option("--weights", weights, "Weights a0,...,am")
        ->delimiter(',')
        ->required();
    euler_weighted_cmd->add_option("--degree", weighted_degree, "Degree d")->required();

    auto* chern = app.add_subcommand("chern", "Chern numbers")->require_subcommand(1);
    auto* chern_ci = chern->add_subcommand("ci", "Complete intersection");
    add_ci_flags(chern_ci);

    auto* betti = app.add_subcommand("betti", "Betti numbers")->require_subcommand(1);
    auto* betti_ci_cmd = betti->add_subcommand("ci", "Complete intersection");
    add_ci_flags(betti_ci_cmd);

    auto* verdict = app.add_subcommand("verdict", "Nef diagonal verdicts")->require_subcommand(1);
    auto* verdict_ci_cmd = verdict->add_subcommand("ci", "Complete intersection");
    add_ci_flags(verdict_ci_cmd);
    long dp_degree = 0;
    std::string variant;
    auto* verdict_dp = verdict->add_subcommand("delpezzo", "del Pezzo variety");
    verdict_dp->add_option("--dim", dim, "Dimension n >= 3")->required();
    verdict_dp->add_option("--degree", dp_degree, "Degree 1..7")->required();
    verdict_dp->add_option("--variant", variant, "Degree-6 member: P1xP1xP1, P(T_P2), P2xP2");
    long genus = 0;
    auto* verdict_curve_cmd = verdict->add_subcommand("curve", "Smooth projective curve");
    verdict_curve_cmd->add_option("--genus", genus, "Genus g >= 0")->required();

    auto* cone = app.add_subcommand("cone", "Cycle cones from pairing datasets")
                     ->require_subcommand(1);
    std::string dataset;
    long codim = 0;
    auto* cone_dual = cone->add_subcommand("dual", "Nef and effective cones in one codimension");
    cone_dual->add_option("--dataset", dataset, "Dataset file")->required();
    cone_dual->add_option("--codim", codim, "Codimension k")->required();
    auto* cone_check = cone->add_subcommand("check", "Orbit-closure nef diagonal check");
    cone_check->add_option("--dataset", dataset, "Dataset file")->required();

    ScanOptions scan_opts;
    auto* scan = app.add_subcommand("scan", "Verification scans")->require_subcommand(1);
    auto* scan_ci_cmd = scan->add_subcommand("ci", "Complete intersections");
    scan_ci_cmd->add_option("--max-dim", scan_opts.max_dimension, "Largest dimension");
    scan_ci_cmd->add_option("--max-degree", scan_opts.max_degree, "Largest degree");
    scan_ci_cmd->add_option("--max-r", scan_opts.max_codimension, "Largest number of equations");
    scan_ci_cmd->add_option("--max-quadric-r", scan_opts.max_quadric_codimension,
                            "Largest number of quadrics in the quadric scan");

    auto* table = app.add_subcommand("table", "Static tables")->require_subcommand(1);
    auto* table_dp = table->add_subcommand("delpezzo", "del Pezzo classification");

    std::vector<const char*> argv{"nefkit"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    const auto fmt = format == "json" ? ReportFormat::Json : ReportFormat::Text;
    try {
        Report report;
        if (*euler_ci)
            report = euler_ci_report(parse_ci(dim, degrees));
        else if (*euler_weighted_cmd)
            report = euler_weighted_report(weights, weighted_degree);
        else if (*chern_ci)
            report = chern_ci_report(parse_ci(dim, degrees));
        else if (*betti_ci_cmd)
            report = betti_ci_report(parse_ci(dim, degrees));
        else if (*verdict_ci_cmd) {
            const auto ci = parse_ci(dim, degrees);
            report = verdict_report("verdict ci", ci_inputs(ci), verdict_ci(ci),
                                    nef_big_filter_ci(ci));
        } else if (*verdict_dp) {
            require_range("--dim", dim, 3, kMaxDimension);
            require_range("--degree", dp_degree, 1, 7);
            const auto deg = static_cast<int>(dp_degree);
            std::optional<std::string> var;
            json inputs{{"dim", dim}, {"degree", deg}};
            if (!variant.empty()) {
                var = variant;
                inputs["variant"] = variant;
            }
            report = verdict_report("verdict delpezzo", inputs, verdict_delpezzo(dim, deg, var),
                                    nef_big_filter_delpezzo(dim, deg));
        } else if (*verdict_curve_cmd) {
            if (genus < 0)
                throw std::invalid_argument("--genus: must be non-negative");
            report = verdict_report("verdict curve", {{"genus", genus}}, verdict_curve(genus),
                                    genus == 0);
        } else if (*cone_dual)
            report = cone_dual_report(dataset, codim);
        else if (*cone_check)
            report = cone_check_report(dataset);
        else if (*scan_ci_cmd) {
            require_range("--max-dim", scan_opts.max_dimension, 1, kMaxDimension);
            require_range("--max-degree", scan_opts.max_degree, 1, kMaxDegree);
            require_range("--max-r", scan_opts.max_codimension, 1, kMaxCodimension);
            require_range("--max-quadric-r", scan_opts.max_quadric_codimension, 1,
                          kMaxCodimension);
            try {
                report = scan_report(scan_ci(scan_opts));
            } catch (const ScanViolation& v) {
                out << emit_report(scan_report(v.report()), fmt);
                err << "scan violation: " << v.what() << '\n';
                return kScanViolation;
            }
        } else if (*table_dp)
            report = table_delpezzo_report();
        out << emit_report(report, fmt);
        return kSuccess;
    } catch (const DatasetError& e) {
        err << "dataset error: " << e.what() << '\n';
        return kDatasetError;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::domain_error& e) {
        err << "invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

} // namespace nefkit::cli
