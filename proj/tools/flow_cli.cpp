// Command-line surface: ingest covariance matrices in the shared JSON
// format, run flows / trajectories / normal forms / density powers /
// verification suites, emit JSON and CSV.
//
// Exit codes: 0 success, 1 validation error, 2 numerical-contract failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccrflow/ccr_gaussian.hpp"
#include "ccrflow/fermion_flow.hpp"
#include "ccrflow/matrix_io.hpp"
#include "ccrflow/random_forms.hpp"
#include "ccrflow/scaling_flow.hpp"
#include "ccrflow/verify.hpp"

namespace {

using ccrflow::json;

void emit(const std::string& output_path, const std::string& text) {
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) throw ccrflow::ValidationError("cannot open output file: " + output_path);
        out << text;
    }
}

ccrflow::CovarianceForm load_form(const std::string& path) {
    ccrflow::MatrixXcd S = ccrflow::load_matrix(path);
    return ccrflow::CovarianceForm::make(ccrflow::StarSpace(static_cast<int>(S.rows())), S);
}

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            grid.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ccrflow::ValidationError("trajectory: bad grid entry '" + item + "'");
        }
    }
    return grid;
}

std::vector<double> default_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 10; ++k) grid.push_back(std::ldexp(1.0, k));
    return grid;
}

json classification_to_json(const ccrflow::Classification& c) {
    json j;
    j["is_extremal"] = c.is_extremal;
    j["is_center_free"] = c.is_center_free;
    j["is_non_boundary"] = c.is_non_boundary;
    return j;
}

int run_flow(const std::string& input, double r, const std::string& output) {
    auto S = load_form(input);
    ccrflow::FlowPoint fp = ccrflow::flow(S, r);
    json out;
    out["command"] = "flow";
    out["r"] = r;
    out["result"] = ccrflow::matrix_to_json(fp.form.matrix());
    emit(output, ccrflow::dump_json(out));
    return 0;
}

int run_trajectory(const std::string& input, const std::string& grid_spec,
                   const std::string& output, const std::string& format) {
    auto S = load_form(input);
    std::vector<double> grid = grid_spec.empty() ? default_grid() : parse_grid(grid_spec);
    ccrflow::Trajectory traj = ccrflow::flow_trajectory(S, grid);
    if (format == "csv") {
        std::ostringstream os;
        os << "r,lambda_min,lambda_max,dist_to_limit,extremality_residual\n";
        for (const auto& row : traj.rows) {
            os << ccrflow::format_double(row.r) << "," << ccrflow::format_double(row.lambda_min)
               << "," << ccrflow::format_double(row.lambda_max) << ","
               << ccrflow::format_double(row.dist_to_limit) << ","
               << ccrflow::format_double(row.extremality_residual) << "\n";
        }
        emit(output, os.str());
    } else {
        json rows = json::array();
        for (const auto& row : traj.rows) {
            json jr;
            jr["r"] = row.r;
            jr["lambda_min"] = row.lambda_min;
            jr["lambda_max"] = row.lambda_max;
            jr["dist_to_limit"] = row.dist_to_limit;
            jr["extremality_residual"] = row.extremality_residual;
            jr["loewner_decreasing"] = row.loewner_decreasing;
            rows.push_back(jr);
        }
        json out;
        out["command"] = "trajectory";
        out["rows"] = rows;
        emit(output, ccrflow::dump_json(out));
    }
    return 0;
}

int run_normal_form(const std::string& input, const std::string& output) {
    auto S = load_form(input);
    ccrflow::SymplecticNormalForm nf = ccrflow::normal_form(S);
    json out;
    out["command"] = "normal-form";
    out["degenerate_dim"] = nf.degenerate_dim;
    out["mus"] = nf.mus;
    out["B"] = ccrflow::matrix_to_json(nf.B);
    emit(output, ccrflow::dump_json(out));
    return 0;
}

int run_classify(const std::string& input, const std::string& output) {
    auto S = load_form(input);
    json out;
    out["command"] = "classify";
    out["classification"] = classification_to_json(ccrflow::classify(S));
    ccrflow::VectorXd spec = ccrflow::ratio_spectrum(S);
    out["ratio_spectrum"] = std::vector<double>(spec.data(), spec.data() + spec.size());
    emit(output, ccrflow::dump_json(out));
    return 0;
}

int run_density_power(const std::string& input, double r, const std::string& measure,
                      const std::string& output) {
    auto S = load_form(input);
    ccrflow::Measure m;
    if (measure == "liouville") m = ccrflow::Measure::Liouville;
    else if (measure == "euclidean") m = ccrflow::Measure::Euclidean;
    else throw ccrflow::ValidationError("density-power: measure must be liouville or euclidean");
    ccrflow::DensityPower dp = ccrflow::density_power(S, r, m);
    json out;
    out["command"] = "density-power";
    out["r"] = r;
    out["measure"] = measure;
    out["w"] = dp.element.w;
    Eigen::SelfAdjointEigenSolver<ccrflow::MatrixXd> es(dp.element.Q);
    out["Q_eigenvalues"] =
        std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    json modes = json::array();
    for (const auto& mi : dp.modes) {
        json jm;
        jm["mu"] = mi.mu;
        jm["theta"] = std::isinf(mi.theta) ? json(nullptr) : json(mi.theta);
        modes.push_back(jm);
    }
    out["modes"] = modes;
    out["degenerate_dim"] = dp.degenerate_dim;
    out["Q"] = ccrflow::matrix_to_json(dp.element.Q);
    emit(output, ccrflow::dump_json(out));
    return 0;
}

int run_fermion(const std::string& input, double r, const std::string& output) {
    ccrflow::MatrixXcd C = ccrflow::load_matrix(input);
    ccrflow::FermionCovariance fc = ccrflow::FermionCovariance::make(C);
    json out;
    out["command"] = "fermion";
    if (r > 0.0) {
        out["r"] = r;
        out["flow"] = ccrflow::matrix_to_json(ccrflow::fermion_flow(fc, r).matrix());
    }
    ccrflow::FermionLimits lim = ccrflow::fermion_limits(fc);
    out["high_temp"] = ccrflow::matrix_to_json(lim.high_temp);
    out["low_temp"] = ccrflow::matrix_to_json(lim.low_temp);
    out["near_threshold"] = lim.near_threshold;
    emit(output, ccrflow::dump_json(out));
    return 0;
}

int run_verify(std::uint64_t seed, const std::string& output) {
    std::ostringstream os;
    os << "verify seed=" << seed << "\n";
    std::vector<ccrflow::CheckResult> results = ccrflow::verify_all(seed);
    const bool ok = ccrflow::print_report(os, results);
    emit(output, os.str());
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scaling flow toolkit for covariance forms of free CCR states"};
    app.require_subcommand(1);

    std::string input, output, format = "json", measure = "liouville", grid_spec;
    double r = 1.0;
    std::uint64_t seed = 0;

    auto* c_flow = app.add_subcommand("flow", "apply the scaling flow S -> S^(r)");
    c_flow->add_option("--input", input)->required();
    c_flow->add_option("--r", r)->required();
    c_flow->add_option("--output", output);

    auto* c_traj = app.add_subcommand("trajectory", "flow trajectory along an r grid");
    c_traj->add_option("--input", input)->required();
    c_traj->add_option("--r-grid", grid_spec, "comma-separated ascending r values (default 1,2,...,1024)");
    c_traj->add_option("--output", output);
    c_traj->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* c_nf = app.add_subcommand("normal-form", "symplectic normal form");
    c_nf->add_option("--input", input)->required();
    c_nf->add_option("--output", output);

    auto* c_cls = app.add_subcommand("classify", "extremal / center-free / non-boundary flags");
    c_cls->add_option("--input", input)->required();
    c_cls->add_option("--output", output);

    auto* c_dp = app.add_subcommand("density-power", "closed-form rho_S^r and its trace");
    c_dp->add_option("--input", input)->required();
    c_dp->add_option("--r", r)->required();
    c_dp->add_option("--measure", measure)->check(CLI::IsMember({"liouville", "euclidean"}));
    c_dp->add_option("--output", output);

    auto* c_ver = app.add_subcommand("verify", "run all property suites");
    c_ver->add_option("--seed", seed);
    c_ver->add_option("--output", output);

    auto* c_fer = app.add_subcommand("fermion", "fermionic flow and limit tables");
    c_fer->add_option("--input", input)->required();
    c_fer->add_option("--r", r, "flow parameter; omit for limits only")->default_val(0.0);
    c_fer->add_option("--output", output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_flow->parsed()) return run_flow(input, r, output);
        if (c_traj->parsed()) return run_trajectory(input, grid_spec, output, format);
        if (c_nf->parsed()) return run_normal_form(input, output);
        if (c_cls->parsed()) return run_classify(input, output);
        if (c_dp->parsed()) return run_density_power(input, r, measure, output);
        if (c_ver->parsed()) return run_verify(seed, output);
        if (c_fer->parsed()) return run_fermion(input, r, output);
    } catch (const ccrflow::ContractFailure& e) {
        std::cerr << "contract failure: " << e.what() << "\n";
        return 2;
    } catch (const ccrflow::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
