/*
   Copyright 2026 The toromon authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// toromon: log smoothness checks and monomialization of toroidal germs.
//
// Exit status: 0 success; 1 mathematically negative verdict; 2 input
// error; 3 internal invariant breach or failed scenario assertion.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toromon/catalog.hpp"
#include "toromon/error.hpp"
#include "toromon/scenario.hpp"

namespace {

struct CommonArgs {
    std::string scenario;
    int order = 0;
    std::string mode;
    std::string report_path;
    bool timing = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_mode) {
    cmd->add_option("--order", args.order,
                    "Weight cutoff (default: the scenario's truncation)")
        ->check(CLI::Range(1, 1000));
    if (with_mode)
        cmd->add_option("--mode", args.mode, "Residue constant handling")
            ->check(CLI::IsMember({"rational", "root-capable"}));
    cmd->add_option("--report", args.report_path,
                    "Write the machine-readable JSON report here");
    cmd->add_flag("--timing", args.timing,
                  "Include wall-clock timing in the report");
}

toromon::RunOptions to_options(const CommonArgs& args) {
    toromon::RunOptions opt;
    opt.order = args.order;
    opt.timing = args.timing;
    if (args.mode == "rational")
        opt.mode = toromon::MonomializeMode::rational_residue;
    else if (args.mode == "root-capable")
        opt.mode = toromon::MonomializeMode::root_capable;
    return opt;
}

int finish(const toromon::RunOutcome& out, const std::string& report_path) {
    std::cout << out.summary << "\n";
    if (!report_path.empty()) {
        std::ofstream file(report_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot write report to " << report_path << "\n";
            return 2;
        }
        file << out.report.dump(2) << "\n";
    }
    return out.exit_code;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        toromon::fail(toromon::ErrorKind::ParseError,
                      "cannot open report file: " + path);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "toromon: exact log smoothness checks and monomialization of "
        "toroidal morphism germs"};
    app.require_subcommand(1);

    CommonArgs check_args, mono_args, verify_args, counter_args;

    CLI::App* check = app.add_subcommand(
        "check", "Decide logarithmic smoothness via the log Jacobian");
    add_common(check, check_args, false);
    check->add_option("scenario", check_args.scenario,
                      "Bundled scenario name or JSON file path")
        ->required();

    CLI::App* mono = app.add_subcommand(
        "monomialize",
        "Run the monomialization construction and verify the diagram");
    add_common(mono, mono_args, true);
    mono->add_option("scenario", mono_args.scenario,
                     "Bundled scenario name or JSON file path")
        ->required();

    CLI::App* verify = app.add_subcommand(
        "verify", "Re-verify a stored monomialize report");
    verify->add_option("--report", verify_args.report_path,
                       "Write the verification report here");
    verify->add_option("report_file", verify_args.scenario,
                       "Report JSON produced by monomialize --report")
        ->required();

    CLI::App* counter = app.add_subcommand(
        "counterexample",
        "Certify the quartic unit obstruction over Q(i)");
    add_common(counter, counter_args, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            toromon::Scenario s = toromon::parse_scenario(
                toromon::load_scenario_text(check_args.scenario));
            return finish(toromon::run_check(s, to_options(check_args)),
                          check_args.report_path);
        }
        if (mono->parsed()) {
            toromon::Scenario s = toromon::parse_scenario(
                toromon::load_scenario_text(mono_args.scenario));
            return finish(toromon::run_monomialize(s, to_options(mono_args)),
                          mono_args.report_path);
        }
        if (verify->parsed()) {
            return finish(
                toromon::run_verify(read_text_file(verify_args.scenario)),
                verify_args.report_path);
        }
        return finish(toromon::run_counterexample(to_options(counter_args)),
                      counter_args.report_path);
    } catch (const toromon::Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
            case toromon::ErrorKind::NotLogSmooth:
            case toromon::ErrorKind::NotMonomialTimesUnit:
            case toromon::ErrorKind::ResidueFieldHypothesisViolated:
            case toromon::ErrorKind::RootExtractionFailed:
            case toromon::ErrorKind::Condition1Violated:
            case toromon::ErrorKind::SearchExhausted:
                return 1;
            case toromon::ErrorKind::InternalError:
                return 3;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
