// Command-line front end: generate, verify, rank, h1, suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "waringlab/io.hpp"
#include "waringlab/suite.hpp"

using namespace waringlab;

namespace {

int fail(const std::string& kind, const std::string& message, int code = 2)
{
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << std::endl;
    return code;
}

Json read_json(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw Error("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_output(const std::string& out, const std::string& text)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("cannot write '" + out + "'");
    f << text;
}

// "line=K,conic=K"
VerifyOptions parse_overrides(const std::string& text)
{
    VerifyOptions opts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("threshold override '" + item + "' is not key=value");
        const auto key = item.substr(0, eq);
        std::size_t value = 0;
        try {
            value = std::stoul(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error("threshold override '" + item + "' needs an integer");
        }
        if (key == "line") opts.line_threshold = value;
        else if (key == "conic") opts.conic_threshold = value;
        else throw Error("unknown threshold '" + key + "' (use line or conic)");
    }
    return opts;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact real and complex Waring rank laboratory"};
    app.require_subcommand(1);

    std::string out;
    std::uint64_t seed = 0;

    auto* gen = app.add_subcommand("generate", "Write a seeded instance for case a, b or c");
    std::string case_label;
    unsigned d = 0, m = 0;
    gen->add_option("--case", case_label, "a, b or c")->required()->check(CLI::IsMember({"a", "b", "c"}));
    gen->add_option("--d", d, "degree")->required();
    gen->add_option("--m", m, "projective dimension")->required();
    gen->add_option("--seed", seed, "64-bit seed");
    gen->add_option("--out", out, "output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Classify an instance and write its case report");
    std::string input, overrides;
    ver->add_option("instance", input, "instance JSON")->required();
    ver->add_option("--out", out, "output file (default stdout)");
    ver->add_option("--threshold-overrides", overrides, "detection thresholds, e.g. line=5,conic=9");

    auto* rank = app.add_subcommand("rank", "Complex and real rank of a binary form");
    rank->add_option("form", input, "form JSON with m = 1")->required();
    rank->add_option("--out", out, "output file (default stdout)");
    rank->add_option("--seed", seed, "recorded in the output");

    auto* h1 = app.add_subcommand("h1", "h^1 of the ideal of a point set in degree d");
    h1->add_option("pointset", input, "point set JSON")->required();
    h1->add_option("--d", d, "degree")->required();
    h1->add_option("--out", out, "output file (default stdout)");
    h1->add_option("--seed", seed, "recorded in the output");

    auto* suite = app.add_subcommand("suite", "Run the acceptance batches");
    std::uint64_t suite_seed = 1;
    suite->add_option("--seed", suite_seed, "base seed");
    suite->add_option("--out", out, "directory for round-trip instance and report files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        return fail("usage", e.what());
    }

    try {
        if (*gen) {
            auto inst = generate_instance(case_label[0], d, m, seed);
            write_output(out, dump(to_json(inst)));
            return 0;
        }
        if (*ver) {
            auto inst = instance_from_json(read_json(input));
            auto rep = classify(inst, overrides.empty() ? VerifyOptions{} : parse_overrides(overrides));
            write_output(out, dump(to_json(rep)));
            return rep.overall ? 0 : 1;
        }
        if (*rank) {
            auto f = form_from_json(read_json(input));
            if (f.num_vars() != 2) throw Error("rank needs a binary form (m = 1)");
            auto bf = BinaryForm::from_homogeneous(f);
            auto cr = complex_rank(bf);
            Json j{{"seed", seed}, {"form", to_json(f)}, {"r_C", cr.rank}};
            if (bf.is_real()) {
                auto rr = real_rank(bf);
                j["r_R"] = rr.rank;
                j["complex"] = to_json(cr);
                j["real"] = to_json(rr);
            } else {
                j["r_R"] = nullptr;
                j["complex"] = to_json(cr);
                j["real"] = nullptr;
            }
            write_output(out, dump(j));
            return 0;
        }
        if (*h1) {
            auto s = point_set_from_json(read_json(input));
            Json j{{"seed", seed}, {"d", d}, {"report", to_json(h1_ideal(s, d))}};
            write_output(out, dump(j));
            return 0;
        }
        if (*suite) {
            SuiteOptions opts;
            opts.seed = suite_seed;
            if (!out.empty()) opts.out_dir = out;
            bool all = true;
            run_acceptance(opts, [&](const CriterionResult& r) {
                std::cout << format_result(r) << std::endl;
                all = all && r.passed;
            });
            return all ? 0 : 1;
        }
    } catch (const Error& e) {
        return fail("input", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 3);
    }
    return 0;
}
