#include "hopfbraid/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace hopfbraid;

void add_config_flags(CLI::App* cmd, RunConfig& config, std::string& instance) {
    cmd->add_option("--order", config.order, "truncation order N (>= 2)")
        ->envname("HOPFBRAID_ORDER")
        ->capture_default_str();
    cmd->add_option("--instance", instance, "algebra instance")
        ->check(CLI::IsMember({"uhsl2", "trivial"}))
        ->capture_default_str();
    cmd->add_option("--max-rank", config.max_rank, "ambient size for subset-indexed suites")
        ->capture_default_str();
}

RunConfig finish_config(RunConfig config, const std::string& instance) {
    config.instance = (instance == "trivial") ? InstanceKind::Trivial : InstanceKind::Uhsl2;
    return config;
}

int run_verify(const RunConfig& config) {
    const RunResult result = run_suites(config);
    if (config.output == OutputMode::Json && config.json_path.empty()) {
        std::cout << result.to_json(config).dump(2) << "\n";
    } else {
        result.write_text(std::cout);
    }
    if (!config.json_path.empty()) {
        std::ofstream out(config.json_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << config.json_path << "'\n";
            return 2;
        }
        out << result.to_json(config).dump(2) << "\n";
    }
    return result.overall ? 0 : 1;
}

AlgebraElement find_element(const SampleSet& samples, const std::string& name) {
    for (const auto& [n, x] : samples.elements)
        if (n == name)
            return x;
    throw std::runtime_error("unknown sample element '" + name + "'");
}

int run_dump(const RunConfig& config, const std::string& what) {
    const HopfAlgebra alg = config.make_algebra();
    if (what == "R" || what == "Rinv") {
        const RMatrix r = RMatrix::build(alg);
        std::cout << (what == "R" ? r.value() : r.inverse()).str() << "\n";
        return 0;
    }
    // delta<k>:<sample>, e.g. delta2:hE
    if (what.rfind("delta", 0) == 0) {
        const auto colon = what.find(':');
        if (colon == std::string::npos || colon <= 5)
            throw std::runtime_error("expected delta<k>:<sample>, e.g. delta2:hE");
        const int k = std::stoi(what.substr(5, colon - 5));
        const std::string name = what.substr(colon + 1);
        const SampleSet samples = config.sample_file.empty()
                                      ? default_samples(alg)
                                      : parse_sample_file(config.sample_file, alg);
        const AlgebraElement x = find_element(samples, name);
        std::cout << delta_full(x, k).str() << "\n";
        return 0;
    }
    throw std::runtime_error("unknown dump target '" + what +
                             "' (expected R, Rinv, or delta<k>:<sample>)");
}

int run_braid(const RunConfig& config, const std::string& word_text,
              const std::string& input_path, int strands) {
    const HopfAlgebra alg = config.make_algebra();
    std::vector<int> letters;
    std::istringstream ws(word_text);
    std::string tok;
    while (std::getline(ws, tok, ','))
        if (!tok.empty())
            letters.push_back(std::stoi(tok));
    const BraidWord word(strands, letters);
    TensorElement x(alg, strands);
    if (input_path.empty()) {
        // default input: h E (x) h F (x) 1 (x) ... padded with units
        TensorElement cur = alg.e().scaled(Series::h_power(1, alg.order())).as_tensor();
        cur = cur.tensor_product(alg.f().scaled(Series::h_power(1, alg.order())).as_tensor());
        for (int i = 2; i < strands; ++i)
            cur = cur.tensor_product(alg.one().as_tensor());
        x = cur;
    } else {
        const SampleSet samples = parse_sample_file(input_path, alg);
        const auto tensors = samples.tensors_of_rank(strands);
        if (tensors.empty())
            throw std::runtime_error("no rank-" + std::to_string(strands) +
                                     " tensor in sample file");
        x = tensors.front();
    }
    const RMatrix r = RMatrix::build(alg);
    std::cout << braid_act(r, word, x).str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for a quantized sl2 and its braiding"};
    app.require_subcommand(1);

    RunConfig config;
    std::string instance = "uhsl2";

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_config_flags(verify, config, instance);
    std::vector<std::string> suite_args;
    verify->add_option("names", suite_args, "suites to run (default: all)");
    verify->add_option("--suite", config.suites, "suites to run (repeatable)");
    verify->add_option("--samples", config.sample_file, "sample file path");
    verify->add_option("--json", config.json_path, "write JSON report to this path");
    std::string output = "text";
    verify->add_option("--output", output, "stdout format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->add_option("--max-n", config.max_n, "exhaustive bound for the nullity scan")
        ->capture_default_str();
    verify->add_option("--max-t", config.max_t, "exhaustive bound for the binomial sums")
        ->capture_default_str();

    auto* dump = app.add_subcommand("dump", "print an element in canonical form");
    add_config_flags(dump, config, instance);
    std::string what;
    dump->add_option("what", what, "R | Rinv | delta<k>:<sample>")->required();
    dump->add_option("--samples", config.sample_file, "sample file path");

    auto* braid = app.add_subcommand("braid", "apply a braid word to a tensor");
    add_config_flags(braid, config, instance);
    std::string word_text;
    std::string input_path;
    int strands = 3;
    braid->add_option("--word", word_text, "comma-separated signed generators, e.g. 1,2,-1")
        ->required();
    braid->add_option("--input", input_path, "sample file providing the input tensor");
    braid->add_option("--strands", strands, "number of strands")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            for (const auto& s : suite_args)
                config.suites.push_back(s);
            config.output = (output == "json") ? OutputMode::Json : OutputMode::Text;
            RunConfig c = finish_config(config, instance);
            c.validated_suites(); // reject bad config before running anything
            return run_verify(c);
        }
        if (dump->parsed())
            return run_dump(finish_config(config, instance), what);
        if (braid->parsed())
            return run_braid(finish_config(config, instance), word_text, input_path, strands);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
