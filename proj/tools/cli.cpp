#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "anonlevel/classifier.hpp"
#include "anonlevel/corpus.hpp"
#include "anonlevel/dsl.hpp"
#include "anonlevel/report.hpp"

namespace anonlevel::cli {
namespace {

constexpr std::string_view kCorpusPrefix = "corpus:";

struct Settings {
    std::string file;
    std::string observee;
    std::vector<std::string> trust;
    std::string format = "text";
    std::string require_level;
    bool strict = false;
    std::string level;
    std::string variant;
    std::string out_path;
    std::string corpus_name;
};

struct Source {
    std::string name;
    std::string text;
};

class Command {
public:
    Command(const Settings& s, std::ostream& out, std::ostream& err, const Options& options)
        : s_(s), out_(out), err_(err), color_(options.color && s.out_path.empty()) {}

    int classify();
    int sweep();
    int check();
    int validate();
    int map();
    int corpus();

private:
    bool json() const { return s_.format == "json"; }

    std::optional<Source> load() {
        if (s_.file.rfind(kCorpusPrefix, 0) == 0) {
            const auto name = s_.file.substr(kCorpusPrefix.size());
            if (const auto* m = find_corpus_model(name)) return Source{s_.file, m->text};
            err_ << "error: no embedded model named '" << name << "'\n";
            return std::nullopt;
        }
        std::ifstream in(s_.file, std::ios::binary);
        if (!in) {
            err_ << "error: cannot read '" << s_.file << "'\n";
            return std::nullopt;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return Source{s_.file, buf.str()};
    }

    void print_diagnostics(const std::vector<Diagnostic>& diagnostics, const std::string& source) {
        for (const auto& d : diagnostics) err_ << format_diagnostic(d, source) << "\n";
    }

    // Reports problems that stop the analysis before a classification exists.
    int fail_input(const std::string& model_name, const std::vector<Diagnostic>& diagnostics,
                   const std::string& source) {
        if (json()) {
            Report r;
            r.model_name = model_name;
            r.diagnostics = diagnostics;
            if (!emit(render_json(r))) return kInputError;
        } else {
            print_diagnostics(diagnostics, source);
        }
        return kInputError;
    }

    int internal(const InternalError& e, const std::string& source) {
        err_ << "internal error: " << e.what() << "\n";
        print_diagnostics(e.diagnostics(), source);
        return kInternalError;
    }

    bool emit(const std::string& text) {
        if (s_.out_path.empty()) {
            out_ << text;
            return true;
        }
        std::ofstream file(s_.out_path, std::ios::binary | std::ios::trunc);
        file << text;
        if (!file) {
            err_ << "error: cannot write '" << s_.out_path << "'\n";
            return false;
        }
        return true;
    }

    struct Prepared {
        Source source;
        ServiceModel model;
        AnalysisParams params;
    };

    // Loads, parses and normalises; on failure returns the exit code.
    std::optional<Prepared> prepare(int& code, const std::vector<std::string>& trust) {
        code = kInputError;
        auto source = load();
        if (!source) return std::nullopt;
        auto parsed = parse(source->text);
        if (!parsed.ok()) {
            code = fail_input("", parsed.diagnostics, source->name);
            return std::nullopt;
        }
        auto params = normalize_params(*parsed.model, s_.observee, trust);
        if (!params.params) {
            code = fail_input(parsed.model->name, params.diagnostics, source->name);
            return std::nullopt;
        }
        return Prepared{std::move(*source), std::move(*parsed.model), std::move(*params.params)};
    }

    const Settings& s_;
    std::ostream& out_;
    std::ostream& err_;
    bool color_;
};

int Command::classify() {
    int code = kOk;
    auto p = prepare(code, s_.trust);
    if (!p) return code;
    ClassifyResult result;
    try {
        result = anonlevel::classify(p->model, p->params);
    } catch (const InternalError& e) {
        return internal(e, p->source.name);
    }
    Report report{p->model.name, p->params, result.classification, result.diagnostics};
    if (!emit(json() ? render_json(report) : render_text(report, color_))) return kInputError;
    return result.ok() ? kOk : kInputError;
}

int Command::sweep() {
    int code = kOk;
    auto p = prepare(code, {});
    if (!p) return code;
    SweepResult result;
    try {
        result = anonlevel::sweep(p->model, p->params.observee);
    } catch (const InternalError& e) {
        return internal(e, p->source.name);
    }
    const auto& who = p->params.observee;
    if (!emit(json() ? render_sweep_json(p->model.name, who, result)
                     : render_sweep_text(p->model.name, who, result, color_))) {
        return kInputError;
    }
    return has_errors(result.diagnostics) ? kInputError : kOk;
}

int Command::check() {
    const auto required = Level::parse(s_.require_level);
    if (!required) {
        err_ << "error: --require-level expects 0-4 or VA, AA, RA, FA, UA\n";
        return kInputError;
    }
    int code = kOk;
    auto p = prepare(code, s_.trust);
    if (!p) return code;
    ClassifyResult result;
    try {
        result = anonlevel::classify(p->model, p->params);
    } catch (const InternalError& e) {
        return internal(e, p->source.name);
    }
    if (!result.ok()) {
        print_diagnostics(result.diagnostics, p->source.name);
        return kInputError;
    }
    const auto& c = result.classification;
    std::vector<std::string> reasons;
    if (c.level < *required) {
        reasons.push_back("derived " + std::string(c.level.abbr) + " is below " + std::string(required->abbr));
    }
    if (s_.strict) {
        if (!c.publicity.satisfied) reasons.emplace_back("publicity constraint violated");
        if (!c.warnings.empty()) reasons.push_back(std::to_string(c.warnings.size()) + " warning(s)");
    }
    std::string verdict = reasons.empty() ? "PASS " : "FAIL ";
    verdict += p->model.name + ": " + std::string(c.level.abbr) + " (" + std::to_string(c.level.degree) +
               "), required " + std::string(required->abbr);
    for (const auto& r : reasons) verdict += "; " + r;
    if (!emit(verdict + "\n")) return kInputError;
    return reasons.empty() ? kOk : kRequirementNotMet;
}

int Command::validate() {
    auto source = load();
    if (!source) return kInputError;
    const auto parsed = parse(source->text);
    if (json()) {
        Report r;
        if (parsed.model) r.model_name = parsed.model->name;
        r.diagnostics = parsed.diagnostics;
        if (!emit(render_json(r))) return kInputError;
    } else {
        std::string text;
        for (const auto& d : parsed.diagnostics) text += format_diagnostic(d, source->name) + "\n";
        if (parsed.ok()) text += source->name + ": ok\n";
        if (!emit(text)) return kInputError;
    }
    return parsed.ok() ? kOk : kInputError;
}

int Command::map() {
    const auto level = Level::parse(s_.level);
    if (!level) {
        err_ << "error: --level expects 0-4 or VA, AA, RA, FA, UA\n";
        return kInputError;
    }
    auto variant = s_.variant.empty() ? std::optional<Variant>(Variant::none) : from_string<Variant>(s_.variant);
    if (!variant) {
        err_ << "error: --variant expects linkable or unlinkable\n";
        return kInputError;
    }
    const auto row = map_taxonomies(*level, *variant);
    if (!row) {
        err_ << format_diagnostic(invalid_combination(*level, *variant), "") << "\n";
        return kInputError;
    }
    return emit(json() ? render_map_json(*level, *variant, *row) : render_map_text(*level, *variant, *row))
               ? kOk
               : kInputError;
}

int Command::corpus() {
    if (!s_.corpus_name.empty()) {
        const auto* m = find_corpus_model(s_.corpus_name);
        if (m == nullptr) {
            err_ << "error: no embedded model named '" << s_.corpus_name << "'\n";
            return kInputError;
        }
        return emit(m->text) ? kOk : kInputError;
    }
    std::string text;
    for (const auto& m : anonlevel::corpus()) text += m.name + "\n";
    return emit(text) ? kOk : kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& options) {
    CLI::App app{"Trust-based anonymity classification of service models", "anonlevel"};
    app.require_subcommand(1);
    Settings s;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("FILE", s.file, "model file, or corpus:NAME for an embedded model")->required();
    };
    auto add_observee = [&](CLI::App* sub) {
        sub->add_option("--observee", s.observee, "role whose anonymity is investigated");
    };
    auto add_trust = [&](CLI::App* sub) {
        sub->add_option("--trust", s.trust, "additionally trusted entities")->delimiter(',');
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", s.out_path, "write output to PATH"); };

    auto* classify = app.add_subcommand("classify", "classify a model for one observee and trusted set");
    add_file(classify);
    add_observee(classify);
    add_trust(classify);
    add_format(classify);
    add_out(classify);

    auto* sweep = app.add_subcommand("sweep", "classify under every admissible trusted set");
    add_file(sweep);
    add_observee(sweep);
    add_format(sweep);
    add_out(sweep);

    auto* check = app.add_subcommand("check", "test a model against a required level");
    add_file(check);
    add_observee(check);
    add_trust(check);
    check->add_option("--require-level", s.require_level, "minimum level (0-4 or abbreviation)")->required();
    check->add_flag("--strict", s.strict, "also require the publicity constraint and no warnings");
    add_out(check);

    auto* validate = app.add_subcommand("validate", "parse and validate a model");
    add_file(validate);
    add_format(validate);
    add_out(validate);

    auto* map = app.add_subcommand("map", "show the corresponding categories of other taxonomies");
    map->add_option("--level", s.level, "level (0-4 or abbreviation)")->required();
    map->add_option("--variant", s.variant, "linkable or unlinkable");
    add_format(map);
    add_out(map);

    auto* corpus = app.add_subcommand("corpus", "list the embedded models or print one");
    corpus->add_option("NAME", s.corpus_name, "model to print");
    add_out(corpus);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kInputError;
    }

    Command cmd(s, out, err, options);
    try {
        if (classify->parsed()) return cmd.classify();
        if (sweep->parsed()) return cmd.sweep();
        if (check->parsed()) return cmd.check();
        if (validate->parsed()) return cmd.validate();
        if (map->parsed()) return cmd.map();
        return cmd.corpus();
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
}

}  // namespace anonlevel::cli
