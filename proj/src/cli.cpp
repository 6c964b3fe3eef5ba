#include "hnet/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hnet/algebra.hpp"
#include "hnet/error.hpp"
#include "hnet/notation.hpp"
#include "hnet/testkit.hpp"

namespace hnet::cli {

namespace {

// Signals an exit status together with a message for stderr.
struct Exit {
    int code;
    std::string message;
};

class Session {
public:
    Session(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    std::string read(const std::string& path) {
        if (path == "-") {
            if (stdin_used_) throw Exit{kUsageError, "standard input can be read only once"};
            stdin_used_ = true;
            std::ostringstream ss;
            ss << in_.rdbuf();
            return ss.str();
        }
        std::ifstream f(path, std::ios::binary);
        if (!f) throw Exit{kUsageError, "cannot read " + path};
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    // Loads a file whose hypernetwork must validate.
    Hypernetwork load_valid(const std::string& path) {
        BuildResult r = load_any(path);
        if (!r.report.ok()) {
            write_report(err_, r.report, path + ": ");
            throw Exit{kViolations, {}};
        }
        return std::move(r.network);
    }

    BuildResult load_any(const std::string& path) {
        const std::string text = read(path);
        try {
            return hnet::load(text);
        } catch (const ParseError& e) {
            throw Exit{kParseError, path + ":" + e.what()};
        }
    }

    void emit(const std::string& path, const std::string& text) {
        if (path == "-") {
            out_ << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << text)) throw Exit{kUsageError, "cannot write " + path};
    }

    static void write_report(std::ostream& os, const ValidationReport& report, const std::string& prefix = {}) {
        for (const auto& v : report.violations)
            os << prefix << to_string(v.rule) << '\t' << v.element << '\t' << v.detail << '\n';
    }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    bool stdin_used_ = false;
};

// Operator results are expected to validate; anything else is a defect.
void check_result(const Hypernetwork& h) {
    auto report = validate(h);
    if (report.ok()) return;
    std::ostringstream os;
    os << "internal error: operator result fails validation\n";
    Session::write_report(os, report);
    throw Exit{kViolations, os.str()};
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypernetwork models: validate, compose and project .hn files", "hnet"};
    app.require_subcommand(1);

    std::string file, left, right, output = "-";
    auto* validate_cmd = app.add_subcommand("validate", "Check axioms A1-A5; prints AXIOM<tab>ELEMENT<tab>DETAIL lines");
    validate_cmd->add_option("file", file, ".hn file or -")->required();

    auto* canon_cmd = app.add_subcommand("canon", "Print the canonical form");
    canon_cmd->add_option("file", file, ".hn file or -")->required();
    canon_cmd->add_option("-o,--out", output, "output file or -");

    std::map<std::string, CLI::App*> binops;
    for (const auto& [name, help] : {std::pair{"merge", "left merged with right"},
                                     std::pair{"meet", "structure common to left and right"},
                                     std::pair{"diff", "structure of left not in right"}}) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("left", left, ".hn file or -")->required();
        cmd->add_option("right", right, ".hn file or -")->required();
        cmd->add_option("-o,--out", output, "output file or -");
        binops[name] = cmd;
    }

    std::vector<std::string> drops;
    auto* prune_cmd = app.add_subcommand("prune", "Prune selected structure");
    prune_cmd->add_option("file", file, ".hn file or -")->required();
    prune_cmd->add_option("--drop", drops, "selector item: v:<id>, hs:<id>, rel:<symbol> or b:<id>");
    prune_cmd->add_option("-o,--out", output, "output file or -");

    std::string boundary;
    std::vector<std::string> seeds;
    bool all = false;
    auto* split_cmd = app.add_subcommand("split", "Project onto a boundary or a seed closure");
    split_cmd->add_option("file", file, ".hn file or -")->required();
    auto* criterion = split_cmd->add_option_group("criterion", "exactly one projection criterion");
    criterion->add_option("--boundary", boundary, "boundary id");
    criterion->add_option("--seed", seeds, "seed vertex id (repeatable)");
    criterion->add_flag("--all", all, "universal projection");
    criterion->require_option(1);
    split_cmd->add_option("-o,--out", output, "output file or -");

    auto* subhn_cmd = app.add_subcommand("subhn", "Print true iff small is a sub-hypernetwork of big");
    subhn_cmd->add_option("small", left, ".hn file or -")->required();
    subhn_cmd->add_option("big", right, ".hn file or -")->required();

    std::string dir;
    int count = 0;
    std::uint64_t seed = 0;
    auto* corpus_cmd = app.add_subcommand("corpus", "Write seeded generated models as .hn files");
    corpus_cmd->add_option("dir", dir, "output directory")->required();
    corpus_cmd->add_option("--count", count, "number of models")->check(CLI::NonNegativeNumber)->default_val(20);
    corpus_cmd->add_option("--seed", seed, "first seed")->default_val(0);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    Session s(in, out, err);
    try {
        if (*validate_cmd) {
            BuildResult r = s.load_any(file);
            Session::write_report(out, r.report);
            return r.report.ok() ? kOk : kViolations;
        }
        if (*canon_cmd) {
            BuildResult r = s.load_any(file);
            s.emit(output, canonical(r.network));
            if (!r.report.ok()) {
                Session::write_report(err, r.report);
                return kViolations;
            }
            return kOk;
        }
        for (const auto& [name, cmd] : binops) {
            if (!*cmd) continue;
            Hypernetwork h1 = s.load_valid(left);
            Hypernetwork h2 = s.load_valid(right);
            Hypernetwork r = name == "merge" ? merge(h1, h2) : name == "meet" ? meet(h1, h2) : difference(h1, h2);
            check_result(r);
            s.emit(output, canonical(r));
            return kOk;
        }
        if (*prune_cmd) {
            PruneSelector selector;
            for (const auto& d : drops) {
                try {
                    selector.insert(SelectorItem::parse(d));
                } catch (const std::invalid_argument& e) {
                    throw Exit{kUsageError, e.what()};
                }
            }
            Hypernetwork r = prune(s.load_valid(file), selector);
            check_result(r);
            s.emit(output, canonical(r));
            return kOk;
        }
        if (*split_cmd) {
            SplitCriterion c = SplitCriterion::all();
            if (!boundary.empty()) {
                if (!ElementId::is_plain_identifier(boundary)) throw Exit{kUsageError, "malformed boundary id"};
                c = SplitCriterion::boundary(ElementId(boundary));
            } else if (!seeds.empty()) {
                IdSet ids;
                for (const auto& sd : seeds) ids.insert(ElementId(sd));
                c = SplitCriterion::seeds(std::move(ids));
            }
            Hypernetwork r = split(s.load_valid(file), c);
            check_result(r);
            s.emit(output, canonical(r));
            return kOk;
        }
        if (*subhn_cmd) {
            Hypernetwork small = s.load_any(left).network;
            Hypernetwork big = s.load_any(right).network;
            out << (is_sub_hypernetwork(small, big) ? "true" : "false") << '\n';
            return kOk;
        }
        if (*corpus_cmd) {
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            if (ec) throw Exit{kUsageError, "cannot create " + dir};
            for (int i = 0; i < count; ++i) {
                testkit::GenConfig cfg;
                cfg.seed = seed + static_cast<std::uint64_t>(i);
                std::ostringstream name;
                name << "seed_" << std::setw(4) << std::setfill('0') << cfg.seed << ".hn";
                s.emit((std::filesystem::path(dir) / name.str()).string(), canonical(testkit::gen_valid(cfg)));
            }
            return kOk;
        }
    } catch (const Exit& e) {
        if (!e.message.empty()) err << e.message << (e.message.back() == '\n' ? "" : "\n");
        return e.code;
    } catch (const ClosureViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kViolations;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kOperatorError;
    }
    return kUsageError;
}

} // namespace hnet::cli
