#include "stirling_kit/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>

#include "stirling_kit/checks.hpp"
#include "stirling_kit/egf.hpp"
#include "stirling_kit/hankel.hpp"
#include "stirling_kit/io.hpp"
#include "stirling_kit/sequences.hpp"
#include "stirling_kit/transform.hpp"

namespace stirling_kit {

namespace {

// Raised for bad input after parsing succeeded; maps to kExitUsage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string seq;
    std::string file;
    std::optional<int> length;
    int shift = 0;

    void attach(CLI::App* cmd) {
        auto* s = cmd->add_option("--seq", seq, "Built-in sequence name");
        auto* f = cmd->add_option("--file", file, "Sequence file (JSON)");
        s->excludes(f);
        cmd->add_option("--len", length, "Number of terms to generate (before --shift)")->check(CLI::PositiveNumber);
        cmd->add_option("--shift", shift, "Drop this many leading terms")->check(CLI::NonNegativeNumber);
    }

    /// `needed` is the number of terms the command consumes after shifting.
    SequenceRecord load(std::optional<int> needed) const {
        if (seq.empty() == file.empty()) throw UsageError("exactly one of --seq or --file is required");
        SequenceRecord record;
        if (!seq.empty()) {
            int len = 0;
            if (length) {
                len = *length;
            } else if (needed) {
                len = *needed + shift;
            } else {
                throw UsageError("--len is required with --seq here");
            }
            record = generate(seq, len);
        } else {
            record = load_sequence_file(file);
        }
        if (shift > 0) record = record.shifted(static_cast<std::size_t>(shift));
        return record;
    }
};

template <class T>
SequenceRecord with_values(const SequenceRecord& base, std::vector<T> values, std::map<std::string, std::string> extra) {
    SequenceRecord out{base.name, std::move(values), base.meta};
    for (auto& [k, v] : extra) out.meta[k] = std::move(v);
    return out;
}

Rational lift(const Integer& v) { return Rational(v); }
const Rational& lift(const Rational& v) { return v; }
const RationalPolynomial& lift(const RationalPolynomial& v) { return v; }

int exit_for_report(const std::vector<CheckReport>& reports) { return all_passed(reports) ? kExitOk : kExitCheckFailed; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Stirling transforms, the two-way array they generate, and identity checks", "stirling-kit"};
    app.require_subcommand(1);

    // transform
    InputOptions transform_in;
    bool inverse = false;
    std::string transform_format = "json";
    auto* transform = app.add_subcommand("transform", "Stirling transform (or its inverse) of a sequence");
    transform_in.attach(transform);
    transform->add_flag("--inverse", inverse, "Apply the inverse transform");
    transform->add_option("--format", transform_format, "json | csv | table");

    // matrix
    InputOptions matrix_in;
    std::string from;
    int rows = 0;
    int cols = 0;
    std::string matrix_format = "table";
    auto* matrix = app.add_subcommand("matrix", "Rows 0..N, columns 0..M of the array built from a first row or column");
    matrix_in.attach(matrix);
    matrix->add_option("--from", from, "initial | final")->required()->check(CLI::IsMember({"initial", "final"}));
    matrix->add_option("--rows", rows, "Last row index N")->required();
    matrix->add_option("--cols", cols, "Last column index M")->required();
    matrix->add_option("--format", matrix_format, "table | json | csv");

    // check
    std::string suite = "all";
    int max_n = 12;
    std::string check_format = "text";
    std::string fixtures;
    auto* check = app.add_subcommand("check", "Run identity check suites");
    check->add_option("--suite", suite, "all | ega | egf | hankel | rstirling | catalan-motzkin | bernoulli | matrices");
    check->add_option("--max-n", max_n, "Range parameter")->check(CLI::NonNegativeNumber);
    check->add_option("--format", check_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    check->add_option("--fixtures", fixtures, "Directory with golden matrix fixtures");

    // seq
    InputOptions seq_in;
    std::string seq_format = "csv";
    auto* seq = app.add_subcommand("seq", "Print a built-in sequence");
    seq_in.attach(seq);
    seq->add_option("--format", seq_format, "csv | json | table");

    // egf
    InputOptions egf_in;
    std::string op;
    std::string p_text = "1";
    std::string q_text = "1";
    long scale = 1;
    std::optional<int> order;
    int egf_r = 0;
    std::string inner = "exp_minus_one";
    std::string egf_format = "csv";
    auto* egf = app.add_subcommand("egf", "Truncated EGF operations; prints coefficients c_k of sum c_k z^k/k!");
    egf->add_option("--op", op, "compose | theorem3 | theorem4 | 1f1")
        ->required()
        ->check(CLI::IsMember({"compose", "theorem3", "theorem4", "1f1"}));
    egf_in.attach(egf);
    egf->add_option("--p", p_text, "1F1 upper parameter (rational)");
    egf->add_option("--q", q_text, "1F1 lower parameter (rational)");
    egf->add_option("--scale", scale, "1F1 argument scale");
    egf->add_option("--order", order, "Truncation order (default 16 or STIRLING_KIT_ORDER)")->check(CLI::NonNegativeNumber);
    egf->add_option("--r", egf_r, "Column (theorem3) or row (theorem4) index")->check(CLI::NonNegativeNumber);
    egf->add_option("--inner", inner, "exp_minus_one | log1p | identity (compose)")
        ->check(CLI::IsMember({"exp_minus_one", "log1p", "identity"}));
    egf->add_option("--format", egf_format, "csv | json | table");

    // hankel
    InputOptions hankel_in;
    int hankel_n = 0;
    std::string hankel_format = "csv";
    auto* hankel = app.add_subcommand("hankel", "Hankel transform det(a[i+j]) for n = 0..K");
    hankel_in.attach(hankel);
    hankel->add_option("--n", hankel_n, "Largest n")->required()->check(CLI::NonNegativeNumber);
    hankel->add_option("--format", hankel_format, "csv | json | table");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*transform) {
            const auto format = parse_output_format(transform_format);
            const auto record = transform_in.load(std::nullopt);
            const auto result = std::visit(
                [&](const auto& v) {
                    auto values = inverse ? inverse_stirling_transform(v) : stirling_transform(v);
                    return with_values(record, std::move(values), {{"transform", inverse ? "inverse" : "forward"}});
                },
                record.values);
            out << render_sequence(result, format);
            return kExitOk;
        }
        if (*matrix) {
            const auto format = parse_output_format(matrix_format);
            if (rows < 0 || cols < 0) throw UsageError("--rows and --cols must be nonnegative");
            const auto record = matrix_in.load(rows + cols + 1);
            const auto text = std::visit(
                [&](const auto& v) {
                    if (v.size() < static_cast<std::size_t>(rows + cols + 1)) {
                        throw UsageError("--rows " + std::to_string(rows) + " --cols " + std::to_string(cols) + " needs " +
                                         std::to_string(rows + cols + 1) + " terms, input has " + std::to_string(v.size()));
                    }
                    auto block = from == "initial" ? build_from_initial(v, rows, cols) : build_from_final(v, rows, cols);
                    return matrix_text(block, record.name);
                },
                record.values);
            out << render_matrix(text, format);
            return kExitOk;
        }
        if (*check) {
            CheckOptions options{max_n, fixtures};
            const auto reports = run_checks(suite, options);
            out << (check_format == "json" ? render_report_json(reports) : render_report_text(reports));
            return exit_for_report(reports);
        }
        if (*seq) {
            const auto format = parse_output_format(seq_format);
            out << render_sequence(seq_in.load(std::nullopt), format);
            return kExitOk;
        }
        if (*egf) {
            const auto format = parse_output_format(egf_format);
            const int n = order ? *order : default_egf_order();
            SequenceRecord result;
            if (op == "1f1") {
                const auto series = hypergeometric_1f1(parse_rational(p_text), parse_rational(q_text), scale, n);
                result = SequenceRecord{"1f1", series.coefficients(),
                                        {{"p", p_text}, {"q", q_text}, {"scale", std::to_string(scale)}, {"order", std::to_string(n)}}};
            } else {
                const int skip = (op == "compose") ? 0 : egf_r;
                auto record = egf_in.load(skip + n + 1);
                if (skip > 0) record = record.shifted(static_cast<std::size_t>(skip));
                result = std::visit(
                    [&](const auto& v) -> SequenceRecord {
                        using T = typename std::decay_t<decltype(v)>::value_type;
                        if constexpr (std::is_same_v<T, QuadraticSurd>) {
                            throw UsageError("egf operations take int, rational or poly sequences");
                        } else {
                            if (v.size() < static_cast<std::size_t>(n) + 1) {
                                throw UsageError("order " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                                                 " terms after shifting, input has " + std::to_string(v.size()));
                            }
                            using F = std::decay_t<decltype(lift(v[0]))>;
                            std::vector<F> coeffs;
                            for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) coeffs.push_back(lift(v[i]));
                            const TruncatedEGF<F> f(std::move(coeffs));
                            TruncatedEGF<F> g = f;
                            if (op == "compose") {
                                const RationalEGF in = inner == "log1p" ? log1p_series(n)
                                                       : inner == "identity" ? identity_series(n)
                                                                              : exp_minus_one_series(n);
                                g = series_compose(f, in);
                            } else if (op == "theorem3") {
                                g = theorem3_apply(f, egf_r);
                            } else {
                                g = theorem4_apply(f, egf_r);
                            }
                            return with_values(record, g.coefficients(),
                                               {{"egf_op", op}, {"order", std::to_string(n)}, {"r", std::to_string(egf_r)}});
                        }
                    },
                    record.values);
            }
            out << render_sequence(result, format);
            return kExitOk;
        }
        if (*hankel) {
            const auto format = parse_output_format(hankel_format);
            const auto record = hankel_in.load(2 * hankel_n + 1);
            const auto result = std::visit(
                [&](const auto& v) {
                    return with_values(record, hankel_transform(v, hankel_n), {{"hankel_n", std::to_string(hankel_n)}});
                },
                record.values);
            out << render_sequence(result, format);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace stirling_kit
