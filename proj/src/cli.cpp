#include "opalg/cli.hpp"

#include "opalg/cstar.hpp"
#include "opalg/douglas.hpp"
#include "opalg/ideals.hpp"
#include "opalg/json_io.hpp"
#include "opalg/linalg.hpp"
#include "opalg/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>

namespace opalg::cli {

namespace {

// Reports are printed with fixed 17-significant-digit numbers so identical
// inputs produce byte-identical bytes on any libc.
void dump_number(double v, std::string& out) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void dump_json(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    const std::string pad_in(static_cast<size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + Json(it.key()).dump() + ": ";
                dump_json(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const Json& item : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_json(item, out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float:
            dump_number(j.get<double>(), out);
            return;
        default:
            out += j.dump();
            return;
    }
}

std::string dump_report(const Json& report) {
    std::string out;
    dump_json(report, out, 0);
    out += "\n";
    return out;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    out.push_back(current);
    return out;
}

struct Options {
    std::string input;
    std::string names;
    std::string out_path;
    std::string format = "json";
    double tol = -1.0;  // negative: not set on the command line
    std::uint64_t seed = 0;
    Index depth = 0;
    Index target_dim = 0;
    Index kraus = 1;
    Index count = 0;
    Index blocks_m = 0;
};

struct Context {
    Options opts;
    Tolerance tol;       // matrix tolerances in effect
    double tail_tol;     // sequence tolerance in effect
    double gap_tol;      // spectral-gap threshold in effect
    double cert_tol;     // pass/fail threshold for certificate residuals
    Json input_doc;

    const Json& entry(const std::string& name) const {
        if (!input_doc.is_object() || !input_doc.contains(name)) {
            throw Error("input file has no entry named '" + name + "'");
        }
        return input_doc.at(name);
    }

    ComplexMatrix matrix(const std::string& name) const { return matrix_from_json(entry(name)); }

    SequenceFunction sequence(const std::string& name) const {
        return sequence_from_json(entry(name));
    }

    std::vector<std::string> name_list(const std::string& defaults) const {
        std::string source = opts.names.empty() ? defaults : opts.names;
        if (source.empty()) {
            // Fall back to every entry of the input file, in file order.
            std::vector<std::string> all;
            for (auto it = input_doc.begin(); it != input_doc.end(); ++it) all.push_back(it.key());
            return all;
        }
        return split(source, ',');
    }
};

Json sequence_report_fields(const SequenceFactorization& outcome) {
    Json fields = Json::object();
    fields["oscillation"] = outcome.verdict.oscillation;
    fields["witness_limit"] = outcome.verdict.witness_limit
                                  ? complex_json(*outcome.verdict.witness_limit)
                                  : Json(nullptr);
    fields["factor"] = outcome.factor ? sequence_to_json(*outcome.factor) : Json(nullptr);
    return fields;
}

using Handler = void (*)(Context&, Json&, int&);

void handle_factor(Context& ctx, Json& report, int& exit_code) {
    const auto names = ctx.name_list("A,B");
    if (names.size() != 2) throw Error("factor needs exactly two matrix names");
    const auto result = douglas_factor(ctx.matrix(names[0]), ctx.matrix(names[1]), ctx.tol);
    if (!result) {
        report["status"] = "absent";
        report["reason"] = "kernel of the divisor is not contained in the kernel of the dividend";
        return;
    }
    report["status"] = "ok";
    report["lambda"] = result->lambda_min;
    report["residual"] = result->residual;
    report["is_partial_isometry"] = result->is_partial_isometry;
    report["factor"] = matrix_to_json(result->factor);
    (void)exit_code;
}

void handle_factor_isometric(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("A,B");
    if (names.size() != 2) throw Error("factor-isometric needs exactly two matrix names");
    const ComplexMatrix a = ctx.matrix(names[0]);
    const ComplexMatrix b = ctx.matrix(names[1]);
    const FactorizationResult result = douglas_factor_isometric(a, b, ctx.tol);
    const ComplexMatrix c = result.factor;
    report["status"] = "ok";
    report["lambda"] = result.lambda_min;
    report["residual"] = result.residual;
    report["initial_projection_residual"] =
        operator_norm(c.adjoint() * c - range_projection(b, ctx.tol));
    report["final_projection_residual"] =
        operator_norm(c * c.adjoint() - range_projection(a, ctx.tol));
    report["factor"] = matrix_to_json(c);
}

void handle_lambda(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("A,B");
    if (names.size() != 2) throw Error("lambda needs exactly two matrix names");
    const auto lambda = majorization_lambda(ctx.matrix(names[0]), ctx.matrix(names[1]), ctx.tol);
    if (!lambda) {
        report["status"] = "absent";
        report["reason"] = "no scalar satisfies the majorization";
        return;
    }
    report["status"] = "ok";
    report["lambda"] = *lambda;
}

void handle_polar(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("A");
    if (names.size() != 1) throw Error("polar needs exactly one matrix name");
    const ComplexMatrix a = ctx.matrix(names[0]);
    const PolarDecomposition polar = polar_decomposition(a, ctx.tol);
    report["status"] = "ok";
    report["residual"] = operator_norm(a - polar.partial_isometry * polar.positive_part);
    report["isometry"] = matrix_to_json(polar.partial_isometry);
    report["positive"] = matrix_to_json(polar.positive_part);
}

void handle_ideal_contains(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("A,B");
    if (names.size() != 2) throw Error("ideal-contains needs exactly two matrix names");
    const auto lambda = majorization_lambda(ctx.matrix(names[0]), ctx.matrix(names[1]), ctx.tol);
    report["status"] = "ok";
    report["contains"] = lambda.has_value();
    report["lambda"] = lambda ? Json(*lambda) : Json(nullptr);
}

void handle_ideal_gen(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("");
    std::vector<ComplexMatrix> mats;
    mats.reserve(names.size());
    for (const std::string& name : names) mats.push_back(ctx.matrix(name));
    const ComplexMatrix gen = finite_generator(mats, ctx.tol);
    bool all_contained = true;
    for (const ComplexMatrix& m : mats) all_contained &= ideal_contains(m, gen, ctx.tol);
    report["status"] = "ok";
    report["generator"] = matrix_to_json(gen);
    report["all_factor_through_generator"] = all_contained;
}

void handle_ideal_countable(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("");
    std::vector<ComplexMatrix> mats;
    mats.reserve(names.size());
    for (const std::string& name : names) mats.push_back(ctx.matrix(name));
    const Index n = ctx.opts.depth > 0 ? ctx.opts.depth : static_cast<Index>(mats.size());
    const ComplexMatrix gen = countable_generator_truncated(mats, n, ctx.tol);
    report["status"] = "ok";
    report["terms"] = n;
    report["generator"] = matrix_to_json(gen);
}

void handle_ideal_intersect(Context& ctx, Json& report, int& exit_code) {
    // Names come as three ';'-separated groups: generators of the first
    // algebra, generators of the second, and the common element.
    std::vector<std::string> groups;
    if (!ctx.opts.names.empty()) {
        groups = split(ctx.opts.names, ';');
    } else {
        std::string r1;
        std::string r2;
        std::string a = "A";
        for (auto it = ctx.input_doc.begin(); it != ctx.input_doc.end(); ++it) {
            const std::string& key = it.key();
            if (key.rfind("R1", 0) == 0) r1 += (r1.empty() ? "" : ",") + key;
            if (key.rfind("R2", 0) == 0) r2 += (r2.empty() ? "" : ",") + key;
        }
        groups = {r1, r2, a};
    }
    if (groups.size() != 3) {
        throw Error("ideal-intersect needs names as '<gens1>;<gens2>;<element>'");
    }
    auto collect = [&](const std::string& group) {
        std::vector<ComplexMatrix> mats;
        if (!group.empty()) {
            for (const std::string& name : split(group, ',')) mats.push_back(ctx.matrix(name));
        }
        return mats;
    };
    const ComplexMatrix a = ctx.matrix(groups[2]);
    const Index dim = a.rows();
    const StarAlgebraBasis r1 = generate_star_algebra(collect(groups[0]), dim, ctx.tol);
    const StarAlgebraBasis r2 = generate_star_algebra(collect(groups[1]), dim, ctx.tol);
    const IdealIntersectionReport result = verify_ideal_intersection(r1, r2, a, ctx.tol);
    report["status"] = result.all_equal() ? "ok" : "refuted";
    report["dim_r1a_cap_r2"] = result.dim_r1a_cap_r2;
    report["dim_r1a_cap_r2a"] = result.dim_r1a_cap_r2a;
    report["dim_common_a"] = result.dim_common_a;
    report["equal_12"] = result.equal_12;
    report["equal_13"] = result.equal_13;
    report["equal_23"] = result.equal_23;
    report["algebra_dims"] = Json::array({r1.size(), r2.size()});
    if (!result.all_equal()) exit_code = 1;
}

void handle_wo_closed(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("A");
    if (names.size() != 1) throw Error("wo-closed needs exactly one entry name");
    const Json& entry = ctx.entry(names[0]);
    ZeroIsolation result;
    if (entry.is_object() && entry.contains("samples")) {
        result = is_zero_isolated_sequence(sequence_from_json(entry), ctx.gap_tol);
        report["kind"] = "sequence";
    } else {
        result = is_zero_isolated_matrix(matrix_from_json(entry), ctx.tol);
        report["kind"] = "matrix";
    }
    report["status"] = "ok";
    report["isolated"] = result.isolated;
    report["gap"] = result.gap;
}

void handle_seq_dfp(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("f,g");
    if (names.size() != 2) throw Error("seq-dfp needs exactly two sequence names");
    const SequenceFactorization outcome =
        dfp_factor(ctx.sequence(names[0]), ctx.sequence(names[1]), ctx.tail_tol);
    report["status"] = outcome.factor ? "ok" : "absent";
    report.update(sequence_report_fields(outcome));
}

void handle_seq_wpdp(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("f");
    if (names.size() != 1) throw Error("seq-wpdp needs exactly one sequence name");
    const SequenceFactorization outcome = wpdp_factor(ctx.sequence(names[0]), ctx.tail_tol);
    report["status"] = outcome.factor ? "ok" : "absent";
    report.update(sequence_report_fields(outcome));
}

void handle_seq_reduce(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("t1,t2,t3");
    if (names.size() != 3) throw Error("seq-reduce needs exactly three sequence names");
    const SequenceFactorization outcome =
        substonean_reduce(ctx.sequence(names[0]), ctx.sequence(names[1]), ctx.sequence(names[2]),
                          ctx.tail_tol);
    report["status"] = outcome.factor ? "ok" : "absent";
    report.update(sequence_report_fields(outcome));
}

struct SegmentInstance {
    std::vector<BimoduleElement> elements;
    CoefficientTuple coefficients;
};

SegmentInstance segment_instance_from(const Json& doc, bool need_coefficients) {
    if (!doc.is_object() || !doc.contains("elements")) {
        throw Error("expected an object with an 'elements' array");
    }
    SegmentInstance inst;
    for (const Json& e : doc.at("elements")) inst.elements.push_back(element_from_json(e));
    if (doc.contains("coefficients")) {
        inst.coefficients = coefficients_from_json(doc.at("coefficients"));
    } else if (need_coefficients) {
        throw Error("expected a 'coefficients' entry");
    }
    return inst;
}

double element_distance(const BimoduleElement& a, const BimoduleElement& b) {
    double out = 0.0;
    for (size_t p = 0; p < a.parts.size(); ++p) {
        out = std::max(out, operator_norm(a.parts[p] - b.parts[p]));
    }
    return out;
}

void handle_seg_reduce(Context& ctx, Json& report, int& exit_code) {
    const SegmentInstance inst = segment_instance_from(ctx.input_doc, true);
    const SegmentProgram prog = reduce_to_segments(inst.elements, inst.coefficients, ctx.tol);
    const BimoduleElement direct = cstar_combination(inst.elements, inst.coefficients, ctx.tol);
    const BimoduleElement replayed = replay_program(inst.elements, prog);

    double max_step_defect = 0.0;
    const ComplexMatrix eye = ComplexMatrix::Identity(inst.coefficients.dim, inst.coefficients.dim);
    for (const SegmentStep& step : prog.steps) {
        max_step_defect = std::max(
            max_step_defect,
            operator_norm(step.t1.adjoint() * step.t1 + step.t2.adjoint() * step.t2 - eye));
    }
    double scale = 1.0;
    for (const BimoduleElement& e : inst.elements) {
        for (const ComplexMatrix& p : e.parts) scale = std::max(scale, operator_norm(p));
    }
    const double residual = element_distance(direct, replayed);
    const bool pass = residual <= ctx.cert_tol * scale && max_step_defect <= ctx.cert_tol;
    report["status"] = pass ? "ok" : "refuted";
    report["steps"] = static_cast<Index>(prog.steps.size());
    report["replay_residual"] = residual;
    report["max_step_defect"] = max_step_defect;
    if (!pass) exit_code = 1;
    if (!ctx.opts.out_path.empty()) {
        Json bundle = Json::object();
        Json elements = Json::array();
        for (const BimoduleElement& e : inst.elements) elements.push_back(element_to_json(e));
        bundle["elements"] = std::move(elements);
        bundle["coefficients"] = coefficients_to_json(inst.coefficients);
        bundle["program"] = program_to_json(prog);
        save_json_file(ctx.opts.out_path, bundle);
        report["bundle"] = ctx.opts.out_path;
    }
}

void handle_seg_replay(Context& ctx, Json& report, int& exit_code) {
    if (!ctx.input_doc.contains("program")) throw Error("seg-replay input needs a 'program' entry");
    const SegmentInstance inst = segment_instance_from(ctx.input_doc, false);
    const SegmentProgram prog = program_from_json(ctx.input_doc.at("program"));
    const BimoduleElement replayed = replay_program(inst.elements, prog);
    report["output"] = element_to_json(replayed);
    if (!inst.coefficients.coefficients.empty()) {
        const BimoduleElement direct = cstar_combination(inst.elements, inst.coefficients, ctx.tol);
        double scale = 1.0;
        for (const BimoduleElement& e : inst.elements) {
            for (const ComplexMatrix& p : e.parts) scale = std::max(scale, operator_norm(p));
        }
        const double residual = element_distance(direct, replayed);
        const bool pass = residual <= ctx.cert_tol * scale;
        report["residual"] = residual;
        report["status"] = pass ? "ok" : "refuted";
        if (!pass) exit_code = 1;
    } else {
        report["status"] = "ok";
        report["residual"] = nullptr;
    }
}

void handle_range_sample(Context& ctx, Json& report, int&) {
    const auto names = ctx.name_list("T");
    if (names.size() != 1) throw Error("range-sample needs exactly one matrix name");
    const ComplexMatrix t = ctx.matrix(names[0]);
    const Index n = ctx.opts.target_dim > 0 ? ctx.opts.target_dim : t.rows();
    const Index count = ctx.opts.count > 0 ? ctx.opts.count : 100;
    const auto samples = matrix_range_sample(t, n, ctx.opts.kraus, count, ctx.opts.seed);
    report["status"] = "ok";
    report["target_dim"] = n;
    report["kraus_count"] = ctx.opts.kraus;
    report["count"] = count;
    report["seed"] = ctx.opts.seed;
    Json arr = Json::array();
    for (const ComplexMatrix& s : samples) arr.push_back(matrix_to_json(s));
    report["samples"] = std::move(arr);
}

void handle_diag_blocks(Context& ctx, Json& report, int& exit_code) {
    const auto names = ctx.name_list("A");
    if (names.size() != 1) throw Error("diag-blocks needs exactly one matrix name");
    const ComplexMatrix a = ctx.matrix(names[0]);
    if (ctx.opts.blocks_m < 1) throw Error("diag-blocks needs --blocks-m");
    const Index m = ctx.opts.blocks_m;
    if (a.rows() % m != 0) throw Error("matrix size is not divisible by --blocks-m");
    const Index n = a.rows() / m;
    const DiagonalBlocksReport result = verify_diagonal_blocks(a, m, n, ctx.tol);
    const double scale = std::max(1.0, operator_norm(a));
    const bool pass = result.max_isometry_residual <= ctx.cert_tol &&
                      result.max_block_residual <= ctx.cert_tol * scale;
    report["status"] = pass ? "ok" : "refuted";
    report["blocks_m"] = m;
    report["blocks_n"] = n;
    report["max_isometry_residual"] = result.max_isometry_residual;
    report["max_block_residual"] = result.max_block_residual;
    Json gens = Json::array();
    for (const ComplexMatrix& g : result.generators) gens.push_back(matrix_to_json(g));
    report["generators"] = std::move(gens);
    if (!pass) exit_code = 1;
}

void handle_segment_demo(Context& ctx, Json& report, int& exit_code) {
    const Index samples = ctx.opts.count > 0 ? ctx.opts.count : 10000;
    const SegmentRankReport result = segment_rank_demo(samples, ctx.opts.seed);
    const bool pass = result.max_segment_rank <= 1 && result.swap_reaches_conjugate &&
                      result.average_rank == 2;
    report["status"] = pass ? "ok" : "refuted";
    report["sample_count"] = result.samples;
    report["seed"] = ctx.opts.seed;
    report["max_segment_rank"] = result.max_segment_rank;
    report["swap_reaches_conjugate"] = result.swap_reaches_conjugate;
    report["swap_value"] = matrix_to_json(result.swap_value);
    report["average_rank"] = result.average_rank;
    if (!pass) exit_code = 1;
}

struct Command {
    const char* name;
    const char* description;
    bool needs_input;
    Handler handler;
};

const Command kCommands[] = {
    {"factor", "factor A = C B through the majorization criterion", true, handle_factor},
    {"factor-isometric", "factor A = C B with a partial-isometry factor (needs A*A = B*B)", true,
     handle_factor_isometric},
    {"lambda", "smallest lambda with A*A <= lambda^2 B*B", true, handle_lambda},
    {"polar", "polar decomposition A = V (A*A)^(1/2)", true, handle_polar},
    {"ideal-contains", "left-ideal containment test", true, handle_ideal_contains},
    {"ideal-gen", "positive generator of a finitely generated left ideal", true, handle_ideal_gen},
    {"ideal-countable", "truncated generator of a countably generated left ideal", true,
     handle_ideal_countable},
    {"ideal-intersect", "check the three ideal-intersection subspaces coincide", true,
     handle_ideal_intersect},
    {"wo-closed", "spectral-gap test for closedness of a principal left ideal", true,
     handle_wo_closed},
    {"seq-dfp", "pointwise factorization f = h g of truncated sequences", true, handle_seq_dfp},
    {"seq-wpdp", "weak polar decomposition f = v |f| of a truncated sequence", true,
     handle_seq_wpdp},
    {"seq-reduce", "three-term to two-term convexity reduction for partitions of unity", true,
     handle_seq_reduce},
    {"seg-reduce", "compile an n-term C*-combination into two-term segment steps", true,
     handle_seg_reduce},
    {"seg-replay", "replay a segment program and compare with the direct combination", true,
     handle_seg_replay},
    {"range-sample", "sample the matrix range of an operator through random UCP maps", true,
     handle_range_sample},
    {"diag-blocks", "certify diagonal blocks of a normal matrix as C*-combinations", true,
     handle_diag_blocks},
    {"segment-demo", "rank obstruction showing C*-segments need not be convex", false,
     handle_segment_demo},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"opalg: operator factorization, left-ideal and C*-convexity toolkit"};
    app.require_subcommand(1);

    Options opts;
    std::string chosen;
    for (const Command& cmd : kCommands) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.description);
        sub->add_option("--input", opts.input, "input JSON file");
        sub->add_option("--names", opts.names, "comma list of entry names");
        sub->add_option("--tol", opts.tol, "tolerance scalar (overrides OPALG_TOL)");
        sub->add_option("--seed", opts.seed, "seed for sampling subcommands");
        sub->add_option("--depth", opts.depth, "number of terms for ideal-countable");
        sub->add_option("--out", opts.out_path, "path for output artifacts");
        sub->add_option("--format", opts.format, "report format (json)");
        sub->add_option("--target-dim", opts.target_dim, "matrix-range target dimension");
        sub->add_option("--kraus", opts.kraus, "number of Kraus blocks");
        sub->add_option("--count", opts.count, "number of samples");
        sub->add_option("--blocks-m", opts.blocks_m, "number of diagonal blocks");
        sub->callback([&chosen, name = std::string(cmd.name)] { chosen = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        Json report{{"command", args}, {"status", "error"}, {"error", e.what()}};
        out << dump_report(report);
        return 2;
    }

    Json report = Json::object();
    report["command"] = args;
    report["subcommand"] = chosen;
    int exit_code = 0;
    try {
        if (opts.format != "json") throw Error("only --format json is supported");

        Context ctx;
        ctx.opts = opts;
        double scalar = -1.0;
        if (const char* env = std::getenv("OPALG_TOL"); env != nullptr && *env != '\0') {
            try {
                scalar = std::stod(env);
            } catch (const std::exception&) {
                throw Error("OPALG_TOL is not a number");
            }
        }
        if (opts.tol >= 0.0) scalar = opts.tol;
        if (scalar >= 0.0) {
            ctx.tol.residual_rel = scalar;
            ctx.tol.psd_slack_rel = scalar;
            ctx.tail_tol = scalar;
            ctx.gap_tol = scalar;
        } else {
            ctx.tail_tol = kDefaultTailTol;
            ctx.gap_tol = kDefaultGapTol;
        }
        ctx.cert_tol = std::max(ctx.tol.residual_rel, 1e-8);
        report["tolerance"] = scalar >= 0.0 ? scalar : ctx.tol.residual_rel;

        const Command* command = nullptr;
        for (const Command& cmd : kCommands) {
            if (chosen == cmd.name) command = &cmd;
        }
        if (command == nullptr) throw Error("unknown subcommand");
        if (command->needs_input) {
            if (opts.input.empty()) throw Error("--input is required for this subcommand");
            ctx.input_doc = load_json_file(opts.input);
        }
        command->handler(ctx, report, exit_code);

        if (!opts.out_path.empty() && chosen != "seg-reduce") {
            std::ofstream copy(opts.out_path);
            if (!copy) throw Error("cannot open '" + opts.out_path + "' for writing");
            copy << dump_report(report);
        }
    } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = e.what();
        exit_code = 2;
    } catch (const std::exception& e) {
        report["status"] = "error";
        report["error"] = e.what();
        exit_code = 2;
    }
    out << dump_report(report);
    return exit_code;
}

}  // namespace opalg::cli
