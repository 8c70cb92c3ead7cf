#include <cstdint>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include "CLI11.hpp"

#include "eqlines/errors.hpp"
#include "eqlines/json_io.hpp"

using namespace eqlines;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

bool parse_generator_name(const std::string& spec, std::string& kind, unsigned& arg) {
    static const std::regex re("^(fourier|sylvester):([0-9]{1,6})$");
    std::smatch m;
    if (!std::regex_match(spec, m, re)) return false;
    kind = m[1];
    arg = static_cast<unsigned>(std::stoul(m[2]));
    return true;
}

// --matrix accepts a generator name ("fourier:n" | "sylvester:k") or a path
// to a matrix JSON document. Without an explicit --backend the document's
// own backend is kept (generators are exact).
Matrix load_plain_matrix(const std::string& spec, std::optional<Backend> requested) {
    std::string kind;
    unsigned arg = 0;
    Matrix m = [&] {
        if (parse_generator_name(spec, kind, arg))
            return kind == "fourier" ? fourier(arg).body : sylvester(arg).body;
        return matrix_from_json(parse_json_text(read_text_file(spec)));
    }();
    if (requested && *requested != m.backend()) {
        if (*requested == Backend::exact)
            throw BackendError("a float document cannot be promoted to the exact backend");
        m = m.to_backend(*requested);
    }
    return m;
}

HadamardMatrix load_hadamard(const std::string& spec, std::optional<Backend> requested, double tol) {
    return certify_hadamard(load_plain_matrix(spec, requested), tol);
}

std::vector<Cyclotomic> parse_expect_list(const std::string& text) {
    std::vector<Cyclotomic> out;
    std::size_t start = 0;
    if (text.empty()) return out;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        out.push_back(parse_exact_scalar(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int check_expectation(const SolutionSet& sols, const std::string& expect_text) {
    std::vector<Cyclotomic> expected = parse_expect_list(expect_text);
    bool ok = sols.values.size() == expected.size();
    if (ok) {
        std::vector<bool> used(expected.size(), false);
        for (const auto& sol : sols.values) {
            bool matched = false;
            for (std::size_t k = 0; k < expected.size() && !matched; ++k) {
                if (!used[k] && sol.v && *sol.v == expected[k]) used[k] = matched = true;
            }
            if (!matched) {
                ok = false;
                break;
            }
        }
    }
    if (!ok) {
        std::cerr << "expectation failed: got " << sols.values.size() << " solution(s)\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equiangular line sets from complex Hadamard matrices, in exact arithmetic"};
    app.require_subcommand(1);

    std::string matrix_spec, lines_path, v_text, out_path, scale_text = "1";
    std::string backend_text = "exact";
    std::string expect_text;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    unsigned max_order = 360;
    app.add_option("--max-order", max_order, "maximum cyclotomic order (default 360)");

    std::vector<CLI::Option*> backend_opts;
    auto add_backend = [&](CLI::App* cmd) {
        backend_opts.push_back(
            cmd->add_option("--backend", backend_text, "exact|float (default: keep the input's)")
                ->check(CLI::IsMember({"exact", "float"})));
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "write output to a file"); };
    auto add_tol = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "float-backend tolerance (default 1e-10)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* gen = app.add_subcommand("gen", "write a named matrix as JSON");
    gen->add_option("--matrix", matrix_spec, "fourier:n | sylvester:k")->required();
    CLI::Option* gen_seed = gen->add_option("--seed", seed, "apply a seeded random equivalence");
    add_backend(gen);
    add_out(gen);

    CLI::App* construct = app.add_subcommand("construct", "build the d^2 vectors of H(v)");
    construct->add_option("--matrix", matrix_spec, "generator name or matrix JSON path")->required();
    construct->add_option("--v", v_text, "scalar expression for v")->required();
    add_backend(construct);
    add_tol(construct);
    add_out(construct);

    CLI::App* verify = app.add_subcommand("verify", "check a line-set document for equiangularity");
    verify->add_option("--lines", lines_path, "line-set JSON path")->required();
    add_tol(verify);
    add_out(verify);

    CLI::App* solve = app.add_subcommand("solve", "all admissible v for a Butson-type matrix");
    solve->add_option("--matrix", matrix_spec, "generator name or matrix JSON path")->required();
    CLI::Option* expect_opt =
        solve->add_option("--expect", expect_text, "comma-separated exact values the set must equal");
    add_out(solve);

    CLI::App* realeq = app.add_subcommand("real-equiv", "decide equivalence to a real Hadamard matrix");
    realeq->add_option("--matrix", matrix_spec, "generator name or matrix JSON path")->required();
    add_backend(realeq);
    add_tol(realeq);
    add_out(realeq);

    CLI::App* museum = app.add_subcommand("mu-set", "the equivalence-invariant entry-ratio set");
    museum->add_option("--matrix", matrix_spec, "generator name or matrix JSON path")->required();
    add_backend(museum);
    add_tol(museum);
    add_out(museum);

    CLI::App* gram = app.add_subcommand("gram", "Gram matrix of a line-set document");
    gram->add_option("--lines", lines_path, "line-set JSON path")->required();
    add_out(gram);

    CLI::App* unitary = app.add_subcommand("check-unitary", "verify M * M^dagger = c * I");
    unitary->add_option("--matrix", matrix_spec, "generator name or matrix JSON path")->required();
    unitary->add_option("--scale", scale_text, "the constant c (default 1)");
    add_backend(unitary);
    add_tol(unitary);
    add_out(unitary);

    CLI::App* table = app.add_subcommand("theorem-table", "solve the default matrix battery");
    add_out(table);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_max_cyclotomic_order(max_order);
        std::optional<Backend> backend;
        for (const CLI::Option* opt : backend_opts) {
            if (opt->count() > 0) backend = backend_from_name(backend_text);
        }

        if (gen->parsed()) {
            std::string kind;
            unsigned arg = 0;
            if (!parse_generator_name(matrix_spec, kind, arg))
                throw FormatError("gen expects a generator name, e.g. fourier:3");
            HadamardMatrix h = kind == "fourier" ? fourier(arg) : sylvester(arg);
            if (gen_seed->count() > 0) h = apply_equivalence(h, random_equivalence_witness(h.order, seed));
            Matrix body = backend == Backend::floating ? h.body.to_backend(*backend) : h.body;
            emit(out_path, dump_json(matrix_to_json(body)));
            return 0;
        }
        if (construct->parsed()) {
            HadamardMatrix h = load_hadamard(matrix_spec, backend, tol);
            Scalar v = parse_scalar(v_text, h.body.backend());
            emit(out_path, dump_json(lineset_to_json(construct_hv(h, v))));
            return 0;
        }
        if (verify->parsed()) {
            LineSet lines = lineset_from_json(parse_json_text(read_text_file(lines_path)));
            EquiangularityReport report = verify_equiangular(lines, tol);
            emit(out_path, dump_json(report_to_json(report)));
            return report.verdict ? 0 : 1;
        }
        if (solve->parsed()) {
            HadamardMatrix h = load_hadamard(matrix_spec, Backend::exact, tol);
            SolutionSet sols = solve_v(h);
            emit(out_path, dump_json(solution_set_to_json(sols)));
            if (expect_opt->count() > 0) return check_expectation(sols, expect_text);
            return 0;
        }
        if (realeq->parsed()) {
            HadamardMatrix h = load_hadamard(matrix_spec, backend, tol);
            auto result = real_equivalence(h, tol);
            ordered_json j;
            j["present"] = result.has_value();
            if (result) {
                j["matrix"] = matrix_to_json(result->matrix.body);
                j["witness"] = witness_to_json(result->witness);
            }
            emit(out_path, dump_json(j));
            return 0;
        }
        if (museum->parsed()) {
            HadamardMatrix h = load_hadamard(matrix_spec, backend, tol);
            emit(out_path, dump_json(mu_set_to_json(mu_set(h, tol))));
            return 0;
        }
        if (gram->parsed()) {
            LineSet lines = lineset_from_json(parse_json_text(read_text_file(lines_path)));
            const std::size_t n = lines.vectors.size();
            if (n == 0) throw FormatError("line-set document holds no vectors");
            Matrix g = Matrix::filled(n, n, Scalar::zero(lines.backend));
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    g.at(p, q) = inner_product(lines.vectors[p].vec, lines.vectors[q].vec);
            emit(out_path, dump_json(matrix_to_json(g)));
            return 0;
        }
        if (unitary->parsed()) {
            Matrix m = load_plain_matrix(matrix_spec, backend);
            if (m.rows() != m.cols()) throw DimensionError("check-unitary requires a square matrix");
            Scalar c = parse_scalar(scale_text, m.backend());
            const bool holds = is_scaled_identity(mat_mul(m, conj_transpose(m)), c, tol);
            ordered_json j;
            j["holds"] = holds;
            j["scale"] = c.to_string();
            emit(out_path, dump_json(j));
            return holds ? 0 : 1;
        }
        if (table->parsed()) {
            emit(out_path, format_theorem_table(theorem_table(default_battery())));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
