#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dickson/qexpr.hpp"
#include "dickson/report.hpp"

namespace {

using namespace dickson;

void write_out(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << "\n";
        return;
    }
    std::ofstream file(out);
    if (!file)
        throw std::runtime_error("cannot open output file: " + out);
    file << text;
}

nlohmann::json command_json(const char* command) {
    return {{"schema", kSchemaVersion}, {"version", kToolVersion}, {"command", command}};
}

int cmd_gen(uint32_t p, uint32_t n, const std::string& format, const std::string& out) {
    PrimeField f(p);
    FramePtr frame = DicksonFrame::build(f, n);

    if (format == "json") {
        nlohmann::json j = command_json("gen");
        j["p"] = p;
        j["n"] = n;
        j["L"] = frame->L().term_form();
        nlohmann::json lhat = nlohmann::json::array(), q = nlohmann::json::array(),
                       w = nlohmann::json::array();
        for (size_t s = 0; s < n; ++s) {
            lhat.push_back(frame->L_hat(s).term_form());
            q.push_back(frame->Q(s).term_form());
            w.push_back(frame->weight(s));
        }
        j["L_hat"] = lhat;
        j["Q"] = q;
        j["weights"] = w;
        write_out(j.dump(2), out);
        return 0;
    }

    std::ostringstream os;
    os << "Dickson frame p=" << p << " n=" << n << "\n";
    os << "L   = " << frame->L().str_x() << "  (degree " << frame->L().degree() << ")\n";
    for (size_t s = 0; s < n; ++s)
        os << "L_" << s << " = " << frame->L_hat(s).str_x() << "  (degree "
           << frame->L_hat(s).degree() << ")\n";
    for (size_t s = 0; s < n; ++s)
        os << "Q" << s << "  = " << frame->Q(s).str_x() << "  (degree " << frame->weight(s)
           << ")\n";
    write_out(os.str(), out);
    return 0;
}

int cmd_st(uint32_t p, uint32_t n, uint32_t i, const std::string& expr,
           const std::string& format, const std::string& out) {
    PrimeField f(p);
    FramePtr frame = DicksonFrame::build(f, n);
    DicksonPoly g = parse_q_expression(frame, expr);
    Poly image = st_delta(frame->expand(g), i);
    std::optional<DicksonPoly> back = frame->express(image);

    if (format == "json") {
        nlohmann::json j = command_json("st");
        j["p"] = p;
        j["n"] = n;
        j["i"] = i;
        j["input"] = g.str();
        j["x"] = image.term_form();
        if (back)
            j["q"] = back->str();
        write_out(j.dump(2), out);
        return 0;
    }

    std::ostringstream os;
    os << "St_" << i << "(" << g.str() << ") over p=" << p << " n=" << n << "\n";
    os << "x: " << image.str_x() << "\n";
    if (back)
        os << "Q: " << back->str() << "\n";
    else
        os << "Q: (not in the Dickson subalgebra)\n";
    write_out(os.str(), out);
    return 0;
}

int cmd_extract(uint32_t p, uint32_t n, uint32_t i, const std::string& format,
                const std::string& out) {
    PrimeField f(p);
    FramePtr frame = DicksonFrame::build(f, n);
    SumCoefficients sc = SumCoefficients::extract(frame, i);

    auto pair = [&](const DicksonPoly& v) {
        return nlohmann::json{{"q", v.str()}, {"x", frame->expand(v).term_form()}};
    };

    if (format == "json") {
        nlohmann::json j = command_json("extract");
        j["p"] = p;
        j["n"] = n;
        j["i"] = i;
        nlohmann::json a = nlohmann::json::array(), pr = nlohmann::json::array();
        for (size_t s = 0; s < n; ++s) {
            a.push_back(pair(sc.A[s]));
            pr.push_back(pair(sc.Proot[s]));
        }
        j["coefficients"] = {{"A", a}, {"B", pair(sc.B)}, {"P", pr}, {"R", pair(sc.Rroot)}};
        write_out(j.dump(2), out);
        return 0;
    }

    std::ostringstream os;
    os << "St(Q_s) = (-1)^n Q0 (A_s + B Q_s) at p=" << p << " n=" << n << " i=" << i << "\n";
    for (size_t s = 0; s < n; ++s)
        os << "A" << s << " = " << sc.A[s].str() << "\n";
    os << "B  = " << sc.B.str() << "\n";
    for (size_t s = 0; s < n; ++s)
        os << "P" << s << " = " << sc.Proot[s].str() << "  (P" << s << "^" << p << " = A" << s
           << ")\n";
    os << "R  = " << sc.Rroot.str() << "  (R^" << p << " = B)\n";
    write_out(os.str(), out);
    return 0;
}

int cmd_verify(const RunConfig& config) {
    Report report = run_grid(config);
    if (config.format == "json")
        write_out(report.to_json().dump(2), config.out);
    else
        write_out(report.to_text(), config.out);
    return report.passed() ? 0 : 1;
}

int emit_koszul(nlohmann::json entry, const std::string& format, const std::string& out) {
    std::string status = koszul_entry_status(entry);
    if (format == "json") {
        nlohmann::json j = command_json("koszul");
        j["koszul"] = nlohmann::json::array({entry});
        j["status"] = status;
        write_out(j.dump(2), out);
    } else {
        write_out(koszul_entry_text(entry), out);
    }
    return status == "fail" ? 1 : 0;
}

// One polynomial per line in term form ("c:e1,...,ek + ..."), arity taken
// from the first line; blank lines and '#' comments are skipped.
KoszulInstance load_custom_instance(const PrimeField& f, const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open coefficient file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(file, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        lines.push_back(line);
    }
    if (lines.empty())
        throw std::runtime_error("coefficient file is empty: " + path);

    size_t colon = lines[0].find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("first coefficient must spell out its exponents");
    size_t end = lines[0].find('+', colon);
    std::string head = lines[0].substr(colon, end == std::string::npos ? std::string::npos
                                                                       : end - colon);
    size_t k = 1 + static_cast<size_t>(std::count(head.begin(), head.end(), ','));

    std::vector<Poly> c;
    for (const auto& text : lines)
        c.push_back(Poly::parse_term_form(f, k, text));
    AbstractRing ring(f, default_var_names("R", k, 0), std::vector<uint64_t>(k, 1));
    return KoszulInstance(std::move(ring), std::move(c));
}

uint64_t default_bound(const KoszulInstance& inst) {
    uint64_t maxdeg = 1;
    for (uint64_t d : inst.c_degrees)
        maxdeg = std::max(maxdeg, d);
    return 3 * maxdeg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dickson invariants, primitive operations and Koszul checks"};
    app.require_subcommand(1);

    uint32_t p = 2, n = 1, i = 1, j = 1;
    uint32_t max_m = 0;
    uint64_t D = 0;
    uint64_t budget_terms = Budget{}.max_dense_terms;
    std::vector<uint64_t> seeds;
    std::string format = "text", out, expr, file;
    std::vector<uint64_t> dump;
    bool p_set = false, n_set = false, i_set = false;

    auto add_common = [&](CLI::App* cmd, bool with_i) {
        cmd->add_option("-p", p, "field characteristic (prime)")->required();
        cmd->add_option("-n", n, "number of variables")->required();
        if (with_i)
            cmd->add_option("-i", i, "index of the primitive operation (>= 1)")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out, "write the report to FILE");
    };

    auto* gen = app.add_subcommand("gen", "construct the Dickson frame");
    add_common(gen, false);

    auto* st = app.add_subcommand("st", "apply the primitive operation to an expression");
    add_common(st, true);
    st->add_option("expr", expr, "polynomial in Q0..Q{n-1}")->required();

    auto* extract = app.add_subcommand("extract", "structural coefficients A_s, B and roots");
    add_common(extract, true);

    auto* verify = app.add_subcommand("verify", "run the verification grid");
    verify->add_option("-p", p, "restrict the grid to this characteristic");
    verify->add_option("-n", n, "restrict the grid to this rank");
    verify->add_option("-i", i, "restrict the grid to this operation index");
    verify->add_option("-m,--max-m", max_m, "iterate bound (default p + 1 per cell, <= 12)");
    verify->add_option("-D,--max-degree", D, "Koszul degree bound");
    verify->add_option("--seeds", seeds, "seeds for the sampled families");
    verify->add_option("--budget", budget_terms, "dense monomial budget");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out, "write the report to FILE");

    auto* koszul = app.add_subcommand("koszul", "graded Koszul homology");
    koszul->require_subcommand(1);
    auto* tuan = koszul->add_subcommand("tuan", "powers of distinct degree-1 variables");
    tuan->add_option("-p", p, "field characteristic (prime)")->required();
    tuan->add_option("-n", n, "number of y variables")->required();
    tuan->add_option("-j", j, "coefficients are y_s^(p^j)");
    tuan->add_option("-D,--max-degree", D, "degree bound (default 3 p^j)");
    tuan->add_option("--dump", dump, "write the boundary matrix at (q, d) in triplet form")
        ->expected(2);
    tuan->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    tuan->add_option("--out", out, "write the report to FILE");

    auto* dickson_sub = koszul->add_subcommand("dickson", "coefficients A_s in ratio variables");
    dickson_sub->add_option("-p", p, "field characteristic (prime)")->required();
    dickson_sub->add_option("-n", n, "number of variables")->required();
    dickson_sub->add_option("-i", i, "index of the primitive operation")->required();
    dickson_sub->add_option("-D,--max-degree", D, "degree bound");
    dickson_sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    dickson_sub->add_option("--out", out, "write the report to FILE");

    auto* custom = koszul->add_subcommand("custom", "coefficients from a file");
    custom->add_option("-p", p, "field characteristic (prime)")->required();
    custom->add_option("--file", file, "one polynomial per line, term form")->required();
    custom->add_option("-D,--max-degree", D, "degree bound");
    custom->add_option("--dump", dump, "write the boundary matrix at (q, d) in triplet form")
        ->expected(2);
    custom->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    custom->add_option("--out", out, "write the report to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(p, n, format, out);
        if (st->parsed())
            return cmd_st(p, n, i, expr, format, out);
        if (extract->parsed())
            return cmd_extract(p, n, i, format, out);
        if (verify->parsed()) {
            p_set = verify->count("-p") > 0;
            n_set = verify->count("-n") > 0;
            i_set = verify->count("-i") > 0;
            RunConfig config;
            config.grid = RunConfig::default_grid();
            if (p_set && n_set && i_set) {
                config.grid = {{p, n, i}};
            } else if (p_set || n_set || i_set) {
                std::erase_if(config.grid, [&](const GridCell& c) {
                    return (p_set && c.p != p) || (n_set && c.n != n) || (i_set && c.i != i);
                });
                if (config.grid.empty())
                    throw std::invalid_argument(
                        "the requested restriction matches no cell of the default grid; "
                        "give -p, -n and -i together to run an explicit cell");
            }
            config.max_m = max_m;
            if (!seeds.empty())
                config.seeds = seeds;
            config.koszul_D = D;
            config.format = format;
            config.out = out;
            config.max_dense_terms = budget_terms;
            return cmd_verify(config);
        }
        if (tuan->parsed()) {
            PrimeField f(p);
            uint64_t bound = D ? D : 3 * checked_pow(p, j);
            nlohmann::json entry = tuan_entry(p, n, j, bound, Budget{});
            int code = emit_koszul(std::move(entry), format, out);
            if (!dump.empty()) {
                KoszulInstance inst = tuan_instance(f, n, j);
                std::cout << dump_boundary_matrix(inst, static_cast<uint32_t>(dump[0]),
                                                  dump[1]);
            }
            return code;
        }
        if (dickson_sub->parsed()) {
            RunConfig config;
            config.koszul_D = D;
            nlohmann::json entry = run_cell_koszul({p, n, i}, config);
            if (entry.contains("error"))
                throw Falsification("extraction", entry.at("error").get<std::string>());
            return emit_koszul(std::move(entry), format, out);
        }
        if (custom->parsed()) {
            PrimeField f(p);
            KoszulInstance inst = load_custom_instance(f, file);
            uint64_t bound = D ? D : default_bound(inst);
            int code = emit_koszul(custom_entry(inst, bound, Budget{}), format, out);
            if (!dump.empty())
                std::cout << dump_boundary_matrix(inst, static_cast<uint32_t>(dump[0]),
                                                  dump[1]);
            return code;
        }
    } catch (const Falsification& e) {
        std::cerr << "falsification: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "resource: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
