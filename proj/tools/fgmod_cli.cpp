#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fgmod/fgmod.hpp"
#include "fgmod/report.hpp"

using namespace fgmod;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_nonstabilizing = 3;
constexpr int exit_unexpected = 4;

struct Options {
    std::string ring = "Z";
    std::string ideal;
    unsigned kmax = default_kmax;
    std::string format = "text";
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

class Runner {
public:
    explicit Runner(const Options& o) : o_(o), ring_(parse_ring(o.ring)) {}

    Presentation module(const std::string& text) const { return parse_module(ring_, text); }

    Ideal ideal() const {
        if (o_.ideal.empty()) throw Usage("this command needs --ideal");
        return parse_ideal(ring_, o_.ideal);
    }

    void print(const std::string& op, const Presentation& P) const { print_value(op, format_module(P)); }

    void print_value(const std::string& op, const std::string& value) const {
        if (o_.format == "json-lines") {
            nlohmann::json j;
            j["op"] = op;
            j["ring"] = ring_.to_string();
            j["result"] = value;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << value << '\n';
        }
    }

    const RingSpec& ring() const { return ring_; }
    unsigned kmax() const { return o_.kmax; }
    const std::string& format() const { return o_.format; }

private:
    const Options& o_;
    RingSpec ring_;
};

std::vector<verify::GridSpec> read_grids(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot open grid file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("grid document: ") + e.what());
    }
    std::vector<verify::GridSpec> grids;
    if (j.is_array())
        for (const auto& g : j) grids.push_back(verify::grid_from_json(g));
    else
        grids.push_back(verify::grid_from_json(j));
    return grids;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finitely generated modules over Z and Z/n: canonical forms, Hom, tensor, Ext, Tor, "
                 "a-torsion and a-completion functors, generalized local (co)homology, claim verification"};
    app.require_subcommand(1);
    app.footer(std::string("Module expressions:\n") + expression_grammar);

    Options o;
    app.add_option("--ring", o.ring, "Z or Z/<n>")->capture_default_str();
    app.add_option("--ideal", o.ideal, "comma-separated generators, e.g. 2 or 4,6");
    app.add_option("--kmax", o.kmax, "bound on a-adic chain length")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--format", o.format, "text or json-lines")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json-lines"}));

    std::string e1, e2, kind;
    std::size_t degree = 0;
    std::vector<std::string> operands;
    std::string claims, grid_file;
    unsigned jobs = 1;

    const auto one = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("module", e1, "module expression")->required();
        return s;
    };
    const auto two = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("first", e1, "module expression")->required();
        s->add_option("second", e2, "module expression")->required();
        return s;
    };
    const auto graded = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("i", degree, "degree")->required();
        s->add_option("first", e1, "module expression")->required();
        s->add_option("second", e2, "module expression")->required();
        return s;
    };

    auto* canon = one("canon", "canonical form");
    auto* hom = two("hom", "Hom(M, N)");
    auto* tensor = two("tensor", "M (x) N");
    auto* dual = one("dual", "Matlis dual");
    auto* ext = graded("ext", "Ext^i(M, N)");
    auto* tor = graded("tor", "Tor_i(M, N)");
    auto* gamma_cmd = one("gamma", "a-torsion functor, needs --ideal");
    auto* lambda_cmd = one("lambda", "a-adic completion, needs --ideal");
    auto* gammagen = two("gammagen", "Gamma_a(M, N), needs --ideal");
    auto* lambdagen = two("lambdagen", "Lambda_a(M, N), needs --ideal");
    auto* glc_cmd = graded("glc", "H^i_a(M, N), needs --ideal");
    auto* glh_cmd = graded("glh", "H_i^a(M, N), needs --ideal");

    auto* check = app.add_subcommand("check", "reduced <N> | coreduced <N> | reduced-wrt <M> <N> | coreduced-wrt <M> <N>");
    check->add_option("kind", kind)->required()->check(CLI::IsMember({"reduced", "coreduced", "reduced-wrt", "coreduced-wrt"}));
    check->add_option("modules", operands, "module expressions")->required();

    auto* verify_cmd = app.add_subcommand("verify", "evaluate registered claims over grids");
    verify_cmd->add_option("--claims", claims, "comma-separated claim ids (default: all)");
    verify_cmd->add_option("--grid", grid_file, "grid document (object or array of objects)");
    verify_cmd->add_option("--jobs", jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    verify_cmd->add_flag_callback("--list", [] {
        for (const auto& c : verify::claim_registry())
            std::cout << c.id << (c.expected_fail ? " (expected fail)" : "") << ": \"" << c.anchor << "\"\n";
        std::exit(0);
    }, "list registered claims");

    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << "\nModule expressions:\n" << expression_grammar << '\n';
        return exit_usage;
    }

    try {
        Runner r(o);
        if (*canon) r.print("canon", r.module(e1));
        else if (*hom) r.print("hom", hom_module(r.module(e1), r.module(e2)));
        else if (*tensor) r.print("tensor", tensor_module(r.module(e1), r.module(e2)));
        else if (*dual) r.print("dual", matlis_dual(r.module(e1)));
        else if (*ext) r.print("ext", fgmod::ext(degree, r.module(e1), r.module(e2)));
        else if (*tor) r.print("tor", fgmod::tor(degree, r.module(e1), r.module(e2)));
        else if (*gamma_cmd) r.print("gamma", gamma(r.module(e1), r.ideal(), r.kmax()).value);
        else if (*lambda_cmd) r.print("lambda", lambda(r.module(e1), r.ideal(), r.kmax()).value);
        else if (*gammagen) r.print("gammagen", gamma_gen(r.module(e1), r.module(e2), r.ideal(), r.kmax()));
        else if (*lambdagen) r.print("lambdagen", lambda_gen(r.module(e1), r.module(e2), r.ideal(), r.kmax()));
        else if (*glc_cmd) r.print("glc", glc(degree, r.module(e1), r.module(e2), r.ideal(), r.kmax()));
        else if (*glh_cmd) r.print("glh", glh(degree, r.module(e1), r.module(e2), r.ideal(), r.kmax()));
        else if (*check) {
            const bool pair = kind == "reduced-wrt" || kind == "coreduced-wrt";
            if (operands.size() != (pair ? 2u : 1u)) throw Usage("check " + kind + " takes " + (pair ? "two modules" : "one module"));
            const Ideal a = r.ideal();
            bool v = false;
            if (kind == "reduced") v = is_reduced(r.module(operands[0]), a);
            else if (kind == "coreduced") v = is_coreduced(r.module(operands[0]), a);
            else if (kind == "reduced-wrt") v = is_reduced_wrt(r.module(operands[0]), r.module(operands[1]), a);
            else v = is_coreduced_wrt(r.module(operands[0]), r.module(operands[1]), a);
            r.print_value("check " + kind, v ? "true" : "false");
        } else if (*verify_cmd) {
            const auto grids = grid_file.empty() ? verify::default_grids() : read_grids(grid_file);
            const auto ids = claims.empty() ? verify::all_claim_ids() : split_commas(claims);
            const auto summary = verify::run_suite(grids, ids, jobs);
            std::cout << (r.format() == "json-lines" ? verify::format_json_lines(summary) : verify::format_text(summary));
            return summary.ok() ? 0 : exit_unexpected;
        }
        return 0;
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonStabilizing) {
            std::cerr << e.what() << '\n';
            return exit_nonstabilizing;
        }
        std::cerr << "error: " << e.what() << '\n';
        if (e.code() == ErrorCode::ParseError) std::cerr << "\nModule expressions:\n" << expression_grammar << '\n';
        return exit_usage;
    }
}
