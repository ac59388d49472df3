// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error.
#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <sstream>

#include "polyprod/document.hpp"
#include "polyprod/hochster.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/space_models.hpp"
#include "polyprod/verify.hpp"

namespace {

using namespace polyprod;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;

ComplexDocument load(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return parse_document(text);
    }
    return read_document(path);
}

// Moves the ground of k order-preservingly onto {offset+1, ..., offset+n}.
SimplicialComplex relabel(const SimplicialComplex& k, int offset) {
    const auto labels = k.ground().labels();
    std::vector<std::uint64_t> faces;
    faces.reserve(k.face_count());
    for (std::uint64_t f : k.face_bits())
        faces.push_back(compress_bits(f, k.ground().bits()) << offset);
    return SimplicialComplex::from_faces(VertexSet::range(offset + 1, offset + static_cast<int>(labels.size())),
                                         std::move(faces));
}

void print_group(std::ostream& out, const GradedGroup& g, bool field_ranks, const std::string& indent = "") {
    if (g.is_zero())
        out << indent << "0\n";
    for (const auto& line : g.lines(field_ranks))
        out << indent << line << '\n';
}

IndexPair parse_pair(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos)
        throw InputError("pair '" + text + "' must look like \"sigma/omega\", e.g. \"1,2/3\"");
    const auto sigma = parse_label_list(text.substr(0, slash));
    const auto omega = parse_label_list(text.substr(slash + 1));
    return IndexPair(VertexSet::from_labels(sigma), VertexSet::from_labels(omega));
}

int cmd_dual(const std::string& path, const std::optional<std::string>& relative_to) {
    SimplicialComplex k = load(path).complex;
    VertexSet s = k.ground();
    if (relative_to) {
        const auto labels = parse_label_list(*relative_to);
        s = VertexSet::from_labels(labels);
        const VertexSet missing = k.support() - s;
        if (!missing.empty())
            throw InputError("vertex " + std::to_string(missing.min()) + " of the complex is not in --relative-to " +
                             s.to_string());
        k = SimplicialComplex::from_faces(s, std::vector<std::uint64_t>(k.face_bits().begin(), k.face_bits().end()));
    }
    std::cout << render_document(dual(k, s));
    return kExitOk;
}

int cmd_homology(const std::string& path, const std::string& coeff_text, bool cohomology) {
    const SimplicialComplex k = load(path).complex;
    const Coefficients coeff = Coefficients::parse(coeff_text);
    const GradedGroup g = cohomology ? reduced_cohomology(k, coeff) : reduced_homology(k, coeff);
    print_group(std::cout, g, coeff.is_field());
    return kExitOk;
}

int cmd_compose(const std::vector<std::string>& paths, const std::string& mode) {
    if (paths.empty())
        throw InputError("compose needs a K document");
    const SimplicialComplex k = load(paths.front()).complex;
    const std::size_t m = static_cast<std::size_t>(k.ground().size());
    const std::size_t per_block = mode == "general" ? 2 : 1;
    if (paths.size() - 1 != per_block * m)
        throw InputError("K has " + std::to_string(m) + " vertices, so compose --pairs " + mode + " expects " +
                         std::to_string(per_block * m) + " block documents, got " +
                         std::to_string(paths.size() - 1));

    std::vector<SimplicialPair> pairs;
    std::vector<int> blocks;
    int offset = 0;
    for (std::size_t b = 0; b < m; ++b) {
        const SimplicialComplex x = load(paths[1 + per_block * b]).complex;
        const int n = x.ground().size();
        if (n == 0)
            throw InputError("block " + std::to_string(b + 1) + " has an empty ground");
        if (per_block == 2) {
            const SimplicialComplex a = load(paths[2 + per_block * b]).complex;
            if (a.ground() != x.ground())
                throw InputError("block " + std::to_string(b + 1) + ": X and A documents have different grounds");
            pairs.emplace_back(relabel(x, offset), relabel(a, offset));
        } else {
            pairs.push_back(composition_pairs(std::vector<SimplicialComplex>{relabel(x, offset)}).front());
        }
        blocks.push_back(n);
        offset += n;
    }
    ComplexDocument doc{polyhedral_complex(k, pairs), blocks};
    if (m == 0)
        doc.blocks.clear();
    std::cout << render_document(doc);
    return kExitOk;
}

int cmd_hochster(const std::string& path, const std::string& mode, const std::vector<std::string>& pair_texts,
                 const std::string& coeff_text) {
    const SimplicialComplex k = load(path).complex;
    const Coefficients coeff = Coefficients::parse(coeff_text);
    std::optional<std::vector<IndexPair>> pairs;
    if (mode == "list") {
        if (pair_texts.empty())
            throw InputError("--pairs list needs at least one --pair \"sigma/omega\"");
        pairs.emplace();
        for (const auto& t : pair_texts) {
            const IndexPair p = parse_pair(t);
            if (!(p.sigma | p.omega).subset_of(k.ground()))
                throw InputError("pair " + t + " is not inside the ground " + k.ground().to_string());
            pairs->push_back(p);
        }
    } else if (!pair_texts.empty()) {
        throw InputError("--pair is only meaningful with --pairs list");
    }
    const BigradedTable table = hochster_table(k, coeff, pairs);
    for (std::size_t i = 0; i < table.size(); ++i) {
        const IndexPair& p = table.pairs()[i];
        for (const auto& [deg, g] : table.groups()[i])
            std::cout << "sigma=" << p.sigma.to_string() << " omega=" << p.omega.to_string() << " d" << deg << ": "
                      << g.to_string(coeff.is_field()) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, const VerifyOptions& options) {
    const VerifyOutcome outcome = run_suite(suite, options, std::cout);
    return outcome.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_moment_angle(const std::string& path, const std::string& params) {
    const SimplicialComplex k = load(path).complex;
    const SpherePairSystem sys = SpherePairSystem::parse(params);
    const SpaceHomologyReport r = sphere_pair_homology(k, sys);
    auto section = [](const char* name, const GradedGroup& g) {
        std::cout << name << ":\n";
        print_group(std::cout, g, false, "  ");
    };
    section("hat", r.hat);
    section("bar", r.bar);
    section("total", r.total);
    section("relative_hat", r.relative_hat);
    section("relative_bar", r.relative_bar);
    std::cout << "ledger:\n";
    for (const auto& e : r.ledger)
        std::cout << "  " << part_name(e.part) << " sigma=" << e.pair.sigma.to_string()
                  << " omega=" << e.pair.omega.to_string() << " shift=" << e.shift << " source=d" << e.source_degree
                  << " d" << e.degree << ": " << e.group.to_string() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on simplicial complexes and polyhedral products"};
    app.require_subcommand(1);

    std::string input;
    auto* dual_cmd = app.add_subcommand("dual", "Dual complex relative to the ground (or --relative-to)");
    std::optional<std::string> relative_to;
    dual_cmd->add_option("input", input, "Complex document, or - for stdin")->required();
    dual_cmd->add_option("--relative-to", relative_to, "Vertex list S, e.g. 1,2,3");

    auto* hom_cmd = app.add_subcommand("homology", "Reduced homology (or cohomology) table");
    std::string coeff = "z";
    bool cohomology = false;
    hom_cmd->add_option("input", input, "Complex document, or - for stdin")->required();
    hom_cmd->add_option("--coeff", coeff, "z, q or p:<prime>");
    hom_cmd->add_flag("--cohomology", cohomology, "Reduced cohomology instead");

    auto* comp_cmd = app.add_subcommand("compose", "Polyhedral product complex of K with block documents");
    std::vector<std::string> comp_inputs;
    std::string comp_mode = "delta";
    comp_cmd->add_option("inputs", comp_inputs, "K, then L_1..L_m (delta) or X_1 A_1 .. X_m A_m (general)")
        ->required();
    comp_cmd->add_option("--pairs", comp_mode, "general or delta")->check(CLI::IsMember({"general", "delta"}));

    auto* hoch_cmd = app.add_subcommand("hochster", "Bigraded table of full-subcomplex link homology");
    std::string hoch_mode = "all";
    std::vector<std::string> hoch_pairs;
    hoch_cmd->add_option("input", input, "Complex document, or - for stdin")->required();
    hoch_cmd->add_option("--pairs", hoch_mode, "all or list")->check(CLI::IsMember({"all", "list"}));
    hoch_cmd->add_option("--pair", hoch_pairs, "sigma/omega for --pairs list, e.g. \"1/2,3\"");
    hoch_cmd->add_option("--coeff", coeff, "z, q or p:<prime>");

    auto* ver_cmd = app.add_subcommand("verify", "Randomized identity suite");
    std::string suite;
    VerifyOptions vopts;
    std::string suite_help = "One of:";
    for (const auto& n : suite_names())
        suite_help += " " + n;
    ver_cmd->add_option("suite", suite, suite_help)->required();
    ver_cmd->add_option("--max-vertices", vopts.max_vertices, "Largest ground per instance");
    ver_cmd->add_option("--trials", vopts.trials, "Number of trials");
    ver_cmd->add_option("--seed", vopts.seed, "Seed of the first trial");

    auto* ma_cmd = app.add_subcommand("moment-angle", "Homology of a sphere-pair polyhedral product");
    std::string sphere_params;
    ma_cmd->add_option("input", input, "Complex document, or - for stdin")->required();
    ma_cmd->add_option("--pairs", sphere_params, "r1:q1,r2:q2,... one per vertex")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*dual_cmd)
            return cmd_dual(input, relative_to);
        if (*hom_cmd)
            return cmd_homology(input, coeff, cohomology);
        if (*comp_cmd)
            return cmd_compose(comp_inputs, comp_mode);
        if (*hoch_cmd)
            return cmd_hochster(input, hoch_mode, hoch_pairs, coeff);
        if (*ver_cmd)
            return cmd_verify(suite, vopts);
        if (*ma_cmd)
            return cmd_moment_angle(input, sphere_params);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const OutOfScopeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitOk;
}
