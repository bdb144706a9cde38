#include "hyperspec/cli.hpp"

#include "hyperspec/constructions.hpp"
#include "hyperspec/cospectral.hpp"
#include "hyperspec/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace hyperspec {

namespace {

double env_tol() {
    if (const char* s = std::getenv("HYPERSPEC_TOL")) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used == std::string(s).size())
                return v;
        } catch (const std::exception&) {
        }
        throw std::runtime_error("HYPERSPEC_TOL is set but is not a number");
    }
    return -1.0;
}

Hypergraph make_named(const std::string& name, int n, int k) {
    if (name == "fig3")
        return fig3();
    if (name == "fig2a")
        return fig2a();
    if (name == "complete") {
        if (n < 2 || k < 2)
            throw std::runtime_error("generator 'complete' requires --n and --k");
        return complete_hypergraph(n, k);
    }
    throw std::runtime_error("unknown generator '" + name +
                             "' (expected complete, fig3 or fig2a)");
}

struct InputSpec {
    std::string file;
    std::string gen;
    int n = 0;
    int k = 0;

    Hypergraph load(std::istream& in, const char* what) const {
        if (!gen.empty())
            return make_named(gen, n, k);
        if (file.empty())
            throw std::runtime_error(std::string(what) +
                                     ": provide --input FILE or --gen NAME");
        if (file == "-")
            return read_hypergraph(in);
        return read_hypergraph_file(file);
    }

    std::string label() const {
        if (!gen.empty())
            return gen == "complete" ? "complete(" + std::to_string(n) + "," +
                                           std::to_string(k) + ")"
                                     : gen;
        return file;
    }
};

void write_output(const std::string& path, std::ostream& out,
                  const Hypergraph& h, const VertexLayout& layout) {
    if (path == "-") {
        write_hypergraph(out, h, layout);
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_hypergraph(f, h, layout);
}

void print_json(std::ostream& out, const Json& j) {
    out << j.dump(2) << "\n";
}

Json catalog_json(const CospectralCatalog& cat) {
    Json j;
    j["n"] = cat.n;
    j["k"] = cat.k;
    j["r"] = cat.r;
    j["member_count"] = cat.members.size();
    Json classes = Json::array();
    for (const auto& c : cat.classes)
        classes.push_back({{"charpoly", charpoly_json(c.poly)},
                           {"members", c.members}});
    j["classes"] = std::move(classes);
    Json pairs = Json::array();
    for (const auto& p : cat.pairs) {
        Json pj{{"first", p.first},
                {"second", p.second},
                {"isomorphic", p.isomorphic},
                {"products_verified", p.products_verified}};
        if (p.isomorphic)
            pj["witness"] = p.witness;
        pairs.push_back(std::move(pj));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

int run_parsed(CLI::App& app, std::istream& in, std::ostream& out) {
    // ---- gen ----
    if (auto* cmd = app.get_subcommand("gen"); cmd->parsed()) {
        std::string kind = cmd->get_option("kind")->as<std::string>();
        int n = cmd->get_option("--n")->as<int>();
        int k = cmd->get_option("--k")->as<int>();
        std::string output = cmd->get_option("--output")->as<std::string>();
        write_output(output, out, make_named(kind, n, k), {});
        return 0;
    }

    // ---- construct ----
    if (auto* cmd = app.get_subcommand("construct"); cmd->parsed()) {
        std::string op = cmd->get_option("op")->as<std::string>();
        InputSpec spec{cmd->get_option("--input")->as<std::string>(),
                       cmd->get_option("--gen")->as<std::string>(),
                       cmd->get_option("--n")->as<int>(),
                       cmd->get_option("--k")->as<int>()};
        int m = cmd->get_option("--m")->as<int>();
        std::string output = cmd->get_option("--output")->as<std::string>();
        Hypergraph h = spec.load(in, "construct");
        if (op == "ns") {
            write_output(output, out, ns_m(h, m), nsm_layout(h.n, m));
        } else if (op == "nns") {
            VertexLayout layout{{"originals", 0, h.n}, {"split", h.n, 2 * h.n}};
            write_output(output, out, nns(h), layout);
        } else if (op == "vjoin" || op == "sjoin") {
            InputSpec spec2{cmd->get_option("--second")->as<std::string>(),
                            cmd->get_option("--gen2")->as<std::string>(),
                            cmd->get_option("--n2")->as<int>(),
                            cmd->get_option("--k")->as<int>()};
            Hypergraph h2 = (spec2.file.empty() && spec2.gen.empty())
                                ? complete_hypergraph(h.k, h.k)
                                : spec2.load(in, "construct");
            Hypergraph joined = op == "vjoin" ? v_join(h, h2) : s_join(h, h2);
            write_output(output, out, joined, join_layout(h.n, h2.n));
        } else {
            throw std::runtime_error("unknown construction '" + op +
                                     "' (expected ns, nns, vjoin or sjoin)");
        }
        return 0;
    }

    // ---- spectrum / energy / invariants ----
    for (const char* name : {"spectrum", "energy", "invariants"}) {
        auto* cmd = app.get_subcommand(name);
        if (!cmd->parsed())
            continue;
        std::string file = cmd->get_option("file")->as<std::string>();
        bool json = cmd->get_option("--json")->as<bool>();
        double tol = cmd->get_option("--tol")->as<double>();
        bool exact = cmd->get_option_no_throw("--exact") &&
                     cmd->get_option("--exact")->as<bool>();
        Hypergraph h = file == "-" ? read_hypergraph(in) : read_hypergraph_file(file);
        IntMatrix a = adjacency_matrix(h);
        Spectrum s = eigenvalues(a);
        double cluster_eps = tol > 0 ? tol : -1.0;
        CharPoly cp;
        bool have_cp = false;
        if (exact || std::string(name) == "invariants") {
            cp = char_poly(a);
            have_cp = true;
        }
        if (std::string(name) == "spectrum") {
            if (json)
                print_json(out, spectrum_json(s, have_cp ? &cp : nullptr,
                                              "eigensolver", cluster_eps));
            else
                out << spectrum_text(s, have_cp ? &cp : nullptr, cluster_eps);
        } else if (std::string(name) == "energy") {
            double bound = s.order() * s.max_residual;
            if (json)
                print_json(out, Json{{"energy", s.energy}, {"energy_bound", bound}});
            else
                out << "energy: " << format_double(s.energy) << " +/- "
                    << format_double(bound) << "\n";
        } else {
            DegreeProfile prof = degree_profile(h);
            if (json) {
                Json j{{"n", h.n},
                       {"k", h.k},
                       {"edges", h.edges.size()},
                       {"degrees", prof.degrees},
                       {"energy", s.energy},
                       {"spectral_radius", s.spectral_radius},
                       {"nullity", s.nullity},
                       {"det", s.det->str()},
                       {"charpoly", charpoly_json(cp)}};
                if (prof.regular_degree)
                    j["regular_degree"] = *prof.regular_degree;
                print_json(out, j);
            } else {
                out << "n: " << h.n << "\nk: " << h.k
                    << "\nedges: " << h.edges.size() << "\n";
                if (prof.regular_degree)
                    out << "regular_degree: " << *prof.regular_degree << "\n";
                out << "energy: " << format_double(s.energy) << "\n"
                    << "spectral_radius: " << format_double(s.spectral_radius)
                    << "\n"
                    << "nullity: " << s.nullity << "\n"
                    << "det: " << s.det->str() << "\n";
                out << "charpoly (ascending):";
                for (const auto& c : cp.coeffs)
                    out << " " << c.str();
                out << "\n";
            }
        }
        return 0;
    }

    // ---- verify ----
    if (auto* cmd = app.get_subcommand("verify"); cmd->parsed()) {
        std::string theorem = cmd->get_option("theorem")->as<std::string>();
        InputSpec spec{cmd->get_option("--input")->as<std::string>(),
                       cmd->get_option("--gen")->as<std::string>(),
                       cmd->get_option("--n")->as<int>(),
                       cmd->get_option("--k")->as<int>()};
        bool json = cmd->get_option("--json")->as<bool>();
        VerifyOptions opt;
        opt.m = cmd->get_option("--m")->as<int>();
        opt.tol = cmd->get_option("--tol")->as<double>();
        if (opt.tol == -1.0)
            opt.tol = env_tol();
        opt.instance_name = spec.label();
        InputSpec spec2{cmd->get_option("--second")->as<std::string>(),
                        cmd->get_option("--gen2")->as<std::string>(),
                        cmd->get_option("--n2")->as<int>(), 0};
        Hypergraph h = spec.load(in, "verify");
        if (!spec2.file.empty() || !spec2.gen.empty()) {
            spec2.k = h.k;
            opt.second = spec2.load(in, "verify");
        }
        VerificationReport rep = verify(theorem, h, opt);
        if (json)
            print_json(out, rep.to_json());
        else
            out << rep.to_text();
        return rep.verdict == Verdict::mismatch ? 2 : 0;
    }

    // ---- search-cospectral ----
    if (auto* cmd = app.get_subcommand("search-cospectral"); cmd->parsed()) {
        int n = cmd->get_option("--n")->as<int>();
        int k = cmd->get_option("--k")->as<int>();
        int r = cmd->get_option("--r")->as<int>();
        SearchOptions sopt;
        sopt.require_nonisomorphic =
            cmd->get_option("--require-nonisomorphic")->as<bool>();
        sopt.cap = cmd->get_option("--cap")->as<std::size_t>();
        bool json = cmd->get_option("--json")->as<bool>();
        CospectralCatalog cat = search_cospectral(n, k, r, sopt);
        if (json) {
            print_json(out, catalog_json(cat));
        } else {
            out << "members: " << cat.members.size() << "\n";
            out << "classes: " << cat.classes.size() << "\n";
            for (std::size_t i = 0; i < cat.classes.size(); ++i)
                out << "class " << i << ": size "
                    << cat.classes[i].members.size() << "\n";
            out << "pairs: " << cat.pairs.size() << "\n";
            for (const auto& p : cat.pairs)
                out << "  (" << p.first << "," << p.second << ")"
                    << (p.isomorphic ? " isomorphic" : " non-isomorphic")
                    << (p.products_verified ? " products-cospectral" : "")
                    << "\n";
        }
        return 0;
    }

    // ---- singular-family ----
    if (auto* cmd = app.get_subcommand("singular-family"); cmd->parsed()) {
        InputSpec spec{cmd->get_option("--base")->as<std::string>(),
                       cmd->get_option("--gen")->as<std::string>(),
                       cmd->get_option("--n")->as<int>(),
                       cmd->get_option("--k")->as<int>()};
        int m_max = cmd->get_option("--m-max")->as<int>();
        bool json = cmd->get_option("--json")->as<bool>();
        Hypergraph base = spec.load(in, "singular-family");
        auto family = singular_family(base, m_max);
        if (json) {
            Json arr = Json::array();
            for (const auto& e : family)
                arr.push_back({{"description", e.description},
                               {"order", e.order},
                               {"nullity", e.nullity},
                               {"guaranteed", e.guaranteed}});
            print_json(out, Json{{"base", spec.label()}, {"family", arr}});
        } else {
            for (const auto& e : family)
                out << e.description << ": order " << e.order << ", nullity "
                    << e.nullity << " (guaranteed >= " << e.guaranteed << ")\n";
        }
        return 0;
    }

    throw std::runtime_error("no subcommand given");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"spectral hypergraph constructions: splittings, joins, "
                 "closed-form spectra and their verification"};
    app.name("hyperspec");
    app.require_subcommand(0, 1);

    auto* gen = app.add_subcommand("gen", "emit a named hypergraph");
    gen->add_option("kind", "complete, fig3 or fig2a")->required();
    gen->add_option("--n", "vertex count (complete)");
    gen->add_option("--k", "edge size (complete)");
    gen->add_option("-o,--output", "output file, - for stdout")->default_val("-");

    auto* cons = app.add_subcommand("construct", "apply a splitting or join");
    cons->add_option("op", "ns, nns, vjoin or sjoin")->required();
    cons->add_option("-i,--input", "input hypergraph file, - for stdin");
    cons->add_option("--gen", "named input instead of a file");
    cons->add_option("--n", "vertex count for --gen complete");
    cons->add_option("--k", "edge size for --gen complete");
    cons->add_option("--m", "copy count for ns")->default_val(1);
    cons->add_option("--second", "second factor file (joins)");
    cons->add_option("--gen2", "named second factor (joins)");
    cons->add_option("--n2", "vertex count for --gen2 complete");
    cons->add_option("-o,--output", "output file, - for stdout")->default_val("-");

    for (const char* name : {"spectrum", "energy", "invariants"}) {
        auto* cmd = app.add_subcommand(
            name, std::string(name) == "spectrum"
                      ? "numeric spectrum with exact nullity and determinant"
                      : (std::string(name) == "energy"
                             ? "adjacency energy"
                             : "order, degrees and exact spectral invariants"));
        cmd->add_option("file", "hypergraph file, - for stdin")->required();
        cmd->add_flag("--json", "machine-readable output");
        cmd->add_option("--tol", "eigenvalue clustering width override")
            ->default_val(-1.0);
        if (std::string(name) == "spectrum")
            cmd->add_flag("--exact", "include the exact characteristic polynomial");
    }

    auto* ver = app.add_subcommand("verify", "check a closed-form theorem "
                                             "against the eigensolver oracle");
    ver->add_option("theorem", "one of: nsm-spectrum ns-spectrum nsm-energy "
                               "nsm-pairing nsm-det-radius nns-spectrum "
                               "nns-energy vjoin-spectrum sjoin-spectrum")
        ->required();
    ver->add_option("-i,--input", "instance file, - for stdin");
    ver->add_option("--gen", "named instance instead of a file");
    ver->add_option("--n", "vertex count for --gen complete");
    ver->add_option("--k", "edge size for --gen complete");
    ver->add_option("--m", "copy count for the nsm-* theorems")->default_val(1);
    ver->add_option("--second", "join second factor file");
    ver->add_option("--gen2", "named join second factor");
    ver->add_option("--n2", "vertex count for --gen2 complete");
    ver->add_flag("--json", "machine-readable report");
    ver->add_option("--tol", "comparison tolerance (default 1e-8 scaled)")
        ->default_val(-1.0);

    auto* sc = app.add_subcommand("search-cospectral",
                                  "mine cospectral pairs among (k,r)-regular "
                                  "hypergraphs on n vertices");
    sc->add_option("--n", "vertex count")->required();
    sc->add_option("--k", "edge size")->required();
    sc->add_option("--r", "vertex degree")->required();
    sc->add_flag("--require-nonisomorphic", "emit only non-isomorphic pairs");
    sc->add_option("--cap", "stop enumeration after this many hypergraphs")
        ->default_val(0);
    sc->add_flag("--json", "machine-readable catalog");
    sc->add_option("--tol", "unused; accepted for uniformity")->default_val(-1.0);

    auto* sf = app.add_subcommand("singular-family",
                                  "emit certified singular constructions");
    sf->add_option("--base", "base hypergraph file, - for stdin");
    sf->add_option("--gen", "named base instead of a file");
    sf->add_option("--n", "vertex count for --gen complete");
    sf->add_option("--k", "edge size for --gen complete");
    sf->add_option("--m-max", "largest copy count")->required();
    sf->add_flag("--json", "machine-readable output");
    sf->add_option("--tol", "unused; accepted for uniformity")->default_val(-1.0);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    if (app.get_subcommands().empty()) {
        out << app.help();
        return 1;
    }
    try {
        return run_parsed(app, in, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hyperspec
