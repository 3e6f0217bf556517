#include "ctextile/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <numeric>
#include <ostream>

#include "ctextile/abelian.hpp"
#include "ctextile/io.hpp"
#include "ctextile/textile.hpp"

namespace ctextile::cli {

namespace {

std::string group_text(const FgAbelianGroup& g) { return g.to_string(); }

void print_validity(const ValidityReport& rep, std::ostream& out) {
    out << "essential: " << (rep.essential ? "true" : "false") << "\n";
    out << "left_resolving: " << (rep.left_resolving ? "true" : "false") << "\n";
    for (const Violation& v : rep.offending) {
        switch (v.kind) {
            case Violation::Kind::zero_row:
                out << "violation: zero_row i=" << v.row << "\n";
                break;
            case Violation::Kind::zero_column:
                out << "violation: zero_column j=" << v.col << "\n";
                break;
            case Violation::Kind::left_resolving:
                out << "violation: left_resolving i=" << v.row << " j=" << v.col
                    << " symbol=" << v.symbol << "\n";
                break;
        }
    }
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            fail(errc::invalid_argument, "bad tile index '" + tok + "' in diagonal");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void print_tiles(const TextileSystem& sys, std::ostream& out) {
    out << "n=" << sys.dimension() << "\n";
    out << "tiles: " << sys.tiles().size() << "\n";
    for (size_t t = 0; t < sys.tiles().size(); ++t) {
        const Tile& w = sys.tiles()[t];
        out << t << ": top=" << w.top << " right=" << w.right << " left=" << w.left
            << " bottom=" << w.bottom << "\n";
    }
}

void print_k1(const ExtensionReport& rep, std::ostream& out) {
    out << "K1 sub = " << group_text(rep.sub) << "\n";
    out << "K1 quot = " << group_text(rep.quot) << "\n";
    out << "K1 split = " << (rep.split == ExtensionReport::Split::yes ? "yes" : "unknown") << "\n";
    if (rep.total) out << "K1 = " << group_text(*rep.total) << "\n";
}

struct PatchArgs {
    std::string file_a, file_b;
    long long which = 0;
    std::string diagonal;
    int radius = -1; // -1: wide enough for the full square
    std::vector<long long> origin{0, 0};
};

std::pair<TextileSystem, Patch> build_patch(const PatchArgs& pa) {
    TextileSystem sys = TextileSystem::from_commuting_matrices(load_int_matrix(pa.file_a),
                                                               load_int_matrix(pa.file_b),
                                                               pa.which);
    DiagonalWord d;
    d.origin_i = pa.origin[0];
    d.origin_j = pa.origin[1];
    d.tiles = parse_index_list(pa.diagonal);
    for (int t : d.tiles)
        if (t < 0 || t >= static_cast<int>(sys.tiles().size()))
            fail(errc::invalid_argument,
                 "tile index " + std::to_string(t) + " out of range (have " +
                     std::to_string(sys.tiles().size()) + " tiles)");
    int radius = pa.radius >= 0 ? pa.radius : static_cast<int>(d.tiles.size());
    Patch p = sys.propagate_from_diagonal(d, radius);
    return {std::move(sys), std::move(p)};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"textile tile systems from commuting integer matrices, with exact K-theory"};
    app.require_subcommand(1);

    std::string smx_file;
    auto* cmd_validate = app.add_subcommand("validate", "validity report for a symbolic matrix");
    cmd_validate->add_option("matrix", smx_file, "symbolic matrix file (.smx)")->required();

    struct {
        std::string file_a, file_b;
        bool all = false;
        long long limit = 1000;
    } kap;
    auto* cmd_kappa = app.add_subcommand("kappa", "enumerate specifications for a commuting pair");
    cmd_kappa->add_option("A", kap.file_a, "first integer matrix (.int)")->required();
    cmd_kappa->add_option("B", kap.file_b, "second integer matrix (.int)")->required();
    cmd_kappa->add_flag("--all", kap.all, "print every specification found");
    cmd_kappa->add_option("--limit", kap.limit, "enumeration cap")->check(CLI::PositiveNumber);

    struct {
        std::string file_a, file_b;
        long long which = 0;
    } til;
    auto* cmd_tiles = app.add_subcommand("tiles", "print the tile set with edge maps");
    cmd_tiles->add_option("A", til.file_a)->required();
    cmd_tiles->add_option("B", til.file_b)->required();
    cmd_tiles->add_option("--which", til.which, "specification index");

    PatchArgs prop;
    std::string svg_out;
    auto* cmd_prop = app.add_subcommand("propagate", "fill a patch around a diagonal tile word");
    cmd_prop->add_option("A", prop.file_a)->required();
    cmd_prop->add_option("B", prop.file_b)->required();
    cmd_prop->add_option("--which", prop.which, "specification index");
    cmd_prop->add_option("--diagonal", prop.diagonal, "comma-separated tile indices")->required();
    cmd_prop->add_option("--radius", prop.radius, "propagation half-width");
    cmd_prop->add_option("--origin", prop.origin, "diagonal origin (i j)")->expected(2);
    cmd_prop->add_option("--svg", svg_out, "also write an SVG rendering to this file");

    PatchArgs rnd;
    std::string rnd_format = "ascii", rnd_out;
    auto* cmd_render = app.add_subcommand("render", "render a propagated patch");
    cmd_render->add_option("A", rnd.file_a)->required();
    cmd_render->add_option("B", rnd.file_b)->required();
    cmd_render->add_option("--which", rnd.which, "specification index");
    cmd_render->add_option("--diagonal", rnd.diagonal, "comma-separated tile indices")->required();
    cmd_render->add_option("--radius", rnd.radius, "propagation half-width");
    cmd_render->add_option("--origin", rnd.origin, "diagonal origin (i j)")->expected(2);
    cmd_render->add_option("--format", rnd_format, "ascii or svg")
        ->check(CLI::IsMember({"ascii", "svg"}));
    cmd_render->add_option("--out", rnd_out, "write to file instead of standard output");

    struct {
        std::string file_a, file_b;
        long long which = 0;
    } kth;
    auto* cmd_ktheory = app.add_subcommand("ktheory", "K-groups of a commuting pair's system");
    cmd_ktheory->add_option("A", kth.file_a)->required();
    cmd_ktheory->add_option("B", kth.file_b)->required();
    cmd_ktheory->add_option("--which", kth.which, "specification index");

    struct {
        long long n = 0, m = 0;
    } onm;
    auto* cmd_onm = app.add_subcommand("onm", "K-groups of the one-vertex N,M loop system");
    cmd_onm->add_option("N", onm.n)->required()->check(CLI::Range(2LL, 1000000LL));
    cmd_onm->add_option("M", onm.m)->required()->check(CLI::Range(2LL, 1000000LL));

    std::vector<const char*> argv;
    argv.push_back("ctextile");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_validate) {
            print_validity(validate(load_symbolic_matrix(smx_file)), out);
        } else if (*cmd_kappa) {
            auto a = load_int_matrix(kap.file_a);
            auto b = load_int_matrix(kap.file_b);
            bool commuting = true;
            const size_t n = a.size();
            if (b.size() != n) fail(errc::size_mismatch, "matrices have different sizes");
            for (size_t i = 0; i < n && commuting; ++i)
                for (size_t k = 0; k < n && commuting; ++k) {
                    long long ab = 0, ba = 0;
                    for (size_t j = 0; j < n; ++j) {
                        ab += a[i][j] * b[j][k];
                        ba += b[i][j] * a[j][k];
                    }
                    commuting = ab == ba;
                }
            if (!commuting) {
                out << "NOT COMMUTING\n";
            } else {
                SymbolicMatrix ma = from_integer_matrix(a, "a");
                SymbolicMatrix mb = from_integer_matrix(b, "b");
                std::vector<Specification> specs = find_specifications(ma, mb, kap.limit);
                long long total = count_specifications(ma, mb, kap.limit + 1);
                out << specs.size() << " specification(s) found";
                if (total > kap.limit) out << " (limit reached)";
                out << "\n";
                if (kap.all)
                    for (size_t s = 0; s < specs.size(); ++s) {
                        out << "kappa " << s << ":\n";
                        for (const auto& [src, dst] : specs[s].entries())
                            out << "  (" << src.first << "," << src.second << ") -> ("
                                << dst.first << "," << dst.second << ")\n";
                    }
            }
        } else if (*cmd_tiles) {
            print_tiles(TextileSystem::from_commuting_matrices(load_int_matrix(til.file_a),
                                                               load_int_matrix(til.file_b),
                                                               til.which),
                        out);
        } else if (*cmd_prop) {
            auto [sys, patch] = build_patch(prop);
            out << sys.render_ascii(patch);
            if (!svg_out.empty()) {
                std::ofstream f(svg_out);
                if (!f) fail(errc::invalid_argument, "cannot write '" + svg_out + "'");
                f << sys.render_svg(patch);
            }
        } else if (*cmd_render) {
            auto [sys, patch] = build_patch(rnd);
            std::string rendered =
                rnd_format == "svg" ? sys.render_svg(patch) : sys.render_ascii(patch);
            if (rnd_out.empty()) {
                out << rendered;
            } else {
                std::ofstream f(rnd_out);
                if (!f) fail(errc::invalid_argument, "cannot write '" + rnd_out + "'");
                f << rendered;
            }
        } else if (*cmd_ktheory) {
            TextileSystem sys = TextileSystem::from_commuting_matrices(
                load_int_matrix(kth.file_a), load_int_matrix(kth.file_b), kth.which);
            KGroups kg = k_groups_textile(sys);
            out << "K0 = " << group_text(kg.k0) << "\n";
            print_k1(kg.k1, out);
        } else if (*cmd_onm) {
            std::vector<std::vector<long long>> a{{onm.n}}, b{{onm.m}};
            KGroups kg = k_groups_textile(TextileSystem::from_commuting_matrices(a, b, 0));
            long long d = std::gcd(onm.n - 1, onm.m - 1);
            FgAbelianGroup expected;
            if (d >= 2) expected.torsion.push_back(d);
            bool ok = kg.k0 == expected && kg.k1.total && *kg.k1.total == expected;
            out << "K0 = " << group_text(kg.k0) << "\n";
            out << "K1 = " << (kg.k1.total ? group_text(*kg.k1.total) : std::string("unknown"))
                << "\n";
            out << "expected Z/d, d = gcd(" << onm.n - 1 << "," << onm.m - 1 << ") = " << d << ": "
                << (ok ? "OK" : "MISMATCH") << "\n";
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace ctextile::cli
