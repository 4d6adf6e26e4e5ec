#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dichroma/colour.hpp"
#include "dichroma/io.hpp"
#include "dichroma/oracle.hpp"
#include "dichroma/svg.hpp"

namespace {

using namespace dichroma;

long long search_budget_from_env() {
    const char* s = std::getenv("DICHROMA_SEARCH_BUDGET");
    if (!s) return kDefaultSearchBudget;
    try {
        return std::stoll(s);
    } catch (...) {
        throw Error(ErrorKind::ParseError, "DICHROMA_SEARCH_BUDGET is not a number");
    }
}

std::string digirth_str(const Digraph& d) {
    Digirth g = digirth(d);
    return g.finite ? std::to_string(g.length) : "infinite";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path);
    f << content;
}

int exit_code_for(const Error& e) {
    switch (e.kind) {
        case ErrorKind::ParseError:
        case ErrorKind::NotPlanar:
        case ErrorKind::DigirthTooSmall:
        case ErrorKind::PreconditionViolated:
        case ErrorKind::NotTwoConnected:
        case ErrorKind::PartialColouring:
        case ErrorKind::TooLarge:
            return 2;
        default:
            return 3; // internal: search/exhaustion/verification failures
    }
}

struct ColourArgs {
    std::string input, svg_out, report_out, colouring_out;
    int v0 = -1;
    uint64_t seed = 0;
};

int cmd_colour(const ColourArgs& args) {
    auto t0 = std::chrono::steady_clock::now();
    io::DigraphFile in = io::read_digraph_file(args.input);

    ColourTrace trace;
    ColourOptions opt;
    opt.search_budget = search_budget_from_env();
    opt.trace = &trace;

    io::RunReport rep;
    rep.n = in.d.vertex_count();
    rep.m = in.d.arc_count();
    rep.digirth = digirth_str(in.d);
    rep.mode = args.v0 >= 0 ? "apex" : "digirth4";
    rep.seed = args.seed;

    Colouring c;
    try {
        if (args.v0 >= 0) {
            c = colour_with_apex({in.d, args.v0}, opt);
        } else if (in.emb) {
            c = colour_digirth4_with_embedding(in.d, *in.emb, opt);
        } else {
            c = colour_digirth4(in.d, opt);
        }
    } catch (const Error&) {
        rep.verification = "invalid";
        rep.blocks = trace.blocks;
        rep.separators_used = trace.separators_used;
        rep.tutte_queries = trace.tutte_queries;
        if (!args.report_out.empty()) write_file(args.report_out, rep.to_text());
        throw;
    }

    auto vr = verify_colouring(in.d, c);
    rep.verification = vr.valid ? "valid" : "invalid";
    rep.blocks = trace.blocks;
    rep.separators_used = trace.separators_used;
    rep.tutte_queries = trace.tutte_queries;
    rep.branch_two_colour = trace.branch_two_colour;
    rep.branch_one_colour = trace.branch_one_colour;
    rep.branch_apex = trace.branch_apex;
    if (!trace.branch_b_choice.empty()) rep.branch_b_choice = trace.branch_b_choice;
    rep.fallback_engaged = trace.fallback_engaged;
    {
        std::ostringstream os;
        for (VertexId v = 0; v < c.size(); ++v) os << (v ? " " : "") << c.get(v);
        rep.colouring = os.str();
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.time_wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    std::ostringstream cs;
    io::write_colouring(cs, c);
    std::string cpath = args.colouring_out.empty() ? args.input + ".colouring" : args.colouring_out;
    write_file(cpath, cs.str());
    if (!args.report_out.empty()) write_file(args.report_out, rep.to_text());
    if (!args.svg_out.empty()) {
        PlaneEmbedding emb = in.emb ? *in.emb : compute_embedding(in.d);
        write_file(args.svg_out, svg::render(in.d, emb, &c));
    }
    std::cout << "valid 2-colouring written to " << cpath << "\n";
    return vr.valid ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-colouring of planar oriented graphs of digirth >= 4"};
    app.require_subcommand(1);

    ColourArgs cargs;
    auto* colour = app.add_subcommand("colour", "colour a digraph and verify the result");
    colour->add_option("--input", cargs.input, "digraph file")->required();
    colour->add_option("--v0", cargs.v0, "apex vertex: all directed 3-cycles must use it");
    colour->add_option("--seed", cargs.seed, "recorded in the report");
    colour->add_option("--svg", cargs.svg_out, "write an SVG drawing");
    colour->add_option("--report", cargs.report_out, "write a run report");
    colour->add_option("--colouring", cargs.colouring_out,
                       "colouring output path (default <input>.colouring)");

    std::string vin, vcol;
    auto* verify = app.add_subcommand("verify", "check a colouring file");
    verify->add_option("--input", vin, "digraph file")->required();
    verify->add_option("--colouring", vcol, "colouring file")->required();

    std::string din;
    auto* dg = app.add_subcommand("digirth", "print the digirth");
    dg->add_option("--input", din, "digraph file")->required();

    int gn = 8;
    uint64_t gseed = 0;
    int gdigirth = 4;
    std::string gout, gshape = "triangulation", gfrom;
    int gindex = 0;
    auto* gen = app.add_subcommand("gen", "generate a seeded planar instance");
    gen->add_option("--n", gn, "vertex count");
    gen->add_option("--seed", gseed, "seed")->required();
    gen->add_option("--digirth-min", gdigirth, "minimum digirth (3..5)");
    gen->add_option("--out", gout, "output file")->required();
    gen->add_option("--shape", gshape, "triangulation|anyplanar");
    gen->add_option("--from-planar-code", gfrom,
                    "orient a triangulation read from a planar_code file instead");
    gen->add_option("--index", gindex, "graph index within the planar_code file");

    std::string rin, rcol, rout;
    auto* render = app.add_subcommand("render", "draw a digraph with its colouring");
    render->add_option("--input", rin, "digraph file")->required();
    render->add_option("--colouring", rcol, "colouring file")->required();
    render->add_option("--out", rout, "SVG output")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (colour->parsed()) return cmd_colour(cargs);

        if (verify->parsed()) {
            io::DigraphFile in = io::read_digraph_file(vin);
            Colouring c = io::read_colouring_file(vcol, in.d.vertex_count());
            auto vr = dichroma::verify_colouring(in.d, c);
            if (vr.valid) {
                std::cout << "valid\n";
                return 0;
            }
            std::cerr << "monochromatic directed cycle (colour " << vr.witness_colour << "):\n";
            for (size_t i = 0; i < vr.witness_cycle.size(); ++i)
                std::cout << (i ? " " : "") << vr.witness_cycle[i];
            std::cout << "\n";
            return 1;
        }

        if (dg->parsed()) {
            io::DigraphFile in = io::read_digraph_file(din);
            std::cout << digirth_str(in.d) << "\n";
            return 0;
        }

        if (gen->parsed()) {
            oracle::Instance inst;
            if (!gfrom.empty()) {
                auto graphs = io::read_planar_code_file(gfrom);
                if (gindex < 0 || gindex >= static_cast<int>(graphs.size()))
                    throw Error(ErrorKind::ParseError, "planar_code index out of range");
                oracle::Rng rng(gseed);
                inst.emb = graphs[gindex];
                inst.d = oracle::orient_with_digirth(oracle::underlying(inst.emb), gdigirth, rng);
            } else {
                oracle::InstanceSpec spec;
                spec.n = gn;
                spec.seed = gseed;
                spec.digirth_min = gdigirth;
                if (gshape == "anyplanar")
                    spec.shape = oracle::InstanceShape::AnyPlanar;
                else if (gshape != "triangulation")
                    throw Error(ErrorKind::ParseError, "unknown shape " + gshape);
                inst = oracle::random_instance(spec);
            }
            std::ostringstream os;
            io::write_digraph(os, inst.d, &inst.emb);
            write_file(gout, os.str());
            std::cout << "wrote " << gout << " (n=" << inst.d.vertex_count()
                      << " m=" << inst.d.arc_count() << ")\n";
            return 0;
        }

        if (render->parsed()) {
            io::DigraphFile in = io::read_digraph_file(rin);
            Colouring c = io::read_colouring_file(rcol, in.d.vertex_count());
            PlaneEmbedding emb = in.emb ? *in.emb : compute_embedding(in.d);
            write_file(rout, svg::render(in.d, emb, &c));
            std::cout << "wrote " << rout << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
