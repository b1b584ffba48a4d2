#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "grasscoh/catalog.hpp"
#include "grasscoh/schur.hpp"
#include "grasscoh/table_io.hpp"
#include "grasscoh/verify.hpp"

namespace {

using namespace grasscoh;

struct SpaceArgs {
    std::string space;
    std::string field = "C";
    int p = 0, q = 0, n = 0;
    std::string mode = "graded";
    std::string format = "text";
    std::string out;
};

void add_space_options(CLI::App* cmd, SpaceArgs& a) {
    cmd->add_option("space", a.space,
                    "space name (e.g. Gr_2(C^5), LGr(C^6), U(5)/U(2)xU(3)) or a kind "
                    "(Gr, LGr, OLGr, HLGr, LGr*) with flags")
        ->required();
    cmd->add_option("--field", a.field, "base field: R, C or H");
    cmd->add_option("--p", a.p, "first block size (Gr)");
    cmd->add_option("--q", a.q, "second block size (Gr)");
    cmd->add_option("--n", a.n, "rank parameter (LGr, OLGr, HLGr, LGr*)");
    cmd->add_option("--mode", a.mode, "graded | clifford")
        ->check(CLI::IsMember({"graded", "clifford"}));
    cmd->add_option("--format", a.format, "text | json | csv | latex");
    cmd->add_option("--out", a.out, "write output to this path instead of stdout");
}

BaseField parse_field(const std::string& f) {
    if (f == "R") return BaseField::R;
    if (f == "C") return BaseField::C;
    if (f == "H") return BaseField::H;
    throw range_error("unknown field '" + f + "' (R|C|H)");
}

SpaceSpec resolve_space(const SpaceArgs& a) {
    if (a.space == "Gr") {
        if (a.p < 1 || a.q < 1)
            throw range_error("Gr needs --p >= 1 and --q >= 1 (block sizes)");
        return ordinary_grassmannian(parse_field(a.field), a.p, a.q);
    }
    if (a.space == "LGr") {
        if (a.n < 1) throw range_error("LGr needs --n >= 1");
        return symplectic_lagrangian(parse_field(a.field), a.n);
    }
    if (a.space == "OLGr") {
        if (a.n < 2) throw range_error("OLGr needs --n >= 2");
        return orthogonal_lagrangian(a.n);
    }
    if (a.space == "HLGr") {
        if (a.n < 1) throw range_error("HLGr needs --n >= 1");
        return hermitian_lagrangian(parse_field(a.field), a.n);
    }
    if (a.space == "LGr*") {
        if (a.n < 1) throw range_error("LGr* needs --n >= 1");
        return quaternion_skew_lagrangian(a.n);
    }
    return lookup(a.space);
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw error("cannot open output file '" + out_path + "'");
    f << text;
}

std::string family_name(RingFamily f) {
    switch (f) {
        case RingFamily::Hpq: return "hpq";
        case RingFamily::HpqE: return "hpq+e";
        case RingFamily::SquarefreeC: return "squarefree-C";
        case RingFamily::SquarefreeD: return "squarefree-D";
        case RingFamily::Exterior: return "exterior";
    }
    return "?";
}

struct RingReport {
    SpaceSpec spec;
    RingMode mode;
    BuiltRing ring;
    std::vector<std::string> labels;
    std::vector<uint64_t> degrees;
    std::optional<Polynomial> poincare;
    std::string c_values;  // deformation parameters, when deformed
};

RingReport make_report(const SpaceSpec& spec, RingMode mode) {
    RingReport r{spec, mode, build_ring(spec, mode), {}, {}, std::nullopt, {}};
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            r.labels = d->basis_labels();
            if constexpr (std::is_same_v<T, RingDescriptorPtr>) {
                for (const auto& m : d->basis) r.degrees.push_back(d->graded_degree(m));
                if (d->has_e)
                    for (const auto& m : d->basis)
                        r.degrees.push_back(d->graded_degree(m) + d->e_degree);
                if (d->graded) r.poincare = poincare_polynomial(*d);
                if (!d->graded) {
                    std::ostringstream os;
                    for (size_t i = 0; i < d->c.size(); ++i)
                        os << (i ? ", " : "") << d->c[i].str();
                    r.c_values = os.str();
                }
            } else if constexpr (std::is_same_v<T, SquarefreeDescriptorPtr>) {
                for (const auto& m : d->basis()) r.degrees.push_back(d->graded_degree(m));
                if (d->graded) r.poincare = poincare_sf(*d);
                if (!d->graded) {
                    std::ostringstream os;
                    for (size_t i = 0; i < d->t.size(); ++i)
                        os << (i ? ", " : "") << d->t[i].str();
                    r.c_values = os.str();
                }
            } else {
                for (const auto& s : d->basis())
                    r.degrees.push_back(static_cast<uint64_t>(d->subset_degree(s)));
                r.poincare = poincare_ext(*d);
            }
        },
        r.ring);
    return r;
}

std::string ring_text(const RingReport& r) {
    std::ostringstream os;
    os << "space:            " << r.spec.name << "\n";
    os << "symmetric space:  " << r.spec.symmetric_space << "\n";
    os << "family:           " << family_name(r.spec.family);
    if (r.spec.family == RingFamily::Hpq || r.spec.family == RingFamily::HpqE)
        os << " (p=" << r.spec.p << ", q=" << r.spec.q << ", weight " << r.spec.weight << ")";
    else if (r.spec.family == RingFamily::SquarefreeC ||
             r.spec.family == RingFamily::SquarefreeD)
        os << " (n=" << r.spec.n << ")";
    os << "\n";
    os << "mode:             " << (r.mode == RingMode::Clifford ? "clifford" : "graded")
       << "\n";
    os << "dimension:        " << r.labels.size() << "\n";
    os << "euler char:       " << euler_characteristic(r.spec) << "\n";
    if (!r.c_values.empty()) os << "parameters c:     [" << r.c_values << "]\n";
    if (r.poincare) os << "poincare:         " << univariate_str(*r.poincare) << "\n";
    if (r.spec.family == RingFamily::Exterior) {
        os << "generator degrees:";
        for (int d : r.spec.exterior_degrees) os << " " << d;
        os << "\n";
    }
    os << "basis (degree):   ";
    for (size_t i = 0; i < r.labels.size(); ++i)
        os << (i ? ", " : "") << r.labels[i] << " (" << r.degrees[i] << ")";
    os << "\n";
    return os.str();
}

std::string ring_json(const RingReport& r) {
    nlohmann::json j;
    j["space"] = r.spec.name;
    j["symmetric_space"] = r.spec.symmetric_space;
    j["family"] = family_name(r.spec.family);
    j["mode"] = r.mode == RingMode::Clifford ? "clifford" : "graded";
    j["descriptor"] = nlohmann::json::parse(descriptor_json(r.ring));
    j["dimension"] = r.labels.size();
    j["euler_characteristic"] = euler_characteristic(r.spec);
    j["basis"] = r.labels;
    j["degrees"] = r.degrees;
    if (r.poincare) j["poincare"] = univariate_str(*r.poincare);
    return j.dump(2) + "\n";
}

int cmd_ring(const SpaceArgs& a) {
    SpaceSpec spec = resolve_space(a);
    RingMode mode = a.mode == "clifford" ? RingMode::Clifford : RingMode::Graded;
    RingReport rep = make_report(spec, mode);
    OutputFormat f = parse_format(a.format);
    if (f == OutputFormat::Json)
        write_output(a.out, ring_json(rep));
    else if (f == OutputFormat::Text)
        write_output(a.out, ring_text(rep));
    else
        throw range_error("ring supports --format text|json");
    return 0;
}

int cmd_table(const SpaceArgs& a) {
    SpaceSpec spec = resolve_space(a);
    RingMode mode = a.mode == "clifford" ? RingMode::Clifford : RingMode::Graded;
    TableModel t = multiplication_table(build_ring(spec, mode));
    write_output(a.out, emit(t, parse_format(a.format)));
    return 0;
}

int cmd_schur(int p, int q, const std::string& op, const std::vector<std::string>& args,
              const std::string& format, const std::string& out) {
    if (p < 1 || q < p) throw range_error("schur needs 1 <= p <= q");
    auto desc = RingDescriptor::make(p, q, std::vector<Rational>(p + q, Rational(0)), 2);
    std::ostringstream os;
    nlohmann::json j;
    if (op == "expand") {
        if (args.size() != 1) throw range_error("expand takes one partition");
        Partition lam = Partition::parse(args[0]);
        Polynomial e = jacobi_trudi(lam, p, q);
        os << "s" << lam.str() << " = " << e.str("r") << "\n";
        j["op"] = "expand";
        j["partition"] = lam.str();
        j["monomials"] = e.str("r");
    } else if (op == "convert") {
        if (args.size() != 1) throw range_error("convert takes one polynomial in r");
        Polynomial x = Polynomial::parse(args[0], p, "r");
        SchurCoords coords = to_schur_basis(normal_form(desc, x));
        os << args[0] << " = " << schur_coords_str(coords) << "\n";
        j["op"] = "convert";
        j["input"] = args[0];
        j["schur"] = schur_coords_str(coords);
    } else if (op == "multiply") {
        if (args.size() != 2) throw range_error("multiply takes two partitions");
        Partition lam = Partition::parse(args[0]);
        Partition mu = Partition::parse(args[1]);
        SchurCoords coords = schur_multiply(lam, mu, desc);
        os << "s" << lam.str() << "*s" << mu.str() << " = " << schur_coords_str(coords)
           << "\n";
        j["op"] = "multiply";
        j["factors"] = {lam.str(), mu.str()};
        j["schur"] = schur_coords_str(coords);
    } else {
        throw range_error("unknown schur operation '" + op + "' (expand|convert|multiply)");
    }
    OutputFormat f = parse_format(format);
    if (f == OutputFormat::Json)
        write_output(out, j.dump(2) + "\n");
    else if (f == OutputFormat::Text)
        write_output(out, os.str());
    else
        throw range_error("schur supports --format text|json");
    return 0;
}

int cmd_verify(const std::string& suite, int max_size, int trials, uint64_t seed,
               const std::string& format, const std::string& out) {
    VerifyOptions opt;
    opt.max_size = max_size;
    opt.trials = trials;
    opt.seed = seed;
    auto results = run_suite(suite, opt);
    bool all_pass = true;
    std::ostringstream os;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        os << (r.pass ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name << " ("
           << r.cases << " cases)";
        if (!r.pass && !r.witness.empty()) os << "  -- " << r.witness;
        os << "\n";
        arr.push_back({{"suite", r.suite},
                       {"check", r.name},
                       {"pass", r.pass},
                       {"cases", r.cases},
                       {"witness", r.witness}});
    }
    os << (all_pass ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    OutputFormat f = parse_format(format);
    if (f == OutputFormat::Json)
        write_output(out, nlohmann::json{{"pass", all_pass}, {"results", arr}}.dump(2) + "\n");
    else if (f == OutputFormat::Text)
        write_output(out, os.str());
    else
        throw range_error("verify supports --format text|json");
    return all_pass ? 0 : 1;
}

int cmd_list_spaces(const std::string& format, const std::string& out) {
    auto rows = catalog_rows();
    OutputFormat f = parse_format(format);
    if (f == OutputFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"pattern", r.pattern},
                           {"field", r.field},
                           {"symmetric_space", r.symmetric_space},
                           {"family", r.family},
                           {"weight", r.weight},
                           {"supports_clifford", r.supports_clifford},
                           {"example", r.example}});
        write_output(out, arr.dump(2) + "\n");
        return 0;
    }
    if (f != OutputFormat::Text) throw range_error("list-spaces supports --format text|json");
    std::ostringstream os;
    for (const auto& r : rows) {
        os << r.pattern << "  [" << r.field << "]  " << r.symmetric_space << "  family="
           << r.family << "  weight=" << r.weight
           << (r.supports_clifford ? "  clifford" : "") << "  e.g. " << r.example << "\n";
    }
    write_output(out, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "grasscoh: exact generators-and-relations models of Grassmannian cohomology rings "
        "and their Clifford deformations"};
    app.require_subcommand(1);

    SpaceArgs ring_args, table_args;
    auto* ring = app.add_subcommand("ring", "describe a ring: basis, degrees, Poincare data");
    add_space_options(ring, ring_args);
    auto* table = app.add_subcommand("table", "full multiplication table over the basis");
    add_space_options(table, table_args);

    int sp = 0, sq = 0;
    std::string sop;
    std::vector<std::string> sargs;
    std::string sformat = "text", sout;
    auto* schur = app.add_subcommand("schur", "Schur-basis operations in H(p,q;0)");
    schur->add_option("--p", sp, "number of r generators")->required();
    schur->add_option("--q", sq, "degree bound")->required();
    schur->add_option("op", sop, "expand | convert | multiply")->required();
    schur->add_option("args", sargs, "operation arguments");
    schur->add_option("--format", sformat, "text | json");
    schur->add_option("--out", sout, "output path");

    std::string vsuite = "all", vformat = "text", vout;
    int vmax = 4, vtrials = 1000;
    uint64_t vseed = 20240901;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", vsuite, "all | dims | idempotents | schur | gr | termination");
    verify->add_option("--max-size", vmax, "size bound for swept parameters");
    verify->add_option("--trials", vtrials, "randomized trial count");
    verify->add_option("--seed", vseed, "random seed");
    verify->add_option("--format", vformat, "text | json");
    verify->add_option("--out", vout, "output path");

    std::string lformat = "text", lout;
    auto* list = app.add_subcommand("list-spaces", "print the space registry");
    list->add_option("--format", lformat, "text | json");
    list->add_option("--out", lout, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (ring->parsed()) return cmd_ring(ring_args);
        if (table->parsed()) return cmd_table(table_args);
        if (schur->parsed()) return cmd_schur(sp, sq, sop, sargs, sformat, sout);
        if (verify->parsed()) return cmd_verify(vsuite, vmax, vtrials, vseed, vformat, vout);
        if (list->parsed()) return cmd_list_spaces(lformat, lout);
    } catch (const invariant_violation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const grasscoh::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
