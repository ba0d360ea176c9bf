#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "pnm/suites.hpp"

using namespace pnm;

namespace {

constexpr int kMaxN = 4;
constexpr int kMaxDims = 3;

struct Common {
    int prime = 2;
    bool pointed = false;
    std::uint64_t seed = 1;
    std::string out;
    bool cap_override = false;
    bool wall_clock = false;
    TargetSpec target() const { return TargetSpec{pointed, prime}; }
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--prime", c.prime, "field characteristic for vector-space targets");
    app->add_flag("--pointed", c.pointed, "use finite pointed sets as the target");
    app->add_option("--seed", c.seed, "seed for sampled cases");
    app->add_option("--out", c.out, "write the JSON report here instead of stdout");
    app->add_flag("--cap-override", c.cap_override, "allow n and dims above the default caps");
    app->add_flag("--wall-clock", c.wall_clock, "include wall-clock timings (breaks byte-identical reruns)");
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_caps(const Common& c, int n, int dims) {
    if (n < 0 || dims < 0) throw UsageError("n and dims must be non-negative");
    if (c.cap_override) {
        set_cube_cap(std::max(n, kDefaultCap));
        return;
    }
    if (n > kMaxN) throw UsageError("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(kMaxN));
    if (dims > kMaxDims) throw UsageError("dims = " + std::to_string(dims) + " exceeds the cap " + std::to_string(kMaxDims));
}

std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> v;
    std::string t;
    for (char ch : text) t += (ch == '(' || ch == ')') ? ' ' : ch;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
    return v;
}

int emit(const Common& c, const nlohmann::json& report) {
    std::string text = canonical(report);
    if (c.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) throw UsageError("cannot write " + c.out);
        f << text;
    }
    return report_passed(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial-module cocross toolkit"};
    app.require_subcommand(1);

    Common cm;
    int n = 2;
    std::string dims_text = "2";
    std::vector<std::string> functors;
    std::string module = "theta", fixture, surjection, table_path, functor = "tensor-square";
    bool diagonal = false, unpointed_demo = false, roundtrips = false;
    int cases = 100, samples = 64, max_objects = 5, size_cap = 64;

    auto* vm = app.add_subcommand("verify-monad", "check the monad laws of the cube monad");
    add_common(vm, cm);
    vm->add_option("--n", n);
    vm->add_option("--dims", dims_text, "bound on dimension/cardinality of sampled objects");
    vm->add_option("--functor", functors, "registry functors (identity, zero, tensor-square)");
    vm->add_option("--module", module)->check(CLI::IsMember({"theta", "trivial", "coreflective"}));
    vm->add_flag("--diagonal", diagonal, "check the diagonal composite monad on one-variable functors");
    vm->add_option("--fixture", fixture)->check(CLI::IsMember({"corrupted-mu"}));

    auto* cc = app.add_subcommand("cocross", "compute a cross effect and compare with the cofiber oracle");
    add_common(cc, cm);
    auto* cc_n = cc->add_option("--n", n);
    cc->add_option("--dims", dims_text, "inputs, e.g. 1,1 (one value is repeated n times)");
    cc->add_option("--functor", functor);
    cc->add_option("--table", table_path, "JSON file with a tabulated functor");

    auto* ax = app.add_subcommand("axioms", "run the homotopy-colimit axiom suite");
    add_common(ax, cm);
    ax->add_option("--dims", dims_text);
    ax->add_option("--cases", cases);
    ax->add_flag("--roundtrips", roundtrips, "also run the module/comonad roundtrips");
    ax->add_flag("--unpointed-demo", unpointed_demo, "show the constant-terminal failure for unpointed sets");

    auto* mr = app.add_subcommand("module-roundtrip", "module/comonad/coreflective roundtrips");
    add_common(mr, cm);
    mr->add_option("--n", n);
    mr->add_option("--samples", samples);
    mr->add_option("--max-objects", max_objects);

    auto* sm = app.add_subcommand("surjection-morphism", "check the monad morphism of a surjection");
    add_common(sm, cm);
    sm->add_option("--n", n);
    sm->add_option("--surjection", surjection, "values s(1),...,s(n), e.g. 1,2,1");
    sm->add_option("--dims", dims_text);
    sm->add_option("--functor", functors);
    sm->add_option("--size-cap", size_cap, "skip the multiplication diagram above this inner size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::vector<int> dims = parse_ints(dims_text);
        if (dims.empty()) throw UsageError("--dims is empty");
        int dmax = *std::max_element(dims.begin(), dims.end());
        if (functors.empty()) functors = registry_names();

        if (vm->parsed()) {
            check_caps(cm, n, dmax);
            MonadSuiteConfig c;
            c.target = cm.target();
            c.n = n;
            c.dims = dmax;
            c.seed = cm.seed;
            c.functors = functors;
            c.module = module;
            c.diagonal = diagonal;
            c.corrupt_mu = fixture == "corrupted-mu";
            c.wall_clock = cm.wall_clock;
            return emit(cm, run_verify_monad(c));
        }
        if (cc->parsed()) {
            if (cc_n->count() == 0) n = static_cast<int>(dims.size());
            if (dims.size() == 1) dims.assign(n, dims[0]);
            if (static_cast<int>(dims.size()) != n) throw UsageError("--dims needs n values");
            check_caps(cm, n, dmax);
            CocrossSuiteConfig c;
            c.target = cm.target();
            c.inputs = dims;
            c.seed = cm.seed;
            c.wall_clock = cm.wall_clock;
            c.functor = functor;
            if (!table_path.empty()) {
                std::ifstream f(table_path);
                if (!f) throw UsageError("cannot read " + table_path);
                c.table = nlohmann::json::parse(f);
                c.functor = "table";
            }
            return emit(cm, run_cocross(c));
        }
        if (ax->parsed()) {
            check_caps(cm, 0, dmax);
            AxiomSuiteConfig c;
            c.target = cm.target();
            c.seed = cm.seed;
            c.cases = cases;
            c.dims = dmax;
            c.include_roundtrips = roundtrips;
            c.unpointed_demo = unpointed_demo;
            c.wall_clock = cm.wall_clock;
            return emit(cm, run_axioms(c));
        }
        if (mr->parsed()) {
            check_caps(cm, n, 0);
            if (max_objects > 5 && !cm.cap_override) throw UsageError("--max-objects above 5 needs --cap-override");
            RoundtripSuiteConfig c;
            c.target = cm.target();
            c.n = n;
            c.samples = samples;
            c.max_objects = max_objects;
            c.seed = cm.seed;
            c.wall_clock = cm.wall_clock;
            return emit(cm, run_module_roundtrip(c));
        }
        if (sm->parsed()) {
            if (surjection.empty()) throw UsageError("--surjection is required");
            check_caps(cm, n, dmax);
            SurjectionSuiteConfig c;
            c.target = cm.target();
            c.s = parse_surjection(n, surjection);
            c.dims = dmax;
            c.functors = functors;
            c.size_cap = size_cap;
            c.seed = cm.seed;
            c.wall_clock = cm.wall_clock;
            return emit(cm, run_surjection_morphism(c));
        }
    } catch (const std::bad_alloc&) {
        std::cerr << "resource error: out of memory; reduce n or dims\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
