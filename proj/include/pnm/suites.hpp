#pragma once
#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pnm/cocross.hpp"

namespace pnm {

struct TargetSpec {
    bool pointed = false;
    int prime = 2;
};
TargetPtr make_target(const TargetSpec& t);
nlohmann::json target_json(const TargetSpec& t);

// Check counts per phase; wall-clock milliseconds only when enabled, since they
// would make otherwise identical reports differ.
class PhaseClock {
public:
    explicit PhaseClock(bool wall_clock) : wall_(wall_clock) {}
    void begin(const std::string& phase);
    void end(int checks);
    nlohmann::json to_json() const;

private:
    bool wall_;
    std::string current_;
    std::chrono::steady_clock::time_point start_;
    std::map<std::string, std::pair<int, double>> phases_;
};

// {law, status, witnesses, seed, timings} plus the config and per-law check counts.
nlohmann::json make_report(const std::string& law, bool pass, const nlohmann::json& witnesses, std::uint64_t seed,
                           const PhaseClock& clock, const nlohmann::json& config, const nlohmann::json& checked);
nlohmann::json report_from_laws(const std::string& law, const LawReport& r, std::uint64_t seed, const PhaseClock& clock,
                                const nlohmann::json& config);
// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical(const nlohmann::json& j);
bool report_passed(const nlohmann::json& report);

void merge_laws(LawReport& into, const LawReport& from);

struct MonadSuiteConfig {
    TargetSpec target;
    int n = 2;
    int dims = 2;
    std::uint64_t seed = 0;
    std::vector<std::string> functors = registry_names();
    std::string module = "theta";  // theta, trivial, coreflective
    bool diagonal = false;         // the composite monad on Fun(M, M) instead
    bool corrupt_mu = false;       // fixture: μ post-composed with a non-identity automorphism
    int morphism_samples = 8;
    bool wall_clock = false;
};
nlohmann::json run_verify_monad(const MonadSuiteConfig& cfg);

struct CocrossSuiteConfig {
    TargetSpec target;
    std::string functor = "tensor-square";
    nlohmann::json table;  // used when functor == "table"
    std::vector<int> inputs{1, 1};
    std::uint64_t seed = 0;
    bool wall_clock = false;
};
nlohmann::json run_cocross(const CocrossSuiteConfig& cfg);

struct AxiomSuiteConfig {
    TargetSpec target;
    std::uint64_t seed = 0;
    int cases = 100;
    int dims = 3;
    bool include_roundtrips = true;
    bool unpointed_demo = false;
    bool wall_clock = false;
};
nlohmann::json run_axioms(const AxiomSuiteConfig& cfg);

struct RoundtripSuiteConfig {
    TargetSpec target;
    int max_objects = 5;           // module <-> comonad, all posets up to iso
    int max_objects_coreflective = 4;
    int max_n_tables = 2;
    int n = 3;                     // sampled on θ^1 .. θ^n
    int samples = 64;
    std::uint64_t seed = 0;
    bool wall_clock = false;
};
nlohmann::json run_module_roundtrip(const RoundtripSuiteConfig& cfg);

struct SurjectionSuiteConfig {
    TargetSpec target;
    SurjectionMap s{2, 1, {0, 0}};
    int dims = 2;
    std::vector<std::string> functors = registry_names();
    // Samples whose inner value exceeds this size skip the multiplication diagram.
    int size_cap = 64;
    std::uint64_t seed = 0;
    bool wall_clock = false;
};
nlohmann::json run_surjection_morphism(const SurjectionSuiteConfig& cfg);
SurjectionMap parse_surjection(int n, const std::string& text);  // "1,2,1": images of 1..n

// Seeded comparisons used by the acceptance suite.
nlohmann::json run_kan_agreement(int n, int cases, std::uint64_t seed, bool wall_clock = false);
nlohmann::json run_oracle_agreement(const TargetSpec& t, int cases, int max_n, int dims, std::uint64_t seed,
                                    bool wall_clock = false);
nlohmann::json run_dimension_law(int prime, int dims, bool wall_clock = false);

}  // namespace pnm
