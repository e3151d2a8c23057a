// Acceptance gate: one line per criterion, PASS/FAIL, exit 0 only if all
// criteria pass.  Each criterion is self-contained and uses fixed seeds;
// CLI-level checks shell out to the built command-line binary.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "monrep/category_lab.hpp"
#include "monrep/monic.hpp"
#include "monrep/input_format.hpp"

using namespace monrep;

namespace {

const std::string kData = MONREP_DATA_DIR;
const std::string kCli = MONREP_CLI_PATH;

int g_failures = 0;

void req(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void criterion(int id, const std::string& title,
               const std::function<std::string()>& body) {
    std::int64_t t0 = now_ms();
    try {
        std::string detail = body();
        std::cout << "criterion " << id << ": PASS — " << title;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << " [" << (now_ms() - t0) << " ms]" << std::endl;
    } catch (const std::exception& e) {
        ++g_failures;
        std::cout << "criterion " << id << ": FAIL — " << title << ": " << e.what()
                  << " [" << (now_ms() - t0) << " ms]" << std::endl;
    }
}

int run_cli(const std::string& args) {
    std::string cmd = kCli + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1 || !WIFEXITED(rc)) return -1;
    return WEXITSTATUS(rc);
}

LambdaContext golden_context() {
    return parse_input_file(kData + "/ex224.mono").context;
}

// Shared between criteria 2, 3 and 6.
struct SampledVerdict {
    bool monic = false;
    GP consensus = GP::unknown;
};
std::vector<SampledVerdict> g_samples;
int g_kernel_checked_random = 0;

std::string c1_golden() {
    req(run_cli("validate " + kData + "/ex224.mono") == 0, "validate must exit 0");
    req(run_cli("check-monic " + kData + "/ex224.mono --rep X") == 0,
        "check-monic must exit 0");
    req(run_cli("check-gp " + kData + "/ex224.mono --rep X --mode selfinjective") == 0,
        "check-gp must exit 0");
    req(run_cli("check-monic " + kData + "/ex224_broken.mono --rep X") == 2,
        "the broken variant must exit 2");
    std::string out =
        (std::filesystem::temp_directory_path() / "acceptance_tensor.mono").string();
    req(run_cli("construct tensor " + kData + "/ex224.mono --module R --vertex 3 -o " +
                out) == 0,
        "construct tensor must exit 0");

    InputData made = parse_input_file(out);
    const LambdaRep& t = made.rep_by_name("R_at_3");
    std::vector<int> tdims;
    for (int v = 1; v <= made.context.vertex_count(); ++v)
        tdims.push_back(t.at(v).total_dim());
    req(tdims == std::vector<int>{4, 4, 2, 0}, "tensor branch dims must be (4,4,2,0)");
    req(is_monic(made.context, t), "the tensor rep must be monic");

    InputData s = parse_input_file(kData + "/ex224.mono");
    TriangularSplit split = split_at_source(s.context, s.rep_by_name("X"));
    req(phi_is_injective(split), "the source-splitting map must be injective");
    LambdaRep coker = coker_phi(split).rep;
    std::vector<int> cdims;
    for (int v = 1; v <= split.sub.vertex_count(); ++v)
        cdims.push_back(coker.at(v).total_dim());
    req(cdims == std::vector<int>{2, 2, 1}, "cokernel dims must be (2,2,1)");
    return "5 CLI calls, cokernel dims (2,2,1), tensor dims (4,4,2,0)";
}

std::string c2_triple_oracle() {
    LambdaContext c = golden_context();
    std::mt19937_64 rng(424242);
    GPConfig cfg;
    const int total = 220;
    int unknown = 0;
    std::int64_t t0 = now_ms();
    for (int i = 0; i < total; ++i) {
        LambdaRep x = random_rep(c, rng, 4);
        CrossCheck cc = cross_validate_gp(c, x, cfg); // throws on disagreement
        bool monic = is_monic(c, x);
        if (monic) {
            PathKernelReport kr = verify_kernel_structure(c, x);
            req(kr.ok, "kernel structure failed on a monic random rep");
            ++g_kernel_checked_random;
        }
        g_samples.push_back({monic, cc.consensus});
        if (cc.consensus == GP::unknown) {
            ++unknown;
            continue;
        }
        for (GP v : {cc.direct.verdict, cc.inductive.verdict, cc.homological.verdict})
            req(v == GP::unknown || v == cc.consensus,
                "a definite verdict disagrees with the consensus");
    }
    std::int64_t elapsed = now_ms() - t0;
    req(unknown * 20 < total, "unknown rate must stay below 5%");
    req(elapsed < 60000, "sampling must finish within 60 s");
    std::ostringstream d;
    d << total << " reps, " << unknown << " unknown, " << elapsed << " ms";
    return d.str();
}

std::string c3_monic_iff_gp() {
    req(int(g_samples.size()) >= 200, "needs the criterion-2 sample set");
    int monic_count = 0;
    for (const SampledVerdict& s : g_samples) {
        if (s.consensus == GP::unknown) continue;
        req((s.consensus == GP::gp) == s.monic,
            "a rep was monic without being Gorenstein-projective (or vice versa)");
        if (s.monic) ++monic_count;
    }
    std::ostringstream d;
    d << g_samples.size() << " reps, " << monic_count
      << " monic, zero counterexamples";
    return d.str();
}

std::string c4_field_coefficients() {
    int contexts = 0;
    for (const char* name : {"/line_over_k.mono", "/square_over_k.mono"}) {
        LambdaContext c = parse_input_file(kData + name).context;
        req(c.base().arrow_count() == 0, "context must have field coefficients");
        SuiteReport r = run_corollary_suite(c, 110, 99);
        req(r.instances == 110 && r.failures == 0 && r.skipped == 0,
            std::string(name) + ": every monic sample must be projective");
        ++contexts;
    }
    return "2 contexts x 110 monic samples, all projective";
}

std::string c5_closure() {
    LambdaContext c = golden_context();
    SuiteReport r = run_closure_suite(c, 210, 777);
    req(r.instances == 210, "must run 210 samples");
    req(r.failures == 0, "closure suite reported failures");
    return "210 extensions, 420 kernels of epis, 210 summand instances";
}

std::string c6_kernel_structure() {
    LambdaContext c = golden_context();
    req(g_kernel_checked_random > 0, "needs the criterion-2 sample set");
    std::mt19937_64 rng(6060);
    int sampler = 0, mids = 0, kernels = 0;
    for (int i = 0; i < 40; ++i) {
        LambdaRep x = random_monic_rep(c, rng);
        req(verify_kernel_structure(c, x).ok, "kernel structure failed on a sampler rep");
        ++sampler;
    }
    for (int i = 0; i < 30; ++i) {
        LambdaRep x = random_monic_rep(c, rng);
        LambdaRep z = random_monic_rep(c, rng);
        ExtensionSample e = sample_extension(c, x, z, rng);
        req(is_monic(c, e.mid), "extension of monic reps must be monic");
        req(verify_kernel_structure(c, e.mid).ok,
            "kernel structure failed on an extension");
        ++mids;
        SubRepData ker = rep_kernel(c, e.mid, z, e.proj);
        req(verify_kernel_structure(c, ker.rep).ok,
            "kernel structure failed on a kernel of an epi");
        ++kernels;
    }
    std::ostringstream d;
    d << g_kernel_checked_random << " random monic reps, " << sampler << " sampler reps, "
      << mids << " extensions, " << kernels << " kernels";
    return d.str();
}

std::string c7_adjunction() {
    LambdaContext c = golden_context();
    SuiteReport r = run_adjunction_suite(c, 100, 31);
    req(r.instances == 100 && r.failures == 0,
        "hom-dimension adjunction failed on a triple");
    return "100 triples, hom dimensions equal";
}

std::string c8_injective_lifting() {
    LambdaContext c = golden_context();
    LambdaRep j = injective_at_sink(c);
    req(is_monic(c, j), "the sink injective must be monic");
    std::mt19937_64 rng(8088);
    for (int i = 0; i < 50; ++i) {
        LambdaRep x = random_monic_rep(c, rng);
        LambdaRep z = random_monic_rep(c, rng);
        ExtensionSample e = sample_extension(c, x, z, rng);
        LambdaMorphism h = random_morphism(c, x, j, rng);
        req(lifts_against(c, x, e.mid, e.incl, j, h),
            "a map into the sink injective failed to lift");
    }
    return "50 exact sequences, all maps lifted";
}

std::string c9_coefficient_oracle() {
    Field f = Field::prime(101);
    BaseAlgebra dual(f, {"u"}, {{"x", 0, 0}}, {{0, 0}});
    AModule reg = regular_module(dual);
    AModule simple = simple_module(dual, 0);
    req(gp_check(dual, reg).verdict == GP::gp, "the regular module must be GP");
    req(gp_check(dual, simple).verdict == GP::gp,
        "the simple over the dual numbers must be GP");
    req(hom_space(dual, reg, simple).size() == 1, "dim Hom(A, k) must be 1");
    req(hom_space(dual, simple, reg).size() == 1, "dim Hom(k, A) must be 1");
    req(hom_space(dual, reg, reg).size() == 2, "dim Hom(A, A) must be 2");

    BaseAlgebra a2(f, {"s", "t"}, {{"y", 0, 1}}, {});
    req(gp_check(a2, projective_module(a2, 0).mod).verdict == GP::gp,
        "projectives must be GP");
    req(gp_check(a2, simple_module(a2, 0)).verdict == GP::not_gp,
        "the non-projective simple over the path algebra must not be GP");
    return "dual numbers and two-vertex path algebra goldens";
}

} // namespace

int main() {
    criterion(1, "golden example end to end", c1_golden);
    criterion(2, "three deciders agree on 220 random reps", c2_triple_oracle);
    criterion(3, "monic exactly matches Gorenstein-projective here", c3_monic_iff_gp);
    criterion(4, "with field coefficients monic means projective", c4_field_coefficients);
    criterion(5, "monic reps are closed under extensions, kernels of epis and summands",
              c5_closure);
    criterion(6, "kernel structure holds on every monic rep encountered",
              c6_kernel_structure);
    criterion(7, "tensor-hom adjunction on 100 triples", c7_adjunction);
    criterion(8, "the sink injective lifts maps along monic inclusions",
              c8_injective_lifting);
    criterion(9, "coefficient-level Gorenstein oracle goldens", c9_coefficient_oracle);
    if (g_failures == 0)
        std::cout << "acceptance: all 9 criteria passed" << std::endl;
    else
        std::cout << "acceptance: " << g_failures << " criteria FAILED" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
