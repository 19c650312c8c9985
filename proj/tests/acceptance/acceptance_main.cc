// Copyright 2026 The cqpl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle/density_oracle.h"
#include "../support/test_support.h"
#include "cqpl/comm/channel.h"
#include "cqpl/comm/scheduler.h"
#include "cqpl/interp/machine.h"
#include "cqpl/kraus/kraus_set.h"
#include "cqpl/kraus/permutation.h"
#include "cqpl/kraus/semantics.h"
#include "cqpl/types/comm_balance.h"

namespace {

using namespace cqpl;
using testing_support::load_checked;
using testing_support::read_file;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::string> run_lines(const syntax::Program &p, uint64_t seed) {
    interp::BufferOutput out;
    comm::RunOptions opts;
    opts.seed = seed;
    opts.check_ownership = false;
    comm::RunResult r = comm::run_all(p, opts, out);
    if (!r.ok()) {
        throw std::runtime_error(std::string("run failed: ") + r.error->what());
    }
    return out.lines;
}

std::string join(const std::vector<std::string> &lines) {
    std::string s;
    for (size_t i = 0; i < lines.size(); i++) {
        s += (i ? "\n" : "") + lines[i];
    }
    return s;
}

/// StatePort that remembers every measurement outcome.
class RecordingPort : public interp::StatePort {
   public:
    using StatePort::StatePort;
    uint64_t measure(std::span<const int> targets) override {
        uint64_t v = StatePort::measure(targets);
        outcomes.push_back(v);
        return v;
    }
    std::vector<uint64_t> outcomes;
};

// 1 ------------------------------------------------------------------------

Outcome coin_toss() {
    auto p = load_checked(read_file("programs/cointoss.qpl"));
    const int runs = 20000;
    auto t0 = std::chrono::steady_clock::now();
    int heads = 0;
    for (int s = 0; s < runs; s++) {
        auto lines = run_lines(p, static_cast<uint64_t>(s));
        if (lines.size() != 1 || (lines[0] != "Tossed head" && lines[0] != "Tossed tail")) {
            return {false, "unexpected output '" + join(lines) + "'"};
        }
        heads += lines[0] == "Tossed head";
    }
    double secs = seconds_since(t0);
    double f = static_cast<double>(heads) / runs;
    bool ok = f >= 0.49 && f <= 0.51 && secs < 10.0;
    return {ok, "head frequency " + fmt("%.4f", f) + " over 20000 runs in " + fmt("%.2f", secs) + " s"};
}

// 2 ------------------------------------------------------------------------

Outcome epr() {
    auto p = load_checked(read_file("programs/epr.qpl"));
    const int runs = 5000;
    std::map<std::pair<char, char>, int> joint;
    int agree = 0;
    for (int s = 0; s < runs; s++) {
        auto lines = run_lines(p, static_cast<uint64_t>(s));
        char a = '?', b = '?';
        for (const auto &l : lines) {
            if (l.rfind("Alice's qbit is |", 0) == 0) {
                a = l.at(17);
            } else if (l.rfind("Bob's qbit is |", 0) == 0) {
                b = l.at(15);
            }
        }
        if (a == '?' || b == '?') {
            return {false, "missing output in run " + std::to_string(s) + ": " + join(lines)};
        }
        joint[{a, b}]++;
        agree += a == b;
    }
    bool ok = agree == runs;
    std::string detail = "agreement " + std::to_string(agree) + "/5000;";
    for (const auto &[k, n] : joint) {
        double f = static_cast<double>(n) / runs;
        ok = ok && f >= 0.47 && f <= 0.53;
        detail += std::string(" (") + k.first + "," + k.second + ")=" + fmt("%.4f", f);
    }
    ok = ok && joint.size() == 2;
    return {ok, detail};
}

// 3 ------------------------------------------------------------------------

Outcome dump_golden() {
    auto p = load_checked(read_file("programs/ft_dump.qpl"));
    const std::vector<std::string> head = {"State before FT: 1 |00>",
                                           "State after FT: 0.25 |00>, 0.25 |01>, 0.25 |10>, 0.25 |11>"};
    const std::vector<std::string> block0 = {"a is |0>", "State of b: 0.5 |0>, 0.5 |1>",
                                             "State of (a,b): 0.5 |00>, 0.5 |01>"};
    const std::vector<std::string> block1 = {"a is |1>", "State of b: 0.5 |0>, 0.5 |1>",
                                             "State of (a,b): 0.5 |10>, 0.5 |11>"};
    std::set<int> seen;
    for (uint64_t s = 0; s < 32; s++) {
        auto lines = run_lines(p, s);
        if (lines.size() != 5 || lines[0] != head[0] || lines[1] != head[1]) {
            return {false, "seed " + std::to_string(s) + " printed:\n" + join(lines)};
        }
        std::vector<std::string> tail(lines.begin() + 2, lines.end());
        if (tail == block0) {
            seen.insert(0);
        } else if (tail == block1) {
            seen.insert(1);
        } else {
            return {false, "seed " + std::to_string(s) + " post-measurement block:\n" + join(tail)};
        }
    }
    return {seen.size() == 2, "header lines exact; both output blocks seen over 32 seeds"};
}

// 4 ------------------------------------------------------------------------

std::string matrix_literal(const Eigen::MatrixXcd &u) {
    std::ostringstream ss;
    ss.precision(17);
    ss << "[[ ";
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            if (r + c) {
                ss << ", ";
            }
            double re = u(r, c).real(), im = u(r, c).imag();
            ss << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
        }
    }
    ss << " ]]";
    return ss.str();
}

Outcome teleport() {
    const std::string base = read_file("programs/teleport.qpl");
    const std::string anchor = "new qbit teleport := 0;";
    std::mt19937_64 rng(4);
    double worst = 0.0;
    int runs = 0;
    for (int trial = 0; trial < 25; trial++) {
        Eigen::MatrixXcd u = testing_support::random_unitary(rng, 2);
        std::string src = base;
        size_t at = src.find(anchor);
        if (at == std::string::npos) {
            return {false, "teleport program lacks the preparation anchor"};
        }
        src.insert(at + anchor.size(), " teleport *= " + matrix_literal(u) + ";");
        auto program = load_checked(src);
        const double p0 = std::norm(u(0, 0)), p1 = std::norm(u(1, 0));
        std::set<std::pair<uint64_t, uint64_t>> branches;
        for (uint64_t seed = 0; seed < 256 && branches.size() < 4; seed++) {
            std::set<std::string> names{"Alice", "Bob"};
            comm::ChannelSet channels(names);
            qcore::QuantumState state;
            std::mt19937_64 gen(seed);
            RecordingPort quantum(state, gen);
            interp::BufferOutput out;
            comm::RunResult r = comm::run_with_ports(program, {}, [&](const std::string &) {
                return interp::Ports{&quantum, &channels, &out};
            });
            if (!r.ok() || out.dumps.size() != 1 || quantum.outcomes.size() != 2) {
                return {false, "teleport run failed for trial " + std::to_string(trial)};
            }
            branches.insert({quantum.outcomes[0], quantum.outcomes[1]});
            double q0 = 0, q1 = 0;
            for (const auto &e : out.dumps[0].entries) {
                (e.pattern == 0 ? q0 : q1) = e.probability;
            }
            worst = std::max({worst, std::abs(q0 - p0), std::abs(q1 - p1)});
            runs++;
        }
        if (branches.size() != 4) {
            return {false, "trial " + std::to_string(trial) + " saw only " + std::to_string(branches.size()) +
                               " (m1,m2) branches"};
        }
    }
    return {worst <= 1e-9, "25 unitaries, " + std::to_string(runs) + " runs, all 4 branches each, max error " +
                               fmt("%.2e", worst)};
}

// 5 ------------------------------------------------------------------------

Outcome negative_suite() {
    const std::vector<std::pair<std::string, ErrorCode>> cases = {
        {"dup_tuple", ErrorCode::E_DUP_TUPLE},         {"dim_mismatch", ErrorCode::E_DIM_MISMATCH},
        {"measure_width", ErrorCode::E_MEASURE_WIDTH}, {"use_after_send", ErrorCode::E_USE_AFTER_SEND},
        {"recv_shadow", ErrorCode::E_RECV_SHADOW},     {"not_unitary", ErrorCode::E_NOT_UNITARY},
        {"cond_not_bit", ErrorCode::E_COND_NOT_BIT},
    };
    std::string detail;
    bool ok = true;
    for (const auto &[name, code] : cases) {
        auto p = syntax::parse_source(read_file("tests/programs/negative/" + name + ".qpl"));
        auto r = types::check_program(p);
        if (!r.has(code) || r.ok()) {
            ok = false;
            detail += " missed " + std::string(code_name(code)) + ";";
        }
    }
    const std::vector<std::string> positives = {
        "programs/cointoss.qpl",           "programs/epr.qpl",
        "programs/teleport.qpl",           "programs/ft_dump.qpl",
        "programs/control_flow.qpl",       "programs/deadlock.qpl",
        "programs/procedures.qpl",         "programs/gates2.qpl",
        "programs/adaptive.qpl",           "tests/programs/listings/epr_listing.qpl",
        "tests/programs/listings/cointoss_listing.qpl", "tests/programs/listings/control_flow_listing.qpl",
        "tests/programs/listings/dump_listing.qpl",
    };
    for (const auto &path : positives) {
        auto p = syntax::parse_source(read_file(path));
        auto r = types::check_program(p);
        if (!r.ok()) {
            ok = false;
            detail += " rejected " + path + ";";
        }
    }
    if (detail.empty()) {
        detail = "7 judgments reported with their codes; " + std::to_string(positives.size()) +
                 " positive listings pass check";
    }
    return {ok, detail};
}

// 6 ------------------------------------------------------------------------

Outcome deadlock() {
    auto p = load_checked(read_file("programs/deadlock.qpl"));
    auto t0 = std::chrono::steady_clock::now();
    interp::BufferOutput out;
    comm::RunResult r = comm::run_all(p, {}, out);
    double secs = seconds_since(t0);
    bool dynamic = !r.ok() && r.error->code() == ErrorCode::E_DEADLOCK &&
                   std::string(r.error->what()).find("module B") != std::string::npos && secs < 1.0;
    auto balance = types::comm_balance_check(p);
    bool stat = balance.verdict == types::BalanceResult::Verdict::Imbalanced && balance.diagnostic &&
                balance.diagnostic->code == ErrorCode::W_COMM_IMBALANCE;
    std::string msg = r.error ? r.error->what() : "no error";
    return {dynamic && stat, "'" + msg + "' after " + fmt("%.4f", secs) + " s; static check " +
                                 (stat ? "flags W_COMM_IMBALANCE" : "missed the imbalance")};
}

// 7 ------------------------------------------------------------------------

Eigen::MatrixXcd sequential_oracle(const std::vector<Eigen::MatrixXcd> &a, const std::vector<Eigen::MatrixXcd> &b,
                                   const Eigen::MatrixXcd &rho) {
    Eigen::MatrixXcd mid = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (const auto &k : a) {
        mid += k * rho * k.adjoint();
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (const auto &k : b) {
        out += k * mid * k.adjoint();
    }
    return out;
}

Outcome kraus_algebra() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 4), card(1, 3);
    double worst = 0.0;
    for (int i = 0; i < 100; i++) {
        const int d = dim(rng);
        auto a = testing_support::random_kraus(rng, d, card(rng));
        auto b = testing_support::random_kraus(rng, d, card(rng));
        Eigen::MatrixXcd rho = testing_support::random_density(rng, d);
        kraus::KrausSet c = kraus::contract(kraus::KrausSet(a), kraus::KrausSet(b));
        Eigen::MatrixXcd got = kraus::apply_set(c, rho);
        worst = std::max(worst, (got - sequential_oracle(a, b, rho)).cwiseAbs().maxCoeff());
    }
    int accepted = 0, rejected = 0;
    std::uniform_int_distribution<int> small_dim(2, 4);
    for (int i = 0; i < 50; i++) {
        const int d = small_dim(rng), n = card(rng) + 1;
        auto e = testing_support::random_kraus(rng, d, n);
        Eigen::MatrixXcd u = testing_support::random_unitary(rng, n);
        std::vector<Eigen::MatrixXcd> f;
        for (int k = 0; k < n; k++) {
            Eigen::MatrixXcd fk = Eigen::MatrixXcd::Zero(d, d);
            for (int j = 0; j < n; j++) {
                fk += u(k, j) * e[static_cast<size_t>(j)];
            }
            f.push_back(fk);
        }
        accepted += kraus::channel_equiv(kraus::KrausSet(e), kraus::KrausSet(f));
        auto g = testing_support::random_kraus(rng, d, n);
        rejected += !kraus::channel_equiv(kraus::KrausSet(e), kraus::KrausSet(g));
    }
    bool ok = worst <= 1e-10 && accepted == 50 && rejected == 50;
    return {ok, "contract max error " + fmt("%.2e", worst) + " on 100 instances; accepted " +
                    std::to_string(accepted) + "/50 unitary mixes; rejected " + std::to_string(rejected) +
                    "/50 distinct channels"};
}

// 8 ------------------------------------------------------------------------

Outcome commutator() {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> size(2, 6), dim(1, 3);
    double worst = 0.0;
    for (int i = 0; i < 200; i++) {
        const int n = size(rng), d = dim(rng);
        std::vector<int> image(static_cast<size_t>(n));
        for (int k = 0; k < n; k++) {
            image[static_cast<size_t>(k)] = k + 1;
        }
        std::shuffle(image.begin(), image.end(), rng);
        std::vector<kraus::Matrix> mats;
        for (int k = 0; k < n; k++) {
            mats.push_back(testing_support::random_matrix(rng, d, d) / std::sqrt(2.0 * d));
        }
        worst = std::max(worst, kraus::verify_commutator_identity(mats, kraus::Permutation(image)));
    }
    auto inv = kraus::inversions(kraus::Permutation::parse("52314"));
    std::set<std::pair<int, int>> got, want{{5, 2}, {5, 3}, {5, 1}, {5, 4}, {2, 1}, {3, 1}};
    for (const auto &x : inv) {
        got.insert({x.s, x.t});
    }
    const std::string e52314 = kraus::commutator_expansion(kraus::Permutation::parse("52314")).to_string();
    const std::string e14532 = kraus::commutator_expansion(kraus::Permutation::parse("14532")).to_string();
    const std::string e1432 = kraus::commutator_expansion(kraus::Permutation::parse("1432")).to_string();
    bool strings = got == want && inv.size() == 6 &&
                   e52314 == "52314 = 12345 + 231[5,4] + 2[5,3]14 + [5,2]314 + 23[5,1]4 + 2[3,1]45 + [2,1]345" &&
                   e14532 == "14532 = 12345 + 14[5,3]2 + 143[5,2] + 1[4,3]25 + 13[4,2]5 + 1[3,2]45" &&
                   e1432 == "1432 = 1234 + 1[4,3]2 + 13[4,2] + 1[3,2]4";
    return {worst <= 1e-8 && strings, "max residual " + fmt("%.2e", worst) + " on 200 instances; " +
                                          (strings ? "worked inversions and expansions match"
                                                   : "symbolic mismatch: " + e14532 + " | " + e1432)};
}

// 9 ------------------------------------------------------------------------

Outcome semantics_agreement() {
    const int runs = 100000;
    std::string detail;
    bool ok = true;
    const std::vector<std::string> paths = {"programs/cointoss.qpl", "programs/epr.qpl", "programs/gates2.qpl"};
    for (size_t k = 0; k < paths.size(); k++) {
        const std::string &path = paths[k];
        const uint64_t seed_base = 1000000 * (k + 1);
        auto p = load_checked(read_file(path));
        auto predicted = kraus::predict_outputs(kraus::extract_global(p));
        std::map<std::string, int> seen;
        for (int s = 0; s < runs; s++) {
            seen[join(run_lines(p, seed_base + static_cast<uint64_t>(s)))]++;
        }
        double worst_z = 0.0;
        for (const auto &[key, n] : seen) {
            if (!predicted.count(key)) {
                ok = false;
                detail += " " + path + " produced unpredicted output '" + key + "';";
            }
        }
        for (const auto &[key, prob] : predicted) {
            const double f = static_cast<double>(seen[key]) / runs;
            const double sigma = std::sqrt(prob * (1 - prob) / runs);
            const double dev = std::abs(f - prob);
            if (dev > 3 * sigma + 1e-12) {
                ok = false;
            }
            if (sigma > 0) {
                worst_z = std::max(worst_z, dev / sigma);
            }
        }
        detail += " " + path.substr(path.find('/') + 1) + ": " + std::to_string(predicted.size()) +
                  " outcomes, max |z| " + fmt("%.2f", worst_z) + ";";
    }
    return {ok, detail.substr(1)};
}

// 10 -----------------------------------------------------------------------

struct OracleStep {
    enum Kind { Gate, Measure, Dump } kind;
    oracle::Mat matrix;
    std::vector<int> targets;
};

struct RandomProgram {
    std::string source;
    std::vector<int> alloc_bits;
    std::vector<OracleStep> steps;
};

RandomProgram random_program(std::mt19937_64 &rng) {
    RandomProgram rp;
    std::uniform_int_distribution<int> nq(1, 4), coin(0, 1);
    const int n = nq(rng);
    std::ostringstream src;
    src.precision(17);
    for (int i = 0; i < n; i++) {
        int b = coin(rng);
        rp.alloc_bits.push_back(b);
        src << "new qbit q" << i << " := " << b << ";\n";
    }
    std::uniform_int_distribution<int> pick_q(0, n - 1);
    auto distinct = [&](int k) {
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) {
            all[static_cast<size_t>(i)] = i;
        }
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<size_t>(k));
        return all;
    };
    auto names = [](const std::vector<int> &t) {
        std::string s;
        for (size_t i = 0; i < t.size(); i++) {
            s += (i ? ", q" : "q") + std::to_string(t[i]);
        }
        return s;
    };
    const int budget = 12 - n;
    std::uniform_int_distribution<int> kind(0, 8);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    for (int s = 0; s < budget; s++) {
        const int k = kind(rng);
        OracleStep step{OracleStep::Gate, {}, {}};
        if (k == 0) {
            step.targets = {pick_q(rng)};
            step.matrix = oracle::h();
            src << names(step.targets) << " *= H;\n";
        } else if (k == 1) {
            step.targets = {pick_q(rng)};
            step.matrix = oracle::x();
            src << names(step.targets) << " *= Not;\n";
        } else if (k == 2 && n >= 2) {
            step.targets = distinct(2);
            step.matrix = oracle::cnot();
            src << names(step.targets) << " *= CNot;\n";
        } else if (k == 3) {
            double a = angle(rng);
            step.targets = {pick_q(rng)};
            step.matrix = oracle::phase(a);
            src << names(step.targets) << " *= Phase " << (a < 0 ? "(" : "") << a << (a < 0 ? ")" : "") << ";\n";
        } else if (k == 4) {
            std::uniform_int_distribution<int> width(1, n);
            step.targets = distinct(width(rng));
            step.matrix = oracle::hadamard_power(static_cast<int>(step.targets.size()));
            src << names(step.targets) << " *= FT(" << step.targets.size() << ");\n";
        } else if (k == 5) {
            const int w = n >= 2 ? 1 + coin(rng) : 1;
            step.targets = distinct(w);
            step.matrix = testing_support::random_unitary(rng, 1 << w);
            src << names(step.targets) << " *= [[ ";
            for (Eigen::Index r = 0; r < step.matrix.rows(); r++) {
                for (Eigen::Index c = 0; c < step.matrix.cols(); c++) {
                    const auto v = step.matrix(r, c);
                    src << (r + c ? ", " : "") << v.real() << (v.imag() < 0 ? " - " : " + ")
                        << std::abs(v.imag()) << "i";
                }
            }
            src << " ]];\n";
        } else if (k == 6) {
            step.kind = OracleStep::Measure;
            step.targets = {pick_q(rng)};
            src << "measure " << names(step.targets) << " then { skip; } else { skip; };\n";
        } else {
            step.kind = OracleStep::Dump;
            std::uniform_int_distribution<int> width(1, n);
            step.targets = distinct(width(rng));
            src << "dump " << names(step.targets) << ";\n";
        }
        if (step.kind == OracleStep::Gate && step.targets.empty()) {
            continue;
        }
        rp.steps.push_back(std::move(step));
    }
    rp.steps.push_back({OracleStep::Dump, {}, distinct(n)});
    src << "dump " << names(rp.steps.back().targets) << ";\n";
    rp.source = src.str();
    return rp;
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(10);
    double worst = 0.0;
    int dumps = 0;
    for (int i = 0; i < 200; i++) {
        RandomProgram rp = random_program(rng);
        auto program = load_checked(rp.source);
        qcore::QuantumState state;
        std::mt19937_64 gen(static_cast<uint64_t>(i));
        RecordingPort quantum(state, gen);
        interp::BufferOutput out;
        interp::Machine m("main", program.statements, interp::Ports{&quantum, nullptr, &out});
        auto st = m.run();
        if (st.state != interp::ExecStatus::State::Finished) {
            return {false, "program " + std::to_string(i) + " did not finish:\n" + rp.source};
        }
        oracle::DensityOracle o;
        for (int b : rp.alloc_bits) {
            o.alloc(b);
        }
        size_t next_measure = 0, next_dump = 0;
        for (const auto &step : rp.steps) {
            if (step.kind == OracleStep::Gate) {
                o.apply(step.matrix, step.targets);
            } else if (step.kind == OracleStep::Measure) {
                o.project(step.targets, quantum.outcomes.at(next_measure++));
            } else {
                const auto &d = out.dumps.at(next_dump++);
                std::vector<double> want = o.marginal(step.targets);
                std::vector<double> got(want.size(), 0.0);
                for (const auto &e : d.entries) {
                    got.at(e.pattern) = e.probability;
                }
                for (size_t k = 0; k < want.size(); k++) {
                    // the core omits entries below 1e-12
                    worst = std::max(worst, std::abs(got[k] - want[k]) * (got[k] == 0.0 && want[k] < 1e-12 ? 0 : 1));
                }
                dumps++;
            }
        }
        if (next_dump != out.dumps.size() || next_measure != quantum.outcomes.size()) {
            return {false, "event count mismatch in program " + std::to_string(i)};
        }
    }
    return {worst <= 1e-10, "200 programs, " + std::to_string(dumps) + " dumps, max deviation " + fmt("%.2e", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 coin toss", coin_toss},
        {"2 EPR distribution", epr},
        {"3 dump golden output", dump_golden},
        {"4 teleportation", teleport},
        {"5 type-system negative suite", negative_suite},
        {"6 deadlock", deadlock},
        {"7 Kraus algebra", kraus_algebra},
        {"8 commutator identity", commutator},
        {"9 semantics/operational agreement", semantics_agreement},
        {"10 density-matrix oracle equivalence", oracle_equivalence},
    };
    int failures = 0;
    for (const auto &[name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
