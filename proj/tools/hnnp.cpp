#include "hnnp/criterion.hpp"
#include "hnnp/errors.hpp"
#include "hnnp/io.hpp"
#include "hnnp/one_relator.hpp"
#include "hnnp/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using hnnp::HNNInstance;
using ojson = nlohmann::ordered_json;

struct Output {
    std::string format = "text"; // text | machine

    void human(const std::string& line) const {
        if (format == "text") std::cout << line << '\n';
    }
    void machine(const ojson& j) const {
        if (format == "text") std::cout << "#machine " << j.dump() << '\n';
        else std::cout << j.dump() << '\n';
    }
};

std::vector<std::string> series_labels(const hnnp::FiniteGroup& g,
                                       const std::vector<hnnp::Subgroup>& terms,
                                       std::vector<std::vector<std::string>>* out_lists) {
    std::vector<std::string> lines;
    for (const auto& term : terms) {
        std::string line = "{";
        std::vector<std::string> labels;
        for (int e : term.elements()) labels.push_back(g.label(e));
        for (std::size_t i = 0; i < labels.size(); ++i)
            line += (i ? ", " : " ") + labels[i];
        line += " }";
        lines.push_back(line);
        if (out_lists) out_lists->push_back(labels);
    }
    return lines;
}

int cmd_decide(const std::string& path, bool certify, int max_cosets, const Output& out) {
    hnnp::LoadedInstance li = hnnp::load_instance_file(path);
    hnnp::Decision d = hnnp::decide(li.inst);
    ojson j;
    j["command"] = "decide";
    j["verdict"] = d.yes ? "yes" : "no";
    j["explored_nodes"] = d.explored_nodes;
    out.human(std::string("residually-") + std::to_string(li.inst.p) + ": " +
              (d.yes ? "yes" : "no"));
    if (d.certificate) {
        std::vector<std::vector<std::string>> lists;
        out.human("certificate series:");
        for (const auto& line : series_labels(li.inst.group(), d.certificate->terms, &lists))
            out.human("  " + line);
        j["certificate"] = lists;
    }
    if (certify && d.yes) {
        hnnp::WitnessOptions wo;
        wo.max_cosets = max_cosets;
        hnnp::WitnessResult w = hnnp::build_witness(li.inst, *d.certificate, wo);
        out.human("witness group order: " + std::to_string(w.X->order()));
        out.human("witness verification:");
        out.human(w.report.to_string());
        j["witness_order"] = w.X->order();
        j["witness_verified"] = w.report.ok();
    }
    out.machine(j);
    return 0;
}

int cmd_witness(const std::string& path, const std::string& mode, int max_cosets,
                const std::string& out_path, const Output& out) {
    hnnp::LoadedInstance li = hnnp::load_instance_file(path);
    hnnp::Decision d = hnnp::decide(li.inst);
    if (!d.yes) {
        out.human("no certificate exists");
        out.machine({{"command", "witness"}, {"verdict", "no"}});
        return 4;
    }
    hnnp::WitnessOptions wo;
    wo.faithful = (mode == "faithful");
    wo.max_cosets = max_cosets;
    hnnp::WitnessResult w = hnnp::build_witness(li.inst, *d.certificate, wo);
    std::string payload = hnnp::witness_to_json(li.inst, w);
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw hnnp::ParseError("cannot write '" + out_path + "'");
        f << payload;
    }
    out.human("witness group order: " + std::to_string(w.X->order()));
    out.human(w.report.to_string());
    out.machine({{"command", "witness"},
                 {"verdict", "yes"},
                 {"order", w.X->order()},
                 {"verified", w.report.ok()}});
    return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& witness_path,
               const Output& out) {
    hnnp::LoadedInstance li = hnnp::load_instance_file(inst_path);
    ojson j = [&] {
        try {
            return ojson::parse(hnnp::read_file(witness_path));
        } catch (const nlohmann::json::exception& e) {
            throw hnnp::ParseError(std::string("invalid witness file: ") + e.what());
        }
    }();
    hnnp::WitnessResult w;
    try {
        hnnp::LoadedGroup xg = hnnp::load_group_json(j.at("X").dump());
        w.X = xg.group;
        w.rhoOnG.assign(static_cast<std::size_t>(li.inst.group().order()), -1);
        for (const auto& pair : j.at("rho")) {
            int from = li.inst.group().find_label(pair.at(0).get<std::string>());
            int to = w.X->find_label(pair.at(1).get<std::string>());
            if (from < 0 || to < 0) throw hnnp::ParseError("unknown label in rho map");
            w.rhoOnG[static_cast<std::size_t>(from)] = to;
        }
        for (int v : w.rhoOnG)
            if (v < 0) throw hnnp::ParseError("rho map does not cover the base group");
        w.rhoT = w.X->find_label(j.at("rhoT").get<std::string>());
        if (w.rhoT < 0) throw hnnp::ParseError("unknown rhoT label");
    } catch (const nlohmann::json::exception& e) {
        throw hnnp::ParseError(std::string("invalid witness file: ") + e.what());
    }
    hnnp::WitnessReport r = hnnp::verify_witness(li.inst, w);
    out.human(r.to_string());
    out.machine({{"command", "verify"},
                 {"homomorphism", r.homomorphism},
                 {"injective_on_base", r.injective_on_base},
                 {"p_group", r.p_group},
                 {"conjugation", r.conjugation},
                 {"ok", r.ok()}});
    return 0;
}

int cmd_bs(long long l, long long m, int p, const Output& out) {
    hnnp::BSParams q = hnnp::normalize_bs(l, m);
    bool rf = hnnp::bs_residually_finite(q);
    bool rp = hnnp::bs_residually_p(q, p);
    out.human("G(" + std::to_string(q.l) + "," + std::to_string(q.m) + ")");
    out.human(std::string("residually-finite: ") + (rf ? "yes" : "no"));
    out.human("residually-" + std::to_string(p) + ": " + (rp ? "yes" : "no"));
    out.machine({{"command", "bs"}, {"l", q.l}, {"m", q.m}, {"p", p},
                 {"residually_finite", rf}, {"residually_p", rp}});
    return 0;
}

int cmd_brunner(long long l, long long m, long long k, int p, const Output& out) {
    hnnp::BrunnerParams q = hnnp::normalize_brunner(l, m, k);
    bool rf = hnnp::brunner_residually_finite(q);
    bool rp = hnnp::brunner_residually_p(q, p);
    out.human("H(" + std::to_string(q.l) + "," + std::to_string(q.m) + ";" +
              std::to_string(q.k) + ")");
    out.human(std::string("residually-finite: ") + (rf ? "yes" : "no"));
    out.human("residually-" + std::to_string(p) + ": " + (rp ? "yes" : "no"));
    out.machine({{"command", "brunner"}, {"l", q.l}, {"m", q.m}, {"k", q.k}, {"p", p},
                 {"residually_finite", rf}, {"residually_p", rp}});
    return 0;
}

int cmd_reduce(const std::string& path, const std::string& word, const Output& out) {
    hnnp::LoadedInstance li = hnnp::load_instance_file(path);
    hnnp::HNNWord w = hnnp::parse_hnn_word(li.inst, word);
    hnnp::ReducedForm rf = hnnp::britton_reduce(li.inst, w);
    bool trivial = rf.trivial(li.inst.group());
    out.human("reduced: " + hnnp::format_reduced(li.inst, rf));
    out.human(std::string("trivial: ") + (trivial ? "yes" : "no"));
    out.machine({{"command", "reduce"},
                 {"reduced", hnnp::format_reduced(li.inst, rf)},
                 {"syllables", rf.syllables.size()},
                 {"trivial", trivial}});
    return 0;
}

int cmd_crosscheck(int sMax, long long mMin, long long mMax, int p, const Output& out) {
    std::vector<long long> ms;
    for (long long m = mMin; m <= mMax; ++m) ms.push_back(m);
    hnnp::CrossValidateReport rep = hnnp::cross_validate(sMax, ms, p);
    out.human(rep.to_string());
    out.machine({{"command", "crosscheck"},
                 {"rows", rep.rows.size()},
                 {"disagreements", rep.disagreements()}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"HNN-extensions of finite p-groups: residual p-finiteness toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // lets global flags like --format follow the subcommand
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));

    std::string inst_path, word_text, witness_path, out_path, mode = "reduced";
    int max_cosets = 200000;
    bool certify = false;
    long long l = 0, m = 0, k = 0;
    long long mMin = 0, mMax = 0;
    int p = 2, sMax = 1;

    auto* decide = app.add_subcommand("decide", "decide residual p-finiteness");
    decide->add_option("instance", inst_path)->required();
    decide->add_flag("--certify", certify, "also build and verify a witness");
    decide->add_option("--max-cosets", max_cosets);

    auto* witness = app.add_subcommand("witness", "construct a witness quotient");
    witness->add_option("instance", inst_path)->required();
    witness->add_option("--mode", mode)->check(CLI::IsMember({"reduced", "faithful"}));
    witness->add_option("--max-cosets", max_cosets);
    witness->add_option("-o,--out", out_path, "witness file (default stdout)");

    auto* verify = app.add_subcommand("verify", "re-verify a witness file");
    verify->add_option("instance", inst_path)->required();
    verify->add_option("witness", witness_path)->required();

    auto* bs = app.add_subcommand("bs", "classify a Baumslag-Solitar group");
    bs->add_option("l", l)->required();
    bs->add_option("m", m)->required();
    bs->add_option("p", p)->required();

    auto* brunner = app.add_subcommand("brunner", "classify a Brunner group");
    brunner->add_option("l", l)->required();
    brunner->add_option("m", m)->required();
    brunner->add_option("k", k)->required();
    brunner->add_option("p", p)->required();

    auto* reduce = app.add_subcommand("reduce", "Britton-reduce a word");
    reduce->add_option("instance", inst_path)->required();
    reduce->add_option("word", word_text)->required();

    auto* crosscheck = app.add_subcommand("crosscheck", "criterion vs arithmetic grid");
    crosscheck->add_option("sMax", sMax)->required();
    crosscheck->add_option("mMin", mMin)->required();
    crosscheck->add_option("mMax", mMax)->required();
    crosscheck->add_option("p", p)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) return cmd_decide(inst_path, certify, max_cosets, out);
        if (witness->parsed()) return cmd_witness(inst_path, mode, max_cosets, out_path, out);
        if (verify->parsed()) return cmd_verify(inst_path, witness_path, out);
        if (bs->parsed()) return cmd_bs(l, m, p, out);
        if (brunner->parsed()) return cmd_brunner(l, m, k, p, out);
        if (reduce->parsed()) return cmd_reduce(inst_path, word_text, out);
        if (crosscheck->parsed()) return cmd_crosscheck(sMax, mMin, mMax, p, out);
    } catch (const hnnp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hnnp::UnknownSymbol& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hnnp::Overflow& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const hnnp::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const hnnp::WitnessTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const hnnp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
