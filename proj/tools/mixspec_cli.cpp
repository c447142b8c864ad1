// Command-line front end. Exit codes: 0 yes/ok, 1 no, 2 usage or parse error, 3 invalid model.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixspec/model_io.hpp"

using namespace mixspec;
using nlohmann::json;

namespace {

enum Exit { ok = 0, no = 1, usage = 2, invalid = 3 };

class usage_error : public error {
public:
    using error::error;
};

bool json_output = false;

template <class T>
T load_as(const std::string& path) {
    ModelDocument doc = load_model(path);
    if (auto* x = std::get_if<T>(&doc.body))
        return std::move(*x);
    throw usage_error("'" + path + "' holds a model of kind '" + kind_name(doc.kind) + "', which this command does not take");
}

void emit(const ModelDocument& doc, const std::string& out) {
    if (out.empty())
        std::cout << serialize_model(doc);
    else
        save_model(doc, out);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw usage_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string states_text(const std::vector<State>& states) {
    std::string out;
    for (const auto& q : states)
        out += (out.empty() ? "{" : " {") + q.str() + "}";
    return out;
}

int report_verdict(const Verdict& v) {
    if (json_output) {
        std::cout << to_json(v).dump(2) << "\n";
    } else if (v.holds) {
        std::cout << "yes\n";
    } else {
        std::cout << "no";
        if (v.counterexample) {
            const auto& c = *v.counterexample;
            std::cout << ": at ({" << c.left.str() << "}, {" << c.right.str() << "})";
            if (!c.action.empty())
                std::cout << " action '" << c.action << "'";
            std::cout << ": " << c.reason;
        }
        std::cout << "\n";
    }
    return v.holds ? ok : no;
}

int report_verdict(const NamedVerdict& v) {
    if (json_output) {
        std::cout << to_json(v).dump(2) << "\n";
    } else if (v.holds) {
        std::cout << "yes\n";
    } else {
        std::cout << "no";
        if (v.counterexample)
            std::cout << ": at (" << v.counterexample->left << ", " << v.counterexample->right
                      << "): " << v.counterexample->reason;
        std::cout << "\n";
    }
    return v.holds ? ok : no;
}

int report_bool(bool holds) {
    if (json_output)
        std::cout << json{{"holds", holds}}.dump(2) << "\n";
    else
        std::cout << (holds ? "yes" : "no") << "\n";
    return holds ? ok : no;
}

Resolver parse_resolver(const std::string& spec) {
    if (spec == "min")
        return Resolver::min();
    if (spec == "random")
        return Resolver::random();
    if (spec.rfind("script:", 0) == 0)
        return Resolver::scripted(parse_state_script(read_text(spec.substr(7))));
    throw usage_error("unknown resolver '" + spec + "' (expected min, random or script:FILE)");
}

Scheduler parse_scheduler(const std::string& spec) {
    if (spec == "first")
        return Scheduler::first();
    if (spec == "random")
        return Scheduler::random();
    if (spec.rfind("script:", 0) == 0)
        return Scheduler::scripted(parse_action_script(read_text(spec.substr(7))));
    throw usage_error("unknown scheduler '" + spec + "' (expected first, random or script:FILE)");
}

int cmd_validate(const std::string& path) {
    ModelDocument doc = load_model(path);
    json report{{"kind", kind_name(doc.kind)}, {"valid", true}};
    if (auto* m = std::get_if<Mmdp>(&doc.body)) {
        auto r = validate_mmdp(*m);
        report["deterministic"] = r.deterministic;
        report["live"] = r.live;
        report["issues"] = r.issues;
    }
    if (json_output) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "valid " << kind_name(doc.kind) << "\n";
        if (report.contains("live")) {
            std::cout << "deterministic: yes\nlive: " << (report["live"].get<bool>() ? "yes" : "no") << "\n";
            for (const auto& issue : report["issues"])
                std::cout << "  " << issue.get<std::string>() << "\n";
        }
    }
    return ok;
}

int cmd_semantics(const std::string& path) {
    OutcomeTable t = outcome_distribution(load_as<MixedSystem>(path));
    if (json_output) {
        std::cout << to_json(t).dump(2) << "\n";
        return ok;
    }
    for (const auto& row : t)
        std::cout << row.atom << " " << row.weight.str() << " " << states_text(row.states) << "\n";
    return ok;
}

int cmd_lift(const std::string& a, const std::string& b, const std::string& rel, const std::string& witness_out) {
    MixedSystem s1 = load_as<MixedSystem>(a), s2 = load_as<MixedSystem>(b);
    StateRelation rho = load_as<StateRelation>(rel);
    auto w = lift_check(s1, s2, rho);
    if (w && !witness_out.empty())
        save_model(make_document(*w), witness_out);
    if (json_output) {
        json out{{"holds", w.has_value()}};
        if (w)
            out["witness"] = to_json(*w);
        std::cout << out.dump(2) << "\n";
    } else if (w) {
        std::cout << "yes\n";
        if (witness_out.empty())
            for (const auto& [k, v] : w->entries)
                std::cout << "w(" << k.first << "," << k.second << ") = " << v.str() << "\n";
    } else {
        std::cout << "no\n";
    }
    return w ? ok : no;
}

int cmd_run(const std::string& path, std::size_t steps, std::uint64_t seed, const std::string& resolver,
            const std::string& scheduler, const std::string& out) {
    Mmdp m = load_as<Mmdp>(path);
    RunTrace trace = mmdp_run(m, steps, seed, parse_resolver(resolver), parse_scheduler(scheduler));
    std::string text = serialize_trace(trace);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f)
            throw usage_error("cannot write '" + out + "'");
        f << text;
    }
    return ok;
}

int cmd_embed(const std::string& which, const std::string& path, const std::string& out) {
    if (which == "pa2mmdp")
        emit(make_document(pa_to_mmdp(load_as<ProbAutomaton>(path))), out);
    else if (which == "mmdp2pa")
        emit(make_document(mmdp_to_pa(load_as<Mmdp>(path))), out);
    else if (which == "mc2mmdp")
        emit(make_document(mc_to_mmdp(load_as<MarkovChain>(path))), out);
    else if (which == "cmc2iface")
        emit(make_document(cmc_to_interface(load_as<ConstraintMarkovChain>(path))), out);
    else
        throw usage_error("unknown embedding '" + which + "'");
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed nondeterministic-probabilistic systems, MMDPs and modal mixed interfaces"};
    app.require_subcommand(1);
    app.add_flag("--json", json_output, "Emit machine-readable JSON verdicts");

    std::function<int()> action;
    std::string a, b, c, out, rel, witness_out, which;

    auto two_files = [&](CLI::App* sub) {
        sub->add_option("A", a, "First model")->required()->check(CLI::ExistingFile);
        sub->add_option("B", b, "Second model")->required()->check(CLI::ExistingFile);
    };
    auto one_file = [&](CLI::App* sub) {
        sub->add_option("FILE", a, "Model file")->required()->check(CLI::ExistingFile);
    };
    auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", out, "Output file (default: stdout)"); };

    auto* validate = app.add_subcommand("validate", "Parse and validate a model file");
    one_file(validate);
    validate->callback([&] { action = [&] { return cmd_validate(a); }; });

    auto* compress_cmd = app.add_subcommand("compress", "Merge atoms with identical constraint rows");
    one_file(compress_cmd);
    output(compress_cmd);
    compress_cmd->callback([&] { action = [&] { emit(make_document(compress(load_as<MixedSystem>(a))), out); return int(ok); }; });

    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two mixed systems");
    two_files(equiv);
    equiv->callback([&] { action = [&] { return report_bool(equivalent(load_as<MixedSystem>(a), load_as<MixedSystem>(b))); }; });

    auto* product_cmd = app.add_subcommand("product", "Parallel product of two mixed systems");
    two_files(product_cmd);
    output(product_cmd);
    product_cmd->callback([&] {
        action = [&] { emit(make_document(product(load_as<MixedSystem>(a), load_as<MixedSystem>(b))), out); return int(ok); };
    });

    auto* semantics = app.add_subcommand("semantics", "Print the outcome distribution of a mixed system");
    one_file(semantics);
    semantics->callback([&] { action = [&] { return cmd_semantics(a); }; });

    auto* lift = app.add_subcommand("lift", "Decide whether a state relation lifts to two mixed systems");
    two_files(lift);
    lift->add_option("--relation", rel, "Relation file")->required()->check(CLI::ExistingFile);
    lift->add_option("--witness", witness_out, "Write the coupling witness here");
    lift->callback([&] { action = [&] { return cmd_lift(a, b, rel, witness_out); }; });

    std::size_t steps = 10;
    std::uint64_t seed = 0;
    std::string resolver = "min", scheduler = "first";
    auto* run = app.add_subcommand("run", "Simulate a run of an MMDP (JSON lines)");
    run->add_option("MMDP", a, "MMDP file")->required()->check(CLI::ExistingFile);
    run->add_option("--steps", steps, "Number of steps")->capture_default_str();
    run->add_option("--seed", seed, "Random seed")->capture_default_str();
    run->add_option("--resolver", resolver, "min | random | script:FILE")->capture_default_str();
    run->add_option("--scheduler", scheduler, "first | random | script:FILE")->capture_default_str();
    output(run);
    run->callback([&] { action = [&] { return cmd_run(a, steps, seed, resolver, scheduler, out); }; });

    auto* mmdp = app.add_subcommand("mmdp", "MMDP operations");
    mmdp->require_subcommand(1);
    auto* mmdp_prod = mmdp->add_subcommand("product", "Shared-variable product");
    two_files(mmdp_prod);
    output(mmdp_prod);
    mmdp_prod->callback([&] {
        action = [&] { emit(make_document(mmdp_product(load_as<Mmdp>(a), load_as<Mmdp>(b))), out); return int(ok); };
    });
    auto* mmdp_sim = mmdp->add_subcommand("simulates", "Does B simulate A?");
    two_files(mmdp_sim);
    mmdp_sim->callback([&] { action = [&] { return report_verdict(mmdp_simulates(load_as<Mmdp>(a), load_as<Mmdp>(b))); }; });

    auto* iface = app.add_subcommand("iface", "Mixed interface operations");
    iface->require_subcommand(1);
    auto* prune_cmd = iface->add_subcommand("prune", "Remove inconsistent states");
    one_file(prune_cmd);
    output(prune_cmd);
    prune_cmd->callback([&] { action = [&] { emit(make_document(prune(load_as<MixedInterface>(a))), out); return int(ok); }; });
    auto* sat = iface->add_subcommand("sat", "Does the MMDP satisfy the interface?");
    sat->add_option("MMDP", a, "MMDP file")->required()->check(CLI::ExistingFile);
    sat->add_option("IFACE", b, "Interface file")->required()->check(CLI::ExistingFile);
    sat->callback([&] { action = [&] { return report_verdict(satisfies(load_as<Mmdp>(a), load_as<MixedInterface>(b))); }; });
    auto* ref = iface->add_subcommand("refines", "Does A refine B?");
    two_files(ref);
    ref->callback([&] { action = [&] { return report_verdict(refines(load_as<MixedInterface>(a), load_as<MixedInterface>(b))); }; });
    auto* conj = iface->add_subcommand("conjoin", "Conjunction (pruned)");
    two_files(conj);
    output(conj);
    conj->callback([&] {
        action = [&] { emit(make_document(conjoin(load_as<MixedInterface>(a), load_as<MixedInterface>(b))), out); return int(ok); };
    });
    auto* comp = iface->add_subcommand("compose", "Parallel composition");
    two_files(comp);
    output(comp);
    comp->callback([&] {
        action = [&] {
            emit(make_document(compose_interfaces(load_as<MixedInterface>(a), load_as<MixedInterface>(b))), out);
            return int(ok);
        };
    });

    auto* embed = app.add_subcommand("embed", "Translate PA/MC/CMC models");
    embed->add_option("WHICH", which, "pa2mmdp | mmdp2pa | mc2mmdp | cmc2iface")
        ->required()
        ->check(CLI::IsMember({"pa2mmdp", "mmdp2pa", "mc2mmdp", "cmc2iface"}));
    embed->add_option("FILE", a, "Model file")->required()->check(CLI::ExistingFile);
    output(embed);
    embed->callback([&] { action = [&] { return cmd_embed(which, a, out); }; });

    auto* cmc = app.add_subcommand("cmc", "Constraint Markov chain checks");
    cmc->require_subcommand(1);
    auto* cmc_sat = cmc->add_subcommand("sat", "Does the MC satisfy the CMC?");
    cmc_sat->add_option("MC", a, "Markov chain file")->required()->check(CLI::ExistingFile);
    cmc_sat->add_option("CMC", b, "CMC file")->required()->check(CLI::ExistingFile);
    cmc_sat->callback([&] {
        action = [&] { return report_verdict(mc_satisfies_cmc(load_as<MarkovChain>(a), load_as<ConstraintMarkovChain>(b))); };
    });
    auto* cmc_ref = cmc->add_subcommand("refines", "Does A weakly refine B?");
    two_files(cmc_ref);
    cmc_ref->callback([&] {
        action = [&] {
            return report_verdict(cmc_weak_refines(load_as<ConstraintMarkovChain>(a), load_as<ConstraintMarkovChain>(b)));
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        return action ? action() : int(usage);
    } catch (const syntax_error& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return usage;
    } catch (const schema_error& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return usage;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const validation_error& e) {
        std::cerr << "invalid model: " << e.what() << "\n";
        return invalid;
    } catch (const inconsistent_error& e) {
        std::cerr << "invalid model: " << e.what() << "\n";
        return invalid;
    } catch (const bound_exceeded& e) {
        std::cerr << "invalid model: " << e.what() << "\n";
        return invalid;
    } catch (const resolver_exhausted& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
}
