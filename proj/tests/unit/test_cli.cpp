#include <doctest.h>

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fixtures;
using cli::fixture;

TEST_CASE("cli semantics") {
    auto r = cli::run({"semantics", fixture("s_fig2.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "w1 7/10 {x=0}\nw2 3/10 {x=0} {x=1}\n");
}

TEST_CASE("cli lift") {
    std::string witness = cli::scratch_dir() + "/witness.json";
    auto yes = cli::run({"lift", fixture("lift_left.json"), fixture("lift_right.json"), "--relation",
                         fixture("rho_positive.json"), "--witness", witness});
    CHECK(yes.code == 0);
    ModelDocument doc = load_model(witness);
    CHECK(oracle::coupling_valid(std::get<CouplingWitness>(doc.body), s_lift_left(), s_lift_right(), rho_lift_positive()));

    auto no = cli::run({"lift", fixture("lift_left.json"), fixture("lift_right.json"), "--relation", fixture("rho_negative.json")});
    CHECK(no.code == 1);

    auto json = cli::run({"--json", "lift", fixture("lift_left.json"), fixture("lift_right.json"), "--relation",
                          fixture("rho_positive.json")});
    CHECK(json.code == 0);
    CHECK(nlohmann::json::parse(json.out).contains("witness"));
}

TEST_CASE("cli verdict examples") {
    CHECK(cli::run({"iface", "refines", fixture("i_left.json"), fixture("i_right.json")}).code == 0);
    CHECK(cli::run({"iface", "refines", fixture("i_right.json"), fixture("i_left.json")}).code == 1);
    CHECK(cli::run({"equiv", fixture("s_fig2.json"), fixture("s_fig2.json")}).code == 0);
    CHECK(cli::run({"equiv", fixture("s_fig2.json"), fixture("s_det.json")}).code == 1);
    CHECK(cli::run({"mmdp", "simulates", fixture("m_det.json"), fixture("m_fig_loop.json")}).code == 0);
    CHECK(cli::run({"mmdp", "simulates", fixture("m_fig_loop.json"), fixture("m_det.json")}).code == 1);
    CHECK(cli::run({"validate", fixture("c_split.json")}).code == 0);
}

TEST_CASE("cli run is reproducible") {
    auto a = cli::run({"run", fixture("m_fig_loop.json"), "--steps", "20", "--seed", "4", "--resolver", "random"});
    auto b = cli::run({"run", fixture("m_fig_loop.json"), "--steps", "20", "--seed", "4", "--resolver", "random"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 20);
}

TEST_CASE("cli satisfaction matches the library on the fixture matrix") {
    for (const auto& [mn, m] : all_models())
        for (const auto& [cn, c] : all_interfaces()) {
            CAPTURE(mn);
            CAPTURE(cn);
            int expected = satisfies(m, c).holds ? 0 : 1;
            CHECK(cli::run({"iface", "sat", fixture(mn + ".json"), fixture(cn + ".json")}).code == expected);
        }
}
