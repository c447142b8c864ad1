#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mixspec/embeddings.hpp"
#include "mixspec/interface.hpp"
#include "mixspec/lifting.hpp"
#include "mixspec/mmdp.hpp"
#include "mixspec/model_io.hpp"

namespace fixtures {

using namespace mixspec;

inline const std::string alpha = "a";

// x in {0,1}, observable; q0 = {x=0}, q1 = {x=1}.
VariableSet vars_x();
State q0();
State q1();

// 7/10 -> {q0}, 3/10 -> {q0,q1}
MixedSystem s_fig2();
// 7/10 -> {q0}, 3/10 -> {q1}: the probabilistic choice without the nondeterministic one
MixedSystem s_det();
MixedSystem dirac_x(const State& q, std::string id = "w");

// Lifted relation example over x1 and x2.
MixedSystem s_lift_left();
MixedSystem s_lift_right();
StateRelation rho_lift_positive();
StateRelation rho_lift_negative();

Mmdp m_fig();      // q0 -a-> S_fig2
Mmdp m_fig_loop(); // q0, q1 -a-> S_fig2
Mmdp m_det();      // q0, q1 -a-> s_det
Mmdp m_stay();     // q0 -a-> Dirac(q0)
Mmdp m_idle();     // no transitions
Mmdp m_jump();     // q0 -a-> Dirac(q1), q1 idle

MixedInterface i_loop();        // may a -> {S_fig2} at both states
MixedInterface i_right();       // may a -> {S_fig2, Dirac(q0)} at both states
MixedInterface i_left();        // must + may a -> {s_det} at both states
MixedInterface i_no_alpha();    // no transitions
MixedInterface i_must_q0();     // q0: must + may a -> {Dirac(q0)}
MixedInterface i_cascade();     // pruning removes both states and the initial one
MixedInterface i_partial();     // pruning removes q1 only

// Non-completeness pair: every model of c1 is a model of c2, yet c1 does not refine c2.
MixedInterface c_chain();
MixedInterface c_split();

std::vector<std::pair<std::string, Mmdp>> all_models();
std::vector<std::pair<std::string, MixedInterface>> all_interfaces();

ProbAutomaton pa_example();
MarkovChain mc_example();
ConstraintMarkovChain cmc_example();

// Every fixture as a document, keyed by its file name under fixtures/.
std::vector<std::pair<std::string, ModelDocument>> golden_documents();

// Renaming of variable x to `to` (same domain and observability).
MixedSystem rename(const MixedSystem& s, const std::string& from, const std::string& to);
MixedState rename(const MixedState& s, const std::string& from, const std::string& to);
Mmdp rename(const Mmdp& m, const std::string& from, const std::string& to);
MixedInterface rename(const MixedInterface& c, const std::string& from, const std::string& to);

} // namespace fixtures
