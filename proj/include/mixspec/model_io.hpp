#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "mixspec/embeddings.hpp"
#include "mixspec/errors.hpp"
#include "mixspec/interface.hpp"
#include "mixspec/lifting.hpp"
#include "mixspec/mmdp.hpp"

namespace mixspec {

// Malformed JSON text.
class syntax_error : public error {
public:
    syntax_error(const std::string& what, std::size_t line, std::size_t column)
        : error(what), line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

// Well-formed JSON of the wrong shape; `path` is a JSON pointer to the offending node.
class schema_error : public error {
public:
    schema_error(const std::string& what, std::string path) : error(what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

enum class ModelKind { mixed_system, mmdp, interface, pa, mc, cmc, relation, witness };

using ModelBody = std::variant<MixedSystem, Mmdp, MixedInterface, ProbAutomaton, MarkovChain, ConstraintMarkovChain,
                               StateRelation, CouplingWitness>;

struct ModelDocument {
    ModelKind kind;
    int version = 1;
    ModelBody body;
};

inline constexpr int format_version = 1;

std::string kind_name(ModelKind kind);
ModelDocument make_document(ModelBody body);

// Throws syntax_error, schema_error or validation_error.
ModelDocument parse_model(std::string_view text);
std::string serialize_model(const ModelDocument& doc);

ModelDocument load_model(const std::string& path);
void save_model(const ModelDocument& doc, const std::string& path);

nlohmann::json to_json(const State& q);
nlohmann::json to_json(const StateRelation& r);
nlohmann::json to_json(const CouplingWitness& w);
nlohmann::json to_json(const OutcomeTable& t);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const NamedVerdict& v);
std::string serialize_trace(const RunTrace& trace); // JSON lines, one step per line

// Script files for the run command: a JSON array of states or of action names.
std::vector<State> parse_state_script(std::string_view text);
std::vector<std::string> parse_action_script(std::string_view text);

} // namespace mixspec
