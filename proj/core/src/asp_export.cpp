#include "nsv/asp_export.hpp"

#include <cctype>
#include <sstream>

namespace nsv {

namespace {

// Lowercase-starting identifiers pass through; anything else is quoted so it
// grounds as a constant rather than a variable.
std::string atom_name(const std::string& name) {
    bool plain = !name.empty() && std::islower(static_cast<unsigned char>(name[0]));
    for (char c : name)
        plain = plain && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (plain) return name;
    return '"' + name + '"';
}

void emit_sum_expression(std::ostringstream& out, const WeightedSum& s,
                         const std::vector<int>& var_of_output) {
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        int coeff = s.terms[i].coefficient;
        if (i == 0) {
            if (coeff < 0) out << '-';
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        const int mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) out << mag << '*';
        out << 'V' << var_of_output[s.terms[i].output];
    }
}

}  // namespace

std::string export_asp(const Problem& p, MappingMode mode, bool exclude_intended) {
    validate_problem(p);
    for (Label c : p.concepts)
        if (c < 0)
            fail(ErrorKind::Unsupported,
                 "answer-set export requires nonnegative concept labels");
    if (mode == MappingMode::Bijection && p.outputs.size() != p.concepts.size())
        fail(ErrorKind::Mode,
             "bijection mode requires equally many outputs and concepts");

    std::ostringstream out;
    for (const auto& o : p.outputs) out << "neural(" << atom_name(o) << ").\n";
    for (Label c : p.concepts) out << "concept(" << c << ").\n";
    out << '\n';
    out << "1 { maps_to(N,S) : concept(S) } 1 :- neural(N).\n";
    if (mode == MappingMode::Bijection)
        out << "1 { maps_to(N,S) : neural(N) } 1 :- concept(S).\n";
    out << '\n';

    bool any_alt = false;
    for (const auto& c : p.constraints)
        if (std::holds_alternative<AltClause>(c)) any_alt = true;
    if (any_alt) {
        for (std::size_t i = 0; i < p.outputs.size(); ++i)
            out << "intended(" << atom_name(p.outputs[i]) << ',' << p.intended[i]
                << ").\n";
        out << "alt :- maps_to(N,V), intended(N,W), V != W.\n\n";
    }

    int table_counter = 0;
    int clause_counter = 0;
    for (const auto& c : p.constraints) {
        if (const auto* s = std::get_if<WeightedSum>(&c)) {
            // One body atom and one variable per distinct output; repeated
            // outputs reuse the variable.
            std::vector<int> var_of_output(p.outputs.size(), -1);
            std::ostringstream body;
            int next = 0;
            for (const auto& t : s->terms) {
                if (var_of_output[t.output] != -1) continue;
                var_of_output[t.output] = next;
                if (next) body << ", ";
                body << "maps_to(" << atom_name(p.outputs[t.output]) << ",V"
                     << next << ")";
                ++next;
            }
            out << ":- " << body.str() << ", ";
            emit_sum_expression(out, *s, var_of_output);
            out << " != " << s->target << ".\n";
        } else if (const auto* m = std::get_if<ModSucc>(&c)) {
            out << ":- maps_to(" << atom_name(p.outputs[m->src]) << ",V0), maps_to("
                << atom_name(p.outputs[m->dst]) << ",V1), V1 \\ " << m->modulus
                << " != (V0 + 1) \\ " << m->modulus << ".\n";
        } else if (const auto* pin = std::get_if<Pin>(&c)) {
            out << ":- not maps_to(" << atom_name(p.outputs[pin->output]) << ','
                << pin->value << ").\n";
        } else if (const auto* d = std::get_if<Domain>(&c)) {
            out << ":- maps_to(" << atom_name(p.outputs[d->output]) << ",V)";
            for (Label v : d->allowed) out << ", V != " << v;
            out << ".\n";
        } else if (const auto* d = std::get_if<PairDomain>(&c)) {
            for (int output : {d->first, d->second})
                out << ":- maps_to(" << atom_name(p.outputs[output]) << ",V), V != "
                    << d->low << ", V != " << d->high << ".\n";
        } else if (const auto* t = std::get_if<Table>(&c)) {
            const std::string pred = "allowed" + std::to_string(table_counter++);
            for (const auto& row : t->rows) {
                out << pred << '(';
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << row[i];
                out << ").\n";
            }
            out << ":- ";
            for (std::size_t i = 0; i < t->outputs.size(); ++i)
                out << "maps_to(" << atom_name(p.outputs[t->outputs[i]]) << ",V" << i
                    << "), ";
            out << "not " << pred << '(';
            for (std::size_t i = 0; i < t->outputs.size(); ++i)
                out << (i ? "," : "") << 'V' << i;
            out << ").\n";
        } else if (const auto* s2 = std::get_if<PinSet>(&c)) {
            for (const auto& pin : s2->pins)
                out << ":- not maps_to(" << atom_name(p.outputs[pin.output]) << ','
                    << pin.value << ").\n";
        } else if (const auto* a = std::get_if<AltClause>(&c)) {
            const std::string pred = "satisfied" + std::to_string(clause_counter++);
            for (const auto& l : a->literals)
                out << pred << " :- maps_to(" << atom_name(p.outputs[l.output])
                    << ',' << l.value << ").\n";
            out << ":- alt, not " << pred << ".\n";
        }
    }

    if (exclude_intended) {
        out << '\n';
        if (p.outputs.empty()) {
            // The only mapping is the empty intended one; excluding it leaves
            // no answer sets.
            out << "excluded.\n:- excluded.\n";
        } else {
            out << ":- ";
            for (std::size_t i = 0; i < p.outputs.size(); ++i)
                out << (i ? ", " : "") << "maps_to(" << atom_name(p.outputs[i])
                    << ',' << p.intended[i] << ')';
            out << ".\n";
        }
    }

    out << "\n#show maps_to/2.\n";
    return out.str();
}

}  // namespace nsv
