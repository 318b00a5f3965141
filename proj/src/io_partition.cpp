#include "speccc/io_partition.hpp"

#include <sstream>

namespace speccc::io_partition {

using ltl::Formula;
using ltl::Op;

std::string to_string(Rule rule) {
  switch (rule) {
    case Rule::Default: return "default";
    case Rule::Antecedent: return "antecedent";
    case Rule::ReleaseCondition: return "release-condition";
    case Rule::BothSides: return "both-sides";
    case Rule::Conflict: return "conflict";
    case Rule::Promotion: return "promotion";
    case Rule::Override: return "override";
  }
  return "?";
}

synthesis::Signature Partition::signature() const {
  return {{unified_inputs.begin(), unified_inputs.end()},
          {unified_outputs.begin(), unified_outputs.end()}};
}

namespace {

// Atoms occurring without an enclosing negation.
void positive_atoms(const Formula& f, bool negated, std::set<std::string>& out) {
  switch (f.op()) {
    case Op::Atom:
      if (!negated) out.insert(f.name());
      return;
    case Op::True:
    case Op::False:
      return;
    case Op::Not:
      positive_atoms(f.lhs(), !negated, out);
      return;
    default:
      positive_atoms(f.lhs(), negated, out);
      if (f.is_binary()) positive_atoms(f.rhs(), negated, out);
  }
}

struct Claims {
  std::map<std::string, Rule> input;
  std::set<std::string> forced_output;
};

void classify(const Formula& f, Claims& claims) {
  if (f.op() == Op::Atom || f.op() == Op::True || f.op() == Op::False) return;
  const bool implication = f.op() == Op::Implies;
  const bool waiting = f.op() == Op::Until || f.op() == Op::WeakUntil;
  if (implication || waiting) {
    const Formula& trigger = implication ? f.lhs() : f.rhs();
    for (const auto& a : ltl::atoms_of(trigger))
      claims.input.try_emplace(a, implication ? Rule::Antecedent : Rule::ReleaseCondition);
    std::set<std::string> left, right;
    positive_atoms(f.lhs(), false, left);
    positive_atoms(f.rhs(), false, right);
    for (const auto& a : left)
      if (right.contains(a)) claims.forced_output.insert(a);
  }
  classify(f.lhs(), claims);
  if (f.is_binary()) classify(f.rhs(), claims);
}

}  // namespace

RequirementPartition partition_requirement(const Formula& formula) {
  Claims claims;
  classify(formula, claims);
  RequirementPartition out;
  for (const auto& a : ltl::atoms_of(formula)) {
    if (claims.forced_output.contains(a)) {
      out.outputs.insert(a);
      out.rule[a] = Rule::BothSides;
    } else if (auto it = claims.input.find(a); it != claims.input.end()) {
      out.inputs.insert(a);
      out.rule[a] = it->second;
    } else {
      out.outputs.insert(a);
      out.rule[a] = Rule::Default;
    }
  }
  return out;
}

Partition unify(std::vector<std::pair<std::string, RequirementPartition>> per_requirement) {
  Partition p;
  p.per_requirement = std::move(per_requirement);
  std::map<std::string, Conflict> claims;
  for (const auto& [id, part] : p.per_requirement) {
    for (const auto& a : part.inputs) {
      auto& c = claims[a];
      c.variable = a;
      c.input_ids.push_back(id);
      p.provenance.try_emplace(a, part.rule.at(a));
    }
    for (const auto& a : part.outputs) {
      auto& c = claims[a];
      c.variable = a;
      c.output_ids.push_back(id);
    }
  }
  for (auto& [name, c] : claims) {
    if (!c.input_ids.empty() && !c.output_ids.empty()) {
      p.unified_outputs.insert(name);
      p.provenance[name] = Rule::Conflict;
      p.conflicts.push_back(std::move(c));
    } else if (!c.input_ids.empty()) {
      p.unified_inputs.insert(name);
    } else {
      p.unified_outputs.insert(name);
      // Keep the rule of the first requirement that classified it.
      for (const auto& [id, part] : p.per_requirement)
        if (auto it = part.rule.find(name); it != part.rule.end()) {
          p.provenance[name] = it->second;
          break;
        }
    }
  }
  if (p.unified_inputs.empty() && !p.unified_outputs.empty()) {
    const std::string promoted = *p.unified_outputs.begin();
    p.unified_outputs.erase(promoted);
    p.unified_inputs.insert(promoted);
    p.provenance[promoted] = Rule::Promotion;
    p.warnings.push_back("no input variable found; promoted " + promoted + " to input");
  }
  return p;
}

Partition partition_formulas(const std::vector<std::pair<std::string, Formula>>& formulas) {
  std::vector<std::pair<std::string, RequirementPartition>> parts;
  for (const auto& [id, f] : formulas) parts.emplace_back(id, partition_requirement(f));
  return unify(std::move(parts));
}

std::map<std::string, Role> parse_partition_file(std::string_view content) {
  std::map<std::string, Role> out;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    Role role;
    if (head == "inputs:") role = Role::Input;
    else if (head == "outputs:") role = Role::Output;
    else
      throw std::invalid_argument("partition line " + std::to_string(line_no) +
                                  ": expected \"inputs:\" or \"outputs:\"");
    for (std::string w; words >> w;) {
      auto [it, inserted] = out.emplace(w, role);
      if (!inserted && it->second != role)
        throw std::invalid_argument("partition line " + std::to_string(line_no) + ": " + w +
                                    " is both input and output");
    }
  }
  return out;
}

Partition apply_overrides(Partition p, const std::map<std::string, Role>& overrides) {
  for (const auto& [name, role] : overrides) {
    if (!p.unified_inputs.contains(name) && !p.unified_outputs.contains(name))
      throw UnknownVariable(name);
    p.unified_inputs.erase(name);
    p.unified_outputs.erase(name);
    (role == Role::Input ? p.unified_inputs : p.unified_outputs).insert(name);
    p.provenance[name] = Rule::Override;
  }
  if (auto problem = validate(p); !problem.empty()) throw std::logic_error(problem);
  return p;
}

std::string format_partition(const Partition& p) {
  std::string out = "inputs:";
  for (const auto& a : p.unified_inputs) out += " " + a;
  out += "\noutputs:";
  for (const auto& a : p.unified_outputs) out += " " + a;
  return out + "\n";
}

std::string format_report(const Partition& p) {
  std::ostringstream out;
  out << format_partition(p);
  for (const auto& [name, rule] : p.provenance) out << "  " << name << ": " << to_string(rule) << "\n";
  for (const auto& c : p.conflicts) {
    out << "conflict " << c.variable << ": input in";
    for (const auto& id : c.input_ids) out << " " << id;
    out << "; output in";
    for (const auto& id : c.output_ids) out << " " << id;
    out << "\n";
  }
  for (const auto& w : p.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string validate(const Partition& p) {
  for (const auto& a : p.unified_inputs)
    if (p.unified_outputs.contains(a)) return a + " is both input and output";
  for (const auto& [id, part] : p.per_requirement) {
    for (const auto& a : part.inputs)
      if (part.outputs.contains(a)) return a + " is both input and output in " + id;
    for (const auto* set : {&part.inputs, &part.outputs})
      for (const auto& a : *set)
        if (!p.unified_inputs.contains(a) && !p.unified_outputs.contains(a))
          return a + " from " + id + " is not classified";
  }
  return {};
}

}  // namespace speccc::io_partition
