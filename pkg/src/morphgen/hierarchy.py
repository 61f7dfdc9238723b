"""The compiled form hierarchy: a discrimination tree over feature structures.

Building inserts the declared nodes under an implicit root ``*``, compiles
rewrite rules onto the nodes of the same name, attaches allomorph and
equivalence declarations, and validates the result. Classification descends
from the root, at each step entering the first child (declaration order)
whose condition holds on the input, and stops when no child matches.

Generating a form classifies the input and then acts on the node reached:
an allomorph node returns the value of its feature (or the base feature
when absent), a rule-bearing node rewrites the base string, and a bare node
passes the base string through unchanged with a logged warning (an error in
strict mode). Full generation runs a configurable sequence of passes, each
injecting one feature-value pair and feeding the previous pass's output in
as the base string; the default two passes select the stem and then attach
the inflectional affixes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .errors import (
    GrammarBuildError,
    MissingBaseFeature,
    RuleCompileError,
    UnclassifiableInput,
    UnhandledForm,
)
from .featstruct import eval_condition, fs_get, fs_with
from .grammar import (
    CharClass,
    MorphAllomorph,
    MorphEquivalence,
    MorphForm,
    MorphRule,
    default_char_classes,
)
from .rewrite import apply_rule, compile_rule

logger = logging.getLogger(__name__)

ROOT = "*"

# Feature-value pairs injected by the default two-call generation protocol:
# first pass selects the stem, second attaches prefixes and suffixes.
DEFAULT_PASSES = (("gen", "stem"), ("gen", "psfix"))


@dataclass
class MorphNode:
    name: str
    parent: str | None
    condition: object | None
    children: list = field(default_factory=list)
    rule: object | None = None
    allomorph_feature: str | None = None
    equivalent_to: str | None = None


@dataclass
class MorphHierarchy:
    nodes: dict
    classes: dict
    root: str = ROOT
    base_feature: str = "stem"

    def node(self, name):
        return self.nodes[name]

    def is_leaf(self, name):
        return not self.nodes[name].children

    def is_preleaf(self, name):
        children = self.nodes[name].children
        return bool(children) and all(self.is_leaf(c) for c in children)


def build_hierarchy(decls, base_feature="stem"):
    """Assemble declarations into a validated MorphHierarchy.

    Node references (parents, rule names, equivalence members) may point
    forward in the declaration list. Raises GrammarBuildError carrying one
    diagnostic per problem found.
    """
    errors = []

    def located(decl, message):
        if decl.line is not None:
            return f"line {decl.line}: {message}"
        return message

    nodes = {ROOT: MorphNode(ROOT, None, None)}
    inserted = []
    for decl in decls:
        if not isinstance(decl, MorphForm):
            continue
        if decl.name in nodes:
            errors.append(located(decl, f"duplicate node name '{decl.name}'"))
            continue
        nodes[decl.name] = MorphNode(decl.name, decl.parent, decl.condition)
        inserted.append(decl)
    for decl in inserted:
        if decl.parent not in nodes:
            errors.append(located(decl, f"unknown parent '{decl.parent}' "
                                        f"for node '{decl.name}'"))
        else:
            nodes[decl.parent].children.append(decl.name)
    _check_reachable(nodes, errors)

    classes = {c.name: c for c in default_char_classes()}
    for decl in decls:
        if isinstance(decl, CharClass):
            classes[decl.name] = decl

    for decl in decls:
        if isinstance(decl, MorphRule):
            node = nodes.get(decl.name)
            if node is None:
                errors.append(located(decl, f"rule '{decl.name}' has no node "
                                            "of the same name"))
                continue
            if node.rule is not None:
                errors.append(located(decl, f"node '{decl.name}' already has "
                                            "a rule"))
                continue
            try:
                node.rule = compile_rule(decl, classes)
            except RuleCompileError as exc:
                errors.append(located(decl, str(exc)))
        elif isinstance(decl, MorphAllomorph):
            node = nodes.get(decl.node)
            if node is None:
                errors.append(located(decl, f"morph-allomorph names unknown "
                                            f"node '{decl.node}'"))
            elif node.allomorph_feature is not None:
                errors.append(located(decl, f"node '{decl.node}' already has "
                                            "an allomorph feature"))
            else:
                node.allomorph_feature = decl.feature

    for decl in decls:
        if not isinstance(decl, MorphEquivalence):
            continue
        if decl.source not in nodes:
            errors.append(located(decl, f"morph-equivalence names unknown "
                                        f"node '{decl.source}'"))
            continue
        for target in decl.targets:
            node = nodes.get(target)
            if node is None:
                errors.append(located(decl, f"morph-equivalence names "
                                            f"unknown node '{target}'"))
            elif target == decl.source:
                errors.append(located(decl, f"node '{target}' cannot be "
                                            "equivalenced to itself"))
            elif node.equivalent_to is not None:
                errors.append(located(decl, f"node '{target}' is already "
                                            "equivalenced"))
            else:
                node.equivalent_to = decl.source

    hierarchy = MorphHierarchy(nodes, classes, base_feature=base_feature)
    _validate_attachments(hierarchy, errors)
    if errors:
        raise GrammarBuildError(errors)
    return hierarchy


def _check_reachable(nodes, errors):
    # Every node must reach the root through its parent chain; a node list
    # with forward references can otherwise smuggle in a parent cycle.
    for name in nodes:
        seen = set()
        current = name
        while current is not None and current in nodes:
            if current in seen:
                errors.append(f"node '{name}' is caught in a parent cycle")
                break
            seen.add(current)
            current = nodes[current].parent


def _validate_attachments(h, errors):
    for name, node in h.nodes.items():
        attached = [
            label for label, value in (
                ("rule", node.rule),
                ("allomorph", node.allomorph_feature),
                ("equivalence", node.equivalent_to),
            ) if value is not None
        ]
        if len(attached) > 1:
            errors.append(f"node '{name}' has more than one attachment "
                          f"({', '.join(attached)})")
        if node.rule is not None and not _leaf_or_preleaf(h, name):
            errors.append(f"rules may only attach to leaf or pre-leaf nodes; "
                          f"'{name}' is an internal node")
        if node.equivalent_to is not None:
            if not _leaf_or_preleaf(h, name):
                errors.append(f"equivalences may only attach to leaf or "
                              f"pre-leaf nodes; '{name}' is an internal node")
            target = h.nodes.get(node.equivalent_to)
            if target is not None and target.rule is None:
                errors.append(f"equivalence target '{node.equivalent_to}' "
                              f"carries no rule of its own")


def _leaf_or_preleaf(h, name):
    return h.is_leaf(name) or h.is_preleaf(name)


def classify(h, fs):
    """Descend the tree and return the name of the node reached.

    At every node the children are tried in declaration order and the first
    whose condition holds is entered; descent stops when none matches.
    """
    node = h.nodes[h.root]
    while True:
        for child_name in node.children:
            child = h.nodes[child_name]
            if eval_condition(child.condition, fs):
                node = child
                break
        else:
            break
    if node.name == h.root:
        raise UnclassifiableInput(
            "no child of the root matches the feature structure")
    return node.name


def resolve_rule(h, name):
    """The rule effective at a node: its own, or its equivalence target's."""
    node = h.nodes[name]
    if node.rule is not None:
        return node.rule
    if node.equivalent_to is not None:
        return h.nodes[node.equivalent_to].rule
    return None


@dataclass(frozen=True)
class PassTrace:
    """What one generation pass did: where it classified and what it produced."""

    label: str
    node: str
    action: str  # "rule" | "allomorph" | "identity"
    input: str
    output: str
    rule_name: str | None = None
    via_equivalence: bool = False
    clause_index: int | None = None
    feature: str | None = None
    feature_present: bool | None = None


def format_pass_trace(trace):
    """One-line rendering of a PassTrace for diagnostic output."""
    if trace.action == "rule":
        via = " via=equivalence" if trace.via_equivalence else ""
        detail = f"rule={trace.rule_name}{via} clause={trace.clause_index}"
    elif trace.action == "allomorph":
        detail = f"allomorph={trace.feature}"
        if not trace.feature_present:
            detail += " (absent, base kept)"
    else:
        detail = "identity"
    return (f"[{trace.label}] node={trace.node} {detail} "
            f"\"{trace.input}\" -> \"{trace.output}\"")


def _run_pass(h, fs, label, strict):
    base = fs_get(fs, (h.base_feature,))
    if not isinstance(base, str):
        raise MissingBaseFeature(
            f"feature structure has no string-valued '{h.base_feature}' feature")
    name = classify(h, fs)
    node = h.nodes[name]
    if node.allomorph_feature is not None:
        alt = fs_get(fs, (node.allomorph_feature,))
        present = isinstance(alt, str)
        return PassTrace(label, name, "allomorph", base,
                         alt if present else base,
                         feature=node.allomorph_feature,
                         feature_present=present)
    rule = resolve_rule(h, name)
    if rule is not None:
        result = apply_rule(rule, base)
        return PassTrace(label, name, "rule", base, result.output,
                         rule_name=rule.name,
                         via_equivalence=node.rule is None,
                         clause_index=result.clause_index)
    if strict:
        raise UnhandledForm(
            f"node '{name}' has no rule, allomorph feature, or equivalence")
    logger.warning("node '%s' has no rule, allomorph feature, or equivalence; "
                   "base value passed through unchanged", name)
    return PassTrace(label, name, "identity", base, base)


def generate_once(h, fs, *, strict=False):
    """Single-pass generation: classify ``fs`` and act on the node reached."""
    return _run_pass(h, fs, "gen", strict).output


def generate_once_with_trace(h, fs, *, strict=False):
    trace = _run_pass(h, fs, "gen", strict)
    return trace.output, [trace]


def generate_with_trace(h, fs, *, passes=DEFAULT_PASSES, strict=False):
    """Multi-pass generation returning the surface string and per-pass traces.

    Each pass evaluates the original structure plus that pass's injected
    feature-value pair, with the base feature replaced by the previous
    pass's output; the injected features never leak back to the caller.
    """
    if not passes:
        raise ValueError("generation needs at least one pass")
    traces = []
    output = None
    for feature, value in passes:
        staged = fs_with(fs, feature, value)
        if output is not None:
            staged = fs_with(staged, h.base_feature, output)
        trace = _run_pass(h, staged, value, strict)
        traces.append(trace)
        output = trace.output
    return output, traces


def generate(h, fs, *, passes=DEFAULT_PASSES, strict=False):
    """Generate the fully inflected surface string for ``fs``."""
    output, _ = generate_with_trace(h, fs, passes=passes, strict=strict)
    return output
