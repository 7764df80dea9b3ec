"""
Model file loading and saving

Line-oriented format, one section per keyword, items terminated by ';':

    features: c f;
    configs: -- c- -f cf;        # or: configs: all;  or: configs: {} {c} {c, f};  or: 00 10 01 11;
    states: s0* s1 s2;           # '*' marks initial states
    props: r;                    # optional, fixes proposition order
    labels: s2: r;
    trans:
      s0 -pay[!f]-> s1;
      s1 -drink-> s2;            # missing guard means true

A line that does not start with a keyword continues the previous section.
'#' starts a comment.
"""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple, Union

from ..logic.featexpr import ConfigSpace, Feature, TrueExpr, format_feat_expr, parse_feat_expr
from ..utils.errors import FeatureExprError, ModelFormatError, ModelValidationError
from .transition_systems import Fts, FtsBuilder, validate_fts

logger = logging.getLogger('lifted_ctl.models')

SECTIONS = ("features", "configs", "states", "props", "labels", "trans")

_SECTION_RE = re.compile(r"^\s*(" + "|".join(SECTIONS) + r")\s*:(.*)$")
_NAME_RE = re.compile(r"^[A-Za-z0-9_.]+$")
_TRANS_RE = re.compile(
    r"^(?P<source>[A-Za-z0-9_.]+)\s*-\s*(?P<action>[A-Za-z_][A-Za-z0-9_.]*)\s*"
    r"(?:\[(?P<guard>[^\]]*)\])?\s*->\s*(?P<target>[A-Za-z0-9_.]+)$"
)
_ABSENT = "-0"
_PRESENT = "1"
_CONFIG_WORD_RE = re.compile(r"\{[^}]*\}|\S+")


@dataclass
class _Item:
    text: str
    line: int


def _split_sections(text: str, path: str) -> Dict[str, List[_Item]]:
    sections: Dict[str, List[_Item]] = {name: [] for name in SECTIONS}
    seen = set()
    current = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        match = _SECTION_RE.match(line)
        if match:
            current = match.group(1)
            if current in seen:
                raise ModelFormatError(f"section '{current}' declared twice", number, path)
            seen.add(current)
            body = match.group(2)
        elif current is None:
            raise ModelFormatError(f"expected one of {', '.join(SECTIONS)}", number, path)
        else:
            body = line
        for piece in body.split(";"):
            if piece.strip():
                sections[current].append(_Item(piece.strip(), number))
    for required in ("features", "states"):
        if required not in seen:
            raise ModelFormatError(f"missing '{required}:' section", None, path)
    return sections


def _parse_features(items: List[_Item], path: str) -> Tuple[Feature, ...]:
    names: List[str] = []
    for item in items:
        for name in item.text.split():
            if not _NAME_RE.match(name):
                raise ModelFormatError(f"invalid feature name {name!r}", item.line, path)
            if name in names:
                raise ModelFormatError(f"duplicate feature {name!r}", item.line, path)
            names.append(name)
    return tuple(Feature(i, name) for i, name in enumerate(names))


def _parse_config_word(word: str, features: Tuple[Feature, ...], line: int, path: str) -> int:
    """
    A configuration is either a feature set such as {c,f} or one symbol per
    feature: the feature's letter or 1 when present, - or 0 when absent.
    """
    if word in ("{}", "∅"):
        return 0
    if word.startswith("{") or word.endswith("}"):
        if not (word.startswith("{") and word.endswith("}")):
            raise ModelFormatError(f"unbalanced braces in configuration {word!r}", line, path)
        index = {f.name: f.id for f in features}
        mask = 0
        for name in filter(None, (part.strip() for part in word[1:-1].split(","))):
            if name not in index:
                raise ModelFormatError(f"unknown feature {name!r} in configuration", line, path)
            mask |= 1 << index[name]
        return mask
    if len(word) != len(features):
        raise ModelFormatError(
            f"configuration {word!r} needs one symbol per feature ({len(features)})", line, path
        )
    mask = 0
    for feature, symbol in zip(features, word):
        if symbol in _ABSENT:
            continue
        if symbol not in (_PRESENT, feature.name[0]):
            raise ModelFormatError(
                f"configuration {word!r}: symbol {symbol!r} is neither '{feature.name[0]}', "
                f"'{_PRESENT}' nor one of '{_ABSENT}' for feature {feature.name}",
                line, path
            )
        mask |= 1 << feature.id
    return mask


def _parse_configs(items: List[_Item], features: Tuple[Feature, ...], path: str) -> ConfigSpace:
    if not items:
        return ConfigSpace.full(features)
    if len(items) == 1 and items[0].text == "all":
        return ConfigSpace.full(features)
    masks = set()
    for item in items:
        for word in _CONFIG_WORD_RE.findall(item.text):
            masks.add(_parse_config_word(word, features, item.line, path))
    return ConfigSpace(features, frozenset(masks))


def parse_model(text: str, path: str = "<string>") -> Fts:
    """
    Parse model text into an Fts.

    Raises:
        ModelFormatError: On syntax errors, with the 1-based line number
        ModelValidationError: On structural errors (no initial state,
            non-total transition relation)
    """
    sections = _split_sections(text, path)
    features = _parse_features(sections["features"], path)
    space = _parse_configs(sections["configs"], features, path)
    if space.is_empty():
        line = sections["configs"][0].line if sections["configs"] else None
        raise ModelValidationError("The configuration space is empty", line, path)

    builder = FtsBuilder(space)
    state_lines: Dict[str, int] = {}
    for item in sections["states"]:
        for word in item.text.split():
            initial = word.endswith("*")
            name = word.rstrip("*")
            if not _NAME_RE.match(name):
                raise ModelFormatError(f"invalid state name {word!r}", item.line, path)
            try:
                builder.add_state(name, initial=initial)
            except ModelValidationError as e:
                raise ModelFormatError(str(e), item.line, path) from e
            state_lines[name] = item.line

    for item in sections["props"]:
        for name in item.text.split():
            builder.declare_prop(name)

    for item in sections["labels"]:
        state, sep, props = item.text.partition(":")
        if not sep:
            raise ModelFormatError("label item must look like 'state: prop ...'", item.line, path)
        try:
            for prop in props.split():
                builder.add_label(state.strip(), prop)
        except ModelValidationError as e:
            raise ModelFormatError(str(e), item.line, path) from e

    for item in sections["trans"]:
        match = _TRANS_RE.match(item.text)
        if not match:
            raise ModelFormatError(f"malformed transition {item.text!r}", item.line, path)
        guard_text = match.group("guard")
        try:
            guard = parse_feat_expr(guard_text, features) if guard_text and guard_text.strip() else TrueExpr()
            builder.add_transition(match.group("source"), match.group("action"), match.group("target"), guard)
        except (FeatureExprError, ModelValidationError) as e:
            raise ModelFormatError(str(e), item.line, path) from e

    if not builder.initial:
        line = sections["states"][0].line if sections["states"] else None
        raise ModelValidationError("No initial state: mark at least one state with '*'", line, path)

    fts = builder.build()
    dead = fts.core.non_total_states()
    if dead:
        names = [fts.core.state_names[s] for s in dead]
        raise ModelValidationError(
            f"Transition relation is not total: no outgoing transition from {', '.join(names)}",
            state_lines[names[0]], path
        )
    validate_fts(fts)
    logger.info(
        "Model loaded",
        extra={
            'path': path,
            'states': len(fts.core.state_names),
            'transitions': len(fts.core.transitions),
            'features': len(features),
            'configs': len(space),
        }
    )
    return fts


def load_model(path: Union[str, Path]) -> Fts:
    """Read and parse a model file"""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_model(text, str(path))


def format_model(fts: Fts) -> str:
    """Render fts in the model file format; parse_model(format_model(m)) == m"""
    core = fts.core
    space = fts.space
    features = space.features
    lines = ["features: " + " ".join(f.name for f in features) + ";"]

    if space.configs == ConfigSpace.full(features).configs:
        lines.append("configs: all;")
    elif features and all(len(f.name) == 1 for f in features):
        words = [
            "".join(f.name if (k >> f.id) & 1 else "-" for f in features)
            for k in space
        ]
        lines.append("configs: " + " ".join(words) + ";")
    else:
        words = ["{" + ",".join(space.enabled(k)) + "}" for k in space]
        lines.append("configs: " + " ".join(words) + ";")

    states = [
        name + ("*" if sid in core.initial else "")
        for sid, name in enumerate(core.state_names)
    ]
    lines.append("states: " + " ".join(states) + ";")
    if core.prop_names:
        lines.append("props: " + " ".join(core.prop_names) + ";")

    labeled = [sid for sid, props in enumerate(core.labels) if props]
    if labeled:
        lines.append("labels:")
        for sid in labeled:
            props = " ".join(core.prop_names[p] for p in sorted(core.labels[sid]))
            lines.append(f"  {core.state_names[sid]}: {props};")

    if core.transitions:
        lines.append("trans:")
        for t, guard in fts.guarded_transitions():
            guard_text = "" if isinstance(guard, TrueExpr) else f"[{format_feat_expr(guard, space)}]"
            lines.append(
                f"  {core.state_names[t.source]} -{core.action_names[t.action]}{guard_text}-> "
                f"{core.state_names[t.target]};"
            )
    return "\n".join(lines) + "\n"


def save_model(fts: Fts, path: Union[str, Path]) -> Path:
    """Write fts to path, creating parent directories"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_model(fts), encoding="utf-8")
    logger.info("Model saved", extra={'path': str(path)})
    return path
