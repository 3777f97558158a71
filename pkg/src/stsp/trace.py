"""Derivation traces: sequences of licensed rewrites certifying that two
Steinberg words are equal in the Steinberg group.

A step names a catalogued relation (or a primitive rewrite), a position and
bindings.  Applying it replaces the left side of the relation, found at that
position, by the right side; a reverse step goes the other way.  Bindings of
pattern relations (S0–S5, cancellation, S1 corollaries) may be omitted and
are then read off the word; the completed bindings are recorded.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .relations import Context, get_relation
from .relations.base import decode_bindings, encode_bindings
from .relative import GuardViolated
from .rings import parse_ring
from .words import PatternMismatch, SteinbergWord, parse_word

FORWARD = "forward"
REVERSE = "reverse"


class ReplayError(ValueError):
    """A trace does not transform its source into its target."""


@dataclass(frozen=True)
class TraceStep:
    relation: str
    position: int
    params: dict = field(default_factory=dict)  # encoded bindings
    direction: str = FORWARD

    def reversed(self) -> "TraceStep":
        return TraceStep(self.relation, self.position, self.params,
                         REVERSE if self.direction == FORWARD else FORWARD)

    def to_json(self):
        return {"relation": self.relation, "position": self.position,
                "params": self.params, "direction": self.direction}

    @classmethod
    def from_json(cls, data) -> "TraceStep":
        return cls(data["relation"], int(data["position"]), dict(data.get("params", {})),
                   data.get("direction", FORWARD))


def _sides(rel, ctx, bindings):
    lhs, rhs = rel.build(ctx, bindings)
    if not isinstance(lhs, SteinbergWord) or not isinstance(rhs, SteinbergWord):
        raise PatternMismatch(f"{rel.id} is a projection identity, not a rewrite")
    return lhs, rhs


def apply_relation(word: SteinbergWord, step: TraceStep, ctx: Context | None = None,
                   check_phi: bool = False):
    """Apply one step; returns (new word, step with completed bindings).

    Raises PatternMismatch when the step's pattern is not found at its position.
    """
    ctx = ctx or Context(word.ring, word.n)
    rel = get_relation(step.relation)
    params = step.params
    if params:
        bindings = decode_bindings(params)
    elif rel.infer is not None and step.direction == FORWARD:
        bindings = rel.infer(word, step.position)
        params = encode_bindings(bindings)
    else:
        raise PatternMismatch(f"{step.relation} needs explicit bindings")
    try:
        lhs, rhs = _sides(rel, ctx, bindings)
    except GuardViolated as e:
        raise PatternMismatch(f"{step.relation} at {step.position}: {e}") from e
    if step.direction == REVERSE:
        lhs, rhs = rhs, lhs
    p, k = step.position, len(lhs)
    if lhs.ring != word.ring or lhs.n != word.n:
        raise PatternMismatch(f"{step.relation} builds words over {lhs.ring.spec}, n={lhs.n}")
    if p < 0 or p + k > len(word) or word.letters[p:p + k] != lhs.letters:
        raise PatternMismatch(f"{step.relation} ({step.direction}) does not match at {p}")
    out = SteinbergWord(word.ring, word.n, word.letters[:p] + rhs.letters + word.letters[p + k:],
                        _checked=True)
    if check_phi and out.phi() != word.phi():
        raise ReplayError(f"{step.relation} changed the projection")
    return out, TraceStep(step.relation, p, params, step.direction)


@dataclass
class DerivationTrace:
    source: SteinbergWord
    steps: list
    context: dict | None = None
    name: str = ""

    @property
    def ring(self):
        return self.source.ring

    def _ctx(self) -> Context:
        if self.context:
            return Context.from_json(self.context)
        return Context(self.source.ring, self.source.n)

    def words(self, check_phi: bool = False) -> list:
        """All intermediate words, source first; steps get their bindings completed."""
        ctx = self._ctx()
        out = [self.source]
        done = []
        w = self.source
        for k, step in enumerate(self.steps):
            try:
                w, full = apply_relation(w, step, ctx, check_phi)
            except PatternMismatch as e:
                raise ReplayError(f"step {k}: {e}") from e
            out.append(w)
            done.append(full)
        self.steps = done
        return out

    def replay(self, check_phi: bool = False) -> SteinbergWord:
        return self.words(check_phi)[-1]

    @property
    def target(self) -> SteinbergWord:
        return self.replay()

    def reverse(self) -> "DerivationTrace":
        """The trace from target back to source."""
        target = self.replay()
        steps = [s.reversed() for s in reversed(self.steps)]
        return DerivationTrace(target, steps, self.context, self.name + ":reversed" if self.name else "")

    def to_json(self):
        self.replay()
        return {
            "name": self.name,
            "ring": self.source.ring.spec,
            "n": self.source.n,
            "context": self.context or self._ctx().to_json(),
            "source": self.source.format(),
            "target": self.target.format(),
            "steps": [s.to_json() for s in self.steps],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, data) -> "DerivationTrace":
        ring = parse_ring(data["ring"])
        n = int(data["n"])
        src = parse_word(ring, n, data["source"])
        steps = [TraceStep.from_json(s) for s in data["steps"]]
        tr = cls(src, steps, data.get("context"), data.get("name", ""))
        if "target" in data and tr.replay().format() != parse_word(ring, n, data["target"]).format():
            raise ReplayError("trace does not reach its stated target")
        return tr

    @classmethod
    def loads(cls, text: str) -> "DerivationTrace":
        return cls.from_json(json.loads(text))


def derive(source: SteinbergWord, steps, ctx: Context | None = None, name: str = "") -> DerivationTrace:
    """Build a trace from (relation, position[, bindings[, direction]]) tuples."""
    out = []
    for s in steps:
        if isinstance(s, TraceStep):
            out.append(s)
            continue
        rel, pos, *rest = s
        b = rest[0] if rest else {}
        direction = rest[1] if len(rest) > 1 else FORWARD
        out.append(TraceStep(rel, pos, encode_bindings(b) if b else {}, direction))
    tr = DerivationTrace(source, out, ctx.to_json() if ctx else None, name)
    tr.replay()
    return tr


CURATED = ("Z1", "Z3", "forgotten")


def curated_trace(name: str, ctx: Context, seed=0) -> DerivationTrace:
    """Hand-built certificates for a few Z-calculus identities on random data.

    * Z1: Z(u, vr, b) -> Z(u, v, rb) in one step;
    * Z3: Z(u,v,b) Z(u,v,c) Z(u,v,-b-c) -> 1 by two applications of Z3;
    * forgotten: Z(ur; v_1..v_N) -> Z(u; rv_1..rv_N) in one step.
    """
    from .relations import sample_bindings
    from .relations.base import rng_for
    from .zcalc import z_scalar

    rng = rng_for(seed, f"curated:{name}")
    if name in ("Z1", "forgotten"):
        b = sample_bindings(name, ctx, rng)
        lhs, _ = get_relation(name).build(ctx, b)
        return derive(lhs, [(name, 0, b)], ctx, name)
    if name == "Z3":
        b = sample_bindings("Z3", ctx, rng)
        u, v, N = b["u"], b["v"], b["N"]
        x, y = b["b"], b["c"]
        src = (z_scalar(u, v, x, ctx.a, N).word * z_scalar(u, v, y, ctx.a, N).word
               * z_scalar(u, v, -(x + y), ctx.a, N).word)
        second = dict(b, b=x + y, c=-(x + y))
        return derive(src, [("Z3", 0, b), ("Z3", 0, second)], ctx, name)
    raise KeyError(f"no curated trace {name!r}")
