"""Skeletal multiplicity-free braided fusion categories.

Objects are multiplicity vectors over a finite set of simple labels;
morphisms are per-simple matrices of exact cyclotomic scalars.  The
structure constants are F-symbols (associator), R-symbols (braiding) and
per-simple cup/cap normalizations for the duality maps.  All structural
morphisms (associators, braidings, evaluation and coevaluation, and
rebracketings of tensor words) are produced as explicit block morphisms,
so axiom checks and downstream constructions are plain exact linear
algebra.

Conventions
-----------
* Fusion coefficients N_{ab}^c lie in {0, 1}.
* ``F(a,b,c; d)[e, f]`` is the coefficient of the basis vector routed
  through f (channel of b,c) in the image of the basis vector routed
  through e (channel of a,b) under the associator (a@b)@c -> a@(b@c).
* ``R(a,b,c)`` is the scalar of the braiding a@b -> b@a on the fusion
  channel c.
* F- and R-symbols with a unit label are identically 1 and are not
  stored; the unit is strict (unitors are identity matrices).
* The duality maps are ev_m: m*@m -> 1 and coev_m: 1 -> m@m*, weighted
  channelwise by the stored cup/cap scalars u, v; both zigzag identities
  must evaluate to 1 exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import linalg
from .errors import InvalidInput, SchemaError
from .scalar import CycScalar

__all__ = [
    "MultObject",
    "BlockMorphism",
    "FusionData",
    "ValidationReport",
    "CheckFailure",
    "validate",
    "monodromy",
    "is_transparent",
    "mueger_center",
    "is_nondegenerate",
]


@dataclass(frozen=True)
class MultObject:
    """A formal direct sum of simples: label -> non-negative multiplicity."""

    mult: tuple[tuple[str, int], ...]

    @staticmethod
    def of(entries) -> "MultObject":
        if isinstance(entries, MultObject):
            return entries
        if isinstance(entries, dict):
            items = entries.items()
        else:
            items = entries
        cleaned = tuple(sorted((label, m) for label, m in items if m > 0))
        return MultObject(cleaned)

    @staticmethod
    def simple(label: str) -> "MultObject":
        return MultObject(((label, 1),))

    @staticmethod
    def zero() -> "MultObject":
        return MultObject(())

    def mult_of(self, label: str) -> int:
        for lab, m in self.mult:
            if lab == label:
                return m
        return 0

    def support(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.mult)

    def is_zero(self) -> bool:
        return not self.mult

    def total_mult(self) -> int:
        return sum(m for _, m in self.mult)

    def __add__(self, other: "MultObject") -> "MultObject":
        acc = dict(self.mult)
        for lab, m in other.mult:
            acc[lab] = acc.get(lab, 0) + m
        return MultObject.of(acc)

    def describe(self) -> str:
        if not self.mult:
            return "0"
        parts = []
        for lab, m in self.mult:
            parts.append(lab if m == 1 else f"{m}*{lab}")
        return "+".join(parts)


@dataclass
class BlockMorphism:
    """A morphism between multiplicity objects, one matrix per simple.

    Blocks are stored sparsely: an absent label means the zero block.
    The matrix at label s has shape (target.mult(s), source.mult(s)).
    """

    source: MultObject
    target: MultObject
    blocks: dict[str, list] = field(default_factory=dict)

    def block(self, label: str) -> list:
        b = self.blocks.get(label)
        if b is None:
            return linalg.zeros(self.target.mult_of(label), self.source.mult_of(label))
        return b

    def set_block(self, label: str, matrix: list) -> None:
        if matrix and not linalg.is_zero_matrix(matrix):
            self.blocks[label] = matrix
        else:
            self.blocks.pop(label, None)

    def compose(self, other: "BlockMorphism") -> "BlockMorphism":
        """self after other (matrix product per simple)."""
        assert other.target == self.source, (
            f"composition mismatch: {other.target.describe()} vs {self.source.describe()}")
        out = BlockMorphism(other.source, self.target)
        for s in set(self.blocks) & set(other.blocks):
            rows = self.target.mult_of(s)
            inner = self.source.mult_of(s)
            cols = other.source.mult_of(s)
            if rows and inner and cols:
                out.set_block(s, linalg.mat_mul(self.blocks[s], other.blocks[s]))
        return out

    def __matmul__(self, other: "BlockMorphism") -> "BlockMorphism":
        return self.compose(other)

    def scaled(self, c: CycScalar) -> "BlockMorphism":
        out = BlockMorphism(self.source, self.target)
        for s, m in self.blocks.items():
            out.set_block(s, linalg.mat_scale(m, c))
        return out

    def plus(self, other: "BlockMorphism") -> "BlockMorphism":
        assert self.source == other.source and self.target == other.target
        out = BlockMorphism(self.source, self.target)
        for s in set(self.blocks) | set(other.blocks):
            out.set_block(s, linalg.mat_add(self.block(s), other.block(s)))
        return out

    def equals(self, other: "BlockMorphism") -> bool:
        if self.source != other.source or self.target != other.target:
            return False
        for s in set(self.blocks) | set(other.blocks):
            if not linalg.mat_eq(self.block(s), other.block(s)):
                return False
        return True

    def is_identity_morphism(self) -> bool:
        if self.source != self.target:
            return False
        for s, m in self.source.mult:
            if not linalg.is_identity(self.block(s)):
                return False
        return True

    def is_zero_morphism(self) -> bool:
        return all(linalg.is_zero_matrix(m) for m in self.blocks.values())

    def inverse(self) -> "BlockMorphism":
        assert sorted(self.source.mult) == sorted(self.target.mult), "non-square morphism"
        out = BlockMorphism(self.target, self.source)
        for s, m in self.source.mult:
            out.set_block(s, linalg.mat_inverse(self.block(s)))
        return out


@dataclass
class CheckFailure:
    check: str
    instance: tuple
    detail: str = ""


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, check: str, instance: tuple, detail: str = "") -> None:
        self.failures.append(CheckFailure(check, instance, detail))

    def summary(self) -> str:
        if self.ok:
            return "valid"
        lines = [f"{len(self.failures)} failure(s):"]
        for f in self.failures[:50]:
            lines.append(f"  {f.check} at {f.instance}" + (f": {f.detail}" if f.detail else ""))
        if len(self.failures) > 50:
            lines.append(f"  ... and {len(self.failures) - 50} more")
        return "\n".join(lines)


def _freeze(out_simples):
    if out_simples is None:
        return None
    return tuple(sorted(out_simples))


# Tensor words: nested pairs whose leaves are MultObjects.  Used to build
# rebracketing morphisms out of elementary associators.
def leaf(m: MultObject):
    return ("leaf", m)


def node(w1, w2):
    return ("node", w1, w2)


def word_leaves(w) -> list:
    if w[0] == "leaf":
        return [w[1]]
    return word_leaves(w[1]) + word_leaves(w[2])


class FusionData:
    """Structure constants of a skeletal multiplicity-free fusion category.

    Parameters
    ----------
    simples : ordered list of labels; the order fixes all basis orderings.
    unit : the tensor unit label.
    dual : involutive map label -> label with dual(unit) == unit.
    fusion : collection of triples (a, b, c) with N_{ab}^c = 1.
    fsym : dict (a,b,c,d,e,f) -> CycScalar for admissible tuples with no
        unit among a, b, c.  Unit-labeled symbols are implicitly 1.
    rsym : dict (a,b,c) -> CycScalar for admissible triples with no unit
        among a, b; None for a plain (unbraided) monoidal category.
    cupcap : dict label -> (u, v) scalars weighting coev/ev.  If omitted,
        u = 1 and v = 1/F(a,a*,a;a)[1,1] so both zigzags are 1.
    """

    def __init__(self, simples, unit, dual, fusion, fsym, rsym=None,
                 cupcap=None, name=""):
        self.simples = list(simples)
        self.unit = unit
        self.dual = dict(dual)
        self.fusion = frozenset(tuple(t) for t in fusion)
        self.fsym = dict(fsym)
        self.rsym = None if rsym is None else dict(rsym)
        self.name = name
        self._index = {s: i for i, s in enumerate(self.simples)}
        if len(self._index) != len(self.simples):
            raise SchemaError("duplicate simple labels")
        if unit not in self._index:
            raise SchemaError(f"unit label {unit!r} not among simples")
        self._channels: dict[tuple[str, str], tuple[str, ...]] = {}
        for a in self.simples:
            for b in self.simples:
                cs = tuple(c for c in self.simples if (a, b, c) in self.fusion)
                self._channels[(a, b)] = cs
        if cupcap is None:
            cupcap = {}
            for a in self.simples:
                f11 = self.F(a, self.dual.get(a, a), a, a, self.unit, self.unit)
                cupcap[a] = (CycScalar.one(), f11.inv())
        self.cupcap = dict(cupcap)
        self._cb_cache: dict = {}
        self._tensor_cache: dict = {}
        self._morphism_cache: dict = {}

    # -- fusion ring ----------------------------------------------------

    def check_label(self, x: str) -> None:
        if x not in self._index:
            raise InvalidInput(f"unknown simple label {x!r}")

    def channels(self, a: str, b: str) -> tuple[str, ...]:
        return self._channels[(a, b)]

    def N(self, a: str, b: str, c: str) -> int:
        return 1 if (a, b, c) in self.fusion else 0

    def is_braided(self) -> bool:
        return self.rsym is not None

    def F(self, a, b, c, d, e, f) -> CycScalar:
        """F-symbol; assumes the 6-tuple is admissible."""
        if a == self.unit or b == self.unit or c == self.unit:
            return CycScalar.one()
        try:
            return self.fsym[(a, b, c, d, e, f)]
        except KeyError:
            raise SchemaError(f"missing F-symbol for {(a, b, c, d, e, f)}") from None

    def F_or_zero(self, a, b, c, d, e, f) -> CycScalar:
        if not (self.N(a, b, e) and self.N(e, c, d) and self.N(b, c, f) and self.N(a, f, d)):
            return CycScalar.zero()
        return self.F(a, b, c, d, e, f)

    def R(self, a, b, c) -> CycScalar:
        """R-symbol; assumes (a, b, c) is admissible."""
        if self.rsym is None:
            raise InvalidInput("category has no braiding data")
        if a == self.unit or b == self.unit:
            return CycScalar.one()
        try:
            return self.rsym[(a, b, c)]
        except KeyError:
            raise SchemaError(f"missing R-symbol for {(a, b, c)}") from None

    def f_matrix(self, a, b, c, d) -> tuple[list, list, list]:
        """The associator block at total d: (matrix, e-labels, f-labels).

        Rows are indexed by f, columns by e.
        """
        es = [e for e in self.channels(a, b) if self.N(e, c, d)]
        fs = [f for f in self.channels(b, c) if self.N(a, f, d)]
        mat = [[self.F(a, b, c, d, e, f) for e in es] for f in fs]
        return mat, es, fs

    # -- objects ----------------------------------------------------------

    def unit_object(self) -> MultObject:
        return MultObject.simple(self.unit)

    def simple_object(self, label: str) -> MultObject:
        self.check_label(label)
        return MultObject.simple(label)

    def tensor_objects(self, m1: MultObject, m2: MultObject) -> MultObject:
        key = (m1, m2)
        cached = self._tensor_cache.get(key)
        if cached is not None:
            return cached
        acc: dict[str, int] = {}
        for a, ma in m1.mult:
            for b, mb in m2.mult:
                for c in self.channels(a, b):
                    acc[c] = acc.get(c, 0) + ma * mb
        out = MultObject.of(acc)
        self._tensor_cache[key] = out
        return out

    def dual_object(self, m: MultObject) -> MultObject:
        return MultObject.of({self.dual[a]: k for a, k in m.mult})

    def channel_basis(self, m1: MultObject, m2: MultObject) -> dict:
        """Ordered basis of each multiplicity space of m1 @ m2.

        Returns {c: [(a, i, b, j), ...]} ordered by simple order then copy
        index; this ordering is the canonical identification used by every
        structural morphism.
        """
        key = (m1, m2)
        cached = self._cb_cache.get(key)
        if cached is not None:
            return cached
        out: dict[str, list] = {}
        for a, ma in m1.mult:
            for b, mb in m2.mult:
                for c in self.channels(a, b):
                    bucket = out.setdefault(c, [])
                    for i in range(ma):
                        for j in range(mb):
                            bucket.append((a, i, b, j))
        # Deterministic order: by (a index, i, b index, j).
        for c in out:
            out[c].sort(key=lambda t: (self._index[t[0]], t[1], self._index[t[2]], t[3]))
        self._cb_cache[key] = out
        return out

    # -- structural morphisms ---------------------------------------------

    def identity_morphism(self, m: MultObject) -> BlockMorphism:
        out = BlockMorphism(m, m)
        for s, k in m.mult:
            out.blocks[s] = linalg.identity(k)
        return out

    def tensor_morphisms(self, f: BlockMorphism, g: BlockMorphism,
                         out_simples=None) -> BlockMorphism:
        src = self.tensor_objects(f.source, g.source)
        tgt = self.tensor_objects(f.target, g.target)
        src_basis = self.channel_basis(f.source, g.source)
        tgt_basis = self.channel_basis(f.target, g.target)
        out = BlockMorphism(src, tgt)
        labels = tgt_basis.keys() if out_simples is None else out_simples
        for s in labels:
            tb = tgt_basis.get(s)
            sb = src_basis.get(s)
            if not tb or not sb:
                continue
            mat = linalg.zeros(len(tb), len(sb))
            nonzero = False
            for r, (a2, i2, b2, j2) in enumerate(tb):
                fb = f.blocks.get(a2)
                gb = g.blocks.get(b2)
                if fb is None or gb is None:
                    continue
                for c, (a1, i1, b1, j1) in enumerate(sb):
                    if a1 != a2 or b1 != b2:
                        continue
                    v = fb[i2][i1] * gb[j2][j1]
                    if not v.is_zero():
                        mat[r][c] = v
                        nonzero = True
            if nonzero:
                out.blocks[s] = mat
        return out

    def associator(self, m1: MultObject, m2: MultObject, m3: MultObject,
                   inverse: bool = False, out_simples=None) -> BlockMorphism:
        """The F-move (m1 @ m2) @ m3 -> m1 @ (m2 @ m3) (or its inverse)."""
        key = ("assoc", m1, m2, m3, inverse, _freeze(out_simples))
        cached = self._morphism_cache.get(key)
        if cached is not None:
            return cached
        out = self._associator(m1, m2, m3, inverse, out_simples)
        self._morphism_cache[key] = out
        return out

    def _associator(self, m1, m2, m3, inverse, out_simples) -> BlockMorphism:
        m12 = self.tensor_objects(m1, m2)
        m23 = self.tensor_objects(m2, m3)
        total = self.tensor_objects(m12, m3)
        cb12 = self.channel_basis(m1, m2)
        cb23 = self.channel_basis(m2, m3)
        cb_left = self.channel_basis(m12, m3)
        cb_right = self.channel_basis(m1, m23)
        out = BlockMorphism(total, total)
        labels = set(cb_left.keys()) if out_simples is None else set(out_simples)
        for s in labels:
            lb = cb_left.get(s)
            rb = cb_right.get(s)
            if not lb or not rb:
                continue
            # Source vectors keyed by (a,i,b,j,c,k,e); target by (a,i,b,j,c,k,f).
            src_index: dict = {}
            for col, (e, ie, c, k) in enumerate(lb):
                a, i, b, j = cb12[e][ie]
                src_index.setdefault((a, i, b, j, c, k), []).append((e, col))
            mat = linalg.zeros(len(rb), len(lb))
            nonzero = False
            for row, (a, i, f, jf) in enumerate(rb):
                b, j, c, k = cb23[f][jf]
                for e, col in src_index.get((a, i, b, j, c, k), ()):
                    v = self.F(a, b, c, s, e, f)
                    if not v.is_zero():
                        mat[row][col] = v
                        nonzero = True
            if nonzero:
                out.blocks[s] = mat
        if inverse:
            inv = BlockMorphism(total, total)
            for s in list(out.blocks):
                inv.blocks[s] = linalg.mat_inverse(out.blocks[s])
            return inv
        return out

    def braiding(self, m1: MultObject, m2: MultObject, inverse: bool = False,
                 out_simples=None) -> BlockMorphism:
        """c_{m1,m2}: m1 @ m2 -> m2 @ m1, or with inverse=True the
        morphism c_{m2,m1}^{-1}: m1 @ m2 -> m2 @ m1."""
        key = ("braid", m1, m2, inverse, _freeze(out_simples))
        cached = self._morphism_cache.get(key)
        if cached is not None:
            return cached
        out = self._braiding(m1, m2, inverse, out_simples)
        self._morphism_cache[key] = out
        return out

    def _braiding(self, m1, m2, inverse, out_simples) -> BlockMorphism:
        src = self.tensor_objects(m1, m2)
        tgt = self.tensor_objects(m2, m1)
        cb_s = self.channel_basis(m1, m2)
        cb_t = self.channel_basis(m2, m1)
        out = BlockMorphism(src, tgt)
        labels = cb_s.keys() if out_simples is None else out_simples
        for s in labels:
            sb = cb_s.get(s)
            if not sb:
                continue
            tb = cb_t[s]
            pos = {entry: r for r, entry in enumerate(tb)}
            mat = linalg.zeros(len(tb), len(sb))
            for col, (a, i, b, j) in enumerate(sb):
                r = pos[(b, j, a, i)]
                v = self.R(a, b, s) if not inverse else self.R(b, a, s).inv()
                mat[r][col] = v
            out.blocks[s] = mat
        return out

    def ev(self, m: MultObject) -> BlockMorphism:
        """Evaluation m* @ m -> 1, weighted by the per-simple cap scalars."""
        key = ("ev", m)
        cached = self._morphism_cache.get(key)
        if cached is not None:
            return cached
        out = self._ev(m)
        self._morphism_cache[key] = out
        return out

    def _ev(self, m: MultObject) -> BlockMorphism:
        md = self.dual_object(m)
        src = self.tensor_objects(md, m)
        out = BlockMorphism(src, self.unit_object())
        sb = self.channel_basis(md, m).get(self.unit)
        if not sb:
            return out
        row = [CycScalar.zero()] * len(sb)
        nonzero = False
        for col, (t, i, s, j) in enumerate(sb):
            if s == self.dual[t] and i == j:
                row[col] = self.cupcap[s][1]
                nonzero = True
        if nonzero:
            out.blocks[self.unit] = [row]
        return out

    def coev(self, m: MultObject) -> BlockMorphism:
        """Coevaluation 1 -> m @ m*, weighted by the per-simple cup scalars."""
        key = ("coev", m)
        cached = self._morphism_cache.get(key)
        if cached is not None:
            return cached
        out = self._coev(m)
        self._morphism_cache[key] = out
        return out

    def _coev(self, m: MultObject) -> BlockMorphism:
        md = self.dual_object(m)
        tgt = self.tensor_objects(m, md)
        out = BlockMorphism(self.unit_object(), tgt)
        tb = self.channel_basis(m, md).get(self.unit)
        if not tb:
            return out
        col = [[CycScalar.zero()] for _ in tb]
        nonzero = False
        for r, (s, i, t, j) in enumerate(tb):
            if t == self.dual[s] and i == j:
                col[r][0] = self.cupcap[s][0]
                nonzero = True
        if nonzero:
            out.blocks[self.unit] = col
        return out

    def nested_pairing(self, m1: MultObject, m2: MultObject) -> BlockMorphism:
        """(m2* @ m1*) @ (m1 @ m2) -> 1, evaluating the factors inside out."""
        d1, d2 = self.dual_object(m1), self.dual_object(m2)
        w0 = node(node(leaf(d2), leaf(d1)), node(leaf(m1), leaf(m2)))
        w1 = node(leaf(d2), node(node(leaf(d1), leaf(m1)), leaf(m2)))
        move = self.rebracket(w0, w1, out_simples=(self.unit,))
        inner = self.tensor_morphisms(self.ev(m1), self.identity_morphism(m2))
        step = self.tensor_morphisms(self.identity_morphism(d2), inner,
                                     out_simples=(self.unit,))
        return self.ev(m2).compose(step).compose(move)

    def dual_factor_iso(self, m1: MultObject, m2: MultObject) -> BlockMorphism:
        """The canonical iso m2* @ m1* -> (m1 @ m2)*.

        Relates the factorwise duality of a product to the channelwise
        duality of the product object: it is the unique map under which
        the nested pairing becomes the channelwise evaluation.
        """
        key = ("dualiso", m1, m2)
        cached = self._morphism_cache.get(key)
        if cached is not None:
            return cached
        d1, d2 = self.dual_object(m1), self.dual_object(m2)
        big_d = self.tensor_objects(d2, d1)
        p = self.tensor_objects(m1, m2)
        dp = self.dual_object(p)
        start = self.tensor_morphisms(self.identity_morphism(big_d), self.coev(p))
        move = self.rebracket(node(leaf(big_d), node(leaf(p), leaf(dp))),
                              node(node(leaf(big_d), leaf(p)), leaf(dp)))
        finish = self.tensor_morphisms(self.nested_pairing(m1, m2),
                                       self.identity_morphism(dp))
        out = finish.compose(move).compose(start)
        self._morphism_cache[key] = out
        return out

    # -- tensor words -------------------------------------------------------

    def word_object(self, w) -> MultObject:
        if w[0] == "leaf":
            return w[1]
        return self.tensor_objects(self.word_object(w[1]), self.word_object(w[2]))

    def _find_rotation(self, w, path):
        """Path to the leftmost-outermost sub-word of shape ((A,B),C)."""
        if w[0] == "leaf":
            return None
        if w[1][0] == "node":
            return path
        for branch, idx in (("L", 1), ("R", 2)):
            sub = self._find_rotation(w[idx], path + [branch])
            if sub is not None:
                return sub
        return None

    def _apply_rotation(self, w, path, out_simples):
        if not path:
            (_, (_, a, b), c) = w
            oa, ob, oc = self.word_object(a), self.word_object(b), self.word_object(c)
            return self.associator(oa, ob, oc, out_simples=out_simples), node(a, node(b, c))
        _, lw, rw = w
        if path[0] == "L":
            m, lw2 = self._apply_rotation(lw, path[1:], None)
            full = self.tensor_morphisms(m, self.identity_morphism(self.word_object(rw)),
                                         out_simples=out_simples)
            return full, node(lw2, rw)
        m, rw2 = self._apply_rotation(rw, path[1:], None)
        full = self.tensor_morphisms(self.identity_morphism(self.word_object(lw)), m,
                                     out_simples=out_simples)
        return full, node(lw, rw2)

    def _comb_morphism(self, w, out_simples):
        """Composite of lifted associators from w to its right comb."""
        total = self.word_object(w)
        morph = self.identity_morphism(total)
        if out_simples is not None:
            morph = BlockMorphism(total, total, {
                s: linalg.identity(total.mult_of(s))
                for s in out_simples if total.mult_of(s)})
        while True:
            path = self._find_rotation(w, [])
            if path is None:
                return morph, w
            step, w = self._apply_rotation(w, path, out_simples)
            morph = step.compose(morph)

    def rebracket(self, w_from, w_to, out_simples=None) -> BlockMorphism:
        """The canonical iso between two bracketings of the same leaf list.

        Built as a composite of elementary F-moves through the right-comb
        normal form; coherence makes the result path-independent.
        """
        key = ("rebracket", w_from, w_to, _freeze(out_simples))
        cached = self._morphism_cache.get(key)
        if cached is not None:
            return cached
        assert word_leaves(w_from) == word_leaves(w_to), "leaf lists differ"
        m_from, comb1 = self._comb_morphism(w_from, out_simples)
        m_to, comb2 = self._comb_morphism(w_to, out_simples)
        assert comb1 == comb2
        inv = BlockMorphism(m_to.target, m_to.source)
        for s in list(m_to.blocks):
            inv.blocks[s] = linalg.mat_inverse(m_to.blocks[s])
        out = inv.compose(m_from)
        self._morphism_cache[key] = out
        return out


# -- validation ------------------------------------------------------------


def _schema_scan(data: FusionData, report: ValidationReport) -> None:
    unit = data.unit
    if data.dual.keys() != set(data.simples):
        raise SchemaError("dual map must cover exactly the simples")
    for a in data.simples:
        if data.dual[data.dual[a]] != a:
            report.add("dual-involution", (a,), f"dual(dual({a})) = {data.dual[data.dual[a]]}")
    if data.dual[unit] != unit:
        report.add("dual-unit", (unit,), "dual of the unit is not the unit")
    # Unit fusion laws and duality channels.
    for a in data.simples:
        for c in data.simples:
            want = 1 if a == c else 0
            if data.N(unit, a, c) != want or data.N(a, unit, c) != want:
                report.add("unit-fusion", (a, c), "unit must fuse trivially")
        for b in data.simples:
            want = 1 if b == data.dual[a] else 0
            if data.N(a, b, unit) != want:
                report.add("duality-fusion", (a, b),
                           "N_{a,b}^1 must be 1 exactly for b = dual(a)")
    # Stored symbols must be admissible non-unit tuples, and complete.
    for key in data.fsym:
        a, b, c, d, e, f = key
        if unit in (a, b, c):
            raise SchemaError(f"F-symbol with unit label stored: {key}")
        if not (data.N(a, b, e) and data.N(e, c, d) and data.N(b, c, f) and data.N(a, f, d)):
            raise SchemaError(f"inadmissible F-symbol stored: {key}")
    for a, b, c in product(data.simples, repeat=3):
        if unit in (a, b, c):
            continue
        for d in data.simples:
            for e in data.channels(a, b):
                if not data.N(e, c, d):
                    continue
                for f in data.channels(b, c):
                    if data.N(a, f, d) and (a, b, c, d, e, f) not in data.fsym:
                        raise SchemaError(f"missing F-symbol for {(a, b, c, d, e, f)}")
    if data.rsym is not None:
        for key in data.rsym:
            a, b, c = key
            if unit in (a, b):
                raise SchemaError(f"R-symbol with unit label stored: {key}")
            if not data.N(a, b, c):
                raise SchemaError(f"inadmissible R-symbol stored: {key}")
        for a, b in product(data.simples, repeat=2):
            if unit in (a, b):
                continue
            for c in data.channels(a, b):
                if (a, b, c) not in data.rsym:
                    raise SchemaError(f"missing R-symbol for {(a, b, c)}")
    for a in data.simples:
        if a not in data.cupcap:
            raise SchemaError(f"missing cupcap normalization for {a!r}")


def _pentagon_scan(data: FusionData, report: ValidationReport, fail_fast: bool) -> None:
    simples = data.simples
    ch = data.channels
    for a, b, c, d in product(simples, repeat=4):
        for e in ch(a, b):
            for g in ch(e, c):
                for m in ch(g, d):
                    for l in ch(c, d):
                        for k in ch(b, l):
                            if not data.N(a, k, m):
                                continue
                            lhs = (data.F_or_zero(e, c, d, m, g, l)
                                   * data.F_or_zero(a, b, l, m, e, k))
                            rhs = CycScalar.zero()
                            for h in ch(b, c):
                                rhs = rhs + (data.F_or_zero(a, b, c, g, e, h)
                                             * data.F_or_zero(a, h, d, m, g, k)
                                             * data.F_or_zero(b, c, d, k, h, l))
                            if lhs != rhs:
                                report.add("pentagon", (a, b, c, d),
                                           f"total {m}, channels e={e} g={g} l={l} k={k}")
                                if fail_fast:
                                    return


def _hexagon_scan(data: FusionData, report: ValidationReport, fail_fast: bool) -> None:
    simples = data.simples
    ch = data.channels
    for a, b, c in product(simples, repeat=3):
        for e in ch(a, b):
            for d in ch(e, c):
                for g in ch(c, a):
                    if not data.N(b, g, d):
                        continue
                    # Braiding hexagon: move a to the right across b @ c.
                    lhs = CycScalar.zero()
                    for f in ch(b, c):
                        if data.N(a, f, d):
                            lhs = lhs + (data.F_or_zero(a, b, c, d, e, f)
                                         * data.R(a, f, d)
                                         * data.F_or_zero(b, c, a, d, f, g))
                    rhs = data.R(a, b, e) * data.F_or_zero(b, a, c, d, e, g) * data.R(a, c, g)
                    if lhs != rhs:
                        report.add("hexagon", (a, b, c), f"channels e={e} d={d} g={g}")
                        if fail_fast:
                            return
                    # Inverse-braiding hexagon.
                    lhs2 = CycScalar.zero()
                    for f in ch(b, c):
                        if data.N(a, f, d):
                            lhs2 = lhs2 + (data.F_or_zero(a, b, c, d, e, f)
                                           * data.R(f, a, d).inv()
                                           * data.F_or_zero(b, c, a, d, f, g))
                    rhs2 = (data.R(b, a, e).inv()
                            * data.F_or_zero(b, a, c, d, e, g)
                            * data.R(c, a, g).inv())
                    if lhs2 != rhs2:
                        report.add("hexagon-inverse", (a, b, c), f"channels e={e} d={d} g={g}")
                        if fail_fast:
                            return


def _duality_scan(data: FusionData, report: ValidationReport, fail_fast: bool) -> None:
    unit = data.unit
    for a in data.simples:
        astar = data.dual[a]
        u, v = data.cupcap[a]
        za = u * v * data.F_or_zero(a, astar, a, a, unit, unit)
        if za != CycScalar.one():
            report.add("zigzag", (a,), "right zigzag is not the identity")
            if fail_fast:
                return
        mat, es, fs = data.f_matrix(astar, a, astar, astar)
        try:
            inv = linalg.mat_inverse(mat)
        except ZeroDivisionError:
            report.add("F-invertibility", (astar, a, astar, astar), "singular F-block")
            if fail_fast:
                return
            continue
        iu = fs.index(unit) if unit in fs else None
        ie = es.index(unit) if unit in es else None
        if iu is None or ie is None:
            report.add("zigzag", (a,), "unit channel missing in duality F-block")
            if fail_fast:
                return
            continue
        # inv maps f-indexed rows back to e-indexed rows.
        zb = u * v * inv[ie][iu]
        if zb != CycScalar.one():
            report.add("zigzag", (a,), "left zigzag is not the identity")
            if fail_fast:
                return


def _invertibility_scan(data: FusionData, report: ValidationReport, fail_fast: bool) -> None:
    for a, b, c, d in product(data.simples, repeat=4):
        mat, es, fs = data.f_matrix(a, b, c, d)
        if not es and not fs:
            continue
        if len(es) != len(fs):
            report.add("F-invertibility", (a, b, c, d),
                       f"non-square associator block {len(fs)}x{len(es)}")
            if fail_fast:
                return
            continue
        if es:
            try:
                linalg.mat_inverse(mat)
            except ZeroDivisionError:
                report.add("F-invertibility", (a, b, c, d), "singular F-block")
                if fail_fast:
                    return
    if data.rsym is not None:
        for (a, b, c), r in data.rsym.items():
            if r.is_zero():
                report.add("R-invertibility", (a, b, c), "zero R-symbol")
                if fail_fast:
                    return


def validate(data: FusionData, fail_fast: bool = False) -> ValidationReport:
    """Check the full axiom suite; the report lists every failed instance.

    Schema problems (missing or inadmissible symbol entries) raise
    :class:`SchemaError`; axiom failures are collected in the report.
    """
    report = ValidationReport()
    _schema_scan(data, report)
    _invertibility_scan(data, report, fail_fast)
    if fail_fast and not report.ok:
        return report
    _pentagon_scan(data, report, fail_fast)
    if fail_fast and not report.ok:
        return report
    if data.rsym is not None:
        _hexagon_scan(data, report, fail_fast)
        if fail_fast and not report.ok:
            return report
    _duality_scan(data, report, fail_fast)
    return report


# -- braiding-derived operations --------------------------------------------


def monodromy(data: FusionData, x: str, y: str) -> BlockMorphism:
    """The double braiding c_{y,x} . c_{x,y} as a diagonal block morphism."""
    data.check_label(x)
    data.check_label(y)
    mx, my = MultObject.simple(x), MultObject.simple(y)
    return data.braiding(my, mx).compose(data.braiding(mx, my))


def is_transparent(data: FusionData, x: str) -> bool:
    """True iff the double braiding of x with every simple is trivial."""
    data.check_label(x)
    for y in data.simples:
        if not monodromy(data, x, y).is_identity_morphism():
            return False
    return True


def mueger_center(data: FusionData) -> list:
    """Sorted list of transparent simples; always contains the unit."""
    return [s for s in data.simples if is_transparent(data, s)]


def is_nondegenerate(data: FusionData) -> bool:
    """True iff the unit is the only transparent simple."""
    return mueger_center(data) == [data.unit]
