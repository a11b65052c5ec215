"""Categories enriched over a braided fusion category.

An :class:`EnrichedCat` is a finite table: object handles, a hom object
of the base for every ordered pair, identity elements, composition
blocks, and optionally monoidal data (a partial tensor on handles, a
tensorator, and underlying associator names).  Handles are opaque
hashable values; the constructions in this module use multiplicity
objects (self-enrichment) or pairs (Cartesian products) as handles.

Composition and tensorator blocks are computed lazily per target simple
and cached, since hom objects at large sum handles are only ever probed
at a few simples.

Underlying morphisms x -> y are vectors in the unit multiplicity of
hom(x, y), stored as block morphisms 1 -> hom(x, y) ("names").  The
helpers at the bottom convert between names and honest morphisms of the
base category when the enrichment is the self-enrichment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import linalg
from .basecat import BlockMorphism, FusionData, MultObject, leaf, node
from .errors import AxiomViolation, InvalidInput
from .scalar import CycScalar

__all__ = [
    "EnrichedCat",
    "MonoidalData",
    "EnrichedFunctor",
    "EnrichedNatTransf",
    "self_enrich",
    "underlying_hom",
    "cartesian_product",
    "is_commutative",
    "reverse",
    "single_object_category",
    "tensor_functor",
    "name_of_morphism",
    "realize_name",
]


@dataclass
class MonoidalData:
    """Monoidal structure on an enriched category.

    ``tensor`` is a partial map on handle pairs (the object set is only
    closed under the finitely many tensors the fixtures need).  The
    underlying unitors are strict; ``assoc_fn`` yields the underlying
    associator names, which are identities exactly when the base has
    trivial F-symbols.
    """

    unit: object
    tensor: dict
    tensorator_fn: object  # (pair, pair, simple) -> matrix
    assoc_fn: object  # (x, y, z) -> name BlockMorphism


class EnrichedCat:
    def __init__(self, base: FusionData, objects, hom, ident, comp_fn,
                 monoidal: MonoidalData | None = None, generators=None,
                 name: str = ""):
        self.base = base
        self.objects = list(objects)
        self._hom = dict(hom)
        self._ident = dict(ident)
        self._comp_fn = comp_fn
        self.monoidal = monoidal
        self.generators = list(generators) if generators is not None else list(self.objects)
        self.name = name
        self._comp_cache: dict = {}
        self._tensorator_cache: dict = {}
        self._assoc_cache: dict = {}
        self.product_of = None  # set by cartesian_product

    # -- raw data access -------------------------------------------------

    def hom(self, x, y) -> MultObject:
        try:
            return self._hom[(x, y)]
        except KeyError:
            raise InvalidInput(f"no hom object for handles ({x!r}, {y!r})") from None

    def ident(self, x) -> BlockMorphism:
        return self._ident[x]

    def comp_block(self, x, y, z, s: str):
        key = (x, y, z, s)
        if key not in self._comp_cache:
            self._comp_cache[key] = self._comp_fn(x, y, z, s)
        return self._comp_cache[key]

    def comp(self, x, y, z, simples=None) -> BlockMorphism:
        """Composition hom(y,z) @ hom(x,y) -> hom(x,z) as a block morphism."""
        src = self.base.tensor_objects(self.hom(y, z), self.hom(x, y))
        tgt = self.hom(x, z)
        out = BlockMorphism(src, tgt)
        labels = tgt.support() if simples is None else simples
        for s in labels:
            if tgt.mult_of(s) and src.mult_of(s):
                out.set_block(s, self.comp_block(x, y, z, s))
        return out

    def has_tensor(self, x, y) -> bool:
        return self.monoidal is not None and (x, y) in self.monoidal.tensor

    def tensor_obj(self, x, y):
        if not self.has_tensor(x, y):
            raise InvalidInput(f"tensor not defined on handles ({x!r}, {y!r})")
        return self.monoidal.tensor[(x, y)]

    def tensorator(self, p1, p2, simples=None) -> BlockMorphism:
        """hom(x,x') @ hom(y,y') -> hom(x@y, x'@y') for p1=(x,y), p2=(x',y')."""
        (x, y), (x2, y2) = p1, p2
        src = self.base.tensor_objects(self.hom(x, x2), self.hom(y, y2))
        tgt = self.hom(self.tensor_obj(x, y), self.tensor_obj(x2, y2))
        out = BlockMorphism(src, tgt)
        labels = tgt.support() if simples is None else simples
        for s in labels:
            if not tgt.mult_of(s) or not src.mult_of(s):
                continue
            key = (p1, p2, s)
            if key not in self._tensorator_cache:
                self._tensorator_cache[key] = self.monoidal.tensorator_fn(p1, p2, s)
            out.set_block(s, self._tensorator_cache[key])
        return out

    def assoc_name(self, x, y, z) -> BlockMorphism:
        key = (x, y, z)
        if key not in self._assoc_cache:
            self._assoc_cache[key] = self.monoidal.assoc_fn(x, y, z)
        return self._assoc_cache[key]

    # -- underlying category ----------------------------------------------

    def unit_dim(self, x, y) -> int:
        return self.hom(x, y).mult_of(self.base.unit)

    def underlying_basis(self, x, y) -> list:
        """Canonical basis of underlying morphisms x -> y, as names."""
        h = self.hom(x, y)
        d = h.mult_of(self.base.unit)
        out = []
        for i in range(d):
            m = BlockMorphism(self.base.unit_object(), h)
            col = [[CycScalar.zero()] for _ in range(d)]
            col[i][0] = CycScalar.one()
            m.blocks[self.base.unit] = col
            out.append(m)
        return out

    def name_from_vector(self, x, y, vec) -> BlockMorphism:
        h = self.hom(x, y)
        m = BlockMorphism(self.base.unit_object(), h)
        m.set_block(self.base.unit, [[v] for v in vec])
        return m

    def vector_of_name(self, x, y, f: BlockMorphism) -> list:
        col = f.block(self.base.unit)
        return [row[0] for row in col]

    def compose_names(self, x, y, z, g: BlockMorphism, f: BlockMorphism) -> BlockMorphism:
        """Underlying composition (g: y->z) after (f: x->y)."""
        pair = self.base.tensor_morphisms(g, f, out_simples=(self.base.unit,))
        return self.comp(x, y, z, simples=(self.base.unit,)).compose(pair)

    def tensor_names(self, x, y, x2, y2, f: BlockMorphism, g: BlockMorphism) -> BlockMorphism:
        """Underlying tensor of f: x->x2 with g: y->y2."""
        pair = self.base.tensor_morphisms(f, g, out_simples=(self.base.unit,))
        return self.tensorator((x, y), (x2, y2), simples=(self.base.unit,)).compose(pair)

    def invert_name(self, x, y, f: BlockMorphism) -> BlockMorphism | None:
        """Two-sided inverse of an underlying morphism, or None."""
        basis = self.underlying_basis(y, x)
        if not basis:
            return None
        cols_left = []
        cols_right = []
        for e in basis:
            cols_left.append(self.vector_of_name(x, x, self.compose_names(x, y, x, e, f)))
            cols_right.append(self.vector_of_name(y, y, self.compose_names(y, x, y, f, e)))
        rows = []
        rhs = []
        idx = self.vector_of_name(x, x, self.ident(x))
        for r in range(len(idx)):
            rows.append([cols_left[c][r] for c in range(len(basis))])
            rhs.append([idx[r]])
        idy = self.vector_of_name(y, y, self.ident(y))
        for r in range(len(idy)):
            rows.append([cols_right[c][r] for c in range(len(basis))])
            rhs.append([idy[r]])
        sol = linalg.solve_right(rows, rhs)
        if sol is None:
            return None
        vec = [sol[i][0] for i in range(len(basis))]
        return self.name_from_vector(y, x, vec)

    def postcompose(self, x, y, z, g_name: BlockMorphism, simples=None) -> BlockMorphism:
        """The map hom(x,y) -> hom(x,z) given by composing with g: y -> z."""
        h = self.hom(x, y)
        lift = self.base.tensor_morphisms(g_name, self.base.identity_morphism(h),
                                          out_simples=simples)
        return self.comp(x, y, z, simples=simples).compose(lift)

    def precompose(self, x, y, z, f_name: BlockMorphism, simples=None) -> BlockMorphism:
        """The map hom(y,z) -> hom(x,z) given by composing with f: x -> y."""
        h = self.hom(y, z)
        lift = self.base.tensor_morphisms(self.base.identity_morphism(h), f_name,
                                          out_simples=simples)
        return self.comp(x, y, z, simples=simples).compose(lift)

    # -- axioms -------------------------------------------------------------

    def verify(self) -> None:
        """Eagerly check the enriched category axioms.

        Unit laws, associativity and the monoidal coherence checks run
        exhaustively over the generating handles.  Hom objects and all
        structure blocks are additive in each handle, so blocks at sum
        handles are direct sums of generator blocks; the test suite
        spot-checks that additivity directly.
        """
        base = self.base
        for x in self.objects:
            i = self._ident[x]
            if i.source != base.unit_object() or i.target != self.hom(x, x):
                raise AxiomViolation("ident-shape", (x,))
        gens = self.generators
        for x, y in product(gens, repeat=2):
            h = self.hom(x, y)
            ident_h = base.identity_morphism(h)
            left = self.comp(x, y, y).compose(
                base.tensor_morphisms(self.ident(y), ident_h))
            if not left.equals(ident_h):
                raise AxiomViolation("unit-law-left", (x, y))
            right = self.comp(x, x, y).compose(
                base.tensor_morphisms(ident_h, self.ident(x)))
            if not right.equals(ident_h):
                raise AxiomViolation("unit-law-right", (x, y))
        for x, y, z, w in product(gens, repeat=4):
            hzw, hyz, hxy = self.hom(z, w), self.hom(y, z), self.hom(x, y)
            first = self.comp(x, y, w).compose(
                base.tensor_morphisms(self.comp(y, z, w), base.identity_morphism(hxy)))
            alpha = base.rebracket(node(node(leaf(hzw), leaf(hyz)), leaf(hxy)),
                                   node(leaf(hzw), node(leaf(hyz), leaf(hxy))))
            second = self.comp(x, z, w).compose(
                base.tensor_morphisms(base.identity_morphism(hzw),
                                      self.comp(x, y, z))).compose(alpha)
            if not first.equals(second):
                raise AxiomViolation("associativity", (x, y, z, w))
        if self.monoidal is not None:
            self._verify_monoidal()

    def _verify_monoidal(self) -> None:
        base = self.base
        mon = self.monoidal
        if mon.unit not in self.objects:
            raise AxiomViolation("monoidal-unit", (mon.unit,), "unit handle missing")
        for x in self.objects:
            for pair, want in (((mon.unit, x), x), ((x, mon.unit), x)):
                if pair in mon.tensor and mon.tensor[pair] != want:
                    raise AxiomViolation("strict-unitor", pair)
        pairs = sorted(mon.tensor.keys(), key=self._handle_sort_key)
        # Tensorator preserves identities.
        for (x, y) in pairs:
            lhs = self.tensor_names(x, y, x, y, self.ident(x), self.ident(y))
            if not lhs.equals(self.ident(mon.tensor[(x, y)])):
                raise AxiomViolation("tensorator-ident", (x, y))
        # Tensorator is an enriched functor on the Cartesian square of the
        # generating handles.
        gen_set = set(self.generators)
        gen_pairs = [p for p in pairs if p[0] in gen_set and p[1] in gen_set]
        square = cartesian_product(self, self, objects=gen_pairs, verify=False)
        functor = tensor_functor(self, square)
        functor.verify(triples=None)
        # Underlying triangle: middle-unit associator names are identities.
        for (x, y) in pairs:
            if (x, mon.unit) in mon.tensor and (mon.unit, y) in mon.tensor:
                a = self.assoc_name(x, mon.unit, y)
                if not a.equals(self.ident(mon.tensor[(x, y)])):
                    raise AxiomViolation("triangle", (x, y))
        # Underlying pentagon for the associator names, wherever all the
        # intermediate tensors are defined.
        t = mon.tensor.get
        for x, y, z, w in product(self.generators, repeat=4):
            xy, yz, zw = t((x, y)), t((y, z)), t((z, w))
            if None in (xy, yz, zw):
                continue
            xy_z, x_yz = t((xy, z)), t((x, yz))
            y_zw, yz_w = t((y, zw)), t((yz, w))
            if None in (xy_z, x_yz, y_zw, yz_w):
                continue
            total = t((xy_z, w))
            if total is None or t((xy, zw)) != total or t((x, y_zw)) != total \
                    or t((x_yz, w)) != total or t((x, yz_w)) != total:
                continue
            lhs = self.compose_names(total, total, total,
                                     self.assoc_name(x, y, zw),
                                     self.assoc_name(xy, z, w))
            rhs = self.compose_names(
                total, total, total,
                self.tensor_names(x, yz_w, x, y_zw,
                                  self.ident(x), self.assoc_name(y, z, w)),
                self.compose_names(
                    total, total, total,
                    self.assoc_name(x, yz, w),
                    self.tensor_names(xy_z, w, x_yz, w,
                                      self.assoc_name(x, y, z), self.ident(w))))
            if not lhs.equals(rhs):
                raise AxiomViolation("pentagon-underlying", (x, y, z, w))

    def _handle_sort_key(self, h):
        return (str(type(h)), repr(h))


def _require_same_base(c: EnrichedCat, d: EnrichedCat) -> None:
    if c.base is not d.base:
        raise InvalidInput("enriched categories have different bases")


@dataclass
class EnrichedFunctor:
    """A functor of enriched categories: an object map plus hom-object maps."""

    source: EnrichedCat
    target: EnrichedCat
    on_objects: dict
    on_hom_fn: object  # (x, y, simple) -> matrix
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    def on_hom(self, x, y, simples=None) -> BlockMorphism:
        fx, fy = self.on_objects[x], self.on_objects[y]
        src = self.source.hom(x, y)
        tgt = self.target.hom(fx, fy)
        out = BlockMorphism(src, tgt)
        labels = tgt.support() if simples is None else simples
        for s in labels:
            if not tgt.mult_of(s) or not src.mult_of(s):
                continue
            key = (x, y, s)
            if key not in self._cache:
                self._cache[key] = self.on_hom_fn(x, y, s)
            out.set_block(s, self._cache[key])
        return out

    def verify(self, triples=None) -> None:
        """Check identity and composition preservation; raises on failure."""
        src, tgt = self.source, self.target
        for x in src.objects:
            got = self.on_hom(x, x, simples=(src.base.unit,)).compose(src.ident(x))
            if not got.equals(tgt.ident(self.on_objects[x])):
                raise AxiomViolation("functor-ident", (self.name, x))
        if triples is None:
            triples = product(src.objects, repeat=3)
        for x, y, z in triples:
            fx, fy, fz = (self.on_objects[h] for h in (x, y, z))
            first = self.on_hom(x, z).compose(src.comp(x, y, z))
            second = tgt.comp(fx, fy, fz).compose(
                src.base.tensor_morphisms(self.on_hom(y, z), self.on_hom(x, y)))
            if not first.equals(second):
                raise AxiomViolation("functor-comp", (self.name, x, y, z))


@dataclass
class EnrichedNatTransf:
    """A natural transformation between enriched functors.

    Components are underlying morphisms 1 -> hom(F(x), G(x)).
    """

    source: EnrichedFunctor
    target: EnrichedFunctor
    components: dict
    name: str = ""

    def verify(self) -> None:
        F, G = self.source, self.target
        cat = F.target
        for x, y in product(F.source.objects, repeat=2):
            fx, fy = F.on_objects[x], F.on_objects[y]
            gx, gy = G.on_objects[x], G.on_objects[y]
            post = cat.postcompose(fx, fy, gy, self.components[y]).compose(F.on_hom(x, y))
            pre = cat.precompose(fx, gx, gy, self.components[x]).compose(G.on_hom(x, y))
            if not post.equals(pre):
                raise AxiomViolation("naturality", (self.name, x, y))

    def is_isomorphism(self) -> bool:
        F = self.source
        cat = F.target
        for x in F.source.objects:
            fx, gx = F.on_objects[x], self.target.on_objects[x]
            if cat.invert_name(fx, gx, self.components[x]) is None:
                return False
        return True


# -- names of base morphisms ------------------------------------------------


def name_of_morphism(base: FusionData, f: BlockMorphism) -> BlockMorphism:
    """The element 1 -> target @ source* corresponding to f: source -> target."""
    lifted = base.tensor_morphisms(f, base.identity_morphism(base.dual_object(f.source)),
                                   out_simples=(base.unit,))
    return lifted.compose(base.coev(f.source))


def realize_name(base: FusionData, src: MultObject, tgt: MultObject,
                 nm: BlockMorphism) -> BlockMorphism:
    """Recover the morphism src -> tgt from its name 1 -> tgt @ src*."""
    srcd = base.dual_object(src)
    step1 = base.tensor_morphisms(nm, base.identity_morphism(src))
    w_from = node(node(leaf(tgt), leaf(srcd)), leaf(src))
    w_to = node(leaf(tgt), node(leaf(srcd), leaf(src)))
    step2 = base.rebracket(w_from, w_to)
    step3 = base.tensor_morphisms(base.identity_morphism(tgt), base.ev(src))
    return step3.compose(step2).compose(step1)


# -- self-enrichment ----------------------------------------------------------


def _closed_objects(base: FusionData, depth: int) -> list:
    """Tensor products of up to `depth` simples, deduplicated, unit first."""
    simples = [MultObject.simple(s) for s in base.simples]
    seen = {base.unit_object()}
    out = [base.unit_object()]
    level = [base.unit_object()]
    for _ in range(depth):
        nxt = []
        for m in level:
            for s in simples:
                p = base.tensor_objects(m, s)
                if p not in seen:
                    seen.add(p)
                    out.append(p)
                nxt.append(p)
        level = nxt
    return out


def self_enrich(base: FusionData, depth: int = 3, verify: bool = True) -> EnrichedCat:
    """The self-enrichment of a braided base with duals.

    Handles are multiplicity objects (all products of at most ``depth``
    simples); hom(x, y) = y @ x*; composition is induced by evaluation,
    identities by coevaluation, and the tensorator braids the dual
    factor across: 1 @ c_{x*, y' @ y*}.
    """
    if not base.is_braided():
        raise InvalidInput("self-enrichment needs a braided base")
    objects = _closed_objects(base, depth)
    obj_set = set(objects)
    hom = {}
    for m1 in objects:
        d1 = base.dual_object(m1)
        for m2 in objects:
            hom[(m1, m2)] = base.tensor_objects(m2, d1)
    ident = {m: base.coev(m) for m in objects}

    def comp_fn(m1, m2, m3, s):
        d1, d2 = base.dual_object(m1), base.dual_object(m2)
        w0 = node(node(leaf(m3), leaf(d2)), node(leaf(m2), leaf(d1)))
        w1 = node(leaf(m3), node(node(leaf(d2), leaf(m2)), leaf(d1)))
        move = base.rebracket(w0, w1, out_simples=(s,))
        pair = base.tensor_morphisms(base.ev(m2), base.identity_morphism(d1))
        contract = base.tensor_morphisms(base.identity_morphism(m3), pair,
                                         out_simples=(s,))
        return contract.compose(move).block(s)

    tensor = {}
    for m1 in objects:
        for m2 in objects:
            p = base.tensor_objects(m1, m2)
            if p in obj_set:
                tensor[(m1, m2)] = p

    def tensorator_fn(p1, p2, s):
        (x, y), (x2, y2) = p1, p2
        dx, dy = base.dual_object(x), base.dual_object(y)
        w0 = node(node(leaf(x2), leaf(dx)), node(leaf(y2), leaf(dy)))
        w1 = node(leaf(x2), node(leaf(dx), node(leaf(y2), leaf(dy))))
        move1 = base.rebracket(w0, w1, out_simples=(s,))
        p = base.tensor_objects(y2, dy)
        braid = base.tensor_morphisms(base.identity_morphism(x2),
                                      base.braiding(dx, p), out_simples=(s,))
        w2 = node(leaf(x2), node(node(leaf(y2), leaf(dy)), leaf(dx)))
        w3 = node(node(leaf(x2), leaf(y2)), node(leaf(dy), leaf(dx)))
        move2 = base.rebracket(w2, w3, out_simples=(s,))
        # Land in the channelwise dual of x @ y, not the factorwise one.
        fix = base.tensor_morphisms(
            base.identity_morphism(base.tensor_objects(x2, y2)),
            base.dual_factor_iso(x, y), out_simples=(s,))
        return fix.compose(move2).compose(braid).compose(move1).block(s)

    def assoc_fn(x, y, z):
        return name_of_morphism(base, base.associator(x, y, z))

    mon = MonoidalData(unit=base.unit_object(), tensor=tensor,
                       tensorator_fn=tensorator_fn, assoc_fn=assoc_fn)
    gens = [MultObject.simple(s) for s in base.simples]
    cat = EnrichedCat(base, objects, hom, ident, comp_fn, monoidal=mon,
                      generators=gens, name=f"self-enrich({base.name})")
    if verify:
        cat.verify()
    return cat


def underlying_hom(cat: EnrichedCat, x, y) -> tuple[int, list]:
    """Dimension and canonical basis of the underlying morphism space."""
    return cat.unit_dim(x, y), cat.underlying_basis(x, y)


# -- Cartesian products --------------------------------------------------------


def cartesian_product(c: EnrichedCat, d: EnrichedCat, objects=None,
                      verify: bool = True) -> EnrichedCat:
    """The product enriched category, with the inverse-braiding composition."""
    _require_same_base(c, d)
    base = c.base
    if objects is None:
        objects = [(x, y) for x in c.objects for y in d.objects]
    hom = {}
    for (x, y) in objects:
        for (x2, y2) in objects:
            hom[((x, y), (x2, y2))] = base.tensor_objects(c.hom(x, x2), d.hom(y, y2))
    ident = {(x, y): base.tensor_morphisms(c.ident(x), d.ident(y))
             for (x, y) in objects}

    def comp_fn(p, p1, p2, s):
        (x, y), (x1, y1), (x2, y2) = p, p1, p2
        a = c.hom(x1, x2)
        b = d.hom(y1, y2)
        e = c.hom(x, x1)
        f = d.hom(y, y1)
        w0 = node(node(leaf(a), leaf(b)), node(leaf(e), leaf(f)))
        w1 = node(leaf(a), node(node(leaf(b), leaf(e)), leaf(f)))
        move1 = base.rebracket(w0, w1, out_simples=(s,))
        inner = base.tensor_morphisms(base.braiding(b, e, inverse=True),
                                      base.identity_morphism(f))
        swap = base.tensor_morphisms(base.identity_morphism(a), inner,
                                     out_simples=(s,))
        w2 = node(leaf(a), node(node(leaf(e), leaf(b)), leaf(f)))
        w3 = node(node(leaf(a), leaf(e)), node(leaf(b), leaf(f)))
        move2 = base.rebracket(w2, w3, out_simples=(s,))
        pair = base.tensor_morphisms(c.comp(x, x1, x2), d.comp(y, y1, y2),
                                     out_simples=(s,))
        return pair.compose(move2).compose(swap).compose(move1).block(s)

    out = EnrichedCat(base, objects, hom, ident, comp_fn,
                      name=f"({c.name})x({d.name})")
    out.product_of = (c, d)
    if verify:
        out.verify()
    return out


def tensor_functor(cat: EnrichedCat, square: EnrichedCat | None = None) -> EnrichedFunctor:
    """The tensor product as an enriched functor from the Cartesian square.

    The square's objects are the handle pairs on which the tensor is
    defined.
    """
    if cat.monoidal is None:
        raise InvalidInput("category has no monoidal structure")
    if square is None:
        pairs = sorted(cat.monoidal.tensor.keys(), key=cat._handle_sort_key)
        square = cartesian_product(cat, cat, objects=pairs, verify=False)
    on_objects = {p: cat.monoidal.tensor[p] for p in square.objects}

    def on_hom_fn(p1, p2, s):
        return cat.tensorator(p1, p2, simples=(s,)).block(s)

    return EnrichedFunctor(square, cat, on_objects, on_hom_fn,
                           name=f"tensor({cat.name})")


def is_commutative(functor: EnrichedFunctor) -> bool:
    """Whether the functor from a product coequalizes the double braiding.

    Tests the square F . c^2 = F blockwise on all hom pairs; for a
    symmetric base the double braiding is the identity and every functor
    passes.
    """
    src = functor.source
    if src.product_of is None:
        raise InvalidInput("is_commutative needs a functor from a Cartesian product")
    c, d = src.product_of
    base = src.base
    for p1 in src.objects:
        for p2 in src.objects:
            (x, y), (x2, y2) = p1, p2
            hc = c.hom(x, x2)
            hd = d.hom(y, y2)
            mono = base.braiding(hd, hc).compose(base.braiding(hc, hd))
            f = functor.on_hom(p1, p2)
            if not f.compose(mono).equals(f):
                return False
    return True


def reverse(functor: EnrichedFunctor) -> EnrichedFunctor:
    """The reversed functor on the swapped product, F^rev(y, x) = F(x, y).

    Built by precomposing the hom maps with the braiding; verifying the
    functor axioms here is exactly the commutativity criterion, so this
    raises AxiomViolation for a non-commutative functor.
    """
    src = functor.source
    if src.product_of is None:
        raise InvalidInput("reverse needs a functor from a Cartesian product")
    c, d = src.product_of
    base = src.base
    swapped = [(y, x) for (x, y) in src.objects]
    rev_source = cartesian_product(d, c, objects=swapped, verify=False)
    on_objects = {(y, x): functor.on_objects[(x, y)] for (x, y) in src.objects}

    def on_hom_fn(q1, q2, s):
        (y, x), (y2, x2) = q1, q2
        braid = base.braiding(d.hom(y, y2), c.hom(x, x2), out_simples=None)
        return functor.on_hom((x, y), (x2, y2), simples=(s,)).compose(braid).block(s)

    rev = EnrichedFunctor(rev_source, functor.target, on_objects, on_hom_fn,
                          name=f"rev({functor.name})")
    rev.verify()
    return rev


# -- single-object enriched categories ----------------------------------------


def single_object_category(base: FusionData, algebra: MultObject,
                           multiplication: BlockMorphism, unit: BlockMorphism,
                           monoidal: bool = True, verify: bool = True) -> EnrichedCat:
    """The one-object enriched category of an associative algebra in the base.

    The hom object is the algebra, composition is the multiplication and
    the identity is the algebra unit.  With ``monoidal=True`` the tensor
    product is also the multiplication, which requires the algebra to be
    commutative; a non-commutative algebra is rejected, since the
    would-be product category carries no algebra structure.
    """
    a = algebra
    ta = base.tensor_objects(a, a)
    if multiplication.source != ta or multiplication.target != a:
        raise InvalidInput("multiplication must map A @ A -> A")
    if unit.source != base.unit_object() or unit.target != a:
        raise InvalidInput("unit must map 1 -> A")
    ida = base.identity_morphism(a)
    if not multiplication.compose(base.tensor_morphisms(unit, ida)).equals(ida):
        raise InvalidInput("algebra unit fails the left unit law")
    if not multiplication.compose(base.tensor_morphisms(ida, unit)).equals(ida):
        raise InvalidInput("algebra unit fails the right unit law")
    first = multiplication.compose(base.tensor_morphisms(multiplication, ida))
    second = multiplication.compose(base.tensor_morphisms(ida, multiplication)) \
        .compose(base.associator(a, a, a))
    if not first.equals(second):
        raise InvalidInput("algebra multiplication is not associative")
    if monoidal:
        commutative = multiplication.compose(base.braiding(a, a)).equals(multiplication)
        if not commutative:
            raise InvalidInput(
                "algebra is not commutative; the one-object category admits "
                "no enriched monoidal structure")

    star = "*"
    hom = {(star, star): a}
    ident = {star: unit}

    def comp_fn(x, y, z, s):
        return multiplication.block(s)

    mon = None
    if monoidal:
        def tensorator_fn(p1, p2, s):
            return multiplication.block(s)

        def assoc_fn(x, y, z):
            return unit

        mon = MonoidalData(unit=star, tensor={(star, star): star},
                           tensorator_fn=tensorator_fn, assoc_fn=assoc_fn)
    cat = EnrichedCat(base, [star], hom, ident, comp_fn, monoidal=mon,
                      name=f"one-object({base.name})")
    if verify:
        cat.verify()
    return cat
