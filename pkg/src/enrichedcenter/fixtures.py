"""Built-in example categories used by tests and the CLI.

The pointed examples are generated from bicharacters; Fibonacci and the
semion carry explicit F/R-symbols.  The Fibonacci values are the exact
pentagon/hexagon solution over Q(zeta_5) in the gauge where the
off-diagonal associator entry F[1, tau] is 1 (the test suite re-derives
them from scratch and checks the match).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .basecat import FusionData
from .metricgroup import Bichar, FinAbGroup, Phase, pointed_fusion_data
from .scalar import CycScalar, root_of_unity

__all__ = [
    "trivial_category",
    "z2_symmetric",
    "toric_code",
    "z4_pointed",
    "z5_pointed",
    "fibonacci",
    "semion",
    "all_fixture_categories",
    "z2_bichar",
    "toric_bichar",
    "z4_bichar",
    "z5_bichar",
    "TORIC_NAMES",
]

TORIC_NAMES = {(0, 0): "1", (1, 0): "e", (0, 1): "m", (1, 1): "f"}


@cache
def z2_bichar() -> Bichar:
    return Bichar.from_generator_table(FinAbGroup.of(2), {})


@cache
def toric_bichar() -> Bichar:
    # c(e, m) = 1/2, all other generator pairs 0.
    return Bichar.from_generator_table(FinAbGroup.of(2, 2), {(0, 1): Phase(1, 2)})


@cache
def z4_bichar() -> Bichar:
    return Bichar.from_generator_table(FinAbGroup.of(4), {(0, 0): Phase(1, 4)})


@cache
def z5_bichar() -> Bichar:
    return Bichar.from_generator_table(FinAbGroup.of(5), {(0, 0): Phase(3, 5)})


@cache
def trivial_category() -> FusionData:
    one = CycScalar.one()
    return FusionData(
        simples=["1"], unit="1", dual={"1": "1"}, fusion={("1", "1", "1")},
        fsym={}, rsym={}, cupcap={"1": (one, one)}, name="trivial")


@cache
def z2_symmetric() -> FusionData:
    return pointed_fusion_data(z2_bichar(), name="z2-symmetric")


@cache
def toric_code() -> FusionData:
    return pointed_fusion_data(toric_bichar(), names=TORIC_NAMES, name="toric-code")


@cache
def z4_pointed() -> FusionData:
    return pointed_fusion_data(z4_bichar(), name="z4-pointed")


@cache
def z5_pointed() -> FusionData:
    return pointed_fusion_data(z5_bichar(), name="z5-pointed")


@cache
def fibonacci() -> FusionData:
    one = CycScalar.one()
    # phi^{-1} = zeta_5 + zeta_5^4 = -1 - zeta^2 - zeta^3 in the power basis.
    inv_phi = CycScalar(conductor=5, coeffs=(
        Fraction(-1), Fraction(0), Fraction(-1), Fraction(-1)))
    phi = inv_phi + 1
    t = "tau"
    fsym = {
        (t, t, t, t, "1", "1"): inv_phi,
        (t, t, t, t, "1", t): one,
        (t, t, t, t, t, "1"): inv_phi,
        (t, t, t, t, t, t): -inv_phi,
        (t, t, t, "1", t, t): one,
    }
    rsym = {
        (t, t, "1"): root_of_unity(2, 5),
        (t, t, t): root_of_unity(7, 10),
    }
    return FusionData(
        simples=["1", t], unit="1", dual={"1": "1", t: t},
        fusion={("1", "1", "1"), ("1", t, t), (t, "1", t), (t, t, "1"), (t, t, t)},
        fsym=fsym, rsym=rsym,
        cupcap={"1": (one, one), t: (one, phi)},
        name="fibonacci")


@cache
def semion() -> FusionData:
    one = CycScalar.one()
    minus_one = root_of_unity(1, 2)
    return FusionData(
        simples=["1", "s"], unit="1", dual={"1": "1", "s": "s"},
        fusion={("1", "1", "1"), ("1", "s", "s"), ("s", "1", "s"), ("s", "s", "1")},
        fsym={("s", "s", "s", "s", "1", "1"): minus_one},
        rsym={("s", "s", "1"): root_of_unity(1, 4)},
        cupcap={"1": (one, one), "s": (one, minus_one)},
        name="semion")


def all_fixture_categories() -> dict:
    return {
        "trivial": trivial_category(),
        "z2-symmetric": z2_symmetric(),
        "toric-code": toric_code(),
        "z4-pointed": z4_pointed(),
        "z5-pointed": z5_pointed(),
        "fibonacci": fibonacci(),
        "semion": semion(),
    }
