"""Published convergence tables for the trapezoidal evaluations.

Each entry maps ``(function, nu, z)`` to the rows ``(1/h, estimate)`` printed
for that case, already multiplied back to unscaled values, plus the number of
mesh points reported for the last row.  Mesh interval sequences start at
``h = 1`` (``1/h = 1``) unless a row is missing from the printed table.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceCase:
    function: str
    nu: float
    z: complex
    rows: tuple[tuple[float, complex], ...]
    final_mesh: int | None = None

    @property
    def final(self) -> complex:
        return self.rows[-1][1]

    @property
    def final_inv_h(self) -> float:
        return self.rows[-1][0]


def _rows(start, values, scale=1.0):
    inv_h = start
    out = []
    for v in values:
        out.append((float(inv_h), v * scale))
        inv_h *= 2
    return tuple(out)


K_CASES = (
    ReferenceCase("k", 0.0, 0.1, _rows(1, [
        2.4270411398562500, 2.4270690280995760, 2.4270690247020160,
        2.4270690247020160, 2.4270690247020160]), 109),
    ReferenceCase("k", 0.0, 1.0, _rows(1, [
        4.2093651061485910, 4.2102443651111410, 4.2102443824070830,
        4.2102443824070820, 4.2102443824070860], 1e-1), 73),
    ReferenceCase("k", 0.0, 10.0, _rows(1, [
        2.2898796730520020, 1.7784516875448650, 1.7780062316160170,
        1.7780062316167640, 1.7780062316167640], 1e-5), 39),
    ReferenceCase("k", 2.718, 0.01, _rows(1, [
        1.3971410533213900, 1.4069020983294600, 1.4069007287784400,
        1.4069007287784680, 1.4069007287784690], 1e6), 150),
    ReferenceCase("k", 2.718, 1.0, _rows(1, [
        4.5499620838028870, 4.4990464843961750, 4.4990344319187840,
        4.4990344319187440, 4.4990344319187490]), 76),
    ReferenceCase("k", 2.718, 100.0, _rows(2, [
        9.3003005343367060, 5.1485962786909920, 4.8309595172648830,
        4.8309557412195010, 4.8309557412195190], 1e-45), 31),
)

J_CASES = (
    ReferenceCase("j", 1.0, 0.1, _rows(1, [
        31.345191248338983, 10.041458336150352, 4.6676417956858660,
        4.9945606293393470, 4.9937525888302830, 4.9937526036242310,
        4.9937526036242150], 1e-2), 170),
    ReferenceCase("j", 1.0, 1.0, _rows(1, [
        4.8467801345031150, 4.4021190106017660, 4.4005165097301950,
        4.4005058776709640, 4.4005058574493330, 4.4005058574493360,
        4.4005058574493360], 1e-1), 143),
    ReferenceCase("j", 1.0, 10.0, _rows(1, [
        -0.4925474998142820, 1.0068496120069950, 4.3196234829077260,
        4.3472746212950720, 4.3472746168861340, 4.3472746168861360,
        4.3472746168861360], 1e-2), 100),
)

N_CASES = (
    ReferenceCase("n", 1.0, 0.1, _rows(1, [
        -8.8144514807365150, -6.9425974076350090, -6.4423194399898340,
        -6.4589510404444700, -6.4589510946346440, -6.4589510947020300,
        -6.4589510947020260]), 170),
    ReferenceCase("n", 1.0, 1.0, _rows(1, [
        -8.7650596245401650, -7.7995753906298610, -7.8122614661845390,
        -7.8121282132147710, -7.8121282130028910, -7.8121282130028880,
        -7.8121282130028900], 1e-1), 143),
    ReferenceCase("n", 1.0, 10.0, _rows(1, [
        5.9270115605778720, 3.0058017631631780, 2.4884846077698730,
        2.4901542425773410, 2.4901542420695390, 2.4901542420695390,
        2.4901542420695380], 1e-1), 100),
)

I_CASES = (
    ReferenceCase("i", 2.0, 0.01, _rows(1, [
        1.3064343443386580, 1.2500498297927580, 1.2500104167008290,
        1.2500104166992180, 1.2500104166992180], 1e-5), 153),
    ReferenceCase("i", 2.0, 1.0, _rows(1, [
        1.3816626095670520, 1.3574337442588980, 1.3574766976672790,
        1.3574766976703830, 1.3574766976703830], 1e-1), 154),
    ReferenceCase("i", 2.0, 100.0, _rows(1, [
        1.2067758487728730, 1.0592308945349150, 1.0523850353949020,
        1.0523843193243160, 1.0523843193243120], 1e42), 184),
)

GAMMA_CASES = (
    ReferenceCase("gamma", 0.0, 0.1, _rows(2, [
        9.5549513353975270, 9.5135056276599310, 9.5135076986687030,
        9.5135076986687440, 9.5135076986687340])),
    ReferenceCase("gamma", 0.0, 1 + 10j, _rows(4, [
        3.8842234738425380e-07 + 1.1373821528014910e-06j,
        3.9189292710322890e-07 + 1.1284479696266400e-06j,
        3.9189292708814600e-07 + 1.1284479695846110e-06j,
        3.9189292708814050e-07 + 1.1284479695846170e-06j,
        3.9189292708813940e-07 + 1.1284479695846280e-06j])),
)

ALL_CASES = K_CASES + J_CASES + N_CASES + I_CASES + GAMMA_CASES
