"""|Z_CS_N|^2 against Z_BF_N.

Both sides live in Z[zeta_D]; the verdict is exact equality there.
"""
import logging
from collections import Counter
from typing import Optional

from abeltqft.algebra.cyclotomic import CyclotomicNumber, counts_to_number
from abeltqft.theories.bf import BFTheory
from abeltqft.theories.chern_simons import ChernSimonsTheory
from abeltqft.theories.types import CompareRecord, Level
from abeltqft.topology.groups import torsion_elements
from abeltqft.topology.linking import LinkingForm

logger = logging.getLogger(__name__)


def magnitude_law_abs_sq(form: LinkingForm, level: Level, budget: Optional[int] = None) -> CyclotomicNumber:
    """|T| * sum over r in K of exp(-2 pi i N Q(r, r)), K = {r : 2N Q(r, .) = 0}.

    Substituting k = s + r in the double sum for |Z_CS|^2 and summing
    over s kills every r outside K.
    """
    level = Level.of(level)
    d = form.denominator
    n = level.n % d
    rank = len(form.torsion_orders)
    basis = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    counts: Counter = Counter()
    for r in torsion_elements(form.group, budget):
        c = r.coefficients
        if all((2 * n * form.numerator_of(c, e)) % d == 0 for e in basis):
            counts[(-n * form.numerator_of(c, c)) % d] += 1
    return counts_to_number(d, counts) * form.group.torsion_order


def compare_cs_bf(
    form: LinkingForm,
    level: Level,
    budget: Optional[int] = None,
    precision: Optional[int] = None,
) -> CompareRecord:
    level = Level.of(level)
    cs = ChernSimonsTheory().partition(form, level, budget, precision)
    bf = BFTheory().partition(form, level, budget, precision)
    abs_sq = cs.exact * cs.exact.conjugate()
    equal = abs_sq.equals(bf.exact)
    logger.info(f"[Compare] N={level.n} torsion={form.torsion_orders}: |Z_CS|^2 = {abs_sq}, Z_BF = {bf.exact}, equal={equal}")
    return CompareRecord(
        level=level,
        torsion_orders=form.torsion_orders,
        abs_sq_cs=abs_sq,
        bf=bf.exact,
        equal=equal,
        predicted_abs_sq=magnitude_law_abs_sq(form, level, budget),
    )
