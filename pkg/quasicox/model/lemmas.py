# -*- coding: utf-8 -*-
# +---------------------------------------------------------------------------+
# |  Copyright (c) 2026 Quasicox Developers                                   |
# |                                                                           |
# |  This file is part of Quasicox.                                           |
# |                                                                           |
# |  Quasicox is free software: you can redistribute it and/or modify         |
# |  it under the terms of the GNU General Public License as published by     |
# |  the Free Software Foundation, either version 3 of the License, or        |
# |  (at your option) any later version.                                      |
# |                                                                           |
# |  Quasicox is distributed in the hope that it will be useful,              |
# |  but WITHOUT ANY WARRANTY; without even the implied warranty of           |
# |  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            |
# |  GNU General Public License for more details.                             |
# |                                                                           |
# |  You should have received a copy of the GNU General Public License        |
# |  along with Quasicox.  If not, see <https://www.gnu.org/licenses/>.       |
# +---------------------------------------------------------------------------+

"""
Concrete word identities instantiating the braid-chain and commutator lemmas,
each paired with the presentation it holds in.
"""

from itertools import combinations
from typing import Iterator, List, NamedTuple, Optional

from quasicox.model.diagrams import PresentationSpec, artin_presentation, diagram_path, ngon_quotient
from quasicox.model.errors import check_range
from quasicox.model.perm import (Assignment, RelationFailure, chain_assignments, evaluate,
                                 ngon_signed_assignment, sigma_assignment)
from quasicox.model.word import (EMPTY, Letter, Word, commutator, cycle_commutator, gen, gens,
                                 invert, product, twisted_cycle_commutator)
from quasicox.utils.cache import PureFunctionCache


class LemmaInstance(NamedTuple):
    tag: str
    lhs: Word
    rhs: Word
    context: PresentationSpec

    def __str__(self) -> str:
        return f"{self.tag}: {self.lhs} = {self.rhs} in {self.context.name}"


def _br(u: Word, v: Word):
    return product(u, v, u), product(v, u, v)


def _cm(u: Word, v: Word):
    return product(u, v), product(v, u)


def _run(prefix: str, indices, sign: int = 1) -> Word:
    return Word([Letter(f"{prefix}{i}", sign) for i in indices])


@PureFunctionCache
def chain(k: int, prefix: str = 'y') -> PresentationSpec:
    return artin_presentation(diagram_path(k, prefix))


def conjugate_braid_instances() -> List[LemmaInstance]:
    """f - g - h a braid chain with f, h commuting."""
    ctx = chain(3)
    f, g, h = ctx.generator_words()
    fi, gi, hi = invert(f), invert(g), invert(h)
    ghg = product(g, h, gi)
    rows = [
        ('conjugate-braid', _br(f, ghg)),
        ('conjugate-braid', _br(f, product(gi, h, g))),
        ('conjugate-braid', _br(f, product(f, ghg, fi))),
        ('conjugate-commute', _cm(g, product(f, ghg, fi))),
        ('conjugate-commute', _cm(product(fi, g, f), product(hi, g, h))),
        ('conjugate-commute', _cm(product(f, g, fi), product(h, g, hi))),
    ]
    return [LemmaInstance(tag, lhs, rhs, ctx) for tag, (lhs, rhs) in rows]


def long_conjugate_instances(n: int) -> List[LemmaInstance]:
    """
    In the chain y1 - ... - yn, w_k = y1..y(k-1) yk y(k-1)^-1..y1^-1 for 2 <= k <= n.
    """
    check_range('n', n, 2)
    ctx = chain(n)
    y = lambda i: gen(f"y{i}")
    rows = []
    for k in range(2, n + 1):
        prefix = _run('y', range(1, k))
        w = product(prefix, y(k), invert(prefix))
        rows.append(('long-conjugate', (w, product(_run('y', range(k, 1, -1), -1), y(1),
                                                   _run('y', range(2, k + 1))))))
        rows.append(('long-conjugate-braid', _br(y(1), w)))
        rows.append(('long-conjugate-braid', _br(y(k), w)))
        if k >= 3:
            mid = _run('y', range(2, k))
            rows.append(('long-conjugate-braid', _br(y(k), product(invert(mid), y(1), mid))))
        for i in range(2, k):
            rows.append(('long-conjugate-commute', _cm(y(i), w)))
    return [LemmaInstance(tag, lhs, rhs, ctx) for tag, (lhs, rhs) in rows]


def rotated(words: List[Word], j: int) -> List[Word]:
    return words[j:] + words[:j]


def cycle_rotation_instances(n: int) -> List[LemmaInstance]:
    """Every rotation of the cycle commutator is trivial in G_0."""
    ctx = ngon_quotient(n, 0)
    a = ctx.generator_words()
    return [LemmaInstance(f"cycle-rotation[{j}]", cycle_commutator(rotated(a, j)), EMPTY, ctx)
            for j in range(n)]


def twisted_rotation_instances(n: int, t: int) -> List[LemmaInstance]:
    """Every rotation of the t-twisted cycle commutator is trivial in G_t."""
    ctx = ngon_quotient(n, t)
    a = ctx.generator_words()
    return [LemmaInstance(f"twisted-rotation[{j}]", twisted_cycle_commutator(rotated(a, j), t), EMPTY, ctx)
            for j in range(n)]


def twisted_subsets(n: int, t: int) -> Iterator[tuple]:
    return combinations(range(2, n - 1), t)


def twisted_subset_word(n: int, inverted) -> Word:
    """[a1, P an P^-1] with P = a2^e2 .. a(n-1)^e(n-1), e_i = -1 exactly on the inverted set."""
    inverted = set(inverted)
    prefix = Word([Letter(f"a{i}", -1 if i in inverted else 1) for i in range(2, n)])
    return commutator(gen('a1'), product(prefix, gen(f"a{n}"), invert(prefix)))


def twisted_subset_instances(n: int, t: int) -> List[LemmaInstance]:
    """Any t of a2..a(n-2) may carry the inversion, 1 <= t <= n-3."""
    check_range('t', t, 1, n - 3)
    ctx = ngon_quotient(n, t)
    return [LemmaInstance(f"twisted-subset{list(s)}", twisted_subset_word(n, s), EMPTY, ctx)
            for s in twisted_subsets(n, t)]


def hard_case_instance(k: int, prefix: str = 'a') -> LemmaInstance:
    """
    a1^-1 (a2..a(k-1)) ak^2 (a1..ak) = (a2..a(k-1)) (a1..a(k-2)) ak a(k-1)^2
    in the chain a1 - ... - ak.
    """
    check_range('k', k, 2)
    ctx = chain(k, prefix)
    a = lambda i, s=1: gen(f"{prefix}{i}", s)
    mid = _run(prefix, range(2, k))
    lhs = product(a(1, -1), mid, a(k), a(k), _run(prefix, range(1, k + 1)))
    rhs = product(mid, _run(prefix, range(1, k - 1)), a(k), a(k - 1), a(k - 1))
    return LemmaInstance('hard-case', lhs, rhs, ctx)


def lemma_identity_suite(n: int) -> List[LemmaInstance]:
    check_range('n', n, 4)
    suite = conjugate_braid_instances()
    suite.extend(long_conjugate_instances(n))
    suite.extend(cycle_rotation_instances(n))
    for t in range(1, n - 1):
        suite.extend(twisted_rotation_instances(n, t))
    for t in range(1, n - 2):
        suite.extend(twisted_subset_instances(n, t))
    for k in range(2, n):
        suite.append(hard_case_instance(k))
    return suite


# ─────────
# Checking

def _is_ngon_quotient(ctx: PresentationSpec) -> bool:
    """A(Delta_n) modulo its cycle or twisted cycle commutator, read off the relator labels."""
    n = len(ctx.generators)
    if list(ctx.generators) != [f"a{i}" for i in range(1, n + 1)]:
        return False
    labels = ctx.relator_labels
    return len(labels) == 1 and (labels[0] == 'cc' or labels[0].startswith('tc_'))


def context_assignments(ctx: PresentationSpec) -> List[Assignment]:
    if _is_ngon_quotient(ctx):
        n = len(ctx.generators)
        found = [sigma_assignment(n, ctx)]
        if n >= 4:
            found.append(ngon_signed_assignment(n, ctx))
        return found
    return chain_assignments(ctx)


def check_instance(instance: LemmaInstance, assignments: List[Assignment] = None) -> List[RelationFailure]:
    if instance.lhs == instance.rhs:
        return []
    failures = []
    for a in assignments if assignments is not None else context_assignments(instance.context):
        left, right = evaluate(a, instance.lhs), evaluate(a, instance.rhs)
        if left != right:
            failures.append(RelationFailure(f"{instance.tag}@{a.name}", str(left), str(right)))
    return failures


def verify_lemma_suite(n: int) -> List[RelationFailure]:
    failures = []
    for instance in lemma_identity_suite(n):
        failures.extend(check_instance(instance))
    return failures


def rewrite_once(w: Word, lhs: Word, rhs: Word) -> Optional[Word]:
    """Replace the leftmost occurrence of lhs in w by rhs; None when lhs does not occur."""
    letters, pattern = w.letters, lhs.letters
    size = len(pattern)
    for i in range(len(letters) - size + 1):
        if letters[i:i + size] == pattern:
            return Word(letters[:i] + rhs.letters + letters[i + size:])
    return None
