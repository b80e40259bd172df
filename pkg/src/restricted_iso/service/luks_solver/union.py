from typing import Iterable

from ..perm_engine import Coset, InconsistentAmbient, build_chain


def coset_union(parts: Iterable[Coset], degree: int = None) -> Coset:
    '''
    Smallest coset containing every nonempty part: subgroup generated by all part
    subgroups and the quotients r_i * r_1^-1, representative r_1.
    '''
    parts = list(parts)
    if degree is None:
        if not parts:
            raise InconsistentAmbient('coset_union of no parts needs an explicit degree')
        degree = parts[0].degree
    if any(part.degree != degree for part in parts):
        raise InconsistentAmbient('cosets live on different domains')
    nonempty = [part for part in parts if not part.is_empty()]
    if not nonempty:
        return Coset.empty(degree)
    first = nonempty[0]
    if len(nonempty) == 1:
        return first
    subgroup = first.subgroup
    inverse = ~first.rep
    pending = []
    for part in nonempty[1:]:
        candidates = list(part.subgroup.strong_gens) + [part.rep * inverse]
        pending.extend(g for g in candidates if not g.is_identity())
    gens = list(subgroup.strong_gens)
    for g in pending:
        if not subgroup.contains(g):
            gens.append(g)
            subgroup = build_chain(gens, degree)
    return Coset(degree, subgroup, first.rep)
