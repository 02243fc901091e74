"""Shared fixtures and an independent isomorphism checker for the test suite.

The isomorphism checker deliberately avoids canonical keys so it can serve
as a second opinion on them: it matches rooted diagrams by backtracking over
child permutations, requiring weights, proximity degrees and second targets
to correspond under the partial map built so far.
"""

import itertools
import random

from enriques import (
    ProximityDiagram,
    WeightedDiagram,
    proximity_diagram,
    weighted_diagram,
)


def wd(root, parent, prox, nu):
    return weighted_diagram(proximity_diagram(root, parent, prox), nu)


def cusp_minimal():
    """Weights (2,1,1), the end leaning on the root."""
    return wd(0, {1: 0, 2: 1}, [(1, 0), (2, 1), (2, 0)], {0: 2, 1: 1, 2: 1})


def cusp_complete():
    """The cusp cluster with its free weight-1 tail restored."""
    return wd(
        0,
        {1: 0, 2: 1, 3: 2},
        [(1, 0), (2, 1), (2, 0), (3, 2)],
        {0: 2, 1: 1, 2: 1, 3: 1},
    )


def leaning_bamboo(weights):
    """Chain whose third and later vertices lean on their grandparent.

    weights[0] is the root weight.  Every non-root vertex is proximate to its
    parent; vertices from index 2 on are satellites with the grandparent as
    second target.
    """
    parent = {}
    prox = []
    for i in range(1, len(weights)):
        parent[i] = i - 1
        prox.append((i, i - 1))
        if i >= 2:
            prox.append((i, i - 2))
    return wd(0, parent, prox, dict(enumerate(weights)))


def _second_target(d: ProximityDiagram, v: int):
    p = d.parent.get(v)
    for t in d.prox_targets[v]:
        if t != p:
            return t
    return None


def isomorphic(a: WeightedDiagram, b: WeightedDiagram) -> bool:
    """Weight- and proximity-preserving rooted isomorphism test."""
    if len(a) != len(b):
        return False
    da, db = a.diagram, b.diagram

    def match(u, v, image):
        if a.nu[u] != b.nu[v]:
            return False
        if len(da.prox_targets[u]) != len(db.prox_targets[v]):
            return False
        su, sv = _second_target(da, u), _second_target(db, v)
        if (su is None) != (sv is None):
            return False
        # targets are ancestors, so su is already mapped when u is reached
        if su is not None and image[su] != sv:
            return False
        image[u] = v
        cu, cv = da.children[u], db.children[v]
        if len(cu) != len(cv):
            return False
        for perm in itertools.permutations(cv):
            trial = dict(image)
            if all(match(x, y, trial) for x, y in zip(cu, perm)):
                image.update(trial)
                return True
        return False

    return match(da.root, db.root, {})


def random_proximity(rng: random.Random, max_vertices=8) -> ProximityDiagram:
    """Random axiom-valid proximity diagram with 1..max_vertices vertices."""
    n = rng.randint(1, max_vertices)
    parent = {}
    prox = []
    targets = {0: []}
    used_pairs = set()
    for v in range(1, n):
        p = rng.randrange(v)
        second = None
        options = [t for t in targets[p] if (p, t) not in used_pairs]
        if options and rng.random() < 0.4:
            second = rng.choice(options)
        parent[v] = p
        prox.append((v, p))
        targets[v] = [p]
        if second is not None:
            prox.append((v, second))
            targets[v].append(second)
            used_pairs.add((p, second))
    return proximity_diagram(0, parent, prox)


def random_consistent(rng: random.Random, max_vertices=8, max_excess=2) -> WeightedDiagram:
    """Random consistent weighted diagram built from nonnegative excesses.

    Satellites are kept at weight >= 1: a weight-0 satellite would pin its
    targets while being unremovable by any class move, so its class has no
    minimal member and lies outside every operation's useful domain.
    """
    d = random_proximity(rng, max_vertices)
    nu = {}
    for v in reversed(d.preorder):
        nu[v] = rng.randint(0, max_excess) + sum(nu[q] for q in d.prox_sources[v])
        if nu[v] == 0 and len(d.prox_targets[v]) == 2:
            nu[v] = 1
    if nu[d.root] == 0:
        nu[d.root] = 1
    return weighted_diagram(d, nu)
