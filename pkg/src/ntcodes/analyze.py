"""Certifiers for transitivity and regularity properties, and the socle-orbit
decomposition of neighbour-transitive codes.

Every check is an exact set or integer comparison. A false verdict always
carries a counterexample that can be re-checked without this module.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .codes import PairedAction, is_frequency_array, project, c1_of_J, rep_code, twisted_code
from .codes import perm_code, prod_code, rep_l_code
from .hamming import Code, distance_partition, distance_profiles, min_distance, neighbour_set, nu
from .limits import PreconditionError
from .perm import PermGroup, Permutation, find_relabeling
from .wreath import WreathElement, WreathGroup, chi_restrict, image_of_code


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Permutation):
        return list(obj.images)
    if isinstance(obj, WreathElement):
        return obj.to_json()
    if isinstance(obj, Code):
        return {"m": obj.m, "q": obj.q, "size": len(obj)}
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return [_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


@dataclass
class Report:
    property: str
    verdict: Any
    witnesses: dict = field(default_factory=dict)
    counterexample: Any = None
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"property": self.property, "verdict": _jsonable(self.verdict),
                "witnesses": _jsonable(self.witnesses),
                "counterexample": _jsonable(self.counterexample),
                "stats": _jsonable(self.stats)}

    def __bool__(self) -> bool:
        return bool(self.verdict)


class _Timer:
    def __init__(self):
        self.start = time.perf_counter()

    def seconds(self) -> float:
        return round(time.perf_counter() - self.start, 4)


def _preserve_failure(C: Code, X: WreathGroup) -> dict | None:
    ok, bad = X.preserves(C)
    if ok:
        return None
    k, w = bad
    return {"reason": "generator does not preserve the code", "generator": k,
            "word": w, "image": X.generators[k].apply(w)}


def _orbit_failure(X: WreathGroup, S: frozenset, what: str) -> dict | None:
    rep = min(S)
    orb = X.orbit_set(rep, limit=len(S))
    if orb == S:
        return None
    outside = sorted(S - orb)
    return {"reason": f"{what} is not a single orbit", "orbit_rep": rep,
            "orbit_size": len(orb), "unreached": outside[0] if outside else None,
            "escaped": min(orb - S) if orb - S else None}


# ---------------------------------------------------------------------------
# Transitivity
# ---------------------------------------------------------------------------


def check_neighbour_transitive(C: Code, X: WreathGroup) -> Report:
    """C and its neighbour set are both X-orbits."""
    if C.is_complete():
        raise PreconditionError("the complete code has no neighbours")
    clock = _Timer()
    stats = {"code_size": len(C)}
    bad = _preserve_failure(C, X)
    if bad is not None:
        return Report("neighbour_transitive", False, counterexample=bad, stats=stats)
    bad = _orbit_failure(X, C.word_set, "code")
    if bad is not None:
        stats["seconds"] = clock.seconds()
        return Report("neighbour_transitive", False, counterexample=bad, stats=stats)
    N = neighbour_set(C)
    stats["neighbour_set_size"] = len(N)
    bad = _orbit_failure(X, N, "neighbour set")
    stats["seconds"] = clock.seconds()
    if bad is not None:
        return Report("neighbour_transitive", False, counterexample=bad, stats=stats)
    return Report("neighbour_transitive", True,
                  witnesses={"code_orbit_rep": min(C.word_set), "neighbour_orbit_rep": min(N)},
                  stats=stats)


def check_completely_transitive(C: Code, X: WreathGroup, bound: int | None = None) -> Report:
    """Every cell of the distance partition is an X-orbit."""
    clock = _Timer()
    bad = _preserve_failure(C, X)
    if bad is not None:
        return Report("completely_transitive", False, counterexample=bad)
    part = distance_partition(C, bound)
    stats = {"cell_sizes": part.sizes(), "rho": part.rho}
    for i, cell in enumerate(part.cells):
        bad = _orbit_failure(X, cell, f"cell {i}")
        if bad is not None:
            bad["cell"] = i
            stats["seconds"] = clock.seconds()
            return Report("completely_transitive", False, counterexample=bad, stats=stats)
    stats["seconds"] = clock.seconds()
    return Report("completely_transitive", True,
                  witnesses={"orbit_reps": [min(c) for c in part.cells]}, stats=stats)


# ---------------------------------------------------------------------------
# Regularity
# ---------------------------------------------------------------------------


def check_s_regular(C: Code, s: int, bound: int | None = None) -> Report:
    """``|Gamma_k(v) & C|`` depends only on ``k`` and the cell of ``v``, for cells up to ``s``."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    clock = _Timer()
    part = distance_partition(C, bound, max_level=s)
    code_arr = C.array()
    profiles = []
    for i, cell in enumerate(part.cells):
        verts = sorted(cell)
        prof = distance_profiles(np.asarray(verts, dtype=np.int16).reshape(len(verts), C.m), code_arr)
        ref = prof[0]
        diff = np.nonzero((prof != ref).any(axis=1))[0]
        if len(diff):
            j = int(diff[0])
            k = int(np.nonzero(prof[j] != ref)[0][0])
            ce = {"cell": i, "vertices": [verts[0], verts[j]], "radius": k,
                  "counts": [int(ref[k]), int(prof[j][k])]}
            return Report(f"{s}-regular", False, counterexample=ce,
                          stats={"cell_sizes": part.sizes(), "seconds": clock.seconds()})
        profiles.append([int(x) for x in ref])
    return Report(f"{s}-regular", True, witnesses={"profiles": profiles},
                  stats={"cell_sizes": part.sizes(), "seconds": clock.seconds()})


def check_completely_regular(C: Code, bound: int | None = None) -> Report:
    rho = distance_partition(C, bound).rho
    rep = check_s_regular(C, rho, bound)
    rep.property = "completely_regular"
    rep.stats["rho"] = rho
    return rep


# ---------------------------------------------------------------------------
# Codes with minimum distance m
# ---------------------------------------------------------------------------


def rep_equivalence_witness(C: Code) -> WreathElement | None:
    """Base element mapping C into Rep(m, q), when C has minimum distance m.

    Coordinate ``i`` gets the permutation sending each word's ``i``-th symbol
    to its 0-th symbol; unused symbols are matched in increasing order.
    """
    if len(C) < 2:
        raise PreconditionError("need at least two codewords")
    if min_distance(C) < C.m:
        return None
    q = C.q
    bottom = []
    for i in range(C.m):
        img = {}
        for w in C:
            img[w[i]] = w[0]
        free_src = [a for a in range(q) if a not in img]
        free_dst = sorted(set(range(q)) - set(img.values()))
        img.update(zip(free_src, free_dst))
        bottom.append(Permutation([img[a] for a in range(q)]))
    return WreathElement.pure_bottom(bottom)


def rep_equivalent_group(C: Code) -> WreathGroup:
    """Conjugate of ``Diag_m(S_q) x| S_m`` preserving C, when C is equivalent to Rep(m, q)."""
    y = rep_equivalence_witness(C)
    if y is None or len(C) != C.q:
        raise PreconditionError("code is not equivalent to the repetition code")
    from .codes import rep_group
    yi = y.inverse()
    return WreathGroup(C.m, C.q, [y * x * yi for x in rep_group(C.m, C.q).generators])


# ---------------------------------------------------------------------------
# Socle structure
# ---------------------------------------------------------------------------


@dataclass
class SupportPartition:
    blocks: list[list[int]]
    factors: list[PermGroup]  # on the m*q pair points
    factor_order: int


def _component(d: Permutation, j: int, q: int) -> Permutation:
    off = j * q
    return Permutation._raw(tuple(x - off for x in d.images[off:off + q]))


def support_partition(socK: WreathGroup) -> SupportPartition:
    """Minimal normal subgroups of a base-group subgroup and their supports."""
    m, q = socK.m, socK.q
    G = socK.base_action_group()
    if G.is_trivial():
        raise PreconditionError("trivial group has no supports")
    mins = G.minimal_normal_subgroups()
    blocks = []
    for D in mins:
        supp = sorted({j for g in D.generators for j in range(m)
                       if any(g.images[j * q + a] != j * q + a for a in range(q))})
        blocks.append(supp)
    covered = [x for b in blocks for x in b]
    if len(covered) != len(set(covered)):
        raise PreconditionError("supports of minimal normal subgroups overlap")
    if sorted(covered) != list(range(m)):
        raise PreconditionError("supports do not cover every coordinate")
    order = mins[0].order()
    for D, supp in zip(mins, blocks):
        if D.order() != order:
            raise PreconditionError("minimal normal subgroups differ in order")
        if D.is_abelian() or not D.is_simple():
            raise PreconditionError("minimal normal subgroup is not nonabelian simple")
        for j in supp:
            comp = PermGroup(q, [_component(g, j, q) for g in D.generators])
            if comp.order() != D.order():
                raise PreconditionError(f"factor is not a full diagonal at coordinate {j}")
    pairs = sorted(zip(blocks, mins), key=lambda bm: bm[0][0])
    return SupportPartition([b for b, _ in pairs], [d for _, d in pairs], order)


@dataclass
class FormClass:
    form: int
    halves: list[tuple[list[int], list[int]]]  # per block; second list empty for form 1


def _coordinate_classes(D: PermGroup, supp: list[int], q: int) -> list[list[int]]:
    gens = list(D.generators)
    comps = {j: [_component(g, j, q) for g in gens] for j in supp}
    classes: list[list[int]] = []
    for j in supp:
        for cls in classes:
            if find_relabeling(comps[cls[0]], comps[j]) is not None:
                cls.append(j)
                break
        else:
            classes.append([j])
    return classes


def classify_form(socK: WreathGroup, sp: SupportPartition) -> FormClass:
    """Form 1: every coordinate map of a factor is induced by a relabeling.
    Form 2: two equal-sized relabeling classes per block."""
    forms = []
    halves = []
    for supp, D in zip(sp.blocks, sp.factors):
        classes = _coordinate_classes(D, supp, socK.q)
        if len(classes) == 1:
            forms.append(1)
            halves.append((classes[0], []))
        elif len(classes) == 2 and len(classes[0]) == len(classes[1]):
            forms.append(2)
            halves.append((classes[0], classes[1]))
        else:
            raise PreconditionError(
                f"block {supp} splits into relabeling classes of sizes "
                f"{[len(c) for c in classes]}")
    if len(set(forms)) != 1:
        raise PreconditionError(f"blocks disagree in form: {forms}")
    return FormClass(forms[0], halves)


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------


@dataclass
class Decomposition:
    K: WreathGroup
    socK: WreathGroup
    supports: list[list[int]]
    form: int
    halves: list[tuple[list[int], list[int]]]
    delta_orbit: Code
    translates: list[WreathElement]
    shape: str
    conjugator: WreathElement
    reference_group: PermGroup | None
    reference_pairing: PairedAction | None
    p: int | None
    checks: dict

    def report(self) -> Report:
        ok = all(self.checks.values())
        k = len(self.supports[0])
        return Report(
            "decompose", ok,
            witnesses={
                "shape": self.shape, "form": self.form, "ell": len(self.supports),
                "k": k, "p": self.p, "supports": self.supports,
                "halves": [list(h) for h in self.halves] if self.form == 2 else None,
                "K_order": self.K.order(), "socK_order": self.socK.order(),
                "delta_size": len(self.delta_orbit), "delta_base": self.delta_orbit.words[0],
                "translates": self.translates, "conjugator": self.conjugator,
                "reference_group": list(self.reference_group.generators) if self.reference_group else None,
                "checks": self.checks},
            counterexample=None if ok else {"failed": [k for k, v in self.checks.items() if not v]})


def _block_transporters(X: WreathGroup, blocks: list[list[int]]) -> list[WreathElement]:
    """For each block, an element of X whose top maps block 0 onto it."""
    where = {j: b for b, blk in enumerate(blocks) for j in blk}
    found: dict[int, WreathElement] = {0: WreathElement.identity(X.m, X.q)}
    queue = deque([0])
    while queue:
        b = queue.popleft()
        for g in X.generators:
            img = {where[g.top.images[j]] for j in blocks[b]}
            if len(img) != 1:
                raise PreconditionError("support partition is not X-invariant")
            c = img.pop()
            if c not in found:
                found[c] = found[b] * g
                queue.append(c)
    if len(found) != len(blocks):
        raise PreconditionError("X does not move blocks transitively")
    return [found[b] for b in range(len(blocks))]


def _placement(blocks: list[list[int]], groups_per_block: list[list[list[int]]],
               symbol: dict[int, int], q: int, m: int) -> Permutation:
    """Top permutation putting block ``b`` at positions ``b*k..``; within a block,
    the c-th coordinate carrying symbol a in class h goes to ``c*len*q + h*q + a``."""
    top = [0] * m
    k = len(blocks[0])
    for b, classes in enumerate(groups_per_block):
        nclass = len(classes)
        for h, cls in enumerate(classes):
            seen: dict[int, int] = {}
            for j in cls:
                a = symbol[j]
                c = seen.get(a, 0)
                seen[a] = c + 1
                top[j] = b * k + c * nclass * q + h * q + a
    return Permutation(top)


def decompose(C: Code, X: WreathGroup, nt_report: Report | None = None) -> Decomposition:
    """Split C into translates of the socle orbit of its least codeword and
    identify that orbit as a product of repetition or permutation codes."""
    q, m = C.q, C.m
    nt = nt_report if nt_report is not None else check_neighbour_transitive(C, X)
    if not nt.verdict:
        raise PreconditionError("code is not X-neighbour transitive")
    delta = min_distance(C)
    if delta < 3:
        raise PreconditionError(f"minimum distance {delta} < 3")
    if not X.top_group().is_transitive():
        raise PreconditionError("top group is not transitive")
    K = X.base_kernel()
    if K.is_trivial():
        raise PreconditionError("X meets the base group trivially")
    A = X.alphabet_group(0)
    if q < 2 or not A.is_2transitive():
        raise PreconditionError("alphabet group is not 2-transitive")
    socA = A.socle()
    if socA.is_abelian() or not socA.is_simple():
        raise PreconditionError("alphabet group is not almost simple")

    socK_pg = K.base_action_group().socle()
    socK = WreathGroup.from_base_action(m, q, socK_pg)
    sp = support_partition(socK)
    fc = classify_form(socK, sp)
    blocks = sp.blocks
    ell, k = len(blocks), len(blocks[0])

    alpha = C.words[0]
    Delta = socK.orbit_of_vertex(alpha)
    checks: dict[str, bool] = {}

    # translates: greedy cover, disjointness asserted
    trans = X.orbit_transversal(alpha)
    covered: set = set()
    translates = []
    for beta in C.words:
        if beta in covered:
            continue
        x = WreathElement.from_stacked(trans[beta], m, q)
        img = image_of_code(Delta, x).word_set
        if not img <= C.word_set or img & covered:
            checks["translates disjoint and inside C"] = False
            break
        covered |= img
        translates.append(x)
    checks.setdefault("translates disjoint and inside C", True)
    checks["translates cover C"] = covered == C.word_set

    # normalizing conjugator
    movers = _block_transporters(X, blocks)
    D1 = sp.factors[0]
    ref_coord = fc.halves[0][0][0]
    ref_gens = [_component(d, ref_coord, q) for d in D1.generators]
    twist_gens = None
    if fc.form == 2:
        twist_gens = [_component(d, fc.halves[0][1][0], q) for d in D1.generators]

    proj = [project(Delta, blk) for blk in blocks]
    rep_like = all(len(P) == q and min_distance(P) == k for P in proj) if q > 1 else False
    bottom = [None] * m
    symbol: dict[int, int] = {}
    groups_per_block = []
    ref_group = None
    ref_pairing = None
    p = None
    if rep_like:
        shape = "ProdRep"
        for blk, P in zip(blocks, proj):
            y = rep_equivalence_witness(P)
            for j, h in zip(blk, y.bottom):
                bottom[j] = h
                symbol[j] = 0
            groups_per_block.append([list(blk)])
        target = prod_code(rep_code(k, q), ell)
    else:
        d1_pg = D1
        for b, blk in enumerate(blocks):
            x = movers[b]
            xs = Permutation._raw(tuple(v - m for v in x.stacked()[m:]))
            xs_inv = ~xs
            gens_b = [xs_inv * d * xs for d in d1_pg.generators]
            classes = [[], []]
            for j in blk:
                comp = [_component(g, j, q) for g in gens_b]
                lam = find_relabeling(ref_gens, comp)
                cls = 0
                if lam is None and twist_gens is not None:
                    lam = find_relabeling(twist_gens, comp)
                    cls = 1
                if lam is None:
                    raise PreconditionError(f"coordinate {j} matches no reference action")
                bottom[j] = ~lam
                symbol[j] = lam.images.index(alpha[j])  # alpha_j under lam^-1
                classes[cls].append(j)
            groups_per_block.append([c for c in classes if c])
        ref_group = PermGroup(q, ref_gens)
        if fc.form == 1:
            shape = "ProdRepPerm"
            p = k // q
            block_code = perm_code(ref_group)
        else:
            shape = "ProdRepTwisted"
            p = k // (2 * q)
            ref_pairing = PairedAction(ref_group, twist_gens)
            block_code = twisted_code(ref_pairing)
        if p * q * (1 if fc.form == 1 else 2) != k:
            raise PreconditionError(f"block size {k} is not a multiple of the alphabet size")
        target = prod_code(rep_l_code(block_code, p), ell)

    y = WreathElement.pure_bottom(bottom)
    if shape == "ProdRep":
        s = Permutation([b * k + blk.index(j) for j in range(m)
                         for b, blk in enumerate(blocks) if j in blk])
    else:
        s = _placement(blocks, groups_per_block, symbol, q, m)
    z = y * WreathElement.pure_top(s, q)
    normalized = image_of_code(Delta, z)
    checks["normalized orbit equals target"] = normalized == target
    if shape != "ProdRep":
        mult = p * fc.form  # the twisted shape repeats every symbol in both halves
        checks["frequency permutation array"] = is_frequency_array(normalized) == ell * mult
        checks["block projections are frequency arrays"] = all(
            is_frequency_array(project(normalized, range(b * k, (b + 1) * k))) == mult
            for b in range(ell))
    checks["orbit distance at least code distance"] = (len(Delta) < 2 or min_distance(Delta) >= delta)

    return Decomposition(K, socK, blocks, fc.form, fc.halves, Delta, translates, shape, z,
                         ref_group, ref_pairing, p, checks)


# ---------------------------------------------------------------------------
# Projections and local actions
# ---------------------------------------------------------------------------


def is_invariant_partition(X: WreathGroup, blocks: Sequence[Iterable[int]]) -> bool:
    blocks = [frozenset(b) for b in blocks]
    bset = set(blocks)
    if sorted(x for b in blocks for x in b) != list(range(X.m)):
        return False
    for g in X.generators:
        for b in blocks:
            if frozenset(g.top.images[j] for j in b) not in bset:
                return False
    return True


def classify_projection(P: Code) -> str:
    if P.is_complete():
        return "complete"
    if P == rep_code(P.m, P.q):
        return "rep"
    if is_frequency_array(P) is not None:
        return "all-subset"
    return "other"


def check_projection_structure(C: Code, X: WreathGroup, blocks: Sequence[Iterable[int]]) -> Report:
    """Per-block projection type, the neighbour-set identity, and equal distances."""
    blocks = [sorted(set(b)) for b in blocks]
    if not is_invariant_partition(X, blocks):
        raise PreconditionError("partition is not X-invariant")
    clock = _Timer()
    per_block = []
    ok = True
    counter = None
    dists = []
    for J in blocks:
        P = project(C, J)
        kind = classify_projection(P)
        info: dict[str, Any] = {"block": J, "kind": kind, "size": len(P)}
        if kind != "complete":
            d = min_distance(P) if len(P) > 1 else None
            info["min_distance"] = d
            dists.append(d)
            projected = frozenset(tuple(v[j] for j in J) for v in c1_of_J(C, J))
            identity = neighbour_set(P) == projected
            info["neighbour identity"] = identity
            if not identity and counter is None:
                counter = {"block": J, "reason": "projected neighbours differ"}
            if d is not None and d < 2 and counter is None:
                counter = {"block": J, "reason": "projection has minimum distance below 2"}
            ok = ok and identity and (d is None or d >= 2)
        if kind == "all-subset":
            info["p"] = is_frequency_array(P)
        per_block.append(info)
    if len(set(dists)) > 1:
        ok = False
        counter = counter or {"reason": "block projections differ in minimum distance",
                              "distances": dists}
    return Report("projection_structure", ok, witnesses={"blocks": per_block},
                  counterexample=None if ok else counter, stats={"seconds": clock.seconds()})


def check_prop27(C: Code, X: WreathGroup, nt_report: Report | None = None) -> Report:
    """Stabilizer of a codeword is transitive on its neighbours and on coordinates;
    coordinate stabilizers are transitive on C; local alphabet actions are 2-transitive."""
    nt = nt_report if nt_report is not None else check_neighbour_transitive(C, X)
    if not nt.verdict:
        raise PreconditionError("code is not X-neighbour transitive")
    if min_distance(C) < 3:
        raise PreconditionError("minimum distance below 3")
    clock = _Timer()
    m, q = C.m, C.q
    alpha = C.words[0]
    X_alpha = X.vertex_stabilizer(alpha)
    sphere1 = frozenset(nu(alpha, i, b) for i in range(m) for b in range(q) if b != alpha[i])
    checks = {
        "stabilizer transitive on neighbours": X_alpha.is_orbit(sphere1),
        "stabilizer transitive on coordinates": X_alpha.top_group().is_transitive(),
    }
    coord_fail = None
    alph_fail = None
    for i in range(m):
        X_i = X.entry_stabilizer(i)
        if coord_fail is None and not X_i.is_orbit(C):
            coord_fail = i
        A = PermGroup(q, [g.bottom[i] for g in X_i.generators])
        if alph_fail is None and not A.is_2transitive():
            alph_fail = i
    checks["coordinate stabilizers transitive on code"] = coord_fail is None
    checks["alphabet actions 2-transitive"] = alph_fail is None
    ok = all(checks.values())
    ce = None
    if not ok:
        ce = {"failed": [k for k, v in checks.items() if not v],
              "coordinate": coord_fail if coord_fail is not None else alph_fail}
    return Report("prop27", ok, witnesses={"checks": checks, "codeword": alpha,
                                           "stabilizer_order": X_alpha.order()},
                  counterexample=ce, stats={"seconds": clock.seconds()})


def check_block_normalizes(X: WreathGroup, socK: WreathGroup, J: Iterable[int]) -> bool:
    """Restrictions of the block stabilizer normalize the restricted socle."""
    J = sorted(set(J))
    XJ = X.block_stabilizer(J)
    S = WreathGroup(len(J), X.q, [chi_restrict(g, J) for g in socK.generators])
    for x in XJ.generators:
        cx = chi_restrict(x, J)
        for s in S.generators:
            if not S.contains(s.conjugate(cx)):
                return False
    return True
