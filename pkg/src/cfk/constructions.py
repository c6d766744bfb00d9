"""
Constructions - новые комплексы из старых.

mirror (двойственный комплекс), tensor (связная сумма узлов),
staircase (L-space узлы), direct_sum и acyclic_square (ацикличный
квадрат-слагаемое), isomorphic (перебор соответствий генераторов)
и ранги ассоциированного градуированного комплекса.
"""

from collections import Counter, defaultdict
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from ..algebra import SparseMatrix, gf2_rank
from ..errors import UsageError
from .model import CfkComplex, DiffTerm, FlipInvolution, Generator

MIRROR_MARK = "*"


def _toggle_mark(text: str) -> str:
    return text[:-1] if text.endswith(MIRROR_MARK) else text + MIRROR_MARK


def _reduce_mod2(terms: Sequence[DiffTerm]) -> tuple:
    counts = Counter(terms)
    return tuple(t for t in sorted(counts, key=lambda t: (t.source, t.target, t.upower)) if counts[t] % 2)


def mirror(c: CfkComplex) -> CfkComplex:
    """
    Двойственный комплекс: (M, A) -> (-M, -A), слагаемое x -> U^a y
    превращается в y* -> U^a x*. Пометка '*' снимается при повторном
    зеркалировании, так что mirror(mirror(c)) == c.
    """
    generators = tuple(
        Generator(_toggle_mark(g.id), -g.maslov, -g.alexander) for g in c.generators
    )
    terms = tuple(
        DiffTerm(_toggle_mark(t.target), _toggle_mark(t.source), t.upower) for t in c.differential
    )
    flip = FlipInvolution(tuple((_toggle_mark(a), _toggle_mark(b)) for a, b in c.flip.pairs))
    return CfkComplex(_toggle_mark(c.name), generators, terms, flip)


def tensor(c1: CfkComplex, c2: CfkComplex) -> CfkComplex:
    """Тензорное произведение над F2[U, U^-1] с правилом Лейбница"""
    def pair_id(x: str, y: str) -> str:
        return f"{x}&{y}"

    generators = tuple(
        Generator(pair_id(x.id, y.id), x.maslov + y.maslov, x.alexander + y.alexander)
        for x in c1.generators
        for y in c2.generators
    )
    terms: List[DiffTerm] = []
    for x in c1.generators:
        for y in c2.generators:
            source = pair_id(x.id, y.id)
            for t in c1.outgoing.get(x.id, ()):
                terms.append(DiffTerm(source, pair_id(t.target, y.id), t.upower))
            for t in c2.outgoing.get(y.id, ()):
                terms.append(DiffTerm(source, pair_id(x.id, t.target), t.upower))

    sigma1, sigma2 = c1.sigma, c2.sigma
    pairs = set()
    for x in c1.generators:
        for y in c2.generators:
            a, b = pair_id(x.id, y.id), pair_id(sigma1[x.id], sigma2[y.id])
            if a != b:
                pairs.add(tuple(sorted((a, b))))
    return CfkComplex(f"{c1.name}#{c2.name}", generators, _reduce_mod2(terms), FlipInvolution(tuple(sorted(pairs))))


def staircase(steps: Sequence[int], name: Optional[str] = None) -> CfkComplex:
    """
    Лестница L-space узла: шаги (горизонтальный, вертикальный) по очереди,
    от A = g вниз до A = -g, где g = sum(steps) / 2.
    x_{2k+1} -> U^h x_{2k} и x_{2k+1} -> x_{2k+2}.
    """
    steps = [int(s) for s in steps]
    if len(steps) % 2:
        raise UsageError(f"staircase needs an even number of steps, got {len(steps)}")
    if any(s <= 0 for s in steps):
        raise UsageError(f"staircase steps must be positive, got {steps}")
    if steps != steps[::-1]:
        raise UsageError(f"staircase steps must be palindromic, got {steps}")

    genus = sum(steps) // 2
    n = len(steps)
    ids = [f"x{k}" for k in range(n + 1)]
    maslov = [Fraction(0)]
    alexander = [genus]
    terms = []
    for k in range(0, n, 2):
        h, v = steps[k], steps[k + 1]
        # x_{k+1}: горизонтальная стрелка длины h в x_k
        maslov.append(maslov[k] - 2 * h + 1)
        alexander.append(alexander[k] - h)
        terms.append(DiffTerm(ids[k + 1], ids[k], h))
        # x_{k+2}: вертикальная стрелка длины v
        maslov.append(maslov[k + 1] - 1)
        alexander.append(alexander[k + 1] - v)
        terms.append(DiffTerm(ids[k + 1], ids[k + 2], 0))

    generators = tuple(Generator(ids[k], maslov[k], alexander[k]) for k in range(n + 1))
    pairs = tuple((ids[k], ids[n - k]) for k in range(n // 2 + 1) if k != n - k)
    label = name or f"staircase[{','.join(str(s) for s in steps)}]"
    return CfkComplex(label, generators, tuple(terms), FlipInvolution(pairs))


def direct_sum(c1: CfkComplex, c2: CfkComplex, name: Optional[str] = None) -> CfkComplex:
    """Прямая сумма; совпадающие id второго слагаемого получают штрихи"""
    taken = set(c1.ids)
    renames: Dict[str, str] = {}
    for gid in c2.ids:
        new_id = gid
        while new_id in taken:
            new_id += "'"
        renames[gid] = new_id
        taken.add(new_id)

    def ren(gid: str) -> str:
        return renames.get(gid, gid)

    generators = c1.generators + tuple(Generator(ren(g.id), g.maslov, g.alexander) for g in c2.generators)
    terms = c1.differential + tuple(DiffTerm(ren(t.source), ren(t.target), t.upower) for t in c2.differential)
    flip = FlipInvolution(c1.flip.pairs + tuple((ren(a), ren(b)) for a, b in c2.flip.pairs))
    return CfkComplex(name or f"{c1.name}+{c2.name}", generators, terms, flip)


def acyclic_square(maslov: int = 0, name: str = "square") -> CfkComplex:
    """
    Квадрат 1x1: x1 -> U·x2 + x3, x2 -> x4, x3 -> U·x4, σ: x2 <-> x3.
    Ацикличен над F2[U, U^-1] и не влияет на V_0.
    """
    m = Fraction(maslov)
    generators = (
        Generator("x1", m, 0),
        Generator("x2", m + 1, 1),
        Generator("x3", m - 1, -1),
        Generator("x4", m, 0),
    )
    terms = (
        DiffTerm("x1", "x2", 1),
        DiffTerm("x1", "x3", 0),
        DiffTerm("x2", "x4", 0),
        DiffTerm("x3", "x4", 1),
    )
    return CfkComplex(name, generators, terms, FlipInvolution((("x2", "x3"),)))


def knot_floer_ranks(c: CfkComplex) -> Dict[int, int]:
    """
    Ранги HFK-hat по градуировке Александера: остаются слагаемые
    с upower = 0 и равной градуировкой Александера.
    """
    by_alexander: Dict[int, List[str]] = defaultdict(list)
    for g in c.generators:
        by_alexander[g.alexander].append(g.id)

    ranks = {}
    for a, ids in by_alexander.items():
        position = {gid: k for k, gid in enumerate(ids)}
        counts = Counter()
        for col, gid in enumerate(ids):
            for t in c.outgoing.get(gid, ()):
                if t.upower == 0 and t.target in position:
                    counts[(position[t.target], col)] += 1
        rank = gf2_rank(SparseMatrix(len(ids), len(ids), {k: v % 2 for k, v in counts.items()}))
        dimension = len(ids) - 2 * rank
        if dimension:
            ranks[a] = dimension
    return dict(sorted(ranks.items(), reverse=True))


def isomorphic(c1: CfkComplex, c2: CfkComplex) -> bool:
    """
    Перебор биекций генераторов с сохранением (M, A),
    затем проверка дифференциала и σ.
    """
    if len(c1.generators) != len(c2.generators):
        return False

    def signature(c: CfkComplex, gid: str) -> tuple:
        g = c.generator(gid)
        out_powers = tuple(sorted(p for (_, p) in c.boundary(gid)))
        return (g.maslov, g.alexander, out_powers)

    sig1 = {gid: signature(c1, gid) for gid in c1.ids}
    sig2 = {gid: signature(c2, gid) for gid in c2.ids}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return False

    boundary2 = {gid: set(c2.boundary(gid)) for gid in c2.ids}
    sigma1, sigma2 = c1.sigma, c2.sigma
    order = c1.ids
    assignment: Dict[str, str] = {}
    used = set()

    def consistent(gid: str) -> bool:
        # проверяем слагаемые и σ между уже сопоставленными генераторами
        image = assignment[gid]
        for other in assignment:
            mapped = assignment[other]
            for (src, dst, img_src, img_dst) in ((gid, other, image, mapped), (other, gid, mapped, image)):
                powers1 = {p for (t, p) in c1.boundary(src) if t == dst}
                powers2 = {p for (t, p) in boundary2[img_src] if t == img_dst}
                if powers1 != powers2:
                    return False
        s = sigma1[gid]
        if s in assignment and assignment[s] != sigma2[image]:
            return False
        return True

    def search(k: int) -> bool:
        if k == len(order):
            return True
        gid = order[k]
        for candidate in c2.ids:
            if candidate in used or sig2[candidate] != sig1[gid]:
                continue
            assignment[gid] = candidate
            used.add(candidate)
            if consistent(gid) and search(k + 1):
                return True
            del assignment[gid]
            used.discard(candidate)
        return False

    return search(0)
