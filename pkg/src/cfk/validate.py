"""
Validator - проверка всех свойств комплекса CFK∞.

validate() никогда не бросает исключений: каждое нарушение становится
записью Violation в отчёте. Проверки, зависящие от корректных id,
пропускаются, если id сломаны.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from ..algebra import SparseMatrix, gf2_rank
from ..errors import Violation
from ..logger import trace
from .model import CfkComplex, DiffTerm


@dataclass(frozen=True)
class ValidationReport:
    """Результат validate()"""
    complex_name: str
    violations: Tuple[Violation, ...] = ()
    homology_rank: int = -1

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> List[str]:
        return sorted({v.kind for v in self.violations})

    def to_dict(self) -> dict:
        return {
            "name": self.complex_name,
            "valid": self.ok,
            "homology_rank": self.homology_rank,
            "violations": [
                {"kind": v.kind, "subject": v.subject, "message": v.message}
                for v in self.violations
            ],
        }


def _term_label(t: DiffTerm) -> str:
    return f"{t.source}->U^{t.upower}·{t.target}"


def _check_ids(c: CfkComplex) -> List[Violation]:
    found = []
    seen = Counter(g.id for g in c.generators)
    for gid, count in seen.items():
        if count > 1:
            found.append(Violation("duplicate_id", gid, f"generator id appears {count} times"))
    known = set(seen)
    for t in c.differential:
        for gid in (t.source, t.target):
            if gid not in known:
                found.append(Violation("unknown_id", _term_label(t), f"unknown generator '{gid}' in differential"))
    for pair in c.flip.pairs:
        if len(pair) != 2:
            found.append(Violation("flip_law", str(pair), "flip entry must be a pair of ids"))
            continue
        for gid in pair:
            if gid not in known:
                found.append(Violation("unknown_id", f"flip {pair[0]}<->{pair[1]}", f"unknown generator '{gid}' in flip"))
    return found


def _check_terms(c: CfkComplex) -> List[Violation]:
    found = []
    for t in c.differential:
        src, dst = c.generator(t.source), c.generator(t.target)
        if dst.maslov - 2 * t.upower != src.maslov - 1:
            found.append(Violation(
                "grading_law", _term_label(t),
                f"M(to) - 2·upower = {dst.maslov - 2 * t.upower}, expected M(from) - 1 = {src.maslov - 1}",
            ))
        if t.upower < 0 or dst.alexander - t.upower > src.alexander:
            found.append(Violation(
                "filtration_law", _term_label(t),
                f"A(to) - upower = {dst.alexander - t.upower} > A(from) = {src.alexander}"
                if t.upower >= 0 else f"negative upower {t.upower}",
            ))
    return found


def _check_d_squared(c: CfkComplex) -> List[Violation]:
    found = []
    for g in c.generators:
        total = Counter()
        for (mid, a), _ in c.boundary(g.id).items():
            for (end, b), _ in c.boundary(mid).items():
                total[(end, a + b)] += 1
        leftovers = sorted(k for k, v in total.items() if v % 2)
        if leftovers:
            end, power = leftovers[0]
            found.append(Violation("d_squared", g.id, f"∂²({g.id}) contains U^{power}·{end}"))
    return found


def _check_flip(c: CfkComplex) -> List[Violation]:
    found = []
    occurrences = Counter()
    for a, b in c.flip.pairs:
        occurrences[a] += 1
        if b != a:
            occurrences[b] += 1
    for gid, count in sorted(occurrences.items()):
        if count > 1:
            found.append(Violation("flip_law", gid, "σ is not an involution (id appears in several pairs)"))
    if found:
        return found

    sigma = c.sigma
    for g in c.generators:
        image = c.generator(sigma[g.id])
        if image.alexander != -g.alexander:
            found.append(Violation("flip_law", g.id, f"A(σx) = {image.alexander}, expected {-g.alexander}"))
        if image.maslov != g.maslov - 2 * g.alexander:
            found.append(Violation("flip_law", g.id, f"M(σx) = {image.maslov}, expected {g.maslov - 2 * g.alexander}"))
    if found:
        return found

    # Φ(x) = U^{-A(x)} σ(x) должен коммутировать с ∂
    for g in c.generators:
        d_phi = Counter({(y, b - g.alexander): 1 for (y, b) in c.boundary(sigma[g.id])})
        phi_d = Counter()
        for (y, a) in c.boundary(g.id):
            phi_d[(sigma[y], a - c.generator(y).alexander)] += 1
        phi_d = Counter({k: 1 for k, v in phi_d.items() if v % 2})
        if d_phi != phi_d:
            found.append(Violation("flip_law", g.id, "Φ∂ != ∂Φ"))
    return found


def u_inverted_homology(c: CfkComplex) -> Dict[Fraction, int]:
    """
    Ранг гомологий комплекса с обращённым U (U = 1), по чётности M.
    """
    residues: Dict[Fraction, List[str]] = defaultdict(list)
    for g in c.generators:
        residues[g.maslov % 2].append(g.id)

    def block_rank(src_key: Fraction) -> int:
        dst_key = (src_key - 1) % 2
        src_ids, dst_ids = residues.get(src_key, []), residues.get(dst_key, [])
        if not src_ids or not dst_ids:
            return 0
        row_of = {gid: k for k, gid in enumerate(dst_ids)}
        counts = Counter()
        for col, gid in enumerate(src_ids):
            for (target, _power) in c.boundary(gid):
                if target in row_of:
                    counts[(row_of[target], col)] += 1
        matrix = SparseMatrix(len(dst_ids), len(src_ids), {k: v % 2 for k, v in counts.items()})
        return gf2_rank(matrix)

    ranks = {key: block_rank(key) for key in residues}
    result = {}
    for key, ids in residues.items():
        upper = (key + 1) % 2
        result[key] = len(ids) - ranks[key] - ranks.get(upper, 0)
    return result


def validate(c: CfkComplex) -> ValidationReport:
    """Проверяет все свойства комплекса; исключений не бросает"""
    violations = _check_ids(c)
    homology_rank = -1
    if not violations:
        violations += _check_terms(c)
        violations += _check_d_squared(c)
        violations += _check_flip(c)
        if not any(v.kind == "d_squared" for v in violations):
            by_residue = u_inverted_homology(c)
            homology_rank = sum(by_residue.values())
            odd = {k: v for k, v in by_residue.items() if v and k % 2 != 0}
            if homology_rank != 1:
                violations.append(Violation(
                    "homology_rank", c.name,
                    f"U-inverted homology rank {homology_rank} != 1",
                ))
            elif odd:
                violations.append(Violation(
                    "homology_rank", c.name,
                    f"U-inverted tower sits in grading {next(iter(odd))} mod 2, expected even",
                ))
    trace("Validator", f"{c.name}: {len(violations)} violation(s)")
    return ValidationReport(c.name, tuple(violations), homology_rank)
