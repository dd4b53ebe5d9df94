"""Words over the (yx)/(y^2x) block alphabet, their matrices, and circuits.

yx is the translation alpha -> alpha + 1 and y^2x is alpha -> alpha/(1+alpha),
so a block (yx)^m contributes [[1,m],[0,1]] and (y^2x)^m contributes
[[1,0],[m,1]].  The first-written block acts first on the argument; the
matrix of a word is therefore the product with later blocks on the left.
Under this convention the stabilizer word of (1+sqrt(125))/2 read off its
closed path is exactly (yx)^5(y^2x)^11(yx)^6.

Matrices are projective: M and -M are the same group element.
"""

import re
from dataclasses import dataclass, field

from .core import Element
from .diagram import ClosedPath, StepType, closed_path
from .errors import InternalInconsistency, NotDivisible, NotPrimitive, OddBlockCount, ParseError


@dataclass(frozen=True)
class Word:
    """Alternating sequence of ((StepType, exponent >= 1)) blocks."""

    blocks: tuple
    notices: tuple = field(default=(), compare=False)

    def __post_init__(self):
        for i, (t, m) in enumerate(self.blocks):
            if m < 1:
                raise ValueError(f"block exponent must be >= 1, got {m}")
            if i and self.blocks[i - 1][0] is t:
                raise ValueError("adjacent blocks must alternate in type")

    def __str__(self):
        if not self.blocks:
            return "1"
        return "".join(f"({t})^{m}" for t, m in self.blocks)

    def __len__(self):
        return sum(m for _, m in self.blocks)


IDENTITY_WORD = Word(())

_BLOCK_RE = re.compile(r"\(\s*(y\^?2x|yx)\s*\)\s*(?:\^\s*(?:\{(\d+)\}|(\d+)))?")
_RAW_RE = re.compile(r"y\^?2x|yyx|yx")


def _merge_blocks(raw_blocks, notice_on_merge):
    blocks = []
    notices = []
    for t, m in raw_blocks:
        if blocks and blocks[-1][0] is t:
            blocks[-1] = (t, blocks[-1][1] + m)
            if notice_on_merge:
                notices.append(
                    f"merged adjacent ({t})-blocks into ({t})^{blocks[-1][1]}"
                )
        else:
            blocks.append((t, m))
    return Word(tuple(blocks), tuple(notices))


def parse_word(text: str) -> Word:
    """Parse "(yx)^5(y^2x)^11(yx)^6" style notation, or a raw yx/y2x string.

    Adjacent same-type blocks are merged by exponent addition and noted on the
    returned word, since published words occasionally contain them.
    """
    s = text.strip()
    if not s:
        return IDENTITY_WORD
    if "(" in s:
        raw_blocks = []
        pos = 0
        while pos < len(s):
            m = _BLOCK_RE.match(s, pos)
            if m is None:
                raise ParseError(f"cannot parse word at position {pos}: {s[pos:]!r}", pos)
            tag = StepType.YX if m.group(1) == "yx" else StepType.YYX
            exp = int(m.group(2) or m.group(3) or 1)
            raw_blocks.append((tag, exp))
            pos = m.end()
            while pos < len(s) and s[pos].isspace():
                pos += 1
        return _merge_blocks(raw_blocks, notice_on_merge=True)
    # raw generator string: greedy scan of yx / yyx / y2x tokens
    raw_blocks = []
    pos = 0
    while pos < len(s):
        m = _RAW_RE.match(s, pos)
        if m is None:
            raise ParseError(f"cannot parse raw word at position {pos}: {s[pos:]!r}", pos)
        tag = StepType.YX if m.group(0) == "yx" else StepType.YYX
        raw_blocks.append((tag, 1))
        pos = m.end()
    return _merge_blocks(raw_blocks, notice_on_merge=False)


@dataclass(frozen=True)
class Mat2:
    p: int
    q: int
    r: int
    s: int

    @property
    def det(self):
        return self.p * self.s - self.q * self.r

    def __matmul__(self, other):
        return Mat2(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def proj_eq(self, other) -> bool:
        mine = (self.p, self.q, self.r, self.s)
        theirs = (other.p, other.q, other.r, other.s)
        return mine == theirs or mine == tuple(-v for v in theirs)

    def entries(self):
        return (self.p, self.q, self.r, self.s)


IDENTITY = Mat2(1, 0, 0, 1)
MAT_X = Mat2(0, -1, 1, 0)


def word_to_matrix(w: Word) -> Mat2:
    out = IDENTITY
    for t, m in w.blocks:
        block = Mat2(1, m, 0, 1) if t is StepType.YX else Mat2(1, 0, m, 1)
        out = block @ out  # first-listed block acts first
    return out


def mobius_apply(M: Mat2, e: Element) -> Element:
    """Exact image of e under alpha -> (p alpha + q)/(r alpha + s)."""
    a, c, n = e.a, e.c, e.n
    u = M.p * a + M.q * c
    w = M.r * a + M.s * c
    na, ra = divmod(u * w - M.p * M.r * n, c)
    nb, rb = divmod(u * u - M.p * M.p * n, c)
    nc, rc = divmod(w * w - M.r * M.r * n, c)
    if ra or rb or rc:
        raise InternalInconsistency(f"non-integral Mobius image of {e} under {M}")
    try:
        return Element(na, nb, nc, n)
    except (NotDivisible, NotPrimitive) as exc:
        raise InternalInconsistency(f"invalid Mobius image of {e}: {exc}") from exc


def apply_word_stepwise(w: Word, e: Element) -> Element:
    """Reference evaluation by repeated generator application (first block first)."""
    from .core import apply_x, apply_y, apply_yy

    cur = e
    for t, m in w.blocks:
        for _ in range(m):
            cur = apply_x(cur)
            cur = apply_y(cur) if t is StepType.YX else apply_yy(cur)
    return cur


def fixed_quadratic(M: Mat2):
    """Coefficients (r, s-p, -q) of the fixed-point equation of M.

    M fixes the element (a + sqrt(n))/c iff this triple is proportional to
    (c, -2a, b); the identity yields (0, 0, 0), which fixes everything.
    """
    return (M.r, M.s - M.p, -M.q)


def _proportional(u, v):
    return (
        u[0] * v[1] == u[1] * v[0]
        and u[0] * v[2] == u[2] * v[0]
        and u[1] * v[2] == u[2] * v[1]
    )


@dataclass(frozen=True)
class Circuit:
    """Cyclic alternating exponent sequence, canonicalized.

    The canonical form is the even-block rotation minimizing the exponent
    sequence lexicographically; even rotations preserve the type alignment,
    so all canonical blocks of even index share the recorded start type.
    """

    exponents: tuple
    start: StepType = field(compare=False)

    def __str__(self):
        return "(" + ",".join(str(m) for m in self.exponents) + ")"


def canonical_circuit(exponents, start: StepType) -> Circuit:
    k = len(exponents)
    if k % 2 != 0:
        raise OddBlockCount(f"circuit needs an even block count, got {k}")
    exponents = tuple(exponents)
    best = min(exponents[i:] + exponents[:i] for i in range(0, k, 2))
    return Circuit(best, start)


def circuit_from_path(path: ClosedPath) -> Circuit:
    """Cyclic run-length encoding of the path's step types."""
    types = list(path.step_types)
    if all(t is types[0] for t in types):
        raise OddBlockCount("closed path uses a single step type")
    # rotate so position 0 starts a run
    shift = 0
    while types[shift - 1] is types[shift]:
        shift -= 1
    types = types[shift:] + types[:shift]
    exps = []
    run_types = []
    for t in types:
        if run_types and run_types[-1] is t:
            exps[-1] += 1
        else:
            run_types.append(t)
            exps.append(1)
    return canonical_circuit(exps, run_types[0])


def stabilizer_word(e: Element, limit: int = None) -> Word:
    """Anchored word read off the closed path of e; evaluating it on e
    returns e.  The first and last blocks may share a type (anchored form)."""
    path = closed_path(e, limit=limit)
    blocks = []
    for t in path.step_types:
        if blocks and blocks[-1][0] is t:
            blocks[-1] = (t, blocks[-1][1] + 1)
        else:
            blocks.append((t, 1))
    return Word(tuple(blocks))


@dataclass(frozen=True)
class WordVerdict:
    word: Word
    matrix: Mat2
    quadratic: tuple  # (r, s-p, -q)
    target_quadratic: tuple  # (c, -2a, b)
    proportional: bool
    image: Element
    fixes: bool


def check_word_fixes(w: Word, e: Element) -> WordVerdict:
    M = word_to_matrix(w)
    quad = fixed_quadratic(M)
    target = (e.c, -2 * e.a, e.b)
    prop = _proportional(quad, target)
    image = mobius_apply(M, e)
    return WordVerdict(w, M, quad, target, prop, image, prop and image == e)
