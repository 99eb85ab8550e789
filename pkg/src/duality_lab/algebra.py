"""Word arithmetic in the universal enveloping algebras of the Heisenberg
algebra (a, a†, Z) and sl(2,C), plus the star structures and the named
isomorphisms used to dress duality kernels.

Everything is kept in normal-ordered form (generator order a < a† < Z and
H < E < F, rewriting XY -> YX + [X,Y]) so element equality is plain
dictionary equality.  Coefficients stay exact wherever the inputs are exact;
only the phi-family morphisms force complex floats.
"""

from fractions import Fraction

from .scalars import (GRat, QSqrt, ONE, ZERO, I_UNIT,
                      conj, is_zero, to_complex, solve_linear)


def _coerce(x):
    if isinstance(x, (GRat, QSqrt, complex, float)):
        return x
    return GRat.of(x)


def _exactish(x):
    return isinstance(x, (GRat, QSqrt))


class LieAlgebra:
    """A finite-dimensional Lie algebra given by a bracket table on
    generators, with one or more star structures (antilinear involutive
    antihomomorphisms given on generators)."""

    __slots__ = ("name", "gens", "order", "_brackets", "stars")

    def __init__(self, name, gens, brackets, stars):
        self.name = name
        self.gens = tuple(gens)
        self.order = {g: i for i, g in enumerate(self.gens)}
        self._brackets = {k: dict(v) for k, v in brackets.items()}
        self.stars = {s: {g: dict(img) for g, img in tab.items()}
                      for s, tab in stars.items()}

    def bracket(self, g1, g2):
        """[g1, g2] as a map generator -> coefficient."""
        if (g1, g2) in self._brackets:
            return self._brackets[(g1, g2)]
        if (g2, g1) in self._brackets:
            return {g: -c for g, c in self._brackets[(g2, g1)].items()}
        return {}

    def default_star(self):
        return next(iter(self.stars))

    def __repr__(self):
        return f"LieAlgebra({self.name})"


HEISENBERG = LieAlgebra(
    "heisenberg",
    ("a", "ad", "Z"),
    {("ad", "a"): {"Z": ONE}},
    stars={"dagger": {"a": {("ad",): ONE},
                      "ad": {("a",): ONE},
                      "Z": {("Z",): ONE}}},
)

SL2 = LieAlgebra(
    "sl2",
    ("H", "E", "F"),
    {("H", "E"): {"E": GRat(2)},
     ("H", "F"): {"F": GRat(-2)},
     ("E", "F"): {"H": ONE}},
    stars={
        # the su(1,1) real form
        "su11": {"H": {("H",): ONE},
                 "E": {("F",): -ONE},
                 "F": {("E",): -ONE}},
        # the real form in which every generator is skew
        "neg": {"H": {("H",): -ONE},
                "E": {("E",): -ONE},
                "F": {("F",): -ONE}},
    },
)


def _normal_order(alg, raw):
    """Rewrite a word->coefficient map into normal order.

    Worklist algorithm: pick the first adjacent out-of-order pair and apply
    XY -> YX + [X,Y].  Terminates because each rewrite either lowers word
    length or reduces the number of inversions.
    """
    order = alg.order
    out = {}
    stack = [(tuple(w), c) for w, c in raw.items()]
    while stack:
        word, coeff = stack.pop()
        if is_zero(coeff):
            continue
        pos = -1
        for i in range(len(word) - 1):
            if order[word[i]] > order[word[i + 1]]:
                pos = i
                break
        if pos < 0:
            prev = out.get(word)
            out[word] = coeff if prev is None else prev + coeff
            continue
        g1, g2 = word[pos], word[pos + 1]
        stack.append((word[:pos] + (g2, g1) + word[pos + 2:], coeff))
        for g, bc in alg.bracket(g1, g2).items():
            stack.append((word[:pos] + (g,) + word[pos + 2:], coeff * bc))
    return {w: c for w, c in out.items() if not is_zero(c)}


class Element:
    """A normal-ordered element of the universal enveloping algebra.

    terms maps words (tuples of generator symbols, () meaning 1) to
    coefficients.  Treat instances as immutable.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        object.__setattr__(self, "algebra", algebra)
        coerced = {tuple(w): _coerce(c) for w, c in (terms or {}).items()}
        object.__setattr__(self, "terms", _normal_order(algebra, coerced))

    def __setattr__(self, *a):
        raise AttributeError("Element is immutable")

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, {})

    @classmethod
    def one(cls, algebra):
        return cls(algebra, {(): ONE})

    @classmethod
    def gen(cls, algebra, g):
        if g not in algebra.order:
            raise ValueError(f"{g!r} is not a generator of {algebra.name}")
        return cls(algebra, {(g,): ONE})

    def is_zero(self):
        return not self.terms

    def max_abs(self):
        return max((abs(to_complex(c)) for c in self.terms.values()),
                   default=0.0)

    def is_exact(self):
        return all(_exactish(c) for c in self.terms.values())

    def _check_same(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements live over different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        merged = dict(self.terms)
        for w, c in other.terms.items():
            prev = merged.get(w)
            merged[w] = c if prev is None else prev + c
        return Element(self.algebra, merged)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Element(self.algebra, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            prod = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    prev = prod.get(w)
                    prod[w] = c if prev is None else prev + c
            return Element(self.algebra, prod)
        s = _coerce(other)
        return Element(self.algebra, {w: c * s for w, c in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        s = _coerce(other)
        if isinstance(s, (GRat, QSqrt)):
            return self * (ONE / s)
        return self * (1.0 / s)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra is other.algebra and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "<0>"
        bits = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            bits.append(f"{_fmt_scalar(self.terms[w])} {_fmt_word(w)}")
        return "<" + " + ".join(bits) + ">"


def _fmt_word(w):
    return ".".join(w) if w else "1"


def _fmt_scalar(c):
    if isinstance(c, GRat):
        if c.im == 0:
            return str(c.re)
        if c.re == 0:
            return f"{c.im}i"
        return f"({c.re}{'+' if c.im > 0 else '-'}{abs(c.im)}i)"
    return repr(c)


def gens(algebra):
    """The generators as Elements, in declaration order."""
    return tuple(Element.gen(algebra, g) for g in algebra.gens)


def commutator(x, y):
    return x * y - y * x


class Tensor:
    """An element of U(g)^(⊗ n): a linear combination of n-tuples of words.

    Each slot's word is independently normal-ordered.
    """

    __slots__ = ("algebra", "nslots", "terms")

    def __init__(self, algebra, nslots, terms=None):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "nslots", nslots)
        out = {}
        for words, coeff in (terms or {}).items():
            words = tuple(tuple(w) for w in words)
            if len(words) != nslots:
                raise ValueError("slot count mismatch")
            coeff = _coerce(coeff)
            if is_zero(coeff):
                continue
            # normal-order each slot, then distribute across slots
            expansions = [list(_normal_order(algebra, {w: ONE}).items())
                          for w in words]
            if any(not e for e in expansions):
                continue
            combos = [((), coeff)]
            for exp in expansions:
                combos = [(done + (w,), c * cw)
                          for done, c in combos for w, cw in exp]
            for ws, c in combos:
                prev = out.get(ws)
                out[ws] = c if prev is None else prev + c
        object.__setattr__(self, "terms",
                           {ws: c for ws, c in out.items() if not is_zero(c)})

    def __setattr__(self, *a):
        raise AttributeError("Tensor is immutable")

    @classmethod
    def zero(cls, algebra, nslots):
        return cls(algebra, nslots, {})

    def is_zero(self):
        return not self.terms

    def max_abs(self):
        return max((abs(to_complex(c)) for c in self.terms.values()),
                   default=0.0)

    def _check_same(self, other):
        if self.algebra is not other.algebra or self.nslots != other.nslots:
            raise ValueError("tensor shapes differ")

    def __add__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        self._check_same(other)
        merged = dict(self.terms)
        for ws, c in other.terms.items():
            prev = merged.get(ws)
            merged[ws] = c if prev is None else prev + c
        return Tensor(self.algebra, self.nslots, merged)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Tensor(self.algebra, self.nslots,
                      {ws: -c for ws, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Tensor):
            self._check_same(other)
            prod = {}
            for ws1, c1 in self.terms.items():
                for ws2, c2 in other.terms.items():
                    ws = tuple(w1 + w2 for w1, w2 in zip(ws1, ws2))
                    c = c1 * c2
                    prev = prod.get(ws)
                    prod[ws] = c if prev is None else prev + c
            return Tensor(self.algebra, self.nslots, prod)
        s = _coerce(other)
        return Tensor(self.algebra, self.nslots,
                      {ws: c * s for ws, c in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        s = _coerce(other)
        if isinstance(s, (GRat, QSqrt)):
            return self * (ONE / s)
        return self * (1.0 / s)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.algebra is other.algebra and self.nslots == other.nslots
                and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "<0>"
        bits = []
        for ws in sorted(self.terms):
            wtxt = " (x) ".join(_fmt_word(w) for w in ws)
            bits.append(f"{_fmt_scalar(self.terms[ws])} [{wtxt}]")
        return "<" + " + ".join(bits) + ">"


def tensor(*factors):
    """Tensor product of Elements, one per slot."""
    if not factors:
        raise ValueError("need at least one factor")
    alg = factors[0].algebra
    terms = {(): ONE}
    for f in factors:
        if f.algebra is not alg:
            raise ValueError("factors live over different algebras")
        terms = {ws + (w,): c * cf
                 for ws, c in terms.items() for w, cf in f.terms.items()}
    return Tensor(alg, len(factors), terms)


def coproduct(x):
    """Δ(g) = g⊗1 + 1⊗g on generators, extended as an algebra morphism."""
    alg = x.algebra
    out = Tensor.zero(alg, 2)
    for word, coeff in x.terms.items():
        t = Tensor(alg, 2, {((), ()): ONE})
        for g in word:
            t = t * Tensor(alg, 2, {((g,), ()): ONE, ((), (g,)): ONE})
        out = out + t * coeff
    return out


def embed_pair(t, i, j, nsites):
    """Place a 2-slot tensor at sites i < j (1-indexed) of an n-site tensor,
    padding the other slots with the identity."""
    if t.nslots != 2:
        raise ValueError("embed_pair needs a 2-slot tensor")
    if not (1 <= i < j <= nsites):
        raise ValueError(f"need 1 <= i < j <= {nsites}, got ({i}, {j})")
    out = {}
    for (w1, w2), c in t.terms.items():
        ws = [()] * nsites
        ws[i - 1] = w1
        ws[j - 1] = w2
        out[tuple(ws)] = c
    return Tensor(t.algebra, nsites, out)


class Morphism:
    """A map defined by generator images, extended to words.

    Plain morphisms extend multiplicatively; antimultiplicative ones reverse
    each word (m(xy) = m(y)m(x)), which is how star structures and duality
    transfer maps act.  Antilinear ones conjugate coefficients.
    """

    __slots__ = ("algebra", "images", "name",
                 "antimultiplicative", "antilinear")

    def __init__(self, algebra, images, name="",
                 antimultiplicative=False, antilinear=False):
        self.algebra = algebra
        self.images = dict(images)
        self.name = name or "morphism"
        self.antimultiplicative = antimultiplicative
        self.antilinear = antilinear
        for g in algebra.gens:
            if g not in self.images:
                raise ValueError(f"missing image for generator {g!r}")

    def is_exact(self):
        return all(img.is_exact() for img in self.images.values())

    def _word_image(self, word):
        acc = Element.one(self.algebra)
        seq = reversed(word) if self.antimultiplicative else word
        for g in seq:
            acc = acc * self.images[g]
        return acc

    def __call__(self, x):
        if isinstance(x, Element):
            out = Element.zero(self.algebra)
            for word, coeff in x.terms.items():
                c = conj(coeff) if self.antilinear else coeff
                out = out + self._word_image(word) * c
            return out
        if isinstance(x, Tensor):
            out = Tensor.zero(self.algebra, x.nslots)
            for words, coeff in x.terms.items():
                c = conj(coeff) if self.antilinear else coeff
                out = out + tensor(*[self._word_image(w) for w in words]) * c
            return out
        raise TypeError(f"cannot apply morphism to {type(x).__name__}")

    def __matmul__(self, other):
        """Composition: (m1 @ m2)(x) = m1(m2(x))."""
        if self.algebra is not other.algebra:
            raise ValueError("morphisms live over different algebras")
        images = {g: self(other.images[g]) for g in self.algebra.gens}
        return Morphism(
            self.algebra, images, name=f"{self.name}*{other.name}",
            antimultiplicative=self.antimultiplicative != other.antimultiplicative,
            antilinear=self.antilinear != other.antilinear)

    def inverse(self):
        """Exact inverse, for morphisms whose images are linear in the
        generators."""
        if self.antimultiplicative or self.antilinear:
            raise NotImplementedError("inverse only for plain morphisms")
        n = len(self.algebra.gens)
        mat = []
        for r, gr in enumerate(self.algebra.gens):
            row = []
            for gc in self.algebra.gens:
                img = self.images[gc]
                if any(len(w) != 1 for w in img.terms):
                    raise ValueError("inverse requires linear images")
                row.append(img.terms.get((gr,), ZERO))
            mat.append(row)
        ident = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
        try:
            x = solve_linear(mat, ident)
        except ValueError:
            raise ValueError(f"{self.name} is not invertible") from None
        images = {}
        for c, gc in enumerate(self.algebra.gens):
            images[gc] = Element(self.algebra,
                                 {(gr,): x[r][c]
                                  for r, gr in enumerate(self.algebra.gens)})
        return Morphism(self.algebra, images, name=f"{self.name}^-1")

    def __repr__(self):
        tags = []
        if self.antimultiplicative:
            tags.append("antimult")
        if self.antilinear:
            tags.append("antilin")
        suffix = f" [{', '.join(tags)}]" if tags else ""
        return f"Morphism({self.name} on {self.algebra.name}{suffix})"


def apply_morphism(m, x):
    return m(x)


def star_morphism(algebra, name=None):
    name = name or algebra.default_star()
    if name not in algebra.stars:
        raise ValueError(f"unknown star {name!r} on {algebra.name}")
    images = {g: Element(algebra, tab)
              for g, tab in algebra.stars[name].items()}
    return Morphism(algebra, images, name=f"star:{name}",
                    antimultiplicative=True, antilinear=True)


def star(x, name=None):
    return star_morphism(x.algebra, name)(x)


def hom_defects(m):
    """m([X,Y]) − [m(X), m(Y)] for each generator pair; all zero iff m is a
    homomorphism."""
    out = {}
    for i, g1 in enumerate(m.algebra.gens):
        for g2 in m.algebra.gens[i + 1:]:
            x = Element.gen(m.algebra, g1)
            y = Element.gen(m.algebra, g2)
            out[(g1, g2)] = m(commutator(x, y)) - commutator(m(x), m(y))
    return out


def antihom_defects(m):
    """m([X,Y]) − [m(Y), m(X)] per generator pair; all zero iff m reverses
    brackets."""
    out = {}
    for i, g1 in enumerate(m.algebra.gens):
        for g2 in m.algebra.gens[i + 1:]:
            x = Element.gen(m.algebra, g1)
            y = Element.gen(m.algebra, g2)
            out[(g1, g2)] = m(commutator(x, y)) - commutator(m(y), m(x))
    return out


# ---------------------------------------------------------------------------
# named elements

def casimir():
    """½H² + EF + FE, the central element of U(sl2)."""
    h, e, f = gens(SL2)
    return h * h * Fraction(1, 2) + e * f + f * e


def x_element(a):
    """−aH + E − F.  Elliptic for |a|>1, parabolic for |a|=1, hyperbolic
    for |a|<1."""
    h, e, f = gens(SL2)
    return h * (-_coerce(a)) + e - f


def y_heis():
    """(1⊗a − a⊗1)(a†⊗1 − 1⊗a†), the two-site interaction element of the
    Heisenberg algebra."""
    a, ad, _ = gens(HEISENBERG)
    one = Element.one(HEISENBERG)
    return (tensor(one, a) - tensor(a, one)) * (tensor(ad, one) - tensor(one, ad))


def y_su11():
    """½(1⊗Ω + Ω⊗1 − Δ(Ω)) = −½(H⊗H + 2F⊗E + 2E⊗F)."""
    om = casimir()
    one = Element.one(SL2)
    return (tensor(one, om) + tensor(om, one) - coproduct(om)) * Fraction(1, 2)


def r_element():
    """The 11-term correction element: applying the Charlier reflection in
    both slots shifts the two-site interaction element by exactly this."""
    a, ad, z = gens(HEISENBERG)
    one = Element.one(HEISENBERG)
    return (tensor(one, z * ad) - tensor(z, ad)
            + tensor(z * ad, one) - tensor(ad, z)
            + tensor(one, a * z) - tensor(z, a)
            + tensor(a * z, one) - tensor(a, z)
            + tensor(z, z) * 2
            - tensor(z * z, one) - tensor(one, z * z))


# ---------------------------------------------------------------------------
# the named isomorphisms

def theta_charlier():
    """a ↦ Z−a, a† ↦ Z−a†, Z ↦ Z.  Involutive; preserves the star."""
    a, ad, z = gens(HEISENBERG)
    return Morphism(HEISENBERG,
                    {"a": z - a, "ad": z - ad, "Z": z},
                    name="theta_charlier")


def theta_exp():
    """a ↦ ½(a−a†), a† ↦ i(a+a†), Z ↦ iZ.  Does not preserve the star."""
    a, ad, z = gens(HEISENBERG)
    return Morphism(HEISENBERG,
                    {"a": (a - ad) * Fraction(1, 2),
                     "ad": (a + ad) * I_UNIT,
                     "Z": z * I_UNIT},
                    name="theta_exp")


def theta_sqrt_c(sqrt_c):
    """The sl2 rotation with H-image ((1+c)H − 2√c·E + 2√c·F)/(1−c), where
    c = sqrt_c².  Fixes the Casimir; inverse is theta_sqrt_c(−sqrt_c).

    Pass sqrt_c as a Fraction/GRat for exact work (c a rational square), as
    a QSqrt to work in ℚ(√s), or as a float.
    """
    sc = _coerce(sqrt_c)
    c = sc * sc
    d = 1 - c if isinstance(c, (float, complex)) else ONE - c
    if is_zero(d):
        raise ValueError("c = 1 is outside the domain")
    h, e, f = gens(SL2)
    images = {
        "H": (h * (ONE + c) - e * (2 * sc) + f * (2 * sc)) / d,
        "E": (h * (-sc) + e - f * c) / d,
        "F": (h * sc - e * c + f) / d,
    }
    return Morphism(SL2, images, name="theta_sqrt_c")


def theta_parabolic():
    """H ↦ E+F, E ↦ (i/2)(−H+E−F), F ↦ (i/2)(H+E−F).  Fixes the Casimir and
    carries the all-skew star to the su(1,1) star."""
    h, e, f = gens(SL2)
    half_i = GRat(0, Fraction(1, 2))
    return Morphism(SL2,
                    {"H": e + f,
                     "E": (h * (-1) + e - f) * half_i,
                     "F": (h + e - f) * half_i},
                    name="theta_parabolic")


def theta_phi(phi):
    """The float-only sl2 rotation diagonalizing the hyperbolic element
    −cos(φ)H + E − F.  Needs 0 < φ < π."""
    import cmath
    import math
    phi = float(phi)
    if not 0.0 < phi < math.pi:
        raise ValueError("phi must lie in (0, pi)")
    s = math.sin(phi)
    h, e, f = gens(SL2)
    pref = 1.0 / (2j * s)
    images = {
        "H": (h * (-math.cos(phi)) + e - f) * (1j / s),
        "E": (h * (-1) + e * cmath.exp(-1j * phi) - f * cmath.exp(1j * phi)) * pref,
        "F": (h * (-1) + e * cmath.exp(1j * phi) - f * cmath.exp(-1j * phi)) * pref,
    }
    return Morphism(SL2, images, name="theta_phi")
