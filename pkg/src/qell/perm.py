"""Permutations on {1..n} and finite permutation groups.

Conventions used throughout the package:
  * permutations act on the left, (a*b)(x) = a(b(x))
  * points are 1-based
  * cycles are listed min-first, ordered by their smallest moved point
"""

import os
from .errors import CapExceeded, NotSubgroup

DEFAULT_CAP = int(os.environ.get("QELL_CAP", "20160"))


class Permutation:
    """Immutable permutation of {1..n}, stored as a tuple of images."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError("not a permutation of 1..n: %r" % (images,))
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, cycles, degree):
        images = list(range(1, degree + 1))
        for cyc in cycles:
            for i, a in enumerate(cyc):
                b = cyc[(i + 1) % len(cyc)]
                if not (1 <= a <= degree):
                    raise ValueError("point %d out of range" % a)
                images[a - 1] = b
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x - 1]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        im = self.images
        return Permutation(im[y - 1] for y in other.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, y in enumerate(self.images):
            inv[y - 1] = i + 1
        return Permutation(inv)

    def __pow__(self, k):
        n = self.degree
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self):
        return all(self.images[i] == i + 1 for i in range(self.degree))

    def cycles(self, include_fixed=False):
        """Cycle decomposition, min-first, sorted by smallest entry."""
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self(start)
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self(x)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        """Partition of the degree given by cycle lengths, descending."""
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)),
                            reverse=True))

    def order(self):
        from math import lcm
        lens = [len(c) for c in self.cycles(include_fixed=True)]
        return lcm(*lens) if lens else 1

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.images < other.images

    def __le__(self, other):
        return self.images <= other.images

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cyc)


class ConjugacyData:
    """Conjugacy classes of a group: reps, full classes, index lookup."""

    def __init__(self, group):
        self.group = group
        elems = set(group.elements)
        classes = []
        while elems:
            g = min(elems)
            cls = set()
            for x in group.elements:
                cls.add(x * g * x.inverse())
            elems -= cls
            classes.append((g, frozenset(cls)))
        classes.sort(key=lambda pair: (len(pair[1]), pair[0].images))
        self.reps = tuple(g for g, _ in classes)
        self.classes = tuple(c for _, c in classes)
        self._index = {}
        for i, c in enumerate(self.classes):
            for x in c:
                self._index[x] = i

    def __len__(self):
        return len(self.reps)

    def class_of(self, g):
        return self._index[g]

    def class_sizes(self):
        return tuple(len(c) for c in self.classes)


class FiniteGroup:
    """A finite permutation group, fully enumerated."""

    def __init__(self, elements, generators=None, degree=None):
        elements = sorted(set(elements))
        if not elements:
            raise ValueError("empty element list")
        self.degree = elements[0].degree if degree is None else degree
        for e in elements:
            if e.degree != self.degree:
                raise ValueError("mixed degrees")
        self.elements = tuple(elements)
        self.generators = tuple(generators) if generators else self.elements
        self._set = frozenset(self.elements)
        self.identity = Permutation.identity(self.degree)
        if self.identity not in self._set:
            raise ValueError("identity missing; not a group")
        self._conj = None
        self._hash = None

    @classmethod
    def generated(cls, generators, cap=None, degree=None):
        """Close a generating set under multiplication (BFS), honoring a cap."""
        if cap is None:
            cap = DEFAULT_CAP
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("need a degree for the trivial group")
            degree = generators[0].degree
        ident = Permutation.identity(degree)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in generators:
                    y = g * x
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > cap:
                            raise CapExceeded(
                                "group order exceeds cap %d" % cap)
                        nxt.append(y)
            frontier = nxt
        return cls(seen, generators=generators, degree=degree)

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup)
                and self.degree == other.degree
                and self._set == other._set)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.degree, self._set))
        return self._hash

    def __repr__(self):
        return "FiniteGroup(order=%d, degree=%d)" % (self.order, self.degree)

    def is_subgroup_of(self, other):
        return self.degree == other.degree and self._set <= other._set

    def require_subgroup(self, sub):
        if not sub.is_subgroup_of(self):
            raise NotSubgroup("expected a subgroup relationship")

    def conjugacy(self):
        if self._conj is None:
            self._conj = ConjugacyData(self)
        return self._conj

    def centralizer(self, g):
        if g not in self._set:
            raise ValueError("element not in group")
        return FiniteGroup([x for x in self.elements if x * g == g * x],
                           degree=self.degree)

    def centralizer_of_subset(self, gens):
        return FiniteGroup(
            [x for x in self.elements if all(x * g == g * x for g in gens)],
            degree=self.degree)

    def conjugator(self, g, h):
        """Return x in the group with g*x == x*h (so g = x h x^-1), or None."""
        for x in self.elements:
            if g * x == x * h:
                return x
        return None

    def subgroup(self, elements):
        sub = FiniteGroup(elements, degree=self.degree)
        self.require_subgroup(sub)
        return sub

    def random_element(self, rng):
        return self.elements[rng.randrange(len(self.elements))]


def trivial_group(degree=1):
    return FiniteGroup([Permutation.identity(degree)], degree=degree)


def symmetric_group(n, cap=None):
    if n <= 1:
        return trivial_group(max(n, 1))
    gens = [Permutation.from_cycles([(1, 2)], n),
            Permutation.from_cycles([tuple(range(1, n + 1))], n)]
    return FiniteGroup.generated(gens, cap=cap, degree=n)


def cyclic_group(n, cap=None):
    if n == 1:
        return trivial_group(1)
    g = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    return FiniteGroup.generated([g], cap=cap, degree=n)


def dihedral_group(n, cap=None):
    """Dihedral group of order 2n acting on n vertices (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral group needs n >= 3")
    rot = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    refl = Permutation([(n + 1 - x) % n + 1 for x in range(1, n + 1)])
    return FiniteGroup.generated([rot, refl], cap=cap, degree=n)


def young_subgroup(parts):
    """Sigma_{parts} inside Sigma_N on consecutive blocks, N = sum(parts)."""
    total = sum(parts)
    gens = []
    offset = 0
    for p in parts:
        if p >= 2:
            gens.append(Permutation.from_cycles(
                [(offset + 1, offset + 2)], total))
            gens.append(Permutation.from_cycles(
                [tuple(range(offset + 1, offset + p + 1))], total))
        offset += p
    if not gens:
        return trivial_group(total)
    return FiniteGroup.generated(gens, degree=total)


class ProductGroup:
    """Direct product G x H realized on disjoint points, with embeddings."""

    def __init__(self, left, right):
        self.left = left
        self.right = right
        d1, d2 = left.degree, right.degree
        self.degree = d1 + d2
        elems = []
        for a in left.elements:
            for b in right.elements:
                elems.append(self.pair(a, b))
        self.group = FiniteGroup(elems, degree=self.degree)

    def pair(self, a, b):
        d1 = self.left.degree
        return Permutation(list(a.images) + [y + d1 for y in b.images])

    def embed_left(self, a):
        return self.pair(a, self.right.identity)

    def embed_right(self, b):
        return self.pair(self.left.identity, b)

    def project(self, g):
        """Split a product element back into its (left, right) parts."""
        d1 = self.left.degree
        a = Permutation(g.images[:d1])
        b = Permutation(y - d1 for y in g.images[d1:])
        return a, b


class GroupHom:
    """A homomorphism between enumerated groups, stored as a full table."""

    def __init__(self, src, dst, table, check=True):
        self.src = src
        self.dst = dst
        self.table = dict(table)
        if check:
            self.validate()

    def validate(self):
        if set(self.table) != set(self.src.elements):
            raise ValueError("homomorphism table must cover the source group")
        for v in self.table.values():
            if v not in self.dst:
                raise ValueError("image not in target group")
        for a in self.src.elements:
            fa = self.table[a]
            for b in self.src.elements:
                if self.table[a * b] != fa * self.table[b]:
                    raise ValueError("not a homomorphism")

    @classmethod
    def from_gen_images(cls, src, dst, gen_images):
        """Build the table from generator images by walking the closure."""
        table = {src.identity: dst.identity}
        frontier = [src.identity]
        gen_images = dict(gen_images)
        while frontier:
            nxt = []
            for x in frontier:
                for g, fg in gen_images.items():
                    y = g * x
                    if y not in table:
                        table[y] = fg * table[x]
                        nxt.append(y)
            frontier = nxt
        return cls(src, dst, table)

    @classmethod
    def inclusion(cls, sub, big):
        big.require_subgroup(sub)
        return cls(sub, big, {g: g for g in sub.elements}, check=False)

    def __call__(self, g):
        return self.table[g]
