"""
Hypercube Decomposition

Split and merge turn the set of n-arrays into a graph whose components are
indexed by patterns. The component of a pattern with descents D is a
hypercube of dimension |D|: each descent location can be toggled between
"split" and "merged" independently. Exactly one member is primitive (all
descents merged) and one is canonical (all split).

Components are identified by pattern; explicit graphs are only built on
request (component_graph) and checked against networkx hypercube graphs
when small enough.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import networkx as nx

from config import settings
from exact_core import BigPolynomial, binomial
from combinatorics.arrays import (
    ArrayObj,
    InvalidOperationError,
    Pattern,
    enumerate_patterns,
    merge,
    split,
)
from combinatorics.records import VerificationRecord

logger = logging.getLogger("binrec.combinatorics")


@dataclass(frozen=True)
class HypercubeComponent:
    """The arrays sharing one pattern."""

    pattern: Pattern
    descent_locations: FrozenSet[int] = field(default=frozenset())

    @classmethod
    def of(cls, pattern: Pattern) -> "HypercubeComponent":
        return cls(pattern, pattern.descents())

    @property
    def dimension(self) -> int:
        return len(self.descent_locations)

    @property
    def size(self) -> int:
        return 2 ** self.dimension

    def primitive(self) -> ArrayObj:
        return ArrayObj(self.pattern, self.pattern.primitive_starts())

    def canonical(self) -> ArrayObj:
        return ArrayObj(self.pattern, frozenset(range(1, len(self.pattern.t) + 1)))

    def members(self) -> Iterator[ArrayObj]:
        """All 2^dimension arrays, fewest blocks first."""
        base = self.pattern.primitive_starts()
        free = sorted(j + 1 for j in self.descent_locations)
        for k in range(len(free) + 1):
            for extra in itertools.combinations(free, k):
                yield ArrayObj(self.pattern, base | frozenset(extra))


def component_graph(component: HypercubeComponent) -> nx.Graph:
    """
    Split/merge graph of one component.

    Nodes are the sorted block-start tuples; an edge joins two arrays that
    differ by one split.
    """
    graph = nx.Graph()
    for array in component.members():
        graph.add_node(array.starts())
        for location in array.split_locations():
            graph.add_edge(array.starts(), split(array, location).starts())
    return graph


def _reference_cube(dim: int) -> nx.Graph:
    """H_dim with every vertex labelled by its 0/1 tuple."""
    if dim == 0:
        graph = nx.Graph()
        graph.add_node(())
        return graph
    cube = nx.hypercube_graph(dim)
    # networkx labels H_1 with plain ints
    return nx.relabel_nodes(cube, {v: v if isinstance(v, tuple) else (v,) for v in cube.nodes})


def check_component(
    component: HypercubeComponent, iso_dim_cap: Optional[int] = None
) -> Tuple[bool, str]:
    """
    Structural hypercube checks for one component.

    Checks the member count 2^l, exactly one primitive and one canonical
    member, that every descent toggle is an involution producing valid
    arrays, and (for l <= iso_dim_cap) graph isomorphism with H_l.

    Returns:
        (passed, reason); reason is empty when passed
    """
    iso_cap = settings.isomorphism_dim_cap if iso_dim_cap is None else iso_dim_cap
    members = list(component.members())
    if len(members) != component.size:
        return False, f"{len(members)} members, expected {component.size}"

    primitive = [a for a in members if a.is_primitive()]
    canonical = [a for a in members if a.is_canonical()]
    if len(primitive) != 1 or len(canonical) != 1:
        return False, f"{len(primitive)} primitive and {len(canonical)} canonical members"

    for array in members:
        for j in component.descent_locations:
            try:
                if j + 1 in array.block_starts:
                    back = split(merge(array, j), j)
                else:
                    back = merge(split(array, j), j)
            except InvalidOperationError as e:
                return False, f"toggle at {j} failed on {array.starts()}: {e}"
            if back != array:
                return False, f"toggle at {j} is not an involution on {array.starts()}"

    if component.dimension <= iso_cap:
        graph = component_graph(component)
        if not nx.is_isomorphic(graph, _reference_cube(component.dimension)):
            return False, f"split/merge graph is not isomorphic to H_{component.dimension}"
    return True, ""


def hypercube_decomposition(n: int, cap: Optional[int] = None) -> List[HypercubeComponent]:
    """
    One component per valid pattern of length n-1.

    Example:
        sum(c.size for c in hypercube_decomposition(6)) -> 214
    """
    return [HypercubeComponent.of(p) for p in enumerate_patterns(n, cap)]


@dataclass
class DecompositionSummary:
    """Streaming totals over the components of one n."""

    n: int
    components: int = 0
    total_arrays: int = 0
    canonical_count: int = 0
    dimension_histogram: Dict[int, int] = field(default_factory=dict)
    arrays_by_weight: Dict[int, int] = field(default_factory=dict)

    def primitive_by_weight(self) -> Dict[int, int]:
        """Primitive arrays per weight r = n - dimension."""
        return {self.n - d: c for d, c in sorted(self.dimension_histogram.items())}

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "components": self.components,
            "total_arrays": self.total_arrays,
            "canonical_count": self.canonical_count,
            "dimension_histogram": dict(sorted(self.dimension_histogram.items())),
            "arrays_by_weight": dict(sorted(self.arrays_by_weight.items())),
        }


def decomposition_summary(n: int, cap: Optional[int] = None) -> DecompositionSummary:
    """
    Count components, arrays and weights without materializing the components.

    The arrays of a component with l descents and primitive weight r0 have
    weights r0 .. r0 + l with C(l, k) arrays at weight r0 + k.
    """
    dims: Counter = Counter()
    for pattern in enumerate_patterns(n, cap):
        dims[len(pattern.descents())] += 1

    summary = DecompositionSummary(n=n)
    summary.dimension_histogram = dict(dims)
    summary.components = sum(dims.values())
    summary.canonical_count = summary.components
    weights: Counter = Counter()
    for dim, count in dims.items():
        base = n - dim
        summary.total_arrays += count * 2**dim
        for k in range(dim + 1):
            weights[base + k] += count * binomial(dim, k)
    summary.arrays_by_weight = dict(weights)
    logger.debug(f"decomposition n={n}: {summary.components} components")
    return summary


def pattern_weight_polynomial(n: int, cap: Optional[int] = None) -> BigPolynomial:
    """
    sum over patterns of x^(n-l) (1+x)^l, l = number of descents.

    Equals a_n as a polynomial: each component contributes its primitive
    array's weight times (1+x) per free descent.
    """
    dims: Counter = Counter(len(p.descents()) for p in enumerate_patterns(n, cap))
    total = BigPolynomial.zero()
    for dim, count in dims.items():
        total = total + BigPolynomial.binomial_basis(n - dim, dim).scale(count)
    return total


def hypercube_facts_check(dim: int) -> VerificationRecord:
    """
    Basic facts about H_dim checked on the networkx hypercube graph.

    - 2^dim vertices, C(dim, r) of them with r ones
    - H_dim is the cartesian product H_m x H_(dim-m) for every split m
    - sum over vertices of x^(number of ones) is (1+x)^dim exactly
    """
    if dim < 1:
        raise ValueError(f"dimension must be at least 1, got {dim}")
    cube = _reference_cube(dim)
    failures = []

    if cube.number_of_nodes() != 2**dim:
        failures.append(f"{cube.number_of_nodes()} vertices")

    levels = Counter(sum(v) for v in cube.nodes)
    for r in range(dim + 1):
        if levels[r] != binomial(dim, r):
            failures.append(f"level {r} has {levels[r]} vertices")

    for m in range(1, dim):
        product = nx.cartesian_product(_reference_cube(m), _reference_cube(dim - m))
        if not nx.is_isomorphic(product, cube):
            failures.append(f"H_{m} x H_{dim - m} is not H_{dim}")

    vertex_sum = BigPolynomial.from_mapping(dict(levels))
    if vertex_sum != BigPolynomial.binomial_basis(0, dim):
        failures.append("vertex weight sum differs from (1+x)^dim")

    return VerificationRecord(
        name="hypercube_facts",
        n=dim,
        passed=not failures,
        expected=2**dim,
        observed=cube.number_of_nodes(),
        details={"failures": failures},
    )
