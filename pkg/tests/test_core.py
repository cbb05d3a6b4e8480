import pytest
from hypothesis import given, settings

import gaglab as gl
from gaglab.core import GammaGroupoid, Law, members, subset_of

from conftest import oracle_product, oracle_members, structures, structure_with_subsets


# ---------------------------------------------------------------------------
# construction

def test_construction_rejects_bad_entries():
    with pytest.raises(ValueError):
        GammaGroupoid.from_tables([[[0, 2], [0, 0]]])  # entry 2 outside order 2
    with pytest.raises(ValueError):
        GammaGroupoid.from_tables([[[0, 0]]])  # not square
    with pytest.raises(ValueError):
        GammaGroupoid.from_tables([])  # no gamma operation
    with pytest.raises(ValueError):
        GammaGroupoid(((((0,),),)), ("a", "a"), ("g",))  # duplicate labels


def test_default_labels(singleton):
    assert singleton.labels == ("1",)
    assert singleton.gamma_names == ("g1",)
    G = GammaGroupoid.from_tables([[[0, 1], [1, 0]], [[0, 0], [0, 0]]])
    assert G.labels == ("1", "2")
    assert G.gamma_names == ("g1", "g2")


def test_immutability(gamma5):
    with pytest.raises(AttributeError):
        gamma5.labels = ("x",) * 5


# ---------------------------------------------------------------------------
# apply

def test_apply_fixture_values(gamma5, singleton):
    gam = gamma5.gamma_index("γ")
    alf = gamma5.gamma_index("α")
    assert gamma5.apply(gamma5.element_index("5"), gam, gamma5.element_index("4")) == \
        gamma5.element_index("3")
    assert gamma5.apply(0, alf, 1) == 0  # 1 α 2 = 1
    assert singleton.apply(0, 0, 0) == 0


def test_apply_out_of_range(gamma5):
    with pytest.raises(IndexError):
        gamma5.apply(5, 0, 0)
    with pytest.raises(IndexError):
        gamma5.apply(0, 3, 0)
    with pytest.raises(IndexError):
        gamma5.apply(0, 0, -1)


# ---------------------------------------------------------------------------
# law checks on the fixtures (frozen first-witness values)

def test_gamma5_laws(gamma5):
    assert gl.check_law(gamma5, Law.LEFT_INVERTIVE).holds
    assert gl.check_law(gamma5, Law.AG_STAR_STAR).holds
    assert gl.check_law(gamma5, Law.MEDIAL).holds
    assert gl.check_law(gamma5, Law.PARAMEDIAL).holds
    v = gl.check_law(gamma5, Law.ASSOCIATIVE)
    assert not v.holds and v.witness == (0, 0, 0, 1, 0)  # (1 α 1) β 1 != 1 α (1 β 1)
    v = gl.check_law(gamma5, Law.COMMUTATIVE)
    assert not v.holds and v.witness == (3, 2, 4)  # 4 γ 5 != 5 γ 4


def test_gamma5_cited_associativity_instance(gamma5):
    # (1 α 2) β 3 != 1 α (2 β 3), evaluated straight off the tables
    a, b, c = 0, 1, 2
    al, be = gamma5.gamma_index("α"), gamma5.gamma_index("β")
    lhs = gamma5.tables[be][gamma5.tables[al][a][b]][c]
    rhs = gamma5.tables[al][a][gamma5.tables[be][b][c]]
    assert lhs != rhs


def test_dot5_laws(dot5):
    assert gl.check_law(dot5, Law.LEFT_INVERTIVE).holds
    assert gl.check_law(dot5, Law.AG_STAR_STAR).holds
    assert gl.check_law(dot5, Law.MEDIAL).holds
    assert gl.check_law(dot5, Law.PARAMEDIAL).holds
    v = gl.check_law(dot5, Law.ASSOCIATIVE)
    assert not v.holds and v.witness == (0, 0, 0, 0, 0)
    assert not gl.check_law(dot5, Law.COMMUTATIVE).holds


def test_singleton_satisfies_everything(singleton):
    for law in Law:
        assert gl.check_law(singleton, law).holds


def _oracle_law_holds(G, law):
    """Naive re-implementation used as an independent oracle."""
    n, m = G.order, G.gamma_count
    t = G.tables
    R, M = range(n), range(m)
    if law is Law.LEFT_INVERTIVE:
        return all(t[d][t[g][a][b]][c] == t[d][t[g][c][b]][a]
                   for a in R for b in R for c in R for g in M for d in M)
    if law is Law.AG_STAR_STAR:
        return all(t[g][a][t[d][b][c]] == t[g][b][t[d][a][c]]
                   for a in R for b in R for c in R for g in M for d in M)
    if law is Law.ASSOCIATIVE:
        return all(t[d][t[g][a][b]][c] == t[g][a][t[d][b][c]]
                   for a in R for b in R for c in R for g in M for d in M)
    if law is Law.COMMUTATIVE:
        return all(t[g][a][b] == t[g][b][a] for a in R for b in R for g in M)
    if law is Law.MEDIAL:
        return all(t[gb][t[ga][x][y]][t[gg][l][mm]] == t[gb][t[ga][x][l]][t[gg][y][mm]]
                   for x in R for y in R for l in R for mm in R
                   for ga in M for gb in M for gg in M)
    return all(t[gb][t[ga][x][y]][t[gg][l][mm]] == t[gb][t[ga][mm][l]][t[gg][y][x]]
               for x in R for y in R for l in R for mm in R
               for ga in M for gb in M for gg in M)


@settings(max_examples=60, deadline=None)
@given(structures(max_order=3, max_gammas=2))
def test_check_law_agrees_with_oracle(G):
    for law in Law:
        assert gl.check_law(G, law).holds == _oracle_law_holds(G, law)


@settings(max_examples=80, deadline=None)
@given(structures())
def test_law_witnesses_reverify(G):
    for law in Law:
        v = gl.check_law(G, law)
        if not v.holds:
            lhs, rhs = gl.law_sides(G, law, v.witness)
            assert lhs != rhs


# ---------------------------------------------------------------------------
# identities

def test_identities(gamma5, dot5, singleton):
    assert gl.identities(gamma5, "left") == set()
    assert gl.identities(gamma5, "right") == set()
    assert gl.identities(dot5, "left") == {dot5.element_index("4")}
    assert gl.identities(dot5, "right") == set()
    assert gl.identities(singleton, "left") == {0}
    with pytest.raises(ValueError):
        gl.identities(gamma5, "middle")


# ---------------------------------------------------------------------------
# subset products

def test_subset_product_fixture_values(gamma5):
    lbl = gamma5.subset_of_labels
    assert gl.subset_product(gamma5, lbl(["4"]), lbl(["5"])) == lbl(["1", "2"])
    assert gl.subset_product(gamma5, gamma5.carrier, lbl(["1", "2", "3"])) == lbl(["1", "2"])
    assert gl.subset_product(gamma5, 0, lbl(["3"])) == 0
    assert gl.subset_product(gamma5, lbl(["3"]), 0) == 0


def test_subset_product_width_check(gamma5):
    with pytest.raises(ValueError):
        gl.subset_product(gamma5, 1 << 5, 1)
    with pytest.raises(ValueError):
        gl.subset_product(gamma5, 1, -1)


@settings(max_examples=80, deadline=None)
@given(structure_with_subsets(count=3))
def test_subset_product_matches_set_oracle(data):
    G, A, B, _ = data
    got = gl.subset_product(G, A, B)
    assert oracle_members(got) == oracle_product(G, oracle_members(A), oracle_members(B))


@settings(max_examples=80, deadline=None)
@given(structure_with_subsets(count=3))
def test_subset_product_monotone_and_distributes(data):
    G, A, B, C = data
    prod = gl.subset_product
    # monotone: A subset of A|C
    assert prod(G, A, B) & ~prod(G, A | C, B) == 0
    assert prod(G, B, A) & ~prod(G, B, A | C) == 0
    # distributes over union in each argument
    assert prod(G, A | C, B) == prod(G, A, B) | prod(G, C, B)
    assert prod(G, B, A | C) == prod(G, B, A) | prod(G, B, C)


# ---------------------------------------------------------------------------
# regularity

def test_regular_witness_fixture_values(gamma5, singleton):
    assert gl.regular_witness(singleton, 0) == gl.RegularityWitness(0, 0, 0)
    # element 1 of the bundle: first witness in (x, beta, gamma) scan order
    assert gl.regular_witness(gamma5, 0) == gl.RegularityWitness(0, 0, 0)
    assert gl.regular_witness(gamma5, 1) == gl.RegularityWitness(0, 0, 1)
    for idx in (2, 3, 4):  # labels 3, 4, 5 have no witness
        assert gl.regular_witness(gamma5, idx) is None


def test_is_regular(gamma5, dot5, singleton):
    assert not gl.is_regular(gamma5)
    assert gl.is_regular(dot5)
    assert gl.is_regular(singleton)


@settings(max_examples=80, deadline=None)
@given(structures())
def test_regular_witness_satisfies_equation(G):
    for a in range(G.order):
        w = gl.regular_witness(G, a)
        if w is not None:
            assert G.apply(G.apply(a, w.beta, w.x), w.gamma, a) == a
        else:
            assert all(G.tables[g][G.tables[b][a][x]][a] != a
                       for x in range(G.order)
                       for b in range(G.gamma_count)
                       for g in range(G.gamma_count))


# ---------------------------------------------------------------------------
# law consequences on enumerated structures (small, fast version)

def test_left_invertive_implies_medial_small():
    for (n, m) in [(1, 1), (2, 1), (2, 2)]:
        spec = gl.SearchSpec(order=n, gammas=m,
                             filters=frozenset({gl.Filter.LEFT_INVERTIVE}))
        for G in gl.enumerate_structures(spec):
            assert gl.check_law(G, Law.MEDIAL).holds


def test_left_invertive_agss_implies_paramedial_small():
    for (n, m) in [(1, 1), (2, 1), (2, 2)]:
        spec = gl.SearchSpec(order=n, gammas=m,
                             filters=frozenset({gl.Filter.LEFT_INVERTIVE,
                                                gl.Filter.AG_STAR_STAR}))
        for G in gl.enumerate_structures(spec):
            assert gl.check_law(G, Law.PARAMEDIAL).holds


# ---------------------------------------------------------------------------
# mask helpers

def test_mask_helpers():
    assert subset_of([0, 2, 3]) == 0b1101
    assert members(0b1101) == (0, 2, 3)
    assert members(0) == ()
