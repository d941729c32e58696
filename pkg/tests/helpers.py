"""Shared instance builders for the test suite."""

from fuzzmin import FeatureSet, FuzzyGraph, Interpretation

# baseline feature configuration used by most golden tests
PSI = ["baaz", "comp", "union", "star", "test", "universal"]

PHI_PSI = FeatureSet.from_names(PSI)
PHI_O = FeatureSet.from_names(PSI + ["nominal"])
PHI_I = FeatureSet.from_names(PSI + ["inverse"])
PHI_IO = FeatureSet.from_names(PSI + ["inverse", "nominal"])


def chain_interp(algebra) -> Interpretation:
    """Three elements, one concept, three role instances; the evaluation
    golden-table instance."""
    return Interpretation(
        algebra,
        ["a", "b", "c"],
        concepts={"A": {"a": "1", "b": "0.6", "c": "0.9"}},
        roles={"r": [("a", "b", "0.8"), ("a", "c", "0.5"), ("b", "c", "0.7")]},
    )


def collapse_interp(algebra) -> Interpretation:
    """Three elements where two are bisimilar (v and w collapse)."""
    return Interpretation(
        algebra,
        ["u", "v", "w"],
        individuals={"a": "u"},
        concepts={"A": {"u": "1", "v": "0.5", "w": "0.5"}},
        roles={"r": [("u", "v", "0.7"), ("u", "w", "0.9"), ("v", "v", "0.6"),
                     ("v", "w", "0.8"), ("w", "v", "0.8")]},
    )


def collapsed_twin(algebra) -> Interpretation:
    """The two-element interpretation collapse_interp minimizes to."""
    return Interpretation(
        algebra,
        ["u'", "v'"],
        individuals={"a": "u'"},
        concepts={"A": {"u'": "1", "v'": "0.5"}},
        roles={"r": [("u'", "v'", "0.9"), ("v'", "v'", "0.8")]},
    )


def two_component_interp(algebra) -> Interpretation:
    """Eight elements in two components; one named individual o -> a.

    Minimizes to 2, 3 or 7 elements depending on the enabled features.
    """
    return Interpretation(
        algebra,
        ["a", "b", "c", "d", "e", "a2", "b2", "b3"],
        individuals={"o": "a"},
        roles={"r": [("a", "b", "0.8"), ("a2", "b2", "0.8"), ("a2", "b3", "0.8"),
                     ("b", "c", "0.7"), ("b", "d", "1"), ("c", "e", "1"),
                     ("d", "e", "1"), ("e", "d", "1"),
                     ("b2", "b2", "1"), ("b3", "b3", "1")]},
    )


def collapse_graph(algebra) -> FuzzyGraph:
    """collapse_interp as a labeled graph (one vertex label, one edge label)."""
    return FuzzyGraph(
        algebra,
        ["u", "v", "w"],
        {"u": {"A": "1"}, "v": {"A": "0.5"}, "w": {"A": "0.5"}},
        [("u", "r", "v", "0.7"), ("u", "r", "w", "0.9"), ("v", "r", "v", "0.6"),
         ("v", "r", "w", "0.8"), ("w", "r", "v", "0.8")],
    )


def blocks_by_names(partition, names) -> set[frozenset[str]]:
    return {frozenset(names[v] for v in block) for block in partition.blocks}
