"""Degree-bounded spans of two-sided ideals in the weighted free algebra.

The span at bound m is generated by all products u*r*w of the given
relations r by words u, w, with total (top) degree equal to m in graded
mode or at most m in filtered mode.  Both drivers build the span
incrementally: left letter-multiples of previously inserted echelon rows
plus right word-multiples of the relations reach every product exactly
once, so per-step ranks are exact ranks of the corresponding spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..ncalg import WeightSystem, words_of_degree, words_up_to

__all__ = ["FilteredSpan", "GradedSpan", "filtered_span", "graded_span"]


def _relation_items(relation, ws: WeightSystem):
    """(top degree, [(word, Fraction coeff)]) sorted for determinism."""
    terms = sorted(relation.terms.items())
    top = max(ws.degree(w) for w, _ in terms)
    return top, terms


@dataclass
class FilteredSpan:
    ws: WeightSystem
    N: int
    words: list
    index: dict
    col_degree: list
    words_le: list  # number of words of degree <= m, m = 0..N
    ranks: list  # rank of the span at bound m, m = 0..N
    engine: object
    field: object
    step_rows: list  # (start, end) row range inserted at each step


@dataclass
class GradedSpan:
    ws: WeightSystem
    N: int
    bases: dict  # m -> word list
    indexes: dict  # m -> word -> col
    ranks: list  # rank of the degree-m component, m = 0..N
    engines: dict  # m -> engine
    field: object


def filtered_span(relations, ws: WeightSystem, N: int, engine_factory) -> FilteredSpan:
    words = words_up_to(ws, N)
    index = {w: i for i, w in enumerate(words)}
    col_degree = [ws.degree(w) for w in words]
    engine, field = engine_factory(len(words))

    rels = []
    for r in relations:
        top, terms = _relation_items(r, ws)
        if top > N:
            continue  # cannot contribute below the bound
        rels.append((top, [(w, field.coerce(c)) for w, c in terms]))

    maps = []
    for v in range(3):
        wv = ws.weights[v]
        maps.append(
            engine.register_colmap(
                [index[(v,) + w] if col_degree[i] + wv <= N else -1 for i, w in enumerate(words)]
            )
        )

    ranks = []
    words_le = []
    step_rows = []
    count = 0
    for m in range(N + 1):
        count += len(words_of_degree(ws, m))
        words_le.append(count)
        start = engine.rank
        for top, terms in rels:
            if top == m:
                engine.add_row({index[w]: c for w, c in terms})
            elif top < m:
                for w in words_of_degree(ws, m - top):
                    engine.add_row({index[u + w]: c for u, c in terms})
        for v in range(3):
            src = m - ws.weights[v]
            if src >= 0:
                s, e = step_rows[src]
                engine.add_product_rows(engine, maps[v], s, e)
        step_rows.append((start, engine.rank))
        ranks.append(engine.rank)
    return FilteredSpan(ws, N, words, index, col_degree, words_le, ranks, engine, field, step_rows)


def graded_span(relations, ws: WeightSystem, N: int, engine_factory) -> GradedSpan:
    for r in relations:
        if not r.is_homogeneous(ws):
            raise ValueError("graded mode requires weighted-homogeneous relations")
    rels = []
    bases = {}
    indexes = {}
    engines = {}
    ranks = []
    field = None
    for r in relations:
        rels.append(_relation_items(r, ws))

    for m in range(N + 1):
        bases[m] = words_of_degree(ws, m)
        indexes[m] = {w: i for i, w in enumerate(bases[m])}
        engine, field = engine_factory(len(bases[m]))
        engines[m] = engine
        ix = indexes[m]
        for top, terms in rels:
            if top == m:
                engine.add_row({ix[w]: field.coerce(c) for w, c in terms})
            elif 0 <= top < m:
                cterms = [(w, field.coerce(c)) for w, c in terms]
                for w in words_of_degree(ws, m - top):
                    engine.add_row({ix[u + w]: c for u, c in cterms})
        for v in range(3):
            src = m - ws.weights[v]
            if src >= 0 and engines[src].rank:
                mp = engine.register_colmap([ix[(v,) + w] for w in bases[src]])
                engine.add_product_rows(engines[src], mp, 0, engines[src].rank)
        ranks.append(engine.rank)
    return GradedSpan(ws, N, bases, indexes, ranks, engines, field)
