//! Graph products with per-vertex provenance.
//!
//! Every construction uses a fixed vertex layout so callers can address vertices by id:
//!
//! | product | layout |
//! |---|---|
//! | [`join`] | `G1` (ids `0..n1`), then `G2` |
//! | [`corona`], [`corona_join`] | `G1`, then copy `i` of `G2` at `n1 + i·n2 ..` |
//! | [`subdivision`] | originals, then one vertex per edge in canonical edge order |
//! | [`subdivision_vertex_join`] | `G1` originals, subdivision vertices, then `G2` |
//!
//! [`corona_join`] joins every vertex of every copy of `G2` to *all* of `G1`, unlike the
//! classical [`corona`] which joins copy `i` to vertex `i` only.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProvenanceTag {
    /// Vertex of the first factor, by its id there.
    Factor1(usize),
    /// Vertex `vertex` of copy `copy` of the second factor.
    Factor2Copy { copy: usize, vertex: usize },
    /// Vertex inserted on edge `edge` (canonical index) of the first factor.
    Subdivision(usize),
}

/// Tag of every product vertex, indexed by product vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexProvenance(pub Vec<ProvenanceTag>);

impl VertexProvenance {
    pub fn tag(&self, v: usize) -> ProvenanceTag {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, ProvenanceTag)> + '_ {
        self.0.iter().copied().enumerate()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Join,
    Corona,
    Subdivision,
    CoronaJoin,
    SubdivisionVertexJoin,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Join => "join",
            ProductKind::Corona => "corona",
            ProductKind::Subdivision => "subdivision",
            ProductKind::CoronaJoin => "corona-join",
            ProductKind::SubdivisionVertexJoin => "sdvj",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGraph {
    pub graph: Graph,
    pub provenance: VertexProvenance,
    pub kind: ProductKind,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("provenance tag {0:?} does not occur in this product")]
    InvalidTag(ProvenanceTag),
}

fn assemble(order: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(order, edges).expect("product constructions only emit simple edges")
}

fn factor1_tags(n1: usize) -> impl Iterator<Item = ProvenanceTag> {
    (0..n1).map(ProvenanceTag::Factor1)
}

fn copy_tags(copies: usize, n2: usize) -> impl Iterator<Item = ProvenanceTag> {
    (0..copies).flat_map(move |copy| {
        (0..n2).map(move |vertex| ProvenanceTag::Factor2Copy { copy, vertex })
    })
}

fn shifted(g: &Graph, offset: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges()
        .iter()
        .map(move |&(u, v)| (u + offset, v + offset))
}

/// `G1 + G2`: disjoint union plus every edge between the two vertex sets.
pub fn join(g1: &Graph, g2: &Graph) -> ProductGraph {
    let (n1, n2) = (g1.order(), g2.order());
    let mut edges: Vec<_> = g1.edges().to_vec();
    edges.extend(shifted(g2, n1));
    edges.extend((0..n1).flat_map(|u| (0..n2).map(move |v| (u, n1 + v))));
    ProductGraph {
        graph: assemble(n1 + n2, edges),
        provenance: VertexProvenance(factor1_tags(n1).chain(copy_tags(1, n2)).collect()),
        kind: ProductKind::Join,
    }
}

/// Classical corona `G1 ∘ G2`: copy `i` of `G2` is joined to vertex `i` of `G1`.
pub fn corona(g1: &Graph, g2: &Graph) -> ProductGraph {
    let (n1, n2) = (g1.order(), g2.order());
    let mut edges: Vec<_> = g1.edges().to_vec();
    for i in 0..n1 {
        let base = n1 + i * n2;
        edges.extend(shifted(g2, base));
        edges.extend((0..n2).map(|v| (i, base + v)));
    }
    ProductGraph {
        graph: assemble(n1 * (1 + n2), edges),
        provenance: VertexProvenance(factor1_tags(n1).chain(copy_tags(n1, n2)).collect()),
        kind: ProductKind::Corona,
    }
}

/// `S(G)`: each edge `e = {u, v}` is replaced by the path `u - (n + e) - v`.
pub fn subdivision(g: &Graph) -> ProductGraph {
    let n = g.order();
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(e, &(u, v))| [(u, n + e), (v, n + e)])
        .collect();
    ProductGraph {
        graph: assemble(n + g.size(), edges),
        provenance: VertexProvenance(
            factor1_tags(n)
                .chain((0..g.size()).map(ProvenanceTag::Subdivision))
                .collect(),
        ),
        kind: ProductKind::Subdivision,
    }
}

/// Corona join `G1 ⊕ G2`: `G1` plus `n1` copies of `G2`, each copy vertex joined to all of `G1`.
pub fn corona_join(g1: &Graph, g2: &Graph) -> ProductGraph {
    let (n1, n2) = (g1.order(), g2.order());
    let mut edges = Vec::with_capacity(g1.size() + n1 * g2.size() + n1 * n1 * n2);
    edges.extend_from_slice(g1.edges());
    for i in 0..n1 {
        let base = n1 + i * n2;
        edges.extend(shifted(g2, base));
        edges.extend((0..n1).flat_map(|u| (0..n2).map(move |v| (u, base + v))));
    }
    ProductGraph {
        graph: assemble(n1 + n1 * n2, edges),
        provenance: VertexProvenance(factor1_tags(n1).chain(copy_tags(n1, n2)).collect()),
        kind: ProductKind::CoronaJoin,
    }
}

/// Subdivision-vertex join `G1 ∔ G2`: `S(G1)` and one copy of `G2`, every subdivision vertex
/// joined to every vertex of `G2`.
pub fn subdivision_vertex_join(g1: &Graph, g2: &Graph) -> ProductGraph {
    let (n1, m1, n2) = (g1.order(), g1.size(), g2.order());
    let g2_base = n1 + m1;
    let mut edges = Vec::with_capacity(2 * m1 + g2.size() + m1 * n2);
    for (e, &(u, v)) in g1.edges().iter().enumerate() {
        edges.push((u, n1 + e));
        edges.push((v, n1 + e));
        edges.extend((0..n2).map(|w| (n1 + e, g2_base + w)));
    }
    edges.extend(shifted(g2, g2_base));
    ProductGraph {
        graph: assemble(g2_base + n2, edges),
        provenance: VertexProvenance(
            factor1_tags(n1)
                .chain((0..m1).map(ProvenanceTag::Subdivision))
                .chain(copy_tags(1, n2))
                .collect(),
        ),
        kind: ProductKind::SubdivisionVertexJoin,
    }
}

/// Degree of a corona-join vertex from the factors alone:
/// `d_G1(v) + n1·n2` on the `G1` side, `d_G2(v) + n1` on every copy.
pub fn predicted_degree_corona_join(
    tag: ProvenanceTag,
    g1: &Graph,
    g2: &Graph,
) -> Result<usize, ProductError> {
    let (n1, n2) = (g1.order(), g2.order());
    match tag {
        ProvenanceTag::Factor1(v) if v < n1 => Ok(g1.degree(v) + n1 * n2),
        ProvenanceTag::Factor2Copy { copy, vertex } if copy < n1 && vertex < n2 => {
            Ok(g2.degree(vertex) + n1)
        }
        _ => Err(ProductError::InvalidTag(tag)),
    }
}

/// Degree of a subdivision-vertex-join vertex from the factors alone:
/// `d_G1(v)` for originals, `2 + n2` for subdivision vertices, `d_G2(v) + m1` for `G2`.
pub fn predicted_degree_sdvj(
    tag: ProvenanceTag,
    g1: &Graph,
    g2: &Graph,
) -> Result<usize, ProductError> {
    match tag {
        ProvenanceTag::Factor1(v) if v < g1.order() => Ok(g1.degree(v)),
        ProvenanceTag::Subdivision(e) if e < g1.size() => Ok(2 + g2.order()),
        ProvenanceTag::Factor2Copy { copy: 0, vertex } if vertex < g2.order() => {
            Ok(g2.degree(vertex) + g1.size())
        }
        _ => Err(ProductError::InvalidTag(tag)),
    }
}
