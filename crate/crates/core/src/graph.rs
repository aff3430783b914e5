//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::rng::SplitMix64;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{u}, {v}}} has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{family} needs at least {min} vertices, got {got}")]
    TooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
}

/// Edge-list parse failure, tagged with the 1-based line it occurred on.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed header, expected \"n m\"")]
    MalformedHeader,
    #[error("malformed edge, expected \"u v\"")]
    MalformedEdge,
    #[error("endpoint {endpoint} is not below the vertex count {order}")]
    EndpointOutOfRange { endpoint: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
}

/// Immutable simple undirected graph.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically. That order is the
/// canonical edge order: edge index `i` always means `edges()[i]`. Degrees are computed once at
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an arbitrary edge list, normalising orientation and order.
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut normalised = Vec::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalised.push((u.min(v), u.max(v)));
        }
        normalised.sort_unstable();
        if let Some(w) = normalised.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_unchecked(order, normalised))
    }

    /// `edges` must already be normalised, sorted and duplicate free.
    pub(crate) fn from_sorted_unchecked(order: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < order));
        let mut degrees = vec![0; order];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Graph {
            order,
            edges,
            degrees,
        }
    }

    pub fn empty(order: usize) -> Self {
        Self::from_sorted_unchecked(order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence(self.degrees.clone())
    }

    pub(crate) fn degree_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Index of edge `{u, v}` in the canonical edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.order];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Provided as a query only; no construction in this crate requires connected inputs.
    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.order
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        assert_eq!(
            perm.len(),
            self.order,
            "permutation length must equal the order"
        );
        Graph::new(
            self.order,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }
}

/// Degrees indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

pub fn path(l: usize) -> Result<Graph, GraphError> {
    if l == 0 {
        return Err(GraphError::TooSmall {
            family: "path",
            min: 1,
            got: l,
        });
    }
    Ok(Graph::from_sorted_unchecked(
        l,
        (0..l - 1).map(|i| (i, i + 1)).collect(),
    ))
}

pub fn cycle(m: usize) -> Result<Graph, GraphError> {
    if m < 3 {
        return Err(GraphError::TooSmall {
            family: "cycle",
            min: 3,
            got: m,
        });
    }
    Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::TooSmall {
            family: "complete",
            min: 1,
            got: n,
        });
    }
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// `K_{1,k}` with the centre at vertex 0.
pub fn star(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::TooSmall {
            family: "star",
            min: 1,
            got: k,
        });
    }
    Ok(Graph::from_sorted_unchecked(
        k + 1,
        (1..=k).map(|leaf| (0, leaf)).collect(),
    ))
}

/// Erdős–Rényi `G(n, p)`.
///
/// Candidate pairs `(u, v)`, `u < v`, are visited in lexicographic order; each consumes one
/// uniform real `x` from [`SplitMix64`] seeded with `seed`, and the edge is kept iff `x < p`.
/// The result is therefore a pure function of `(n, p, seed)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidProbability(p));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_sorted_unchecked(n, edges))
}

/// Parses the edge-list text format: a header `n m`, then `m` lines `u v`.
/// Lines starting with `#` and blank lines are ignored.
pub fn read_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let (order, size) = parse_pair(header).ok_or(ParseError {
        line: header_line,
        kind: ParseErrorKind::MalformedHeader,
    })?;

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(size);
    let mut seen = std::collections::HashSet::with_capacity(size);
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        let err = |kind| ParseError { line, kind };
        let (u, v) = parse_pair(content).ok_or_else(|| err(ParseErrorKind::MalformedEdge))?;
        for endpoint in [u, v] {
            if endpoint >= order {
                return Err(err(ParseErrorKind::EndpointOutOfRange { endpoint, order }));
            }
        }
        if u == v {
            return Err(err(ParseErrorKind::SelfLoop(u)));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(err(ParseErrorKind::DuplicateEdge(key.0, key.1)));
        }
        if edges.len() == size {
            return Err(err(ParseErrorKind::EdgeCountMismatch {
                expected: size,
                found: size + 1,
            }));
        }
        edges.push(key);
    }
    if edges.len() != size {
        return Err(ParseError {
            line: last_line,
            kind: ParseErrorKind::EdgeCountMismatch {
                expected: size,
                found: edges.len(),
            },
        });
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unchecked(order, edges))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let a = fields.next()?.parse().ok()?;
    let b = fields.next()?.parse().ok()?;
    if fields.next().is_some() {
        return None;
    }
    Some((a, b))
}

/// Writes the edge-list text format, edges in canonical order.
pub fn write_edge_list(g: &Graph) -> String {
    use std::fmt::Write;
    let mut out = String::with_capacity(12 * (g.size() + 1));
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
