//! Independent reference computations.
//!
//! Products are described by an adjacency predicate over labelled vertices, written straight
//! from the product definitions; indices are brute-force sums over all vertex pairs in `i128`.
//! Nothing here goes through `products` or `indices`.

#![allow(dead_code)]

use corona_indices::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    /// vertex of G1
    A(usize),
    /// vertex `v` of copy `i` of G2
    B(usize, usize),
    /// subdivision vertex on edge `e` of G1
    S(usize),
}

pub struct Oracle {
    pub labels: Vec<Label>,
    pub degrees: Vec<i128>,
    pub edges: Vec<(usize, usize)>,
}

fn adjacent_in(g: &Graph, u: usize, v: usize) -> bool {
    g.edges()
        .iter()
        .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
}

impl Oracle {
    fn from_predicate(labels: Vec<Label>, adjacent: impl Fn(Label, Label) -> bool) -> Self {
        let n = labels.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(labels[i], labels[j]) || adjacent(labels[j], labels[i]) {
                    edges.push((i, j));
                }
            }
        }
        let mut degrees = vec![0i128; n];
        for &(i, j) in &edges {
            degrees[i] += 1;
            degrees[j] += 1;
        }
        Oracle {
            labels,
            degrees,
            edges,
        }
    }

    /// `G1 ⊕ G2`: G1 edges, G2 edges inside each copy, every copy vertex to every G1 vertex.
    pub fn corona_join(g1: &Graph, g2: &Graph) -> Self {
        let labels = (0..g1.order())
            .map(Label::A)
            .chain((0..g1.order()).flat_map(|i| (0..g2.order()).map(move |v| Label::B(i, v))))
            .collect();
        Self::from_predicate(labels, |x, y| match (x, y) {
            (Label::A(u), Label::A(v)) => adjacent_in(g1, u, v),
            (Label::B(i, u), Label::B(j, v)) => i == j && adjacent_in(g2, u, v),
            (Label::A(_), Label::B(_, _)) => true,
            _ => false,
        })
    }

    /// `G1 ∔ G2`: each G1 edge e = uv becomes u - s_e - v, s_e joined to all of G2.
    pub fn sdvj(g1: &Graph, g2: &Graph) -> Self {
        let labels = (0..g1.order())
            .map(Label::A)
            .chain((0..g1.size()).map(Label::S))
            .chain((0..g2.order()).map(|v| Label::B(0, v)))
            .collect();
        Self::from_predicate(labels, |x, y| match (x, y) {
            (Label::A(u), Label::S(e)) => {
                let (a, b) = g1.edges()[e];
                u == a || u == b
            }
            (Label::S(_), Label::B(_, _)) => true,
            (Label::B(_, u), Label::B(_, v)) => adjacent_in(g2, u, v),
            _ => false,
        })
    }

    pub fn of_graph(g: &Graph) -> Self {
        let labels = (0..g.order()).map(Label::A).collect();
        Self::from_predicate(labels, |x, y| match (x, y) {
            (Label::A(u), Label::A(v)) => adjacent_in(g, u, v),
            _ => false,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    fn edge_sum(&self, f: impl Fn(i128, i128) -> i128) -> i128 {
        self.edges
            .iter()
            .map(|&(i, j)| f(self.degrees[i], self.degrees[j]))
            .sum()
    }

    pub fn m1(&self) -> i128 {
        self.degrees.iter().map(|d| d * d).sum()
    }

    pub fn m2(&self) -> i128 {
        self.edge_sum(|a, b| a * b)
    }

    pub fn f(&self) -> i128 {
        self.degrees.iter().map(|d| d * d * d).sum()
    }

    pub fn hm1(&self) -> i128 {
        self.edge_sum(|a, b| (a + b) * (a + b))
    }

    pub fn rm2(&self) -> i128 {
        self.edge_sum(|a, b| (a - 1) * (b - 1))
    }
}

/// Named small factors used across the integration tests.
pub fn small_catalog() -> Vec<(String, Graph)> {
    use corona_indices::graph::{complete, cycle, path, star};
    let mut out = Vec::new();
    for l in 1..=8 {
        out.push((format!("P{l}"), path(l).unwrap()));
    }
    for m in 3..=8 {
        out.push((format!("C{m}"), cycle(m).unwrap()));
    }
    for n in 1..=6 {
        out.push((format!("K{n}"), complete(n).unwrap()));
    }
    for k in 1..=6 {
        out.push((format!("S{k}"), star(k).unwrap()));
    }
    out
}
